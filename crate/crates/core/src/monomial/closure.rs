//! Integral closure of monomial ideals through the Newton polyhedron.

use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::simplex::feasible_point;
use super::MonomialIdeal;
use crate::error::{Error, Result};
use crate::ring::{Monomial, Rational};

/// Largest `r` tried when certifying `u^r ∈ I^r`.
pub const WITNESS_POWER_CAP: u32 = 32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureGenerator {
    pub monomial: Monomial,
    /// Some `r` with `u^r ∈ I^r`, when one was found within the cap.
    pub witness_power: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralClosure {
    pub ideal: MonomialIdeal,
    pub generators: Vec<ClosureGenerator>,
}

/// Convex weights `λ` with `Σ λ_j v_j ≤ a`, if `a` lies in the Newton polyhedron.
fn newton_weights(gens: &[Monomial], a: &[u32]) -> Option<Vec<Rational>> {
    let n = a.len();
    let k = gens.len();
    let mut rows = Vec::with_capacity(n + 1);
    let mut rhs = Vec::with_capacity(n + 1);
    for i in 0..n {
        let mut row: Vec<Rational> = gens
            .iter()
            .map(|g| Rational::from_integer(g.exponents()[i].into()))
            .collect();
        row.extend((0..n).map(|s| {
            if s == i {
                Rational::one()
            } else {
                Rational::from_integer(0.into())
            }
        }));
        rows.push(row);
        rhs.push(Rational::from_integer(a[i].into()));
    }
    let mut sum_row: Vec<Rational> = alloc::vec![Rational::one(); k];
    sum_row.extend((0..n).map(|_| Rational::from_integer(0.into())));
    rows.push(sum_row);
    rhs.push(Rational::one());
    feasible_point(&rows, &rhs, k + n).map(|mut x| {
        x.truncate(k);
        x
    })
}

/// Whether `r` generators (with repetition) multiply to a divisor of `target`.
fn product_divides(gens: &[Monomial], start: usize, r: u32, target: &Monomial) -> bool {
    if r == 0 {
        return true;
    }
    gens[start..]
        .iter()
        .enumerate()
        .any(|(k, g)| match target.div(g) {
            Some(rest) => product_divides(gens, start + k, r - 1, &rest),
            None => false,
        })
}

fn witness_power(gens: &[Monomial], u: &Monomial, lambda: &[Rational]) -> Option<u32> {
    if gens.iter().any(|g| g.divides(u)) {
        return Some(1);
    }
    let r = lambda
        .iter()
        .fold(num_bigint::BigInt::one(), |acc, l| acc.lcm(l.denom()));
    if let Some(r) = r.to_u32().filter(|&r| r <= WITNESS_POWER_CAP) {
        let mut prod = Monomial::one(u.nvars());
        for (g, l) in gens.iter().zip(lambda) {
            let c = (l * Rational::from_integer(r.into()))
                .to_integer()
                .to_u32()?;
            prod = prod.mul(&g.pow(c));
        }
        if prod.divides(&u.pow(r)) {
            return Some(r);
        }
    }
    (2..=WITNESS_POWER_CAP).find(|&r| product_divides(gens, 0, r, &u.pow(r)))
}

/// All monomials in the Newton polyhedron of `I`. Candidates are the lattice points
/// below the componentwise maximum of the generators, visited by ascending degree.
pub fn integral_closure(ideal: &MonomialIdeal) -> Result<IntegralClosure> {
    ideal.require_proper()?;
    let ring = ideal.ring();
    let gens = ideal.generators();
    if gens.is_empty() {
        return Ok(IntegralClosure {
            ideal: ideal.clone(),
            generators: Vec::new(),
        });
    }
    let n = ring.nvars();
    let top: Vec<u32> = (0..n)
        .map(|i| gens.iter().map(|g| g.exponents()[i]).max().unwrap())
        .collect();
    let size = top
        .iter()
        .try_fold(1usize, |acc, &t| acc.checked_mul(t as usize + 1));
    let size = size
        .filter(|&s| s <= 1 << 22)
        .ok_or(Error::Overflow("integral closure search box"))?;
    let mut points: Vec<Monomial> = Vec::with_capacity(size);
    let mut cur = alloc::vec![0u32; n];
    'outer: loop {
        points.push(Monomial::from_exponents(&cur));
        for i in 0..n {
            if cur[i] < top[i] {
                cur[i] += 1;
                continue 'outer;
            }
            cur[i] = 0;
        }
        break;
    }
    points.sort_by(|a, b| {
        a.total_degree()
            .cmp(&b.total_degree())
            .then_with(|| b.cmp(a))
    });
    let min_degree = gens.iter().map(|g| g.total_degree()).min().unwrap();
    let mut accepted: Vec<ClosureGenerator> = Vec::new();
    for p in points {
        if p.total_degree() < min_degree || accepted.iter().any(|a| a.monomial.divides(&p)) {
            continue;
        }
        if let Some(lambda) = newton_weights(gens, p.exponents()) {
            let witness = witness_power(gens, &p, &lambda);
            accepted.push(ClosureGenerator {
                monomial: p,
                witness_power: witness,
            });
        }
    }
    let closure = MonomialIdeal::new(ring, accepted.iter().map(|a| a.monomial.clone()).collect())?;
    let generators = closure
        .generators()
        .iter()
        .map(|m| accepted.iter().find(|a| &a.monomial == m).unwrap().clone())
        .collect();
    Ok(IntegralClosure {
        ideal: closure,
        generators,
    })
}
