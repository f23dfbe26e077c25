//! Monomial ideals as antichains of exponent vectors.
//!
//! Every operation here has a Gröbner-basis counterpart in [`crate::ideal`]; the tests
//! cross-validate the two.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::order::grevlex;
use crate::ring::{same_ring, Monomial, Polynomial, Ring};

pub mod closure;
pub mod decomposition;
pub mod graph;
mod simplex;
mod transversal;

pub use closure::{integral_closure, ClosureGenerator, IntegralClosure};
pub use decomposition::{
    irreducible_decomposition, minimal_primary_components, PrimaryComponent, PrimaryDecomposition,
};
pub use graph::{odd_cycle_suite, squarefree_generated_ideal, Graph, OddCycleReport};

/// A monomial ideal given by its minimal generators.
#[derive(Clone)]
pub struct MonomialIdeal {
    ring: Ring,
    gens: Vec<Monomial>,
}

impl PartialEq for MonomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.gens == other.gens
    }
}

impl Eq for MonomialIdeal {}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal{self}")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", g.display(&self.ring))?;
        }
        if self.gens.is_empty() {
            f.write_str("0")?;
        }
        f.write_str(")")
    }
}

/// Degree first, then grevlex descending.
fn canonical_cmp(ring: &Ring, a: &Monomial, b: &Monomial) -> Ordering {
    let w = ring.weights();
    a.degree(w).cmp(&b.degree(w)).then_with(|| grevlex(b, a, w))
}

/// Drops every monomial divisible by another one, then sorts canonically.
pub(crate) fn minimalize(ring: &Ring, mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| {
        a.total_degree()
            .cmp(&b.total_degree())
            .then_with(|| a.cmp(b))
    });
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out.sort_by(|a, b| canonical_cmp(ring, a, b));
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialOp {
    Sum,
    Product,
    Intersect,
    Colon,
    /// Saturation by the product of the listed variables.
    SaturateVariables(Vec<usize>),
    /// `I^k`; the second operand is ignored.
    Power(usize),
}

/// Dispatches a binary operation.
pub fn monomial_ops(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    op: &MonomialOp,
) -> Result<MonomialIdeal> {
    if !same_ring(&i.ring, &j.ring) {
        return Err(Error::RingMismatch);
    }
    match op {
        MonomialOp::Sum => Ok(i.sum(j)),
        MonomialOp::Product => Ok(i.product(j)),
        MonomialOp::Intersect => Ok(i.intersect(j)),
        MonomialOp::Colon => i.colon(j),
        MonomialOp::SaturateVariables(vars) => i.saturate_variables(vars),
        MonomialOp::Power(k) => i.power(*k),
    }
}

/// Failing check `u·v / (x_i·x_j) ∉ I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialWitness {
    pub u: Monomial,
    pub v: Monomial,
    pub i: usize,
    pub j: usize,
    pub quotient: Monomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialGolodReport {
    pub verdict: bool,
    pub witness: Option<MonomialWitness>,
}

impl MonomialIdeal {
    pub fn new(ring: &Ring, gens: Vec<Monomial>) -> Result<Self> {
        for g in &gens {
            if g.nvars() != ring.nvars() {
                return Err(Error::RingMismatch);
            }
        }
        Ok(MonomialIdeal {
            ring: ring.clone(),
            gens: minimalize(ring, gens),
        })
    }

    fn from_minimal(ring: &Ring, gens: Vec<Monomial>) -> Self {
        MonomialIdeal {
            ring: ring.clone(),
            gens: minimalize(ring, gens),
        }
    }

    pub fn from_exponents(ring: &Ring, gens: &[&[u32]]) -> Result<Self> {
        Self::new(
            ring,
            gens.iter().map(|e| Monomial::from_exponents(e)).collect(),
        )
    }

    pub fn parse(ring: &Ring, gens: &[&str]) -> Result<Self> {
        Self::from_ideal(&Ideal::parse(ring, gens)?)
    }

    /// Succeeds when the ideal is monomial, i.e. its reduced Gröbner basis is.
    pub fn from_ideal(ideal: &Ideal) -> Result<Self> {
        let mut gens = Vec::new();
        for g in ideal.groebner_basis() {
            if !g.is_monomial() {
                return Err(Error::NotMonomial);
            }
            gens.push(g.leading_monomial().unwrap().clone());
        }
        Self::new(ideal.ring(), gens)
    }

    pub fn zero(ring: &Ring) -> Self {
        Self::from_minimal(ring, Vec::new())
    }

    pub fn unit(ring: &Ring) -> Self {
        Self::from_minimal(ring, alloc::vec![Monomial::one(ring.nvars())])
    }

    /// `(x_i : i ∈ vars)`.
    pub fn prime(ring: &Ring, vars: &[usize]) -> Result<Self> {
        let n = ring.nvars();
        for &i in vars {
            if i >= n {
                return Err(Error::VariableIndex { index: i, nvars: n });
            }
        }
        Ok(Self::from_minimal(
            ring,
            vars.iter().map(|&i| Monomial::var(n, i)).collect(),
        ))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn to_ideal(&self) -> Ideal {
        Ideal::from_monomials(&self.ring, &self.gens)
    }

    pub fn to_polynomials(&self) -> Vec<Polynomial> {
        self.to_ideal().generators().to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_one())
    }

    pub fn require_proper(&self) -> Result<()> {
        if self.is_unit() {
            Err(Error::ImproperIdeal)
        } else {
            Ok(())
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    pub fn contains_monomial(&self, u: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(u))
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains_monomial(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Self::from_minimal(&self.ring, gens)
    }

    pub fn product(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b));
            }
        }
        Self::from_minimal(&self.ring, gens)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        Self::from_minimal(&self.ring, gens)
    }

    /// `I : (u)`.
    pub fn colon_monomial(&self, u: &Monomial) -> MonomialIdeal {
        Self::from_minimal(
            &self.ring,
            self.gens.iter().map(|g| g.saturating_div(u)).collect(),
        )
    }

    /// `I : J = ∩_{v} I : (v)` over the generators `v` of `J`.
    pub fn colon(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if other.is_zero() {
            return Err(Error::ZeroColon);
        }
        let mut acc: Option<MonomialIdeal> = None;
        for v in &other.gens {
            let c = self.colon_monomial(v);
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersect(&c),
            });
        }
        Ok(acc.unwrap())
    }

    /// `I : (∏_{i ∈ vars} x_i)^∞`, which zeroes the listed exponents.
    pub fn saturate_variables(&self, vars: &[usize]) -> Result<MonomialIdeal> {
        let n = self.ring.nvars();
        let mut gens = self.gens.clone();
        for &i in vars {
            if i >= n {
                return Err(Error::VariableIndex { index: i, nvars: n });
            }
            for g in &mut gens {
                g.exponents_mut()[i] = 0;
            }
        }
        Ok(Self::from_minimal(&self.ring, gens))
    }

    pub fn power(&self, k: usize) -> Result<MonomialIdeal> {
        if k < 1 {
            return Err(Error::InvalidExponent { k, min: 1 });
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(self);
        }
        Ok(acc)
    }

    /// Minimal primes as sorted variable sets: the minimal transversals of the generator
    /// supports. Empty for the zero ideal's single prime `(0)`, none for the unit ideal.
    pub fn minimal_primes(&self) -> Vec<Vec<usize>> {
        if self.is_unit() {
            return Vec::new();
        }
        let sets: Vec<u64> = self
            .gens
            .iter()
            .map(|g| transversal::mask(&g.support()))
            .collect();
        transversal::minimal_transversals(&sets)
            .into_iter()
            .map(transversal::members)
            .collect()
    }

    /// `I^(k) = ∩_P P^k` over the minimal primes of a squarefree `I`.
    pub fn squarefree_symbolic_power(&self, k: usize) -> Result<MonomialIdeal> {
        if k < 1 {
            return Err(Error::InvalidExponent { k, min: 1 });
        }
        if !self.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        if self.is_unit() || self.is_zero() {
            return Ok(self.clone());
        }
        let mut acc: Option<MonomialIdeal> = None;
        for p in self.minimal_primes() {
            let pk = MonomialIdeal::prime(&self.ring, &p)?.power(k)?;
            acc = Some(match acc {
                None => pk,
                Some(a) => a.intersect(&pk),
            });
        }
        Ok(acc.unwrap())
    }

    /// Checks `u·v/(x_i·x_j) ∈ I` over all minimal generators `u, v` (with `u = v`
    /// allowed) and all `x_i | u`, `x_j | v`.
    pub fn strongly_golod(&self) -> Result<MonomialGolodReport> {
        self.require_proper()?;
        for (a, u) in self.gens.iter().enumerate() {
            for v in &self.gens[a..] {
                let uv = u.mul(v);
                for i in u.support() {
                    for j in v.support() {
                        let mut q = uv.clone();
                        q.exponents_mut()[i] -= 1;
                        q.exponents_mut()[j] -= 1;
                        if !self.contains_monomial(&q) {
                            let witness = MonomialWitness {
                                u: u.clone(),
                                v: v.clone(),
                                i,
                                j,
                                quotient: q,
                            };
                            return Ok(MonomialGolodReport {
                                verdict: false,
                                witness: Some(witness),
                            });
                        }
                    }
                }
            }
        }
        Ok(MonomialGolodReport {
            verdict: true,
            witness: None,
        })
    }

    /// `∂(I)`: generated by `g/x_i` for `x_i | g`.
    pub fn derivative_ideal(&self) -> Result<MonomialIdeal> {
        self.require_proper()?;
        let mut gens = Vec::new();
        for g in &self.gens {
            for i in g.support() {
                let mut d = g.clone();
                d.exponents_mut()[i] -= 1;
                gens.push(d);
            }
        }
        Ok(Self::from_minimal(&self.ring, gens))
    }
}

/// Standalone form of [`MonomialIdeal::contains_monomial`].
pub fn monomial_membership(u: &Monomial, ideal: &MonomialIdeal) -> Result<bool> {
    if u.nvars() != ideal.ring.nvars() {
        return Err(Error::RingMismatch);
    }
    Ok(ideal.contains_monomial(u))
}

pub fn strongly_golod_monomial(ideal: &MonomialIdeal) -> Result<MonomialGolodReport> {
    ideal.strongly_golod()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus;
    use crate::ring::GradingSpec;

    fn mon(r: &Ring, g: &[&str]) -> MonomialIdeal {
        MonomialIdeal::parse(r, g).unwrap()
    }

    fn m(r: &Ring, s: &str) -> Monomial {
        Polynomial::parse(r, s)
            .unwrap()
            .leading_monomial()
            .unwrap()
            .clone()
    }

    #[test]
    fn membership() {
        let r = GradingSpec::standard(&["x", "y", "z"]);
        assert!(monomial_membership(&m(&r, "x^2*y"), &mon(&r, &["x*y"])).unwrap());
        assert!(!monomial_membership(&m(&r, "z^2"), &mon(&r, &["x*z", "y*z"])).unwrap());
        assert!(!mon(&r, &["x", "y^2"]).contains_monomial(&Monomial::one(3)));
    }

    #[test]
    fn rejects_non_monomial() {
        let r = GradingSpec::standard(&["x", "y"]);
        assert!(matches!(
            MonomialIdeal::parse(&r, &["x + y"]),
            Err(Error::NotMonomial)
        ));
        // Monomial ideal given by a non-monomial generating set.
        assert_eq!(
            MonomialIdeal::parse(&r, &["x + y", "y"]).unwrap(),
            mon(&r, &["x", "y"])
        );
    }

    #[test]
    fn operations() {
        let r = GradingSpec::standard(&["x", "y"]);
        let x = mon(&r, &["x"]);
        let y = mon(&r, &["y"]);
        assert_eq!(
            monomial_ops(&x, &y, &MonomialOp::Intersect).unwrap(),
            mon(&r, &["x*y"])
        );
        assert_eq!(
            monomial_ops(&mon(&r, &["x*y"]), &x, &MonomialOp::Colon).unwrap(),
            y
        );
        let r3 = GradingSpec::indexed(3);
        let t = mon(&r3, &["x1*x2", "x1*x3", "x2*x3"]);
        let sq = monomial_ops(&t, &t, &MonomialOp::Power(2)).unwrap();
        assert_eq!(sq.generators().len(), 6);
        assert!(sq.contains_monomial(&m(&r3, "x1^2*x2*x3")));
        assert_eq!(sq.to_ideal(), calculus::power(&t.to_ideal(), 2).unwrap());
    }

    #[test]
    fn golod_examples() {
        let r = GradingSpec::standard(&["x", "y", "z"]);
        let rep = mon(&r, &["x*z", "y*z"]).strongly_golod().unwrap();
        assert!(!rep.verdict);
        assert_eq!(rep.witness.unwrap().quotient, m(&r, "z^2"));
        assert!(
            mon(&r, &["x^2", "x*y", "y^2"])
                .strongly_golod()
                .unwrap()
                .verdict
        );
        let i43 = squarefree_generated_ideal(4, 3).unwrap();
        assert!(i43.power(2).unwrap().strongly_golod().unwrap().verdict);
        assert!(!i43.strongly_golod().unwrap().verdict);
    }

    #[test]
    fn squarefree_symbolic() {
        let r = GradingSpec::indexed(5);
        let c5 = Graph::cycle(5).unwrap().vertex_cover_ideal(&r).unwrap();
        let s2 = c5.squarefree_symbolic_power(2).unwrap();
        let u = MonomialIdeal::new(&r, alloc::vec![Monomial::from_exponents(&[1; 5])]).unwrap();
        assert_eq!(s2, c5.power(2).unwrap().sum(&u));
        assert_eq!(c5.squarefree_symbolic_power(1).unwrap(), c5);
        let i43 = squarefree_generated_ideal(4, 3).unwrap();
        assert!(i43
            .squarefree_symbolic_power(2)
            .unwrap()
            .contains_monomial(&Monomial::from_exponents(&[1; 4])));
        let r2 = GradingSpec::standard(&["x", "y"]);
        assert_eq!(
            mon(&r2, &["x^2"]).squarefree_symbolic_power(2).unwrap_err(),
            Error::NotSquarefree
        );
    }

    #[test]
    fn minimal_primes_of_mixed_ideal() {
        let r = GradingSpec::standard(&["x", "y", "z"]);
        let mut p = mon(&r, &["x^2*z", "x*y*z", "y^2*z"]).minimal_primes();
        p.sort();
        assert_eq!(p, alloc::vec![alloc::vec![0, 1], alloc::vec![2]]);
    }
}
