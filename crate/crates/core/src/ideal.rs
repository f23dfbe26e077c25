//! Ideals of `S` with a cached reduced Gröbner basis, and the decision procedures built on
//! it: membership, containment, equality, intersection, colon, saturation, syzygies.

use alloc::boxed::Box;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use once_cell::race::OnceBox;

use crate::error::{Error, Result};
use crate::groebner::{self, FreeModule};
use crate::order::MonomialOrder;
use crate::ring::{same_ring, Monomial, Polynomial, Rational, Ring};

/// Iteration cap for [`Ideal::saturate`].
pub const SATURATION_CAP: usize = 64;

pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
    homogeneous: bool,
    gb: OnceBox<Vec<Polynomial>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let gb = OnceBox::new();
        if let Some(b) = self.gb.get() {
            let _ = gb.set(Box::new(b.clone()));
        }
        Ideal {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            homogeneous: self.homogeneous,
            gb,
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal({self})")
    }
}

/// Prints the generators in the polynomial grammar, e.g. `(x^2, x*y)`.
impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        if self.generators.is_empty() {
            f.write_str("0")?;
        }
        f.write_str(")")
    }
}

/// Ideals compare equal when their reduced Gröbner bases coincide.
impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.groebner_basis() == other.groebner_basis()
    }
}

impl Eq for Ideal {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub remainder: Polynomial,
    pub is_member: bool,
}

#[derive(Clone, Debug)]
pub struct Saturation {
    pub ideal: Ideal,
    /// Number of colon steps that strictly enlarged the ideal.
    pub stabilization: usize,
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: &Ring, generators: Vec<Polynomial>) -> Result<Self> {
        let mut gens = Vec::with_capacity(generators.len());
        let mut homogeneous = true;
        for g in generators {
            if !same_ring(ring, g.ring()) {
                return Err(Error::RingMismatch);
            }
            if g.is_zero() {
                continue;
            }
            homogeneous &= g.weighted_degree().is_homogeneous;
            gens.push(g);
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators: gens,
            homogeneous,
            gb: OnceBox::new(),
        })
    }

    pub fn parse(ring: &Ring, gens: &[&str]) -> Result<Self> {
        let polys = gens
            .iter()
            .map(|s| Polynomial::parse(ring, s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, polys)
    }

    pub fn zero(ring: &Ring) -> Self {
        Self::new(ring, Vec::new()).unwrap()
    }

    pub fn unit(ring: &Ring) -> Self {
        Self::new(ring, alloc::vec![Polynomial::one(ring)]).unwrap()
    }

    /// The graded maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(ring: &Ring) -> Self {
        Self::new(
            ring,
            (0..ring.nvars())
                .map(|i| Polynomial::var(ring, i))
                .collect(),
        )
        .unwrap()
    }

    pub fn from_monomials(ring: &Ring, monomials: &[Monomial]) -> Self {
        let gens = monomials
            .iter()
            .map(|m| Polynomial::monomial(ring, m.clone(), Rational::from_integer(1.into())))
            .collect();
        Self::new(ring, gens).unwrap()
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    /// Errors with the offending term if some generator is not homogeneous.
    pub fn require_homogeneous(&self) -> Result<()> {
        for g in &self.generators {
            g.homogeneous_degree()?;
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.groebner_basis().first().is_some_and(|g| g.is_unit())
    }

    pub fn require_proper(&self) -> Result<()> {
        if self.is_unit() {
            Err(Error::ImproperIdeal)
        } else {
            Ok(())
        }
    }

    /// Reduced Gröbner basis under weighted grevlex, computed once.
    pub fn groebner_basis(&self) -> &[Polynomial] {
        self.gb.get_or_init(|| {
            Box::new(groebner::reduced_basis(
                &self.generators,
                &MonomialOrder::grevlex(&self.ring),
            ))
        })
    }

    /// Reduced Gröbner basis under an arbitrary order (not cached).
    pub fn reduced_groebner(&self, order: &MonomialOrder) -> Result<Vec<Polynomial>> {
        if !same_ring(&self.ring, &order.ring) {
            return Err(Error::RingMismatch);
        }
        if order.kind == crate::order::OrderKind::WeightedGrevlex {
            return Ok(self.groebner_basis().to_vec());
        }
        Ok(groebner::reduced_basis(&self.generators, order))
    }

    /// The same ideal with its generators replaced by its reduced Gröbner basis.
    pub fn with_basis_generators(&self) -> Self {
        let gb = self.groebner_basis().to_vec();
        let out = Self::new(&self.ring, gb.clone()).unwrap();
        let _ = out.gb.set(Box::new(gb));
        out
    }

    pub fn is_monomial(&self) -> bool {
        self.groebner_basis().iter().all(|g| g.is_monomial())
    }

    pub fn normal_form(&self, p: &Polynomial) -> Result<NormalForm> {
        if !same_ring(&self.ring, p.ring()) {
            return Err(Error::RingMismatch);
        }
        let remainder = groebner::reduce_polynomial(
            p,
            self.groebner_basis(),
            &MonomialOrder::grevlex(&self.ring),
        );
        Ok(NormalForm {
            is_member: remainder.is_zero(),
            remainder,
        })
    }

    pub fn contains_polynomial(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(p)?.is_member)
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Ideal) -> Result<bool> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        for g in &other.generators {
            if !self.normal_form(g)?.is_member {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn check(&self, other: &Ideal) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let mut gens: Vec<Polynomial> = Vec::new();
        for f in &self.generators {
            for g in &other.generators {
                let h = f * g;
                if !gens.contains(&h) {
                    gens.push(h);
                }
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// `I ∩ J` by eliminating `t` from `t·I + (1 − t)·J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let big = self.ring.with_leading_variable(1);
        let t = Polynomial::var(&big, 0);
        let one_minus_t = &Polynomial::one(&big) - &t;
        let lift = |p: &Polynomial| p.map_monomials(&big, |m| m.prepend(0));
        let mut gens = Vec::new();
        for f in &self.generators {
            gens.push(&t * &lift(f));
        }
        for g in &other.generators {
            gens.push(&one_minus_t * &lift(g));
        }
        let gb = groebner::reduced_basis(&gens, &MonomialOrder::elimination(&big, 1));
        let kept: Vec<Polynomial> = gb
            .iter()
            .filter(|p| p.terms().iter().all(|(m, _)| m.exponents()[0] == 0))
            .map(|p| p.map_monomials(&self.ring, |m| m.drop_first()))
            .collect();
        Ideal::new(&self.ring, kept)
    }

    /// `I : (f)`, computed from `I ∩ (f)` by exact division by `f`.
    pub fn colon_polynomial(&self, f: &Polynomial) -> Result<Ideal> {
        if f.is_zero() {
            return Err(Error::ZeroColon);
        }
        if f.is_unit() {
            return Ok(self.clone());
        }
        let principal = Ideal::new(&self.ring, alloc::vec![f.clone()])?;
        let meet = self.intersect(&principal)?;
        let mut gens = Vec::with_capacity(meet.generators.len());
        for g in &meet.generators {
            match g.exact_div(f)? {
                Some(q) => gens.push(q),
                None => {
                    return Err(Error::InvariantViolation(alloc::format!(
                        "{g} lies in ({f}) but is not divisible by it"
                    )))
                }
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// `I : J = ∩_f (I : f)` over the generators `f` of `J`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        if other.is_zero() {
            return Err(Error::ZeroColon);
        }
        let mut acc: Option<Ideal> = None;
        for f in &other.generators {
            let q = self.colon_polynomial(f)?;
            if q.is_unit() {
                continue;
            }
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Ideal::unit(&self.ring)))
    }

    /// `I : J^∞`, iterating `I ← I : J` until the reduced basis stops changing.
    pub fn saturate(&self, other: &Ideal) -> Result<Saturation> {
        self.check(other)?;
        if other.is_zero() {
            return Err(Error::ZeroColon);
        }
        let mut current = self.with_basis_generators();
        for step in 0..SATURATION_CAP {
            let next = current.colon(other)?.with_basis_generators();
            if next == current {
                return Ok(Saturation {
                    ideal: current,
                    stabilization: step,
                });
            }
            current = next;
        }
        Err(Error::SaturationCap {
            rounds: SATURATION_CAP,
        })
    }

    /// Generators of the syzygy module of the stored generators, as rows `s` with
    /// `Σ_j s_j g_j = 0`, minimalized.
    pub fn syzygies(&self) -> Result<Vec<Vec<Polynomial>>> {
        self.require_homogeneous()?;
        let module = FreeModule {
            ring: self.ring.clone(),
            shifts: alloc::vec![0],
        };
        let cols: Vec<Vec<Polynomial>> = self
            .generators
            .iter()
            .map(|g| alloc::vec![g.clone()])
            .collect();
        let syz = module.syzygies(&cols)?;
        let shifts = cols
            .iter()
            .map(|c| module.degree_of(c).map(|d| d.unwrap_or(0)))
            .collect::<Result<Vec<_>>>()?;
        FreeModule {
            ring: self.ring.clone(),
            shifts,
        }
        .minimal_generators(&syz)
    }

    /// Minimal homogeneous generators, sorted by degree then leading monomial.
    pub fn minimal_generators(&self) -> Result<Vec<Polynomial>> {
        self.require_homogeneous()?;
        let module = FreeModule {
            ring: self.ring.clone(),
            shifts: alloc::vec![0],
        };
        let mut gens: Vec<Polynomial> = self.generators.iter().map(|g| g.monic()).collect();
        let w = self.ring.weights().to_vec();
        gens.sort_by(|a, b| {
            let (la, lb) = (a.leading_monomial().unwrap(), b.leading_monomial().unwrap());
            la.degree(&w)
                .cmp(&lb.degree(&w))
                .then_with(|| crate::order::grevlex(la, lb, &w))
        });
        let cols: Vec<Vec<Polynomial>> = gens.into_iter().map(|g| alloc::vec![g]).collect();
        Ok(module
            .minimal_generators(&cols)?
            .into_iter()
            .map(|mut v| v.remove(0))
            .collect())
    }

    /// Human-readable generator list.
    pub fn generator_strings(&self) -> Vec<alloc::string::String> {
        self.generators.iter().map(|g| g.to_string()).collect()
    }
}
