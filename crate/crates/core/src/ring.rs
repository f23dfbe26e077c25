//! Weighted polynomial rings over the rationals: gradings, monomials, polynomials.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::order::grevlex;

pub type Rational = num_rational::BigRational;

pub(crate) fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Variable names and positive weights of `S = Q[x_1, ..., x_n]`, `deg x_i = a_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradingSpec {
    names: Vec<String>,
    weights: Vec<u32>,
}

/// Shared handle to a grading; every polynomial carries one.
pub type Ring = Arc<GradingSpec>;

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl GradingSpec {
    pub fn new<S: AsRef<str>>(names: &[S], weights: &[u32]) -> Result<Ring> {
        Self::from_parts(
            names.iter().map(|s| s.as_ref().to_string()).collect(),
            weights.to_vec(),
        )
    }

    pub fn from_parts(names: Vec<String>, weights: Vec<u32>) -> Result<Ring> {
        if names.len() != weights.len() {
            return Err(Error::WeightCount {
                names: names.len(),
                weights: weights.len(),
            });
        }
        if names.is_empty() {
            return Err(Error::InvalidArgument(
                "a ring needs at least one variable".into(),
            ));
        }
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::InvalidVariableName(name.clone()));
            }
            if names[..i].contains(name) {
                return Err(Error::DuplicateVariable(name.clone()));
            }
            if weights[i] == 0 {
                return Err(Error::NonPositiveWeight { name: name.clone() });
            }
        }
        Ok(Arc::new(GradingSpec { names, weights }))
    }

    /// All weights equal to one.
    pub fn standard<S: AsRef<str>>(names: &[S]) -> Ring {
        let weights = alloc::vec![1; names.len()];
        Self::new(names, &weights).expect("standard grading with valid names")
    }

    /// `x1, ..., xn` with unit weights.
    pub fn indexed(n: usize) -> Ring {
        let names: Vec<String> = (1..=n).map(|i| alloc::format!("x{i}")).collect();
        Self::standard(&names)
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn max_weight(&self) -> u32 {
        self.weights.iter().copied().max().unwrap_or(1)
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Same grading with one extra variable in front (used for elimination tricks).
    pub(crate) fn with_leading_variable(&self, weight: u32) -> Ring {
        let mut name = String::from("_t");
        while self.names.contains(&name) {
            name.push('_');
        }
        let mut names = alloc::vec![name];
        names.extend(self.names.iter().cloned());
        let mut weights = alloc::vec![weight];
        weights.extend(self.weights.iter().copied());
        Arc::new(GradingSpec { names, weights })
    }
}

pub(crate) fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Exponent vector `x^e`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[u32; 6]>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(smallvec::smallvec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut m = Self::one(n);
        m.0[i] = 1;
        m
    }

    pub fn from_exponents(e: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(e))
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self, weights: &[u32]) -> u32 {
        self.0.iter().zip(weights).map(|(&e, &w)| e * w).sum()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] > 0).collect()
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// Panics on exponent overflow.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(
            self.0
                .iter()
                .map(|a| a.checked_mul(k).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a - b)
                .collect(),
        ))
    }

    /// Exponentwise `max(self - other, 0)`.
    pub fn saturating_div(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0
            .iter()
            .zip(other.0.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// All monomials of weighted degree `d`, in ascending lex order of exponent vectors.
    pub fn all_of_degree(weights: &[u32], d: u32) -> Vec<Monomial> {
        fn rec(weights: &[u32], i: usize, left: u32, cur: &mut [u32], out: &mut Vec<Monomial>) {
            if i + 1 == weights.len() {
                if left % weights[i] == 0 {
                    cur[i] = left / weights[i];
                    out.push(Monomial::from_exponents(cur));
                }
                return;
            }
            for e in 0..=left / weights[i] {
                cur[i] = e;
                rec(weights, i + 1, left - e * weights[i], cur, out);
            }
            cur[i] = 0;
        }
        let mut out = Vec::new();
        if weights.is_empty() {
            if d == 0 {
                out.push(Monomial::one(0));
            }
            return out;
        }
        let mut cur = alloc::vec![0; weights.len()];
        rec(weights, 0, d, &mut cur, &mut out);
        out
    }

    pub(crate) fn exponents_mut(&mut self) -> &mut [u32] {
        &mut self.0
    }

    pub(crate) fn prepend(&self, e: u32) -> Monomial {
        let mut v: SmallVec<[u32; 6]> = SmallVec::with_capacity(self.0.len() + 1);
        v.push(e);
        v.extend_from_slice(&self.0);
        Monomial(v)
    }

    pub(crate) fn drop_first(&self) -> Monomial {
        Monomial(SmallVec::from_slice(&self.0[1..]))
    }

    pub fn display<'a>(&'a self, ring: &'a GradingSpec) -> impl fmt::Display + 'a {
        MonomialDisplay { m: self, ring }
    }
}

struct MonomialDisplay<'a> {
    m: &'a Monomial,
    ring: &'a GradingSpec,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(&self.ring.names[i])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Result of a weighted homogeneity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneityReport {
    pub is_homogeneous: bool,
    /// `None` for non-homogeneous input and for the zero polynomial.
    pub degree: Option<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

pub type Term = (Monomial, Rational);

/// Polynomial in canonical form: terms strictly descending in weighted grevlex,
/// no zero coefficients.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Ring, c: Rational) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.nvars(), i), Rational::one())
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Rational) -> Self {
        debug_assert_eq!(m.nvars(), ring.nvars());
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            alloc::vec![(m, c)]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Normalizes an arbitrary term list.
    pub fn from_terms(ring: &Ring, mut terms: Vec<Term>) -> Self {
        let w = ring.weights();
        terms.sort_by(|a, b| grevlex(&b.0, &a.0, w));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), ring.nvars());
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 += c,
                _ => {
                    if let Some(last) = out.last() {
                        if last.1.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if out.last().is_some_and(|t| t.1.is_zero()) {
            out.pop();
        }
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn parse(ring: &Ring, s: &str) -> Result<Self> {
        crate::ring::parse::parse_polynomial(ring, s)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        !self.is_zero() && self.is_constant()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.first().map(|t| &t.1)
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), a.clone()))
                .collect(),
        }
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.combine(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.combine(other, true))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.product(other))
    }

    fn combine(&self, other: &Polynomial, negate: bool) -> Self {
        let w = self.ring.weights();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                Ordering::Less
            } else if j == b.len() {
                Ordering::Greater
            } else {
                grevlex(&a[i].0, &b[j].0, w)
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate {
                        -b[j].1.clone()
                    } else {
                        b[j].1.clone()
                    };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    fn product(&self, other: &Polynomial) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ring);
        }
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m, a) in &self.terms {
            for (n, b) in &other.terms {
                terms.push((m.mul(n), a * b));
            }
        }
        Self::from_terms(&self.ring, terms)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..k {
            acc = acc.product(self);
        }
        acc
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Result<Self> {
        let n = self.ring.nvars();
        if i >= n {
            return Err(Error::VariableIndex { index: i, nvars: n });
        }
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exponents()[i];
            if e == 0 {
                continue;
            }
            let mut d = m.clone();
            d.exponents_mut()[i] = e - 1;
            terms.push((d, c * rat(i64::from(e))));
        }
        Ok(Self::from_terms(&self.ring, terms))
    }

    pub fn weighted_degree(&self) -> HomogeneityReport {
        let w = self.ring.weights();
        let mut degrees = self.terms.iter().map(|(m, _)| m.degree(w));
        match degrees.next() {
            None => HomogeneityReport {
                is_homogeneous: true,
                degree: None,
            },
            Some(d) => {
                if degrees.all(|e| e == d) {
                    HomogeneityReport {
                        is_homogeneous: true,
                        degree: Some(d),
                    }
                } else {
                    HomogeneityReport {
                        is_homogeneous: false,
                        degree: None,
                    }
                }
            }
        }
    }

    /// Weighted degree of a nonzero homogeneous polynomial, or an error naming the
    /// first term that breaks homogeneity.
    pub fn homogeneous_degree(&self) -> Result<Option<u32>> {
        let w = self.ring.weights();
        let Some((first, _)) = self.terms.first() else {
            return Ok(None);
        };
        let d = first.degree(w);
        for (m, c) in &self.terms[1..] {
            let e = m.degree(w);
            if e != d {
                let term = Polynomial::monomial(&self.ring, m.clone(), c.clone()).to_string();
                return Err(Error::NotHomogeneous {
                    term,
                    found: e,
                    expected: d,
                });
            }
        }
        Ok(Some(d))
    }

    /// Checks `Σ a_i x_i ∂p/∂x_i = deg(p) · p` for homogeneous `p`.
    pub fn euler_check(&self) -> Result<bool> {
        let Some(d) = self.homogeneous_degree()? else {
            return Ok(true);
        };
        let mut lhs = Self::zero(&self.ring);
        for i in 0..self.ring.nvars() {
            let term = Self::var(&self.ring, i).product(&self.derivative(i)?);
            lhs = lhs.combine(&term.scale(&rat(i64::from(self.ring.weights()[i]))), false);
        }
        Ok(lhs == self.scale(&rat(i64::from(d))))
    }

    /// Exact quotient `self / divisor`, if the division leaves no remainder.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Option<Polynomial>> {
        self.check_ring(divisor)?;
        let Some((lm, lc)) = divisor.leading_term() else {
            return Err(Error::InvalidArgument(
                "division by the zero polynomial".into(),
            ));
        };
        let mut rest = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rest.leading_term() {
            let Some(q) = m.div(lm) else { return Ok(None) };
            let qc = c / lc;
            let step = Polynomial::monomial(&self.ring, q.clone(), qc.clone()).product(divisor);
            rest = rest.combine(&step, true);
            quotient.push((q, qc));
        }
        Ok(Some(Self::from_terms(&self.ring, quotient)))
    }

    /// Re-expresses the polynomial in another ring via an exponent map.
    pub(crate) fn map_monomials(
        &self,
        ring: &Ring,
        f: impl Fn(&Monomial) -> Monomial,
    ) -> Polynomial {
        Self::from_terms(
            ring,
            self.terms.iter().map(|(m, c)| (f(m), c.clone())).collect(),
        )
    }

    /// Highest monomial dividing every term.
    pub fn monomial_content(&self) -> Option<Monomial> {
        let mut it = self.terms.iter();
        let first = it.next()?.0.clone();
        Some(it.fold(first, |acc, (m, _)| acc.gcd(m)))
    }
}

/// Applies `op` after checking both operands share a ring.
pub fn poly_arith(p: &Polynomial, q: &Polynomial, op: ArithOp) -> Result<Polynomial> {
    match op {
        ArithOp::Add => p.try_add(q),
        ArithOp::Sub => p.try_sub(q),
        ArithOp::Mul => p.try_mul(q),
    }
}

// Operator impls panic on ring mismatch; use the `try_*` methods for fallible code paths.
impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("ring mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("ring mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("ring mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

pub(crate) fn fmt_rational(c: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if c.denom().is_one() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                fmt_rational(&abs, f)?;
            } else {
                if !abs.is_one() {
                    fmt_rational(&abs, f)?;
                    f.write_str("*")?;
                }
                write!(f, "{}", m.display(&self.ring))?;
            }
        }
        Ok(())
    }
}

pub mod parse;

#[cfg(test)]
mod tests {
    use super::*;

    fn ring2() -> Ring {
        GradingSpec::standard(&["x", "y"])
    }

    fn p(ring: &Ring, s: &str) -> Polynomial {
        Polynomial::parse(ring, s).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = ring2();
        let prod = poly_arith(&p(&r, "x + y"), &p(&r, "x - y"), ArithOp::Mul).unwrap();
        assert_eq!(prod, p(&r, "x^2 - y^2"));
    }

    #[test]
    fn zero_absorbs() {
        let r = ring2();
        assert!((&p(&r, "x^3 + 2*y") * &Polynomial::zero(&r)).is_zero());
    }

    #[test]
    fn expand_and_cancel() {
        let r = ring2();
        let square = p(&r, "x + y").pow(2);
        let diff = poly_arith(&p(&r, "x^2 + 2*x*y + y^2"), &square, ArithOp::Sub).unwrap();
        assert!(diff.is_zero());
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = ring2();
        let b = GradingSpec::standard(&["x", "z"]);
        assert_eq!(
            poly_arith(&p(&a, "x"), &p(&b, "x"), ArithOp::Add),
            Err(Error::RingMismatch)
        );
        // structurally equal rings are compatible
        let c = ring2();
        assert!(poly_arith(&p(&a, "x"), &p(&c, "x"), ArithOp::Add).is_ok());
    }

    #[test]
    fn power_rule() {
        let r = GradingSpec::standard(&["x", "y", "z"]);
        assert_eq!(p(&r, "x^2").derivative(0).unwrap(), p(&r, "2*x"));
        assert_eq!(p(&r, "x^2*y + z^3").derivative(1).unwrap(), p(&r, "x^2"));
        assert!(p(&r, "7/3").derivative(0).unwrap().is_zero());
        assert_eq!(
            p(&r, "x").derivative(3),
            Err(Error::VariableIndex { index: 3, nvars: 3 })
        );
    }

    #[test]
    fn homogeneity() {
        let r = ring2();
        let rep = p(&r, "x^2 + x*y").weighted_degree();
        assert_eq!(
            rep,
            HomogeneityReport {
                is_homogeneous: true,
                degree: Some(2)
            }
        );
        let weighted = GradingSpec::new(&["x", "y"], &[2, 1]).unwrap();
        assert_eq!(p(&weighted, "x + y^2").weighted_degree().degree, Some(2));
        assert!(!p(&r, "x + y^2").weighted_degree().is_homogeneous);
        let zero = Polynomial::zero(&r).weighted_degree();
        assert!(zero.is_homogeneous && zero.degree.is_none());
    }

    #[test]
    fn euler_relation() {
        let r = ring2();
        assert!(p(&r, "x^2*y").euler_check().unwrap());
        assert!(p(&r, "x^3 + y^3").euler_check().unwrap());
        assert!(Polynomial::zero(&r).euler_check().unwrap());
        let weighted = GradingSpec::new(&["x", "y"], &[2, 1]).unwrap();
        assert!(p(&weighted, "3*x^2 - x*y^2 + y^4").euler_check().unwrap());
        assert!(matches!(
            p(&r, "x + y^2").euler_check(),
            Err(Error::NotHomogeneous { .. })
        ));
    }

    #[test]
    fn exact_division() {
        let r = ring2();
        let q = p(&r, "x^3 - y^3").exact_div(&p(&r, "x - y")).unwrap();
        assert_eq!(q, Some(p(&r, "x^2 + x*y + y^2")));
        assert_eq!(p(&r, "x^2 + y").exact_div(&p(&r, "x")).unwrap(), None);
    }

    #[test]
    fn display_uses_the_grammar() {
        let r = GradingSpec::standard(&["x", "y", "z"]);
        let q = p(&r, "3/2*x^2*y - z^3 + 1 - x");
        assert_eq!(q.to_string(), "3/2*x^2*y - z^3 - x + 1");
        assert_eq!(p(&r, &q.to_string()), q);
    }
}
