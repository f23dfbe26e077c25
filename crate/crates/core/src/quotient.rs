//! The graded quotient `R = S/I` through standard monomials: per degree, the monomials
//! outside the leading-term ideal form a basis of `R_d`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cell::RefCell;

use crate::error::Result;
use crate::groebner::reduce_polynomial;
use crate::ideal::Ideal;
use crate::linalg::SparseVec;
use crate::order::MonomialOrder;
use crate::ring::{Monomial, Polynomial, Rational, Ring};

struct Strand {
    basis: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
}

pub struct GradedQuotient {
    ideal: Ideal,
    leads: Vec<Monomial>,
    strands: RefCell<BTreeMap<u32, alloc::rc::Rc<Strand>>>,
    normal_forms: RefCell<BTreeMap<Monomial, SparseVec>>,
}

impl GradedQuotient {
    pub fn new(ideal: &Ideal) -> Result<Self> {
        ideal.require_homogeneous()?;
        let leads = ideal
            .groebner_basis()
            .iter()
            .map(|g| g.leading_monomial().unwrap().clone())
            .collect();
        Ok(GradedQuotient {
            ideal: ideal.clone(),
            leads,
            strands: RefCell::new(BTreeMap::new()),
            normal_forms: RefCell::new(BTreeMap::new()),
        })
    }

    pub fn ring(&self) -> &Ring {
        self.ideal.ring()
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.leads.iter().any(|l| l.divides(m))
    }

    fn strand(&self, d: u32) -> alloc::rc::Rc<Strand> {
        if let Some(s) = self.strands.borrow().get(&d) {
            return s.clone();
        }
        let basis: Vec<Monomial> = Monomial::all_of_degree(self.ring().weights(), d)
            .into_iter()
            .filter(|m| self.is_standard(m))
            .collect();
        let index = basis
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let s = alloc::rc::Rc::new(Strand { basis, index });
        self.strands.borrow_mut().insert(d, s.clone());
        s
    }

    /// Standard monomials of degree `d`.
    pub fn basis(&self, d: u32) -> Vec<Monomial> {
        self.strand(d).basis.clone()
    }

    /// `dim_K R_d`.
    pub fn dim(&self, d: u32) -> usize {
        self.strand(d).basis.len()
    }

    /// Position of a standard monomial in [`GradedQuotient::basis`].
    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        let d = m.degree(self.ring().weights());
        self.strand(d).index.get(m).copied()
    }

    /// Coordinates of the image of `m` in the basis of `R_{deg m}`.
    pub fn reduce_monomial(&self, m: &Monomial) -> SparseVec {
        if let Some(i) = self.index_of(m) {
            return alloc::vec![(i, Rational::from_integer(1.into()))];
        }
        if let Some(v) = self.normal_forms.borrow().get(m) {
            return v.clone();
        }
        let ring = self.ring();
        let p = Polynomial::monomial(ring, m.clone(), Rational::from_integer(1.into()));
        let nf = reduce_polynomial(
            &p,
            self.ideal.groebner_basis(),
            &MonomialOrder::grevlex(ring),
        );
        let mut v: SparseVec = nf
            .terms()
            .iter()
            .map(|(t, c)| (self.index_of(t).unwrap(), c.clone()))
            .collect();
        v.sort_by_key(|e| e.0);
        self.normal_forms.borrow_mut().insert(m.clone(), v.clone());
        v
    }

    /// Coordinates of a homogeneous polynomial of degree `d`.
    pub fn coordinates(&self, p: &Polynomial) -> SparseVec {
        let mut acc: SparseVec = Vec::new();
        for (m, c) in p.terms() {
            acc = crate::linalg::axpy(&acc, &-c.clone(), &self.reduce_monomial(m));
        }
        acc
    }

    /// The polynomial with the given coordinates in degree `d`.
    pub fn polynomial(&self, d: u32, v: &[(usize, Rational)]) -> Polynomial {
        let s = self.strand(d);
        Polynomial::from_terms(
            self.ring(),
            v.iter()
                .map(|(i, c)| (s.basis[*i].clone(), c.clone()))
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::GradingSpec;

    #[test]
    fn hilbert_function() {
        let r = GradingSpec::standard(&["x", "y"]);
        let q = GradedQuotient::new(&Ideal::parse(&r, &["x^2", "x*y", "y^2"]).unwrap()).unwrap();
        assert_eq!(
            (0..4).map(|d| q.dim(d)).collect::<Vec<_>>(),
            alloc::vec![1, 2, 0, 0]
        );
        let q = GradedQuotient::new(&Ideal::parse(&r, &["x^2 - y^2"]).unwrap()).unwrap();
        assert_eq!(
            (0..5).map(|d| q.dim(d)).collect::<Vec<_>>(),
            alloc::vec![1, 2, 2, 2, 2]
        );
        // x^2 ≡ y^2.
        let m = Monomial::from_exponents(&[2, 0]);
        let v = q.reduce_monomial(&m);
        assert_eq!(q.polynomial(2, &v), Polynomial::parse(&r, "y^2").unwrap());
    }

    #[test]
    fn weighted_strands() {
        let r = GradingSpec::new(&["x", "y"], &[1, 2]).unwrap();
        let q = GradedQuotient::new(&Ideal::zero(&r)).unwrap();
        assert_eq!(
            (0..6).map(|d| q.dim(d)).collect::<Vec<_>>(),
            alloc::vec![1, 1, 2, 2, 3, 3]
        );
    }
}
