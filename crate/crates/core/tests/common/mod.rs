#![allow(dead_code)]

use golod_core::linalg::{self, SparseVec};
use golod_core::{GradingSpec, Ideal, Monomial, Polynomial, Rational, Ring};
use proptest::prelude::*;
use std::collections::BTreeMap;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn ideal(r: &Ring, g: &[&str]) -> Ideal {
    Ideal::parse(r, g).unwrap()
}

/// Arbitrary polynomial with up to `terms` terms, exponents ≤ 3.
pub fn poly(ring: Ring, terms: usize) -> impl Strategy<Value = Polynomial> {
    let n = ring.nvars();
    prop::collection::vec((prop::collection::vec(0u32..=3, n), -5i64..=5), 0..=terms).prop_map(
        move |ts| {
            Polynomial::from_terms(
                &ring,
                ts.into_iter()
                    .map(|(e, c)| (Monomial::from_exponents(&e), rat(c)))
                    .collect(),
            )
        },
    )
}

/// Homogeneous polynomial of degree `d`, not necessarily nonzero.
pub fn homogeneous(ring: Ring, d: u32, terms: usize) -> impl Strategy<Value = Polynomial> {
    let monomials = Monomial::all_of_degree(ring.weights(), d);
    let len = monomials.len();
    prop::collection::vec((0..len, -3i64..=3), 1..=terms).prop_map(move |ts| {
        Polynomial::from_terms(
            &ring,
            ts.into_iter()
                .map(|(i, c)| (monomials[i].clone(), rat(c)))
                .collect(),
        )
    })
}

/// Homogeneous ideal with 1 to `gens` generators of degrees 1..=`max_deg`.
pub fn homogeneous_ideal(ring: Ring, gens: usize, max_deg: u32) -> impl Strategy<Value = Ideal> {
    prop::collection::vec(1..=max_deg, 1..=gens)
        .prop_flat_map(move |degs| {
            let r = ring.clone();
            degs.into_iter()
                .map(|d| homogeneous(r.clone(), d, 3))
                .collect::<Vec<_>>()
        })
        .prop_map(|ps| {
            let ring = ps[0].ring().clone();
            Ideal::new(&ring, ps).unwrap()
        })
}

/// Monomial ideal with up to `gens` generators, exponents ≤ `max_exp`.
pub fn monomial_ideal(
    ring: Ring,
    gens: usize,
    max_exp: u32,
) -> impl Strategy<Value = golod_core::monomial::MonomialIdeal> {
    let n = ring.nvars();
    prop::collection::vec(prop::collection::vec(0..=max_exp, n), 1..=gens).prop_map(move |es| {
        let ms = es
            .into_iter()
            .map(|e| Monomial::from_exponents(&e))
            .filter(|m| !m.is_one())
            .collect();
        golod_core::monomial::MonomialIdeal::new(&ring, ms).unwrap()
    })
}

pub fn ring2() -> Ring {
    GradingSpec::standard(&["x", "y"])
}

pub fn ring3() -> Ring {
    GradingSpec::standard(&["x", "y", "z"])
}

/// Coordinates of a homogeneous polynomial over the monomials of its degree.
pub fn coords(p: &Polynomial, index: &BTreeMap<Monomial, usize>) -> SparseVec {
    let mut v: SparseVec = p
        .terms()
        .iter()
        .map(|(m, c)| (index[m], c.clone()))
        .collect();
    v.sort_by_key(|e| e.0);
    v
}

/// Spanning set of `I_d` as coordinate vectors, from generators times monomials.
pub fn degree_part(i: &Ideal, d: u32, index: &BTreeMap<Monomial, usize>) -> Vec<SparseVec> {
    let w = i.ring().weights().to_vec();
    let mut out = Vec::new();
    for g in i.generators() {
        let Some(e) = g.homogeneous_degree().unwrap() else {
            continue;
        };
        if e > d {
            continue;
        }
        for m in Monomial::all_of_degree(&w, d - e) {
            out.push(coords(&g.mul_monomial(&m), index));
        }
    }
    out
}

pub fn from_coords(ring: &Ring, basis: &[Monomial], v: &SparseVec) -> Polynomial {
    Polynomial::from_terms(
        ring,
        v.iter()
            .map(|(i, c)| (basis[*i].clone(), c.clone()))
            .collect(),
    )
}

/// Basis of `(I ∩ J)_d` by degreewise linear algebra.
pub fn brute_intersection(i: &Ideal, j: &Ideal, d: u32) -> Vec<Polynomial> {
    let ring = i.ring();
    let basis = Monomial::all_of_degree(ring.weights(), d);
    let index: BTreeMap<_, _> = basis
        .iter()
        .enumerate()
        .map(|(k, m)| (m.clone(), k))
        .collect();
    let u = degree_part(i, d, &index);
    let w = degree_part(j, d, &index);
    let mut cols = u.clone();
    cols.extend(w);
    let (ker, _) = linalg::kernel(&cols);
    ker.iter()
        .map(|rel| {
            let part: SparseVec = rel.iter().filter(|(k, _)| *k < u.len()).cloned().collect();
            from_coords(ring, &basis, &linalg::apply(&u, &part))
        })
        .filter(|p| !p.is_zero())
        .collect()
}
