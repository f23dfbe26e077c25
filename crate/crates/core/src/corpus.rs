//! A fixed, seeded test corpus of small homogeneous ideals, and a seeded generator of
//! random homogeneous ideals.

use alloc::string::String;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::calculus::power;
use crate::error::Result;
use crate::ideal::Ideal;
use crate::ring::{GradingSpec, Monomial, Polynomial, Rational, Ring};

/// Seed behind the random corpus entries.
pub const CORPUS_SEED: u64 = 20_240_611;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// A worked example of the theory.
    Example,
    /// Square (or power) of a small ideal.
    Power,
    /// Expected to fail the predicate; used as a negative control.
    Control,
    /// Square of a seeded random ideal.
    Random,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub provenance: Provenance,
    pub note: &'static str,
    pub ideal: Ideal,
}

impl CorpusEntry {
    pub fn is_monomial(&self) -> bool {
        self.ideal.generators().iter().all(|g| g.is_monomial())
    }
}

/// Random homogeneous polynomial of degree `d` with `terms` terms and coefficients in
/// `[-3, 3] \ {0}`.
pub fn random_homogeneous(ring: &Ring, d: u32, terms: usize, rng: &mut ChaCha8Rng) -> Polynomial {
    let monomials = Monomial::all_of_degree(ring.weights(), d);
    let mut out = Vec::new();
    for _ in 0..terms {
        let m = monomials[rng.gen_range(0..monomials.len())].clone();
        let mut c: i64 = rng.gen_range(1..=3);
        if rng.gen_bool(0.5) {
            c = -c;
        }
        out.push((m, Rational::from_integer(c.into())));
    }
    Polynomial::from_terms(ring, out)
}

/// Homogeneous ideal with one generator per entry of `degrees`, each with at most
/// `terms` terms. Zero generators are redrawn.
pub fn random_homogeneous_ideal(ring: &Ring, degrees: &[u32], terms: usize, seed: u64) -> Ideal {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gens = degrees
        .iter()
        .map(|&d| loop {
            let p = random_homogeneous(ring, d, terms, &mut rng);
            if !p.is_zero() {
                break p;
            }
        })
        .collect();
    Ideal::new(ring, gens).unwrap()
}

/// A seeded ideal `J` with `lower ⊆ J ⊆ upper`: `lower` plus random multiples of a random
/// nonempty subset of the generators of `upper` that are missing from `lower`. Each chosen
/// generator is multiplied by a random form of degree 0 or 1. Returns `lower` when
/// `upper ⊆ lower`.
pub fn random_between(lower: &Ideal, upper: &Ideal, seed: u64) -> Result<Ideal> {
    let ring = lower.ring();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut missing = Vec::new();
    for g in upper.generators() {
        if !lower.contains_polynomial(g)? {
            missing.push(g.clone());
        }
    }
    if missing.is_empty() {
        return Ok(lower.clone());
    }
    let mut extra = Vec::new();
    while extra.is_empty() {
        for g in &missing {
            if !rng.gen_bool(0.6) {
                continue;
            }
            let d = rng.gen_range(0..=1);
            let f = random_homogeneous(ring, d, 2, &mut rng);
            if !f.is_zero() {
                extra.push(g * &f);
            }
        }
    }
    let mut gens = lower.generators().to_vec();
    gens.extend(extra);
    Ideal::new(ring, gens)
}

fn parsed(ring: &Ring, gens: &[&str]) -> Ideal {
    Ideal::parse(ring, gens).unwrap()
}

fn squared(ideal: Ideal) -> Ideal {
    power(&ideal, 2).unwrap()
}

/// The corpus, in a fixed order. Entries in the same variables share one ring.
pub fn corpus() -> Vec<CorpusEntry> {
    let xy = GradingSpec::standard(&["x", "y"]);
    let xyz = GradingSpec::standard(&["x", "y", "z"]);
    let xyzw = GradingSpec::standard(&["x", "y", "z", "w"]);
    let x4 = GradingSpec::indexed(4);
    let x3 = GradingSpec::indexed(3);
    let weighted = GradingSpec::new(&["x", "y"], &[1, 2]).unwrap();
    let weighted3 = GradingSpec::new(&["x", "y", "z"], &[1, 1, 2]).unwrap();
    let e = |name, provenance, note, ideal| CorpusEntry {
        name,
        provenance,
        note,
        ideal,
    };
    alloc::vec![
        e(
            "product-counterexample",
            Provenance::Example,
            "(x,y)(z), fails the predicate",
            parsed(&xyz, &["x*z", "y*z"])
        ),
        e(
            "square-of-maximal",
            Provenance::Power,
            "(x,y)^2",
            parsed(&xy, &["x^2", "x*y", "y^2"])
        ),
        e(
            "ci-control",
            Provenance::Control,
            "complete intersection, not Golod",
            parsed(&xy, &["x^2", "y^2"])
        ),
        e(
            "cube-of-maximal",
            Provenance::Power,
            "(x,y)^3",
            squared(parsed(&xy, &["x", "y"]))
                .product(&parsed(&xy, &["x", "y"]))
                .unwrap()
        ),
        e(
            "principal-fourth-power",
            Provenance::Example,
            "(x^4)",
            parsed(&xy, &["x^4"])
        ),
        e(
            "monomial-staircase",
            Provenance::Example,
            "(x^3, x^2 y, y^3)",
            parsed(&xy, &["x^3", "x^2*y", "y^3"])
        ),
        e(
            "square-of-ci",
            Provenance::Power,
            "(x^2, y^2)^2",
            squared(parsed(&xy, &["x^2", "y^2"]))
        ),
        e(
            "weighted-square",
            Provenance::Power,
            "(x^2, y)^2 with deg y = 2",
            squared(parsed(&weighted, &["x^2", "y"]))
        ),
        e(
            "weighted-ci-control",
            Provenance::Control,
            "(x^4 - y^2, x^2 y) with deg y = 2",
            parsed(&weighted, &["x^4 - y^2", "x^2*y"])
        ),
        e(
            "square-of-maximal-3",
            Provenance::Power,
            "(x,y,z)^2",
            squared(Ideal::maximal(&xyz))
        ),
        e(
            "square-of-linear-pair",
            Provenance::Power,
            "(x + y, z)^2",
            squared(parsed(&xyz, &["x + y", "z"]))
        ),
        e(
            "square-of-quadric",
            Provenance::Power,
            "(x^2 - y*z)^2",
            squared(parsed(&xyz, &["x^2 - y*z"]))
        ),
        e(
            "square-of-binomial-pair",
            Provenance::Power,
            "(x*y - z^2, x*z)^2",
            squared(parsed(&xyz, &["x*y - z^2", "x*z"]))
        ),
        e(
            "variables-control",
            Provenance::Control,
            "(x, y), radical",
            parsed(&xyz, &["x", "y"])
        ),
        e(
            "weighted-mixed-square",
            Provenance::Power,
            "(x*y, z)^2 with deg z = 2",
            squared(parsed(&weighted3, &["x*y", "z"]))
        ),
        e(
            "triangle-cover",
            Provenance::Control,
            "cover ideal of the triangle, radical",
            parsed(&x3, &["x1*x2", "x1*x3", "x2*x3"])
        ),
        e(
            "triangle-cover-square",
            Provenance::Power,
            "square of the triangle cover ideal",
            squared(parsed(&x3, &["x1*x2", "x1*x3", "x2*x3"]))
        ),
        e(
            "path-cover",
            Provenance::Control,
            "cover ideal of the path 1-2-3",
            parsed(&x3, &["x2", "x1*x3"])
        ),
        e(
            "twisted-cubic",
            Provenance::Control,
            "2x2 minors, not strongly Golod",
            parsed(&xyzw, &["x*z - y^2", "x*w - y*z", "y*w - z^2"])
        ),
        e(
            "square-of-disjoint-edges",
            Provenance::Power,
            "(x1 x2, x3 x4)^2",
            squared(parsed(&x4, &["x1*x2", "x3*x4"]))
        ),
        e(
            "square-of-coordinate-pair",
            Provenance::Power,
            "(x1, x2)^2 in four variables",
            squared(parsed(&x4, &["x1", "x2"]))
        ),
        e(
            "random-square-linear",
            Provenance::Random,
            "square of two random linear forms",
            squared(random_homogeneous_ideal(&xyzw, &[1, 1], 3, CORPUS_SEED))
        ),
        e(
            "random-square-mixed",
            Provenance::Random,
            "square of a random linear form and quadric",
            squared(random_homogeneous_ideal(&xyz, &[1, 2], 3, CORPUS_SEED + 1))
        ),
        e(
            "random-quadric-control",
            Provenance::Control,
            "two random quadrics",
            random_homogeneous_ideal(&xyz, &[2, 2], 3, CORPUS_SEED + 2)
        ),
    ]
}

pub fn corpus_entry(name: &str) -> Option<CorpusEntry> {
    corpus().into_iter().find(|e| e.name == name)
}

pub fn corpus_names() -> Vec<String> {
    corpus().iter().map(|e| String::from(e.name)).collect()
}

/// All corpus ideals; see [`corpus`] for names and provenance.
pub fn corpus_builders() -> Result<Vec<Ideal>> {
    Ok(corpus().into_iter().map(|e| e.ideal).collect())
}
