//! The Koszul complex `K(x; R)` of `R = S/I`, one bigraded strand `(l, d)` at a time.
//!
//! A strand basis element is a pair `(e_A, m)`: a wedge `e_{i_1} ∧ ... ∧ e_{i_l}` with
//! `i_1 < ... < i_l`, encoded as a bitmask `A`, and a standard monomial `m` of degree
//! `d - Σ_{i∈A} a_i`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cell::RefCell;

use crate::calculus::{derivative_ideal, strongly_golod};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::linalg::{self, Echelon, SparseVec};
use crate::quotient::GradedQuotient;
use crate::resolution::minimal_free_resolution;
use crate::ring::{Monomial, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KoszulBounds {
    pub l_max: usize,
    pub d_max: u32,
}

impl KoszulBounds {
    /// `l_max = n`, `d_max` = maximal shift of the minimal resolution plus maximal weight.
    pub fn default_for(ideal: &Ideal) -> Result<Self> {
        let res = minimal_free_resolution(ideal)?;
        let ring = ideal.ring();
        Ok(KoszulBounds {
            l_max: ring.nvars(),
            d_max: res.max_shift() + ring.max_weight(),
        })
    }
}

struct StrandLayout {
    /// `(mask, offset)` for every wedge of size `l` whose degree fits.
    blocks: Vec<(u64, usize)>,
    dim: usize,
}

pub struct KoszulComplex {
    quotient: GradedQuotient,
    layouts: RefCell<BTreeMap<(usize, u32), alloc::rc::Rc<StrandLayout>>>,
}

fn wedge_degree(weights: &[u32], mask: u64) -> u32 {
    (0..weights.len())
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| weights[i])
        .sum()
}

/// Sign of `e_A ∧ e_B`: `(-1)` to the number of pairs `a ∈ A, b ∈ B` with `a > b`.
fn wedge_sign(a: u64, b: u64) -> bool {
    let mut inversions = 0;
    let mut bits = b;
    while bits != 0 {
        let j = bits.trailing_zeros();
        inversions += (a >> (j + 1)).count_ones();
        bits &= bits - 1;
    }
    inversions % 2 == 1
}

impl KoszulComplex {
    pub fn new(ideal: &Ideal) -> Result<Self> {
        ideal.require_proper()?;
        if ideal.ring().nvars() > 63 {
            return Err(Error::InvalidArgument(alloc::format!(
                "too many variables for the Koszul complex"
            )));
        }
        Ok(KoszulComplex {
            quotient: GradedQuotient::new(ideal)?,
            layouts: RefCell::new(BTreeMap::new()),
        })
    }

    pub fn quotient(&self) -> &GradedQuotient {
        &self.quotient
    }

    fn layout(&self, l: usize, d: u32) -> alloc::rc::Rc<StrandLayout> {
        if let Some(s) = self.layouts.borrow().get(&(l, d)) {
            return s.clone();
        }
        let w = self.quotient.ring().weights();
        let n = w.len();
        let mut blocks = Vec::new();
        let mut dim = 0;
        for mask in 0u64..1 << n {
            if mask.count_ones() as usize != l {
                continue;
            }
            let wd = wedge_degree(w, mask);
            if wd <= d {
                let size = self.quotient.dim(d - wd);
                if size > 0 {
                    blocks.push((mask, dim));
                    dim += size;
                }
            }
        }
        let s = alloc::rc::Rc::new(StrandLayout { blocks, dim });
        self.layouts.borrow_mut().insert((l, d), s.clone());
        s
    }

    pub fn dim(&self, l: usize, d: u32) -> usize {
        self.layout(l, d).dim
    }

    /// Basis of strand `(l, d)` as `(wedge mask, standard monomial)`.
    pub fn basis(&self, l: usize, d: u32) -> Vec<(u64, Monomial)> {
        let w = self.quotient.ring().weights();
        let mut out = Vec::new();
        for &(mask, _) in &self.layout(l, d).blocks {
            for m in self.quotient.basis(d - wedge_degree(w, mask)) {
                out.push((mask, m));
            }
        }
        out
    }

    fn offset(&self, l: usize, d: u32, mask: u64) -> Option<usize> {
        self.layout(l, d)
            .blocks
            .iter()
            .find(|b| b.0 == mask)
            .map(|b| b.1)
    }

    /// Coordinates of `c · m · e_A` in strand `(|A|, deg)`, `m` any monomial.
    fn embed(&self, mask: u64, m: &Monomial, c: &Rational, d: u32) -> SparseVec {
        let l = mask.count_ones() as usize;
        let Some(off) = self.offset(l, d, mask) else {
            return Vec::new();
        };
        let v = self.quotient.reduce_monomial(m);
        linalg::scale(&v, c)
            .into_iter()
            .map(|(i, a)| (off + i, a))
            .collect()
    }

    /// Columns of `∂ : K_{l,d} → K_{l-1,d}`,
    /// `∂(m e_{i_1..i_l}) = Σ_k (-1)^{k+1} x_{i_k} m e_{..î_k..}`.
    pub fn differential(&self, l: usize, d: u32) -> Vec<SparseVec> {
        let n = self.quotient.ring().nvars();
        let mut cols = Vec::with_capacity(self.dim(l, d));
        if l == 0 {
            cols.resize(self.dim(l, d), Vec::new());
            return cols;
        }
        for (mask, m) in self.basis(l, d) {
            let mut col: SparseVec = Vec::new();
            let mut k = 0;
            for i in 0..n {
                if mask >> i & 1 == 0 {
                    continue;
                }
                let sign = if k % 2 == 0 {
                    Rational::from_integer(1.into())
                } else {
                    Rational::from_integer((-1).into())
                };
                let xm = m.mul(&Monomial::var(n, i));
                let term = self.embed(mask & !(1 << i), &xm, &sign, d);
                col = linalg::axpy(&col, &Rational::from_integer((-1).into()), &term);
                k += 1;
            }
            cols.push(col);
        }
        cols
    }

    /// Wedge product of strand elements, landing in `(l1 + l2, d1 + d2)`.
    pub fn product(
        &self,
        (l1, d1, z1): (usize, u32, &SparseVec),
        (l2, d2, z2): (usize, u32, &SparseVec),
    ) -> SparseVec {
        let b1 = self.basis(l1, d1);
        let b2 = self.basis(l2, d2);
        let mut acc: SparseVec = Vec::new();
        for (i, a) in z1 {
            let (m1, u1) = &b1[*i];
            for (j, b) in z2 {
                let (m2, u2) = &b2[*j];
                if m1 & m2 != 0 {
                    continue;
                }
                let mut c = a * b;
                if wedge_sign(*m1, *m2) {
                    c = -c;
                }
                let term = self.embed(m1 | m2, &u1.mul(u2), &c, d1 + d2);
                acc = linalg::axpy(&acc, &Rational::from_integer((-1).into()), &term);
            }
        }
        acc
    }
}

/// Homology of one strand.
#[derive(Clone, Debug)]
pub struct StrandHomology {
    pub dim: usize,
    /// Cycles whose classes form a basis of `H_{l,d}`.
    pub representatives: Vec<SparseVec>,
    /// Echelon form of the boundaries `B_{l,d}`.
    pub boundaries: Echelon,
}

#[derive(Clone, Debug)]
pub struct HomologySummary {
    pub bounds: KoszulBounds,
    pub strands: BTreeMap<(usize, u32), StrandHomology>,
    /// Nonzero homology in the top internal degree `d_max`.
    pub truncated: bool,
}

impl HomologySummary {
    pub fn dims(&self) -> BTreeMap<(usize, u32), usize> {
        self.strands
            .iter()
            .filter(|s| s.1.dim > 0)
            .map(|(k, s)| (*k, s.dim))
            .collect()
    }

    pub fn dim(&self, l: usize, d: u32) -> usize {
        self.strands.get(&(l, d)).map_or(0, |s| s.dim)
    }

    pub fn total(&self, l: usize) -> usize {
        self.strands
            .iter()
            .filter(|s| s.0 .0 == l)
            .map(|s| s.1.dim)
            .sum()
    }
}

fn strand_homology(k: &KoszulComplex, l: usize, d: u32) -> StrandHomology {
    let (cycles, _) = linalg::kernel(&k.differential(l, d));
    let mut boundaries = Echelon::new();
    for c in k.differential(l + 1, d) {
        boundaries.insert(c);
    }
    let mut span = boundaries.clone();
    let mut representatives = Vec::new();
    for z in cycles {
        if span.insert(z.clone()) {
            representatives.push(z);
        }
    }
    StrandHomology {
        dim: representatives.len(),
        representatives,
        boundaries,
    }
}

pub fn koszul_homology_of(k: &KoszulComplex, bounds: KoszulBounds) -> HomologySummary {
    let mut strands = BTreeMap::new();
    for l in 0..=bounds.l_max.min(k.quotient.ring().nvars()) {
        for d in 0..=bounds.d_max {
            strands.insert((l, d), strand_homology(k, l, d));
        }
    }
    let truncated = strands
        .iter()
        .any(|(key, s)| key.1 == bounds.d_max && s.dim > 0);
    HomologySummary {
        bounds,
        strands,
        truncated,
    }
}

/// `dim H_l(x; R)_d` for `l ≤ l_max`, `d ≤ d_max`, with cycle representatives.
pub fn koszul_homology(ideal: &Ideal, bounds: Option<KoszulBounds>) -> Result<HomologySummary> {
    let bounds = match bounds {
        Some(b) => b,
        None => KoszulBounds::default_for(ideal)?,
    };
    Ok(koszul_homology_of(&KoszulComplex::new(ideal)?, bounds))
}

/// A product of two homology representatives that is not a boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FailingPair {
    pub left: (usize, u32, usize),
    pub right: (usize, u32, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrivialMultiplicationReport {
    pub verdict: bool,
    pub failing_pair: Option<FailingPair>,
    pub products_checked: usize,
    pub truncated: bool,
}

/// Tests `z_1 ∧ z_2 ∈ B` for all representatives with `l_1, l_2 ≥ 1`, `l_1 + l_2 ≤ l_max`,
/// `d_1 + d_2 ≤ d_max`. Products landing in a strand without homology are cycles there,
/// hence boundaries, and are not recomputed.
pub fn trivial_multiplication_check(
    ideal: &Ideal,
    bounds: Option<KoszulBounds>,
) -> Result<TrivialMultiplicationReport> {
    let bounds = match bounds {
        Some(b) => b,
        None => KoszulBounds::default_for(ideal)?,
    };
    let k = KoszulComplex::new(ideal)?;
    let h = koszul_homology_of(&k, bounds);
    let classes: Vec<(&(usize, u32), &StrandHomology)> = h
        .strands
        .iter()
        .filter(|s| s.0 .0 >= 1 && s.1.dim > 0)
        .collect();
    let mut products_checked = 0;
    for (a, (ka, ha)) in classes.iter().enumerate() {
        for (kb, hb) in &classes[a..] {
            let (l, d) = (ka.0 + kb.0, ka.1 + kb.1);
            if l > bounds.l_max || d > bounds.d_max || h.dim(l, d) == 0 {
                continue;
            }
            let target = &h.strands[&(l, d)];
            for (i, z1) in ha.representatives.iter().enumerate() {
                for (j, z2) in hb.representatives.iter().enumerate() {
                    products_checked += 1;
                    let p = k.product((ka.0, ka.1, z1), (kb.0, kb.1, z2));
                    if !target.boundaries.contains(&p) {
                        let failing_pair = FailingPair {
                            left: (ka.0, ka.1, i),
                            right: (kb.0, kb.1, j),
                        };
                        return Ok(TrivialMultiplicationReport {
                            verdict: false,
                            failing_pair: Some(failing_pair),
                            products_checked,
                            truncated: h.truncated,
                        });
                    }
                }
            }
        }
    }
    Ok(TrivialMultiplicationReport {
        verdict: true,
        failing_pair: None,
        products_checked,
        truncated: h.truncated,
    })
}

/// Whether every class in `H_{l,d}`, `l ≥ 1`, has a representing cycle with all
/// coefficients in `∂(I)·R`: `(Z ∩ D) + B = Z`.
pub fn derivative_cycle_check(ideal: &Ideal, bounds: Option<KoszulBounds>) -> Result<bool> {
    if !strongly_golod(ideal)?.verdict {
        return Err(Error::Precondition(alloc::format!(
            "{ideal} is not strongly Golod"
        )));
    }
    let bounds = match bounds {
        Some(b) => b,
        None => KoszulBounds::default_for(ideal)?,
    };
    let k = KoszulComplex::new(ideal)?;
    let q = k.quotient();
    let ring = q.ring().clone();
    let w = ring.weights().to_vec();
    let partials = derivative_ideal(ideal)?;
    // Basis of the image of ∂(I) in R_e, per degree.
    let mut image: BTreeMap<u32, Vec<SparseVec>> = BTreeMap::new();
    for e in 0..=bounds.d_max {
        let mut ech = Echelon::new();
        for g in partials.generators() {
            let gd = g.homogeneous_degree()?.unwrap();
            if gd > e {
                continue;
            }
            for m in Monomial::all_of_degree(&w, e - gd) {
                ech.insert(q.coordinates(&g.mul_monomial(&m)));
            }
        }
        image.insert(e, ech.rows().to_vec());
    }
    let h = koszul_homology_of(&k, bounds);
    for ((l, d), s) in &h.strands {
        if *l == 0 || s.dim == 0 {
            continue;
        }
        let layout = k.layout(*l, *d);
        let mut gens: Vec<SparseVec> = Vec::new();
        for &(mask, off) in &layout.blocks {
            for v in &image[&(d - wedge_degree(&w, mask))] {
                gens.push(v.iter().map(|(i, a)| (off + i, a.clone())).collect());
            }
        }
        let diff = k.differential(*l, *d);
        let images: Vec<SparseVec> = gens.iter().map(|g| linalg::apply(&diff, g)).collect();
        let (rel, _) = linalg::kernel(&images);
        let mut span = s.boundaries.clone();
        let before = span.rank();
        for r in rel {
            span.insert(linalg::apply(&gens, &r));
        }
        if span.rank() - before != s.dim {
            return Ok(false);
        }
    }
    Ok(true)
}
