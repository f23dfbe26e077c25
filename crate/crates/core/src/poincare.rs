//! The Serre bound and the actual Poincaré series of `R = S/I`, bigraded by homological
//! degree `i` (power of `t`) and internal degree `d` (power of `u`), on a finite window.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::koszul::{koszul_homology, KoszulBounds};
use crate::linalg::{self, Echelon, SparseVec};
use crate::quotient::GradedQuotient;
use crate::resolution::minimal_free_resolution;
use crate::ring::{GradingSpec, Monomial, Polynomial, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeriesBounds {
    pub i_max: usize,
    pub d_max: u32,
}

impl SeriesBounds {
    /// `i_max = 4`, `d_max = i_max ·` (maximal shift of the minimal resolution of `S/I`).
    pub fn default_for(ideal: &Ideal) -> Result<Self> {
        let shift = minimal_free_resolution(ideal)?.max_shift().max(1);
        Ok(SeriesBounds {
            i_max: 4,
            d_max: 4 * shift,
        })
    }
}

/// `Σ c_{i,d} t^i u^d` for `i ≤ i_max`, `d ≤ d_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigradedSeries {
    pub bounds: SeriesBounds,
    coefficients: BTreeMap<(usize, u32), u64>,
}

impl BigradedSeries {
    fn new(bounds: SeriesBounds, coefficients: BTreeMap<(usize, u32), u64>) -> Self {
        BigradedSeries {
            bounds,
            coefficients: coefficients.into_iter().filter(|c| c.1 > 0).collect(),
        }
    }

    pub fn get(&self, i: usize, d: u32) -> u64 {
        self.coefficients.get(&(i, d)).copied().unwrap_or(0)
    }

    pub fn coefficients(&self) -> &BTreeMap<(usize, u32), u64> {
        &self.coefficients
    }

    /// The specialization `u = 1`, truncated at `i_max`.
    pub fn totals(&self) -> Vec<u64> {
        let mut out = alloc::vec![0u64; self.bounds.i_max + 1];
        for (&(i, _), &c) in &self.coefficients {
            out[i] += c;
        }
        out
    }

    /// Any nonzero coefficient in the top internal degree.
    pub fn touches_boundary(&self) -> bool {
        self.coefficients.keys().any(|k| k.1 == self.bounds.d_max)
    }
}

/// Terms in order, e.g. `1 + 2*t*u + 4*t^2*u^2`.
impl fmt::Display for BigradedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (&(i, d), &c) in &self.coefficients {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let mut parts: Vec<String> = Vec::new();
            if c != 1 || (i == 0 && d == 0) {
                parts.push(alloc::format!("{c}"));
            }
            match i {
                0 => {}
                1 => parts.push(String::from("t")),
                _ => parts.push(alloc::format!("t^{i}")),
            }
            match d {
                0 => {}
                1 => parts.push(String::from("u")),
                _ => parts.push(alloc::format!("u^{d}")),
            }
            f.write_str(&parts.join("*"))?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

fn residue_field_series(bounds: SeriesBounds) -> BigradedSeries {
    BigradedSeries::new(bounds, [((0, 0), 1)].into_iter().collect())
}

/// `∏_j (1 + t u^{a_j}) / (1 - Σ_{l≥1,d} h_{l,d} t^{l+1} u^d)` expanded on the window.
pub fn serre_bound_from(
    weights: &[u32],
    h: &BTreeMap<(usize, u32), usize>,
    bounds: SeriesBounds,
) -> Result<BigradedSeries> {
    let ov = Error::Overflow("Serre bound coefficient");
    let mut inv: BTreeMap<(usize, u32), u64> = BTreeMap::new();
    for i in 0..=bounds.i_max {
        for d in 0..=bounds.d_max {
            let mut c: u64 = u64::from(i == 0 && d == 0);
            for (&(l, e), &dim) in h {
                if l == 0 || l + 1 > i || e > d {
                    continue;
                }
                let prev = inv.get(&(i - l - 1, d - e)).copied().unwrap_or(0);
                c = (dim as u64)
                    .checked_mul(prev)
                    .and_then(|p| c.checked_add(p))
                    .ok_or(ov.clone())?;
            }
            if c > 0 {
                inv.insert((i, d), c);
            }
        }
    }
    let mut series = inv;
    for &a in weights {
        let mut next = BTreeMap::new();
        for (&(i, d), &c) in &series {
            *next.entry((i, d)).or_insert(0u64) += c;
            if i < bounds.i_max && d + a <= bounds.d_max {
                let e = next.entry((i + 1, d + a)).or_insert(0u64);
                *e = e.checked_add(c).ok_or(ov.clone())?;
            }
        }
        series = next;
    }
    Ok(BigradedSeries::new(bounds, series))
}

/// Rewrites `S/I` as `S'/I'` with `I' ⊆ m'^2` by solving generators of the form
/// `c·x_p + (terms without x_p)` for `x_p` and substituting. `None` means `R = K`.
pub fn minimal_presentation(ideal: &Ideal) -> Result<Option<Ideal>> {
    ideal.require_homogeneous()?;
    ideal.require_proper()?;
    let mut ring = ideal.ring().clone();
    let mut gens: Vec<Polynomial> = ideal.generators().to_vec();
    loop {
        let n = ring.nvars();
        let found = gens.iter().enumerate().find_map(|(k, g)| {
            g.terms()
                .iter()
                .find(|(m, _)| m.total_degree() == 1)
                .map(|(m, c)| (k, m.support()[0], c.clone()))
        });
        let Some((k, p, c)) = found else { break };
        // x_p = -(g - c x_p) / c; no other term of g involves x_p by homogeneity.
        let g = gens.swap_remove(k);
        let xp = Polynomial::var(&ring, p);
        let value = (&g - &xp.scale(&c)).scale(&-c.recip());
        if n == 1 {
            return Ok(None);
        }
        let names: Vec<_> = (0..n)
            .filter(|&i| i != p)
            .map(|i| ring.names()[i].clone())
            .collect();
        let weights: Vec<_> = (0..n)
            .filter(|&i| i != p)
            .map(|i| ring.weights()[i])
            .collect();
        let smaller = GradingSpec::from_parts(names, weights)?;
        let drop = |m: &Monomial| {
            let e: Vec<u32> = (0..n)
                .filter(|&i| i != p)
                .map(|i| m.exponents()[i])
                .collect();
            Monomial::from_exponents(&e)
        };
        gens = gens
            .iter()
            .map(|f| {
                let mut acc = Polynomial::zero(&ring);
                for (m, a) in f.terms() {
                    let mut rest = m.clone();
                    let e = rest.exponents()[p];
                    rest.exponents_mut()[p] = 0;
                    let term = Polynomial::monomial(&ring, rest, a.clone());
                    acc = &acc + &(&term * &value.pow(e));
                }
                acc.map_monomials(&smaller, drop)
            })
            .filter(|f| !f.is_zero())
            .collect();
        ring = smaller;
    }
    Ok(Some(Ideal::new(&ring, gens)?))
}

#[derive(Clone, Debug)]
pub struct SerreBound {
    pub series: BigradedSeries,
    /// The Koszul homology feeding the denominator was nonzero at the top degree.
    pub truncated: bool,
}

/// Computed on the minimal presentation of `R`, see [`minimal_presentation`].
pub fn serre_bound_series(ideal: &Ideal, bounds: SeriesBounds) -> Result<SerreBound> {
    let Some(ideal) = minimal_presentation(ideal)? else {
        return Ok(SerreBound {
            series: residue_field_series(bounds),
            truncated: false,
        });
    };
    let ideal = &ideal;
    let n = ideal.ring().nvars();
    let h = koszul_homology(
        ideal,
        Some(KoszulBounds {
            l_max: n,
            d_max: bounds.d_max,
        }),
    )?;
    let series = serre_bound_from(ideal.ring().weights(), &h.dims(), bounds)?;
    Ok(SerreBound {
        series,
        truncated: h.truncated,
    })
}

/// Single-variable bound `(1+t)^n / (1 - Σ_l b_l t^{l+1})` from total Betti numbers.
pub fn serre_bound_totals(n: usize, betti: &[usize], i_max: usize) -> Result<Vec<u64>> {
    let ov = Error::Overflow("Serre bound coefficient");
    let mut inv = alloc::vec![0u64; i_max + 1];
    inv[0] = 1;
    for i in 1..=i_max {
        let mut c = 0u64;
        for (l, &b) in betti.iter().enumerate().skip(1) {
            if l < i {
                c = (b as u64)
                    .checked_mul(inv[i - l - 1])
                    .and_then(|p| c.checked_add(p))
                    .ok_or(ov.clone())?;
            }
        }
        inv[i] = c;
    }
    let mut out = alloc::vec![0u64; i_max + 1];
    for i in 0..=i_max {
        let mut binom = 1u64;
        for k in 0..=i.min(n) {
            out[i] = binom
                .checked_mul(inv[i - k])
                .and_then(|p| out[i].checked_add(p))
                .ok_or(ov.clone())?;
            binom = binom * (n - k) as u64 / (k + 1) as u64;
        }
    }
    Ok(out)
}

/// A free `R`-module generator's image: `(component, R-coordinates in its strand)`.
type Image = Vec<(usize, u32, SparseVec)>;

struct FreeStep {
    degrees: Vec<u32>,
    images: Vec<Image>,
}

/// Strand layout of `⊕_j R(-g_j)` in degree `d`: offsets per component.
fn offsets(q: &GradedQuotient, degrees: &[u32], d: u32) -> (Vec<Option<usize>>, usize) {
    let mut out = Vec::with_capacity(degrees.len());
    let mut dim = 0;
    for &g in degrees {
        if g <= d {
            out.push(Some(dim));
            dim += q.dim(d - g);
        } else {
            out.push(None);
        }
    }
    (out, dim)
}

/// `m · φ(e_j)` in strand coordinates of the target at degree `d`.
fn shifted_image(
    q: &GradedQuotient,
    image: &Image,
    m: &Monomial,
    target_offsets: &[Option<usize>],
) -> SparseVec {
    let mut acc: SparseVec = Vec::new();
    for (k, deg, coords) in image {
        let basis = q.basis(*deg);
        let off = target_offsets[*k].unwrap();
        for (i, c) in coords {
            let v = q.reduce_monomial(&basis[*i].mul(m));
            let shifted: SparseVec = v.into_iter().map(|(p, a)| (off + p, a)).collect();
            acc = linalg::axpy(&acc, &-c.clone(), &shifted);
        }
    }
    acc
}

/// Columns of `φ` in degree `d`, source basis `(generator, standard monomial)`.
fn strand_matrix(
    q: &GradedQuotient,
    step: &FreeStep,
    target_degrees: &[u32],
    d: u32,
) -> Vec<SparseVec> {
    let (toff, _) = offsets(q, target_degrees, d);
    let w = q.ring().weights();
    let mut cols = Vec::new();
    for (j, &g) in step.degrees.iter().enumerate() {
        if g > d {
            continue;
        }
        for m in q.basis(d - g) {
            cols.push(shifted_image(q, &step.images[j], &m, &toff));
        }
        debug_assert!(q.basis(d - g).iter().all(|m| m.degree(w) == d - g));
    }
    cols
}

/// Splits a strand vector of `⊕_k R(-g_k)` in degree `d` into per-component coordinates.
fn split(
    v: &SparseVec,
    degrees: &[u32],
    offs: &[Option<usize>],
    q: &GradedQuotient,
    d: u32,
) -> Image {
    let mut out = Vec::new();
    for (k, &g) in degrees.iter().enumerate() {
        let Some(off) = offs[k] else { continue };
        let len = q.dim(d - g);
        let part: SparseVec = v
            .iter()
            .filter(|(i, _)| *i >= off && *i < off + len)
            .map(|(i, a)| (i - off, a.clone()))
            .collect();
        if !part.is_empty() {
            out.push((k, d - g, part));
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct ActualPoincare {
    pub series: BigradedSeries,
    /// Ranks of the constructed free modules, per homological degree.
    pub ranks: Vec<usize>,
}

/// `dim Tor_i^R(K, K)_d` on the window, from a minimal free resolution of `K` over `R`
/// built one internal degree at a time: new generators in degree `d` complete the span
/// of the part of the kernel generated in lower degrees.
pub fn actual_poincare(ideal: &Ideal, bounds: SeriesBounds) -> Result<ActualPoincare> {
    let Some(ideal) = minimal_presentation(ideal)? else {
        return Ok(ActualPoincare {
            series: residue_field_series(bounds),
            ranks: alloc::vec![1],
        });
    };
    let ideal = &ideal;
    let q = GradedQuotient::new(ideal)?;
    let mut coefficients = BTreeMap::new();
    coefficients.insert((0usize, 0u32), 1u64);
    // F_0 = R; the augmentation kernel is generated by the variables.
    let n = q.ring().nvars();
    let w = q.ring().weights().to_vec();
    let mut prev_degrees = alloc::vec![0u32];
    let mut step = FreeStep {
        degrees: Vec::new(),
        images: Vec::new(),
    };
    for i in 0..n {
        let m = Monomial::var(n, i);
        if let Some(idx) = q.index_of(&m) {
            step.degrees.push(w[i]);
            step.images.push(alloc::vec![(
                0,
                w[i],
                alloc::vec![(idx, Rational::from_integer(1.into()))]
            )]);
        }
    }
    let mut ranks = alloc::vec![1usize];
    for hom in 1..=bounds.i_max {
        for &g in &step.degrees {
            if g <= bounds.d_max {
                *coefficients.entry((hom, g)).or_insert(0) += 1;
            }
        }
        ranks.push(step.degrees.len());
        if hom == bounds.i_max {
            break;
        }
        // Next step: minimal generators of ker(φ_hom), degree by degree.
        let mut next = FreeStep {
            degrees: Vec::new(),
            images: Vec::new(),
        };
        for d in 0..=bounds.d_max {
            let cols = strand_matrix(&q, &step, &prev_degrees, d);
            let (kernel, _) = linalg::kernel(&cols);
            if kernel.is_empty() {
                continue;
            }
            let (offs, _) = offsets(&q, &step.degrees, d);
            let mut span = Echelon::new();
            for v in strand_matrix(&q, &next, &step.degrees, d) {
                span.insert(v);
            }
            for v in kernel {
                if span.insert(v.clone()) {
                    let image = split(&v, &step.degrees, &offs, &q, d);
                    if image.iter().any(|(_, deg, _)| *deg == 0) {
                        return Err(Error::InvariantViolation(alloc::format!(
                            "unit entry in the resolution of the residue field at step {hom}, degree {d}"
                        )));
                    }
                    next.degrees.push(d);
                    next.images.push(image);
                }
            }
        }
        prev_degrees = core::mem::take(&mut step.degrees);
        step = next;
    }
    Ok(ActualPoincare {
        series: BigradedSeries::new(bounds, coefficients),
        ranks,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GolodStatus {
    /// Bound and actual series agree on the whole window.
    Golod,
    NotGolod,
    /// No discrepancy, but the window may be too small to tell.
    Inconclusive,
}

impl GolodStatus {
    pub fn label(self) -> &'static str {
        match self {
            GolodStatus::Golod => "GOLOD-up-to-truncation",
            GolodStatus::NotGolod => "NOT-GOLOD",
            GolodStatus::Inconclusive => "INCONCLUSIVE",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub i: usize,
    pub d: u32,
    pub bound: u64,
    pub actual: u64,
}

#[derive(Clone, Debug)]
pub struct GolodVerdict {
    pub status: GolodStatus,
    /// First bigraded discrepancy, ordered by `i` then `d`.
    pub first_discrepancy: Option<Discrepancy>,
    /// First homological degree where the totals differ, as `(i, bound, actual)`.
    pub first_total_discrepancy: Option<(usize, u64, u64)>,
    pub bound: BigradedSeries,
    pub actual: BigradedSeries,
    pub truncated: bool,
}

/// Compares the two series on a common window. A discrepancy gives `NotGolod`; otherwise
/// nonzero coefficients in the top internal degree give `Inconclusive`.
pub fn golod_verdict(ideal: &Ideal, bounds: Option<SeriesBounds>) -> Result<GolodVerdict> {
    let bounds = match bounds {
        Some(b) => b,
        None => SeriesBounds::default_for(ideal)?,
    };
    let serre = serre_bound_series(ideal, bounds)?;
    let actual = actual_poincare(ideal, bounds)?.series;
    let mut first_discrepancy = None;
    for i in 0..=bounds.i_max {
        for d in 0..=bounds.d_max {
            let (b, a) = (serre.series.get(i, d), actual.get(i, d));
            if a > b {
                return Err(Error::InvariantViolation(alloc::format!(
                    "actual coefficient {a} exceeds the bound {b} at (i, d) = ({i}, {d})"
                )));
            }
            if a != b && first_discrepancy.is_none() {
                first_discrepancy = Some(Discrepancy {
                    i,
                    d,
                    bound: b,
                    actual: a,
                });
            }
        }
    }
    let (bt, at) = (serre.series.totals(), actual.totals());
    let first_total_discrepancy = (0..=bounds.i_max)
        .find(|&i| bt[i] != at[i])
        .map(|i| (i, bt[i], at[i]));
    let truncated = serre.truncated || actual.touches_boundary() || serre.series.touches_boundary();
    let status = if first_discrepancy.is_some() {
        GolodStatus::NotGolod
    } else if truncated {
        GolodStatus::Inconclusive
    } else {
        GolodStatus::Golod
    };
    Ok(GolodVerdict {
        status,
        first_discrepancy,
        first_total_discrepancy,
        bound: serre.series,
        actual,
        truncated,
    })
}
