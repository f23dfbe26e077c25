//! Minimal graded free resolutions of `S/I` over `S` and their Betti tables.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::groebner::FreeModule;
use crate::ideal::Ideal;
use crate::linalg::{self, SparseVec};
use crate::ring::{Monomial, Polynomial, Ring};

/// A matrix of polynomials stored by columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    pub rows: usize,
    pub columns: Vec<Vec<Polynomial>>,
}

impl PolyMatrix {
    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn entry(&self, r: usize, c: usize) -> &Polynomial {
        &self.columns[c][r]
    }
}

/// One row per line, entries separated by commas.
impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            f.write_str("[")?;
            for c in 0..self.cols() {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.entry(r, c))?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}

/// `0 ← S ← F_1 ← ... ← F_p ← 0` with `F_i = ⊕_j S(-shifts[i][j])` and `maps[i-1] = φ_i : F_i → F_{i-1}`.
#[derive(Clone, Debug)]
pub struct Resolution {
    ring: Ring,
    maps: Vec<PolyMatrix>,
    shifts: Vec<Vec<u32>>,
}

impl Resolution {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Projective dimension `p`.
    pub fn length(&self) -> usize {
        self.maps.len()
    }

    /// `φ_i` for `1 ≤ i ≤ p`.
    pub fn map(&self, i: usize) -> &PolyMatrix {
        &self.maps[i - 1]
    }

    pub fn shifts(&self, i: usize) -> &[u32] {
        &self.shifts[i]
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.shifts.iter().map(|s| s.len()).collect()
    }

    pub fn max_shift(&self) -> u32 {
        self.shifts.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn betti_table(&self) -> BettiTable {
        let mut entries = BTreeMap::new();
        for (i, s) in self.shifts.iter().enumerate() {
            for &d in s {
                *entries.entry((i, d)).or_insert(0) += 1;
            }
        }
        BettiTable { entries }
    }

    /// `φ_i ∘ φ_{i+1} = 0` for all `i`.
    pub fn is_complex(&self) -> bool {
        self.maps.windows(2).all(|w| {
            w[1].columns.iter().all(|c| {
                let mut acc = alloc::vec![Polynomial::zero(&self.ring); w[0].rows];
                for (k, a) in c.iter().enumerate() {
                    for (r, e) in w[0].columns[k].iter().enumerate() {
                        acc[r] = &acc[r] + &(a * e);
                    }
                }
                acc.iter().all(|p| p.is_zero())
            })
        })
    }

    /// No nonzero constant appears in any differential.
    pub fn is_minimal(&self) -> bool {
        self.maps.iter().all(|m| {
            m.columns
                .iter()
                .flatten()
                .all(|p| !p.is_constant() || p.is_zero())
        })
    }

    /// Matrix of `φ_i` in internal degree `d`, with columns indexed like `strand_basis(i, d)`.
    fn strand_columns(&self, i: usize, d: u32) -> Vec<SparseVec> {
        let w = self.ring.weights();
        let target = strand_basis(w, &self.shifts[i - 1], d);
        let index: BTreeMap<(usize, Monomial), usize> = target
            .into_iter()
            .enumerate()
            .map(|(k, b)| (b, k))
            .collect();
        let phi = &self.maps[i - 1];
        strand_basis(w, &self.shifts[i], d)
            .into_iter()
            .map(|(j, m)| {
                let mut v: SparseVec = Vec::new();
                for (r, e) in phi.columns[j].iter().enumerate() {
                    for (t, c) in e.terms() {
                        v.push((index[&(r, t.mul(&m))], c.clone()));
                    }
                }
                v.sort_by_key(|e| e.0);
                v
            })
            .collect()
    }

    /// Rank-nullity check `dim ker (φ_i)_d = rank (φ_{i+1})_d` for `1 ≤ i ≤ p` and
    /// `d ≤ bound`; also `ker (φ_p)_d = 0`.
    pub fn exactness_certificate(&self, bound: u32) -> ExactnessCertificate {
        let mut checks = Vec::new();
        for i in 1..=self.length() {
            for d in 0..=bound {
                let cols = self.strand_columns(i, d);
                let kernel_dim = cols.len() - linalg::rank(&cols);
                let image_rank = if i < self.length() {
                    linalg::rank(&self.strand_columns(i + 1, d))
                } else {
                    0
                };
                checks.push(StrandCheck {
                    i,
                    d,
                    kernel_dim,
                    image_rank,
                });
            }
        }
        ExactnessCertificate { bound, checks }
    }

    /// Default strand bound: maximal shift plus the number of variables.
    pub fn default_certificate_bound(&self) -> u32 {
        self.max_shift() + self.ring.nvars() as u32
    }
}

fn strand_basis(weights: &[u32], shifts: &[u32], d: u32) -> Vec<(usize, Monomial)> {
    let mut out = Vec::new();
    for (j, &s) in shifts.iter().enumerate() {
        if s <= d {
            out.extend(
                Monomial::all_of_degree(weights, d - s)
                    .into_iter()
                    .map(|m| (j, m)),
            );
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrandCheck {
    pub i: usize,
    pub d: u32,
    pub kernel_dim: usize,
    pub image_rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactnessCertificate {
    pub bound: u32,
    pub checks: Vec<StrandCheck>,
}

impl ExactnessCertificate {
    pub fn is_exact(&self) -> bool {
        self.checks.iter().all(|c| c.kernel_dim == c.image_rank)
    }
}

/// Minimal resolution by iterated syzygies: each `φ_{i+1}` is a minimal generating set
/// of the syzygies of the columns of `φ_i`.
pub fn minimal_free_resolution(ideal: &Ideal) -> Result<Resolution> {
    ideal.require_homogeneous()?;
    ideal.require_proper()?;
    let ring = ideal.ring().clone();
    let mut shifts = alloc::vec![alloc::vec![0u32]];
    let mut maps = Vec::new();
    let mut cols: Vec<Vec<Polynomial>> = ideal
        .minimal_generators()?
        .into_iter()
        .map(|g| alloc::vec![g])
        .collect();
    while !cols.is_empty() {
        let source = FreeModule {
            ring: ring.clone(),
            shifts: shifts.last().unwrap().clone(),
        };
        let degrees = cols
            .iter()
            .map(|c| source.degree_of(c).map(|d| d.unwrap()))
            .collect::<Result<Vec<u32>>>()?;
        let syz = source.syzygies(&cols)?;
        let next = FreeModule {
            ring: ring.clone(),
            shifts: degrees.clone(),
        }
        .minimal_generators(&syz)?;
        maps.push(PolyMatrix {
            rows: source.rank(),
            columns: cols,
        });
        shifts.push(degrees);
        cols = next;
        if maps.len() > ring.nvars() {
            return Err(Error::InvariantViolation(alloc::format!(
                "resolution of {ideal} longer than the number of variables"
            )));
        }
    }
    let res = Resolution { ring, maps, shifts };
    if !res.is_minimal() {
        return Err(Error::InvariantViolation(alloc::format!(
            "resolution of {ideal} has a unit entry"
        )));
    }
    Ok(res)
}

/// Graded Betti numbers `b_{i,d}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, u32), usize>,
}

impl BettiTable {
    pub fn from_entries(entries: BTreeMap<(usize, u32), usize>) -> Self {
        BettiTable {
            entries: entries.into_iter().filter(|e| e.1 > 0).collect(),
        }
    }

    pub fn entries(&self) -> &BTreeMap<(usize, u32), usize> {
        &self.entries
    }

    pub fn get(&self, i: usize, d: u32) -> usize {
        self.entries.get(&(i, d)).copied().unwrap_or(0)
    }

    pub fn total(&self, i: usize) -> usize {
        self.entries
            .iter()
            .filter(|e| e.0 .0 == i)
            .map(|e| e.1)
            .sum()
    }

    pub fn length(&self) -> usize {
        self.entries.keys().map(|k| k.0).max().unwrap_or(0)
    }
}

/// Macaulay-style grid: column `i`, row `d - i`, dots for zeros.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.length();
        let rows = self
            .entries
            .keys()
            .map(|&(i, d)| d.saturating_sub(i as u32))
            .max()
            .unwrap_or(0);
        let cell = |s: String| alloc::format!("{s:>5}");
        let mut line = String::from("      ");
        for i in 0..=p {
            line += &cell(alloc::format!("{i}"));
        }
        writeln!(f, "{}", line.trim_end())?;
        let mut line = String::from("total:");
        for i in 0..=p {
            line += &cell(alloc::format!("{}", self.total(i)));
        }
        writeln!(f, "{line}")?;
        for r in 0..=rows {
            let mut line = alloc::format!("{r:>5}:");
            for i in 0..=p {
                let v = self.get(i, r + i as u32);
                line += &cell(if v == 0 {
                    String::from(".")
                } else {
                    alloc::format!("{v}")
                });
            }
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::GradingSpec;

    fn resolve(r: &Ring, g: &[&str]) -> Resolution {
        minimal_free_resolution(&Ideal::parse(r, g).unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        let r = GradingSpec::standard(&["x", "y"]);
        let res = resolve(&r, &["x^2", "x*y", "y^2"]);
        assert_eq!(res.ranks(), alloc::vec![1, 3, 2]);
        assert_eq!(res.shifts(1), &[2, 2, 2]);
        assert_eq!(res.shifts(2), &[3, 3]);
        assert!(res.is_complex());
        let b = res.betti_table();
        assert_eq!((b.get(1, 2), b.get(2, 3)), (3, 2));
        let res = resolve(&r, &["x"]);
        assert_eq!(res.ranks(), alloc::vec![1, 1]);
        assert_eq!(res.betti_table().get(1, 1), 1);
        let res = resolve(&r, &["x^2", "y^2"]);
        assert_eq!(res.ranks(), alloc::vec![1, 2, 1]);
        assert_eq!(res.shifts(2), &[4]);
        assert!(res
            .exactness_certificate(res.default_certificate_bound())
            .is_exact());
    }

    #[test]
    fn twisted_cubic() {
        let r = GradingSpec::standard(&["x", "y", "z", "w"]);
        let res = resolve(&r, &["x*z - y^2", "x*w - y*z", "y*w - z^2"]);
        assert_eq!(res.ranks(), alloc::vec![1, 3, 2]);
        assert_eq!(res.shifts(2), &[3, 3]);
        assert!(res.is_complex() && res.is_minimal());
        assert!(res.exactness_certificate(5).is_exact());
    }

    #[test]
    fn generator_order_does_not_matter() {
        let r = GradingSpec::standard(&["x", "y", "z"]);
        let a = resolve(&r, &["x^2", "x*y", "y*z", "z^3"]).betti_table();
        let b = resolve(&r, &["z^3", "y*z", "x*y + y*z", "x^2"]).betti_table();
        assert_eq!(a, b);
    }

    #[test]
    fn grid_display() {
        let r = GradingSpec::standard(&["x", "y"]);
        let s = alloc::format!("{}", resolve(&r, &["x^2", "x*y", "y^2"]).betti_table());
        assert_eq!(s, "          0    1    2\ntotal:    1    3    2\n    0:    1    .    .\n    1:    .    3    2\n");
    }

    #[test]
    fn zero_ideal() {
        let r = GradingSpec::standard(&["x", "y"]);
        let res = minimal_free_resolution(&Ideal::zero(&r)).unwrap();
        assert_eq!(res.ranks(), alloc::vec![1]);
        assert!(minimal_free_resolution(&Ideal::unit(&r)).is_err());
    }
}
