//! Sparse exact linear algebra over Q: incremental row echelon forms, rank, kernels.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::ring::Rational;

/// Sparse vector: `(index, value)` pairs sorted by index, no zero values.
pub type SparseVec = Vec<(usize, Rational)>;

/// `a - c * b`.
pub fn axpy(a: &[(usize, Rational)], c: &Rational, b: &[(usize, Rational)]) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, -(c * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - c * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale(v: &[(usize, Rational)], c: &Rational) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, a)| (*i, a * c)).collect()
}

/// Builds a sparse vector from unsorted entries, summing duplicates.
pub fn from_entries(entries: impl IntoIterator<Item = (usize, Rational)>) -> SparseVec {
    let mut map: BTreeMap<usize, Rational> = BTreeMap::new();
    for (i, a) in entries {
        *map.entry(i).or_insert_with(Rational::zero) += a;
    }
    map.into_iter().filter(|(_, a)| !a.is_zero()).collect()
}

/// Row echelon form built one vector at a time. Every stored row has a distinct pivot
/// (its smallest index) with coefficient one, and each row carries the combination of
/// inserted vectors it came from.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<SparseVec>,
    combos: Vec<SparseVec>,
    pivots: BTreeMap<usize, usize>,
    inserted: usize,
    track: bool,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    /// Echelon form that remembers, for every row, which inserted vectors produced it.
    pub fn tracking() -> Self {
        Echelon {
            track: true,
            ..Self::default()
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    fn reduce_with_combo(&self, mut v: SparseVec, mut combo: SparseVec) -> (SparseVec, SparseVec) {
        let mut k = 0;
        while k < v.len() {
            let idx = v[k].0;
            if let Some(&r) = self.pivots.get(&idx) {
                let c = v[k].1.clone();
                v = axpy(&v, &c, &self.rows[r]);
                if self.track {
                    combo = axpy(&combo, &c, &self.combos[r]);
                }
                // entries before position k are unaffected
            } else {
                k += 1;
            }
        }
        (v, combo)
    }

    /// Remainder of `v` modulo the span of the rows.
    pub fn reduce(&self, v: SparseVec) -> SparseVec {
        self.reduce_with_combo(v, Vec::new()).0
    }

    pub fn contains(&self, v: &[(usize, Rational)]) -> bool {
        self.reduce(v.to_vec()).is_empty()
    }

    /// Inserts `v`; returns whether it was independent of the rows already present.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        self.insert_tracked(v).is_none()
    }

    /// Inserts `v`. If it is dependent, returns the relation: a combination of inserted
    /// vectors (indexed by insertion order) that sums to zero and involves `v`.
    pub fn insert_tracked(&mut self, v: SparseVec) -> Option<SparseVec> {
        let id = self.inserted;
        self.inserted += 1;
        let combo = if self.track {
            alloc::vec![(id, Rational::one())]
        } else {
            Vec::new()
        };
        let (r, combo) = self.reduce_with_combo(v, combo);
        if r.is_empty() {
            return Some(combo);
        }
        let inv = r[0].1.recip();
        let row = scale(&r, &inv);
        let combo = if self.track {
            scale(&combo, &inv)
        } else {
            combo
        };
        self.pivots.insert(row[0].0, self.rows.len());
        self.rows.push(row);
        self.combos.push(combo);
        None
    }
}

/// Kernel basis and rank of the linear map sending basis vector `j` to `columns[j]`.
pub fn kernel(columns: &[SparseVec]) -> (Vec<SparseVec>, usize) {
    let mut e = Echelon::tracking();
    let mut ker = Vec::new();
    for c in columns {
        if let Some(rel) = e.insert_tracked(c.clone()) {
            ker.push(rel);
        }
    }
    (ker, e.rank())
}

pub fn rank(vectors: &[SparseVec]) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v.clone());
    }
    e.rank()
}

/// Applies the map given by `columns` to `v` (in domain coordinates).
pub fn apply(columns: &[SparseVec], v: &[(usize, Rational)]) -> SparseVec {
    let mut acc: SparseVec = Vec::new();
    for (j, a) in v {
        acc = axpy(&acc, &-a.clone(), &columns[*j]);
    }
    acc
}
