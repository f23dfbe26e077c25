//! Buchberger's algorithm over Q, for ideals and for submodules of graded free modules.
//!
//! Module elements use a position-over-term order in which a smaller component index is
//! larger; ideals are the one-component case. Pairs are chosen by the normal strategy
//! (smallest lcm degree first) and pruned with the Gebauer–Möller criteria. Buchberger's
//! coprimality criterion is only applied to ideals, where it is valid.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseVec};
use crate::order::{MonomialOrder, OrderKind};
use crate::ring::{Monomial, Polynomial, Rational, Ring};

/// Term of a module element: component, monomial, coefficient.
pub(crate) type VTerm = (u32, Monomial, Rational);
/// Module element, terms strictly descending in the engine order.
pub(crate) type SVec = Vec<VTerm>;

pub(crate) struct Engine<'a> {
    pub order: &'a MonomialOrder,
    pub shifts: &'a [u32],
    pub product_criterion: bool,
}

struct Pair {
    i: usize,
    j: usize,
    comp: u32,
    lcm: Monomial,
    degree: u32,
}

impl<'a> Engine<'a> {
    pub fn for_ideal(order: &'a MonomialOrder) -> Self {
        Engine {
            order,
            shifts: &[],
            product_criterion: true,
        }
    }

    pub fn cmp(&self, a: (u32, &Monomial), b: (u32, &Monomial)) -> Ordering {
        b.0.cmp(&a.0).then_with(|| self.order.cmp(a.1, b.1))
    }

    fn shift(&self, comp: u32) -> u32 {
        self.shifts.get(comp as usize).copied().unwrap_or(0)
    }

    fn degree(&self, comp: u32, m: &Monomial) -> u32 {
        self.shift(comp) + m.degree(self.order.ring.weights())
    }

    pub fn normalize(&self, mut v: SVec) -> SVec {
        v.sort_by(|a, b| self.cmp((b.0, &b.1), (a.0, &a.1)));
        let mut out: SVec = Vec::with_capacity(v.len());
        for t in v {
            match out.last_mut() {
                Some(last) if last.0 == t.0 && last.1 == t.1 => last.2 += t.2,
                _ => {
                    if out.last().is_some_and(|l| l.2.is_zero()) {
                        out.pop();
                    }
                    out.push(t);
                }
            }
        }
        if out.last().is_some_and(|l| l.2.is_zero()) {
            out.pop();
        }
        out
    }

    pub fn from_polynomial(&self, p: &Polynomial, comp: u32) -> SVec {
        let v: SVec = p
            .terms()
            .iter()
            .map(|(m, c)| (comp, m.clone(), c.clone()))
            .collect();
        if self.order.kind == OrderKind::WeightedGrevlex {
            v
        } else {
            self.normalize(v)
        }
    }

    pub fn from_vector(&self, v: &[Polynomial]) -> SVec {
        let mut out = Vec::new();
        for (c, p) in v.iter().enumerate() {
            out.extend(
                p.terms()
                    .iter()
                    .map(|(m, a)| (c as u32, m.clone(), a.clone())),
            );
        }
        self.normalize(out)
    }

    /// `p - c * m * g`.
    fn sub_scaled(&self, p: &[VTerm], c: &Rational, m: &Monomial, g: &[VTerm]) -> SVec {
        let mut out = Vec::with_capacity(p.len() + g.len());
        let (mut i, mut j) = (0, 0);
        let mut shifted: Option<(u32, Monomial)> = g.first().map(|t| (t.0, t.1.mul(m)));
        while i < p.len() || shifted.is_some() {
            let ord = match (&shifted, p.get(i)) {
                (None, _) => Ordering::Greater,
                (Some(_), None) => Ordering::Less,
                (Some((gc, gm)), Some(pt)) => self.cmp((pt.0, &pt.1), (*gc, gm)),
            };
            match ord {
                Ordering::Greater => {
                    out.push(p[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (gc, gm) = shifted.take().unwrap();
                    out.push((gc, gm, -(c * &g[j].2)));
                    j += 1;
                    shifted = g.get(j).map(|t| (t.0, t.1.mul(m)));
                }
                Ordering::Equal => {
                    let coef = &p[i].2 - c * &g[j].2;
                    if !coef.is_zero() {
                        out.push((p[i].0, p[i].1.clone(), coef));
                    }
                    i += 1;
                    j += 1;
                    shifted = g.get(j).map(|t| (t.0, t.1.mul(m)));
                }
            }
        }
        out
    }

    fn find_reducer<'b>(&self, comp: u32, m: &Monomial, basis: &'b [SVec]) -> Option<&'b SVec> {
        basis.iter().find(|g| g[0].0 == comp && g[0].1.divides(m))
    }

    /// Reduces `p` by `basis` (monic leading terms not required). With `full`, every term
    /// is reduced; otherwise only the leading term.
    pub fn reduce(&self, p: SVec, basis: &[SVec], full: bool) -> SVec {
        let mut p = p;
        let mut start = 0;
        let mut rem: SVec = Vec::new();
        while start < p.len() {
            let (comp, m, coef) = (&p[start].0, &p[start].1, &p[start].2);
            if let Some(g) = self.find_reducer(*comp, m, basis) {
                let q = m.div(&g[0].1).expect("reducer divides");
                let factor = coef / &g[0].2;
                p = self.sub_scaled(&p[start..], &factor, &q, g);
                start = 0;
            } else if full {
                rem.push(p[start].clone());
                start += 1;
            } else {
                return p.split_off(start);
            }
        }
        rem
    }

    fn monic(v: SVec) -> SVec {
        let lc = v[0].2.clone();
        if lc.is_one() {
            return v;
        }
        let inv = lc.recip();
        v.into_iter().map(|(c, m, a)| (c, m, a * &inv)).collect()
    }

    fn spoly(&self, f: &SVec, g: &SVec, lcm: &Monomial) -> SVec {
        let mf = lcm.div(&f[0].1).unwrap();
        let mg = lcm.div(&g[0].1).unwrap();
        let scaled: SVec = f
            .iter()
            .map(|(c, m, a)| (*c, m.mul(&mf), a.clone()))
            .collect();
        self.sub_scaled(&scaled[1..], &Rational::one(), &mg, &g[1..])
    }

    fn update(&self, basis: &[SVec], active: &mut [bool], pairs: &mut Vec<Pair>, t: usize) {
        let h = &basis[t];
        let (hc, hm) = (h[0].0, &h[0].1);
        let candidates: Vec<(usize, Monomial, bool)> = (0..t)
            .filter(|&g| active[g] && basis[g][0].0 == hc)
            .map(|g| {
                let gm = &basis[g][0].1;
                (g, hm.lcm(gm), self.product_criterion && hm.is_coprime(gm))
            })
            .collect();
        let mut kept: Vec<usize> = Vec::new();
        for (idx, (_, l1, coprime)) in candidates.iter().enumerate() {
            let dominated_later = candidates[idx + 1..]
                .iter()
                .any(|(_, l2, _)| l2.divides(l1));
            let dominated_kept = kept.iter().any(|&k| candidates[k].1.divides(l1));
            if *coprime || (!dominated_later && !dominated_kept) {
                kept.push(idx);
            }
        }
        pairs.retain(|p| {
            if p.comp != hc || !hm.divides(&p.lcm) {
                return true;
            }
            let li = hm.lcm(&basis[p.i][0].1);
            let lj = hm.lcm(&basis[p.j][0].1);
            li == p.lcm || lj == p.lcm
        });
        for k in kept {
            let (g, ref l, coprime) = candidates[k];
            if !coprime {
                let degree = self.degree(hc, l);
                pairs.push(Pair {
                    i: g,
                    j: t,
                    comp: hc,
                    lcm: l.clone(),
                    degree,
                });
            }
        }
        for g in 0..t {
            if active[g] && basis[g][0].0 == hc && hm.divides(&basis[g][0].1) {
                active[g] = false;
            }
        }
    }

    fn pop_pair(&self, pairs: &mut Vec<Pair>) -> Option<Pair> {
        if pairs.is_empty() {
            return None;
        }
        let mut best = 0;
        for k in 1..pairs.len() {
            let (a, b) = (&pairs[k], &pairs[best]);
            let ord = a
                .degree
                .cmp(&b.degree)
                .then_with(|| self.cmp((a.comp, &a.lcm), (b.comp, &b.lcm)))
                .then_with(|| (a.j, a.i).cmp(&(b.j, b.i)));
            if ord == Ordering::Less {
                best = k;
            }
        }
        Some(pairs.swap_remove(best))
    }

    /// Reduced Gröbner basis, sorted ascending by leading term.
    pub fn groebner(&self, input: Vec<SVec>) -> Vec<SVec> {
        let mut input: Vec<SVec> = input.into_iter().filter(|v| !v.is_empty()).collect();
        input.sort_by(|a, b| self.cmp((a[0].0, &a[0].1), (b[0].0, &b[0].1)));
        let mut basis: Vec<SVec> = Vec::new();
        let mut active: Vec<bool> = Vec::new();
        let mut pairs: Vec<Pair> = Vec::new();
        for f in input {
            let h = self.reduce(f, &basis, false);
            if h.is_empty() {
                continue;
            }
            basis.push(Self::monic(h));
            active.push(true);
            let t = basis.len() - 1;
            self.update(&basis, &mut active, &mut pairs, t);
        }
        while let Some(pair) = self.pop_pair(&mut pairs) {
            let s = self.spoly(&basis[pair.i], &basis[pair.j], &pair.lcm);
            let h = self.reduce(s, &basis, false);
            if h.is_empty() {
                continue;
            }
            basis.push(Self::monic(h));
            active.push(true);
            let t = basis.len() - 1;
            self.update(&basis, &mut active, &mut pairs, t);
        }
        self.interreduce(basis)
    }

    fn interreduce(&self, basis: Vec<SVec>) -> Vec<SVec> {
        let mut sorted = basis;
        sorted.sort_by(|a, b| self.cmp((a[0].0, &a[0].1), (b[0].0, &b[0].1)));
        let mut minimal: Vec<SVec> = Vec::new();
        for g in sorted {
            if self.find_reducer(g[0].0, &g[0].1, &minimal).is_none() {
                minimal.push(g);
            }
        }
        let mut out = Vec::with_capacity(minimal.len());
        for k in 0..minimal.len() {
            let mut g = minimal[k].clone();
            let tail = g.split_off(1);
            let others: Vec<SVec> = minimal
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != k)
                .map(|(_, v)| v.clone())
                .collect();
            g.extend(self.reduce(tail, &others, true));
            out.push(Self::monic(g));
        }
        out
    }
}

pub(crate) fn to_polynomial(ring: &Ring, v: &SVec) -> Polynomial {
    Polynomial::from_terms(
        ring,
        v.iter().map(|(_, m, c)| (m.clone(), c.clone())).collect(),
    )
}

pub(crate) fn to_vector(ring: &Ring, v: &SVec, rank: usize, offset: u32) -> Vec<Polynomial> {
    let mut parts: Vec<Vec<(Monomial, Rational)>> = (0..rank).map(|_| Vec::new()).collect();
    for (c, m, a) in v {
        parts[(*c - offset) as usize].push((m.clone(), a.clone()));
    }
    parts
        .into_iter()
        .map(|t| Polynomial::from_terms(ring, t))
        .collect()
}

/// Reduced Gröbner basis of the ideal generated by `gens` under `order`.
pub fn reduced_basis(gens: &[Polynomial], order: &MonomialOrder) -> Vec<Polynomial> {
    let engine = Engine::for_ideal(order);
    let input = gens.iter().map(|p| engine.from_polynomial(p, 0)).collect();
    engine
        .groebner(input)
        .iter()
        .map(|v| to_polynomial(&order.ring, v))
        .collect()
}

/// Remainder of `p` modulo a Gröbner basis computed under `order`.
pub fn reduce_polynomial(
    p: &Polynomial,
    basis: &[Polynomial],
    order: &MonomialOrder,
) -> Polynomial {
    let engine = Engine::for_ideal(order);
    let b: Vec<SVec> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| engine.from_polynomial(g, 0))
        .collect();
    to_polynomial(
        &order.ring,
        &engine.reduce(engine.from_polynomial(p, 0), &b, true),
    )
}

/// Checks Buchberger's criterion: every S-polynomial of `basis` reduces to zero.
pub fn is_groebner_basis(basis: &[Polynomial], order: &MonomialOrder) -> bool {
    let engine = Engine::for_ideal(order);
    let b: Vec<SVec> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| engine.from_polynomial(g, 0))
        .collect();
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            let l = b[i][0].1.lcm(&b[j][0].1);
            let s = engine.spoly(&b[i], &b[j], &l);
            if !engine.reduce(s, &b, true).is_empty() {
                return false;
            }
        }
    }
    true
}

/// A graded free module `S(-s_1) ⊕ ... ⊕ S(-s_r)`; elements are coordinate vectors.
#[derive(Clone, Debug)]
pub struct FreeModule {
    pub ring: Ring,
    pub shifts: Vec<u32>,
}

impl FreeModule {
    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    /// Degree of a homogeneous element, `None` for zero; errors if not homogeneous.
    pub fn degree_of(&self, v: &[Polynomial]) -> Result<Option<u32>> {
        let mut deg = None;
        for (c, p) in v.iter().enumerate() {
            if let Some(d) = p.homogeneous_degree()? {
                let total = d + self.shifts[c];
                match deg {
                    None => deg = Some(total),
                    Some(e) if e != total => {
                        return Err(Error::NotHomogeneous {
                            term: alloc::format!("component {c}: {p}"),
                            found: total,
                            expected: e,
                        })
                    }
                    _ => {}
                }
            }
        }
        Ok(deg)
    }

    /// Generators of the module of relations among `columns`, as vectors in
    /// `S^{columns.len()}`. The result is a Gröbner basis of the syzygy module under a
    /// position-over-term order, not necessarily minimal.
    pub fn syzygies(&self, columns: &[Vec<Polynomial>]) -> Result<Vec<Vec<Polynomial>>> {
        let m = self.rank();
        let mut shifts = self.shifts.clone();
        for col in columns {
            shifts.push(self.degree_of(col)?.unwrap_or(0));
        }
        let order = MonomialOrder::grevlex(&self.ring);
        let engine = Engine {
            order: &order,
            shifts: &shifts,
            product_criterion: false,
        };
        let n = self.ring.nvars();
        let input: Vec<SVec> = columns
            .iter()
            .enumerate()
            .map(|(j, col)| {
                let mut v = engine.from_vector(col);
                v.push(((m + j) as u32, Monomial::one(n), Rational::one()));
                engine.normalize(v)
            })
            .collect();
        let gb = engine.groebner(input);
        Ok(gb
            .iter()
            .filter(|v| v[0].0 as usize >= m)
            .map(|v| to_vector(&self.ring, v, columns.len(), m as u32))
            .collect())
    }

    /// Minimal homogeneous generating subset of `elements`, in order of increasing degree
    /// (ties keep input order).
    pub fn minimal_generators(&self, elements: &[Vec<Polynomial>]) -> Result<Vec<Vec<Polynomial>>> {
        Ok(self
            .minimal_generator_indices(elements)?
            .into_iter()
            .map(|k| elements[k].clone())
            .collect())
    }

    /// Indices of a minimal generating subset, see [`FreeModule::minimal_generators`].
    pub fn minimal_generator_indices(&self, elements: &[Vec<Polynomial>]) -> Result<Vec<usize>> {
        let mut graded: Vec<(u32, usize)> = Vec::new();
        for (k, v) in elements.iter().enumerate() {
            if let Some(d) = self.degree_of(v)? {
                graded.push((d, k));
            }
        }
        graded.sort();
        let order = MonomialOrder::grevlex(&self.ring);
        let engine = Engine {
            order: &order,
            shifts: &self.shifts,
            product_criterion: self.rank() == 1,
        };
        let mut kept: Vec<usize> = Vec::new();
        let mut at = 0;
        while at < graded.len() {
            let d = graded[at].0;
            let end = at + graded[at..].iter().take_while(|g| g.0 == d).count();
            let gb = engine.groebner(
                kept.iter()
                    .map(|&k| engine.from_vector(&elements[k]))
                    .collect(),
            );
            let mut keys: BTreeMap<(u32, Monomial), usize> = BTreeMap::new();
            let mut echelon = Echelon::new();
            for &(_, k) in &graded[at..end] {
                let nf = engine.reduce(engine.from_vector(&elements[k]), &gb, true);
                let mut sv: SparseVec = nf
                    .into_iter()
                    .map(|(c, m, a)| {
                        let len = keys.len();
                        (*keys.entry((c, m)).or_insert(len), a)
                    })
                    .collect();
                sv.sort_by_key(|t| t.0);
                if echelon.insert(sv) {
                    kept.push(k);
                }
            }
            at = end;
        }
        Ok(kept)
    }
}
