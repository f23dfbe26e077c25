//! Finite simple graphs, their vertex cover ideals, and the odd cycle checks.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::transversal;
use super::MonomialIdeal;
use crate::error::{Error, Result};
use crate::ring::{GradingSpec, Monomial, Ring};

/// Simple graph on vertices `0..n`, edges stored as sorted pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > 64 {
            return Err(Error::InvalidArgument(alloc::format!(
                "at most 64 vertices supported, got {n}"
            )));
        }
        let mut set = BTreeSet::new();
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidArgument(alloc::format!(
                    "edge {{{a}, {b}}} outside [0, {n})"
                )));
            }
            if a == b {
                return Err(Error::InvalidArgument(alloc::format!("loop at vertex {a}")));
            }
            if !set.insert((a.min(b), a.max(b))) {
                return Err(Error::InvalidArgument(alloc::format!(
                    "repeated edge {{{a}, {b}}}"
                )));
            }
        }
        Ok(Graph {
            n,
            edges: set.into_iter().collect(),
        })
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument(alloc::format!(
                "a cycle needs at least 3 vertices, got {n}"
            )));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::new(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::new(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        Self::new(n, &edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_bipartite(&self) -> bool {
        let mut color: Vec<Option<bool>> = alloc::vec![None; self.n];
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut stack = alloc::vec![s];
            while let Some(v) = stack.pop() {
                let c = color[v].unwrap();
                for &(a, b) in &self.edges {
                    let w = if a == v {
                        b
                    } else if b == v {
                        a
                    } else {
                        continue;
                    };
                    match color[w] {
                        None => {
                            color[w] = Some(!c);
                            stack.push(w);
                        }
                        Some(d) if d == c => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    /// Minimal vertex covers as sorted vertex lists.
    pub fn minimal_vertex_covers(&self) -> Vec<Vec<usize>> {
        let family: Vec<u64> = self
            .edges
            .iter()
            .map(|&(a, b)| transversal::mask(&[a, b]))
            .collect();
        transversal::minimal_transversals(&family)
            .into_iter()
            .map(transversal::members)
            .collect()
    }

    fn check_ring(&self, ring: &Ring) -> Result<()> {
        if ring.nvars() != self.n {
            return Err(Error::InvalidArgument(alloc::format!(
                "graph has {} vertices but the ring has {} variables",
                self.n,
                ring.nvars()
            )));
        }
        Ok(())
    }

    /// Generated by `∏_{i∈C} x_i` over the minimal vertex covers `C`.
    pub fn vertex_cover_ideal(&self, ring: &Ring) -> Result<MonomialIdeal> {
        self.check_ring(ring)?;
        if self.edges.is_empty() {
            return Err(Error::ImproperIdeal);
        }
        let gens = self
            .minimal_vertex_covers()
            .iter()
            .map(|c| indicator(self.n, c))
            .collect();
        MonomialIdeal::new(ring, gens)
    }

    /// `∩_{{i,j}∈E} (x_i, x_j)`, the other description of the cover ideal.
    pub fn edge_intersection(&self, ring: &Ring) -> Result<MonomialIdeal> {
        self.check_ring(ring)?;
        if self.edges.is_empty() {
            return Err(Error::ImproperIdeal);
        }
        let mut acc = MonomialIdeal::unit(ring);
        for &(a, b) in &self.edges {
            acc = acc.intersect(&MonomialIdeal::prime(ring, &[a, b])?);
        }
        Ok(acc)
    }

    /// `I^(k) = ∩_{{i,j}∈E} (x_i, x_j)^k`.
    pub fn cover_symbolic_power(&self, ring: &Ring, k: usize) -> Result<MonomialIdeal> {
        self.check_ring(ring)?;
        if self.edges.is_empty() {
            return Err(Error::ImproperIdeal);
        }
        let mut acc = MonomialIdeal::unit(ring);
        for &(a, b) in &self.edges {
            acc = acc.intersect(&MonomialIdeal::prime(ring, &[a, b])?.power(k)?);
        }
        Ok(acc)
    }
}

fn indicator(n: usize, vars: &[usize]) -> Monomial {
    let mut m = Monomial::one(n);
    for &i in vars {
        m.exponents_mut()[i] = 1;
    }
    m
}

/// Outcome of the checks on the cover ideal `I` of the cycle `C_n`, `n` odd.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddCycleReport {
    pub n: usize,
    pub generator_count: usize,
    /// Minimal covers agree with the intersection of the edge primes.
    pub cover_matches_edge_intersection: bool,
    /// Each rotation `x_i x_{i+2} ⋯ x_{i+n-1}` (indices mod `n`) is a minimal generator.
    pub rotations_are_generators: bool,
    /// `I^(2) = I² + (x_1⋯x_n)`.
    pub symbolic_square_formula: bool,
    /// `(I^(2))² ⊆ I³`.
    pub square_containment: bool,
    /// `(k, (I^(k-1))² ⊆ I^k)` for `k = 2..=max_k`.
    pub power_containments: Vec<(usize, bool)>,
    /// `I^(4) ⊆ I²`.
    pub els_containment: bool,
}

impl OddCycleReport {
    /// Whether every required check holds. The rotation check is informational.
    pub fn all_pass(&self) -> bool {
        self.cover_matches_edge_intersection
            && self.symbolic_square_formula
            && self.square_containment
            && self.power_containments.iter().all(|p| p.1)
            && self.els_containment
    }
}

pub const ODD_CYCLE_MAX_K: usize = 4;

pub fn odd_cycle_suite(n: usize) -> Result<OddCycleReport> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::InvalidArgument(alloc::format!(
            "odd cycle length must be odd and at least 3, got {n}"
        )));
    }
    let ring = GradingSpec::indexed(n);
    let g = Graph::cycle(n)?;
    let ideal = g.vertex_cover_ideal(&ring)?;
    let cover_matches_edge_intersection = g.edge_intersection(&ring)? == ideal;
    let rotations_are_generators = (0..n).all(|i| {
        let vars: Vec<usize> = (0..(n + 1) / 2).map(|j| (i + 2 * j) % n).collect();
        ideal.generators().contains(&indicator(n, &vars))
    });
    let mut symbolic = alloc::vec![ideal.clone()];
    for k in 2..=ODD_CYCLE_MAX_K {
        symbolic.push(g.cover_symbolic_power(&ring, k)?);
    }
    let u = MonomialIdeal::new(
        &ring,
        alloc::vec![Monomial::from_exponents(&alloc::vec![1; n])],
    )?;
    let ideal2 = ideal.power(2)?;
    let symbolic_square_formula = symbolic[1] == ideal2.sum(&u);
    let square_containment = ideal.power(3)?.contains(&symbolic[1].power(2)?);
    let mut power_containments = Vec::new();
    for k in 2..=ODD_CYCLE_MAX_K {
        power_containments.push((k, ideal.power(k)?.contains(&symbolic[k - 2].power(2)?)));
    }
    let els_containment = ideal2.contains(&symbolic[3]);
    Ok(OddCycleReport {
        n,
        generator_count: ideal.generators().len(),
        cover_matches_edge_intersection,
        rotations_are_generators,
        symbolic_square_formula,
        square_containment,
        power_containments,
        els_containment,
    })
}

/// `I_{n,d}`: all squarefree monomials of degree `d` in `x1..xn`.
pub fn squarefree_generated_ideal(n: usize, d: usize) -> Result<MonomialIdeal> {
    if d == 0 || d > n {
        return Err(Error::InvalidArgument(alloc::format!(
            "need 0 < d <= n, got n = {n}, d = {d}"
        )));
    }
    if n > 64 {
        return Err(Error::InvalidArgument(alloc::format!(
            "at most 64 variables supported, got {n}"
        )));
    }
    let ring = GradingSpec::indexed(n);
    let gens = (0u64..1 << n)
        .filter(|s| s.count_ones() as usize == d)
        .map(|s| indicator(n, &transversal::members(s)))
        .collect();
    MonomialIdeal::new(&ring, gens)
}

/// For `u = x_1⋯x_{d+1}`: `u ∈ I^(2)` and `u² ∉ I³`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeGapReport {
    pub u_in_symbolic_square: bool,
    pub u_squared_in_cube: bool,
}

pub fn degree_gap_check(n: usize, d: usize) -> Result<DegreeGapReport> {
    if !(2 < d && d < n) {
        return Err(Error::InvalidArgument(alloc::format!(
            "need 2 < d < n, got n = {n}, d = {d}"
        )));
    }
    let ideal = squarefree_generated_ideal(n, d)?;
    let u = indicator(n, &(0..=d).collect::<Vec<_>>());
    Ok(DegreeGapReport {
        u_in_symbolic_square: ideal.squarefree_symbolic_power(2)?.contains_monomial(&u),
        u_squared_in_cube: ideal.power(3)?.contains_monomial(&u.pow(2)),
    })
}

/// A graph together with the outcome of `(I^(2))² ⊆ I³` for its cover ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphSearchEntry {
    pub graph: Graph,
    pub holds: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GraphSearchReport {
    pub graphs_checked: usize,
    pub failures: Vec<GraphSearchEntry>,
}

/// Exhaustive check of `(I^(2))² ⊆ I³` over all non-bipartite graphs without isolated
/// vertices on `3..=max_vertices` vertices. Reports counterexamples, if any.
pub fn graph_search(max_vertices: usize) -> Result<GraphSearchReport> {
    if max_vertices > 6 {
        return Err(Error::InvalidArgument(alloc::format!(
            "graph search is limited to 6 vertices, got {max_vertices}"
        )));
    }
    let mut report = GraphSearchReport::default();
    for n in 3..=max_vertices {
        let ring = GradingSpec::indexed(n);
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        for bits in 1u64..1 << pairs.len() {
            let edges: Vec<_> = transversal::members(bits)
                .into_iter()
                .map(|e| pairs[e])
                .collect();
            let mut covered = 0u64;
            for &(a, b) in &edges {
                covered |= 1 << a | 1 << b;
            }
            if covered.count_ones() as usize != n {
                continue;
            }
            let g = Graph::new(n, &edges)?;
            if g.is_bipartite() {
                continue;
            }
            let ideal = g.vertex_cover_ideal(&ring)?;
            let holds = ideal
                .power(3)?
                .contains(&g.cover_symbolic_power(&ring, 2)?.power(2)?);
            report.graphs_checked += 1;
            if !holds {
                report.failures.push(GraphSearchEntry { graph: g, holds });
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exps(i: &MonomialIdeal) -> Vec<Vec<u32>> {
        let mut v: Vec<Vec<u32>> = i
            .generators()
            .iter()
            .map(|g| g.exponents().to_vec())
            .collect();
        v.sort();
        v
    }

    #[test]
    fn cover_ideals() {
        let r3 = GradingSpec::indexed(3);
        let t = Graph::cycle(3).unwrap().vertex_cover_ideal(&r3).unwrap();
        assert_eq!(
            exps(&t),
            alloc::vec![
                alloc::vec![0, 1, 1],
                alloc::vec![1, 0, 1],
                alloc::vec![1, 1, 0]
            ]
        );
        let r2 = GradingSpec::indexed(2);
        let e = Graph::new(2, &[(0, 1)])
            .unwrap()
            .vertex_cover_ideal(&r2)
            .unwrap();
        assert_eq!(exps(&e), alloc::vec![alloc::vec![0, 1], alloc::vec![1, 0]]);
        let p = Graph::path(3).unwrap().vertex_cover_ideal(&r3).unwrap();
        assert_eq!(
            exps(&p),
            alloc::vec![alloc::vec![0, 1, 0], alloc::vec![1, 0, 1]]
        );
        assert_eq!(
            Graph::new(3, &[])
                .unwrap()
                .vertex_cover_ideal(&r3)
                .unwrap_err(),
            Error::ImproperIdeal
        );
        for g in [
            Graph::cycle(5).unwrap(),
            Graph::complete(4).unwrap(),
            Graph::path(5).unwrap(),
        ] {
            let r = GradingSpec::indexed(g.vertex_count());
            assert_eq!(
                g.vertex_cover_ideal(&r).unwrap(),
                g.edge_intersection(&r).unwrap()
            );
        }
    }

    #[test]
    fn graph_validation() {
        assert!(Graph::new(3, &[(0, 0)]).is_err());
        assert!(Graph::new(3, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(3, &[(0, 3)]).is_err());
        assert!(Graph::cycle(4).unwrap().is_bipartite());
        assert!(!Graph::cycle(5).unwrap().is_bipartite());
    }

    #[test]
    fn odd_cycles() {
        for n in [3, 5, 7] {
            let rep = odd_cycle_suite(n).unwrap();
            assert!(rep.all_pass(), "{rep:?}");
            assert!(rep.rotations_are_generators);
        }
        assert!(odd_cycle_suite(4).is_err());
        assert!(odd_cycle_suite(1).is_err());
    }

    #[test]
    fn squarefree_generated() {
        assert_eq!(
            squarefree_generated_ideal(4, 3).unwrap().generators().len(),
            4
        );
        assert_eq!(
            squarefree_generated_ideal(3, 3).unwrap().generators().len(),
            1
        );
        assert_eq!(
            squarefree_generated_ideal(5, 3).unwrap().generators().len(),
            10
        );
        assert!(squarefree_generated_ideal(3, 4).is_err());
        let gap = degree_gap_check(4, 3).unwrap();
        assert!(gap.u_in_symbolic_square && !gap.u_squared_in_cube);
    }

    #[test]
    fn small_graph_search() {
        let rep = graph_search(4).unwrap();
        // Triangle; triangle plus pendant edge (3 labelings), K4 minus an edge (6), K4.
        assert_eq!(rep.graphs_checked, 1 + 12 + 6 + 1);
    }
}
