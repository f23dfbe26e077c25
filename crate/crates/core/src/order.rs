//! Monomial orders.

use core::cmp::Ordering;
use core::ops::Range;

use crate::ring::{Monomial, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderKind {
    /// Weighted degree first, reverse lexicographic tiebreak.
    WeightedGrevlex,
    /// The first `k` variables form a block compared before the rest; each block is
    /// ordered by weighted grevlex. Eliminates the first `k` variables.
    BlockElimination(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub ring: Ring,
}

impl MonomialOrder {
    pub fn grevlex(ring: &Ring) -> Self {
        MonomialOrder {
            kind: OrderKind::WeightedGrevlex,
            ring: ring.clone(),
        }
    }

    pub fn elimination(ring: &Ring, k: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::BlockElimination(k),
            ring: ring.clone(),
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let w = self.ring.weights();
        match self.kind {
            OrderKind::WeightedGrevlex => grevlex_block(a, b, w, 0..w.len()),
            OrderKind::BlockElimination(k) => {
                let k = k.min(w.len());
                grevlex_block(a, b, w, 0..k).then_with(|| grevlex_block(a, b, w, k..w.len()))
            }
        }
    }
}

/// Weighted grevlex restricted to the variables in `range`.
pub(crate) fn grevlex_block(
    a: &Monomial,
    b: &Monomial,
    w: &[u32],
    range: Range<usize>,
) -> Ordering {
    let (ea, eb) = (a.exponents(), b.exponents());
    let mut da = 0u64;
    let mut db = 0u64;
    for i in range.clone() {
        da += u64::from(w[i]) * u64::from(ea[i]);
        db += u64::from(w[i]) * u64::from(eb[i]);
    }
    if da != db {
        return da.cmp(&db);
    }
    for i in range.rev() {
        if ea[i] != eb[i] {
            return eb[i].cmp(&ea[i]);
        }
    }
    Ordering::Equal
}

/// The default term order of a ring: weighted grevlex over all variables.
pub(crate) fn grevlex(a: &Monomial, b: &Monomial, w: &[u32]) -> Ordering {
    grevlex_block(a, b, w, 0..w.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::GradingSpec;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn grevlex_refines_weighted_degree() {
        let ring = GradingSpec::new(&["x", "y"], &[2, 1]).unwrap();
        let ord = MonomialOrder::grevlex(&ring);
        // x has degree 2, y has degree 1
        assert_eq!(ord.cmp(&m(&[1, 0]), &m(&[0, 1])), Ordering::Greater);
        // x and y^2 tie on degree; revlex: smaller power of last variable wins
        assert_eq!(ord.cmp(&m(&[1, 0]), &m(&[0, 2])), Ordering::Greater);
    }

    #[test]
    fn revlex_tiebreak() {
        let ring = GradingSpec::standard(&["x", "y", "z"]);
        let ord = MonomialOrder::grevlex(&ring);
        // x*z < y^2 in grevlex
        assert_eq!(ord.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(ord.cmp(&m(&[2, 0, 0]), &m(&[1, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn elimination_puts_first_block_first() {
        let ring = GradingSpec::standard(&["t", "x", "y"]);
        let ord = MonomialOrder::elimination(&ring, 1);
        assert_eq!(ord.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[1, 1, 0]), &m(&[1, 0, 1])), Ordering::Greater);
    }
}
