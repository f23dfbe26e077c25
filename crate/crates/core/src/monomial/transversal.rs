//! Minimal transversals (minimal hitting sets) of a family of finite sets, as bitmasks.

use alloc::vec::Vec;

pub(crate) fn mask(members: &[usize]) -> u64 {
    members.iter().fold(0, |m, &i| m | (1u64 << i))
}

pub(crate) fn members(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

fn minimize(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_by_key(|s| (s.count_ones(), *s));
    sets.dedup();
    let mut out: Vec<u64> = Vec::new();
    for s in sets {
        if !out.iter().any(|t| t & s == *t) {
            out.push(s);
        }
    }
    out
}

/// Berge's algorithm: extend the transversals of the first `k` sets to the first `k + 1`.
/// An empty set in the family has no transversal; an empty family has only `∅`.
pub(crate) fn minimal_transversals(family: &[u64]) -> Vec<u64> {
    let family = minimize(family.to_vec());
    let mut current: Vec<u64> = alloc::vec![0];
    for &e in &family {
        let mut next = Vec::new();
        for &t in &current {
            if t & e != 0 {
                next.push(t);
            } else {
                let mut bits = e;
                while bits != 0 {
                    let b = bits & bits.wrapping_neg();
                    next.push(t | b);
                    bits &= bits - 1;
                }
            }
        }
        current = minimize(next);
    }
    current.sort();
    current
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute force over all subsets of the ground set.
    fn oracle(family: &[u64], n: usize) -> Vec<u64> {
        let hits = |t: u64| family.iter().all(|&e| t & e != 0);
        let mut out: Vec<u64> = (0..1u64 << n)
            .filter(|&t| hits(t) && members(t).iter().all(|&i| !hits(t & !(1 << i))))
            .collect();
        out.sort();
        out
    }

    #[test]
    fn matches_brute_force() {
        let triangle = [0b011, 0b110, 0b101];
        assert_eq!(
            minimal_transversals(&triangle),
            alloc::vec![0b011, 0b101, 0b110]
        );
        let families: [&[u64]; 4] = [
            &[0b0011, 0b0110, 0b1100, 0b1001],
            &[0b111],
            &[0b01, 0b01],
            &[0b1010, 0b0111, 0b1100],
        ];
        for f in families {
            assert_eq!(minimal_transversals(f), oracle(f, 4));
        }
        assert!(minimal_transversals(&[0]).is_empty());
        assert_eq!(minimal_transversals(&[]), alloc::vec![0]);
    }
}
