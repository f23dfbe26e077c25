//! Exact phase-one simplex with Bland's rule.

use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::ring::Rational;

/// A point `x ≥ 0` with `A x = b`, or `None` if there is none. `a` is row-major `m × n`.
pub(crate) fn feasible_point(
    a: &[Vec<Rational>],
    b: &[Rational],
    n: usize,
) -> Option<Vec<Rational>> {
    let m = a.len();
    let width = n + m;
    // Rows normalized to b ≥ 0, with one artificial column per row.
    let mut t: Vec<Vec<Rational>> = Vec::with_capacity(m);
    let mut rhs: Vec<Rational> = Vec::with_capacity(m);
    for (i, row) in a.iter().enumerate() {
        let neg = b[i].is_negative();
        let mut r: Vec<Rational> = row
            .iter()
            .map(|v| if neg { -v } else { v.clone() })
            .collect();
        r.resize(width, Rational::zero());
        r[n + i] = Rational::from_integer(1.into());
        t.push(r);
        rhs.push(if neg { -&b[i] } else { b[i].clone() });
    }
    let mut basis: Vec<usize> = (n..width).collect();
    let mut cost: Vec<Rational> = alloc::vec![Rational::zero(); width];
    let mut value = Rational::zero();
    for i in 0..m {
        for j in 0..n {
            cost[j] -= &t[i][j];
        }
        value -= &rhs[i];
    }
    while let Some(enter) = (0..width).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &rhs[i] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((l, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*l]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // Phase one is bounded below by zero, so some row always qualifies.
        let (p, _) = leave?;
        let pivot = t[p][enter].clone();
        for v in t[p].iter_mut() {
            *v /= &pivot;
        }
        rhs[p] /= &pivot;
        let prow = t[p].clone();
        let prhs = rhs[p].clone();
        for i in 0..m {
            if i != p && !t[i][enter].is_zero() {
                let f = t[i][enter].clone();
                for (v, w) in t[i].iter_mut().zip(&prow) {
                    *v -= &f * w;
                }
                rhs[i] -= &f * &prhs;
            }
        }
        let f = cost[enter].clone();
        for (v, w) in cost.iter_mut().zip(&prow) {
            *v -= &f * w;
        }
        value -= &f * &prhs;
        basis[p] = enter;
    }
    if !value.is_zero() {
        return None;
    }
    let mut x = alloc::vec![Rational::zero(); n];
    for (i, &j) in basis.iter().enumerate() {
        if j < n {
            x[j] = rhs[i].clone();
        }
    }
    Some(x)
}
