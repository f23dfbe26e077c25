mod common;

use common::*;
use golod_core::calculus::{
    add_prime_power, check_colon_condition, derivative_ideal, power, saturated_power,
    strongly_golod, zariski_nagata_membership,
};
use golod_core::corpus::{corpus, CorpusEntry};
use golod_core::monomial::MonomialIdeal;
use golod_core::{Ideal, Polynomial};
use proptest::prelude::*;

fn strongly_golod_entries() -> Vec<CorpusEntry> {
    corpus()
        .into_iter()
        .filter(|e| strongly_golod(&e.ideal).unwrap().verdict)
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn derivative_ideal_ignores_generating_set(
        i in homogeneous_ideal(ring3(), 3, 3),
        a in -3i64..=3, b in 1i64..=3, m in poly(ring3(), 2),
    ) {
        prop_assume!(!i.is_unit() && !i.is_zero());
        let gens = i.generators();
        // Replace g_0 by b·g_0 + a·g_1 and append a multiple of g_0 (homogenized by degree).
        let mut other: Vec<Polynomial> = gens.to_vec();
        if gens.len() > 1 && gens[0].homogeneous_degree().unwrap() == gens[1].homogeneous_degree().unwrap() {
            other[0] = &gens[0].scale(&rat(b)) + &gens[1].scale(&rat(a));
            other.push(gens[0].clone());
        }
        let lead = m.leading_monomial().cloned();
        if let Some(mono) = lead {
            other.push(gens[0].mul_monomial(&mono));
        }
        let j = Ideal::new(i.ring(), other).unwrap();
        prop_assert_eq!(&i, &j);
        prop_assert_eq!(derivative_ideal(&i).unwrap(), derivative_ideal(&j).unwrap());
    }

    #[test]
    fn ideal_lies_in_its_derivative_ideal(i in homogeneous_ideal(ring3(), 3, 3)) {
        prop_assume!(!i.is_unit());
        prop_assert!(derivative_ideal(&i).unwrap().contains(&i).unwrap());
    }

    #[test]
    fn powers_of_random_ideals(i in homogeneous_ideal(ring2(), 2, 2)) {
        prop_assume!(!i.is_unit());
        prop_assert!(strongly_golod(&power(&i, 2).unwrap()).unwrap().verdict);
    }
}

/// Pairs of strongly Golod corpus ideals in the same ring.
fn same_ring_pairs(entries: &[CorpusEntry]) -> Vec<(&CorpusEntry, &CorpusEntry)> {
    let mut out = Vec::new();
    for (a, x) in entries.iter().enumerate() {
        for y in &entries[a..] {
            if x.ideal.ring() == y.ideal.ring() {
                out.push((x, y));
            }
        }
    }
    out
}

#[test]
fn intersections_and_products_stay_strongly_golod() {
    let sg = strongly_golod_entries();
    let pairs = same_ring_pairs(&sg);
    assert!(pairs.len() >= 10);
    for (x, y) in pairs {
        let meet = x.ideal.intersect(&y.ideal).unwrap();
        assert!(
            strongly_golod(&meet).unwrap().verdict,
            "{} ∩ {}",
            x.name,
            y.name
        );
        let prod = x.ideal.product(&y.ideal).unwrap();
        assert!(
            strongly_golod(&prod).unwrap().verdict,
            "{} · {}",
            x.name,
            y.name
        );
    }
}

#[test]
fn sums_under_the_derivative_hypothesis() {
    let c = corpus();
    let mut checked = 0;
    for (a, x) in c.iter().enumerate() {
        for y in &c[a..] {
            if x.ideal.ring() != y.ideal.ring() {
                continue;
            }
            let sum = x.ideal.sum(&y.ideal).unwrap();
            if sum.is_unit() {
                continue;
            }
            let dd = derivative_ideal(&x.ideal)
                .unwrap()
                .product(&derivative_ideal(&y.ideal).unwrap())
                .unwrap();
            if sum.contains(&dd).unwrap()
                && strongly_golod(&x.ideal).unwrap().verdict
                && strongly_golod(&y.ideal).unwrap().verdict
            {
                checked += 1;
                assert!(
                    strongly_golod(&sum).unwrap().verdict,
                    "{} + {}",
                    x.name,
                    y.name
                );
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn colons_under_the_colon_condition() {
    let sg = strongly_golod_entries();
    let mut checked = 0;
    for x in &sg {
        let ring = x.ideal.ring();
        let mut candidates = vec![Ideal::maximal(ring)];
        for v in 0..ring.nvars() {
            candidates.push(Ideal::new(ring, vec![Polynomial::var(ring, v)]).unwrap());
        }
        for j in &candidates {
            if check_colon_condition(&x.ideal, j).unwrap() {
                let c = x.ideal.colon(j).unwrap();
                if c.is_unit() {
                    continue;
                }
                checked += 1;
                assert!(strongly_golod(&c).unwrap().verdict, "{} : {}", x.name, j);
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn powers_and_saturated_powers_of_the_corpus() {
    for e in corpus() {
        for k in [2, 3] {
            assert!(
                strongly_golod(&power(&e.ideal, k).unwrap())
                    .unwrap()
                    .verdict,
                "{}^{k}",
                e.name
            );
            let sat = saturated_power(&e.ideal, k).unwrap().ideal;
            if !sat.is_unit() {
                assert!(
                    strongly_golod(&sat).unwrap().verdict,
                    "saturated {}^{k}",
                    e.name
                );
            }
        }
    }
}

#[test]
fn squarefree_symbolic_powers_of_the_corpus() {
    for e in corpus() {
        let Ok(m) = MonomialIdeal::from_ideal(&e.ideal) else {
            continue;
        };
        if !m.is_squarefree() {
            continue;
        }
        for k in [2, 3] {
            let s = m.squarefree_symbolic_power(k).unwrap();
            assert!(s.strongly_golod().unwrap().verdict, "{}^({k})", e.name);
        }
    }
}

/// All variable subsets containing `I`, for a monomial ideal.
fn variable_primes(m: &MonomialIdeal) -> Vec<Vec<usize>> {
    let n = m.ring().nvars();
    (1u32..1 << n)
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect::<Vec<_>>())
        .filter(|p| MonomialIdeal::prime(m.ring(), p).unwrap().contains(m))
        .collect()
}

#[test]
fn prime_power_sums_and_zariski_nagata() {
    for e in strongly_golod_entries() {
        let Ok(m) = MonomialIdeal::from_ideal(&e.ideal) else {
            continue;
        };
        for p in variable_primes(&m) {
            let prime = MonomialIdeal::prime(m.ring(), &p).unwrap().to_ideal();
            for k in [2, 3] {
                let s = add_prime_power(&e.ideal, &prime, k).unwrap();
                assert_eq!(s.derivative_in_prime, Some(true), "{}", e.name);
                assert!(
                    strongly_golod(&s.ideal).unwrap().verdict,
                    "{} + P^{k}",
                    e.name
                );
            }
            for f in e.ideal.generators() {
                assert!(
                    zariski_nagata_membership(f, &prime, 2).unwrap(),
                    "{}",
                    e.name
                );
            }
        }
    }
}

#[test]
fn variable_ideals_are_never_strongly_golod() {
    let r = ring3();
    for vars in [vec![0], vec![1, 2], vec![0, 1, 2]] {
        let i = golod_core::calculus::variable_ideal(&r, &vars);
        assert!(!strongly_golod(&i).unwrap().verdict);
    }
    for e in corpus() {
        if e.ideal
            .generators()
            .iter()
            .all(|g| g.is_monomial() && g.leading_monomial().unwrap().total_degree() == 1)
        {
            assert!(!strongly_golod(&e.ideal).unwrap().verdict, "{}", e.name);
        }
    }
}

#[test]
fn witness_is_reduced_and_nonzero() {
    for e in corpus() {
        let rep = strongly_golod(&e.ideal).unwrap();
        assert_eq!(rep.verdict, rep.witness.is_none());
        if let Some(w) = rep.witness {
            assert!(!w.normal_form.is_zero());
            assert_eq!(
                e.ideal.normal_form(&w.normal_form).unwrap().remainder,
                w.normal_form
            );
            assert_eq!(w.product, &w.left.value * &w.right.value);
        }
    }
}
