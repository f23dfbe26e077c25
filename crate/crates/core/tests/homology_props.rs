mod common;

use common::*;
use golod_core::calculus::strongly_golod;
use golod_core::corpus::corpus;
use golod_core::koszul::{
    koszul_homology, koszul_homology_of, trivial_multiplication_check, KoszulComplex,
};
use golod_core::linalg;
use golod_core::poincare::{
    actual_poincare, golod_verdict, minimal_presentation, serre_bound_series, serre_bound_totals,
    GolodStatus, SeriesBounds,
};
use golod_core::quotient::GradedQuotient;
use golod_core::resolution::minimal_free_resolution;
use golod_core::Ideal;
use proptest::prelude::*;

fn wedge_degree(mask: u64, w: &[u32]) -> u32 {
    (0..w.len())
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| w[i])
        .sum()
}

#[test]
fn differential_squares_to_zero_and_strand_dimensions() {
    for e in corpus() {
        let k = KoszulComplex::new(&e.ideal).unwrap();
        let ring = e.ideal.ring();
        let n = ring.nvars();
        let q = GradedQuotient::new(&e.ideal).unwrap();
        for d in 0..=6u32 {
            for l in 0..=n {
                let expected: usize = (0u64..1 << n)
                    .filter(|m| m.count_ones() as usize == l)
                    .filter_map(|m| d.checked_sub(wedge_degree(m, ring.weights())))
                    .map(|r| q.dim(r))
                    .sum();
                assert_eq!(k.dim(l, d), expected, "{} ({l},{d})", e.name);
                if l >= 2 {
                    let lower = k.differential(l - 1, d);
                    for c in k.differential(l, d) {
                        assert!(linalg::apply(&lower, &c).is_empty(), "{} ({l},{d})", e.name);
                    }
                }
            }
        }
    }
}

#[test]
fn betti_numbers_equal_koszul_homology() {
    for e in corpus() {
        let res = minimal_free_resolution(&e.ideal).unwrap();
        let h = koszul_homology(&e.ideal, None).unwrap();
        assert!(!h.truncated, "{}", e.name);
        let betti = res.betti_table();
        assert_eq!(betti.entries(), &h.dims(), "{}", e.name);
        for (l, &b) in res.ranks().iter().enumerate() {
            assert_eq!(h.total(l), b, "{}", e.name);
        }
    }
}

#[test]
fn resolutions_are_certified() {
    for e in corpus() {
        let res = minimal_free_resolution(&e.ideal).unwrap();
        assert!(res.is_complex() && res.is_minimal(), "{}", e.name);
        assert!(res.length() <= e.ideal.ring().nvars());
        assert_eq!(res.betti_table().get(0, 0), 1);
        assert!(
            res.exactness_certificate(res.default_certificate_bound())
                .is_exact(),
            "{}",
            e.name
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn betti_numbers_ignore_generator_order(i in homogeneous_ideal(ring3(), 3, 2), rot in 0usize..3) {
        prop_assume!(!i.is_unit() && !i.is_zero());
        let mut gens = i.generators().to_vec();
        gens.reverse();
        let r = rot % gens.len();
        gens.rotate_left(r);
        let j = Ideal::new(i.ring(), gens).unwrap();
        let a = minimal_free_resolution(&i).unwrap().betti_table();
        let b = minimal_free_resolution(&j).unwrap().betti_table();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn random_betti_equals_koszul(i in homogeneous_ideal(ring3(), 3, 2)) {
        prop_assume!(!i.is_unit() && !i.is_zero());
        let res = minimal_free_resolution(&i).unwrap();
        prop_assert!(res.exactness_certificate(res.default_certificate_bound()).is_exact());
        let h = koszul_homology(&i, None).unwrap();
        let betti = res.betti_table();
        prop_assert_eq!(betti.entries(), &h.dims());
    }
}

#[test]
fn cycles_times_boundaries_are_boundaries() {
    for e in corpus().into_iter().take(12) {
        let k = KoszulComplex::new(&e.ideal).unwrap();
        let bounds = golod_core::koszul::KoszulBounds::default_for(&e.ideal).unwrap();
        let h = koszul_homology_of(&k, bounds.clone());
        for ((l1, d1), s) in &h.strands {
            if *l1 == 0 {
                continue;
            }
            for z in s.representatives.iter().take(2) {
                for ((l2, d2), _) in &h.strands {
                    let (l, d) = (l1 + l2, d1 + d2);
                    if *l2 == 0 || l > bounds.l_max || d > bounds.d_max {
                        continue;
                    }
                    for b in k.differential(l2 + 1, *d2).iter().take(3) {
                        let p = k.product((*l1, *d1, z), (*l2, *d2, b));
                        assert!(
                            h.strands[&(l, d)].boundaries.contains(&p),
                            "{} ({l1},{d1})x({l2},{d2})",
                            e.name
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn serre_inequality_and_totals() {
    for e in corpus() {
        let bounds = SeriesBounds { i_max: 3, d_max: 8 };
        let bound = serre_bound_series(&e.ideal, bounds.clone()).unwrap().series;
        let actual = actual_poincare(&e.ideal, bounds.clone()).unwrap().series;
        assert_eq!(bound.get(0, 0), 1);
        assert_eq!(actual.get(0, 0), 1);
        for (&(i, d), &c) in actual.coefficients() {
            assert!(c <= bound.get(i, d), "{} at ({i},{d})", e.name);
        }
        // Setting u = 1 recovers the single-variable bound when the window is wide enough.
        let Some(p) = minimal_presentation(&e.ideal).unwrap() else {
            continue;
        };
        let res = minimal_free_resolution(&p).unwrap();
        let wide = SeriesBounds {
            i_max: 3,
            d_max: 3 * (res.max_shift() + p.ring().max_weight()),
        };
        let series = serre_bound_series(&p, wide).unwrap().series;
        let totals = serre_bound_totals(p.ring().nvars(), &res.ranks(), 3).unwrap();
        assert_eq!(series.totals(), totals, "{}", e.name);
    }
}

#[test]
fn strongly_golod_corpus_ideals_are_golod() {
    for e in corpus() {
        let sg = strongly_golod(&e.ideal).unwrap().verdict;
        let tm = trivial_multiplication_check(&e.ideal, None).unwrap();
        let v = golod_verdict(&e.ideal, None).unwrap();
        if sg {
            assert!(tm.verdict, "{}", e.name);
            assert_eq!(v.status, GolodStatus::Golod, "{}", e.name);
        }
        if v.status == GolodStatus::NotGolod {
            let w = v.first_discrepancy.unwrap();
            assert!(w.actual < w.bound);
        }
    }
}

#[test]
fn complete_intersection_control_fails_both_tests() {
    let e = golod_core::corpus::corpus_entry("ci-control").unwrap();
    assert!(
        !trivial_multiplication_check(&e.ideal, None)
            .unwrap()
            .verdict
    );
    assert_eq!(
        golod_verdict(&e.ideal, None).unwrap().status,
        GolodStatus::NotGolod
    );
}
