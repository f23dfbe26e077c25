mod common;

use common::*;
use golod_core::{GradingSpec, Polynomial};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(p in poly(ring3(), 4), q in poly(ring3(), 4), r in poly(ring3(), 4)) {
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p * &Polynomial::one(p.ring()), p.clone());
    }

    #[test]
    fn leibniz(p in poly(ring3(), 4), q in poly(ring3(), 4)) {
        for i in 0..3 {
            let lhs = (&p * &q).derivative(i).unwrap();
            let rhs = &(&p * &q.derivative(i).unwrap()) + &(&q * &p.derivative(i).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn euler_relation(d in 0u32..6, p in (0u32..6).prop_flat_map(|d| homogeneous(GradingSpec::new(&["x", "y", "z"], &[1, 2, 3]).unwrap(), d, 5))) {
        let _ = d;
        prop_assert!(p.euler_check().unwrap());
    }

    #[test]
    fn canonical_form_is_idempotent(p in poly(ring3(), 6)) {
        let again = Polynomial::from_terms(p.ring(), p.terms().to_vec());
        prop_assert_eq!(&again, &p);
        prop_assert!(p.terms().iter().all(|t| t.1 != rat(0)));
    }

    #[test]
    fn display_parse_round_trip(p in poly(ring3(), 5)) {
        let back = Polynomial::parse(p.ring(), &p.to_string()).unwrap();
        prop_assert_eq!(back, p);
    }
}

#[test]
fn monomials_of_degree_count() {
    // Stars and bars: C(d + n - 1, n - 1).
    let w = [1, 1, 1, 1];
    for d in 0..8u32 {
        let d64 = d as u64;
        assert_eq!(
            golod_core::Monomial::all_of_degree(&w, d).len() as u64,
            (d64 + 1) * (d64 + 2) * (d64 + 3) / 6
        );
    }
    let weighted = golod_core::Monomial::all_of_degree(&[1, 2], 5);
    assert_eq!(weighted.len(), 3);
}
