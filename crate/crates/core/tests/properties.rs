mod common;

use common::{bigs, ints, zghost, zwitt_add};
use proptest::prelude::*;
use wittlab::json;
use wittlab::ring::{Ring, RingElement};
use wittlab::shifted::ShiftedWittVector;
use wittlab::witt::WittVector;

fn z(p: u32) -> Ring {
    Ring::integers(p).unwrap()
}

fn prime() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![2u32, 3, 5])
}

fn coords(max_len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-1000i64..=1000, 1..=max_len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ghost_round_trip(p in prime(), xs in coords(4)) {
        let v = WittVector::from_ints(&z(p), &xs);
        let g = v.ghost();
        prop_assert_eq!(ints(g.entries()), zghost(p, &bigs(&xs)));
        prop_assert_eq!(WittVector::ghost_solve(&g).unwrap(), v);
    }

    #[test]
    fn addition_matches_reference(p in prime(), xs in coords(3), ys in coords(3)) {
        let n = xs.len().min(ys.len());
        let (xs, ys) = (&xs[..n], &ys[..n]);
        let s = WittVector::from_ints(&z(p), xs).add(&WittVector::from_ints(&z(p), ys)).unwrap();
        prop_assert_eq!(ints(s.components()), zwitt_add(p, &bigs(xs), &bigs(ys)));
    }

    #[test]
    fn frobenius_verschiebung(p in prime(), xs in coords(3)) {
        let v = WittVector::from_ints(&z(p), &xs);
        prop_assert_eq!(v.verschiebung().frobenius().unwrap(), v.mult_pi());
    }

    #[test]
    fn frobenius_is_congruent_to_power(p in prime(), xs in coords(3), ys in coords(3)) {
        // F(x)_0 = x_0^p mod p
        prop_assume!(xs.len() >= 2);
        let v = WittVector::from_ints(&z(p), &xs);
        let f = v.frobenius().unwrap();
        let x0 = v.component(0).clone();
        prop_assert!(f.component(0).congruent_mod_pi_pow(&x0.pow(p as u64), 1));
        let _ = ys;
    }

    #[test]
    fn element_json_round_trip(a in -10i64.pow(12)..10i64.pow(12), b in -1000i64..1000) {
        let r = Ring::over_order(5, &[-5, 0, 1]).unwrap();
        let x = &RingElement::from_int(&r, a) + &RingElement::pi(&r).mul_int(b);
        let big = x.pow(7);
        prop_assert_eq!(json::element_from_json(&r, &json::element_to_json(&big)).unwrap(), big);
    }

    #[test]
    fn shifted_json_round_trip(head in coords(3), tail in coords(3)) {
        let v = ShiftedWittVector::from_ints(&z(3), &z(3), &head, &tail).unwrap();
        let back = json::shifted_from_json(&z(3), &z(3), &json::shifted_to_json(&v)).unwrap();
        prop_assert_eq!(back, v);
    }

    #[test]
    fn shift_includes_as_frobenius(head in coords(3), tail in coords(2)) {
        prop_assume!(head.len() >= 2);
        let v = ShiftedWittVector::from_ints(&z(2), &z(2), &head, &tail).unwrap();
        prop_assert_eq!(v.shift_e().unwrap().include(), v.include().frobenius().unwrap());
    }
}
