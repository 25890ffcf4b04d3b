mod common;

use std::sync::Arc;

use common::{big, bigs, ints, zghost, zsolve};
use num_bigint::BigInt;
use num_integer::Integer;
use wittlab::kernel::{group_difference, psi_map, FormalGroupLaw, KernelPoint, PsiPolicy};
use wittlab::ring::{Ring, RingElement};
use wittlab::witt::WittVector;
use wittlab::Error;

fn z(p: u32) -> Ring {
    Ring::integers(p).unwrap()
}

/// Multiplicative kernel addition through ghost components.
fn gm_add_reference(p: u32, m: usize, a: &[i64], b: &[i64]) -> Vec<BigInt> {
    let pad = |t: &[i64]| {
        let mut v = vec![BigInt::from(0); m + 1];
        v.extend(bigs(t));
        zghost(p, &v)
    };
    let (ga, gb) = (pad(a), pad(b));
    let g: Vec<BigInt> = ga.iter().zip(&gb).map(|(x, y)| x + y + x * y).collect();
    zsolve(p, &g).unwrap()[m + 1..].to_vec()
}

#[test]
fn multiplicative_addition_matches_reference() {
    for (p, m, a, b) in [(2, 0, vec![3], vec![8]), (2, 1, vec![3, 1], vec![-2, 5]), (3, 0, vec![1, 4], vec![2, -1])] {
        let gm = Arc::new(FormalGroupLaw::multiplicative(z(p).order()));
        let x = KernelPoint::from_ints(&gm, &z(p), &z(p), m, &a).unwrap();
        let y = KernelPoint::from_ints(&gm, &z(p), &z(p), m, &b).unwrap();
        assert_eq!(ints(x.add(&y).unwrap().coords()), gm_add_reference(p, m, &a, &b));
    }
}

#[test]
fn embedding_and_zero() {
    let ga = Arc::new(FormalGroupLaw::additive(z(2).order()));
    let t = KernelPoint::from_ints(&ga, &z(2), &z(2), 1, &[4, 9]).unwrap();
    let e = t.embed();
    assert_eq!((ints(e.head()), ints(e.tail())), (bigs(&[0, 0]), bigs(&[4, 9])));
    let zero = KernelPoint::zero(&ga, &z(2), &z(2), 1, 2).unwrap();
    assert_eq!(t.add(&zero).unwrap(), t);
}

#[test]
fn difference_character_sample() {
    let ga = Arc::new(FormalGroupLaw::additive(z(2).order()));
    for t1 in [0, 1, -17, 400] {
        let t = KernelPoint::from_ints(&ga, &z(2), &z(2), 0, &[1, t1]).unwrap();
        assert_eq!(ints(t.difference_character().unwrap().components()), bigs(&[2, -2]));
    }
    let short = KernelPoint::from_ints(&ga, &z(2), &z(2), 0, &[1]).unwrap();
    assert!(short.difference_character().is_err());
}

#[test]
fn additive_difference_is_witt_subtraction() {
    let ga = FormalGroupLaw::additive(z(3).order());
    let a = WittVector::from_ints(&z(3), &[0, 4, 2]);
    let b = WittVector::from_ints(&z(3), &[0, 1, -5]);
    assert_eq!(group_difference(&ga, &a, &b).unwrap(), a.sub(&b).unwrap());
}

#[test]
fn psi_matches_series_reference() {
    // Psi^[1](t) = sum_k (-1)^(k+1) 5^(2(k-1)) t^k / k modulo 5^6
    let modulus = BigInt::from(5).pow(6);
    let r = z(5);
    let gm = FormalGroupLaw::multiplicative(r.order());
    for t in [1i64, 2, 7, -3] {
        let mut want = BigInt::from(0);
        for k in 1..=20u32 {
            let mut num = BigInt::from(5).pow(2 * (k - 1)) * big(t).pow(k);
            let mut den = BigInt::from(k);
            while den.is_multiple_of(&BigInt::from(5)) {
                den /= 5;
                num /= 5;
            }
            let term = num * den.modinv(&modulus).unwrap();
            want += if k % 2 == 1 { term } else { -term };
        }
        let got = psi_map(&gm, 1, &RingElement::from_int(&r, t), Some(6), PsiPolicy::Strict).unwrap();
        assert_eq!(got.as_integer().unwrap(), want.mod_floor(&modulus));
    }
}

#[test]
fn psi_refusals() {
    let r = z(2);
    let gm = FormalGroupLaw::multiplicative(r.order());
    let one = RingElement::from_int(&r, 1);
    let err = psi_map(&gm, 0, &one, Some(6), PsiPolicy::Strict).unwrap_err();
    assert_eq!(err.to_string(), "logarithm coefficients are not integral: e ≤ p−2 violated");
    let five = z(5);
    let gm5 = FormalGroupLaw::multiplicative(five.order());
    let x = RingElement::from_int(&five, 1);
    assert!(matches!(psi_map(&gm5, 1, &x, None, PsiPolicy::Strict), Err(Error::PrecisionRequired(_))));
}

#[test]
fn phi_and_projection() {
    let ga = Arc::new(FormalGroupLaw::additive(z(2).order()));
    let t = KernelPoint::from_ints(&ga, &z(2), &z(2), 1, &[7, 3]).unwrap();
    let phi = t.phi_map().unwrap();
    assert_eq!(phi.m(), 0);
    // F iota_m = iota_(m-1) Phi_[m] in W
    assert_eq!(t.embed_witt().frobenius().unwrap(), phi.embed_witt());
    let u = t.project(1).unwrap();
    assert_eq!(ints(u.coords()), bigs(&[7]));
    assert!(matches!(t.project(5), Err(Error::BadLength(_))));
    let s = u.section(3).unwrap();
    assert_eq!(ints(s.coords()), bigs(&[7, 0, 0]));
}

#[test]
fn custom_law_validation() {
    let o = z(5);
    let ok = r#"{"degree": 2, "polynomial": true, "coeffs": [{"i":1,"j":0,"c":1},{"i":0,"j":1,"c":1},{"i":1,"j":1,"c":3}]}"#;
    assert!(FormalGroupLaw::from_json(o.order(), "g", ok).is_ok());
    let bad = r#"{"degree": 3, "polynomial": true, "coeffs": [{"i":1,"j":0,"c":1},{"i":0,"j":1,"c":1},{"i":2,"j":1,"c":1}]}"#;
    assert!(matches!(FormalGroupLaw::from_json(o.order(), "g", bad), Err(Error::NotCommutative(_))));
    let nonunital = r#"{"degree": 2, "polynomial": true, "coeffs": [{"i":1,"j":0,"c":2},{"i":0,"j":1,"c":1}]}"#;
    assert!(matches!(FormalGroupLaw::from_json(o.order(), "g", nonunital), Err(Error::NotUnital(_))));
}
