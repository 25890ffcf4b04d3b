//! Independent reference arithmetic for tests: Witt polynomials computed
//! directly with big integers over Z and over Z[x]/(x^2 - 5).

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};
use wittlab::ring::RingElement;

pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

/// `w_i = sum_j p^j x_j^(p^(i-j))` over Z.
pub fn zghost(p: u32, xs: &[BigInt]) -> Vec<BigInt> {
    (0..xs.len())
        .map(|i| {
            (0..=i)
                .map(|j| BigInt::from(p).pow(j as u32) * xs[j].pow(p.pow((i - j) as u32)))
                .sum()
        })
        .collect()
}

/// Triangular inversion of [`zghost`]; `None` when some division fails.
pub fn zsolve(p: u32, ws: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut xs: Vec<BigInt> = Vec::new();
    for (i, w) in ws.iter().enumerate() {
        let mut rest = w.clone();
        for (j, x) in xs.iter().enumerate() {
            rest -= BigInt::from(p).pow(j as u32) * x.pow(p.pow((i - j) as u32));
        }
        let d = BigInt::from(p).pow(i as u32);
        if !(&rest % &d).is_zero() {
            return None;
        }
        xs.push(rest / d);
    }
    Some(xs)
}

pub fn zwitt_add(p: u32, x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
    let g: Vec<BigInt> = zghost(p, x).iter().zip(zghost(p, y)).map(|(a, b)| a + b).collect();
    zsolve(p, &g).expect("sums are integral")
}

pub fn zwitt_mul(p: u32, x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
    let g: Vec<BigInt> = zghost(p, x).iter().zip(zghost(p, y)).map(|(a, b)| a * b).collect();
    zsolve(p, &g).expect("products are integral")
}

/// `a + b pi` with `pi^2 = 5`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Q5(pub BigInt, pub BigInt);

impl Q5 {
    pub fn int(a: i64) -> Q5 {
        Q5(big(a), BigInt::zero())
    }

    pub fn new(a: i64, b: i64) -> Q5 {
        Q5(big(a), big(b))
    }

    pub fn zero() -> Q5 {
        Q5(BigInt::zero(), BigInt::zero())
    }

    pub fn one() -> Q5 {
        Q5(BigInt::one(), BigInt::zero())
    }

    pub fn pi() -> Q5 {
        Q5(BigInt::zero(), BigInt::one())
    }

    pub fn add(&self, o: &Q5) -> Q5 {
        Q5(&self.0 + &o.0, &self.1 + &o.1)
    }

    pub fn sub(&self, o: &Q5) -> Q5 {
        Q5(&self.0 - &o.0, &self.1 - &o.1)
    }

    pub fn mul(&self, o: &Q5) -> Q5 {
        Q5(&self.0 * &o.0 + BigInt::from(5) * &self.1 * &o.1, &self.0 * &o.1 + &self.1 * &o.0)
    }

    pub fn pow(&self, mut e: u64) -> Q5 {
        let (mut acc, mut b) = (Q5::one(), self.clone());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        acc
    }

    /// `(a + b pi) / pi = b + (a / 5) pi`.
    pub fn div_pi(&self) -> Option<Q5> {
        let five = BigInt::from(5);
        if (&self.0 % &five).is_zero() {
            Some(Q5(self.1.clone(), &self.0 / five))
        } else {
            None
        }
    }

    pub fn of(x: &RingElement) -> Q5 {
        let s = x.as_scalar().expect("constant");
        let c = s.coords();
        Q5(c[0].clone(), c.get(1).cloned().unwrap_or_default())
    }
}

/// Witt polynomials over `Z[pi]`, `q = 5`.
pub fn qghost(xs: &[Q5]) -> Vec<Q5> {
    (0..xs.len())
        .map(|i| {
            (0..=i).fold(Q5::zero(), |acc, j| acc.add(&Q5::pi().pow(j as u64).mul(&xs[j].pow(5u64.pow((i - j) as u32)))))
        })
        .collect()
}

pub fn qsolve(ws: &[Q5]) -> Option<Vec<Q5>> {
    let mut xs: Vec<Q5> = Vec::new();
    for (i, w) in ws.iter().enumerate() {
        let mut rest = w.clone();
        for (j, x) in xs.iter().enumerate() {
            rest = rest.sub(&Q5::pi().pow(j as u64).mul(&x.pow(5u64.pow((i - j) as u32))));
        }
        for _ in 0..i {
            rest = rest.div_pi()?;
        }
        xs.push(rest);
    }
    Some(xs)
}

pub fn ints(xs: &[RingElement]) -> Vec<BigInt> {
    xs.iter().map(|x| x.as_integer().expect("integer")).collect()
}

pub fn bigs(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| big(x)).collect()
}
