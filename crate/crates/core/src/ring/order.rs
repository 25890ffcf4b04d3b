//! Arithmetic in the monogenic base order `O = Z[x]/(f)` with `f` Eisenstein
//! at `p` and constant term `±p`, so that `pi = x` is a uniformizer above `p`.
//!
//! The rational integers are the degree-one case `f = x - p`, where the
//! power basis collapses to a single coordinate and `pi = p`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;
use std::fmt;

use crate::error::{Error, Result};

/// An element of the base order in power-basis coordinates `c_0 + c_1 x + ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar(pub(crate) SmallVec<[BigInt; 2]>);

impl Scalar {
    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Returns the integer value when only the constant coordinate is set.
    pub fn as_integer(&self) -> Option<&BigInt> {
        if self.0[1..].iter().all(Zero::is_zero) {
            Some(&self.0[0])
        } else {
            None
        }
    }
}

/// Valuation with respect to the uniformizer; `Infinite` is the valuation of zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(u64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<u64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Order {
    p: u32,
    p_big: BigInt,
    /// Monic modulus, low degree first, length `d + 1`.
    modulus: Vec<BigInt>,
    /// `x * inv_x == -a_0`; coordinates of `x^{d-1} + a_{d-1} x^{d-2} + ... + a_1`.
    inv_x: Vec<BigInt>,
    neg_a0: BigInt,
}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Exponent of `p` in `n`; `None` for zero.
pub(crate) fn p_adic_valuation(n: &BigInt, p: &BigInt) -> Option<u64> {
    if n.is_zero() {
        return None;
    }
    let mut v = 0;
    let mut m = n.clone();
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return Some(v);
        }
        m = q;
        v += 1;
    }
}

impl Order {
    /// The rational integers with uniformizer `p`.
    pub fn integers(p: u32) -> Result<Order> {
        Order::new(p, vec![-BigInt::from(p), BigInt::one()])
    }

    /// `Z[x]/(f)` for a monic `f` (coefficients low degree first).
    pub fn new(p: u32, modulus: Vec<BigInt>) -> Result<Order> {
        if !is_prime(p) {
            return Err(Error::InvalidConfig(format!("{p} is not prime")));
        }
        let p_big = BigInt::from(p);
        if modulus.len() < 2 {
            return Err(Error::RejectedModulus("modulus must have degree >= 1".into()));
        }
        if !modulus.last().unwrap().is_one() {
            return Err(Error::RejectedModulus("modulus must be monic".into()));
        }
        let d = modulus.len() - 1;
        if modulus[0].abs() != p_big {
            return Err(Error::RejectedModulus(format!(
                "constant term must be +-{p} (Eisenstein with pi = x generating a prime of norm {p}); \
                 a modulus failing this is reducible or defines a different prime"
            )));
        }
        for (i, a) in modulus[..d].iter().enumerate() {
            if !a.is_multiple_of(&p_big) {
                return Err(Error::RejectedModulus(format!(
                    "coefficient of x^{i} is not divisible by {p}; modulus is not Eisenstein"
                )));
            }
        }
        let inv_x = modulus[1..].to_vec();
        let neg_a0 = -modulus[0].clone();
        Ok(Order { p, p_big, modulus, inv_x, neg_a0 })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// Degree of the order over `Z`, which equals the ramification index.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    pub fn is_integers(&self) -> bool {
        self.degree() == 1
    }

    pub fn zero(&self) -> Scalar {
        Scalar(SmallVec::from_elem(BigInt::zero(), self.degree()))
    }

    pub fn from_int(&self, n: impl Into<BigInt>) -> Scalar {
        let mut s = self.zero();
        s.0[0] = n.into();
        s
    }

    pub fn from_coords(&self, coords: &[BigInt]) -> Result<Scalar> {
        if coords.len() > self.degree() {
            return Err(Error::Parse(format!(
                "element has {} coordinates, order has degree {}",
                coords.len(),
                self.degree()
            )));
        }
        let mut s = self.zero();
        for (i, c) in coords.iter().enumerate() {
            s.0[i] = c.clone();
        }
        Ok(s)
    }

    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    /// The uniformizer.
    pub fn pi(&self) -> Scalar {
        if self.is_integers() {
            self.from_int(self.p)
        } else {
            let mut s = self.zero();
            s.0[1] = BigInt::one();
            s
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        Scalar(a.0.iter().zip(b.0.iter()).map(|(x, y)| x + y).collect())
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        Scalar(a.0.iter().zip(b.0.iter()).map(|(x, y)| x - y).collect())
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        Scalar(a.0.iter().map(|x| -x).collect())
    }

    pub fn add_assign(&self, a: &mut Scalar, b: &Scalar) {
        for (x, y) in a.0.iter_mut().zip(b.0.iter()) {
            *x += y;
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        let d = self.degree();
        if d == 1 {
            return Scalar(SmallVec::from_elem(&a.0[0] * &b.0[0], 1));
        }
        let mut prod = vec![BigInt::zero(); 2 * d - 1];
        for (i, x) in a.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.0.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        // x^d = -(a_0 + a_1 x + ... + a_{d-1} x^{d-1})
        for k in (d..2 * d - 1).rev() {
            let c = std::mem::take(&mut prod[k]);
            if c.is_zero() {
                continue;
            }
            for (i, a) in self.modulus[..d].iter().enumerate() {
                prod[k - d + i] -= &c * a;
            }
        }
        prod.truncate(d);
        Scalar(prod.into_iter().collect())
    }

    pub fn mul_int(&self, a: &Scalar, n: &BigInt) -> Scalar {
        Scalar(a.0.iter().map(|x| x * n).collect())
    }

    pub fn pow(&self, a: &Scalar, mut e: u64) -> Scalar {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// `pi^k` as an element.
    pub fn pi_pow(&self, k: u64) -> Scalar {
        self.pow(&self.pi(), k)
    }

    /// `v_pi(a)`: the `pi`-adic terms `c_i x^i` have pairwise distinct
    /// valuations `d * v_p(c_i) + i`, so the minimum is attained uniquely.
    pub fn valuation(&self, a: &Scalar) -> Valuation {
        let d = self.degree() as u64;
        a.0.iter()
            .enumerate()
            .filter_map(|(i, c)| p_adic_valuation(c, &self.p_big).map(|v| d * v + i as u64))
            .min()
            .map_or(Valuation::Infinite, Valuation::Finite)
    }

    /// Exact division by the uniformizer, `None` if `a` is not in `pi O`.
    pub fn div_pi(&self, a: &Scalar) -> Option<Scalar> {
        let (q0, r0) = a.0[0].div_rem(&self.neg_a0);
        if !r0.is_zero() {
            return None;
        }
        let d = self.degree();
        let mut out = self.zero();
        for i in 1..d {
            out.0[i - 1] = a.0[i].clone();
        }
        if !q0.is_zero() {
            for (i, c) in self.inv_x.iter().enumerate() {
                out.0[i] += &q0 * c;
            }
        }
        Some(out)
    }

    pub fn div_pi_pow(&self, a: &Scalar, k: u64) -> Option<Scalar> {
        if self.is_integers() && k > 0 {
            let m = num_traits::pow(self.p_big.clone(), k as usize);
            let (q, r) = a.0[0].div_rem(&m);
            return r.is_zero().then(|| self.from_int(q));
        }
        let mut cur = a.clone();
        for _ in 0..k {
            cur = self.div_pi(&cur)?;
        }
        Some(cur)
    }

    /// Exact division by a rational integer, coordinate by coordinate.
    pub fn div_int_exact(&self, a: &Scalar, n: &BigInt) -> Option<Scalar> {
        let mut out = self.zero();
        for (o, c) in out.0.iter_mut().zip(a.0.iter()) {
            let (q, r) = c.div_rem(n);
            if !r.is_zero() {
                return None;
            }
            *o = q;
        }
        Some(out)
    }

    /// Canonical representative modulo `pi^n`: least nonnegative power-basis
    /// coordinates. Coordinate `i` is taken modulo `p^ceil((n - i) / d)`.
    pub fn reduce(&self, a: &Scalar, n: u64) -> Scalar {
        let d = self.degree() as u64;
        let mut out = self.zero();
        for (i, c) in a.0.iter().enumerate() {
            let i = i as u64;
            if n <= i {
                continue;
            }
            let k = (n - i).div_ceil(d);
            let m = num_traits::pow(self.p_big.clone(), k as usize);
            out.0[i as usize] = c.mod_floor(&m);
        }
        out
    }

    /// Is `a` fixed by reduction modulo `pi^n`?
    pub fn is_reduced(&self, a: &Scalar, n: u64) -> bool {
        self.reduce(a, n) == *a
    }

    pub fn fmt_scalar(&self, a: &Scalar) -> String {
        if let Some(n) = a.as_integer() {
            return n.to_string();
        }
        let mut parts = Vec::new();
        for (i, c) in a.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            parts.push(match i {
                0 => c.to_string(),
                1 => format!("{c}*pi"),
                _ => format!("{c}*pi^{i}"),
            });
        }
        format!("({})", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ram5() -> Order {
        Order::new(5, vec![BigInt::from(-5), BigInt::zero(), BigInt::one()]).unwrap()
    }

    #[test]
    fn integers_divide_and_value() {
        let z = Order::integers(2).unwrap();
        assert_eq!(z.div_pi(&z.from_int(6)), Some(z.from_int(3)));
        assert_eq!(z.div_pi(&z.from_int(5)), None);
        assert_eq!(z.valuation(&z.from_int(8)), Valuation::Finite(3));
        assert_eq!(z.valuation(&z.zero()), Valuation::Infinite);
    }

    #[test]
    fn ramified_pi_squared_is_five() {
        let o = ram5();
        let pi = o.pi();
        assert_eq!(o.mul(&pi, &pi), o.from_int(5));
        assert_eq!(o.div_pi(&o.from_int(5)), Some(pi.clone()));
        assert_eq!(o.valuation(&o.from_int(5)), Valuation::Finite(2));
        assert_eq!(o.valuation(&o.from_int(25)), Valuation::Finite(4));
        assert_eq!(o.valuation(&pi), Valuation::Finite(1));
    }

    #[test]
    fn reduction_is_canonical() {
        let z = Order::integers(2).unwrap();
        assert_eq!(z.reduce(&z.from_int(19), 4), z.from_int(3));
        assert_eq!(z.reduce(&z.from_int(-1), 3), z.from_int(7));
        let o = ram5();
        let pi3 = o.pi_pow(3);
        assert!(o.reduce(&pi3, 2).is_zero());
        // pi^3 = 5 pi survives modulo pi^4
        assert!(!o.reduce(&pi3, 4).is_zero());
    }

    #[test]
    fn rejects_non_eisenstein() {
        assert!(matches!(
            Order::new(2, vec![BigInt::from(-4), BigInt::zero(), BigInt::one()]),
            Err(Error::RejectedModulus(_))
        ));
        assert!(matches!(
            Order::new(5, vec![BigInt::from(-5), BigInt::from(1), BigInt::one()]),
            Err(Error::RejectedModulus(_))
        ));
        assert!(matches!(Order::integers(4), Err(Error::InvalidConfig(_))));
    }

    #[test]
    fn cubic_division_roundtrip() {
        // x^3 + 3x + 3 is Eisenstein at 3
        let o = Order::new(3, vec![3.into(), 3.into(), 0.into(), 1.into()]).unwrap();
        let a = o.from_coords(&[7.into(), (-2).into(), 11.into()]).unwrap();
        let b = o.mul(&a, &o.pi());
        assert_eq!(o.div_pi(&b), Some(a));
        assert_eq!(o.valuation(&o.from_int(3)), Valuation::Finite(3));
    }
}
