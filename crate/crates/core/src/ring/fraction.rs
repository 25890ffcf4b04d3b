//! Elements of `K` written as an order element over a positive integer.
//! Only logarithm coefficients use these.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::order::{p_adic_valuation, Order, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fraction {
    num: Scalar,
    den: BigInt,
}

impl Fraction {
    pub fn new(order: &Order, num: Scalar, den: BigInt) -> Fraction {
        assert!(!den.is_zero(), "zero denominator");
        let (num, den) = if den.is_negative() { (order.neg(&num), -den) } else { (num, den) };
        let mut g = den.clone();
        for c in num.coords() {
            g = g.gcd(c);
        }
        if g.is_one() || g.is_zero() {
            return if num.is_zero() {
                Fraction { num, den: BigInt::one() }
            } else {
                Fraction { num, den }
            };
        }
        let num = order.div_int_exact(&num, &g).expect("gcd divides");
        Fraction { num, den: den / g }
    }

    pub fn from_scalar(num: Scalar) -> Fraction {
        Fraction { num, den: BigInt::one() }
    }

    pub fn num(&self) -> &Scalar {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, order: &Order, other: &Fraction) -> Fraction {
        let num = order.add(&order.mul_int(&self.num, &other.den), &order.mul_int(&other.num, &self.den));
        Fraction::new(order, num, &self.den * &other.den)
    }

    pub fn sub(&self, order: &Order, other: &Fraction) -> Fraction {
        self.add(order, &other.neg(order))
    }

    pub fn neg(&self, order: &Order) -> Fraction {
        Fraction { num: order.neg(&self.num), den: self.den.clone() }
    }

    pub fn mul(&self, order: &Order, other: &Fraction) -> Fraction {
        Fraction::new(order, order.mul(&self.num, &other.num), &self.den * &other.den)
    }

    pub fn mul_scalar(&self, order: &Order, s: &Scalar) -> Fraction {
        Fraction::new(order, order.mul(&self.num, s), self.den.clone())
    }

    pub fn div_int(&self, order: &Order, k: &BigInt) -> Fraction {
        Fraction::new(order, self.num.clone(), &self.den * k)
    }

    /// `v_pi`, which may be negative; `None` for zero.
    pub fn valuation(&self, order: &Order) -> Option<i64> {
        let vn = order.valuation(&self.num).finite()? as i64;
        let vd = p_adic_valuation(&self.den, &BigInt::from(order.p())).unwrap_or(0) as i64;
        Some(vn - order.degree() as i64 * vd)
    }

    /// The element as a scalar when the denominator is one.
    pub fn as_scalar(&self) -> Option<&Scalar> {
        self.den.is_one().then_some(&self.num)
    }

    /// Image in `O/pi^n` when the fraction is `pi`-integral. The part of the
    /// denominator prime to `p` is inverted modulo a power of `p`.
    pub fn reduce(&self, order: &Order, n: u64) -> Option<Scalar> {
        if self.num.is_zero() {
            return Some(order.zero());
        }
        let p = BigInt::from(order.p());
        let a = p_adic_valuation(&self.den, &p).unwrap_or(0);
        let unit = &self.den / num_traits::pow(p.clone(), a as usize);
        let num = order.div_int_exact(&self.num, &num_traits::pow(p.clone(), a as usize));
        let num = match num {
            Some(x) => x,
            None => {
                // divide by p^a through pi^(e a), which needs v_pi(num) >= e a
                let k = order.degree() as u64 * a;
                let x = order.div_pi_pow(&self.num, k)?;
                // p = pi^e * u with u a unit; undo the unit part
                let ratio = order.div_pi_pow(&order.from_int(order.p()), order.degree() as u64)?;
                let inv_ratio = invert_mod(order, &ratio, n)?;
                order.mul(&x, &order.pow(&inv_ratio, a))
            }
        };
        let k = n.div_ceil(order.degree() as u64).max(1);
        let modulus = num_traits::pow(p, k as usize);
        let inv = unit.modinv(&modulus)?;
        Some(order.reduce(&order.mul_int(&num, &inv), n))
    }
}

/// Inverse of a unit of `O` modulo `pi^n` by Newton iteration starting from
/// an integer inverse of its residue.
fn invert_mod(order: &Order, u: &Scalar, n: u64) -> Option<Scalar> {
    let p = BigInt::from(order.p());
    let r = u.coords()[0].mod_floor(&p);
    let r_inv = r.modinv(&p)?;
    let mut x = order.from_int(r_inv);
    let two = order.from_int(2);
    let mut prec = 1u64;
    while prec < n {
        // x <- x (2 - u x)
        x = order.mul(&x, &order.sub(&two, &order.mul(u, &x)));
        prec *= 2;
        x = order.reduce(&x, n);
    }
    Some(order.reduce(&x, n))
}
