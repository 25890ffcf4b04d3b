use std::cell::Cell;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};

use num_bigint::BigInt;

use super::config::Ring;
use super::order::{Scalar, Valuation};
use super::poly::{Mono, Poly};
use crate::error::{Error, Result};

/// An element of a configured ring, held in canonical form so that equality
/// is structural.
#[derive(Clone, PartialEq, Eq)]
pub struct RingElement {
    ring: Ring,
    poly: Poly,
}

impl RingElement {
    /// Wraps a polynomial, reducing it when the ring is truncated.
    pub fn from_poly(ring: &Ring, poly: Poly) -> RingElement {
        let poly = match ring.trunc() {
            Some(n) => {
                let o = ring.order();
                poly.map_coeffs(|c| o.reduce(c, n))
            }
            None => poly,
        };
        RingElement { ring: ring.clone(), poly }
    }

    pub fn zero(ring: &Ring) -> RingElement {
        RingElement { ring: ring.clone(), poly: Poly::zero() }
    }

    pub fn one(ring: &Ring) -> RingElement {
        RingElement::from_int(ring, 1)
    }

    pub fn from_int(ring: &Ring, n: impl Into<BigInt>) -> RingElement {
        RingElement::from_scalar(ring, ring.order().from_int(n))
    }

    pub fn from_scalar(ring: &Ring, c: Scalar) -> RingElement {
        RingElement::from_poly(ring, Poly::constant(c, ring.nvars()))
    }

    /// The uniformizer.
    pub fn pi(ring: &Ring) -> RingElement {
        RingElement::from_scalar(ring, ring.order().pi())
    }

    pub fn var(ring: &Ring, name: &str) -> Result<RingElement> {
        let i = ring
            .var_index(name)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown variable `{name}`")))?;
        Ok(RingElement::var_at(ring, i))
    }

    pub fn var_at(ring: &Ring, i: usize) -> RingElement {
        RingElement::from_poly(ring, Poly::var(ring.order(), i, ring.nvars()))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.poly.as_constant() == Some(self.ring.order().one())
    }

    /// The value as a rational integer, when it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.poly.is_zero() {
            return Some(BigInt::from(0));
        }
        self.poly.as_constant().and_then(|c| c.as_integer().cloned())
    }

    /// The value as an element of the base order, when it is constant.
    pub fn as_scalar(&self) -> Option<Scalar> {
        if self.poly.is_zero() {
            return Some(self.ring.order().zero());
        }
        self.poly.as_constant()
    }

    fn check_same(&self, other: &RingElement) {
        assert!(
            self.ring == other.ring,
            "ring elements from different rings: {:?} vs {:?}",
            self.ring,
            other.ring
        );
    }

    pub fn pow(&self, mut e: u64) -> RingElement {
        let mut base = self.clone();
        let mut acc = RingElement::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, c: &Scalar) -> RingElement {
        RingElement::from_poly(&self.ring, self.poly.scale(self.ring.order(), c))
    }

    pub fn mul_int(&self, n: impl Into<BigInt>) -> RingElement {
        self.scale(&self.ring.order().from_int(n))
    }

    /// `pi^k * self`.
    pub fn mul_pi_pow(&self, k: u64) -> RingElement {
        if k == 0 {
            return self.clone();
        }
        self.scale(&self.ring.order().pi_pow(k))
    }

    /// The unique `b` with `pi * b = self`.
    pub fn exact_div_pi(&self) -> Result<RingElement> {
        self.exact_div_pi_pow(1)
    }

    pub fn exact_div_pi_pow(&self, k: u64) -> Result<RingElement> {
        if !self.ring.is_exact() {
            return Err(Error::TorsionBase);
        }
        if k == 0 {
            return Ok(self.clone());
        }
        let o = self.ring.order();
        let poly = self.poly.try_map_coeffs(|c| o.div_pi_pow(c, k).ok_or(Error::NonDivisible))?;
        Ok(RingElement { ring: self.ring.clone(), poly })
    }

    /// Largest `k` with `pi^k` dividing every coefficient. Over a truncated
    /// ring this is the valuation of the canonical representative.
    pub fn pi_valuation(&self) -> Valuation {
        let o = self.ring.order();
        self.poly
            .terms()
            .iter()
            .map(|(_, c)| o.valuation(c))
            .min()
            .unwrap_or(Valuation::Infinite)
    }

    /// Whether `self - other` lies in `pi^k`.
    pub fn congruent_mod_pi_pow(&self, other: &RingElement, k: u64) -> bool {
        (self - other).pi_valuation() >= Valuation::Finite(k)
    }

    /// The Frobenius lift.
    pub fn phi(&self) -> RingElement {
        if self.ring.nvars() == 0 || self.poly.is_constant() {
            return self.clone();
        }
        if self.ring.has_default_phi() {
            let q = self.ring.q() as u32;
            return RingElement::from_poly(&self.ring, self.poly.inflate_exponents(q));
        }
        let images: Vec<RingElement> = self
            .ring
            .phi_images()
            .into_iter()
            .map(|p| RingElement::from_poly(&self.ring, p))
            .collect();
        eval_poly(&self.ring, &self.poly, &images)
    }

    pub fn phi_pow(&self, k: u32) -> RingElement {
        let mut r = self.clone();
        for _ in 0..k {
            r = r.phi();
        }
        r
    }

    /// `C_pi(x, y) = (x^q + y^q - (x + y)^q) / pi`.
    pub fn c_pi(x: &RingElement, y: &RingElement) -> Result<RingElement> {
        x.check_same(y);
        let q = x.ring.q();
        let num = &(&x.pow(q) + &y.pow(q)) - &(x + y).pow(q);
        num.exact_div_pi().map_err(|e| e.guard("C_pi"))
    }

    /// Image in `R/pi^n`.
    pub fn reduce_mod(&self, n: u64) -> Result<RingElement> {
        if n == 0 {
            return Err(Error::InvalidConfig("truncation exponent must be positive".into()));
        }
        if let Some(t) = self.ring.trunc() {
            if n > t {
                return Err(Error::InvalidConfig(format!(
                    "cannot reduce modulo pi^{n} in a ring already truncated at pi^{t}"
                )));
            }
        }
        Ok(RingElement::from_poly(&self.ring.truncated(n), self.poly.clone()))
    }

    /// The same representative viewed in the exact cover.
    pub fn lift(&self) -> RingElement {
        RingElement { ring: self.ring.exact_cover(), poly: self.poly.clone() }
    }

    /// Image under the structure map into `target`.
    pub fn to_ring(&self, target: &Ring) -> Result<RingElement> {
        if self.ring == *target {
            return Ok(self.clone());
        }
        if !self.ring.maps_into(target) {
            return Err(Error::BaseMismatch);
        }
        let poly = if self.ring.nvars() == target.nvars() {
            self.poly.clone()
        } else {
            let map: Vec<usize> = (0..self.ring.nvars()).collect();
            self.poly.remap_vars(&map, target.nvars())
        };
        Ok(RingElement::from_poly(target, poly))
    }

    /// Canonical representative modulo `pi^k`, staying in the same ring.
    pub(crate) fn mod_pi_pow(&self, k: u64) -> RingElement {
        let o = self.ring.order();
        let poly = self.poly.map_coeffs(|c| o.reduce(c, k));
        RingElement { ring: self.ring.clone(), poly }
    }

    /// Rebuilds the element over an equal ring handle.
    pub(crate) fn rehome(&self, ring: &Ring) -> RingElement {
        debug_assert!(self.ring == *ring);
        RingElement { ring: ring.clone(), poly: self.poly.clone() }
    }
}

/// Evaluates `poly` (over the base order) at `args`, all living in `ring`.
pub fn eval_poly(ring: &Ring, poly: &Poly, args: &[RingElement]) -> RingElement {
    let mut powers: Vec<Vec<RingElement>> = vec![vec![RingElement::one(ring)]; args.len()];
    let mut acc = Poly::zero();
    let o = ring.order();
    for (mono, c) in poly.terms() {
        let mut term = RingElement::from_scalar(ring, c.clone());
        for (i, &e) in mono.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let e = e as usize;
            while powers[i].len() <= e {
                let next = powers[i].last().unwrap() * &args[i];
                powers[i].push(next);
            }
            term = &term * &powers[i][e];
        }
        acc = acc.add(o, &term.poly);
    }
    RingElement::from_poly(ring, acc)
}

impl<'a> Add<&'a RingElement> for &'a RingElement {
    type Output = RingElement;
    fn add(self, rhs: &RingElement) -> RingElement {
        self.check_same(rhs);
        RingElement::from_poly(&self.ring, self.poly.add(self.ring.order(), &rhs.poly))
    }
}

impl<'a> Sub<&'a RingElement> for &'a RingElement {
    type Output = RingElement;
    fn sub(self, rhs: &RingElement) -> RingElement {
        self.check_same(rhs);
        RingElement::from_poly(&self.ring, self.poly.sub(self.ring.order(), &rhs.poly))
    }
}

thread_local! {
    static TERM_LIMIT: Cell<Option<u128>> = const { Cell::new(None) };
}

/// Unwind payload for a product over the term limit.
struct TermLimitHit(u128);

/// Runs `f` with products of more than `limit` term pairs aborting it with
/// [`Error::BudgetExceeded`]. Applies to the current thread only.
pub(crate) fn with_term_limit<T>(limit: u128, f: impl FnOnce() -> T) -> Result<T> {
    struct Restore(Option<u128>);
    impl Drop for Restore {
        fn drop(&mut self) {
            TERM_LIMIT.with(|c| c.set(self.0));
        }
    }
    let _restore = Restore(TERM_LIMIT.with(|c| c.replace(Some(limit))));
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(v) => Ok(v),
        Err(payload) => match payload.downcast::<TermLimitHit>() {
            Ok(hit) => Err(Error::BudgetExceeded { estimated: hit.0, budget: limit }),
            Err(other) => resume_unwind(other),
        },
    }
}

impl<'a> Mul<&'a RingElement> for &'a RingElement {
    type Output = RingElement;
    fn mul(self, rhs: &RingElement) -> RingElement {
        self.check_same(rhs);
        if let Some(limit) = TERM_LIMIT.with(Cell::get) {
            let work = self.poly.len() as u128 * rhs.poly.len() as u128;
            if work > limit {
                // resume_unwind skips the panic hook, so nothing is printed
                resume_unwind(Box::new(TermLimitHit(work)));
            }
        }
        RingElement::from_poly(&self.ring, self.poly.mul(self.ring.order(), &rhs.poly))
    }
}

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        RingElement::from_poly(&self.ring, self.poly.neg(self.ring.order()))
    }
}

impl Add for RingElement {
    type Output = RingElement;
    fn add(self, rhs: RingElement) -> RingElement {
        &self + &rhs
    }
}

impl Sub for RingElement {
    type Output = RingElement;
    fn sub(self, rhs: RingElement) -> RingElement {
        &self - &rhs
    }
}

impl Mul for RingElement {
    type Output = RingElement;
    fn mul(self, rhs: RingElement) -> RingElement {
        &self * &rhs
    }
}

impl Neg for RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        -&self
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let o = self.ring.order();
        let names: Vec<&str> = self.ring.var_names().collect();
        let mut parts = Vec::new();
        for (m, c) in self.poly.terms() {
            let mono = fmt_mono(m, &names);
            let coeff = o.fmt_scalar(c);
            parts.push(match (mono.is_empty(), coeff.as_str()) {
                (true, _) => coeff,
                (false, "1") => mono,
                (false, "-1") => format!("-{mono}"),
                (false, _) => format!("{coeff}*{mono}"),
            });
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn fmt_mono(m: &Mono, names: &[&str]) -> String {
    let mut out = Vec::new();
    for (i, &e) in m.iter().enumerate() {
        match e {
            0 => {}
            1 => out.push(names[i].to_string()),
            _ => out.push(format!("{}^{e}", names[i])),
        }
    }
    out.join("*")
}
