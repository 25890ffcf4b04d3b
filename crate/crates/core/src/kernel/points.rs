//! Points of the kernels `N^[m]n G` in Witt coordinates and the maps
//! between them.

use std::fmt;
use std::sync::Arc;

use super::fgl::FormalGroupLaw;
use crate::error::{Error, Result};
use crate::ring::{Ring, RingElement, Scalar, Valuation};
use crate::shifted::ShiftedWittVector;
use crate::witt::engine::Engine;
use crate::witt::WittVector;

/// A `B`-point of `N^[m]n G`: tail coordinates `t_0..t_{n-1}` above the
/// identity section.
#[derive(Clone)]
pub struct KernelPoint {
    m: usize,
    tail: Vec<RingElement>,
    group: Arc<FormalGroupLaw>,
    base: Ring,
}

impl PartialEq for KernelPoint {
    fn eq(&self, other: &KernelPoint) -> bool {
        self.m == other.m && self.tail == other.tail && self.group == other.group && self.base == other.base
    }
}

impl Eq for KernelPoint {}

impl fmt::Display for KernelPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t: Vec<String> = self.tail.iter().map(|c| c.to_string()).collect();
        write!(f, "({}) in N[{}]{} of {}", t.join(", "), self.m, self.tail.len(), self.group.tag())
    }
}

impl fmt::Debug for KernelPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl KernelPoint {
    /// `base` is the ring `R` the heads live in; the coordinates live in an
    /// `R`-algebra `B`.
    pub fn new(group: &Arc<FormalGroupLaw>, base: &Ring, m: usize, tail: Vec<RingElement>) -> Result<KernelPoint> {
        let ring = tail.first().map(|t| t.ring().clone()).ok_or(Error::ZeroTail)?;
        if tail.iter().any(|t| *t.ring() != ring) {
            return Err(Error::BaseMismatch);
        }
        if !base.maps_into(&ring) || base.order() != group.order() {
            return Err(Error::BaseMismatch);
        }
        Ok(KernelPoint { m, tail, group: group.clone(), base: base.clone() })
    }

    pub fn from_ints(group: &Arc<FormalGroupLaw>, base: &Ring, ring: &Ring, m: usize, tail: &[i64]) -> Result<KernelPoint> {
        KernelPoint::new(group, base, m, tail.iter().map(|&x| RingElement::from_int(ring, x)).collect())
    }

    pub fn zero(group: &Arc<FormalGroupLaw>, base: &Ring, ring: &Ring, m: usize, n: usize) -> Result<KernelPoint> {
        KernelPoint::new(group, base, m, vec![RingElement::zero(ring); n])
    }

    fn with_tail(&self, m: usize, tail: Vec<RingElement>) -> KernelPoint {
        KernelPoint { m, tail, group: self.group.clone(), base: self.base.clone() }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.tail.len()
    }

    pub fn coords(&self) -> &[RingElement] {
        &self.tail
    }

    pub fn group(&self) -> &Arc<FormalGroupLaw> {
        &self.group
    }

    pub fn base(&self) -> &Ring {
        &self.base
    }

    pub fn ring(&self) -> &Ring {
        self.tail[0].ring()
    }

    pub fn is_zero(&self) -> bool {
        self.tail.iter().all(RingElement::is_zero)
    }

    fn check_compatible(&self, other: &KernelPoint) -> Result<()> {
        if self.group != other.group || self.base != other.base || self.ring() != other.ring() {
            return Err(Error::BaseMismatch);
        }
        if self.m != other.m || self.n() != other.n() {
            return Err(Error::LengthMismatch { expected: self.n(), found: other.n() });
        }
        Ok(())
    }

    /// `iota_m`: the zero-head shifted vector `(0, ..., 0; t_0, ..., t_{n-1})`.
    pub fn embed(&self) -> ShiftedWittVector {
        ShiftedWittVector::zero_head(&self.base, self.m, self.tail.clone()).expect("non-empty tail")
    }

    /// The image in `W_{m+n}(B)`, which is `V^(m+1)` of the tail.
    pub fn embed_witt(&self) -> WittVector {
        self.embed().include()
    }

    fn from_shifted(&self, v: &ShiftedWittVector) -> Result<KernelPoint> {
        if v.head().iter().any(|h| !h.is_zero()) {
            return Err(Error::Internal("kernel map left the zero-head locus".into()));
        }
        Ok(self.with_tail(v.m(), v.tail().to_vec()))
    }

    /// Group law of `G` evaluated in the Witt ring on the embedded points.
    pub fn add(&self, other: &KernelPoint) -> Result<KernelPoint> {
        self.check_compatible(other)?;
        let ring = self.ring().clone();
        let eng = Engine::new(&ring);
        let a = eng.ghost(&eng.lift(&self.embed_witt().comps));
        let b = eng.ghost(&eng.lift(&other.embed_witt().comps));
        let g = ghost_combine(&self.group, &eng, ring.trunc(), &a, &b, GroupOp::Add)?;
        let zeros = vec![RingElement::zero(eng.exact()); self.m + 1];
        let comps = eng.solve(zeros, &g[self.m + 1..]).map_err(|e| e.guard("kernel add"))?;
        Ok(self.with_tail(self.m, eng.settle(&ring, comps[self.m + 1..].to_vec())))
    }

    /// `f_m`: induced by the lateral Frobenius.
    pub fn lateral_f(&self) -> Result<KernelPoint> {
        let v = self.embed().lateral_frobenius()?;
        if v.n() == 0 {
            return Err(Error::ZeroTail);
        }
        self.from_shifted(&v)
    }

    /// `Phi_[m]`: induced by `E_[m]`.
    pub fn phi_map(&self) -> Result<KernelPoint> {
        let v = self.embed().shift_e()?;
        self.from_shifted(&v)
    }

    /// `u`: the first `k` coordinates.
    pub fn project(&self, k: usize) -> Result<KernelPoint> {
        if k == 0 || k > self.n() {
            return Err(Error::BadLength(format!("cannot project {} coordinates to {k}", self.n())));
        }
        Ok(self.with_tail(self.m, self.tail[..k].to_vec()))
    }

    /// `sigma`: `(t_0) -> (t_0, 0, ..., 0)`.
    pub fn section(&self, n: usize) -> Result<KernelPoint> {
        if self.n() != 1 {
            return Err(Error::BadLength("the section starts from a single coordinate".into()));
        }
        if n == 0 {
            return Err(Error::BadLength("target length must be positive".into()));
        }
        let mut tail = self.tail.clone();
        tail.resize(n, RingElement::zero(self.ring()));
        Ok(self.with_tail(self.m, tail))
    }

    /// `F^(m+1)(iota t) - F^m(iota f_m t)`, the difference taken with the
    /// group law, as a point of `W_{n-1}(B)`.
    pub fn difference_character(&self) -> Result<WittVector> {
        if self.n() < 2 {
            return Err(Error::BadLength("difference character needs n >= 2".into()));
        }
        let left = self.embed_witt().frobenius_pow(self.m + 1)?;
        let right = self.lateral_f()?.embed_witt().frobenius_pow(self.m)?;
        group_difference(&self.group, &left, &right)
    }
}

#[derive(Clone, Copy)]
enum GroupOp {
    Add,
    Sub,
}

/// `a -_G b` for Witt vectors whose ghost entries are divisible by `pi`.
pub fn group_difference(group: &FormalGroupLaw, a: &WittVector, b: &WittVector) -> Result<WittVector> {
    a.check_compatible(b)?;
    let ring = a.ring().clone();
    let eng = Engine::new(&ring);
    let ga = eng.ghost(&eng.lift(a.components()));
    let gb = eng.ghost(&eng.lift(b.components()));
    let g = ghost_combine(group, &eng, ring.trunc(), &ga, &gb, GroupOp::Sub)?;
    let comps = eng.solve(Vec::new(), &g).map_err(|e| e.guard("group difference"))?;
    Ok(WittVector::raw(&ring, eng.settle(&ring, comps), a.twist()))
}

/// Applies the group law (or difference) entry by entry in ghost
/// coordinates. The structure map sends a coefficient `c` of the order to
/// the ghost vector `<c, c, ...>` since `phi` fixes the order.
fn ghost_combine(
    group: &FormalGroupLaw,
    eng: &Engine,
    prec: Option<u64>,
    a: &[RingElement],
    b: &[RingElement],
    op: GroupOp,
) -> Result<Vec<RingElement>> {
    let mut out = Vec::with_capacity(a.len());
    for (e, (x, y)) in a.iter().zip(b.iter()).enumerate() {
        let limit = prec.map(|n| n + e as u64);
        let y = match op {
            GroupOp::Add => y.clone(),
            GroupOp::Sub => eval_inverse(group, y, limit)?,
        };
        let v = eval_law(group, x, &y, limit)?;
        out.push(eng.red(v, e));
    }
    Ok(out)
}

fn val(x: &RingElement) -> Option<u64> {
    match x.pi_valuation() {
        Valuation::Finite(v) => Some(v),
        Valuation::Infinite => None,
    }
}

/// Largest total degree whose terms can survive modulo `pi^limit` when
/// every argument has valuation at least `v`.
fn degree_bound(v: u64, limit: u64) -> Result<u64> {
    if v == 0 {
        return Err(Error::PrecisionRequired(
            "series argument is not divisible by pi, so the series does not converge".into(),
        ));
    }
    Ok((limit + v - 1) / v)
}

/// `F(x, y)` exactly for polynomial laws, otherwise modulo `pi^limit`.
fn eval_law(group: &FormalGroupLaw, x: &RingElement, y: &RingElement, limit: Option<u64>) -> Result<RingElement> {
    let ring = x.ring();
    let (vx, vy) = (val(x), val(y));
    let bound = match (limit, group.is_polynomial()) {
        (None, true) => None,
        (None, false) => {
            return Err(Error::PrecisionRequired(format!(
                "the law {} is a power series; evaluate over a truncated ring",
                group.tag()
            )))
        }
        (Some(n), _) => {
            let v = [vx, vy].into_iter().flatten().min();
            match v {
                None => return Ok(RingElement::zero(ring)),
                Some(v) => Some(degree_bound(v, n)?),
            }
        }
    };
    if let (Some(b), Some(known)) = (bound, group.known_degree()) {
        if b > known as u64 {
            return Err(Error::PrecisionRequired(format!(
                "precision needs terms of degree {b}, the law is known through degree {known}"
            )));
        }
    }
    let mut acc = RingElement::zero(ring);
    let mut xp: Vec<RingElement> = vec![RingElement::one(ring)];
    let mut yp: Vec<RingElement> = vec![RingElement::one(ring)];
    for (&(i, j), c) in group.coeffs() {
        if let Some(b) = bound {
            if (i + j) as u64 > b {
                continue;
            }
        }
        let term_val = i as u64 * vx.unwrap_or(u64::MAX / 4) + j as u64 * vy.unwrap_or(u64::MAX / 4);
        if let Some(n) = limit {
            if term_val >= n {
                continue;
            }
        }
        let xi = power(&mut xp, x, i, limit);
        let yj = power(&mut yp, y, j, limit);
        let t = (&xi * &yj).scale(c);
        acc = reduce(&acc + &t, limit);
    }
    Ok(acc)
}

/// `i(y)` modulo `pi^limit`, or exactly for the additive law.
fn eval_inverse(group: &FormalGroupLaw, y: &RingElement, limit: Option<u64>) -> Result<RingElement> {
    if group.is_additive() {
        return Ok(-y);
    }
    let Some(n) = limit else {
        return Err(Error::PrecisionRequired(format!(
            "the inverse series of {} is infinite; evaluate over a truncated ring",
            group.tag()
        )));
    };
    let Some(v) = val(y) else {
        return Ok(RingElement::zero(y.ring()));
    };
    let bound = degree_bound(v, n)?;
    let coeffs: Vec<Scalar> = group.inverse_coefficients(bound as u32)?;
    let ring = y.ring();
    let mut acc = RingElement::zero(ring);
    let mut pw = vec![RingElement::one(ring)];
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let yk = power(&mut pw, y, k as u32 + 1, limit);
        acc = reduce(&acc + &yk.scale(c), limit);
    }
    Ok(acc)
}

fn power(cache: &mut Vec<RingElement>, x: &RingElement, k: u32, limit: Option<u64>) -> RingElement {
    while cache.len() <= k as usize {
        let next = reduce(cache.last().unwrap() * x, limit);
        cache.push(next);
    }
    cache[k as usize].clone()
}

fn reduce(x: RingElement, limit: Option<u64>) -> RingElement {
    match limit {
        Some(n) => x.mod_pi_pow(n),
        None => x,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(p: u32) -> (Ring, Arc<FormalGroupLaw>, Arc<FormalGroupLaw>) {
        let r = Ring::integers(p).unwrap();
        let ga = Arc::new(FormalGroupLaw::additive(r.order()));
        let gm = Arc::new(FormalGroupLaw::multiplicative(r.order()));
        (r, ga, gm)
    }

    #[test]
    fn embedding() {
        let (r, ga, _) = setup(2);
        let t = KernelPoint::from_ints(&ga, &r, &r, 1, &[5]).unwrap();
        assert_eq!(t.embed_witt(), WittVector::from_ints(&r, &[0, 0, 5]));
        let g: Vec<_> = [0, 0, 20].iter().map(|&x| RingElement::from_int(&r, x)).collect();
        assert_eq!(t.embed().shifted_ghost().entries(), &g[..]);
        assert_eq!(t.embed_witt(), WittVector::from_ints(&r, &[5]).verschiebung_pow(2));
    }

    #[test]
    fn addition() {
        let (r, ga, gm) = setup(2);
        let t = KernelPoint::from_ints(&ga, &r, &r, 0, &[3]).unwrap();
        let s = KernelPoint::from_ints(&ga, &r, &r, 0, &[8]).unwrap();
        assert_eq!(t.add(&s).unwrap(), KernelPoint::from_ints(&ga, &r, &r, 0, &[11]).unwrap());
        let t = KernelPoint::from_ints(&gm, &r, &r, 0, &[3]).unwrap();
        let s = KernelPoint::from_ints(&gm, &r, &r, 0, &[8]).unwrap();
        // t + s + 2ts
        assert_eq!(t.add(&s).unwrap(), KernelPoint::from_ints(&gm, &r, &r, 0, &[59]).unwrap());
        let z = KernelPoint::zero(&gm, &r, &r, 0, 1).unwrap();
        assert_eq!(t.add(&z).unwrap(), t);
    }

    #[test]
    fn maps() {
        let (r, ga, _) = setup(2);
        let t = KernelPoint::from_ints(&ga, &r, &r, 1, &[1, 0]).unwrap();
        assert_eq!(t.lateral_f().unwrap(), KernelPoint::from_ints(&ga, &r, &r, 1, &[1]).unwrap());
        let t = KernelPoint::from_ints(&ga, &r, &r, 1, &[7]).unwrap();
        assert_eq!(t.phi_map().unwrap(), KernelPoint::from_ints(&ga, &r, &r, 0, &[14]).unwrap());
        let t = KernelPoint::from_ints(&ga, &r, &r, 0, &[7]).unwrap();
        assert_eq!(t.phi_map(), Err(Error::ZeroShift));
        let t = KernelPoint::from_ints(&ga, &r, &r, 0, &[4, 5, 6]).unwrap();
        assert_eq!(t.project(1).unwrap().coords(), &t.coords()[..1]);
        assert_eq!(t.project(3).unwrap(), t);
        assert!(matches!(t.project(4), Err(Error::BadLength(_))));
        let s = KernelPoint::from_ints(&ga, &r, &r, 0, &[5]).unwrap();
        assert_eq!(s.section(3).unwrap(), KernelPoint::from_ints(&ga, &r, &r, 0, &[5, 0, 0]).unwrap());
    }

    #[test]
    fn difference_example() {
        let (r, ga, _) = setup(2);
        for t1 in [-3, 0, 9] {
            let t = KernelPoint::from_ints(&ga, &r, &r, 0, &[1, t1]).unwrap();
            assert_eq!(t.difference_character().unwrap(), WittVector::from_ints(&r, &[2, -2]));
        }
        let t = KernelPoint::from_ints(&ga, &r, &r, 0, &[0, 4]).unwrap();
        assert!(t.difference_character().unwrap().is_zero());
    }

    #[test]
    fn multiplicative_needs_precision_for_differences() {
        let (r, _, gm) = setup(5);
        let t = KernelPoint::from_ints(&gm, &r, &r, 0, &[1, 2]).unwrap();
        assert!(matches!(t.difference_character(), Err(Error::PrecisionRequired(_))));
        let b = r.truncated(6);
        let t = KernelPoint::from_ints(&gm, &r, &b, 0, &[1, 2]).unwrap();
        let s = KernelPoint::from_ints(&gm, &r, &b, 0, &[1, 0]).unwrap();
        assert_eq!(t.difference_character().unwrap(), s.difference_character().unwrap());
    }
}
