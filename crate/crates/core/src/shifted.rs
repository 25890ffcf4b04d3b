//! Shifted Witt vectors `W_[m]n(B)`: a head `r_0..r_m` over the base `R`
//! glued to a tail `b_{m+1}..b_{m+n}` over an `R`-algebra `B`.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{eval_poly, Ring, RingElement};
use crate::witt::engine::Engine;
use crate::witt::{universal_polynomials, GhostVector, UniversalOp, WittVector};

#[derive(Clone)]
pub struct ShiftedWittVector {
    head: Vec<RingElement>,
    tail: Vec<RingElement>,
    base: Ring,
    ring: Ring,
    twist: u32,
}

impl PartialEq for ShiftedWittVector {
    fn eq(&self, other: &ShiftedWittVector) -> bool {
        self.base == other.base && self.ring == other.ring && self.head == other.head && self.tail == other.tail
    }
}

impl Eq for ShiftedWittVector {}

enum Binary {
    Add,
    Sub,
    Mul,
}

impl ShiftedWittVector {
    /// `head` has `m + 1` entries in `base`; `tail` has `n` entries in `ring`.
    pub fn new(
        base: &Ring,
        ring: &Ring,
        head: Vec<RingElement>,
        tail: Vec<RingElement>,
    ) -> Result<ShiftedWittVector> {
        if head.is_empty() {
            return Err(Error::BadLength("the head has m + 1 >= 1 entries".into()));
        }
        if !base.maps_into(ring) {
            return Err(Error::BaseMismatch);
        }
        let head = head.into_iter().map(|x| x.to_ring(base)).collect::<Result<Vec<_>>>()?;
        let tail = tail.into_iter().map(|x| x.to_ring(ring)).collect::<Result<Vec<_>>>()?;
        Ok(ShiftedWittVector { head, tail, base: base.clone(), ring: ring.clone(), twist: 0 })
    }

    pub fn from_ints(base: &Ring, ring: &Ring, head: &[i64], tail: &[i64]) -> Result<ShiftedWittVector> {
        ShiftedWittVector::new(
            base,
            ring,
            head.iter().map(|&x| RingElement::from_int(base, x)).collect(),
            tail.iter().map(|&x| RingElement::from_int(ring, x)).collect(),
        )
    }

    pub fn zero(base: &Ring, ring: &Ring, m: usize, n: usize) -> Result<ShiftedWittVector> {
        ShiftedWittVector::new(base, ring, vec![RingElement::zero(base); m + 1], vec![RingElement::zero(ring); n])
    }

    /// The zero-head vector `(0, ..., 0; t_0, ..., t_{n-1})`.
    pub fn zero_head(base: &Ring, m: usize, tail: Vec<RingElement>) -> Result<ShiftedWittVector> {
        let ring = tail
            .first()
            .map(|t| t.ring().clone())
            .ok_or(Error::ZeroTail)?;
        ShiftedWittVector::new(base, &ring, vec![RingElement::zero(base); m + 1], tail)
    }

    fn raw(&self, head: Vec<RingElement>, tail: Vec<RingElement>, twist: u32) -> ShiftedWittVector {
        ShiftedWittVector { head, tail, base: self.base.clone(), ring: self.ring.clone(), twist }
    }

    pub fn m(&self) -> usize {
        self.head.len() - 1
    }

    pub fn n(&self) -> usize {
        self.tail.len()
    }

    pub fn head(&self) -> &[RingElement] {
        &self.head
    }

    pub fn tail(&self) -> &[RingElement] {
        &self.tail
    }

    /// The head ring `R`.
    pub fn base(&self) -> &Ring {
        &self.base
    }

    /// The tail ring `B`.
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn twist(&self) -> u32 {
        self.twist
    }

    pub fn is_zero(&self) -> bool {
        self.head.iter().chain(self.tail.iter()).all(RingElement::is_zero)
    }

    fn head_vector(&self) -> WittVector {
        WittVector::raw(&self.base, self.head.clone(), self.twist)
    }

    fn head_in_ring(&self) -> Vec<RingElement> {
        self.head
            .iter()
            .map(|x| x.to_ring(&self.ring).expect("structure map checked at construction"))
            .collect()
    }

    /// `I_[m]n`: the image `(f(r_0), ..., f(r_m), b_{m+1}, ..., b_{m+n})` in `W_{m+n}(B)`.
    pub fn include(&self) -> WittVector {
        let mut comps = self.head_in_ring();
        comps.extend(self.tail.iter().cloned());
        WittVector::raw(&self.ring, comps, self.twist)
    }

    /// Witt polynomials of the head over `R` followed by those of the
    /// included vector over `B`.
    pub fn shifted_ghost(&self) -> GhostVector {
        let head = self.head_vector().ghost().entries;
        let full = self.include().ghost().entries;
        GhostVector { entries: head.into_iter().chain(full.into_iter().skip(self.m() + 1)).collect(), shift: Some(self.m()) }
    }

    /// Inverse of [`Self::shifted_ghost`] over exact rings.
    pub fn shifted_ghost_solve(base: &Ring, ring: &Ring, g: &GhostVector) -> Result<ShiftedWittVector> {
        let m = g
            .shift
            .ok_or_else(|| Error::InvalidConfig("plain ghost vector passed to the shifted solver".into()))?;
        if !base.is_exact() || !ring.is_exact() {
            return Err(Error::TorsionBase);
        }
        if !base.maps_into(ring) {
            return Err(Error::BaseMismatch);
        }
        let head_g = &g.entries[..=m];
        let tail_g = &g.entries[m + 1..];
        if head_g.iter().any(|x| x.ring() != base) || tail_g.iter().any(|x| x.ring() != ring) {
            return Err(Error::BaseMismatch);
        }
        let head = Engine::new(base).solve(Vec::new(), head_g)?;
        let known = head.iter().map(|x| x.to_ring(ring)).collect::<Result<Vec<_>>>()?;
        let full = Engine::new(ring).solve(known, tail_g)?;
        let tail = full[m + 1..].to_vec();
        Ok(ShiftedWittVector { head, tail, base: base.clone(), ring: ring.clone(), twist: 0 })
    }

    fn check_compatible(&self, other: &ShiftedWittVector) -> Result<()> {
        if self.base != other.base || self.ring != other.ring {
            return Err(Error::BaseMismatch);
        }
        if self.head.len() != other.head.len() {
            return Err(Error::LengthMismatch { expected: self.head.len(), found: other.head.len() });
        }
        if self.tail.len() != other.tail.len() {
            return Err(Error::LengthMismatch { expected: self.tail.len(), found: other.tail.len() });
        }
        Ok(())
    }

    fn binary(&self, other: &ShiftedWittVector, op: Binary) -> Result<ShiftedWittVector> {
        self.check_compatible(other)?;
        let (hu, hv) = (self.head_vector(), other.head_vector());
        let (iu, iv) = (self.include(), other.include());
        let (head, full) = match op {
            Binary::Add => (hu.add(&hv)?, iu.add(&iv)?),
            Binary::Sub => (hu.sub(&hv)?, iu.sub(&iv)?),
            Binary::Mul => (hu.mul(&hv)?, iu.mul(&iv)?),
        };
        let tail = full.components()[self.m() + 1..].to_vec();
        Ok(self.raw(head.comps, tail, self.twist))
    }

    pub fn add(&self, other: &ShiftedWittVector) -> Result<ShiftedWittVector> {
        self.binary(other, Binary::Add)
    }

    pub fn sub(&self, other: &ShiftedWittVector) -> Result<ShiftedWittVector> {
        self.binary(other, Binary::Sub)
    }

    pub fn mul(&self, other: &ShiftedWittVector) -> Result<ShiftedWittVector> {
        self.binary(other, Binary::Mul)
    }

    /// `T`: drops the last tail entry; the head is never touched.
    pub fn restrict_t(&self) -> Result<ShiftedWittVector> {
        if self.tail.is_empty() {
            return Err(Error::ZeroTail);
        }
        Ok(self.raw(self.head.clone(), self.tail[..self.n() - 1].to_vec(), self.twist))
    }

    /// Lateral Frobenius `F_[m]`: shifted ghost
    /// `<phi(z_0), ..., phi(z_m), z_{m+2}, ..., z_{m+n}>`.
    pub fn lateral_frobenius(&self) -> Result<ShiftedWittVector> {
        if self.tail.is_empty() {
            return Err(Error::ZeroTail);
        }
        let m = self.m();
        let head: Vec<RingElement> = self.head.iter().map(RingElement::phi).collect();
        let eng = Engine::new(&self.ring);
        let z = eng.ghost(&eng.lift(&self.include().comps));
        let known: Vec<RingElement> = head
            .iter()
            .map(|x| x.to_ring(&self.ring).expect("structure map"))
            .collect();
        let known = eng.lift(&known);
        let full = eng.solve(known, &z[m + 2..]).map_err(|e| e.guard("lateral frobenius"))?;
        let tail = eng.settle(&self.ring, full[m + 1..].to_vec());
        Ok(self.raw(head, tail, self.twist + 1))
    }

    /// Lateral Frobenius through the shifted ghost solver; `skip_phi` names a
    /// head ghost entry left without `phi` (a deliberately broken variant).
    pub fn lateral_frobenius_via_ghost(&self, skip_phi: Option<usize>) -> Result<ShiftedWittVector> {
        if self.tail.is_empty() {
            return Err(Error::ZeroTail);
        }
        let m = self.m();
        let g = self.shifted_ghost().entries;
        let head: Vec<RingElement> = g[..=m]
            .iter()
            .enumerate()
            .map(|(i, z)| if Some(i) == skip_phi { z.clone() } else { z.phi() })
            .collect();
        let target = GhostVector::shifted(head, g[m + 2..].to_vec())?;
        let v = ShiftedWittVector::shifted_ghost_solve(&self.base, &self.ring, &target)?;
        Ok(v.with_twist(self.twist + 1))
    }

    /// `E_[m]`: coordinates `F_0(x), ..., F_{m-1+n}(x)`, i.e. the Witt vector
    /// Frobenius of the head over `R` and of the included vector over `B`.
    pub fn shift_e(&self) -> Result<ShiftedWittVector> {
        if self.m() == 0 {
            return Err(Error::ZeroShift);
        }
        let m = self.m();
        let head = self.head_vector().frobenius().map_err(|e| e.guard("shift_E"))?;
        let full = self.include().frobenius().map_err(|e| e.guard("shift_E"))?;
        let tail = full.components()[m..].to_vec();
        Ok(self.raw(head.comps, tail, self.twist + 1))
    }

    /// `E_[m]` through the shifted ghost solver: drops ghost entry `drop`
    /// (`0` for the true map).
    pub fn shift_e_via_ghost(&self, drop: usize) -> Result<ShiftedWittVector> {
        if self.m() == 0 {
            return Err(Error::ZeroShift);
        }
        let m = self.m();
        let mut g = self.shifted_ghost().entries;
        g.remove(drop);
        let mut head = g;
        let tail = head.split_off(m);
        // entries moved across the head/tail boundary get the structure map
        let head = head.into_iter().map(|x| x.to_ring(&self.base)).collect::<Result<Vec<_>>>();
        let head = match head {
            Ok(h) => h,
            Err(_) => return Err(Error::BaseMismatch),
        };
        let tail = tail.into_iter().map(|x| x.to_ring(&self.ring)).collect::<Result<Vec<_>>>()?;
        let target = GhostVector::shifted(head, tail)?;
        let v = ShiftedWittVector::shifted_ghost_solve(&self.base, &self.ring, &target)?;
        Ok(v.with_twist(self.twist + 1))
    }

    /// `E_[m]` by evaluating the universal Frobenius polynomials.
    pub fn shift_e_via_polynomials(&self) -> Result<ShiftedWittVector> {
        if self.m() == 0 {
            return Err(Error::ZeroShift);
        }
        let m = self.m();
        let len = m + self.n();
        let polys = universal_polynomials(UniversalOp::Frobenius, len, &self.ring)?;
        let args = self.include().comps;
        let tail: Vec<RingElement> = polys.polys[m..].iter().map(|p| eval_poly(&self.ring, p, &args)).collect();
        let mut head_args = self.head.clone();
        head_args.resize(len + 1, RingElement::zero(&self.base));
        let head: Vec<RingElement> = polys.polys[..m].iter().map(|p| eval_poly(&self.base, p, &head_args)).collect();
        Ok(self.raw(head, tail, self.twist + 1))
    }

    pub(crate) fn with_twist(mut self, twist: u32) -> ShiftedWittVector {
        self.twist = twist;
        self
    }
}

impl fmt::Display for ShiftedWittVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h: Vec<String> = self.head.iter().map(|c| c.to_string()).collect();
        let t: Vec<String> = self.tail.iter().map(|c| c.to_string()).collect();
        write!(f, "({}; {})", h.join(", "), t.join(", "))
    }
}

impl fmt::Debug for ShiftedWittVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W[{}]{self}", self.m())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2() -> Ring {
        Ring::integers(2).unwrap()
    }

    fn sv(r: &Ring, head: &[i64], tail: &[i64]) -> ShiftedWittVector {
        ShiftedWittVector::from_ints(r, r, head, tail).unwrap()
    }

    #[test]
    fn shifted_ghost_and_solve() {
        let r = z2();
        let v = sv(&r, &[0, 0], &[5]);
        let g = v.shifted_ghost();
        assert_eq!(g.entries(), GhostVector::from_ints(&r, &[0, 0, 20]).entries());
        assert_eq!(ShiftedWittVector::shifted_ghost_solve(&r, &r, &g).unwrap(), v);
        let h = sv(&r, &[3, 5], &[]);
        assert_eq!(h.shifted_ghost().entries(), WittVector::from_ints(&r, &[3, 5]).ghost().entries());
    }

    #[test]
    fn ring_structure() {
        let r = z2();
        assert_eq!(sv(&r, &[1], &[1]).add(&sv(&r, &[1], &[1])).unwrap(), sv(&r, &[2], &[1]));
        assert_eq!(sv(&r, &[0], &[4]).add(&sv(&r, &[0], &[9])).unwrap(), sv(&r, &[0], &[13]));
        assert_eq!(sv(&r, &[1], &[0]).mul(&sv(&r, &[1], &[0])).unwrap(), sv(&r, &[1], &[0]));
        let u = sv(&r, &[1], &[1]);
        assert_eq!(u.add(&u).unwrap().include(), u.include().add(&u.include()).unwrap());
    }

    #[test]
    fn include_over_truncated_tail() {
        let r = z2();
        let b = r.truncated(3);
        let v = ShiftedWittVector::from_ints(&r, &b, &[2, 3], &[5]).unwrap();
        assert_eq!(v.include(), WittVector::from_ints(&b, &[2, 3, 5]));
        assert!(ShiftedWittVector::zero(&r, &b, 1, 1).unwrap().include().is_zero());
    }

    #[test]
    fn restriction() {
        let r = z2();
        let v = sv(&r, &[0, 0], &[1, 1]);
        let t = v.restrict_t().unwrap();
        assert_eq!(t, sv(&r, &[0, 0], &[1]));
        assert_eq!(t.shifted_ghost().entries(), &v.shifted_ghost().entries()[..3]);
        assert_eq!(t.restrict_t().unwrap().restrict_t(), Err(Error::ZeroTail));
    }

    #[test]
    fn lateral_frobenius_examples() {
        let r = z2();
        assert_eq!(sv(&r, &[0, 0], &[1, 0]).lateral_frobenius().unwrap(), sv(&r, &[0, 0], &[1]));
        assert_eq!(sv(&r, &[1], &[1, 1]).lateral_frobenius().unwrap(), sv(&r, &[1], &[3]));
        assert_eq!(sv(&r, &[1], &[1, 1]).lateral_frobenius_via_ghost(None).unwrap(), sv(&r, &[1], &[3]));
        assert_eq!(sv(&r, &[1], &[]).lateral_frobenius(), Err(Error::ZeroTail));
    }

    #[test]
    fn shift_e_examples() {
        let r = z2();
        let v = sv(&r, &[1, 1], &[1]);
        let expected = sv(&r, &[3], &[-1]);
        assert_eq!(v.shift_e().unwrap(), expected);
        assert_eq!(v.shift_e_via_ghost(0).unwrap(), expected);
        assert_eq!(v.shift_e_via_polynomials().unwrap(), expected);
        assert_eq!(sv(&r, &[0, 0], &[5]).shift_e().unwrap(), sv(&r, &[0], &[10]));
        assert_eq!(sv(&r, &[4], &[5]).shift_e(), Err(Error::ZeroShift));
    }

    #[test]
    fn shift_e_symbolic_zero_head() {
        let r = z2();
        let b = r.adjoin_variables(&["t0", "t1"]).unwrap();
        let t0 = RingElement::var(&b, "t0").unwrap();
        let t1 = RingElement::var(&b, "t1").unwrap();
        let v = ShiftedWittVector::zero_head(&r, 1, vec![t0.clone(), t1.clone()]).unwrap();
        let e = v.shift_e().unwrap();
        let expected = WittVector::new(&b, vec![t0.clone(), t1]).unwrap().mult_pi();
        assert_eq!(e.tail(), expected.components());
        assert!(e.head().iter().all(RingElement::is_zero));
    }

    #[test]
    fn truncated_tail_agrees_with_exact() {
        let r = Ring::integers(3).unwrap();
        let b = r.truncated(3);
        let v = ShiftedWittVector::from_ints(&r, &r, &[4, -2], &[7, 11]).unwrap();
        let vt = ShiftedWittVector::from_ints(&r, &b, &[4, -2], &[7, 11]).unwrap();
        let lf = v.lateral_frobenius().unwrap();
        let lft = vt.lateral_frobenius().unwrap();
        let reduced: Vec<RingElement> = lf.tail().iter().map(|x| x.to_ring(&b).unwrap()).collect();
        assert_eq!(lft.tail(), reduced.as_slice());
        let e = v.shift_e().unwrap();
        let et = vt.shift_e().unwrap();
        let reduced: Vec<RingElement> = e.tail().iter().map(|x| x.to_ring(&b).unwrap()).collect();
        assert_eq!(et.tail(), reduced.as_slice());
    }
}
