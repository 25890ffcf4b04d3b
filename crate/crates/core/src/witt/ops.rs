use super::engine::Engine;
use super::vector::{GhostVector, WittVector};
use crate::error::{Error, Result};
use crate::ring::RingElement;

enum Binary {
    Add,
    Sub,
    Mul,
}

impl WittVector {
    /// Ghost coordinates `w_i = x_0^(q^i) + pi x_1^(q^(i-1)) + ... + pi^i x_i`.
    pub fn ghost(&self) -> GhostVector {
        let eng = Engine::new(&self.ring);
        let g = eng.ghost(&eng.lift(&self.comps));
        GhostVector { entries: eng.settle(&self.ring, g), shift: None }
    }

    /// The unique vector with the given ghost coordinates.
    pub fn ghost_solve(g: &GhostVector) -> Result<WittVector> {
        if g.shift.is_some() {
            return Err(Error::InvalidConfig("shifted ghost vector passed to the plain solver".into()));
        }
        let ring = g.entries[0].ring().clone();
        if !ring.is_exact() {
            return Err(Error::TorsionBase);
        }
        let eng = Engine::new(&ring);
        let comps = eng.solve(Vec::new(), &g.entries)?;
        Ok(WittVector::raw(&ring, comps, 0))
    }

    fn binary(&self, other: &WittVector, op: Binary) -> Result<WittVector> {
        self.check_compatible(other)?;
        let eng = Engine::new(&self.ring);
        let a = eng.ghost(&eng.lift(&self.comps));
        let b = eng.ghost(&eng.lift(&other.comps));
        let g: Vec<RingElement> = a
            .iter()
            .zip(b.iter())
            .enumerate()
            .map(|(i, (x, y))| {
                let v = match op {
                    Binary::Add => x + y,
                    Binary::Sub => x - y,
                    Binary::Mul => x * y,
                };
                eng.red(v, i)
            })
            .collect();
        let comps = eng.solve(Vec::new(), &g).map_err(|e| e.guard("witt ring operation"))?;
        Ok(WittVector::raw(&self.ring, eng.settle(&self.ring, comps), self.twist))
    }

    pub fn add(&self, other: &WittVector) -> Result<WittVector> {
        self.binary(other, Binary::Add)
    }

    pub fn sub(&self, other: &WittVector) -> Result<WittVector> {
        self.binary(other, Binary::Sub)
    }

    pub fn mul(&self, other: &WittVector) -> Result<WittVector> {
        self.binary(other, Binary::Mul)
    }

    pub fn neg(&self) -> WittVector {
        WittVector::zero(&self.ring, self.n()).sub(self).expect("same shape").with_twist(self.twist)
    }

    pub(crate) fn with_twist(mut self, twist: u32) -> WittVector {
        self.twist = twist;
        self
    }

    /// `T`: drops the last component.
    pub fn truncate(&self) -> Result<WittVector> {
        if self.n() == 0 {
            return Err(Error::ZeroLength);
        }
        Ok(WittVector::raw(&self.ring, self.comps[..self.n()].to_vec(), self.twist))
    }

    /// Keeps components `0..=n`.
    pub fn truncate_to(&self, n: usize) -> Result<WittVector> {
        if n > self.n() {
            return Err(Error::BadLength(format!("cannot truncate length {} to {n}", self.n())));
        }
        Ok(WittVector::raw(&self.ring, self.comps[..=n].to_vec(), self.twist))
    }

    /// `F`: the ring map `W_n -> W_{n-1}` shifting the ghost left.
    pub fn frobenius(&self) -> Result<WittVector> {
        if self.n() == 0 {
            return Err(Error::ZeroLength);
        }
        let eng = Engine::new(&self.ring);
        let g = eng.ghost(&eng.lift(&self.comps));
        let comps = eng.solve(Vec::new(), &g[1..]).map_err(|e| e.guard("frobenius"))?;
        Ok(WittVector::raw(&self.ring, eng.settle(&self.ring, comps), self.twist + 1))
    }

    pub fn frobenius_pow(&self, k: usize) -> Result<WittVector> {
        let mut v = self.clone();
        for _ in 0..k {
            v = v.frobenius()?;
        }
        Ok(v)
    }

    /// `V`: `(x_0, ..., x_n) -> (0, x_0, ..., x_n)`.
    pub fn verschiebung(&self) -> WittVector {
        let mut comps = Vec::with_capacity(self.comps.len() + 1);
        comps.push(RingElement::zero(&self.ring));
        comps.extend(self.comps.iter().cloned());
        WittVector::raw(&self.ring, comps, self.twist.saturating_sub(1))
    }

    pub fn verschiebung_pow(&self, k: usize) -> WittVector {
        let mut v = self.clone();
        for _ in 0..k {
            v = v.verschiebung();
        }
        v
    }

    /// The `(pi)` map: the vector whose ghost is `pi` times the ghost of `self`.
    pub fn mult_pi(&self) -> WittVector {
        let eng = Engine::new(&self.ring);
        let g: Vec<RingElement> = eng
            .ghost(&eng.lift(&self.comps))
            .into_iter()
            .enumerate()
            .map(|(i, w)| eng.red(w.mul_pi_pow(1), i))
            .collect();
        let comps = eng
            .solve(Vec::new(), &g)
            .map_err(|e| e.guard("mult_pi"))
            .expect("pi times a ghost vector is a ghost vector");
        WittVector::raw(&self.ring, eng.settle(&self.ring, comps), self.twist)
    }

    /// `exp_delta(r)`: the vector with ghost `<r, phi(r), ..., phi^n(r)>`.
    pub fn exp_delta(r: &RingElement, n: usize) -> Result<WittVector> {
        let ring = r.ring().clone();
        if !ring.is_exact() {
            return Err(Error::TorsionBase);
        }
        let mut g = Vec::with_capacity(n + 1);
        let mut cur = r.clone();
        for _ in 0..=n {
            let next = cur.phi();
            g.push(cur);
            cur = next;
        }
        let eng = Engine::new(&ring);
        let comps = eng.solve(Vec::new(), &g).map_err(|e| e.guard("exp_delta"))?;
        Ok(WittVector::raw(&ring, comps, 0))
    }

    /// Action of a base scalar `c` through `exp_delta`.
    pub fn scalar_mul(&self, c: &RingElement) -> Result<WittVector> {
        let base = c.ring().exact_cover();
        let e = WittVector::exp_delta(&c.lift().rehome(&base), self.n())?;
        let e = e.to_ring(&self.ring)?;
        Ok(e.mul(self)?.with_twist(self.twist))
    }
}

/// `delta(r) = (phi(r) - r^q) / pi`.
pub fn delta(r: &RingElement) -> Result<RingElement> {
    if !r.ring().is_exact() {
        return Err(Error::TorsionBase);
    }
    let num = &r.phi() - &r.pow(r.ring().q());
    num.exact_div_pi().map_err(|e| e.guard("delta"))
}

/// `C_pi` re-exported next to `delta` for the axioms.
pub fn c_pi(x: &RingElement, y: &RingElement) -> Result<RingElement> {
    RingElement::c_pi(x, y)
}
