//! Inputs and verdicts for a single trial.

use std::sync::Arc;

use rand::Rng as _;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::json;
use crate::kernel::{FormalGroupLaw, KernelPoint};
use crate::ring::{Mono, Poly, Ring, RingElement};
use crate::shifted::ShiftedWittVector;
use crate::witt::{GhostVector, WittVector};

/// Integer coordinates are drawn uniformly from `[-BOUND, BOUND]`.
pub const BOUND: i64 = 1000;
/// Polynomial inputs have total degree at most 2 and coefficients in
/// `[-POLY_BOUND, POLY_BOUND]`.
pub const POLY_BOUND: i64 = 3;

pub(crate) enum Source {
    Random(ChaCha8Rng),
    /// Hands out the variables of the ring in order.
    Symbolic { next: usize },
}

pub(crate) struct Trial {
    pub ring: Ring,
    source: Source,
    inputs: Vec<(String, Value)>,
}

pub(crate) enum Verdict {
    Pass,
    Fail { check: String, lhs: Value, rhs: Value },
}

impl Verdict {
    pub fn fail(check: &str, lhs: Value, rhs: Value) -> Verdict {
        Verdict::Fail { check: check.to_string(), lhs, rhs }
    }
}

/// JSON view of values compared by laws.
pub(crate) trait Encode {
    fn encode(&self) -> Value;
}

impl Encode for RingElement {
    fn encode(&self) -> Value {
        json::element_to_json(self)
    }
}

impl Encode for Vec<RingElement> {
    fn encode(&self) -> Value {
        json::elements_to_json(self)
    }
}

impl Encode for WittVector {
    fn encode(&self) -> Value {
        json::witt_to_json(self)
    }
}

impl Encode for GhostVector {
    fn encode(&self) -> Value {
        json::ghost_to_json(self)
    }
}

impl Encode for ShiftedWittVector {
    fn encode(&self) -> Value {
        json::shifted_to_json(self)
    }
}

impl Encode for KernelPoint {
    fn encode(&self) -> Value {
        json::point_to_json(self)
    }
}

/// Returns a failing verdict from the enclosing law when the sides differ.
macro_rules! expect_eq {
    ($check:expr, $lhs:expr, $rhs:expr) => {{
        let (l, r) = (&$lhs, &$rhs);
        if l != r {
            return Ok($crate::harness::trial::Verdict::fail(
                &$check,
                $crate::harness::trial::Encode::encode(l),
                $crate::harness::trial::Encode::encode(r),
            ));
        }
    }};
}

pub(crate) use expect_eq;

impl Trial {
    pub fn new(ring: &Ring, source: Source) -> Trial {
        Trial { ring: ring.clone(), source, inputs: Vec::new() }
    }

    pub fn inputs(&self) -> Value {
        json::object(self.inputs.iter().map(|(k, v)| (k.as_str(), v.clone())).collect())
    }

    fn random_poly(ring: &Ring, rng: &mut ChaCha8Rng) -> RingElement {
        let order = ring.order();
        let k = ring.nvars();
        let mut terms = Vec::new();
        // monomials of total degree <= 2
        let mut monos = vec![Mono::from_elem(0, k)];
        for i in 0..k {
            let mut a = Mono::from_elem(0, k);
            a[i] = 1;
            monos.push(a.clone());
            for j in i..k {
                let mut b = a.clone();
                b[j] += 1;
                monos.push(b);
            }
        }
        for m in monos {
            let coords: Vec<_> =
                (0..order.degree()).map(|_| rng.gen_range(-POLY_BOUND..=POLY_BOUND).into()).collect();
            terms.push((m, order.from_coords(&coords).expect("degree-many coordinates")));
        }
        RingElement::from_poly(ring, Poly::from_terms(order, terms))
    }

    /// A fresh element of the trial ring.
    pub fn elem(&mut self) -> Result<RingElement> {
        let ring = &self.ring;
        match &mut self.source {
            Source::Random(rng) if ring.nvars() > 0 => Ok(Trial::random_poly(ring, rng)),
            Source::Random(rng) => {
                let order = ring.order();
                let coords: Vec<_> = (0..order.degree()).map(|_| rng.gen_range(-BOUND..=BOUND).into()).collect();
                Ok(RingElement::from_scalar(ring, order.from_coords(&coords)?))
            }
            Source::Symbolic { next } => {
                // the second half of the variables are the delta partners
                if *next >= ring.nvars() / 2 {
                    return Err(Error::Internal("symbolic trial ran out of variables".into()));
                }
                *next += 1;
                Ok(RingElement::var_at(ring, *next - 1))
            }
        }
    }

    fn elems(&mut self, k: usize) -> Result<Vec<RingElement>> {
        (0..k).map(|_| self.elem()).collect()
    }

    pub fn element(&mut self, name: &str) -> Result<RingElement> {
        let x = self.elem()?;
        self.inputs.push((name.to_string(), x.encode()));
        Ok(x)
    }

    /// A Witt vector with `len` components.
    pub fn witt(&mut self, name: &str, len: usize) -> Result<WittVector> {
        let comps = self.elems(len)?;
        let v = WittVector::new(&self.ring, comps)?;
        self.inputs.push((name.to_string(), v.encode()));
        Ok(v)
    }

    pub fn shifted(&mut self, name: &str, m: usize, n: usize) -> Result<ShiftedWittVector> {
        let head = self.elems(m + 1)?;
        let tail = self.elems(n)?;
        let v = ShiftedWittVector::new(&self.ring, &self.ring, head, tail)?;
        self.inputs.push((name.to_string(), v.encode()));
        Ok(v)
    }

    /// A kernel point with coordinates in `target`, an algebra over the
    /// trial ring.
    pub fn point(
        &mut self,
        name: &str,
        group: &Arc<FormalGroupLaw>,
        target: &Ring,
        m: usize,
        n: usize,
    ) -> Result<KernelPoint> {
        let coords = self
            .elems(n)?
            .into_iter()
            .map(|x| x.to_ring(target))
            .collect::<Result<Vec<_>>>()?;
        let t = KernelPoint::new(group, &self.ring, m, coords)?;
        self.inputs.push((name.to_string(), t.encode()));
        Ok(t)
    }
}

/// `O[x_0..x_{k-1}, d_0..d_{k-1}]` with `phi(x_i) = x_i^q + pi d_i`, so
/// that symbolic identities hold for an arbitrary Frobenius lift.
pub(crate) fn symbolic_ring(base: &Ring, k: usize) -> Result<Ring> {
    let mut names: Vec<String> = (0..k).map(|i| format!("x{i}")).collect();
    names.extend((0..k).map(|i| format!("d{i}")));
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let mut ring = base.adjoin_variables(&refs)?;
    let q = ring.q();
    for i in 0..k {
        let x = RingElement::var_at(&ring, i);
        let d = RingElement::var_at(&ring, k + i);
        let image = &x.pow(q) + &d.mul_pi_pow(1);
        ring = ring.with_var_phi(&names[i], &image)?;
    }
    Ok(ring)
}
