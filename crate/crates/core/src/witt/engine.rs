//! Ghost transform and triangular solve with optional precision tracking.
//!
//! Over `B = B0 / pi^N` every computation runs on representatives in the
//! exact cover `B0`. Ghost entry `i` is only meaningful modulo `pi^(N + i)`:
//! changing a component by a multiple of `pi^N` moves `pi^j x_j^(q^(i-j))` by
//! a multiple of `pi^(N + i)`. The solve step divides an entry known modulo
//! `pi^(N + i)` by `pi^i`, which yields the component modulo `pi^N`, so every
//! intermediate quantity can be reduced as soon as it is produced.

use crate::error::{Error, Result};
use crate::ring::{Ring, RingElement, Scalar};

pub(crate) struct Engine {
    exact: Ring,
    prec: Option<u64>,
    q: u64,
}

impl Engine {
    pub(crate) fn new(ring: &Ring) -> Engine {
        Engine { exact: ring.exact_cover(), prec: ring.trunc(), q: ring.q() }
    }

    pub(crate) fn exact(&self) -> &Ring {
        &self.exact
    }

    /// Reduces `x` to the precision needed at ghost index `i`.
    pub(crate) fn red(&self, x: RingElement, i: usize) -> RingElement {
        match self.prec {
            Some(n) => x.mod_pi_pow(n + i as u64),
            None => x,
        }
    }

    /// Representatives of `xs` in the exact cover.
    pub(crate) fn lift(&self, xs: &[RingElement]) -> Vec<RingElement> {
        xs.iter().map(|x| x.lift().rehome(&self.exact)).collect()
    }

    /// Moves representatives back into `ring` (a quotient of the cover).
    pub(crate) fn settle(&self, ring: &Ring, xs: Vec<RingElement>) -> Vec<RingElement> {
        xs.into_iter().map(|x| RingElement::from_poly(ring, x.poly().clone())).collect()
    }

    fn pi_pows(&self, len: usize) -> Vec<Scalar> {
        let o = self.exact.order();
        let mut out = Vec::with_capacity(len);
        let mut cur = o.one();
        for _ in 0..len {
            out.push(cur.clone());
            cur = o.mul(&cur, &o.pi());
        }
        out
    }

    /// Ghost entries of lifted components.
    pub(crate) fn ghost(&self, xs: &[RingElement]) -> Vec<RingElement> {
        let pis = self.pi_pows(xs.len());
        let mut pw: Vec<RingElement> = Vec::with_capacity(xs.len());
        let mut out = Vec::with_capacity(xs.len());
        for (i, x) in xs.iter().enumerate() {
            self.advance(&mut pw, i);
            pw.push(self.red(x.clone(), i));
            out.push(self.combine(&pw, &pis, i));
        }
        out
    }

    /// Raises every stored power `x_j^(q^(i-1-j))` to `x_j^(q^(i-j))`.
    fn advance(&self, pw: &mut [RingElement], i: usize) {
        for p in pw.iter_mut() {
            *p = self.red(p.pow(self.q), i);
        }
    }

    fn combine(&self, pw: &[RingElement], pis: &[Scalar], i: usize) -> RingElement {
        let mut acc = RingElement::zero(&self.exact);
        for (j, p) in pw.iter().enumerate() {
            acc = &acc + &p.scale(&pis[j]);
        }
        self.red(acc, i)
    }

    /// Extends the known components `xs` (indices `0..k`) by solving for the
    /// components whose ghost entries are `targets` (indices `k..`).
    pub(crate) fn solve(
        &self,
        mut xs: Vec<RingElement>,
        targets: &[RingElement],
    ) -> Result<Vec<RingElement>> {
        let k = xs.len();
        let total = k + targets.len();
        let pis = self.pi_pows(total);
        let mut pw: Vec<RingElement> = Vec::with_capacity(total);
        for i in 0..total {
            self.advance(&mut pw, i);
            if i < k {
                pw.push(self.red(xs[i].clone(), i));
                continue;
            }
            let partial = self.combine(&pw, &pis, i);
            let num = self.red(&targets[i - k] - &partial, i);
            let x = num
                .exact_div_pi_pow(i as u64)
                .map_err(|e| match e {
                    Error::NonDivisible => Error::NonIntegral { index: i },
                    other => other,
                })?;
            let x = self.red(x, 0);
            pw.push(x.clone());
            xs.push(x);
        }
        Ok(xs)
    }
}
