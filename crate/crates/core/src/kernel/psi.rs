//! `Psi_1^[m](t) = pi^-(m+1) log(pi^(m+1) t)` as a power series with
//! coefficients `a_k pi^((m+1)(k-1))`.

use super::fgl::FormalGroupLaw;
use crate::error::{Error, Result};
use crate::ring::{Fraction, RingElement};

/// How integrality of the series coefficients is enforced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PsiPolicy {
    /// Refuse unless `e <= p - 2`.
    #[default]
    Strict,
    /// Check the valuation of every coefficient that is used.
    Audit,
}

/// Coefficients `c_1..c_d` of `Psi_1^[m]`.
pub fn psi_coefficients(group: &FormalGroupLaw, m: usize, d: u32) -> Result<Vec<Fraction>> {
    let order = group.order();
    let logs = group.log_coefficients(d)?;
    let shift = m as u64 + 1;
    Ok(logs
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let pw = order.pi_pow(shift * i as u64);
            a.mul_scalar(order, &pw)
        })
        .collect())
}

/// Number of terms needed so that every dropped coefficient has valuation
/// at least `prec`. Log coefficients have the form `b / k` with `b`
/// integral, so `v(c_k) >= (m+1)(k-1) - e log_p k`.
pub fn psi_degree(group: &FormalGroupLaw, m: usize, prec: u64) -> u32 {
    let order = group.order();
    let e = order.degree() as f64;
    let p = order.p() as f64;
    let s = m as f64 + 1.0;
    let bound = |k: f64| s * (k - 1.0) - e * k.ln() / p.ln();
    // the bound is increasing from here on
    let start = (e / (s * p.ln())).ceil().max(1.0);
    let mut k = 1.0f64;
    while k < start || bound(k + 1.0) < prec as f64 {
        k += 1.0;
    }
    k as u32
}

/// Evaluates `Psi_1^[m](t0)` in `B / pi^prec`, or exactly when `prec` is
/// `None` and the logarithm is a polynomial.
pub fn psi_map(
    group: &FormalGroupLaw,
    m: usize,
    t0: &RingElement,
    prec: Option<u64>,
    policy: PsiPolicy,
) -> Result<RingElement> {
    let ring = t0.ring();
    if ring.order() != group.order() {
        return Err(Error::BaseMismatch);
    }
    if policy == PsiPolicy::Strict && !ring.psi_integral() {
        return Err(Error::NonIntegralPsi("e ≤ p−2 violated".into()));
    }
    let prec = match (prec, ring.trunc()) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    };
    let (target, d) = match prec {
        Some(n) => (ring.truncated(n), psi_degree(group, m, n)),
        None if group.is_additive() => (ring.clone(), 1),
        None => {
            return Err(Error::PrecisionRequired(format!(
                "the logarithm of {} is an infinite series",
                group.tag()
            )))
        }
    };
    let order = group.order();
    let t = t0.to_ring(&target)?;
    let mut acc = RingElement::zero(&target);
    let mut pw = RingElement::one(&target);
    for (i, c) in psi_coefficients(group, m, d)?.iter().enumerate() {
        pw = &pw * &t;
        if c.is_zero() {
            continue;
        }
        let v = c.valuation(order).unwrap_or(0);
        if v < 0 {
            return Err(Error::NonIntegralPsi(format!("coefficient of degree {} has valuation {v}", i + 1)));
        }
        let c = match prec {
            Some(n) => c.reduce(order, n),
            None => c.as_scalar().cloned(),
        }
        .ok_or_else(|| Error::Internal("integral coefficient failed to reduce".into()))?;
        acc = &acc + &pw.scale(&c);
    }
    Ok(acc)
}
