//! The logarithm-based map Psi on the first kernel of the multiplicative
//! group at p = 5, and its refusal when integrality cannot be guaranteed.

use wittlab::kernel::{psi_coefficients, psi_degree, psi_map, FormalGroupLaw, PsiPolicy};
use wittlab::ring::{Ring, RingElement};

fn main() -> wittlab::Result<()> {
    let z5 = Ring::integers(5)?;
    let gm = FormalGroupLaw::multiplicative(z5.order());
    let prec = 6;
    for m in 0..3 {
        let d = psi_degree(&gm, m, prec);
        println!("m = {m}: {d} terms needed modulo 5^{prec}");
    }
    let c = psi_coefficients(&gm, 1, 4)?;
    let o = z5.order();
    let shown: Vec<String> = c.iter().map(|f| format!("{}/{}", o.fmt_scalar(f.num()), f.den())).collect();
    println!("coefficients for m = 1: {}", shown.join(", "));
    for t in [1, 2, 7] {
        let x = RingElement::from_int(&z5, t);
        println!("Psi^[1]({t}) = {}", psi_map(&gm, 1, &x, Some(prec), PsiPolicy::Strict)?);
    }

    let z2 = Ring::integers(2)?;
    let gm2 = FormalGroupLaw::multiplicative(z2.order());
    let one = RingElement::from_int(&z2, 1);
    if let Err(e) = psi_map(&gm2, 0, &one, Some(prec), PsiPolicy::Strict) {
        println!("p = 2, strict: {e}");
    }
    println!("p = 2, audit: {}", psi_map(&gm2, 0, &one, Some(prec), PsiPolicy::Audit)?);
    Ok(())
}
