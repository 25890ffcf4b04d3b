//! Arithmetic in Z[x]/(x^2 - 5) with pi = x: valuations, exact division by
//! pi, the Frobenius lift and truncation.

use wittlab::ring::{Ring, RingElement};
use wittlab::witt::c_pi;

fn main() -> wittlab::Result<()> {
    let ring = Ring::over_order(5, &[-5, 0, 1])?;
    println!("ring: {}  (e = {}, q = {})", ring.describe(), ring.e(), ring.q());

    let pi = RingElement::pi(&ring);
    let five = RingElement::from_int(&ring, 5);
    println!("v(pi) = {:?}, v(5) = {:?}", pi.pi_valuation(), five.pi_valuation());
    println!("5 / pi = {}", five.exact_div_pi()?);

    let x = &pi + &RingElement::from_int(&ring, 3);
    println!("phi({x}) = {}", x.phi());

    let y = RingElement::from_int(&ring, 7);
    println!("C_pi({x}, {y}) = {}", c_pi(&x, &y)?);

    let small = ring.truncated(3);
    let big = RingElement::from_int(&ring, 1234).to_ring(&small)?;
    println!("1234 mod pi^3 = {big}");

    let poly = ring.adjoin_variables(&["t"])?;
    let t = RingElement::var(&poly, "t")?;
    println!("phi(t + pi) = {}", (&t + &RingElement::pi(&poly)).phi());
    Ok(())
}
