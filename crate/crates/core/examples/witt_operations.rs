//! Ring operations, Frobenius, Verschiebung and multiplication by pi on
//! Witt vectors, plus the delta-structure they come from.

use wittlab::ring::{Ring, RingElement};
use wittlab::witt::{delta, WittVector};

fn main() -> wittlab::Result<()> {
    let z3 = Ring::integers(3)?;
    let x = WittVector::from_ints(&z3, &[2, 1, 4]);
    let y = WittVector::from_ints(&z3, &[1, -1, 0]);
    println!("x = {x}, y = {y}");
    println!("x + y = {}", x.add(&y)?);
    println!("x * y = {}", x.mul(&y)?);
    println!("-x    = {}", x.neg());
    println!("F x   = {}", x.frobenius()?);
    println!("V x   = {}", x.verschiebung());
    println!("F V x = {}", x.verschiebung().frobenius()?);
    println!("pi x  = {}", x.mult_pi());

    let r = RingElement::from_int(&z3, 4);
    println!("[4]   = {}", WittVector::teichmuller(&r, 3));
    println!("delta(4) = {}", delta(&r)?);
    println!("exp_delta(4) = {}", WittVector::exp_delta(&r, 3)?);
    Ok(())
}
