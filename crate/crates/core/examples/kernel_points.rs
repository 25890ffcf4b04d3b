//! Points of jet kernels of the additive and multiplicative formal groups.

use std::sync::Arc;

use wittlab::kernel::{FormalGroupLaw, KernelPoint};
use wittlab::ring::Ring;

fn main() -> wittlab::Result<()> {
    let z2 = Ring::integers(2)?;
    let ga = Arc::new(FormalGroupLaw::additive(z2.order()));
    let t = KernelPoint::from_ints(&ga, &z2, &z2, 0, &[1, 0])?;
    let s = KernelPoint::from_ints(&ga, &z2, &z2, 0, &[1, 3])?;
    println!("t = {t}, embedded as {}", t.embed());
    println!("difference character of t = {}", t.difference_character()?);
    println!("difference character of s = {}", s.difference_character()?);

    let z5 = Ring::integers(5)?;
    let gm = Arc::new(FormalGroupLaw::multiplicative(z5.order()));
    let r = z5.truncated(6);
    let a = KernelPoint::from_ints(&gm, &z5, &r, 1, &[3, 1])?;
    let b = KernelPoint::from_ints(&gm, &z5, &r, 1, &[8, 2])?;
    println!("a (+) b = {}", a.add(&b)?);
    println!("lateral F(a) = {}", a.lateral_f()?);
    println!("Phi(a) = {}", a.phi_map()?);
    println!("u(a) = {}", a.project(1)?);
    Ok(())
}
