//! Shifted Witt vectors: inclusion, shifted ghost map, the lateral
//! Frobenius and the shift E.

use wittlab::ring::Ring;
use wittlab::shifted::ShiftedWittVector;

fn main() -> wittlab::Result<()> {
    let z2 = Ring::integers(2)?;
    let v = ShiftedWittVector::from_ints(&z2, &z2, &[3, 1], &[2, -5])?;
    println!("v        = {v}  (m = {}, n = {})", v.m(), v.n());
    println!("I(v)     = {}", v.include());
    println!("ghost(v) = {}", v.shifted_ghost());
    println!("T(v)     = {}", v.restrict_t()?);
    println!("F(v)     = {}", v.lateral_frobenius()?);
    println!("E(v)     = {}", v.shift_e()?);

    // E sends (0, 0; t) to (0; pi t)
    let t = ShiftedWittVector::from_ints(&z2, &z2, &[0, 0], &[5])?;
    println!("E{t} = {}", t.shift_e()?);

    let w = ShiftedWittVector::from_ints(&z2, &z2, &[1, 1], &[0, 7])?;
    println!("v + w = {}", v.add(&w)?);
    println!("v * w = {}", v.mul(&w)?);
    Ok(())
}
