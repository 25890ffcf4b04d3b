//! Ghost components and their inverse over Z with p = 2.

use wittlab::witt::{GhostVector, WittVector};
use wittlab::ring::Ring;

fn main() -> wittlab::Result<()> {
    let z2 = Ring::integers(2)?;
    let v = WittVector::from_ints(&z2, &[3, 5, -1]);
    let g = v.ghost();
    println!("ghost{v} = {g}");
    println!("solve{g} = {}", WittVector::ghost_solve(&g)?);

    // (1, 0) is not the ghost vector of anything integral
    let bad = GhostVector::from_ints(&z2, &[1, 0]);
    match WittVector::ghost_solve(&bad) {
        Err(e) => println!("solve{bad}: {} ({e})", e.name()),
        Ok(w) => println!("unexpected: {w}"),
    }
    Ok(())
}
