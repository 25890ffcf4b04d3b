//! Loading a formal group law from its JSON coefficient table and using it
//! on kernel points.

use std::sync::Arc;

use wittlab::kernel::{FormalGroupLaw, KernelPoint};
use wittlab::ring::Ring;

const TABLE: &str = r#"{
  "degree": 2,
  "polynomial": true,
  "coeffs": [
    {"i": 1, "j": 0, "c": 1},
    {"i": 0, "j": 1, "c": 1},
    {"i": 1, "j": 1, "c": 3}
  ]
}"#;

fn main() -> wittlab::Result<()> {
    let z5 = Ring::integers(5)?;
    let g = Arc::new(FormalGroupLaw::from_json(z5.order(), "x+y+3xy", TABLE)?);
    println!("loaded {} of degree {}", g.tag(), g.degree());
    let o = z5.order();
    let logs: Vec<String> =
        g.log_coefficients(4)?.iter().map(|f| format!("{}/{}", o.fmt_scalar(f.num()), f.den())).collect();
    println!("log coefficients: {}", logs.join(", "));

    let r = z5.truncated(5);
    let a = KernelPoint::from_ints(&g, &z5, &r, 0, &[1, 2])?;
    let b = KernelPoint::from_ints(&g, &z5, &r, 0, &[4, 0])?;
    println!("{a} (+) {b} = {}", a.add(&b)?);

    // X + Y + X^2 Y is not commutative
    let bad = r#"{"degree": 3, "polynomial": true,
                  "coeffs": [{"i":1,"j":0,"c":1},{"i":0,"j":1,"c":1},{"i":2,"j":1,"c":1}]}"#;
    match FormalGroupLaw::from_json(z5.order(), "bad", bad) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => println!("unexpectedly accepted"),
    }
    Ok(())
}
