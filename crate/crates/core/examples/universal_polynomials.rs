//! Universal sum, product and Frobenius polynomials, with a term budget.

use wittlab::ring::Ring;
use wittlab::witt::{universal_polynomials, universal_polynomials_with_budget, UniversalOp};

fn main() -> wittlab::Result<()> {
    let z2 = Ring::integers(2)?;
    for op in [UniversalOp::Sum, UniversalOp::Prod] {
        let u = universal_polynomials(op, 1, &z2)?;
        for (i, p) in u.elements().iter().enumerate() {
            println!("{op}_{i} = {p}");
        }
    }
    let z3 = Ring::integers(3)?;
    let f = universal_polynomials(UniversalOp::Frobenius, 1, &z3)?;
    println!("F_0 over p=3: {}", f.elements()[0]);

    match universal_polynomials_with_budget(UniversalOp::Prod, 6, &z3, 1000) {
        Err(e) => println!("prod n=6 with budget 1000: {e}"),
        Ok(u) => println!("prod n=6: {} terms", u.term_count()),
    }
    Ok(())
}
