//! Running identity checks through the harness, including one with a
//! deliberately broken operator.

use wittlab::harness::{run_law, symbolic_verify, LawConfig, Operators, Sabotage};

fn main() -> wittlab::Result<()> {
    let cfg = LawConfig::integers(2)?.only(1, 2);
    let ok = Operators::default();
    for id in ["L2", "L6", "L8"] {
        let r = run_law(id, &cfg, 50, 7, &ok)?;
        println!("{id}: {} after {} trials", r.status, r.trials);
    }
    let sym = symbolic_verify("L6", &cfg, 1, 2, &ok)?;
    println!("L6 symbolic at m=1 n=2: {}", sym.status);

    let broken = Operators::sabotaged(Sabotage::ShiftDropsWrongEntry);
    let r = run_law("L8", &cfg, 100, 7, &broken)?;
    println!("L8 with {}: {}", Sabotage::ShiftDropsWrongEntry.name(), r.status);
    if let Some(ce) = r.counterexample {
        println!("counterexample: {ce}");
    }
    Ok(())
}
