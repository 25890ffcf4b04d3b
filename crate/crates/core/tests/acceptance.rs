//! Acceptance criteria A1 to A12. Prints one line per criterion with its
//! wall time against the limit and exits non-zero if any criterion fails.

mod common;

use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use common::{bigs, ints, zghost};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use wittlab::harness::report::REPORT_SCHEMA;
use wittlab::harness::{
    default_matrix, run_law, run_suite, symbolic_verify, LawConfig, Operators, Sabotage, Status, SuiteOptions,
    TrialReport,
};
use wittlab::kernel::{psi_coefficients, psi_degree, FormalGroupLaw};
use wittlab::ring::{Ring, RingElement};
use wittlab::witt::{universal_ring, PolyCache, UniversalOp, WittVector, DEFAULT_BUDGET};

const SEED: u64 = 2024;

type Check = Result<String, String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn expect_pass(r: &TrialReport) -> Result<(), String> {
    ensure(r.status == Status::Pass, || {
        format!(
            "{} {} on {}: {} {}",
            r.law,
            r.mode,
            r.config["label"],
            r.status,
            r.counterexample.as_ref().map_or_else(|| r.reason.clone().unwrap_or_default(), |c| c.to_string())
        )
    })
}

fn law(id: &str, cfg: &LawConfig, trials: usize) -> Result<TrialReport, String> {
    let r = run_law(id, cfg, trials, SEED, &Operators::default()).map_err(|e| format!("{id}: {e}"))?;
    expect_pass(&r)?;
    Ok(r)
}

fn symbolic(id: &str, cfg: &LawConfig, m: usize, n: usize) -> Result<TrialReport, String> {
    let r = symbolic_verify(id, cfg, m, n, &Operators::default()).map_err(|e| format!("{id} symbolic ({m},{n}): {e}"))?;
    expect_pass(&r)?;
    Ok(r)
}

fn z(p: u32) -> LawConfig {
    LawConfig::integers(p).expect("prime")
}

fn ramified() -> LawConfig {
    LawConfig::ramified().expect("Eisenstein")
}

fn a1() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut count = 0;
    for p in [2u32, 3, 5] {
        let ring = Ring::integers(p).unwrap();
        for i in 0..200 {
            let len = i % 5 + 1;
            let xs: Vec<i64> = (0..len).map(|_| rng.gen_range(-1000..=1000)).collect();
            let v = WittVector::from_ints(&ring, &xs);
            let g = v.ghost();
            ensure(ints(g.entries()) == zghost(p, &bigs(&xs)), || format!("ghost differs from reference at {xs:?}"))?;
            let back = WittVector::ghost_solve(&g).map_err(|e| e.to_string())?;
            ensure(back == v, || format!("round trip failed at p={p} {xs:?}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} vectors, p in {{2,3,5}}, n <= 4"))
}

fn a2() -> Check {
    let base = Ring::integers(2).unwrap();
    let cache = PolyCache::new(None);
    let sum = cache.get(UniversalOp::Sum, 1, &base, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    let prod = cache.get(UniversalOp::Prod, 1, &base, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    let ring = universal_ring(UniversalOp::Sum, 1, &base).map_err(|e| e.to_string())?;
    let v = |n: &str| RingElement::var(&ring, n).unwrap();
    let s1 = &(&v("x1") + &v("y1")) - &(&v("x0") * &v("y0"));
    let p1 = &(&(&v("x0").pow(2) * &v("y1")) + &(&v("y0").pow(2) * &v("x1"))) + &(&v("x1") * &v("y1")).mul_int(2);
    ensure(sum.elements()[1] == s1, || format!("S_1 = {}", sum.elements()[1]))?;
    ensure(prod.elements()[1] == p1, || format!("P_1 = {}", prod.elements()[1]))?;
    Ok(format!("S_1 = {s1}, P_1 = {p1}"))
}

fn a3() -> Check {
    let shapes = [(2u32, 0usize, 2usize), (2, 1, 2), (3, 0, 2), (2, 1, 3)];
    for (p, m, n) in shapes {
        symbolic("L6", &z(p), m, n)?;
        law("L6", &z(p).only(m, n), 100)?;
        law("L6", &ramified().only(m, n), 100)?;
    }
    Ok("4 symbolic shapes, 100 trials each over Z and Z[x]/(x^2-5)".into())
}

fn a4() -> Check {
    let mut runs = 0;
    for id in ["L7", "L8", "L9"] {
        for p in [2, 3] {
            for m in 1..=2 {
                for n in 1..=3 {
                    law(id, &z(p).only(m, n), 100)?;
                    runs += 1;
                }
            }
        }
        symbolic(id, &z(2), 1, 2)?;
    }
    Ok(format!("{runs} numeric runs of 100 trials, 3 symbolic checks"))
}

fn a5() -> Check {
    for cfg in [z(2), z(3), ramified()] {
        law("L3", &cfg.clone().with_ranges(0, 4), 100)?;
        law("table-i", &cfg.with_ranges(3, 4), 100)?;
    }
    Ok("F V = pi for n <= 4, F V^(m+1) = V^m pi for m <= 3".into())
}

fn a6() -> Check {
    for cfg in default_matrix() {
        law("L5", &cfg, 200)?;
        law("L4", &cfg, 200)?;
    }
    Ok(format!("{} configurations", default_matrix().len()))
}

fn a7() -> Check {
    for cfg in [z(2), z(3), ramified()] {
        for m in 1..=3 {
            law("eq-t0", &cfg.clone().only(m, 1), 100)?;
            symbolic("eq-t0", &cfg, m, 1)?;
        }
    }
    Ok("m in 1..=3, symbolic in t0".into())
}

fn a8() -> Check {
    let mut sym = 0;
    for p in [2, 3] {
        let cfg = z(p).with_ranges(2, 4);
        let ga = Arc::new(FormalGroupLaw::additive(cfg.ring.order()));
        let cfg = cfg.with_group(ga);
        for id in ["L11", "L12", "L13", "L14"] {
            law(id, &cfg, 100)?;
        }
        for m in 0..=2 {
            for n in 1..=3 {
                symbolic("L12", &cfg, m, n)?;
                sym += 1;
            }
        }
    }
    Ok(format!("additive group, {sym} symbolic L12 shapes"))
}

fn a9() -> Check {
    let cfg = z(5).only(1, 1).with_prec(6);
    let gm = Arc::new(FormalGroupLaw::multiplicative(cfg.ring.order()));
    let d = psi_degree(&gm, 1, 6);
    let coeffs = psi_coefficients(&gm, 1, d + 30).map_err(|e| e.to_string())?;
    for (k, c) in coeffs.iter().enumerate().skip(d as usize) {
        let v = c.valuation(gm.order()).unwrap_or(i64::MAX);
        ensure(v >= 6, || format!("dropped coefficient of degree {} has valuation {v}", k + 1))?;
    }
    law("L15", &cfg.with_group(gm), 50)?;
    Ok(format!("degree bound {d}, 50 trials modulo 5^6"))
}

fn a10() -> Check {
    for p in [2, 3] {
        let cfg = z(p).with_ranges(2, 4);
        let ga = Arc::new(FormalGroupLaw::additive(cfg.ring.order()));
        law("L16", &cfg.with_group(ga), 100)?;
    }
    let cfg = z(5).with_ranges(1, 3).with_prec(6);
    let gm = Arc::new(FormalGroupLaw::multiplicative(cfg.ring.order()));
    law("L16", &cfg.with_group(gm), 50)?;
    Ok("additive exact, multiplicative modulo 5^6".into())
}

fn a11() -> Check {
    let mut caught = Vec::new();
    for (s, cfg) in [
        (Sabotage::LateralUnphi, LawConfig::polynomial(2).unwrap().only(1, 2)),
        (Sabotage::ShiftDropsWrongEntry, z(2).only(1, 2)),
    ] {
        let bad = run_law(s.target_law(), &cfg, 100, SEED, &Operators::sabotaged(s)).map_err(|e| e.to_string())?;
        ensure(bad.status == Status::Fail, || format!("{} survived {}", s.name(), s.target_law()))?;
        let trial = bad.counterexample.as_ref().and_then(|c| c["trial"].as_u64()).unwrap_or(u64::MAX);
        caught.push(format!("{} by {} at trial {trial}", s.name(), s.target_law()));
        law(s.target_law(), &cfg, 100)?;
    }
    let opts = SuiteOptions { trials: None, ops: Operators::default(), skip_symbolic: false };
    let (_, summary) = run_suite("all", &default_matrix(), SEED, &opts).map_err(|e| e.to_string())?;
    ensure(summary.fail == 0, || format!("unmutated suite: {summary}"))?;
    Ok(format!("{}; unmutated: {summary}", caught.join(", ")))
}

fn a12() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let report = dir.path().join("report.json");
    let out = Command::new(env!("CARGO_BIN_EXE_wittlab"))
        .args(["verify", "--law", "all", "--report"])
        .arg(&report)
        .env("WITTLAB_CACHE_DIR", dir.path())
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.code() == Some(0), || {
        format!("exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr))
    })?;
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&report).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let schema: Value = serde_json::from_str(REPORT_SCHEMA).map_err(|e| e.to_string())?;
    let validator = jsonschema::validator_for(&schema).map_err(|e| e.to_string())?;
    let errors: Vec<String> = validator.iter_errors(&doc).take(3).map(|e| e.to_string()).collect();
    ensure(errors.is_empty(), || format!("schema: {errors:?}"))?;
    let last = String::from_utf8_lossy(&out.stdout).lines().last().unwrap_or_default().to_string();
    Ok(format!("{} reports, {last}", doc.as_array().map_or(0, Vec::len)))
}

fn main() {
    let criteria: [(&str, &str, u64, fn() -> Check); 12] = [
        ("A1", "ghost roundtrip", 1, a1),
        ("A2", "universal sum and product polynomials", 1, a2),
        ("A3", "lateral Frobenius identity", 120, a3),
        ("A4", "shift laws", 60, a4),
        ("A5", "Verschiebung and pi laws", 30, a5),
        ("A6", "delta axioms and Frobenius congruences", 30, a6),
        ("A7", "shift of a kernel point", 10, a7),
        ("A8", "kernel ladder", 60, a8),
        ("A9", "Psi suite", 60, a9),
        ("A10", "difference character factorization", 120, a10),
        ("A11", "mutation sensitivity", 120, a11),
        ("A12", "end-to-end verify", 300, a12),
    ];
    let mut failed = 0;
    for (id, title, limit, check) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(limit);
        let pass = result.is_ok() && in_time;
        if !pass {
            failed += 1;
        }
        let detail = match &result {
            Ok(d) if in_time => d.clone(),
            Ok(d) => format!("over time limit; {d}"),
            Err(e) => e.clone(),
        };
        println!(
            "{id:<4} {} {title} ({:.2} s, limit {limit} s): {detail}",
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64()
        );
    }
    println!("acceptance: {} passed, {failed} failed", 12 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
