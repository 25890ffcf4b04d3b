use serde_json::Value;
use wittlab::harness::report::{reports_to_json, REPORT_SCHEMA};
use wittlab::harness::{run_law, run_suite, symbolic_verify, LawConfig, Operators, Sabotage, Status, SuiteOptions};
use wittlab::witt::DEFAULT_BUDGET;
use wittlab::Error;

fn opts(trials: usize) -> SuiteOptions {
    SuiteOptions { trials: Some(trials), ops: Operators::default(), skip_symbolic: false }
}

#[test]
fn reports_validate_against_schema() {
    let matrix = [LawConfig::integers(3).unwrap().with_ranges(1, 2), LawConfig::ramified().unwrap()];
    let (reports, summary) = run_suite("L1,L8,L15,L16", &matrix, 11, &opts(3)).unwrap();
    assert_eq!(summary.fail, 0);
    let schema: Value = serde_json::from_str(REPORT_SCHEMA).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let doc = reports_to_json(&reports);
    let errors: Vec<String> = validator.iter_errors(&doc).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}");

    // a failing report carries a counterexample and still validates
    let cfg = LawConfig::integers(2).unwrap().only(1, 2);
    let bad = run_law("L8", &cfg, 20, 1, &Operators::sabotaged(Sabotage::ShiftDropsWrongEntry)).unwrap();
    assert_eq!(bad.status, Status::Fail);
    let doc = reports_to_json(&[bad]);
    assert!(validator.is_valid(&doc));
    assert!(doc[0]["counterexample"]["inputs"].is_object());
}

#[test]
fn suite_is_deterministic() {
    let matrix = [LawConfig::integers(2).unwrap().with_ranges(1, 2), LawConfig::polynomial(2).unwrap()];
    let strip = |seed| {
        let (r, _) = run_suite("L4,L6,aux-group", &matrix, seed, &opts(4)).unwrap();
        r.iter().map(|r| r.to_json_without_time()).collect::<Vec<_>>()
    };
    assert_eq!(strip(5), strip(5));
    let ops = Operators::sabotaged(Sabotage::LateralUnphi);
    let a = run_law("L4", &matrix[1], 30, 9, &ops).unwrap();
    let b = run_law("L4", &matrix[1], 30, 9, &ops).unwrap();
    assert_eq!(a.counterexample, b.counterexample);
    assert!(a.counterexample.is_some());
}

#[test]
fn report_order_is_canonical() {
    let matrix = [LawConfig::integers(2).unwrap(), LawConfig::integers(3).unwrap()];
    let (reports, _) = run_suite("L10,L2", &matrix, 0, &opts(2)).unwrap();
    let keys: Vec<(String, String)> = reports
        .iter()
        .map(|r| (r.law.clone(), r.config["label"].as_str().unwrap().to_string()))
        .collect();
    assert_eq!(keys[0], ("L2".into(), "Z2".into()));
    assert_eq!(keys[1], ("L2".into(), "Z3".into()));
    assert!(keys.iter().skip(2).all(|(l, _)| l == "L10"));
}

#[test]
fn symbolic_budget_and_support() {
    let cfg = LawConfig::integers(5).unwrap().with_ranges(0, 4);
    match symbolic_verify("L1", &cfg, 0, 4, &Operators::default()) {
        Err(Error::BudgetExceeded { budget, .. }) => assert!(budget >= DEFAULT_BUDGET),
        other => panic!("expected a budget error, got {other:?}"),
    }
    let cfg = LawConfig::integers(2).unwrap();
    assert!(matches!(symbolic_verify("L2", &cfg, 0, 1, &Operators::default()), Err(Error::ConfigUnsupported(_))));
}

#[test]
fn unknown_law_is_an_error() {
    let cfg = LawConfig::integers(2).unwrap();
    assert_eq!(run_suite("L1,L99", &[cfg], 0, &opts(1)).unwrap_err(), Error::UnknownLaw("L99".into()));
}
