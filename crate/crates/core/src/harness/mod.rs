//! Runs the operator identities on seeded random inputs and as polynomial
//! identities in generic variables.
//!
//! Random inputs: integer coordinates (every power-basis coordinate of an
//! order element) uniform in `[-1000, 1000]`; over rings with variables,
//! polynomials of total degree at most 2 with coefficients in `[-3, 3]`.
//! Trial `i` of law `L` on configuration `c` at shape `(m, n)` draws from a
//! ChaCha8 stream seeded by `sha256("seed|L|c|m|n|i")`, so reports do not
//! depend on scheduling.

mod laws;
pub mod report;
mod trial;

use std::sync::Arc;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::json;
use crate::kernel::FormalGroupLaw;
use crate::ring::{with_term_limit, Ring};
use crate::shifted::ShiftedWittVector;
use crate::witt::{estimate_terms, UniversalOp, DEFAULT_BUDGET};
use laws::{Body, Ctx};
pub use report::{Mode, Status, Summary, TrialReport};
use trial::{Source, Trial, Verdict};

/// Deliberately broken operator variants used to check that the laws can
/// fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sabotage {
    /// Lateral Frobenius leaving the first head ghost entry without `phi`.
    LateralUnphi,
    /// `E_[m]` dropping ghost entry `z_m` instead of `z_0`.
    ShiftDropsWrongEntry,
}

impl Sabotage {
    pub fn name(self) -> &'static str {
        match self {
            Sabotage::LateralUnphi => "lateral-unphi",
            Sabotage::ShiftDropsWrongEntry => "shift-e-drop-z_m",
        }
    }

    /// The law expected to catch this variant.
    pub fn target_law(self) -> &'static str {
        match self {
            Sabotage::LateralUnphi => "L4",
            Sabotage::ShiftDropsWrongEntry => "L8",
        }
    }
}

/// The operators under test.
#[derive(Clone, Copy, Debug, Default)]
pub struct Operators {
    pub sabotage: Option<Sabotage>,
}

impl Operators {
    pub fn sabotaged(s: Sabotage) -> Operators {
        Operators { sabotage: Some(s) }
    }

    pub fn lateral(&self, v: &ShiftedWittVector) -> Result<ShiftedWittVector> {
        match self.sabotage {
            Some(Sabotage::LateralUnphi) => v.lateral_frobenius_via_ghost(Some(0)),
            _ => v.lateral_frobenius(),
        }
    }

    pub fn shift_e(&self, v: &ShiftedWittVector) -> Result<ShiftedWittVector> {
        match self.sabotage {
            Some(Sabotage::ShiftDropsWrongEntry) => v.shift_e_via_ghost(v.m()),
            _ => v.shift_e(),
        }
    }
}

/// A base ring and the shapes `(m, n)` to test on it. Tails live in the
/// same ring as heads.
#[derive(Clone, Debug)]
pub struct LawConfig {
    pub label: String,
    pub ring: Ring,
    pub m_min: usize,
    pub m_max: usize,
    pub n_min: usize,
    pub n_max: usize,
    /// Working precision `pi^prec` for series-valued maps.
    pub prec: u64,
    /// Kernel laws use only this group when set, otherwise both the additive
    /// and the multiplicative law.
    pub group: Option<Arc<FormalGroupLaw>>,
}

impl LawConfig {
    pub fn new(label: &str, ring: Ring, m_max: usize, n_max: usize) -> LawConfig {
        LawConfig { label: label.to_string(), ring, m_min: 0, m_max, n_min: 0, n_max, prec: 6, group: None }
    }

    /// `Z` at `p`.
    pub fn integers(p: u32) -> Result<LawConfig> {
        Ok(LawConfig::new(&format!("Z{p}"), Ring::integers(p)?, 2, 3))
    }

    /// `Z[x]/(x^2 - 5)` with `pi = x`.
    pub fn ramified() -> Result<LawConfig> {
        Ok(LawConfig::new("Z5[x]/(x^2-5)", Ring::over_order(5, &[-5, 0, 1])?, 1, 2))
    }

    /// `Z[t]` with `phi(t) = t^p`, so `phi` is not the identity.
    pub fn polynomial(p: u32) -> Result<LawConfig> {
        Ok(LawConfig::new(&format!("Z{p}[t]"), Ring::integers(p)?.adjoin_variables(&["t"])?, 1, 2))
    }

    /// Restricts to the single shape `(m, n)`.
    pub fn only(mut self, m: usize, n: usize) -> LawConfig {
        (self.m_min, self.m_max, self.n_min, self.n_max) = (m, m, n, n);
        self
    }

    pub fn with_ranges(mut self, m_max: usize, n_max: usize) -> LawConfig {
        (self.m_max, self.n_max) = (m_max, n_max);
        self
    }

    pub fn with_prec(mut self, prec: u64) -> LawConfig {
        self.prec = prec;
        self
    }

    pub fn with_group(mut self, group: Arc<FormalGroupLaw>) -> LawConfig {
        self.group = Some(group);
        self
    }

    fn echo(&self) -> Value {
        let spec = self.ring.to_spec();
        json::object(vec![
            ("label", Value::from(self.label.clone())),
            ("p", Value::from(self.ring.p())),
            ("modulus", serde_json::to_value(&spec.modulus).expect("serializable")),
            ("vars", Value::from(self.ring.var_names().map(String::from).collect::<Vec<_>>())),
            ("m", Value::from(vec![self.m_min, self.m_max])),
            ("n", Value::from(vec![self.n_min, self.n_max])),
            ("prec", Value::from(self.prec)),
            ("group", self.group.as_ref().map_or(Value::Null, |g| Value::from(g.tag().to_string()))),
        ])
    }
}

/// `Z2`, `Z3`, the ramified order and `Z2[t]`.
pub fn default_matrix() -> Vec<LawConfig> {
    vec![
        LawConfig::integers(2).expect("prime"),
        LawConfig::integers(3).expect("prime"),
        LawConfig::ramified().expect("Eisenstein"),
        LawConfig::polynomial(2).expect("prime"),
    ]
}

/// One executable identity.
pub struct LawSpec {
    pub id: &'static str,
    pub title: &'static str,
    pub trials: usize,
    /// `(min, max)` for `m`; a range with `min == max` ignores the
    /// configuration's range.
    m: (usize, usize),
    n: (usize, usize),
    /// Number of input vectors, used to size the symbolic ring.
    arity: usize,
    needs_psi: bool,
    /// `(p, m, n)` shapes with a symbolic check.
    symbolic: &'static [(u32, usize, usize)],
    body: Body,
}

const ANY: usize = usize::MAX;

/// Term pairs a single symbolic product may multiply, in units of the
/// term budget.
const SYMBOLIC_WORK_FACTOR: u128 = 10;

const fn law(
    id: &'static str,
    title: &'static str,
    trials: usize,
    m: (usize, usize),
    n: (usize, usize),
    arity: usize,
    symbolic: &'static [(u32, usize, usize)],
    body: Body,
) -> LawSpec {
    LawSpec { id, title, trials, m, n, arity, needs_psi: false, symbolic, body }
}

const L12_SHAPES: &[(u32, usize, usize)] = &[
    (2, 0, 1), (2, 0, 2), (2, 0, 3), (2, 1, 1), (2, 1, 2), (2, 1, 3), (2, 2, 1), (2, 2, 2), (2, 2, 3),
    (3, 0, 1), (3, 0, 2), (3, 0, 3), (3, 1, 1), (3, 1, 2), (3, 1, 3), (3, 2, 1), (3, 2, 2), (3, 2, 3),
    (5, 0, 1), (5, 0, 2), (5, 1, 1), (5, 1, 2),
];

static LAWS: &[LawSpec] = &[
    law("L1", "ghost map is a ring homomorphism", 200, (0, 0), (0, ANY), 2, &[(2, 0, 1), (2, 0, 2), (3, 0, 1)], laws::ghost_hom),
    law("L2", "ghost_solve inverts ghost", 200, (0, 0), (0, ANY), 1, &[], laws::ghost_roundtrip),
    law("L3", "F V = mult_pi", 100, (0, 0), (0, ANY), 1, &[(2, 0, 1), (2, 0, 2), (3, 0, 1)], laws::frobenius_verschiebung),
    law("L4", "Frobenius and lateral Frobenius are x^q mod pi", 200, (0, ANY), (1, ANY), 2, &[], laws::frobenius_congruence),
    law("L5", "delta axioms", 200, (0, 0), (0, 0), 1, &[], laws::delta_axioms),
    law(
        "L6",
        "F^(m+2) I = F^(m+1) I F_[m]",
        100,
        (0, 2),
        (2, 3),
        1,
        &[(2, 0, 2), (2, 1, 2), (3, 0, 2), (2, 1, 3)],
        laws::lateral_identity,
    ),
    law("L7", "I E_[m] = F I", 100, (1, ANY), (1, ANY), 1, &[(2, 1, 1), (2, 1, 2), (3, 1, 1)], laws::shift_include),
    law("L8", "E_[m] is the ghost right shift", 100, (1, ANY), (1, ANY), 1, &[(2, 1, 2), (3, 1, 1)], laws::shift_ghost),
    law("L9", "E_[m] F_[m] = F_[m-1] E_[m]", 100, (1, ANY), (1, ANY), 1, &[(2, 1, 2), (3, 1, 1)], laws::shift_lateral_commute),
    law("L10", "mult_pi is the scalar action of pi", 100, (0, 0), (0, ANY), 1, &[(2, 0, 1), (3, 0, 1)], laws::mult_pi_scalar),
    law("L11", "f_m on additive kernels is the Witt Frobenius", 100, (0, ANY), (2, ANY), 1, &[], laws::kernel_lateral),
    law("L12", "ghost of iota_m", 100, (0, ANY), (1, ANY), 1, L12_SHAPES, laws::kernel_ghost),
    law("L13", "F iota_m = iota_(m-1) Phi_[m]", 100, (1, ANY), (1, ANY), 1, &[(2, 1, 1), (2, 1, 2), (2, 2, 1)], laws::kernel_phi_iota),
    law("L14", "phi^(m+j) iota_m = phi^(m+j-1) iota_m f_m", 100, (0, ANY), (2, ANY), 1, &[(2, 0, 2), (2, 1, 2)], laws::kernel_lateral_ladder),
    LawSpec { needs_psi: true, ..law("L15", "Psi ladder and additivity", 50, (1, ANY), (1, 1), 3, &[], laws::psi_ladder) },
    law("L16", "difference character factors through u", 50, (0, ANY), (2, ANY), 2, &[], laws::difference_factorization),
    law("table-i", "F V^(m+1) = V^m pi and phi iota_m = iota_(m-1) Phi_[m]", 100, (1, ANY), (1, ANY), 2, &[(2, 1, 1), (2, 1, 2)], laws::table_i),
    law("table-ii", "F^(m+n) V^(m+1) = F^(m+n-1) V^(m+1) F and its kernel form", 100, (0, ANY), (2, ANY), 2, &[(2, 0, 2), (2, 1, 2)], laws::table_ii),
    law("table-iii", "pi F = F pi and Phi_[m] f_m = f_(m-1) Phi_[m]", 100, (1, ANY), (2, ANY), 2, &[(2, 1, 2)], laws::table_iii),
    law("eq-t0", "E_[m](0; t0) = (0; pi t0)", 100, (1, 3), (1, 1), 1, &[(2, 1, 1), (2, 2, 1), (2, 3, 1), (3, 1, 1), (3, 2, 1), (3, 3, 1), (5, 1, 1), (5, 2, 1), (5, 3, 1)], laws::shift_on_kernel),
    law("aux-trunc", "T F = F T", 100, (0, 0), (2, ANY), 1, &[], laws::truncation_frobenius),
    law("aux-lift", "truncated arithmetic is independent of lifts", 100, (0, 0), (0, ANY), 3, &[], laws::lift_independence),
    law("aux-univ", "universal polynomials specialize to Witt arithmetic", 100, (0, 0), (0, 2), 2, &[], laws::universal_specialization),
    law("aux-epath", "E_[m] coordinate, ghost and polynomial paths agree", 100, (1, ANY), (1, ANY), 1, &[], laws::shift_paths),
    law("aux-hom", "F_[m] and E_[m] are ring maps", 100, (0, ANY), (1, ANY), 2, &[(2, 1, 1)], laws::shifted_homomorphisms),
    law("aux-group", "kernel group law axioms", 50, (0, ANY), (1, ANY), 6, &[], laws::kernel_group),
];

/// Every registered law, in report order.
pub fn registry() -> &'static [LawSpec] {
    LAWS
}

pub fn law_ids() -> Vec<&'static str> {
    LAWS.iter().map(|l| l.id).collect()
}

fn find(id: &str) -> Result<&'static LawSpec> {
    LAWS.iter().find(|l| l.id.eq_ignore_ascii_case(id)).ok_or_else(|| Error::UnknownLaw(id.to_string()))
}

fn range(law: (usize, usize), lo: usize, hi: usize) -> std::ops::RangeInclusive<usize> {
    if law.0 == law.1 {
        law.0..=law.1
    } else {
        law.0.max(lo)..=law.1.min(hi)
    }
}

impl LawSpec {
    /// The shapes `(m, n)` this law runs on for `cfg`.
    pub fn shapes(&self, cfg: &LawConfig) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for m in range(self.m, cfg.m_min, cfg.m_max) {
            for n in range(self.n, cfg.n_min, cfg.n_max) {
                out.push((m, n));
            }
        }
        out
    }

    /// Shapes with a symbolic check on `cfg`.
    pub fn symbolic_shapes(&self, cfg: &LawConfig) -> Vec<(usize, usize)> {
        if cfg.ring.nvars() > 0 {
            return Vec::new();
        }
        let shapes = self.shapes(cfg);
        self.symbolic
            .iter()
            .filter(|(p, m, n)| *p == cfg.ring.p() && shapes.contains(&(*m, *n)))
            .map(|&(_, m, n)| (m, n))
            .collect()
    }

    fn skip_reason(&self, cfg: &LawConfig) -> Option<String> {
        if self.needs_psi && !cfg.ring.psi_integral() {
            return Some("psi_integral=false".into());
        }
        if self.shapes(cfg).is_empty() {
            return Some("no (m, n) shape in range".into());
        }
        None
    }
}

fn trial_rng(seed: u64, law: &str, cfg: &LawConfig, m: usize, n: usize, trial: usize) -> ChaCha8Rng {
    let digest = Sha256::digest(format!("{seed}|{law}|{}|{m}|{n}|{trial}", cfg.label).as_bytes());
    ChaCha8Rng::from_seed(digest.into())
}

struct Failure {
    reason: String,
    counterexample: Value,
}

fn run_one(law: &LawSpec, trial: &mut Trial, ctx: &Ctx, index: usize) -> Option<Failure> {
    let outcome = (law.body)(trial, ctx);
    let (reason, check, lhs, rhs) = match outcome {
        Ok(Verdict::Pass) => return None,
        Ok(Verdict::Fail { check, lhs, rhs }) => (format!("{check} does not hold"), check, lhs, rhs),
        Err(e) => (format!("{}: {e}", e.name()), "error".to_string(), Value::Null, Value::Null),
    };
    let cx = json::object(vec![
        ("check", Value::from(check)),
        ("inputs", trial.inputs()),
        ("lhs", lhs),
        ("rhs", rhs),
        ("m", Value::from(ctx.m)),
        ("n", Value::from(ctx.n)),
        ("trial", Value::from(index)),
    ]);
    Some(Failure { reason, counterexample: cx })
}

fn skipped(law: &LawSpec, mode: Mode, cfg: &LawConfig, seed: u64, reason: String) -> TrialReport {
    TrialReport {
        law: law.id.to_string(),
        mode,
        config: cfg.echo(),
        seed,
        trials: 0,
        status: Status::Skipped,
        reason: Some(reason),
        counterexample: None,
        ms: 0,
    }
}

/// Runs `trials` random trials for every shape of `cfg`.
pub fn run_law(id: &str, cfg: &LawConfig, trials: usize, seed: u64, ops: &Operators) -> Result<TrialReport> {
    let law = find(id)?;
    if let Some(reason) = law.skip_reason(cfg) {
        return Ok(skipped(law, Mode::Numeric, cfg, seed, reason));
    }
    if !cfg.ring.is_exact() {
        return Err(Error::ConfigUnsupported("laws run over exact base rings".into()));
    }
    let start = Instant::now();
    let jobs: Vec<(usize, usize, usize)> =
        law.shapes(cfg).into_iter().flat_map(|(m, n)| (0..trials).map(move |i| (m, n, i))).collect();
    let failures: Vec<Option<Failure>> = jobs
        .par_iter()
        .map(|&(m, n, i)| {
            let ctx = Ctx { ops, m, n, prec: cfg.prec, group: cfg.group.as_ref() };
            let mut trial = Trial::new(&cfg.ring, Source::Random(trial_rng(seed, law.id, cfg, m, n, i)));
            run_one(law, &mut trial, &ctx, i)
        })
        .collect();
    let first = failures.into_iter().flatten().next();
    let ms = start.elapsed().as_millis() as u64;
    Ok(match first {
        None => TrialReport {
            law: law.id.to_string(),
            mode: Mode::Numeric,
            config: cfg.echo(),
            seed,
            trials: jobs.len(),
            status: Status::Pass,
            reason: None,
            counterexample: None,
            ms,
        },
        Some(f) => TrialReport {
            law: law.id.to_string(),
            mode: Mode::Numeric,
            config: cfg.echo(),
            seed,
            trials: jobs.len(),
            status: Status::Fail,
            reason: Some(f.reason),
            counterexample: Some(f.counterexample),
            ms,
        },
    })
}

/// Checks the law as a polynomial identity in generic inputs over `cfg`'s
/// order at the shape `(m, n)`. Heads get a generic Frobenius lift
/// `phi(x) = x^q + pi d`.
pub fn symbolic_verify(id: &str, cfg: &LawConfig, m: usize, n: usize, ops: &Operators) -> Result<TrialReport> {
    let law = find(id)?;
    if law.symbolic.is_empty() {
        return Err(Error::ConfigUnsupported(format!("{} has no symbolic form", law.id)));
    }
    let estimated = estimate_terms(UniversalOp::Frobenius, m + n, cfg.ring.q()).saturating_mul(law.arity as u128);
    if estimated > DEFAULT_BUDGET {
        return Err(Error::BudgetExceeded { estimated, budget: DEFAULT_BUDGET });
    }
    let one = LawConfig { m_min: m, m_max: m, n_min: n, n_max: n, ..cfg.clone() };
    if let Some(reason) = law.skip_reason(&one) {
        return Ok(skipped(law, Mode::Symbolic, &one, 0, reason));
    }
    let start = Instant::now();
    let ring = trial::symbolic_ring(&cfg.ring.scalars(), law.arity * (m + n + 1))?;
    let mut trial = Trial::new(&ring, Source::Symbolic { next: 0 });
    let ctx = Ctx { ops, m, n, prec: cfg.prec, group: cfg.group.as_ref() };
    // the estimate is coarse, so large products also abort the check
    let failure = with_term_limit(SYMBOLIC_WORK_FACTOR * DEFAULT_BUDGET, || run_one(law, &mut trial, &ctx, 0))?;
    let ms = start.elapsed().as_millis() as u64;
    let (status, reason, counterexample) = match failure {
        None => (Status::Pass, None, None),
        Some(f) => (Status::Fail, Some(f.reason), Some(f.counterexample)),
    };
    Ok(TrialReport { law: law.id.to_string(), mode: Mode::Symbolic, config: one.echo(), seed: 0, trials: 1, status, reason, counterexample, ms })
}

/// Options for [`run_suite`].
#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    /// Overrides each law's trial count.
    pub trials: Option<usize>,
    pub ops: Operators,
    pub skip_symbolic: bool,
}

/// Law ids matching `filter`: `all`, one id, or a comma-separated list.
pub fn select(filter: &str) -> Result<Vec<&'static str>> {
    if filter.trim().eq_ignore_ascii_case("all") {
        return Ok(law_ids());
    }
    let wanted = filter.split(',').map(str::trim).filter(|s| !s.is_empty()).map(find).collect::<Result<Vec<_>>>()?;
    Ok(LAWS.iter().filter(|l| wanted.iter().any(|w| w.id == l.id)).map(|l| l.id).collect())
}

enum Job<'a> {
    Numeric(&'static LawSpec, &'a LawConfig),
    Symbolic(&'static LawSpec, &'a LawConfig, usize, usize),
}

/// Runs every selected law on every configuration. Reports are ordered by
/// law, then configuration, numeric before symbolic.
pub fn run_suite(filter: &str, matrix: &[LawConfig], seed: u64, opts: &SuiteOptions) -> Result<(Vec<TrialReport>, Summary)> {
    let ids = select(filter)?;
    let mut jobs = Vec::new();
    for id in ids {
        let law = find(id)?;
        for cfg in matrix {
            jobs.push(Job::Numeric(law, cfg));
            if !opts.skip_symbolic {
                for (m, n) in law.symbolic_shapes(cfg) {
                    jobs.push(Job::Symbolic(law, cfg, m, n));
                }
            }
        }
    }
    let reports: Vec<TrialReport> = jobs
        .par_iter()
        .map(|job| match *job {
            Job::Numeric(law, cfg) => run_law(law.id, cfg, opts.trials.unwrap_or(law.trials), seed, &opts.ops),
            Job::Symbolic(law, cfg, m, n) => match symbolic_verify(law.id, cfg, m, n, &opts.ops) {
                Err(Error::BudgetExceeded { estimated, budget }) => {
                    let one = LawConfig { m_min: m, m_max: m, n_min: n, n_max: n, ..cfg.clone() };
                    Ok(skipped(law, Mode::Symbolic, &one, 0, format!("term budget {budget} below estimate {estimated}")))
                }
                other => other,
            },
        })
        .collect::<Result<Vec<_>>>()?;
    let summary = Summary::of(&reports);
    Ok((reports, summary))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_covers_every_identity() {
        let mut ids: Vec<String> = law_ids().into_iter().map(String::from).collect();
        ids.sort();
        let mut want: Vec<String> = (1..=16).map(|i| format!("L{i}")).collect();
        for id in ["table-i", "table-ii", "table-iii", "eq-t0"] {
            want.push(id.into());
        }
        for id in ["aux-trunc", "aux-lift", "aux-univ", "aux-epath", "aux-hom", "aux-group"] {
            want.push(id.into());
        }
        want.sort();
        assert_eq!(ids, want);
    }

    #[test]
    fn unknown_law() {
        let cfg = LawConfig::integers(2).unwrap();
        assert_eq!(run_law("L99", &cfg, 1, 0, &Operators::default()).unwrap_err(), Error::UnknownLaw("L99".into()));
    }

    #[test]
    fn psi_skips_small_primes() {
        let cfg = LawConfig::integers(2).unwrap();
        let r = run_law("L15", &cfg, 5, 1, &Operators::default()).unwrap();
        assert_eq!(r.status, Status::Skipped);
        assert_eq!(r.reason.as_deref(), Some("psi_integral=false"));
    }

    #[test]
    fn small_runs_pass() {
        let cfg = LawConfig::integers(2).unwrap().only(1, 2);
        for id in law_ids() {
            let r = run_law(id, &cfg, 3, 42, &Operators::default()).unwrap();
            assert_ne!(r.status, Status::Fail, "{}", r.to_json());
        }
    }

    #[test]
    fn sabotage_is_caught() {
        let cfg = LawConfig::integers(2).unwrap().only(1, 2);
        let r = run_law("L8", &cfg, 20, 42, &Operators::sabotaged(Sabotage::ShiftDropsWrongEntry)).unwrap();
        assert_eq!(r.status, Status::Fail);
        let cfg = LawConfig::polynomial(2).unwrap().only(1, 2);
        let r = run_law("L4", &cfg, 20, 42, &Operators::sabotaged(Sabotage::LateralUnphi)).unwrap();
        assert_eq!(r.status, Status::Fail);
    }

    #[test]
    fn deterministic() {
        let cfg = LawConfig::integers(3).unwrap().only(1, 1);
        let a = run_law("L9", &cfg, 10, 7, &Operators::default()).unwrap();
        let b = run_law("L9", &cfg, 10, 7, &Operators::default()).unwrap();
        assert_eq!(a.to_json_without_time(), b.to_json_without_time());
    }

    #[test]
    fn symbolic_small() {
        let cfg = LawConfig::integers(2).unwrap();
        let r = symbolic_verify("L9", &cfg, 1, 2, &Operators::default()).unwrap();
        assert_eq!(r.status, Status::Pass, "{}", r.to_json());
    }
}
