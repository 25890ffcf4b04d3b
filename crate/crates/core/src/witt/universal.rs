//! Universal structure polynomials computed by symbolic ghost solving.

use std::collections::HashMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use serde_json::Value;
use sha2::{Digest, Sha256};

use super::vector::WittVector;
use crate::error::{Error, Result};
use crate::json;
use crate::ring::{eval_poly, Poly, Ring, RingElement};

pub const DEFAULT_BUDGET: u128 = 5_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UniversalOp {
    Sum,
    Prod,
    Frobenius,
    MultPi,
}

impl UniversalOp {
    pub fn name(self) -> &'static str {
        match self {
            UniversalOp::Sum => "sum",
            UniversalOp::Prod => "prod",
            UniversalOp::Frobenius => "frobenius",
            UniversalOp::MultPi => "mult-pi",
        }
    }

    fn binary(self) -> bool {
        matches!(self, UniversalOp::Sum | UniversalOp::Prod)
    }
}

impl fmt::Display for UniversalOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for UniversalOp {
    type Err = Error;
    fn from_str(s: &str) -> Result<UniversalOp> {
        match s {
            "sum" => Ok(UniversalOp::Sum),
            "prod" => Ok(UniversalOp::Prod),
            "frobenius" => Ok(UniversalOp::Frobenius),
            "mult-pi" | "mult_pi" => Ok(UniversalOp::MultPi),
            other => Err(Error::Parse(format!("unknown polynomial op `{other}`"))),
        }
    }
}

/// The polynomials of one operation in the variables `x0..xn` (and `y0..yn`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalPolys {
    pub op: UniversalOp,
    pub n: usize,
    /// `O[x0..xn]` or `O[x0..xn, y0..yn]`.
    pub ring: Ring,
    pub polys: Vec<Poly>,
}

impl UniversalPolys {
    pub fn elements(&self) -> Vec<RingElement> {
        self.polys.iter().map(|p| RingElement::from_poly(&self.ring, p.clone())).collect()
    }

    pub fn term_count(&self) -> usize {
        self.polys.iter().map(Poly::len).sum()
    }

    /// Evaluates every polynomial at `args` (the `x` components followed by
    /// the `y` components for binary ops).
    pub fn evaluate(&self, args: &[RingElement]) -> Result<Vec<RingElement>> {
        let nv = self.ring.nvars();
        if args.len() != nv {
            return Err(Error::LengthMismatch { expected: nv, found: args.len() });
        }
        let target = args[0].ring().clone();
        if args.iter().any(|a| *a.ring() != target) {
            return Err(Error::BaseMismatch);
        }
        Ok(self.polys.iter().map(|p| eval_poly(&target, p, args)).collect())
    }

    pub fn to_json(&self) -> Value {
        let polys = self
            .elements()
            .iter()
            .map(|e| match json::element_to_json(e) {
                Value::Array(terms) if terms.first().is_some_and(Value::is_object) => Value::Array(terms),
                constant => {
                    if e.is_zero() {
                        Value::Array(Vec::new())
                    } else {
                        let c = json::object(vec![("coeff", constant), ("monomial", Value::Object(Default::default()))]);
                        Value::Array(vec![c])
                    }
                }
            })
            .collect();
        let mut fields = vec![
            ("op", Value::from(self.op.name())),
            ("n", Value::from(self.n)),
            ("p", Value::from(self.ring.p())),
            ("polys", Value::Array(polys)),
        ];
        if !self.ring.order().is_integers() {
            let m: Vec<Value> = self.ring.order().modulus().iter().map(json::int_to_json).collect();
            fields.push(("modulus", Value::Array(m)));
        }
        json::object(fields)
    }

    fn from_json(op: UniversalOp, n: usize, ring: &Ring, v: &Value) -> Result<UniversalPolys> {
        let polys = v
            .get("polys")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing polys".into()))?;
        let polys = polys
            .iter()
            .map(|p| {
                if p.as_array().is_some_and(|a| a.is_empty()) {
                    Ok(Poly::zero())
                } else {
                    json::element_from_json(ring, p).map(|e| e.poly().clone())
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(UniversalPolys { op, n, ring: ring.clone(), polys })
    }
}

/// The ring `O[x0..xn]` (plus `y0..yn`) the polynomials of `op` live in.
pub fn universal_ring(op: UniversalOp, n: usize, base: &Ring) -> Result<Ring> {
    let mut names: Vec<String> = (0..=n).map(|i| format!("x{i}")).collect();
    if op.binary() {
        names.extend((0..=n).map(|i| format!("y{i}")));
    }
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    base.scalars().exact_cover().adjoin_variables(&refs)
}

/// Number of monomials of weighted degree `target` where variable weights
/// are `q^0, ..., q^k` (each weight repeated `copies` times).
pub fn isobaric_count(q: u64, k: usize, copies: usize, target: u64) -> u128 {
    let t = target as usize;
    let mut ways = vec![0u128; t + 1];
    ways[0] = 1;
    let mut w = 1u64;
    for _ in 0..=k {
        for _ in 0..copies {
            let w = w as usize;
            if w <= t {
                for s in w..=t {
                    ways[s] = ways[s].saturating_add(ways[s - w]);
                }
            }
        }
        w = w.saturating_mul(q);
    }
    ways[t]
}

/// Estimated number of terms of the largest polynomial of `op`.
pub fn estimate_terms(op: UniversalOp, n: usize, q: u64) -> u128 {
    let top = q.saturating_pow(n as u32);
    match op {
        UniversalOp::Sum => isobaric_count(q, n, 2, top),
        UniversalOp::Prod => {
            let c = isobaric_count(q, n, 1, top);
            c.saturating_mul(c)
        }
        UniversalOp::Frobenius => isobaric_count(q, n, 1, top),
        UniversalOp::MultPi => isobaric_count(q, n, 1, top),
    }
}

fn compute(op: UniversalOp, n: usize, base: &Ring, budget: u128) -> Result<UniversalPolys> {
    if op == UniversalOp::Frobenius && n == 0 {
        return Err(Error::ZeroLength);
    }
    let estimated = estimate_terms(op, n, base.q());
    if estimated > budget {
        return Err(Error::BudgetExceeded { estimated, budget });
    }
    let ring = universal_ring(op, n, base)?;
    let xs: Vec<RingElement> = (0..=n).map(|i| RingElement::var_at(&ring, i)).collect();
    let x = WittVector::new(&ring, xs)?;
    let out = match op {
        UniversalOp::Sum | UniversalOp::Prod => {
            let ys: Vec<RingElement> = (0..=n).map(|i| RingElement::var_at(&ring, n + 1 + i)).collect();
            let y = WittVector::new(&ring, ys)?;
            if op == UniversalOp::Sum {
                x.add(&y)?
            } else {
                x.mul(&y)?
            }
        }
        UniversalOp::Frobenius => x.frobenius()?,
        UniversalOp::MultPi => x.mult_pi(),
    };
    let polys: Vec<Poly> = out.components().iter().map(|c| c.poly().clone()).collect();
    let actual: u128 = polys.iter().map(|p| p.len() as u128).sum();
    if actual > budget {
        return Err(Error::BudgetExceeded { estimated: actual, budget });
    }
    Ok(UniversalPolys { op, n, ring, polys })
}

/// In-memory and on-disk store for universal polynomials.
///
/// Entries are keyed by operation, length and the base order. Files are
/// named by the SHA-256 of the key and written by rename, so concurrent
/// writers of one key leave identical content. Disk failures only cost a
/// recomputation.
pub struct PolyCache {
    dir: Option<PathBuf>,
    mem: Mutex<HashMap<String, Arc<UniversalPolys>>>,
}

impl PolyCache {
    pub fn new(dir: Option<PathBuf>) -> PolyCache {
        PolyCache { dir, mem: Mutex::new(HashMap::new()) }
    }

    /// `WITTLAB_CACHE_DIR`, else `~/.cache/wittlab`, else a temp directory.
    pub fn default_dir() -> PathBuf {
        if let Some(d) = std::env::var_os("WITTLAB_CACHE_DIR") {
            return PathBuf::from(d);
        }
        if let Some(home) = std::env::var_os("HOME") {
            return PathBuf::from(home).join(".cache").join("wittlab");
        }
        std::env::temp_dir().join("wittlab-cache")
    }

    pub fn global() -> &'static PolyCache {
        static CACHE: OnceLock<PolyCache> = OnceLock::new();
        CACHE.get_or_init(|| PolyCache::new(Some(PolyCache::default_dir())))
    }

    fn key(op: UniversalOp, n: usize, base: &Ring) -> String {
        let scalars = base.scalars().exact_cover();
        format!("v1;{};n={};{}", op.name(), n, scalars.fingerprint())
    }

    fn path(&self, key: &str) -> Option<PathBuf> {
        let digest = Sha256::digest(key.as_bytes());
        self.dir.as_ref().map(|d| d.join(format!("{}.json", hex::encode(digest))))
    }

    pub fn get(&self, op: UniversalOp, n: usize, base: &Ring, budget: u128) -> Result<Arc<UniversalPolys>> {
        let key = PolyCache::key(op, n, base);
        if let Some(hit) = self.mem.lock().expect("cache lock").get(&key) {
            return Ok(hit.clone());
        }
        if let Some(found) = self.load(&key, op, n, base) {
            let found = Arc::new(found);
            self.mem.lock().expect("cache lock").insert(key, found.clone());
            return Ok(found);
        }
        let polys = Arc::new(compute(op, n, base, budget)?);
        self.store(&key, &polys);
        self.mem.lock().expect("cache lock").insert(key, polys.clone());
        Ok(polys)
    }

    fn load(&self, key: &str, op: UniversalOp, n: usize, base: &Ring) -> Option<UniversalPolys> {
        let path = self.path(key)?;
        let text = std::fs::read_to_string(path).ok()?;
        let v: Value = serde_json::from_str(&text).ok()?;
        if v.get("key").and_then(Value::as_str) != Some(key) {
            return None;
        }
        let ring = universal_ring(op, n, base).ok()?;
        UniversalPolys::from_json(op, n, &ring, v.get("data")?).ok()
    }

    fn store(&self, key: &str, polys: &UniversalPolys) {
        let Some(path) = self.path(key) else { return };
        let Some(dir) = path.parent() else { return };
        if std::fs::create_dir_all(dir).is_err() {
            return;
        }
        let body = json::object(vec![("key", Value::from(key)), ("data", polys.to_json())]);
        let tmp = dir.join(format!(
            ".{}.{}.tmp",
            path.file_name().and_then(|s| s.to_str()).unwrap_or("entry"),
            std::process::id()
        ));
        if std::fs::write(&tmp, serde_json::to_string(&body).expect("serializable")).is_ok() {
            let _ = std::fs::rename(&tmp, &path);
        }
        let _ = std::fs::remove_file(&tmp);
    }
}

/// Universal polynomials of `op` over the order of `base`, via the global cache.
pub fn universal_polynomials(op: UniversalOp, n: usize, base: &Ring) -> Result<Arc<UniversalPolys>> {
    PolyCache::global().get(op, n, base, DEFAULT_BUDGET)
}

pub fn universal_polynomials_with_budget(
    op: UniversalOp,
    n: usize,
    base: &Ring,
    budget: u128,
) -> Result<Arc<UniversalPolys>> {
    PolyCache::global().get(op, n, base, budget)
}

/// Ring operations by polynomial evaluation, used as an independent path.
pub fn apply_universal(op: UniversalOp, x: &WittVector, y: Option<&WittVector>) -> Result<WittVector> {
    let n = x.n();
    let polys = universal_polynomials(op, n, x.ring())?;
    let mut args: Vec<RingElement> = x.components().to_vec();
    if op.binary() {
        let y = y.ok_or_else(|| Error::InvalidConfig("binary operation needs two vectors".into()))?;
        x.check_compatible(y)?;
        args.extend(y.components().iter().cloned());
    }
    let comps = polys.evaluate(&args)?;
    Ok(WittVector::raw(x.ring(), comps, x.twist()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn polys(op: UniversalOp, n: usize, p: u32) -> UniversalPolys {
        let cache = PolyCache::new(None);
        (*cache.get(op, n, &Ring::integers(p).unwrap(), DEFAULT_BUDGET).unwrap()).clone()
    }

    fn var(r: &Ring, name: &str) -> RingElement {
        RingElement::var(r, name).unwrap()
    }

    #[test]
    fn sum_and_product_length_one() {
        let s = polys(UniversalOp::Sum, 1, 2);
        let r = &s.ring;
        let e = s.elements();
        assert_eq!(e[0], &var(r, "x0") + &var(r, "y0"));
        assert_eq!(e[1], &(&var(r, "x1") + &var(r, "y1")) - &(&var(r, "x0") * &var(r, "y0")));
        let pr = polys(UniversalOp::Prod, 1, 2);
        let r = &pr.ring;
        let (x0, x1, y0, y1) = (var(r, "x0"), var(r, "x1"), var(r, "y0"), var(r, "y1"));
        let expected = &(&(&x0.pow(2) * &y1) + &(&y0.pow(2) * &x1)) + &(&x1 * &y1).mul_int(2);
        assert_eq!(pr.elements()[1], expected);
    }

    #[test]
    fn frobenius_first_polynomial() {
        for p in [2, 3, 5] {
            let f = polys(UniversalOp::Frobenius, 1, p);
            let r = &f.ring;
            assert_eq!(f.elements()[0], &var(r, "x0").pow(p as u64) + &var(r, "x1").mul_int(p));
        }
    }

    #[test]
    fn budget_is_enforced() {
        let cache = PolyCache::new(None);
        let r = Ring::integers(5).unwrap();
        assert!(matches!(
            cache.get(UniversalOp::Prod, 4, &r, 1000),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn isobaric_counts() {
        // weights 1,2 (two copies each) summing to 2: x0^2, x0 y0, y0^2, x1, y1
        assert_eq!(isobaric_count(2, 1, 2, 2), 5);
    }

    #[test]
    fn disk_roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let r = Ring::over_order(5, &[-5, 0, 1]).unwrap();
        let a = PolyCache::new(Some(dir.path().to_path_buf()));
        let first = a.get(UniversalOp::Sum, 1, &r, DEFAULT_BUDGET).unwrap();
        let b = PolyCache::new(Some(dir.path().to_path_buf()));
        let second = b.get(UniversalOp::Sum, 1, &r, DEFAULT_BUDGET).unwrap();
        assert_eq!(*first, *second);
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    }

    #[test]
    fn evaluation_matches_ring_ops() {
        let r = Ring::integers(3).unwrap();
        let x = WittVector::from_ints(&r, &[4, -7, 2]);
        let y = WittVector::from_ints(&r, &[-11, 5, 9]);
        assert_eq!(apply_universal(UniversalOp::Sum, &x, Some(&y)).unwrap(), x.add(&y).unwrap());
        assert_eq!(apply_universal(UniversalOp::Prod, &x, Some(&y)).unwrap(), x.mul(&y).unwrap());
        assert_eq!(apply_universal(UniversalOp::Frobenius, &x, None).unwrap(), x.frobenius().unwrap());
        assert_eq!(apply_universal(UniversalOp::MultPi, &x, None).unwrap(), x.mult_pi());
    }
}
