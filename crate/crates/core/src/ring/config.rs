use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::element::RingElement;
use super::order::{Order, Valuation};
use super::poly::Poly;
use crate::error::{Error, Result};

/// An adjoined polynomial variable together with its Frobenius image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarSpec {
    pub name: String,
    /// `None` means the default lift `t -> t^q`.
    pub phi: Option<Poly>,
}

/// Validated description of a base ring: the order `O`, the Frobenius lift,
/// an optional truncation `R/pi^N` and adjoined variables.
#[derive(Debug, PartialEq, Eq)]
pub struct RingConfig {
    order: Order,
    trunc: u64,
    vars: Vec<VarSpec>,
    e: u32,
    q: u64,
    psi_integral: bool,
}

/// Shared handle to a [`RingConfig`]. Cloning is cheap.
#[derive(Clone)]
pub struct Ring(Arc<RingConfig>);

impl PartialEq for Ring {
    fn eq(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({})", self.describe())
    }
}

/// JSON form of a ring configuration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    pub p: u32,
    #[serde(default)]
    pub modulus: Option<Vec<i64>>,
    #[serde(default = "default_phi_pi")]
    pub phi_pi: String,
    #[serde(default)]
    pub trunc: u64,
    #[serde(default)]
    pub vars: Vec<String>,
}

fn default_phi_pi() -> String {
    "pi".to_string()
}

impl RingSpec {
    pub fn integers(p: u32) -> RingSpec {
        RingSpec { p, modulus: None, phi_pi: default_phi_pi(), trunc: 0, vars: Vec::new() }
    }
}

impl Ring {
    fn build(order: Order, trunc: u64, vars: Vec<VarSpec>) -> Result<Ring> {
        let e = order.degree() as u32;
        let q = order.p() as u64;
        let psi_integral = (e as u64) + 2 <= order.p() as u64;
        let cfg = RingConfig { order, trunc, vars, e, q, psi_integral };
        let ring = Ring(Arc::new(cfg));
        ring.check_frobenius_lift()?;
        Ok(ring)
    }

    /// `Z` with `pi = p` and the identity Frobenius.
    pub fn integers(p: u32) -> Result<Ring> {
        Ring::build(Order::integers(p)?, 0, Vec::new())
    }

    /// `Z[x]/(f)` with `pi = x` and `phi(pi) = pi`; `modulus` is low degree first.
    pub fn over_order(p: u32, modulus: &[i64]) -> Result<Ring> {
        let m = modulus.iter().map(|&c| BigInt::from(c)).collect();
        Ring::build(Order::new(p, m)?, 0, Vec::new())
    }

    pub fn from_spec(spec: &RingSpec) -> Result<Ring> {
        if spec.phi_pi != "pi" {
            return Err(Error::BadFrobeniusLift(format!(
                "unsupported phi_pi `{}`: only phi(pi) = pi is supported",
                spec.phi_pi
            )));
        }
        let base = match &spec.modulus {
            None => Ring::integers(spec.p)?,
            Some(m) => Ring::over_order(spec.p, m)?,
        };
        let names: Vec<&str> = spec.vars.iter().map(String::as_str).collect();
        let ring = base.adjoin_variables(&names)?;
        Ok(if spec.trunc > 0 { ring.truncated(spec.trunc) } else { ring })
    }

    pub fn from_json(text: &str) -> Result<Ring> {
        let spec: RingSpec = serde_json::from_str(text)?;
        Ring::from_spec(&spec)
    }

    /// The JSON form. Custom variable Frobenius images are not representable
    /// there and are dropped.
    pub fn to_spec(&self) -> RingSpec {
        let modulus = if self.order().is_integers() {
            None
        } else {
            Some(
                self.order()
                    .modulus()
                    .iter()
                    .map(|c| i64::try_from(c).expect("modulus coefficients fit in i64"))
                    .collect(),
            )
        };
        RingSpec {
            p: self.p(),
            modulus,
            phi_pi: default_phi_pi(),
            trunc: self.0.trunc,
            vars: self.var_names().map(str::to_string).collect(),
        }
    }

    pub fn order(&self) -> &Order {
        &self.0.order
    }

    pub fn p(&self) -> u32 {
        self.0.order.p()
    }

    /// Residue field cardinality.
    pub fn q(&self) -> u64 {
        self.0.q
    }

    /// Ramification index `v_pi(p)`.
    pub fn e(&self) -> u32 {
        self.0.e
    }

    /// Whether `e <= p - 2`, the hypothesis under which the logarithm based
    /// maps on kernels are isomorphisms.
    pub fn psi_integral(&self) -> bool {
        self.0.psi_integral
    }

    /// The truncation exponent `N` of `R/pi^N`, or `None` for an exact ring.
    pub fn trunc(&self) -> Option<u64> {
        (self.0.trunc > 0).then_some(self.0.trunc)
    }

    pub fn is_exact(&self) -> bool {
        self.0.trunc == 0
    }

    /// Exact rings here are always pi-torsion-free.
    pub fn is_torsion_free(&self) -> bool {
        self.is_exact()
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn vars(&self) -> &[VarSpec] {
        &self.0.vars
    }

    pub fn var_names(&self) -> impl Iterator<Item = &str> {
        self.0.vars.iter().map(|v| v.name.as_str())
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v.name == name)
    }

    pub fn describe(&self) -> String {
        let mut s = if self.order().is_integers() {
            format!("Z(p={})", self.p())
        } else {
            let m: Vec<String> = self.order().modulus().iter().map(|c| c.to_string()).collect();
            format!("Z[pi]/({}) (p={})", m.join(","), self.p())
        };
        if !self.0.vars.is_empty() {
            let names: Vec<&str> = self.var_names().collect();
            s.push_str(&format!("[{}]", names.join(",")));
        }
        if self.0.trunc > 0 {
            s.push_str(&format!(" mod pi^{}", self.0.trunc));
        }
        s
    }

    /// Polynomial extension with default Frobenius images `t -> t^q`.
    pub fn adjoin_variables(&self, names: &[&str]) -> Result<Ring> {
        if names.is_empty() {
            return Ok(self.clone());
        }
        let mut vars = self.0.vars.clone();
        for &n in names {
            if n.is_empty() {
                return Err(Error::InvalidConfig("empty variable name".into()));
            }
            if vars.iter().any(|v| v.name == n) {
                return Err(Error::DuplicateName(n.to_string()));
            }
            vars.push(VarSpec { name: n.to_string(), phi: None });
        }
        let nvars = vars.len();
        let old = self.0.vars.len();
        let map: Vec<usize> = (0..old).collect();
        for v in vars.iter_mut().take(old) {
            if let Some(p) = &v.phi {
                v.phi = Some(p.remap_vars(&map, nvars));
            }
        }
        Ring::build(self.0.order.clone(), self.0.trunc, vars)
    }

    /// Replaces the Frobenius image of one variable. The image must be
    /// congruent to `t^q` modulo `pi`.
    pub fn with_var_phi(&self, name: &str, image: &RingElement) -> Result<Ring> {
        let idx = self
            .var_index(name)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown variable `{name}`")))?;
        if image.ring().nvars() != self.nvars() || image.ring().order() != self.order() {
            return Err(Error::BaseMismatch);
        }
        let mut vars = self.0.vars.clone();
        vars[idx].phi = Some(image.poly().clone());
        Ring::build(self.0.order.clone(), self.0.trunc, vars)
    }

    /// `R/pi^n`. Truncating an already truncated ring keeps the smaller exponent.
    pub fn truncated(&self, n: u64) -> Ring {
        let n = match self.trunc() {
            Some(t) => t.min(n),
            None => n,
        };
        if n == self.0.trunc {
            return self.clone();
        }
        let cfg = RingConfig {
            order: self.0.order.clone(),
            trunc: n,
            vars: self.0.vars.clone(),
            e: self.0.e,
            q: self.0.q,
            psi_integral: self.0.psi_integral,
        };
        Ring(Arc::new(cfg))
    }

    /// The exact ring this one is a quotient of (itself when exact).
    pub fn exact_cover(&self) -> Ring {
        if self.is_exact() {
            return self.clone();
        }
        let cfg = RingConfig {
            order: self.0.order.clone(),
            trunc: 0,
            vars: self.0.vars.clone(),
            e: self.0.e,
            q: self.0.q,
            psi_integral: self.0.psi_integral,
        };
        Ring(Arc::new(cfg))
    }

    /// The same ring without adjoined variables.
    pub fn scalars(&self) -> Ring {
        if self.nvars() == 0 {
            return self.clone();
        }
        let cfg = RingConfig {
            order: self.0.order.clone(),
            trunc: self.0.trunc,
            vars: Vec::new(),
            e: self.0.e,
            q: self.0.q,
            psi_integral: self.0.psi_integral,
        };
        Ring(Arc::new(cfg))
    }

    /// Whether the structure map `self -> other` exists: same order and
    /// Frobenius, variables of `self` form a prefix of those of `other`, and
    /// `other` is a quotient by at least as much as `self`.
    pub fn maps_into(&self, other: &Ring) -> bool {
        if self == other {
            return true;
        }
        if self.order() != other.order() || self.nvars() > other.nvars() {
            return false;
        }
        let prefix_ok = self.0.vars.iter().zip(other.0.vars.iter()).all(|(a, b)| {
            a.name == b.name
                && match (&a.phi, &b.phi) {
                    (None, None) => true,
                    (Some(x), Some(y)) => {
                        let map: Vec<usize> = (0..self.nvars()).collect();
                        x.remap_vars(&map, other.nvars()) == *y
                    }
                    _ => false,
                }
        });
        let trunc_ok = match (self.trunc(), other.trunc()) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some(a), Some(b)) => b <= a,
        };
        prefix_ok && trunc_ok
    }

    /// Stable text identifying the ring, used as part of cache keys.
    pub fn fingerprint(&self) -> String {
        let m: Vec<String> = self.order().modulus().iter().map(|c| c.to_string()).collect();
        let mut s = format!("p={};f={};N={}", self.p(), m.join(","), self.0.trunc);
        for v in &self.0.vars {
            s.push_str(&format!(";{}", v.name));
            if let Some(phi) = &v.phi {
                s.push_str(&format!("->{:?}", phi.terms()));
            }
        }
        s
    }

    /// Frobenius images of the variables as polynomials.
    pub(crate) fn phi_images(&self) -> Vec<Poly> {
        let n = self.nvars();
        let q = self.q() as u32;
        self.0
            .vars
            .iter()
            .enumerate()
            .map(|(i, v)| match &v.phi {
                Some(p) => p.clone(),
                None => Poly::var(self.order(), i, n).inflate_exponents(q),
            })
            .collect()
    }

    pub(crate) fn has_default_phi(&self) -> bool {
        self.0.vars.iter().all(|v| v.phi.is_none())
    }

    fn check_frobenius_lift(&self) -> Result<()> {
        let exact = self.exact_cover();
        for (i, v) in self.0.vars.iter().enumerate() {
            if v.phi.is_none() {
                continue;
            }
            let t = RingElement::var_at(&exact, i);
            let image = RingElement::from_poly(&exact, self.phi_images()[i].clone());
            let diff = &image - &t.pow(self.q());
            if diff.pi_valuation() < Valuation::Finite(1) {
                return Err(Error::BadFrobeniusLift(format!(
                    "phi({}) is not congruent to {}^{} modulo pi",
                    v.name,
                    v.name,
                    self.q()
                )));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unramified_two() {
        let r = Ring::integers(2).unwrap();
        assert_eq!((r.e(), r.q(), r.psi_integral()), (1, 2, false));
    }

    #[test]
    fn ramified_five() {
        let r = Ring::over_order(5, &[-5, 0, 1]).unwrap();
        assert_eq!(r.e(), 2);
        assert!(r.psi_integral());
    }

    #[test]
    fn reducible_modulus_rejected() {
        assert!(matches!(Ring::over_order(2, &[-4, 0, 1]), Err(Error::RejectedModulus(_))));
    }

    #[test]
    fn spec_roundtrip_and_defaults() {
        let r = Ring::from_json(r#"{"p":5,"modulus":[-5,0,1]}"#).unwrap();
        assert_eq!(r.trunc(), None);
        let spec = r.to_spec();
        assert_eq!(Ring::from_spec(&spec).unwrap(), r);
        let t = Ring::from_json(r#"{"p":2,"trunc":3,"vars":["a","b"]}"#).unwrap();
        assert_eq!(t.trunc(), Some(3));
        assert_eq!(t.nvars(), 2);
        assert!(matches!(
            Ring::from_json(r#"{"p":2,"phi_pi":"-pi"}"#),
            Err(Error::BadFrobeniusLift(_))
        ));
    }

    #[test]
    fn adjoin_rules() {
        let z = Ring::integers(2).unwrap();
        assert_eq!(z.adjoin_variables(&[]).unwrap(), z);
        let zt = z.adjoin_variables(&["t"]).unwrap();
        assert!(matches!(zt.adjoin_variables(&["t"]), Err(Error::DuplicateName(_))));
        assert!(z.maps_into(&zt));
        assert!(!zt.maps_into(&z));
        assert!(z.maps_into(&z.truncated(3)));
        assert!(!z.truncated(3).maps_into(&z));
    }

    #[test]
    fn custom_phi_must_be_a_lift() {
        let z = Ring::integers(2).unwrap().adjoin_variables(&["t", "d"]).unwrap();
        let t = RingElement::var(&z, "t").unwrap();
        let d = RingElement::var(&z, "d").unwrap();
        let good = &t.pow(2) + &(&RingElement::pi(&z) * &d);
        assert!(z.with_var_phi("t", &good).is_ok());
        let bad = &t.pow(2) + &d;
        assert!(matches!(z.with_var_phi("t", &bad), Err(Error::BadFrobeniusLift(_))));
    }
}
