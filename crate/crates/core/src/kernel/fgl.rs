//! One-dimensional commutative formal group laws over the base order.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::json;
use crate::ring::{Fraction, Order, Poly, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FglTag {
    Additive,
    Multiplicative,
    Custom(String),
}

impl fmt::Display for FglTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FglTag::Additive => write!(f, "ga"),
            FglTag::Multiplicative => write!(f, "gm"),
            FglTag::Custom(name) => write!(f, "custom:{name}"),
        }
    }
}

/// `F(X, Y) = sum c_ij X^i Y^j`, known through total degree `degree`.
///
/// When `polynomial` is set the table is the whole law and there are no
/// terms beyond `degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalGroupLaw {
    order: Order,
    degree: u32,
    coeffs: BTreeMap<(u32, u32), Scalar>,
    polynomial: bool,
    tag: FglTag,
}

const BUILTIN_DEGREE: u32 = 64;

impl FormalGroupLaw {
    /// `X + Y`.
    pub fn additive(order: &Order) -> FormalGroupLaw {
        let mut c = BTreeMap::new();
        c.insert((1, 0), order.one());
        c.insert((0, 1), order.one());
        FormalGroupLaw { order: order.clone(), degree: BUILTIN_DEGREE, coeffs: c, polynomial: true, tag: FglTag::Additive }
    }

    /// `X + Y + XY`.
    pub fn multiplicative(order: &Order) -> FormalGroupLaw {
        let mut c = BTreeMap::new();
        c.insert((1, 0), order.one());
        c.insert((0, 1), order.one());
        c.insert((1, 1), order.one());
        FormalGroupLaw {
            order: order.clone(),
            degree: BUILTIN_DEGREE,
            coeffs: c,
            polynomial: true,
            tag: FglTag::Multiplicative,
        }
    }

    /// Validates a coefficient table.
    pub fn custom(
        order: &Order,
        name: &str,
        degree: u32,
        coeffs: impl IntoIterator<Item = ((u32, u32), Scalar)>,
        polynomial: bool,
    ) -> Result<FormalGroupLaw> {
        if degree < 1 {
            return Err(Error::InvalidConfig("formal group law degree must be at least 1".into()));
        }
        let mut table = BTreeMap::new();
        for ((i, j), c) in coeffs {
            if i + j > degree {
                return Err(Error::InvalidConfig(format!("coefficient ({i},{j}) exceeds degree {degree}")));
            }
            if !c.is_zero() {
                let e = table.entry((i, j)).or_insert_with(|| order.zero());
                order.add_assign(e, &c);
            }
        }
        table.retain(|_, c| !c.is_zero());
        let law = FormalGroupLaw {
            order: order.clone(),
            degree,
            coeffs: table,
            polynomial,
            tag: FglTag::Custom(name.to_string()),
        };
        law.validate()?;
        Ok(law)
    }

    /// `{"degree": D, "coeffs": [{"i": .., "j": .., "c": ..}], "polynomial": bool}`.
    pub fn from_json(order: &Order, name: &str, text: &str) -> Result<FormalGroupLaw> {
        let v: Value = serde_json::from_str(text)?;
        let degree = v
            .get("degree")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("formal group law needs an integer `degree`".into()))?;
        let polynomial = v.get("polynomial").and_then(Value::as_bool).unwrap_or(false);
        let items = v
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("formal group law needs a `coeffs` array".into()))?;
        let mut coeffs = Vec::with_capacity(items.len());
        for item in items {
            let idx = |k: &str| {
                item.get(k)
                    .and_then(Value::as_u64)
                    .and_then(|x| u32::try_from(x).ok())
                    .ok_or_else(|| Error::Parse(format!("coefficient entry needs integer `{k}`")))
            };
            let c = item.get("c").ok_or_else(|| Error::Parse("coefficient entry needs `c`".into()))?;
            coeffs.push(((idx("i")?, idx("j")?), json::scalar_from_json(order, c)?));
        }
        let degree = u32::try_from(degree).map_err(|_| Error::Parse("degree too large".into()))?;
        FormalGroupLaw::custom(order, name, degree, coeffs, polynomial)
    }

    pub fn to_json(&self) -> Value {
        let coeffs: Vec<Value> = self
            .coeffs
            .iter()
            .map(|(&(i, j), c)| {
                json::object(vec![
                    ("i", Value::from(i)),
                    ("j", Value::from(j)),
                    ("c", json::scalar_to_json(&self.order, c)),
                ])
            })
            .collect();
        json::object(vec![
            ("degree", Value::from(self.degree)),
            ("coeffs", Value::Array(coeffs)),
            ("polynomial", Value::from(self.polynomial)),
        ])
    }

    pub fn order(&self) -> &Order {
        &self.order
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn tag(&self) -> &FglTag {
        &self.tag
    }

    pub fn is_polynomial(&self) -> bool {
        self.polynomial
    }

    pub fn coeff(&self, i: u32, j: u32) -> Scalar {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_else(|| self.order.zero())
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&(u32, u32), &Scalar)> {
        self.coeffs.iter()
    }

    /// Degree through which coefficients are known (unbounded for polynomial laws).
    pub fn known_degree(&self) -> Option<u32> {
        (!self.polynomial).then_some(self.degree)
    }

    /// The additive law up to the coordinate: no terms of degree two or more.
    pub fn is_additive(&self) -> bool {
        self.coeffs.keys().all(|&(i, j)| i + j <= 1)
    }

    fn validate(&self) -> Result<()> {
        let o = &self.order;
        if !self.coeff(0, 0).is_zero() {
            return Err(Error::NotUnital("constant term must vanish".into()));
        }
        if self.coeff(1, 0) != o.one() || self.coeff(0, 1) != o.one() {
            return Err(Error::NotUnital("linear coefficients must be 1".into()));
        }
        for (&(i, j), _) in &self.coeffs {
            if (j == 0 && i >= 2) || (i == 0 && j >= 2) {
                return Err(Error::NotUnital(format!("F(X, 0) has a term of degree {}", i + j)));
            }
            if self.coeff(j, i) != self.coeff(i, j) {
                return Err(Error::NotCommutative(format!("c_({i},{j}) differs from c_({j},{i})")));
            }
        }
        let d = self.degree;
        let x = Poly::var(o, 0, 3);
        let y = Poly::var(o, 1, 3);
        let z = Poly::var(o, 2, 3);
        let lhs = self.compose(&self.compose(&x, &y, d), &z, d);
        let rhs = self.compose(&x, &self.compose(&y, &z, d), d);
        if lhs != rhs {
            let low = lhs
                .sub(o, &rhs)
                .terms()
                .iter()
                .map(|(m, _)| m.iter().sum::<u32>())
                .min()
                .unwrap_or(0);
            return Err(Error::NotAssociative { degree: low });
        }
        Ok(())
    }

    /// `F(a, b)` for power series `a`, `b` without constant term, truncated
    /// above total degree `d`.
    pub(crate) fn compose(&self, a: &Poly, b: &Poly, d: u32) -> Poly {
        let o = &self.order;
        let nvars = 3;
        let max_i = self.coeffs.keys().map(|k| k.0).max().unwrap_or(0);
        let max_j = self.coeffs.keys().map(|k| k.1).max().unwrap_or(0);
        let pa = powers(o, a, max_i, d, nvars);
        let pb = powers(o, b, max_j, d, nvars);
        let mut acc = Poly::zero();
        for (&(i, j), c) in &self.coeffs {
            let t = truncate(&pa[i as usize].mul(o, &pb[j as usize]), d).scale(o, c);
            acc = acc.add(o, &t);
        }
        acc
    }

    /// Coefficients `a_1 = 1, a_2, ..., a_deg` of the logarithm, from
    /// `log'(X) = 1 / (dF/dY)(X, 0)`.
    pub fn log_coefficients(&self, deg: u32) -> Result<Vec<Fraction>> {
        if let Some(known) = self.known_degree() {
            if deg > known {
                return Err(Error::PrecisionRequired(format!(
                    "logarithm to degree {deg} needs the law beyond its working degree {known}"
                )));
            }
        }
        let o = &self.order;
        // (dF/dY)(X, 0) = sum_i c_{i1} X^i
        let d: Vec<Scalar> = (0..deg).map(|i| self.coeff(i, 1)).collect();
        let mut inv = vec![o.one()];
        for k in 1..deg as usize {
            let mut s = o.zero();
            for i in 1..=k {
                o.add_assign(&mut s, &o.mul(&d[i], &inv[k - i]));
            }
            inv.push(o.neg(&s));
        }
        Ok((1..=deg as usize)
            .map(|k| Fraction::new(o, inv[k - 1].clone(), BigInt::from(k)))
            .collect())
    }

    /// Coefficients `i_1 = -1, i_2, ..., i_deg` of the inverse series
    /// `i(Y)` with `F(Y, i(Y)) = 0`.
    pub fn inverse_coefficients(&self, deg: u32) -> Result<Vec<Scalar>> {
        let o = &self.order;
        if self.is_additive() {
            let mut v = vec![o.zero(); deg as usize];
            if deg > 0 {
                v[0] = o.from_int(-1);
            }
            return Ok(v);
        }
        if let Some(known) = self.known_degree() {
            if deg > known {
                return Err(Error::PrecisionRequired(format!(
                    "inverse series to degree {deg} needs the law beyond its working degree {known}"
                )));
            }
        }
        // fixed point of i = -(F(Y, i) - i), one new correct degree per pass
        let y = Poly::var(o, 0, 3);
        let mut cur = y.neg(o);
        for _ in 1..deg {
            let f = self.compose(&y, &cur, deg);
            cur = cur.sub(o, &f);
        }
        let mut out = vec![o.zero(); deg as usize];
        for (m, c) in cur.terms() {
            let k = m[0] as usize;
            if (1..=deg as usize).contains(&k) {
                out[k - 1] = c.clone();
            }
        }
        Ok(out)
    }
}

fn truncate(p: &Poly, d: u32) -> Poly {
    Poly::from_terms_sorted(p.terms().iter().filter(|(m, _)| m.iter().sum::<u32>() <= d).cloned().collect())
}

fn powers(o: &Order, a: &Poly, max: u32, d: u32, nvars: usize) -> Vec<Poly> {
    let mut out = vec![Poly::constant(o.one(), nvars)];
    for _ in 0..max {
        let next = truncate(&out.last().unwrap().mul(o, a), d);
        out.push(next);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(p: u32) -> Order {
        Order::integers(p).unwrap()
    }

    #[test]
    fn builtins_validate() {
        let o = z(2);
        FormalGroupLaw::additive(&o).validate().unwrap();
        FormalGroupLaw::multiplicative(&o).validate().unwrap();
    }

    #[test]
    fn rejects_bad_laws() {
        let o = z(2);
        let bad = FormalGroupLaw::custom(&o, "c", 3, [((1, 0), o.from_int(2)), ((0, 1), o.one())], true);
        assert!(matches!(bad, Err(Error::NotUnital(_))));
        let noncomm = FormalGroupLaw::custom(
            &o,
            "c",
            3,
            [((1, 0), o.one()), ((0, 1), o.one()), ((2, 1), o.one())],
            true,
        );
        assert!(matches!(noncomm, Err(Error::NotCommutative(_))));
        let nonassoc = FormalGroupLaw::custom(
            &o,
            "c",
            4,
            [((1, 0), o.one()), ((0, 1), o.one()), ((2, 2), o.one())],
            true,
        );
        assert!(matches!(nonassoc, Err(Error::NotAssociative { .. })));
    }

    #[test]
    fn logarithms() {
        let o = z(5);
        let ga = FormalGroupLaw::additive(&o).log_coefficients(4).unwrap();
        assert!(ga[1..].iter().all(Fraction::is_zero));
        let gm = FormalGroupLaw::multiplicative(&o).log_coefficients(4).unwrap();
        for (k, a) in gm.iter().enumerate() {
            let k = k as i64 + 1;
            let sign = if k % 2 == 1 { 1 } else { -1 };
            assert_eq!(*a, Fraction::new(&o, o.from_int(sign), BigInt::from(k)));
        }
        let two = FormalGroupLaw::custom(
            &o,
            "2xy",
            8,
            [((1, 0), o.one()), ((0, 1), o.one()), ((1, 1), o.from_int(2))],
            true,
        )
        .unwrap();
        for (k, a) in two.log_coefficients(5).unwrap().iter().enumerate() {
            let k = k as u32 + 1;
            let sign: i64 = if k % 2 == 1 { 1 } else { -1 };
            let num = sign * 2i64.pow(k - 1);
            assert_eq!(*a, Fraction::new(&o, o.from_int(num), BigInt::from(k)));
        }
    }

    #[test]
    fn multiplicative_inverse() {
        let o = z(3);
        let inv = FormalGroupLaw::multiplicative(&o).inverse_coefficients(5).unwrap();
        // -Y / (1 + Y) = -Y + Y^2 - Y^3 + ...
        let expect: Vec<Scalar> = [-1, 1, -1, 1, -1].iter().map(|&c| o.from_int(c)).collect();
        assert_eq!(inv, expect);
    }

    #[test]
    fn json_roundtrip() {
        let o = z(2);
        let g = FormalGroupLaw::multiplicative(&o);
        let text = serde_json::to_string(&g.to_json()).unwrap();
        let back = FormalGroupLaw::from_json(&o, "m", &text).unwrap();
        assert_eq!(back.coeffs, g.coeffs);
        assert!(back.is_polynomial());
    }
}
