//! JSON encodings of elements, vectors and points.
//!
//! Integers are JSON numbers when they fit in `i64` and decimal strings
//! otherwise. A constant of `Z` is a bare integer, a constant of a larger
//! order is its array of power-basis coordinates, and a polynomial is a list
//! of `{"coeff": .., "monomial": {"var": exponent}}` terms.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::kernel::KernelPoint;
use crate::ring::{Mono, Order, Poly, Ring, RingElement, Scalar};
use crate::shifted::ShiftedWittVector;
use crate::witt::{GhostVector, WittVector};

pub fn int_to_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(n.to_string()),
    }
}

pub fn int_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .or_else(|| n.as_u64().map(BigInt::from))
            .ok_or_else(|| Error::Parse(format!("not an integer: {n}"))),
        Value::String(s) => s.trim().parse().map_err(|_| Error::Parse(format!("not an integer: {s:?}"))),
        other => Err(Error::Parse(format!("expected an integer, found {other}"))),
    }
}

pub fn scalar_to_json(order: &Order, c: &Scalar) -> Value {
    if order.is_integers() {
        int_to_json(&c.coords()[0])
    } else {
        Value::Array(c.coords().iter().map(int_to_json).collect())
    }
}

pub fn scalar_from_json(order: &Order, v: &Value) -> Result<Scalar> {
    match v {
        Value::Array(items) => {
            let coords = items.iter().map(int_from_json).collect::<Result<Vec<_>>>()?;
            order.from_coords(&coords)
        }
        other => Ok(order.from_int(int_from_json(other)?)),
    }
}

fn mono_to_json(m: &Mono, names: &[&str]) -> Value {
    let mut map = Map::new();
    for (i, &e) in m.iter().enumerate() {
        if e > 0 {
            map.insert(names[i].to_string(), Value::from(e));
        }
    }
    Value::Object(map)
}

pub fn element_to_json(x: &RingElement) -> Value {
    let ring = x.ring();
    let order = ring.order();
    if let Some(c) = x.as_scalar() {
        return scalar_to_json(order, &c);
    }
    let names: Vec<&str> = ring.var_names().collect();
    Value::Array(
        x.poly()
            .terms()
            .iter()
            .map(|(m, c)| json!({"coeff": scalar_to_json(order, c), "monomial": mono_to_json(m, &names)}))
            .collect(),
    )
}

fn is_term_list(items: &[Value]) -> bool {
    !items.is_empty() && items.iter().all(Value::is_object)
}

pub fn element_from_json(ring: &Ring, v: &Value) -> Result<RingElement> {
    let order = ring.order();
    match v {
        Value::Array(items) if items.is_empty() && ring.nvars() > 0 => Ok(RingElement::zero(ring)),
        Value::Array(items) if is_term_list(items) => {
            let mut terms = Vec::with_capacity(items.len());
            for t in items {
                let c = scalar_from_json(order, t.get("coeff").ok_or_else(|| Error::Parse("term without coeff".into()))?)?;
                let mut m = Mono::from_elem(0, ring.nvars());
                if let Some(mono) = t.get("monomial") {
                    let mono = mono.as_object().ok_or_else(|| Error::Parse("monomial must be an object".into()))?;
                    for (name, e) in mono {
                        let i = ring
                            .var_index(name)
                            .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))?;
                        let e = e
                            .as_u64()
                            .and_then(|e| u32::try_from(e).ok())
                            .ok_or_else(|| Error::Parse(format!("bad exponent for `{name}`")))?;
                        m[i] += e;
                    }
                }
                terms.push((m, c));
            }
            Ok(RingElement::from_poly(ring, Poly::from_terms(order, terms)))
        }
        other => Ok(RingElement::from_scalar(ring, scalar_from_json(order, other)?)),
    }
}

pub fn elements_to_json(xs: &[RingElement]) -> Value {
    Value::Array(xs.iter().map(element_to_json).collect())
}

pub fn elements_from_json(ring: &Ring, v: &Value) -> Result<Vec<RingElement>> {
    let items = v.as_array().ok_or_else(|| Error::Parse("expected an array of elements".into()))?;
    items.iter().map(|x| element_from_json(ring, x)).collect()
}

pub fn witt_to_json(v: &WittVector) -> Value {
    elements_to_json(v.components())
}

pub fn witt_from_json(ring: &Ring, v: &Value) -> Result<WittVector> {
    WittVector::new(ring, elements_from_json(ring, v)?)
}

pub fn ghost_to_json(g: &GhostVector) -> Value {
    elements_to_json(g.entries())
}

pub fn ghost_from_json(ring: &Ring, v: &Value) -> Result<GhostVector> {
    GhostVector::new(elements_from_json(ring, v)?)
}

/// `{"m": .., "n": .., "head": [..], "tail": [..]}`.
pub fn shifted_to_json(v: &ShiftedWittVector) -> Value {
    object(vec![
        ("m", Value::from(v.m())),
        ("n", Value::from(v.n())),
        ("head", elements_to_json(v.head())),
        ("tail", elements_to_json(v.tail())),
    ])
}

pub fn shifted_from_json(base: &Ring, ring: &Ring, v: &Value) -> Result<ShiftedWittVector> {
    let field = |k: &str| v.get(k).ok_or_else(|| Error::Parse(format!("shifted vector needs `{k}`")));
    let head = elements_from_json(base, field("head")?)?;
    let tail = elements_from_json(ring, field("tail")?)?;
    for (k, len) in [("m", head.len().wrapping_sub(1)), ("n", tail.len())] {
        if let Some(x) = v.get(k) {
            if x.as_u64() != Some(len as u64) {
                return Err(Error::Parse(format!("`{k}` does not match the coordinates")));
            }
        }
    }
    ShiftedWittVector::new(base, ring, head, tail)
}

/// `{"m": .., "n": .., "group": .., "coords": [..]}`.
pub fn point_to_json(t: &KernelPoint) -> Value {
    object(vec![
        ("m", Value::from(t.m())),
        ("n", Value::from(t.n())),
        ("group", Value::from(t.group().tag().to_string())),
        ("coords", elements_to_json(t.coords())),
    ])
}

/// Sorted-key rendering with a trailing newline.
pub fn to_canonical_string(v: &Value) -> String {
    // serde_json's default map keeps keys sorted
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

pub(crate) fn object(pairs: Vec<(&str, Value)>) -> Value {
    let map: BTreeMap<String, Value> = pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect();
    Value::Object(map.into_iter().collect())
}
