//! Sparse multivariate polynomials over the base order.
//!
//! Terms are kept sorted by exponent vector with no zero coefficients, so two
//! polynomials over the same variable set are equal iff their term lists are.

use std::collections::HashMap;

use smallvec::SmallVec;

use super::order::{Order, Scalar};

pub type Mono = SmallVec<[u32; 4]>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: Vec<(Mono, Scalar)>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    pub fn constant(c: Scalar, nvars: usize) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: vec![(Mono::from_elem(0, nvars), c)] }
    }

    pub fn var(order: &Order, index: usize, nvars: usize) -> Poly {
        let mut m = Mono::from_elem(0, nvars);
        m[index] = 1;
        Poly { terms: vec![(m, order.one())] }
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    pub fn from_terms(order: &Order, terms: impl IntoIterator<Item = (Mono, Scalar)>) -> Poly {
        let mut acc: HashMap<Mono, Scalar> = HashMap::new();
        for (m, c) in terms {
            match acc.get_mut(&m) {
                Some(e) => order.add_assign(e, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Poly::from_map(acc)
    }

    /// Wraps terms that are already sorted and free of zeros.
    pub(crate) fn from_terms_sorted(terms: Vec<(Mono, Scalar)>) -> Poly {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        Poly { terms }
    }

    fn from_map(acc: HashMap<Mono, Scalar>) -> Poly {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        Poly { terms }
    }

    pub fn terms(&self) -> &[(Mono, Scalar)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient if the polynomial has degree zero.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.as_slice() {
            [] => None,
            [(m, c)] if m.iter().all(|&e| e == 0) => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || self.as_constant().is_some()
    }

    pub fn total_degree(&self) -> u64 {
        self.terms
            .iter()
            .map(|(m, _)| m.iter().map(|&e| e as u64).sum::<u64>())
            .max()
            .unwrap_or(0)
    }

    pub fn add(&self, order: &Order, other: &Poly) -> Poly {
        self.merge(order, other, false)
    }

    pub fn sub(&self, order: &Order, other: &Poly) -> Poly {
        self.merge(order, other, true)
    }

    fn merge(&self, order: &Order, other: &Poly, negate: bool) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                std::cmp::Ordering::Greater
            } else if j == b.len() {
                std::cmp::Ordering::Less
            } else {
                a[i].0.cmp(&b[j].0)
            };
            match ord {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    let c = if negate { order.neg(&b[j].1) } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate {
                        order.sub(&a[i].1, &b[j].1)
                    } else {
                        order.add(&a[i].1, &b[j].1)
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Poly { terms: out }
    }

    pub fn neg(&self, order: &Order) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), order.neg(c))).collect() }
    }

    pub fn scale(&self, order: &Order, s: &Scalar) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), order.mul(c, s)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Poly { terms }
    }

    pub fn mul(&self, order: &Order, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if let Some(c) = self.as_constant() {
            return other.scale(order, &c);
        }
        if let Some(c) = other.as_constant() {
            return self.scale(order, &c);
        }
        let mut acc: HashMap<Mono, Scalar> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m: Mono = ma.iter().zip(mb.iter()).map(|(x, y)| x + y).collect();
                let c = order.mul(ca, cb);
                match acc.get_mut(&m) {
                    Some(e) => order.add_assign(e, &c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Poly::from_map(acc)
    }

    /// Applies `f` to every coefficient, dropping terms that become zero.
    pub fn try_map_coeffs<E>(&self, mut f: impl FnMut(&Scalar) -> Result<Scalar, E>) -> Result<Poly, E> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let c = f(c)?;
            if !c.is_zero() {
                terms.push((m.clone(), c));
            }
        }
        Ok(Poly { terms })
    }

    pub fn map_coeffs(&self, mut f: impl FnMut(&Scalar) -> Scalar) -> Poly {
        self.try_map_coeffs::<()>(|c| Ok(f(c))).unwrap()
    }

    /// Multiplies every exponent by `k`; this is `t -> t^k` on all variables.
    pub fn inflate_exponents(&self, k: u32) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.iter().map(|e| e * k).collect(), c.clone()))
                .collect(),
        }
    }

    /// Re-embeds into a larger variable set; `map[i]` is the new index of
    /// variable `i`.
    pub fn remap_vars(&self, map: &[usize], nvars: usize) -> Poly {
        let mut terms: Vec<_> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut nm = Mono::from_elem(0, nvars);
                for (i, &e) in m.iter().enumerate() {
                    nm[map[i]] += e;
                }
                (nm, c.clone())
            })
            .collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        Poly { terms }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_square() {
        let o = Order::integers(2).unwrap();
        let x = Poly::var(&o, 0, 2);
        let y = Poly::var(&o, 1, 2);
        let s = x.add(&o, &y);
        let sq = s.mul(&o, &s);
        assert_eq!(sq.len(), 3);
        let diff = sq.sub(&o, &x.mul(&o, &x)).sub(&o, &y.mul(&o, &y));
        let two_xy = x.mul(&o, &y).scale(&o, &o.from_int(2));
        assert_eq!(diff, two_xy);
    }

    #[test]
    fn cancellation_leaves_zero() {
        let o = Order::integers(3).unwrap();
        let x = Poly::var(&o, 0, 1);
        assert!(x.sub(&o, &x).is_zero());
        assert_eq!(Poly::constant(o.from_int(4), 1).as_constant(), Some(o.from_int(4)));
    }
}
