use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{Ring, RingElement};

/// An element of `W_n(B)`: components `x_0, ..., x_n`.
#[derive(Clone)]
pub struct WittVector {
    pub(crate) ring: Ring,
    pub(crate) comps: Vec<RingElement>,
    /// Number of Frobenius twists applied to the structure map. Not part of
    /// equality.
    pub(crate) twist: u32,
}

impl PartialEq for WittVector {
    fn eq(&self, other: &WittVector) -> bool {
        self.ring == other.ring && self.comps == other.comps
    }
}

impl Eq for WittVector {}

impl WittVector {
    pub fn new(ring: &Ring, comps: Vec<RingElement>) -> Result<WittVector> {
        if comps.is_empty() {
            return Err(Error::BadLength("a Witt vector has at least one component".into()));
        }
        let comps = comps
            .into_iter()
            .map(|c| c.to_ring(ring))
            .collect::<Result<Vec<_>>>()?;
        Ok(WittVector { ring: ring.clone(), comps, twist: 0 })
    }

    pub fn from_ints(ring: &Ring, xs: &[i64]) -> WittVector {
        let comps = xs.iter().map(|&x| RingElement::from_int(ring, x)).collect();
        WittVector::new(ring, comps).expect("non-empty")
    }

    pub(crate) fn raw(ring: &Ring, comps: Vec<RingElement>, twist: u32) -> WittVector {
        debug_assert!(!comps.is_empty());
        WittVector { ring: ring.clone(), comps, twist }
    }

    pub fn zero(ring: &Ring, n: usize) -> WittVector {
        WittVector::raw(ring, vec![RingElement::zero(ring); n + 1], 0)
    }

    pub fn one(ring: &Ring, n: usize) -> WittVector {
        WittVector::teichmuller(&RingElement::one(ring), n)
    }

    /// `[b] = (b, 0, ..., 0)`.
    pub fn teichmuller(b: &RingElement, n: usize) -> WittVector {
        let ring = b.ring();
        let mut comps = vec![RingElement::zero(ring); n + 1];
        comps[0] = b.clone();
        WittVector::raw(ring, comps, 0)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// The length parameter: the vector has `n + 1` components.
    pub fn n(&self) -> usize {
        self.comps.len() - 1
    }

    pub fn components(&self) -> &[RingElement] {
        &self.comps
    }

    pub fn component(&self, i: usize) -> &RingElement {
        &self.comps[i]
    }

    pub fn twist(&self) -> u32 {
        self.twist
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(RingElement::is_zero)
    }

    /// Image under the structure map of the base into `target`.
    pub fn to_ring(&self, target: &Ring) -> Result<WittVector> {
        let comps = self.comps.iter().map(|c| c.to_ring(target)).collect::<Result<Vec<_>>>()?;
        Ok(WittVector::raw(target, comps, self.twist))
    }

    pub(crate) fn check_compatible(&self, other: &WittVector) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::BaseMismatch);
        }
        if self.comps.len() != other.comps.len() {
            return Err(Error::LengthMismatch { expected: self.comps.len(), found: other.comps.len() });
        }
        Ok(())
    }
}

impl fmt::Display for WittVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.comps.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for WittVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W{self}")
    }
}

/// Ghost coordinates `<w_0, ..., w_n>`. In shifted mode the first `m + 1`
/// entries live in the head ring and the rest in the tail ring.
#[derive(Clone, PartialEq, Eq)]
pub struct GhostVector {
    pub(crate) entries: Vec<RingElement>,
    pub(crate) shift: Option<usize>,
}

impl GhostVector {
    pub fn new(entries: Vec<RingElement>) -> Result<GhostVector> {
        if entries.is_empty() {
            return Err(Error::BadLength("a ghost vector has at least one entry".into()));
        }
        let ring = entries[0].ring().clone();
        if entries.iter().any(|e| *e.ring() != ring) {
            return Err(Error::BaseMismatch);
        }
        Ok(GhostVector { entries, shift: None })
    }

    pub fn from_ints(ring: &Ring, xs: &[i64]) -> GhostVector {
        GhostVector::new(xs.iter().map(|&x| RingElement::from_int(ring, x)).collect()).expect("non-empty")
    }

    /// A shifted ghost vector: `head` over `R`, `tail` over `B`.
    pub fn shifted(head: Vec<RingElement>, tail: Vec<RingElement>) -> Result<GhostVector> {
        if head.is_empty() {
            return Err(Error::BadLength("shifted ghost vectors have a non-empty head".into()));
        }
        let m = head.len() - 1;
        let mut entries = head;
        entries.extend(tail);
        Ok(GhostVector { entries, shift: Some(m) })
    }

    pub fn entries(&self) -> &[RingElement] {
        &self.entries
    }

    pub fn entry(&self, i: usize) -> &RingElement {
        &self.entries[i]
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `Some(m)` for a shifted ghost vector with head `z_0..z_m`.
    pub fn shift(&self) -> Option<usize> {
        self.shift
    }
}

impl fmt::Display for GhostVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|c| c.to_string()).collect();
        match self.shift {
            Some(m) => write!(f, "<{}; {}>", parts[..=m].join(", "), parts[m + 1..].join(", ")),
            None => write!(f, "<{}>", parts.join(", ")),
        }
    }
}

impl fmt::Debug for GhostVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
