//! `pi`-typical Witt vectors `W_n(B)`.

pub(crate) mod engine;
mod ops;
mod universal;
mod vector;

pub use ops::{c_pi, delta};
pub use universal::{
    apply_universal, estimate_terms, isobaric_count, universal_polynomials,
    universal_polynomials_with_budget, universal_ring, PolyCache, UniversalOp, UniversalPolys,
    DEFAULT_BUDGET,
};
pub use vector::{GhostVector, WittVector};

