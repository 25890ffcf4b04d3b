//! Base rings: the order `O`, polynomial extensions, truncations.

mod config;
mod element;
mod fraction;
mod order;
mod poly;

pub use config::{Ring, RingConfig, RingSpec, VarSpec};
pub(crate) use element::with_term_limit;
pub use element::{eval_poly, RingElement};
pub use fraction::Fraction;
pub use order::{Order, Scalar, Valuation};
pub use poly::{Mono, Poly};

