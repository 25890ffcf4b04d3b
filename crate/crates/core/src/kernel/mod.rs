//! Formal groups and the kernels of jet space projections.

mod fgl;
mod points;
mod psi;

pub use fgl::{FglTag, FormalGroupLaw};
pub use points::{group_difference, KernelPoint};
pub use psi::{psi_coefficients, psi_degree, psi_map, PsiPolicy};
