pub mod cli;
pub mod error;
pub mod harness;
pub mod json;
pub mod kernel;
pub mod ring;
pub mod shifted;
pub mod witt;

pub use error::{Error, Result};
