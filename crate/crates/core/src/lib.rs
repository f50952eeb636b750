//! q-integer linear decomposition of multivariate polynomials over `Z[q, 1/q]`.

pub mod error;
pub mod generator;
pub mod geometry;
pub mod modgcd;
pub mod mpoly;
pub mod oracle;
pub mod qild;
pub mod qring;
pub mod samples;
pub mod text;
pub mod zpoly;

pub use error::{Error, Result};
