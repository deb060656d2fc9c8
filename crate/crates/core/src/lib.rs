pub mod auto;
pub mod corpus;
pub mod error;
pub mod examples;
pub mod free;
pub mod gadget;
pub mod graph;
pub mod hat;
pub mod io;
pub mod matrix;
pub mod presentation;
pub mod rho;
pub mod sil;
pub mod verify;
pub mod word;

pub use error::{Error, Result};

pub use matrix::Matrix;

/// Exact integer matrices.
pub type IntMatrix = Matrix<num_bigint::BigInt>;
/// Exact rational matrices.
pub type RatMatrix = Matrix<num_rational::BigRational>;
