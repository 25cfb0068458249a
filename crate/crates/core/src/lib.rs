pub mod algebra;
pub mod derivations;
pub mod error;
pub mod families;
pub mod fixtures;
pub mod library;
pub mod linalg;
pub mod products;
pub mod scalar;
pub mod selftest;
pub mod theorems;

pub use error::{Error, Result};
pub use scalar::Field;

pub type Rational = num_rational::BigRational;
pub type Matrix = linalg::Matrix<Rational>;
pub type Subspace = linalg::Subspace<Rational>;
