//! Exact computer algebra for free graded Lie algebras, differential graded
//! Lie algebras and Sullivan algebras over the rationals.

pub mod error;
pub mod exactlin;
pub mod freelie;
pub mod sullivan;
pub mod dgla;
pub mod elimination;

pub use error::{Error, LinError, Result};
