//! Exact computation of codimensions, cocharacters and Hopf PI-exponents of
//! finite-dimensional associative algebras carrying a generalized Hopf
//! action.

pub mod action;
pub mod algebra;
pub mod error;
pub mod invariants;
pub mod linalg;
pub mod model;
pub mod poly;
pub mod symmetric;
pub mod zoo;

pub use error::{Error, Result};
