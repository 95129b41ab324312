//! Exact computation in finitely presented associative algebras.

pub mod error;
pub mod field;
pub mod freealg;
pub mod gbasis;
pub mod models;
pub mod structure;
pub mod verify;

pub use error::{Error, Result};
