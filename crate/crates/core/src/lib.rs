//! Rational Cherednik algebras, Dunkl operators and Calogero–Moser systems.

pub mod cherednik;
pub mod cmflow;
pub mod coxeter;
pub mod dunkl;
pub mod error;
pub mod exact;
pub mod report;
pub mod typea;
pub mod verify;

pub use error::{Error, Result};
