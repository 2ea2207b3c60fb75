//! Classical Calogero–Moser dynamics in floating point.

pub mod emit;
pub mod flow;
pub mod matrix;
pub mod necklace;
pub mod symbolic;
pub mod trig;

pub use emit::*;
pub use flow::*;
pub use matrix::*;
pub use necklace::*;
pub use symbolic::*;
pub use trig::*;
