//! Exact digit-restricted fractal constructions (the base-4 set keeping
//! digits 1 and 3, generalized Cantor sets, and sets driven by digitized
//! zeta zeros), their similarity and box-counting dimensions, Riemann zeta
//! values at real arguments, and the informational-cardinality triple built
//! on top of them.

pub mod cardinality;
pub mod dimension;
pub mod error;
pub mod exact;
pub mod rational;
pub mod stochastic;
pub mod zeros;
pub mod zeta;

pub use error::{Error, ErrorKind, Result};
