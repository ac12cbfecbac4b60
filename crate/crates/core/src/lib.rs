//! Multifunctions on finite vertex universes and the graph theory built on
//! them: set images and preimages, walks, integer powers and closures,
//! bipartiteness, metrics, neighbor and wall families, and the prime-divisor
//! multifunction.

pub mod analysis;
pub mod cli;
pub mod error;
pub mod filters;
pub mod iterate;
pub mod multifunction;
pub mod primes;
pub mod setops;
pub mod structure;
pub mod vertex_set;
pub mod walks;

pub use error::{Error, Result};
pub use multifunction::{MultiFunction, PropertyReport, SetOp};
pub use vertex_set::{VertexSet, VertexUniverse};
