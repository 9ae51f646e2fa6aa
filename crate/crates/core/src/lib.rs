//! Characteristic matrix parabolas of unipotent flat strictly causal
//! Lorentzian manifolds.

pub mod charpoly;
pub mod classify;
pub mod cli;
pub mod construction;
pub mod error;
pub mod minkowski;
pub mod symmat;

pub use charpoly::{CharacteristicVerdict, MatrixParabola};
pub use construction::{ManifoldData, Signature};
pub use error::{Error, Result};
pub use symmat::{Matrix, SymMatrix};
