//! Weighted hypergraphs, tensor joins, and their adjacency, Laplacian and
//! normalized Laplacian spectra.

pub mod closedform;
pub mod cospectral;
pub mod counting;
pub mod eigen;
pub mod error;
pub mod hgr;
pub mod hypercore;
pub mod linalg;
pub mod matrices;
pub mod rational;
mod subsets;
pub mod tensorjoin;

pub use error::{Error, Result};
pub use hypercore::{Edge, Hypergraph, StructuralProfile, WeightTable};
pub use matrices::{MatrixKind, SymMatrix};
pub use rational::Rational;
