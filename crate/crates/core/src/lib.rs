//! Spectral extremal computations on planar graphs that miss a cycle length:
//! graphs, planarity, Perron vectors, cycle spectra and numerical
//! certification of spectral inequalities for joins `K2 v L` with `L` a
//! linear forest.

pub mod bounds;
pub mod cycles;
pub mod error;
pub mod family;
pub mod forest;
pub mod graph;
pub mod graph6;
pub mod grid;
pub mod planarity;
pub mod selftest;
pub mod spectral;
pub mod verify;

pub use error::{Result, SpexError};
pub use forest::LinearForest;
pub use graph::Graph;
pub use spectral::Verdict;
