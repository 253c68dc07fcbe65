//! Spectral analysis of mixed graphs through Hermitian adjacency matrices:
//! exact characteristic polynomials, switching canonical forms,
//! cospectral-mate search and spectral-determination verdicts at desk scale.

pub mod canon;
pub mod charpoly;
pub mod cycles;
pub mod enumerate;
pub mod error;
pub mod gauss;
pub mod graph;
pub mod matrix;
pub mod names;
pub mod poly;
pub mod registry;
pub mod search;
pub mod signed;
pub mod spectra;
pub mod switching;
pub mod testing;
pub mod verify;

pub use error::{CharPolyError, GraphError, SearchError, SpectraError, SwitchingError};
pub use gauss::{GaussInt, GaussianUnit};
pub use graph::{MixedGraph, Structure, WalkSpec};
pub use matrix::HermitianMatrix;
pub use poly::IntPolynomial;
pub use registry::Registry;
pub use signed::SignedGraph;
pub use spectra::Spectrum;
pub use switching::{CycleType, SwitchingFunction};
