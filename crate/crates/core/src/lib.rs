//! Spectral conditions for path-factors and their verification.
//!
//! The crate covers graph primitives and graph6 I/O, canonical labeling and
//! small-order enumeration, a dense symmetric eigensolver, `A_α` spectra and
//! quotient matrices, the `{P2, C3, P5, T(3)}`-factor criterion with
//! certificates, and the numerical verification harnesses.

pub mod canon;
pub mod eigen;
pub mod factor;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod poly;
pub mod spectral;
pub mod tol;
pub mod verify;

pub use canon::{canonical_form, CanonicalLabel};
pub use eigen::DenseSymMatrix;
pub use error::{Error, Result};
pub use graph::{construct_family, Graph, VertexSubset};
pub use poly::{Cubic, Quadratic};
pub use spectral::{QuotientMatrix, VertexPartition};
