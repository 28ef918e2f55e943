//! A_alpha spectra of corona-type graph products.
//!
//! Builds corona, edge corona, R-vertex and R-edge coronas, computes the
//! spectrum of `A_alpha(G) = alpha D(G) + (1 - alpha) A(G)` both by direct
//! eigensolve and through coronal factorizations of the characteristic
//! polynomial, and checks and generates alpha-isospectral graph pairs.

pub mod coronal;
pub mod errata;
pub mod error;
pub mod format;
pub mod graph;
pub mod isospectral;
pub mod linalg;
pub mod poly;
pub mod products;
pub mod theorems;

pub use error::{Error, Result};
pub use graph::{named_graph, DegreeSequence, Graph};
pub use linalg::{alpha_matrix, AlphaParam, Matrix, Spectrum, SymMatrix};
pub use poly::{FactoredCharPoly, Polynomial, RationalFunction};
