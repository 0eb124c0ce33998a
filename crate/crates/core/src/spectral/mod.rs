//! Adjacency matrices and their spectra.

mod eigen;
mod histogram;
mod matrix;
mod triangles;

pub use eigen::{eigenvalues, eigenvalues_with, JacobiConfig, Spectrum};
pub use histogram::{spectral_histogram, Histogram, DEFAULT_BINS};
pub use matrix::{adjacency_matrix, moment, trace_power, SymmetricMatrix};
pub use triangles::triangle_count;
