//! Watts-Strogatz small-world random graphs and the spectral moments of
//! their adjacency matrices.
//!
//! The crate is organised around five pieces:
//!
//! - [`graph`] and [`rewire`]: the ring lattice and the sequential rewiring
//!   pass that turns it into a sample of `SW(n, k, p)`, with an audit log.
//! - [`spectral`]: dense adjacency matrices, exact integer traces of matrix
//!   powers, a Jacobi eigensolver, eigenvalue histograms and triangle counts.
//! - [`configurations`]: torus distance, the four-way classification of
//!   vertex triples, exact and closed-form triple counts, and Monte Carlo
//!   estimates of triangle probabilities with log-log slope fits.
//! - [`montecarlo`]: expected spectral moments over the random-graph law and
//!   convergence sweeps towards the limiting third moment.
//! - [`cli`]: the file-emitting commands behind the `smallworld` binary.
//!
//! ```
//! use smallworld::{generate, spectral, Params};
//!
//! let params = Params::new(40, 4, 0.2, 7).unwrap();
//! let (graph, log) = generate(&params).unwrap();
//! assert_eq!(graph.edge_count(), 80);
//! assert_eq!(log.events().len(), 80);
//!
//! let a = spectral::adjacency_matrix(&graph);
//! assert_eq!(spectral::trace_power(&a, 1).unwrap(), 0);
//! assert_eq!(spectral::trace_power(&a, 2).unwrap(), 40 * 4);
//! ```

pub mod cli;
pub mod configurations;
mod error;
pub mod export;
pub mod graph;
pub mod montecarlo;
mod params;
pub mod rewire;
pub mod rng;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::{build_ring_lattice, validate, Graph, ValidationReport};
pub use params::Params;
pub use rewire::{generate, rewire, Outcome, RewireEvent, RewireLog};
