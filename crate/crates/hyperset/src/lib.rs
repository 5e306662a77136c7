//! Set-to-hypergraph prediction by recurrent incidence-matrix refinement.
//!
//! The crate bundles a small reverse-mode autodiff engine, the recurrent
//! refiner model, set-prediction losses with Hungarian matching, BPTT
//! training schedules with gradient skips, exact geometric oracles for
//! synthetic data, and the evaluation metrics:
//!
//! - [`autodiff`]: tensors, tape, backward, finite-difference checks
//! - [`model`]: the refiner, its parameters, and the checkpoint format
//! - [`loss`]: matching-based set losses, soft F1, adjacency loss
//! - [`train`]: Adam plus full/truncated/skip BPTT schedules
//! - [`geom`]: point sampling, convex hull and Delaunay oracles
//! - [`dataset`]: the line-oriented example file format and generators
//! - [`metrics`]: decoders, F1/ARI/RI, evaluation over a split
//! - [`config`]: `key = value` run configuration files
//! - [`cli`]: the `hyperset` command-line entry points

pub mod autodiff;
pub mod error;

pub use error::{Error, Result};
