//! Weighted distance sums on connected graphs.
//!
//! The central quantity is the weighted Wiener value of a connected graph:
//! the sum of `d(i,j) * a[i][j]` over all vertex pairs, where `d` is the
//! shortest-path distance and `a` is a symmetric weight matrix. This crate
//! provides
//!
//! * exact evaluation and weight classification ([`wiener`]),
//! * a constructive procedure that turns any connected graph into a labeled
//!   path with an equal or larger value, emitting a replayable certificate
//!   ([`path_builder`]),
//! * exhaustive enumeration of small labeled universes ([`enumeration`]),
//! * distance and adjacency matrix bundles with hand-rolled symmetric
//!   eigensolvers ([`spectra`]),
//! * sweep drivers that check the path-extremality statements over whole
//!   universes and produce machine-readable reports ([`verifier`]).
//!
//! Vertices are labeled `1..=n` everywhere in the public API; matrices are
//! indexed by those same labels. Graphs are capped at 62 vertices, the
//! single-byte graph6 range, which keeps every integer quantity comfortably
//! inside `i64`.

pub mod enumeration;
pub mod error;
pub mod graph;
pub mod matrix;
pub mod path_builder;
pub mod report;
pub mod spectra;
pub mod verifier;
pub mod wiener;

pub use error::Error;
pub use graph::{DistanceMatrix, Graph};
pub use matrix::{SymMatrix, Weight};
pub use path_builder::{maximize_on_path, verify_certificate, PathCertificate};
pub use report::VerificationReport;



/// Largest supported graph order: single-byte graph6 sizes.
pub const MAX_VERTICES: usize = 62;

/// Largest weight magnitude accepted from external input. With `n <= 62`
/// (distances at most 61) this keeps every weighted sum, including the
/// row-folded weights produced by leaf contraction, far below `i64::MAX`.
pub const MAX_WEIGHT: i64 = 1_000_000;
