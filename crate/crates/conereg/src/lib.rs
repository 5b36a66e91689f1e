//! Interval-valued regression with the cone-affine linear model: CSV
//! ingestion, JSON model reports, the Monte Carlo harness and the `conereg`
//! command-line tool. The estimators live in [`conereg_core`].

pub mod cli;
pub mod csv_format;
pub mod error;
pub mod report;
pub mod simulation;

pub use conereg_core as core;
pub use error::{Error, Result};
pub use report::ModelReport;
