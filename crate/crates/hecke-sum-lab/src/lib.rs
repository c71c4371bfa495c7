//! Numerical laboratory for mean values of Hecke eigenvalues of Maass cusp
//! forms over squarefree integers.
//!
//! The crate builds dense eigenvalue tables lambda(n) under interchangeable
//! prime models, the nonnegative fourth-moment majorant lambda*(n), smooth
//! number densities (Dickman rho, psi(x,y)), and streaming partial-sum
//! engines, then verifies a family of mean-value inequalities and reports
//! each as a CSV of lhs/rhs/ratio rows with a Holds / HoldsCalibrated /
//! Violated verdict.
//!
//! Entry points: the `examples/` directory exercises each capability; the
//! thin `hecke-sum-lab` binary exposes the same machinery as subcommands
//! (`verify`, `rho`, `psi`, `sums`, `gen-coeffs`).

pub mod bounds;
pub mod error;
pub mod hecke;
pub mod lemma6;
pub mod parallel;
pub mod report;
pub mod sieve;
pub mod smooth;
pub mod sums;
pub mod theorems;
pub mod zeta;

pub use error::{Error, Result};
pub mod cli;
