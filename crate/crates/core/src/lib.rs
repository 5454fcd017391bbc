//! Exact maximum independent set for graphs excluding an induced minor:
//! the friendship graph `K1 + tK2`, or `t` triangles next to a 4-cycle.
//!
//! Both solvers check the structural facts their correctness rests on while
//! they run, and report any failure as a [`ClassViolation`](error::ClassViolation)
//! carrying a concrete witness.

pub mod bench;
pub mod cli;
pub mod detectors;
pub mod error;
pub mod friendship;
pub mod generate;
pub mod graph;
pub mod io;
pub mod kernels;
pub mod report;
pub mod triangles;
