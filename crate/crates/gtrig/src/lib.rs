//! Standard-library companion to `gtrig-core`: a shared evaluator cache,
//! parallel identity sweeps, value tables, report formats and the `gtrig`
//! command line.

// `!(x > 0.0)` is used on purpose so that NaN falls into the rejecting branch.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cache;
pub mod cli;
pub mod output;
pub mod sweep;
pub mod table;

pub use cache::{arcsin_pq, cos_pq, evaluator, pi_pq, sin_pq};
pub use sweep::{verify_jobs, verify_parallel, Job};
pub use table::{Function, Row, TableFormat, TableRequest};
