#![no_std]
// `!(x > 0.0)` is used on purpose so that NaN falls into the rejecting branch.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

//! # `gtrig-core`
//!
//! Generalized trigonometric functions with parameter `(p, q)`.
//!
//! `arcsin_{p,q}` is the integral `F(s) = ∫₀ˢ (1 − tᵠ)^(−1/p) dt`, `sin_{p,q}`
//! is its inverse on `[0, π_{p,q}/2]`, extended to the real line as an odd
//! `2π_{p,q}`-periodic function, and `cos_{p,q}` is its derivative. The crate
//! also ships the numerical kernel these rest on (tanh-sinh quadrature, a
//! safeguarded root finder, `ln Γ`, `B`, AGM) and a catalog of identities
//! between the functions for different parameter pairs, together with a
//! sampling engine that checks them.
//!
//! Everything here is allocation-light and needs only `alloc`. The std
//! companion crate `gtrig` adds the per-pair cache, parallel sweeps, file
//! formats and the command-line tool.

extern crate alloc;

mod error;
/// Generalized sine, cosine, arcsine and π for a fixed parameter pair.
pub mod gtfn;
/// Identity catalog and the verification engine.
pub mod identities;
/// Quadrature, special functions and root finding.
pub mod numerics;

pub use error::{Error, Result};
pub use gtfn::{EvalConfig, FunctionValue, Gtrig, ParamPair, TrigPoint};
pub use identities::{
    Domain, IdentityId, IdentityReport, Instance, Panel, Param, Sides, VerifyOptions,
};
