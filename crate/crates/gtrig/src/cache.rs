//! Process-wide evaluator cache.
//!
//! Building a [`Gtrig`] integrates the quarter period once; the cache keeps
//! one evaluator per parameter pair and configuration so that repeated calls
//! reduce arguments against the same bits of `π_{p,q}`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use gtrig_core::{EvalConfig, FunctionValue, Gtrig, ParamPair, Result};

type Key = [u64; 9];

fn key(pp: ParamPair, cfg: &EvalConfig) -> Key {
    [
        pp.p().to_bits(),
        pp.q().to_bits(),
        cfg.quad_tol.to_bits(),
        cfg.root_tol.to_bits(),
        cfg.identity_tol.to_bits(),
        cfg.max_iter as u64,
        cfg.max_evaluations as u64,
        cfg.fd_step.to_bits(),
        cfg.ode_step.to_bits(),
    ]
}

fn cache() -> &'static RwLock<HashMap<Key, Arc<Gtrig>>> {
    static CACHE: OnceLock<RwLock<HashMap<Key, Arc<Gtrig>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The shared evaluator for `pp` under `cfg`, built on first use.
///
/// Two threads asking for a new key at the same time may both build it; the
/// first insert wins and both builds are identical anyway.
pub fn evaluator(pp: ParamPair, cfg: &EvalConfig) -> Result<Arc<Gtrig>> {
    let k = key(pp, cfg);
    // A poisoned lock only means another thread panicked mid-insert; the
    // map itself is still consistent.
    if let Some(g) = cache().read().unwrap_or_else(|e| e.into_inner()).get(&k) {
        return Ok(Arc::clone(g));
    }
    let built = Arc::new(Gtrig::new(pp, *cfg)?);
    let mut map = cache().write().unwrap_or_else(|e| e.into_inner());
    Ok(Arc::clone(map.entry(k).or_insert(built)))
}

pub fn pi_pq(pp: ParamPair) -> Result<f64> {
    Ok(evaluator(pp, &EvalConfig::default())?.pi())
}

pub fn sin_pq(pp: ParamPair, x: f64) -> Result<FunctionValue> {
    evaluator(pp, &EvalConfig::default())?.sin(x)
}

pub fn cos_pq(pp: ParamPair, x: f64) -> Result<FunctionValue> {
    evaluator(pp, &EvalConfig::default())?.cos(x)
}

pub fn arcsin_pq(pp: ParamPair, s: f64) -> Result<f64> {
    evaluator(pp, &EvalConfig::default())?.arcsin(s)
}
