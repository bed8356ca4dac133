//! Parallel identity sweeps with a reduction that does not depend on
//! scheduling.

use std::time::Instant;

use gtrig_core::identities::{report_from, Accumulator, Instance, PointOutcome};
use gtrig_core::{Error, EvalConfig, IdentityId, IdentityReport, Panel, Result, VerifyOptions};
use rayon::prelude::*;

/// Sweeps `id` over the panel, evaluating sample points in parallel.
///
/// Outcomes are collected in sample order and folded sequentially, so the
/// report is identical to the single-threaded one in the core crate.
pub fn verify_parallel(
    id: IdentityId,
    panel: &Panel,
    cfg: EvalConfig,
    opts: &VerifyOptions,
) -> Result<IdentityReport> {
    if opts.samples < 2 {
        return Err(Error::Domain { what: "at least 2 samples are required", value: opts.samples as f64 });
    }
    if !(opts.tol > 0.0) {
        return Err(Error::Domain { what: "verification tolerance must be positive", value: opts.tol });
    }
    let start = Instant::now();
    let instances = Instance::for_panel(id, panel, cfg)?;
    let parts = instances
        .iter()
        .map(|inst| {
            let outcomes: Vec<PointOutcome> = inst
                .sample_points(opts.samples, opts.seed)
                .into_par_iter()
                .map(|pt| inst.evaluate(pt, opts.perturbation))
                .collect::<Result<_>>()?;
            let mut acc = Accumulator::default();
            outcomes.into_iter().for_each(|o| acc.push(o));
            Ok((inst.param().label(), acc))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut report = report_from(id, &parts, opts.tol);
    report.elapsed = Some(start.elapsed());
    Ok(report)
}

/// One requested identity and the offset added to its right-hand sides.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Job {
    pub id: IdentityId,
    pub perturbation: f64,
}

/// Runs several sweeps concurrently; results come back in `jobs` order.
pub fn verify_jobs(
    jobs: &[Job],
    panel: &Panel,
    cfg: EvalConfig,
    opts: &VerifyOptions,
) -> Vec<Result<IdentityReport>> {
    jobs.par_iter()
        .map(|job| {
            let o = VerifyOptions { perturbation: job.perturbation, ..*opts };
            verify_parallel(job.id, panel, cfg, &o)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use gtrig_core::identities::verify;

    #[test]
    fn matches_the_sequential_sweep() {
        let opts = VerifyOptions { samples: 200, seed: 11, ..VerifyOptions::default() };
        for id in [IdentityId::MafSin, IdentityId::LemniscateAdd, IdentityId::DualityPi] {
            let mut par = verify_parallel(id, &Panel::default(), EvalConfig::default(), &opts).unwrap();
            assert!(par.elapsed.is_some());
            par.elapsed = None;
            let seq = verify(id, &Panel::default(), EvalConfig::default(), &opts).unwrap();
            assert_eq!(par, seq);
        }
    }

    #[test]
    fn jobs_keep_their_order_and_perturbation() {
        let jobs = [
            Job { id: IdentityId::Dbl22, perturbation: 0.0 },
            Job { id: IdentityId::Dbl24, perturbation: 1e-6 },
        ];
        let opts = VerifyOptions { samples: 50, ..VerifyOptions::default() };
        let r = verify_jobs(&jobs, &Panel::default(), EvalConfig::default(), &opts);
        let r: Vec<_> = r.into_iter().map(|r| r.unwrap()).collect();
        assert_eq!(r[0].id, IdentityId::Dbl22);
        assert!(r[0].pass && !r[1].pass);
    }
}
