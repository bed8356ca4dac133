use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::time::Duration;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Domain, IdentityId, Instance, Panel, ENDPOINT_INSET};
use crate::gtfn::EvalConfig;
use crate::{Error, Result};

// Grid resolution per axis for two-argument identities.
const TRIANGLE_GRID: usize = 32;
// Relative error is reported only where |lhs| exceeds this.
const REL_ERR_FLOOR: f64 = 1e-3;

/// Sweep settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    pub samples: usize,
    pub tol: f64,
    pub seed: u64,
    /// Added to every right-hand side; nonzero only for sensitivity checks.
    pub perturbation: f64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { samples: 1000, tol: 1e-9, seed: 0, perturbation: 0.0 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SamplePoint {
    pub x: f64,
    pub y: Option<f64>,
}

/// Result of evaluating an identity at one sample point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointOutcome {
    pub point: SamplePoint,
    /// Largest `|lhs − rhs|` over the comparisons; `+∞` if any side was
    /// not finite.
    pub abs_err: f64,
    pub rel_err: Option<f64>,
    pub non_finite: bool,
}

/// Outcome of sweeping one identity.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub id: IdentityId,
    /// Parameter of the worst instance, for parameterized identities.
    pub param: Option<String>,
    pub instances: usize,
    /// Number of evaluated points over all instances.
    pub samples: usize,
    pub max_abs_err: f64,
    pub argmax_x: f64,
    pub argmax_y: Option<f64>,
    /// Largest relative error over points with `|lhs| > 1e-3`.
    pub max_rel_err: Option<f64>,
    pub tol: f64,
    pub pass: bool,
    /// Filled in by callers that own a clock.
    pub elapsed: Option<Duration>,
    pub diagnostic: Option<String>,
}

/// Deterministic max/argmax reduction, ordered by `(err, x, y)`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Accumulator {
    pub count: usize,
    pub worst: Option<PointOutcome>,
    pub max_rel: Option<f64>,
    pub non_finite: usize,
}

fn key_cmp(a: &PointOutcome, b: &PointOutcome) -> Ordering {
    a.abs_err
        .total_cmp(&b.abs_err)
        .then(a.point.x.total_cmp(&b.point.x))
        .then(a.point.y.unwrap_or(0.0).total_cmp(&b.point.y.unwrap_or(0.0)))
}

impl Accumulator {
    pub fn push(&mut self, o: PointOutcome) {
        self.count += 1;
        if o.non_finite {
            self.non_finite += 1;
        }
        if let Some(r) = o.rel_err {
            self.max_rel = Some(self.max_rel.map_or(r, |m| m.max(r)));
        }
        match &self.worst {
            Some(w) if key_cmp(&o, w) != Ordering::Greater => {}
            _ => self.worst = Some(o),
        }
    }

    pub fn merge(&mut self, other: &Accumulator) {
        self.count += other.count;
        self.non_finite += other.non_finite;
        if let Some(r) = other.max_rel {
            self.max_rel = Some(self.max_rel.map_or(r, |m| m.max(r)));
        }
        if let Some(o) = other.worst {
            match &self.worst {
                Some(w) if key_cmp(&o, w) != Ordering::Greater => {}
                _ => self.worst = Some(o),
            }
        }
    }
}

impl Instance {
    /// A uniform grid of `samples` points over the domain followed by
    /// `samples` pseudo-random points drawn from `seed`.
    pub fn sample_points(&self, samples: usize, seed: u64) -> Vec<SamplePoint> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        match self.domain() {
            Domain::Point => alloc::vec![SamplePoint { x: 0.0, y: None }],
            Domain::Interval { lo, hi, open_lo, open_hi } => {
                let width = hi - lo;
                let inset = ENDPOINT_INSET * width;
                let lo_in = if open_lo { lo + inset } else { lo };
                let hi_in = if open_hi { hi - inset } else { hi };
                let mut pts = Vec::with_capacity(2 * samples);
                let n = samples.max(2);
                for i in 0..n {
                    let x = if i == 0 {
                        lo_in
                    } else if i == n - 1 {
                        hi_in
                    } else {
                        (lo + width * (i as f64 / (n - 1) as f64)).clamp(lo_in, hi_in)
                    };
                    pts.push(SamplePoint { x, y: None });
                }
                for _ in 0..samples {
                    let u: f64 = rng.gen();
                    pts.push(SamplePoint { x: (lo + width * u).clamp(lo_in, hi_in), y: None });
                }
                pts
            }
            Domain::Triangle { side } => {
                let mut pts = Vec::new();
                let step = side / (TRIANGLE_GRID - 1) as f64;
                for i in 0..TRIANGLE_GRID {
                    for j in 0..TRIANGLE_GRID {
                        if i + j < TRIANGLE_GRID {
                            let u = i as f64 * step;
                            let v = (j as f64 * step).min(side - u);
                            pts.push(SamplePoint { x: u, y: Some(v) });
                        }
                    }
                }
                let mut accepted = 0;
                while accepted < samples {
                    let u = side * rng.gen::<f64>();
                    let v = side * rng.gen::<f64>();
                    if u + v <= side {
                        pts.push(SamplePoint { x: u, y: Some(v) });
                        accepted += 1;
                    }
                }
                pts
            }
        }
    }

    /// Evaluates one sample point; non-finite sides are a failed point, not
    /// an error.
    pub fn evaluate(&self, point: SamplePoint, perturbation: f64) -> Result<PointOutcome> {
        let sides = self.eval(point.x, point.y)?;
        let mut abs_err: f64 = 0.0;
        let mut rel_err: Option<f64> = None;
        let mut non_finite = false;
        for &(lhs, rhs) in sides.as_slice() {
            let rhs = rhs + perturbation;
            if !(lhs.is_finite() && rhs.is_finite()) {
                non_finite = true;
                continue;
            }
            let e = libm::fabs(lhs - rhs);
            abs_err = abs_err.max(e);
            if libm::fabs(lhs) > REL_ERR_FLOOR {
                let r = e / libm::fabs(lhs);
                rel_err = Some(rel_err.map_or(r, |m| m.max(r)));
            }
        }
        if non_finite {
            abs_err = f64::INFINITY;
        }
        Ok(PointOutcome { point, abs_err, rel_err, non_finite })
    }

    fn sweep(&self, opts: &VerifyOptions) -> Result<Accumulator> {
        let mut acc = Accumulator::default();
        for pt in self.sample_points(opts.samples, opts.seed) {
            acc.push(self.evaluate(pt, opts.perturbation)?);
        }
        Ok(acc)
    }
}

fn check_options(opts: &VerifyOptions) -> Result<()> {
    if opts.samples < 2 {
        return Err(Error::Domain { what: "at least 2 samples are required", value: opts.samples as f64 });
    }
    if !(opts.tol > 0.0) {
        return Err(Error::Domain { what: "verification tolerance must be positive", value: opts.tol });
    }
    Ok(())
}

/// Builds a report from per-instance accumulators, listed in panel order.
pub fn report_from(id: IdentityId, parts: &[(Option<String>, Accumulator)], tol: f64) -> IdentityReport {
    let mut total = Accumulator::default();
    let mut worst_param = None;
    for (label, acc) in parts {
        let before = total.worst;
        total.merge(acc);
        if total.worst != before {
            worst_param = label.clone();
        }
    }
    let worst = total.worst;
    let max_abs_err = worst.map_or(0.0, |w| w.abs_err);
    let diagnostic = (total.non_finite > 0).then(|| {
        alloc::format!("{} sample point(s) produced a non-finite side", total.non_finite)
    });
    IdentityReport {
        id,
        param: worst_param,
        instances: parts.len(),
        samples: total.count,
        max_abs_err,
        argmax_x: worst.map_or(f64::NAN, |w| w.point.x),
        argmax_y: worst.and_then(|w| w.point.y),
        max_rel_err: total.max_rel,
        tol,
        pass: max_abs_err <= tol && total.non_finite == 0,
        elapsed: None,
        diagnostic,
    }
}

/// Sweeps a single bound instance.
pub fn verify_instance(instance: &Instance, opts: &VerifyOptions) -> Result<IdentityReport> {
    check_options(opts)?;
    let acc = instance.sweep(opts)?;
    Ok(report_from(instance.id(), &[(instance.param().label(), acc)], opts.tol))
}

/// Sweeps an identity over every parameter of the panel and reports the worst
/// point found.
pub fn verify(id: IdentityId, panel: &Panel, cfg: EvalConfig, opts: &VerifyOptions) -> Result<IdentityReport> {
    check_options(opts)?;
    let mut parts = Vec::new();
    for inst in Instance::for_panel(id, panel, cfg)? {
        parts.push((inst.param().label(), inst.sweep(opts)?));
    }
    Ok(report_from(id, &parts, opts.tol))
}
