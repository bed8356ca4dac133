//! Tanh-sinh quadrature.
//!
//! The substitution `x = mid + half·tanh(π/2·sinh t)` maps the interval onto
//! the whole `t` axis and makes the transformed integrand decay
//! double-exponentially, so the trapezoidal rule in `t` converges rapidly even
//! when the integrand behaves like `(x − a)^α` or `(b − x)^α` with `α > −1`.
//! Levels halve the `t` step and reuse every earlier node.
//!
//! Nodes are never placed on an endpoint. Near an endpoint the abscissa itself
//! rounds to the endpoint long before the node's distance to it underflows, so
//! [`integrate_nodes`] hands the integrand the exact distances to both ends as
//! well; singular integrands should be written in terms of those.

use core::f64::consts::FRAC_PI_2;

use super::CompensatedSum;
use crate::{Error, Result};

/// Default cap on integrand evaluations per integral.
pub const DEFAULT_MAX_EVALUATIONS: usize = 1 << 20;

// Levels below this one never terminate the iteration; h = 1/8 at the cut.
const MIN_LEVEL: u32 = 3;
// |w·f| relative to the level-0 sum below which a side of the t axis is cut.
const TAIL_CUTOFF: f64 = 1e-22;

/// A single quadrature result.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    /// Rounding left over from `value`; `value + value_lo` carries about
    /// twice the working precision of the summation (not of the integrand).
    pub value_lo: f64,
    /// Estimated absolute error, finite and non-negative.
    pub error_estimate: f64,
    pub evaluations: usize,
}

/// An abscissa together with its exact distances to both interval ends.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Node {
    pub x: f64,
    /// `x − lower`, accurate even where `x` has rounded to `lower`.
    pub from_lower: f64,
    /// `upper − x`, accurate even where `x` has rounded to `upper`.
    pub to_upper: f64,
}

/// Tanh-sinh integrator settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TanhSinh {
    pub tol: f64,
    pub max_evaluations: usize,
}

impl TanhSinh {
    pub fn new(tol: f64) -> Self {
        TanhSinh { tol, max_evaluations: DEFAULT_MAX_EVALUATIONS }
    }

    pub fn max_evaluations(mut self, cap: usize) -> Self {
        self.max_evaluations = cap;
        self
    }

    /// Integrates a plain `x ↦ f(x)` over `[lower, upper]`.
    ///
    /// Nodes whose abscissa rounds onto an endpoint are skipped, which caps
    /// the attainable accuracy for singular integrands at roughly
    /// `∫₀^ε f` with `ε` one ulp of the endpoint. Use [`Self::integrate_nodes`]
    /// for those.
    pub fn integrate<F>(&self, mut f: F, lower: f64, upper: f64) -> Result<QuadratureResult>
    where
        F: FnMut(f64) -> f64,
    {
        self.run(
            |n: Node| {
                if n.x <= lower || n.x >= upper {
                    None
                } else {
                    Some(f(n.x))
                }
            },
            lower,
            upper,
        )
    }

    /// Integrates an integrand that receives the full [`Node`].
    pub fn integrate_nodes<F>(&self, mut f: F, lower: f64, upper: f64) -> Result<QuadratureResult>
    where
        F: FnMut(Node) -> f64,
    {
        self.run(|n| Some(f(n)), lower, upper)
    }

    fn run<F>(&self, mut f: F, lower: f64, upper: f64) -> Result<QuadratureResult>
    where
        F: FnMut(Node) -> Option<f64>,
    {
        if !(lower.is_finite() && upper.is_finite()) || lower >= upper {
            return Err(Error::Domain {
                what: "integration bounds must be finite with lower < upper",
                value: upper - lower,
            });
        }
        if !(self.tol > 0.0) {
            return Err(Error::Domain { what: "quadrature tolerance must be positive", value: self.tol });
        }

        let half = 0.5 * (upper - lower);
        let mid = lower + half;
        let mut sum = CompensatedSum::default();
        let mut abs_sum = 0.0;
        let mut evaluations = 0usize;

        let mut sample = |t: f64,
                          sum: &mut CompensatedSum,
                          abs_sum: &mut f64,
                          evaluations: &mut usize|
         -> Result<Option<f64>> {
            let Some((node, weight)) = node_at(t, lower, upper, mid, half) else {
                return Ok(None);
            };
            let Some(fx) = f(node) else {
                return Ok(Some(0.0));
            };
            *evaluations += 1;
            if !fx.is_finite() {
                return Err(Error::NonFiniteIntegrand { at: node.x });
            }
            let term = weight * fx;
            sum.add(term);
            *abs_sum += libm::fabs(term);
            Ok(Some(libm::fabs(term)))
        };

        // Level 0: unit step, walking outwards until the terms vanish.
        sample(0.0, &mut sum, &mut abs_sum, &mut evaluations)?;
        let mut limits = [0.0f64; 2];
        for (side, limit) in limits.iter_mut().enumerate() {
            let sign = if side == 0 { 1.0 } else { -1.0 };
            let mut k = 1.0;
            loop {
                let t = sign * k;
                match sample(t, &mut sum, &mut abs_sum, &mut evaluations)? {
                    None => break,
                    Some(term) => {
                        *limit = k;
                        if term <= TAIL_CUTOFF * abs_sum {
                            break;
                        }
                    }
                }
                k += 1.0;
            }
        }

        let mut step = 1.0;
        let mut estimate = half * sum.value();
        let mut prev_delta = f64::INFINITY;
        let mut level = 0u32;
        loop {
            level += 1;
            step *= 0.5;
            for (side, &limit) in limits.iter().enumerate() {
                let sign = if side == 0 { 1.0 } else { -1.0 };
                let mut j = 0u64;
                loop {
                    let t = (2 * j + 1) as f64 * step;
                    if t > limit {
                        break;
                    }
                    if sample(sign * t, &mut sum, &mut abs_sum, &mut evaluations)?.is_none() {
                        break;
                    }
                    j += 1;
                }
            }
            let next = half * step * sum.value();
            let delta = libm::fabs(next - estimate);
            estimate = next;

            let roundoff = 16.0 * f64::EPSILON * half * step * abs_sum;
            let mut error = if level >= 2 && delta < prev_delta && prev_delta.is_finite() {
                // Asymptotically the error squares per level; early levels are
                // slower, so assume an exponent of 1.5.
                delta * libm::sqrt(delta / prev_delta)
            } else {
                delta
            };
            error = error.max(roundoff);
            if !error.is_finite() {
                error = f64::MAX;
            }
            if level >= MIN_LEVEL && (error <= self.tol || delta <= roundoff) {
                let (value, value_lo) = sum.scaled(half * step);
                return Ok(QuadratureResult { value, value_lo, error_estimate: error, evaluations });
            }
            // The next level doubles the node count.
            if evaluations.saturating_mul(2) > self.max_evaluations {
                return Err(Error::NonConvergence {
                    what: "tanh-sinh quadrature",
                    estimate: error,
                    evaluations,
                });
            }
            prev_delta = delta;
        }
    }
}

/// Abscissa and weight (including the `dx/dt` Jacobian, excluding the step and
/// half-width) of the node at `t`, or `None` once the node reaches an endpoint.
fn node_at(t: f64, lower: f64, upper: f64, mid: f64, half: f64) -> Option<(Node, f64)> {
    let u = FRAC_PI_2 * libm::sinh(t);
    // e = 1 − |tanh u| and sech²u, both without cancellation.
    let decay = libm::exp(-2.0 * libm::fabs(u));
    let denom = 1.0 + decay;
    let complement = 2.0 * decay / denom;
    let weight = FRAC_PI_2 * libm::cosh(t) * 4.0 * decay / (denom * denom);
    if complement == 0.0 || weight == 0.0 {
        return None;
    }
    let near = half * complement;
    let far = half * (2.0 - complement);
    if near == 0.0 {
        return None;
    }
    let node = if t > 0.0 {
        Node { x: upper - near, from_lower: far, to_upper: near }
    } else if t < 0.0 {
        Node { x: lower + near, from_lower: near, to_upper: far }
    } else {
        Node { x: mid, from_lower: half, to_upper: half }
    };
    Some((node, weight))
}

/// `∫ₗᵘ f` by tanh-sinh with absolute tolerance `tol` and the default
/// evaluation cap. See [`TanhSinh::integrate`].
pub fn integrate_endpoint_singular<F>(f: F, lower: f64, upper: f64, tol: f64) -> Result<QuadratureResult>
where
    F: FnMut(f64) -> f64,
{
    TanhSinh::new(tol).integrate(f, lower, upper)
}

/// Like [`integrate_endpoint_singular`] but the integrand sees endpoint
/// distances.
pub fn integrate_nodes<F>(f: F, lower: f64, upper: f64, tol: f64) -> Result<QuadratureResult>
where
    F: FnMut(Node) -> f64,
{
    TanhSinh::new(tol).integrate_nodes(f, lower, upper)
}
