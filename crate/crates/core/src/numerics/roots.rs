//! Safeguarded root finding for increasing functions.
//!
//! Newton steps are taken when a derivative is available and the step lands
//! strictly inside the current bracket; otherwise, or when a Newton step fails
//! to halve the residual, the bracket is bisected. Termination is on the
//! residual `|f(s) − target|`, never on step length: the functions inverted
//! here can have unbounded derivatives, where steps shrink long before the
//! residual does.

use crate::{Error, Result};

/// A bracket `[lo, hi]` with the function values at both ends.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
    pub f_lo: f64,
    pub f_hi: f64,
}

/// Residual tolerance and iteration cap.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IncreasingSolver {
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for IncreasingSolver {
    fn default() -> Self {
        IncreasingSolver { tol: 1e-13, max_iter: 200 }
    }
}

impl IncreasingSolver {
    pub fn new(tol: f64, max_iter: usize) -> Self {
        IncreasingSolver { tol, max_iter }
    }

    /// Solves `f(s) = target` inside a bracket whose end values are already
    /// known. `guess`, if given and inside the bracket, is the first iterate.
    ///
    /// When the residual criterion is met after evaluating `f(s)`, one final
    /// Newton correction `s − r/f′(s)` is applied without re-evaluating `f`
    /// (it squares the remaining error), provided it stays in the bracket.
    pub fn solve_in<F>(
        &self,
        mut f: F,
        deriv: Option<&dyn Fn(f64) -> f64>,
        bracket: Bracket,
        target: f64,
        guess: Option<f64>,
    ) -> Result<f64>
    where
        F: FnMut(f64) -> Result<f64>,
    {
        let Bracket { mut lo, mut hi, f_lo, f_hi } = bracket;
        if !(self.tol > 0.0) {
            return Err(Error::Domain { what: "root tolerance must be positive", value: self.tol });
        }
        if !(lo <= hi) || !(f_lo <= target && target <= f_hi) {
            return Err(Error::Bracket { target, f_lo, f_hi });
        }
        if libm::fabs(f_lo - target) <= self.tol {
            return Ok(lo);
        }
        if libm::fabs(f_hi - target) <= self.tol {
            return Ok(hi);
        }

        let mut x = match guess {
            Some(g) if g > lo && g < hi => g,
            _ => {
                let g = lo + (hi - lo) * ((target - f_lo) / (f_hi - f_lo));
                if g > lo && g < hi {
                    g
                } else {
                    midpoint(lo, hi)
                }
            }
        };
        let mut last_residual = f64::INFINITY;
        let mut newton_step = false;

        for _ in 0..self.max_iter {
            let fx = f(x)?;
            let r = fx - target;
            if !r.is_finite() {
                return Err(Error::NonConvergence {
                    what: "root finder (non-finite function value)",
                    estimate: r,
                    evaluations: 0,
                });
            }
            if libm::fabs(r) <= self.tol {
                if let Some(d) = deriv {
                    let polished = x - r / d(x);
                    if polished.is_finite() && polished >= lo && polished <= hi {
                        return Ok(polished);
                    }
                }
                return Ok(x);
            }
            if r < 0.0 {
                lo = x;
            } else {
                hi = x;
            }

            // A Newton step that did not halve the residual forfeits the next.
            let stalled = newton_step && libm::fabs(r) > 0.5 * last_residual;
            last_residual = libm::fabs(r);
            newton_step = false;
            let mut next = f64::NAN;
            if let (Some(d), false) = (deriv, stalled) {
                let candidate = x - r / d(x);
                if candidate > lo && candidate < hi {
                    next = candidate;
                    newton_step = true;
                }
            }
            if !newton_step {
                next = midpoint(lo, hi);
                if next <= lo || next >= hi {
                    break;
                }
            }
            x = next;
        }
        Err(Error::NonConvergence {
            what: "root finder",
            estimate: last_residual,
            evaluations: self.max_iter,
        })
    }

    /// Evaluates `f` at both ends of `[lo, hi]` and solves inside.
    pub fn solve<F>(
        &self,
        mut f: F,
        deriv: Option<&dyn Fn(f64) -> f64>,
        lo: f64,
        hi: f64,
        target: f64,
    ) -> Result<f64>
    where
        F: FnMut(f64) -> Result<f64>,
    {
        let f_lo = f(lo)?;
        let f_hi = f(hi)?;
        self.solve_in(f, deriv, Bracket { lo, hi, f_lo, f_hi }, target, None)
    }
}

fn midpoint(lo: f64, hi: f64) -> f64 {
    lo + 0.5 * (hi - lo)
}

/// Finds `s ∈ [lo, hi]` with `|f(s) − target| ≤ tol` for an increasing `f`.
pub fn solve_increasing<F>(
    f: F,
    lo: f64,
    hi: f64,
    target: f64,
    deriv: Option<&dyn Fn(f64) -> f64>,
    tol: f64,
) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    IncreasingSolver { tol, ..IncreasingSolver::default() }.solve(f, deriv, lo, hi, target)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_function() {
        let s = solve_increasing(Ok, 0.0, 1.0, 0.3, None, 1e-13).unwrap();
        assert!((s - 0.3).abs() <= 1e-13);
    }

    #[test]
    fn cubic_with_and_without_derivative() {
        let d = |s: f64| 3.0 * s * s;
        for deriv in [None, Some(&d as &dyn Fn(f64) -> f64)] {
            let s = solve_increasing(|s| Ok(s * s * s), 0.0, 1.0, 0.027, deriv, 1e-15).unwrap();
            assert!((s - 0.3).abs() < 1e-13, "{s}");
        }
    }

    #[test]
    fn target_outside_bracket() {
        let r = solve_increasing(Ok, 0.0, 1.0, 1.5, None, 1e-13);
        assert!(matches!(r, Err(Error::Bracket { .. })));
        let r = solve_increasing(Ok, 0.0, 1.0, f64::NAN, None, 1e-13);
        assert!(matches!(r, Err(Error::Bracket { .. })));
    }

    #[test]
    fn endpoint_targets_return_endpoints() {
        assert_eq!(solve_increasing(|s| Ok(s * s), 0.0, 2.0, 0.0, None, 1e-13).unwrap(), 0.0);
        assert_eq!(solve_increasing(|s| Ok(s * s), 0.0, 2.0, 4.0, None, 1e-13).unwrap(), 2.0);
    }

    #[test]
    fn newton_leaving_the_bracket_falls_back_to_bisection() {
        // Derivative that vanishes at the left end throws Newton far right.
        let f = |s: f64| Ok(libm::pow(s, 9.0));
        let d = |s: f64| 9.0 * libm::pow(s, 8.0);
        let s = solve_increasing(f, 0.0, 1.0, 0.5, Some(&d), 1e-14).unwrap();
        assert!((libm::pow(s, 9.0) - 0.5).abs() <= 1e-14);
    }

    #[test]
    fn steep_derivative_near_the_top() {
        // arcsin: derivative 1/sqrt(1 − s²) is unbounded at s = 1.
        let d = |s: f64| 1.0 / libm::sqrt(1.0 - s * s);
        let target = core::f64::consts::FRAC_PI_2 - 1e-2;
        let s = solve_increasing(|s| Ok(libm::asin(s)), 0.0, 1.0, target, Some(&d), 1e-13).unwrap();
        assert!((libm::asin(s) - target).abs() <= 1e-13);
    }

    #[test]
    fn unreachable_tolerance_is_non_convergence() {
        // A step function cannot meet the residual between its levels.
        let r = solve_increasing(|s| Ok(if s < 0.5 { 0.0 } else { 1.0 }), 0.0, 1.0, 0.5, None, 1e-3);
        assert!(matches!(r, Err(Error::NonConvergence { .. })));
    }

    #[test]
    fn propagates_function_errors() {
        let r = solve_increasing(
            |s| if s > 0.0 && s < 1.0 { Err(Error::NonFiniteIntegrand { at: s }) } else { Ok(s) },
            0.0,
            1.0,
            0.5,
            None,
            1e-13,
        );
        assert!(matches!(r, Err(Error::NonFiniteIntegrand { .. })));
    }
}
