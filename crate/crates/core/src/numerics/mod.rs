//! Numerical kernel shared by the function evaluators.
//!
//! * [`quadrature`]: double-exponential (tanh-sinh) integration that copes
//!   with integrable algebraic singularities at either endpoint.
//! * [`special`]: `ln Γ`, the Beta function and the arithmetic-geometric
//!   mean, used as closed-form cross-checks.
//! * [`roots`]: a bracketed Newton/bisection solver for increasing functions.
//!
//! All functions are pure; nothing here holds state between calls.

pub(crate) mod dd;
pub mod quadrature;
pub mod roots;
pub mod special;

pub use quadrature::{
    integrate_endpoint_singular, integrate_nodes, Node, QuadratureResult, TanhSinh,
    DEFAULT_MAX_EVALUATIONS,
};
pub use roots::{solve_increasing, Bracket, IncreasingSolver};
pub use special::{agm, beta, log_gamma};

/// Neumaier's variant of compensated summation.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    pub(crate) fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if libm::fabs(self.sum) >= libm::fabs(v) {
            self.carry += (self.sum - t) + v;
        } else {
            self.carry += (v - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum + self.carry
    }

    /// `k · (sum + carry)` as an unevaluated pair `(hi, lo)`.
    pub(crate) fn scaled(&self, k: f64) -> (f64, f64) {
        let hi = k * self.sum;
        let lo = libm::fma(k, self.sum, -hi) + k * self.carry;
        dd::two_sum(hi, lo)
    }
}

