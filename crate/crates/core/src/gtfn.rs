//! `sin_{p,q}`, `cos_{p,q}`, `arcsin_{p,q}` and `π_{p,q}`.
//!
//! On `[0, π_{p,q}/2]` the sine is the inverse of
//! `F(s) = ∫₀ˢ (1 − tᵠ)^(−1/p) dt`. The quarter period is split at
//! `sᵠ = 1/2`:
//!
//! * below the split, `F(s) = x` is solved for `s` directly;
//! * above it, the solver works in the flux variable `u = |cos|^(p−1)`. With
//!   `1 − sᵠ = u^(p*)` the remaining part of the quarter period is
//!   `π/2 − F(s) = (p*/q) ∫₀ᵘ (1 − v^(p*))^(−1/q*) dv`, whose integrand is
//!   smooth, so neither the quadrature nor Newton's method sees the
//!   `(1 − tᵠ)^(−1/p)` singularity at `t = 1`.
//!
//! Each evaluation keeps `s`, `u` and `ln(1 − sᵠ)` side by side
//! ([`TrigPoint`]); any power of the cosine is formed from `ln(1 − sᵠ)` rather
//! than from a rounded cosine, which keeps `cos^a` accurate near the zeros of
//! the cosine for every exponent `a`.

use crate::numerics::dd::{ln_offset_from_root_half, two_sum};
use crate::numerics::{Bracket, IncreasingSolver, TanhSinh};
use crate::{Error, Result};

const MAX_EXPONENT: f64 = 1000.0;

/// A validated exponent pair `(p, q)` with `1 < p, q ≤ 1000`.
///
/// The conjugates `p* = p/(p − 1)` and `q* = q/(q − 1)` are always derived
/// from `p` and `q`, never stored.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamPair {
    p: f64,
    q: f64,
}

impl ParamPair {
    pub fn new(p: f64, q: f64) -> Result<Self> {
        check_exponent("p", p)?;
        check_exponent("q", q)?;
        Ok(ParamPair { p, q })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn p_star(&self) -> f64 {
        conjugate(self.p)
    }

    pub fn q_star(&self) -> f64 {
        conjugate(self.q)
    }

    /// The dual pair `(q*, p*)`.
    pub fn dual(&self) -> Result<ParamPair> {
        ParamPair::new(self.q_star(), self.p_star())
    }
}

fn check_exponent(name: &'static str, v: f64) -> Result<()> {
    if v.is_finite() && v > 1.0 && v <= MAX_EXPONENT {
        Ok(())
    } else {
        Err(Error::InvalidParameter { name, value: v })
    }
}

/// `p/(p − 1)`.
pub fn conjugate(p: f64) -> f64 {
    p / (p - 1.0)
}

/// Tolerances and caps for every numerical step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalConfig {
    /// Quadrature tolerance, relative to the size of the integral.
    pub quad_tol: f64,
    /// Root residual tolerance, relative to the target for targets below 1.
    pub root_tol: f64,
    pub identity_tol: f64,
    pub max_iter: usize,
    pub max_evaluations: usize,
    /// Step for derivative checks.
    pub fd_step: f64,
    /// Step for [`Gtrig::ode_residual`].
    pub ode_step: f64,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            quad_tol: 1e-13,
            root_tol: 1e-13,
            identity_tol: 1e-9,
            max_iter: 200,
            max_evaluations: crate::numerics::DEFAULT_MAX_EVALUATIONS,
            fd_step: 1e-5,
            ode_step: 1e-4,
        }
    }
}

impl EvalConfig {
    pub fn validate(&self) -> Result<()> {
        for (what, v) in [
            ("quad_tol must be positive", self.quad_tol),
            ("root_tol must be positive", self.root_tol),
            ("identity_tol must be positive", self.identity_tol),
            ("fd_step must be positive", self.fd_step),
            ("ode_step must be positive", self.ode_step),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::Domain { what, value: v });
            }
        }
        if self.max_iter == 0 || self.max_evaluations == 0 {
            return Err(Error::Domain { what: "iteration caps must be at least 1", value: 0.0 });
        }
        Ok(())
    }
}

/// A sine or cosine value with the argument reduction that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FunctionValue {
    pub value: f64,
    /// Quarter period of `x mod 2π_{p,q}` (taken in `[0, 2π_{p,q})`); each
    /// quarter is closed on the left.
    pub quadrant: u8,
    /// The argument folded into `[0, π_{p,q}/2]`.
    pub reduced_x: f64,
}

/// `sin_{p,q}x` and `cos_{p,q}x` at one argument, in a form that keeps the
/// cosine's powers accurate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrigPoint {
    p: f64,
    q: f64,
    /// `|sin|`
    sin_abs: f64,
    /// `|cos|^(p−1) = (1 − |sin|^q)^(1/p*)`
    flux_abs: f64,
    /// `ln(1 − |sin|^q) = p·ln|cos|`
    ln_w: f64,
    sin_negative: bool,
    cos_negative: bool,
    pub quadrant: u8,
    pub reduced_x: f64,
}

impl TrigPoint {
    pub fn sin(&self) -> f64 {
        signed(self.sin_abs, self.sin_negative)
    }

    pub fn cos(&self) -> f64 {
        signed(self.cos_abs_pow(1.0), self.cos_negative)
    }

    /// `|cos|^a` for `a ≥ 0`.
    pub fn cos_abs_pow(&self, a: f64) -> f64 {
        if a == 0.0 {
            1.0
        } else {
            libm::exp(a * self.ln_w / self.p)
        }
    }

    /// `|sin|^a` for `a ≥ 0`.
    pub fn sin_abs_pow(&self, a: f64) -> f64 {
        if a == 0.0 {
            1.0
        } else {
            libm::pow(self.sin_abs, a)
        }
    }

    /// `|cos|^(p−2) cos`, the p-Laplacian flux of the sine.
    pub fn flux(&self) -> f64 {
        signed(self.flux_abs, self.cos_negative)
    }

    /// `1 − |sin|^q` (equal to `|cos|^p`), without cancellation.
    pub fn one_minus_sin_pow_q(&self) -> f64 {
        libm::exp(self.ln_w)
    }

    /// `1 − cos`, without cancellation.
    pub fn one_minus_cos(&self) -> f64 {
        if self.cos_negative {
            1.0 + self.cos_abs_pow(1.0)
        } else {
            -libm::expm1(self.ln_w / self.p)
        }
    }

    /// `1 + cos`, without cancellation.
    pub fn one_plus_cos(&self) -> f64 {
        if self.cos_negative {
            -libm::expm1(self.ln_w / self.p)
        } else {
            1.0 + self.cos_abs_pow(1.0)
        }
    }

    pub fn params(&self) -> (f64, f64) {
        (self.p, self.q)
    }
}

/// One Newton step from `x` with a residual computed to better than working
/// precision; kept only if it stays in `[0, hi]`.
fn polish(x: f64, residual: f64, slope: f64, hi: f64) -> f64 {
    let y = x - residual / slope;
    if y.is_finite() && (0.0..=hi).contains(&y) {
        y
    } else {
        x
    }
}

fn signed(v: f64, negative: bool) -> f64 {
    // Zeros are always +0.
    if v == 0.0 {
        0.0
    } else if negative {
        -v
    } else {
        v
    }
}

#[derive(Debug, Clone, Copy)]
struct Reduced {
    r: f64,
    quadrant: u8,
    sin_negative: bool,
    cos_negative: bool,
}

/// Generalized trigonometric functions for one parameter pair.
///
/// Construction computes `π_{p,q}` and the split point of the quarter period
/// once; every later call reuses them, so argument reduction is bit-stable.
#[derive(Debug, Clone)]
pub struct Gtrig {
    pp: ParamPair,
    cfg: EvalConfig,
    pi: f64,
    half_pi: f64,
    /// Rounding left over from `half_pi`.
    half_pi_lo: f64,
    two_pi: f64,
    /// `s` with `sᵠ = 1/2`, and `F` there.
    split_s: f64,
    split_x: f64,
    /// `u` with `u^(p*) = 1/2`, and the tail integral there.
    split_u: f64,
    split_tail: f64,
}

impl Gtrig {
    pub fn new(pp: ParamPair, cfg: EvalConfig) -> Result<Self> {
        cfg.validate()?;
        let mut g = Gtrig {
            pp,
            cfg,
            pi: 0.0,
            half_pi: 0.0,
            half_pi_lo: 0.0,
            two_pi: 0.0,
            split_s: libm::exp2(-1.0 / pp.q()),
            split_x: 0.0,
            split_u: libm::exp2(-1.0 / pp.p_star()),
            split_tail: 0.0,
        };
        let (x_hi, x_lo) = g.lower_integral_parts(g.split_s)?;
        let (t_hi, t_lo) = g.tail_integral_parts(g.split_u)?;
        g.split_x = x_hi + x_lo;
        g.split_tail = t_hi + t_lo;
        // Both split points are rounded, so the pieces overlap or leave a gap
        // of a fraction of an ulp; remove it to first order.
        let (q, ps) = (pp.q(), pp.p_star());
        let ds = g.split_s * ln_offset_from_root_half(g.split_s, q) / q;
        let du = g.split_u * ln_offset_from_root_half(g.split_u, ps) / ps;
        let overlap = g.lower_derivative(g.split_s) * ds + g.tail_derivative(g.split_u) * du;
        let (h_hi, h_lo) = two_sum(x_hi, t_hi);
        let tail = h_lo + (x_lo + t_lo - overlap);
        g.half_pi = h_hi + tail;
        g.half_pi_lo = tail - (g.half_pi - h_hi);
        g.pi = 2.0 * g.half_pi;
        g.two_pi = 2.0 * g.pi;
        Ok(g)
    }

    pub fn with_defaults(pp: ParamPair) -> Result<Self> {
        Gtrig::new(pp, EvalConfig::default())
    }

    pub fn params(&self) -> ParamPair {
        self.pp
    }

    pub fn config(&self) -> &EvalConfig {
        &self.cfg
    }

    /// `π_{p,q} = 2F(1)`.
    pub fn pi(&self) -> f64 {
        self.pi
    }

    fn quad(&self, tol: f64) -> TanhSinh {
        TanhSinh::new(tol).max_evaluations(self.cfg.max_evaluations)
    }

    /// `∫₀ˢ (1 − tᵠ)^(−1/p) dt` for `0 ≤ s ≤ split_s`.
    fn lower_integral(&self, s: f64) -> Result<f64> {
        Ok(self.lower_integral_parts(s)?.0)
    }

    /// [`Self::lower_integral`] as an unevaluated sum `(hi, lo)`.
    fn lower_integral_parts(&self, s: f64) -> Result<(f64, f64)> {
        if s == 0.0 {
            return Ok((0.0, 0.0));
        }
        let (q, exponent) = (self.pp.q(), -1.0 / self.pp.p());
        let r = self
            .quad(self.cfg.quad_tol * s)
            .integrate_nodes(|n| libm::pow(1.0 - libm::pow(n.x, q), exponent), 0.0, s)?;
        Ok((r.value, r.value_lo))
    }

    fn lower_derivative(&self, s: f64) -> f64 {
        libm::pow(1.0 - libm::pow(s, self.pp.q()), -1.0 / self.pp.p())
    }

    /// `π/2 − F(s)` as a function of `u = (1 − sᵠ)^(1/p*)`:
    /// `(p*/q) ∫₀ᵘ (1 − v^(p*))^(1/q − 1) dv`, for `0 ≤ u ≤ split_u`.
    fn tail_integral(&self, u: f64) -> Result<f64> {
        Ok(self.tail_integral_parts(u)?.0)
    }

    fn tail_integral_parts(&self, u: f64) -> Result<(f64, f64)> {
        if u == 0.0 {
            return Ok((0.0, 0.0));
        }
        let (ps, exponent) = (self.pp.p_star(), 1.0 / self.pp.q() - 1.0);
        let r = self
            .quad(self.cfg.quad_tol * u)
            .integrate_nodes(|n| libm::pow(1.0 - libm::pow(n.x, ps), exponent), 0.0, u)?;
        let k = ps / self.pp.q();
        let hi = k * r.value;
        let lo = libm::fma(k, r.value, -hi) + k * r.value_lo;
        Ok(two_sum(hi, lo))
    }

    fn tail_derivative(&self, u: f64) -> f64 {
        let ps = self.pp.p_star();
        ps / self.pp.q() * libm::pow(1.0 - libm::pow(u, ps), 1.0 / self.pp.q() - 1.0)
    }

    /// `arcsin_{p,q}(s) = F(s)` for `s ∈ [0, 1]`.
    pub fn arcsin(&self, s: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&s) {
            return Err(Error::Domain { what: "arcsin argument must lie in [0, 1]", value: s });
        }
        if s <= self.split_s {
            return self.lower_integral(s);
        }
        // 1 − sᵠ from ln s, then u = (1 − sᵠ)^(1/p*).
        let w = -libm::expm1(self.pp.q() * libm::log(s));
        let u = if w <= 0.0 { 0.0 } else { libm::exp(libm::log(w) / self.pp.p_star()) };
        Ok(self.half_pi - self.tail_integral(u.min(self.split_u))?)
    }

    fn solver(&self, target: f64) -> IncreasingSolver {
        IncreasingSolver::new(self.cfg.root_tol * target.min(1.0), self.cfg.max_iter)
    }

    /// Sine and cosine at a point of `[0, π/2]`, as (|sin|, |cos|^(p−1), ln(1 − sinᵠ)).
    fn quarter(&self, r: f64) -> Result<(f64, f64, f64)> {
        let (q, ps) = (self.pp.q(), self.pp.p_star());
        if r <= self.split_x {
            if r == 0.0 {
                return Ok((0.0, 1.0, 0.0));
            }
            let deriv = |s: f64| self.lower_derivative(s);
            let s = self.solver(r).solve_in(
                |s| self.lower_integral(s),
                Some(&deriv),
                Bracket { lo: 0.0, hi: self.split_s, f_lo: 0.0, f_hi: self.split_x },
                r,
                None,
            )?;
            let (f_hi, f_lo) = self.lower_integral_parts(s)?;
            let s = polish(s, (f_hi - r) + f_lo, deriv(s), self.split_s);
            let ln_w = libm::log1p(-libm::pow(s, q));
            Ok((s, libm::exp(ln_w / ps), ln_w))
        } else {
            let (t_hi, t_lo) = two_sum(self.half_pi, -r);
            let target = t_hi.clamp(0.0, self.split_tail);
            if target == 0.0 {
                return Ok((1.0, 0.0, f64::NEG_INFINITY));
            }
            let deriv = |u: f64| self.tail_derivative(u);
            let u = self.solver(target).solve_in(
                |u| self.tail_integral(u),
                Some(&deriv),
                Bracket { lo: 0.0, hi: self.split_u, f_lo: 0.0, f_hi: self.split_tail },
                target,
                None,
            )?;
            let u = if target == t_hi {
                let (f_hi, f_lo) = self.tail_integral_parts(u)?;
                polish(u, (f_hi - t_hi) + (f_lo - t_lo - self.half_pi_lo), deriv(u), self.split_u)
            } else {
                u
            };
            let ln_w = if u == 0.0 { f64::NEG_INFINITY } else { ps * libm::log(u) };
            let s = libm::exp(libm::log1p(-libm::exp(ln_w)) / q);
            Ok((s, u, ln_w))
        }
    }

    fn reduce(&self, x: f64) -> Result<Reduced> {
        if !x.is_finite() {
            return Err(Error::Domain { what: "argument must be finite", value: x });
        }
        // fmod is exact; the two subtractions below are exact by Sterbenz.
        let r = libm::fabs(x) % self.two_pi;
        let (r1, second_half) = if r >= self.pi { (r - self.pi, true) } else { (r, false) };
        let (reduced, odd_quarter) = if r1 > self.half_pi {
            (self.pi - r1, true)
        } else {
            (r1, r1 == self.half_pi)
        };
        let k = 2 * second_half as u8 + odd_quarter as u8;
        let on_boundary = r1 == 0.0 || r1 == self.half_pi;
        let quadrant = if x < 0.0 {
            if on_boundary {
                (4 - k) % 4
            } else {
                3 - k
            }
        } else {
            k
        };
        Ok(Reduced {
            r: reduced,
            quadrant,
            sin_negative: second_half != (x < 0.0),
            cos_negative: k == 1 || k == 2,
        })
    }

    /// Sine and cosine together.
    pub fn point(&self, x: f64) -> Result<TrigPoint> {
        let red = self.reduce(x)?;
        let (sin_abs, flux_abs, ln_w) = self.quarter(red.r)?;
        Ok(TrigPoint {
            p: self.pp.p(),
            q: self.pp.q(),
            sin_abs,
            flux_abs,
            ln_w,
            sin_negative: red.sin_negative,
            cos_negative: red.cos_negative,
            quadrant: red.quadrant,
            reduced_x: red.r,
        })
    }

    /// `sin_{p,q}x` for any finite `x`.
    pub fn sin(&self, x: f64) -> Result<FunctionValue> {
        let pt = self.point(x)?;
        Ok(FunctionValue { value: pt.sin(), quadrant: pt.quadrant, reduced_x: pt.reduced_x })
    }

    /// `cos_{p,q}x = (1 − |sin_{p,q}x|^q)^(1/p)`, positive in quadrants 0 and 3.
    pub fn cos(&self, x: f64) -> Result<FunctionValue> {
        let pt = self.point(x)?;
        Ok(FunctionValue { value: pt.cos(), quadrant: pt.quadrant, reduced_x: pt.reduced_x })
    }

    /// Residual of `−(|u′|^(p−2)u′)′ = ((p − 1)q/p)|u|^(q−2)u` at `x` for
    /// `u = sin_{p,q}`, with the outer derivative taken by central difference
    /// of step `h`. Requires `10h < x < π_{p,q}/2 − 10h`.
    pub fn ode_residual(&self, x: f64, h: f64) -> Result<f64> {
        if !(h > 0.0 && h.is_finite()) {
            return Err(Error::Domain { what: "ode step must be positive", value: h });
        }
        let margin = 10.0 * h;
        if !(x > margin && x < self.half_pi - margin) {
            return Err(Error::Domain {
                what: "ode residual needs 10h < x < pi_pq/2 - 10h",
                value: x,
            });
        }
        let (p, q) = (self.pp.p(), self.pp.q());
        let ahead = self.point(x + h)?.flux();
        let behind = self.point(x - h)?.flux();
        let u = self.point(x)?;
        let source = (p - 1.0) * q / p * u.sin_abs_pow(q - 1.0);
        Ok((ahead - behind) / (2.0 * h) + source)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::{FRAC_PI_6, PI};

    fn g(p: f64, q: f64) -> Gtrig {
        Gtrig::with_defaults(ParamPair::new(p, q).unwrap()).unwrap()
    }

    #[test]
    fn param_guard() {
        assert!(ParamPair::new(1.0, 2.0).is_err());
        assert!(ParamPair::new(2.0, 1.0).is_err());
        assert!(ParamPair::new(2.0, 1000.5).is_err());
        assert!(ParamPair::new(f64::NAN, 2.0).is_err());
        assert!(ParamPair::new(1000.0, 1.0001).is_ok());
        let e = ParamPair::new(1.0, 2.0).unwrap_err();
        assert_eq!(alloc::format!("{e}"), "p must exceed 1 (got 1)");
    }

    #[test]
    fn conjugates() {
        let pp = ParamPair::new(3.0, 4.0 / 3.0).unwrap();
        assert!((1.0 / pp.p() + 1.0 / pp.p_star() - 1.0).abs() < 1e-15);
        assert!((pp.q_star() - 4.0).abs() < 1e-14);
        let d = pp.dual().unwrap();
        assert!((d.p() - 4.0).abs() < 1e-14 && (d.q() - 1.5).abs() < 1e-15);
    }

    #[test]
    fn classical_pi() {
        assert!((g(2.0, 2.0).pi() - PI).abs() <= 4.0 * f64::EPSILON);
    }

    #[test]
    fn classical_values() {
        let t = g(2.0, 2.0);
        assert!((t.sin(FRAC_PI_6).unwrap().value - 0.5).abs() < 1e-15);
        assert!((t.arcsin(0.5).unwrap() - FRAC_PI_6).abs() < 1e-15);
        assert_eq!(t.cos(0.0).unwrap().value, 1.0);
        let c = t.cos(t.pi()).unwrap();
        assert_eq!(c.value, -1.0);
        assert_eq!(c.quadrant, 2);
    }

    #[test]
    fn quarter_period_values() {
        let t = g(2.0, 3.0);
        let half = t.pi() / 2.0;
        assert_eq!(t.sin(half).unwrap().value, 1.0);
        let c = t.cos(half).unwrap();
        assert_eq!(c.value.to_bits(), 0.0f64.to_bits(), "cos at the quarter period is +0");
        assert_eq!(c.quadrant, 1);
        assert_eq!(t.arcsin(0.0).unwrap(), 0.0);
        assert!((t.arcsin(1.0).unwrap() - half).abs() < 1e-15);
    }

    #[test]
    fn quadrants_and_signs() {
        let t = g(3.0, 2.0);
        let q = t.pi() / 2.0;
        let cases = [
            (0.5 * q, 0u8, 1.0, 1.0),
            (1.5 * q, 1, 1.0, -1.0),
            (2.5 * q, 2, -1.0, -1.0),
            (3.5 * q, 3, -1.0, 1.0),
            (-0.5 * q, 3, -1.0, 1.0),
            (-1.5 * q, 2, -1.0, -1.0),
        ];
        for (x, quadrant, ssign, csign) in cases {
            let p = t.point(x).unwrap();
            assert_eq!(p.quadrant, quadrant, "x = {x}");
            assert_eq!(p.sin().signum(), ssign, "x = {x}");
            assert_eq!(p.cos().signum(), csign, "x = {x}");
        }
    }

    #[test]
    fn non_finite_argument() {
        let t = g(2.0, 2.0);
        assert!(t.sin(f64::INFINITY).is_err());
        assert!(t.cos(f64::NAN).is_err());
        assert!(t.arcsin(1.5).is_err());
        assert!(t.arcsin(-0.1).is_err());
    }

    #[test]
    fn accurate_complements() {
        let t = g(2.0, 2.0);
        let x = 1e-6;
        let p = t.point(x).unwrap();
        // 1 − cos x = 2 sin²(x/2)
        let exact = 2.0 * libm::sin(x / 2.0) * libm::sin(x / 2.0);
        assert!((p.one_minus_cos() / exact - 1.0).abs() < 1e-12);
        // Measure the distance to the zero of 1 + cos exactly (Sterbenz).
        let near = t.pi() - x;
        let d = t.pi() - near;
        let exact = 2.0 * libm::sin(d / 2.0) * libm::sin(d / 2.0);
        let p = t.point(near).unwrap();
        assert!((p.one_plus_cos() / exact - 1.0).abs() < 1e-12);
    }

    #[test]
    fn ode_residual_guards() {
        let t = g(2.0, 3.0);
        assert!(t.ode_residual(0.0005, 1e-4).is_err());
        assert!(t.ode_residual(t.pi() / 2.0 - 0.0005, 1e-4).is_err());
        assert!(t.ode_residual(0.5, 0.0).is_err());
        assert!(t.ode_residual(0.5, 1e-4).unwrap().abs() < 1e-5);
    }

    #[test]
    fn classical_ode_residual() {
        assert!(g(2.0, 2.0).ode_residual(0.7, 1e-4).unwrap().abs() < 1e-6);
    }

    #[test]
    fn config_validation() {
        let bad = EvalConfig { quad_tol: 0.0, ..EvalConfig::default() };
        assert!(Gtrig::new(ParamPair::new(2.0, 2.0).unwrap(), bad).is_err());
    }
}
