//! Identities between generalized trigonometric functions.
//!
//! Every identity is an evaluable pair of sides over a sampling domain. The
//! vocabulary ([`IdentityId`]) is grouped by the parameter families it links:
//!
//! | `p` | `(p*, 2)`          | `(2, p)`            | `(p*, p)`          |
//! |-----|--------------------|---------------------|--------------------|
//! | 2   | `dbl-2-2`          | `dbl-2-2`           | `dbl-2-2`          |
//! | 3   | none known         | `dbl-2-3`           | `dbl-3:2-3`        |
//! | 4   | `dbl-4:3-2`        | `dbl-2-4`           | `dbl-4:3-4`        |
//!
//! The multiple-angle formulas (`maf-*`, `half-*`) connect `(2, p)` with
//! `(p*, p)`, and the duality (`duality-*`) connects `(p, q)` with
//! `(q*, p*)`. The `proof-*` entries are the intermediate steps that lead from
//! those relations to `dbl-2-3` and `dbl-4:3-2`.
//!
//! Sides are evaluated with the accurate complements of [`TrigPoint`] where an
//! expression such as `1 − sin⁴` or `√(1/f² − 1)` would otherwise cancel; the
//! expressions themselves are unchanged.

mod verify;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::gtfn::{conjugate, EvalConfig, Gtrig, ParamPair, TrigPoint};
use crate::{Error, Result};

pub use verify::{
    report_from, verify, verify_instance, Accumulator, IdentityReport, PointOutcome, SamplePoint,
    VerifyOptions,
};

/// Relative inset applied to open domain ends.
pub const ENDPOINT_INSET: f64 = 1e-12;

macro_rules! identity_ids {
    ($($variant:ident => $name:literal),+ $(,)?) => {
        /// Stable names of the catalog entries.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum IdentityId {
            $($variant),+
        }

        impl IdentityId {
            pub const ALL: &'static [IdentityId] = &[$(IdentityId::$variant),+];

            pub fn as_str(&self) -> &'static str {
                match self {
                    $(IdentityId::$variant => $name),+
                }
            }
        }

        impl FromStr for IdentityId {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($name => Ok(IdentityId::$variant),)+
                    _ => Err(Error::UnknownIdentity),
                }
            }
        }
    };
}

identity_ids! {
    Pythagorean => "pythagorean",
    Dbl22 => "dbl-2-2",
    Dbl24 => "dbl-2-4",
    DblDixon => "dbl-3:2-3",
    DblEgl => "dbl-4:3-4",
    Dbl23 => "dbl-2-3",
    Dbl43_2 => "dbl-4:3-2",
    MafSin => "maf-sin",
    MafCos => "maf-cos",
    HalfSin => "half-sin",
    HalfCos => "half-cos",
    DualityPi => "duality-pi",
    DualitySin => "duality-sin",
    LemniscateAdd => "lemniscate-add",
    ProofXtoY => "proof-xtoy",
    ProofSin2x => "proof-sin2x",
    ProofF2x => "proof-f2x",
    ProofGx => "proof-gx",
    ProofSumDiff => "proof-sum-diff",
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which parameter an identity is instantiated with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamKind {
    None,
    /// A single exponent `p > 1`, linking `(2, p)` and `(p*, p)`.
    Exponent,
    /// A full pair `(p, q)`.
    Pair,
}

impl IdentityId {
    pub fn param_kind(&self) -> ParamKind {
        use IdentityId::*;
        match self {
            MafSin | MafCos | HalfSin | HalfCos => ParamKind::Exponent,
            Pythagorean | DualityPi | DualitySin => ParamKind::Pair,
            _ => ParamKind::None,
        }
    }

    /// Number of arguments: 0, 1 or 2.
    pub fn arity(&self) -> u8 {
        match self {
            IdentityId::DualityPi => 0,
            IdentityId::LemniscateAdd => 2,
            _ => 1,
        }
    }

    /// One-line description of the relation.
    pub fn summary(&self) -> &'static str {
        use IdentityId::*;
        match self {
            Pythagorean => "|cos|^p + |sin|^q = 1",
            Dbl22 => "sin 2x = 2 sin x cos x",
            Dbl24 => "sin_{2,4} 2x = 2sc/(1+s^4)",
            DblDixon => "sin_{3/2,3} 2x = s(1+c^{3/2})/(c^{1/2}(1+s^3)) on [0, pi/4]",
            DblEgl => "sin_{4/3,4} 2x = 2sc^{1/3}/(1+4s^4c^{4/3})^{1/2} on [0, pi/4]",
            Dbl23 => "sin_{2,3} 2x = 4sc(3+c)^3/((1+c)(8+s^3)^2) on [0, pi/2]",
            Dbl43_2 => "sin_{4/3,2} 2x = 4sc^{1/3}(1+c^{4/3})/(2c^{2/3}+s^2)^2 on [0, pi/2]",
            MafSin => "sin_{2,p}(2^{2/p}x) = 2^{2/p} sin_{p*,p}x cos_{p*,p}^{p*-1}x",
            MafCos => "cos_{2,p}(2^{2/p}x) = c^{p*} - s^p = 1 - 2s^p = 2c^{p*} - 1",
            HalfSin => "sin_{p*,p}x = ((1 - cos_{2,p}(2^{2/p}x))/2)^{1/p}",
            HalfCos => "cos_{p*,p}x = ((1 + cos_{2,p}(2^{2/p}x))/2)^{1/p*}",
            DualityPi => "q pi_{p,q} = p* pi_{q*,p*}",
            DualitySin => "sin_{p,q}(pi_{p,q}x/2) = cos_{q*,p*}^{q*-1}(pi_{q*,p*}(1-x)/2)",
            LemniscateAdd => "sin_{2,4}(u+v) = (s(u)c(v) + c(u)s(v))/(1 + s(u)^2 s(v)^2)",
            ProofXtoY => "sin_{2,3}(2^{2/3} 2y) = 2^{2/3} sin_{3/2,3}(2y) cos_{3/2,3}^{1/2}(2y)",
            ProofSin2x => "sin_{4/3,2} 2x = sqrt(1 - sin_{2,4}^4(pi_{2,4}/2 - x))",
            ProofF2x => "f(2x) = 2g(x)/(1 + g(x)^2), f = sin_{4/3,2}, g = sin_{2,4}",
            ProofGx => "g(x) = 2g(x/2)sqrt(1 - g(x/2)^4)/(1 + g(x/2)^4)",
            ProofSumDiff => "1/g^2 + g^2 = 4/f(2x)^2 - 2 and 1/g^2 - g^2 = (4/f(2x))sqrt(1/f(2x)^2 - 1)",
        }
    }
}

/// The parameter an [`Instance`] is bound to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Param {
    None,
    Exponent(f64),
    Pair(ParamPair),
}

impl Param {
    pub fn label(&self) -> Option<String> {
        match self {
            Param::None => None,
            Param::Exponent(p) => Some(format!("p={p}")),
            Param::Pair(pp) => Some(format!("(p,q)=({},{})", pp.p(), pp.q())),
        }
    }
}

/// Parameter values over which parameterized identities are swept.
#[derive(Debug, Clone, PartialEq)]
pub struct Panel {
    pub exponents: Vec<f64>,
    pub pairs: Vec<ParamPair>,
}

impl Default for Panel {
    fn default() -> Self {
        let pair = |p, q| ParamPair::new(p, q).expect("panel pair is valid");
        Panel {
            exponents: alloc::vec![1.5, 2.0, 3.0, 4.0, 7.5],
            pairs: alloc::vec![
                pair(2.0, 3.0),
                pair(3.0, 2.0),
                pair(4.0 / 3.0, 2.0),
                pair(2.0, 4.0),
                pair(1.5, 3.0),
                pair(4.0 / 3.0, 4.0),
                pair(5.0, 5.0),
            ],
        }
    }
}

impl Panel {
    pub fn params_for(&self, id: IdentityId) -> Vec<Param> {
        match id.param_kind() {
            ParamKind::None => alloc::vec![Param::None],
            ParamKind::Exponent => self.exponents.iter().map(|&p| Param::Exponent(p)).collect(),
            ParamKind::Pair => self.pairs.iter().map(|&pp| Param::Pair(pp)).collect(),
        }
    }
}

/// Where an identity is sampled.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Domain {
    /// No argument.
    Point,
    /// An interval; open ends are sampled at an inset of
    /// [`ENDPOINT_INSET`]·width.
    Interval { lo: f64, hi: f64, open_lo: bool, open_hi: bool },
    /// Pairs `(u, v)` with `u, v ≥ 0` and `u + v ≤ side`.
    Triangle { side: f64 },
}

impl Domain {
    fn closed(lo: f64, hi: f64) -> Self {
        Domain::Interval { lo, hi, open_lo: false, open_hi: false }
    }

    pub fn contains(&self, x: f64, y: Option<f64>) -> bool {
        match *self {
            Domain::Point => true,
            Domain::Interval { lo, hi, open_lo, open_hi } => {
                let above = if open_lo { x > lo } else { x >= lo };
                let below = if open_hi { x < hi } else { x <= hi };
                above && below
            }
            Domain::Triangle { side } => match y {
                Some(y) => x >= 0.0 && y >= 0.0 && x + y <= side,
                None => false,
            },
        }
    }
}

/// Up to six (lhs, rhs) comparisons from one evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sides {
    pairs: [(f64, f64); 6],
    len: usize,
}

impl Sides {
    pub fn one(lhs: f64, rhs: f64) -> Self {
        let mut s = Sides { pairs: [(0.0, 0.0); 6], len: 0 };
        s.push(lhs, rhs);
        s
    }

    fn push(&mut self, lhs: f64, rhs: f64) {
        self.pairs[self.len] = (lhs, rhs);
        self.len += 1;
    }

    pub fn as_slice(&self) -> &[(f64, f64)] {
        &self.pairs[..self.len]
    }

    /// The first comparison, which for single-equation identities is the
    /// only one.
    pub fn first(&self) -> (f64, f64) {
        self.pairs[0]
    }
}

/// An identity bound to its parameter and to the function evaluators it
/// needs.
#[derive(Debug, Clone)]
pub struct Instance {
    id: IdentityId,
    param: Param,
    primary: Gtrig,
    secondary: Option<Gtrig>,
    domain: Domain,
}

fn pair(p: f64, q: f64) -> Result<ParamPair> {
    ParamPair::new(p, q)
}

impl Instance {
    pub fn new(id: IdentityId, param: Param, cfg: EvalConfig) -> Result<Self> {
        use IdentityId::*;
        let mk = |pp: ParamPair| Gtrig::new(pp, cfg);
        let fixed = |p: f64, q: f64| -> Result<(Gtrig, Option<Gtrig>)> { Ok((mk(pair(p, q)?)?, None)) };
        let (primary, secondary) = match (id.param_kind(), param) {
            (ParamKind::None, Param::None) => match id {
                Dbl22 => fixed(2.0, 2.0)?,
                Dbl24 | LemniscateAdd | ProofGx => fixed(2.0, 4.0)?,
                DblDixon => fixed(1.5, 3.0)?,
                DblEgl => fixed(4.0 / 3.0, 4.0)?,
                Dbl23 => fixed(2.0, 3.0)?,
                Dbl43_2 => fixed(4.0 / 3.0, 2.0)?,
                ProofXtoY => (mk(pair(1.5, 3.0)?)?, Some(mk(pair(2.0, 3.0)?)?)),
                ProofSin2x | ProofF2x | ProofSumDiff => {
                    (mk(pair(4.0 / 3.0, 2.0)?)?, Some(mk(pair(2.0, 4.0)?)?))
                }
                _ => unreachable!("parameterless ids are listed above"),
            },
            (ParamKind::Exponent, Param::Exponent(p)) => {
                // (p*, p) and (2, p)
                let star = pair(conjugate(p), p)?;
                (mk(star)?, Some(mk(pair(2.0, p)?)?))
            }
            (ParamKind::Pair, Param::Pair(pp)) => match id {
                Pythagorean => (mk(pp)?, None),
                _ => (mk(pp)?, Some(mk(pp.dual()?)?)),
            },
            _ => return Err(Error::WrongParameter { id }),
        };

        let half_primary = 0.5 * primary.pi();
        let domain = match id {
            Pythagorean => Domain::closed(-3.0 * primary.pi(), 3.0 * primary.pi()),
            Dbl22 => Domain::closed(-10.0, 10.0),
            Dbl24 => Domain::closed(-2.0 * primary.pi(), 2.0 * primary.pi()),
            DblDixon | DblEgl => Domain::closed(0.0, 0.25 * primary.pi()),
            Dbl23 | Dbl43_2 => Domain::closed(0.0, half_primary),
            MafSin | MafCos | HalfSin | HalfCos => Domain::closed(0.0, half_primary),
            DualityPi => Domain::Point,
            DualitySin => Domain::closed(0.0, 2.0),
            LemniscateAdd => Domain::Triangle { side: half_primary },
            // 2y ∈ [0, π_{3/2,3}/2]
            ProofXtoY => Domain::closed(0.0, 0.25 * primary.pi()),
            ProofSin2x => Domain::closed(0.0, lemniscate_pi(&secondary)),
            ProofF2x => Domain::Interval {
                lo: 0.0,
                hi: lemniscate_pi(&secondary),
                open_lo: true,
                open_hi: true,
            },
            ProofGx => Domain::closed(0.0, half_primary),
            ProofSumDiff => Domain::Interval {
                lo: 0.0,
                hi: 0.5 * lemniscate_pi(&secondary),
                open_lo: true,
                open_hi: false,
            },
        };
        Ok(Instance { id, param, primary, secondary, domain })
    }

    /// One instance per panel parameter (a single one for fixed identities).
    pub fn for_panel(id: IdentityId, panel: &Panel, cfg: EvalConfig) -> Result<Vec<Instance>> {
        panel.params_for(id).into_iter().map(|param| Instance::new(id, param, cfg)).collect()
    }

    pub fn id(&self) -> IdentityId {
        self.id
    }

    pub fn param(&self) -> Param {
        self.param
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    fn secondary(&self) -> &Gtrig {
        self.secondary.as_ref().expect("identity was built with a second evaluator")
    }

    /// Evaluates both sides at `x` (and `y` for two-argument identities).
    pub fn eval(&self, x: f64, y: Option<f64>) -> Result<Sides> {
        use IdentityId::*;
        if !self.domain.contains(x, y) {
            return Err(Error::Domain { what: "argument outside the identity's domain", value: x });
        }
        let a = &self.primary;
        match self.id {
            Pythagorean => {
                let pt = a.point(x)?;
                let (p, q) = pt.params();
                let lhs = libm::pow(libm::fabs(pt.cos()), p) + libm::pow(libm::fabs(pt.sin()), q);
                Ok(Sides::one(lhs, 1.0))
            }
            Dbl22 => {
                let pt = a.point(x)?;
                Ok(Sides::one(a.sin(2.0 * x)?.value, 2.0 * pt.sin() * pt.cos()))
            }
            Dbl24 => {
                let pt = a.point(x)?;
                let s = pt.sin();
                let rhs = 2.0 * s * pt.cos() / (1.0 + s * s * s * s);
                Ok(Sides::one(a.sin(2.0 * x)?.value, rhs))
            }
            DblDixon => {
                let pt = a.point(x)?;
                let s = pt.sin();
                let rhs = s * (1.0 + pt.cos_abs_pow(1.5)) / (pt.cos_abs_pow(0.5) * (1.0 + s * s * s));
                Ok(Sides::one(a.sin(2.0 * x)?.value, rhs))
            }
            DblEgl => {
                let pt = a.point(x)?;
                let s = pt.sin();
                let s4 = s * s * s * s;
                let rhs = 2.0 * s * pt.cos_abs_pow(1.0 / 3.0)
                    / libm::sqrt(1.0 + 4.0 * s4 * pt.cos_abs_pow(4.0 / 3.0));
                Ok(Sides::one(a.sin(2.0 * x)?.value, rhs))
            }
            Dbl23 => {
                let (l, r) = dbl_angle_2_3(a, x)?;
                Ok(Sides::one(l, r))
            }
            Dbl43_2 => {
                let (l, r) = dbl_angle_43_2(a, x)?;
                Ok(Sides::one(l, r))
            }
            MafSin => {
                let (star, two) = (a, self.secondary());
                let p = two.params().q();
                let scale = libm::exp2(2.0 / p);
                let pt = star.point(x)?;
                let rhs = scale * pt.sin() * pt.cos_abs_pow(conjugate(p) - 1.0);
                Ok(Sides::one(two.sin(scale * x)?.value, rhs))
            }
            MafCos => {
                let (star, two) = (a, self.secondary());
                let p = two.params().q();
                let lhs = two.cos(libm::exp2(2.0 / p) * x)?.value;
                let pt = star.point(x)?;
                let sp = pt.sin_abs_pow(p);
                let cps = pt.cos_abs_pow(conjugate(p));
                let (e1, e2, e3) = (cps - sp, 1.0 - 2.0 * sp, 2.0 * cps - 1.0);
                let mut sides = Sides::one(lhs, e1);
                sides.push(lhs, e2);
                sides.push(lhs, e3);
                sides.push(e1, e2);
                sides.push(e2, e3);
                sides.push(e1, e3);
                Ok(sides)
            }
            HalfSin => {
                let (star, two) = (a, self.secondary());
                let p = two.params().q();
                let big = two.point(libm::exp2(2.0 / p) * x)?;
                let rhs = libm::pow(0.5 * big.one_minus_cos(), 1.0 / p);
                Ok(Sides::one(star.sin(x)?.value, rhs))
            }
            HalfCos => {
                let (star, two) = (a, self.secondary());
                let p = two.params().q();
                let big = two.point(libm::exp2(2.0 / p) * x)?;
                let rhs = libm::pow(0.5 * big.one_plus_cos(), 1.0 / conjugate(p));
                Ok(Sides::one(star.cos(x)?.value, rhs))
            }
            DualityPi => {
                let pp = a.params();
                Ok(Sides::one(pp.q() * a.pi(), pp.p_star() * self.secondary().pi()))
            }
            DualitySin => {
                let dual = self.secondary();
                let lhs = a.sin(0.5 * a.pi() * x)?.value;
                let pt = dual.point(0.5 * dual.pi() * (1.0 - x))?;
                let rhs = pt.cos_abs_pow(dual.params().p() - 1.0);
                Ok(Sides::one(lhs, rhs))
            }
            LemniscateAdd => {
                let v = y.expect("domain check requires y");
                let (pu, pv) = (a.point(x)?, a.point(v)?);
                let (su, sv) = (pu.sin(), pv.sin());
                let rhs = (su * pv.cos() + pu.cos() * sv) / (1.0 + su * su * sv * sv);
                Ok(Sides::one(a.sin(x + v)?.value, rhs))
            }
            ProofXtoY => {
                let two = self.secondary();
                let scale = libm::exp2(2.0 / 3.0);
                let pt = a.point(2.0 * x)?;
                let rhs = scale * pt.sin() * pt.cos_abs_pow(0.5);
                Ok(Sides::one(two.sin(scale * 2.0 * x)?.value, rhs))
            }
            ProofSin2x => {
                let g = self.secondary();
                let pt = g.point(0.5 * g.pi() - x)?;
                // 1 − sin⁴_{2,4}
                let rhs = libm::sqrt(pt.one_minus_sin_pow_q());
                Ok(Sides::one(a.sin(2.0 * x)?.value, rhs))
            }
            ProofF2x => {
                let g = self.secondary().sin(x)?.value;
                Ok(Sides::one(a.sin(2.0 * x)?.value, 2.0 * g / (1.0 + g * g)))
            }
            ProofGx => {
                let half = a.point(0.5 * x)?;
                let h = half.sin();
                let h4 = h * h * h * h;
                let rhs = 2.0 * h * libm::sqrt(half.one_minus_sin_pow_q()) / (1.0 + h4);
                Ok(Sides::one(a.sin(x)?.value, rhs))
            }
            ProofSumDiff => {
                // Both equations multiplied through by g², which is nonzero
                // on the domain; the sides then stay bounded as x → 0.
                let f_pt = a.point(2.0 * x)?;
                let g_pt = self.secondary().point(x)?;
                let (f, g) = (f_pt.sin(), g_pt.sin());
                let g2 = g * g;
                let mut sides = Sides::one(1.0 + g2 * g2, g2 * (4.0 / (f * f) - 2.0));
                // √(1/f² − 1) = √(1 − f²)/f
                let root = libm::sqrt(f_pt.one_minus_sin_pow_q()) / f;
                sides.push(g_pt.one_minus_sin_pow_q(), g2 * (4.0 / f) * root);
                Ok(sides)
            }
        }
    }
}

fn lemniscate_pi(g: &Option<Gtrig>) -> f64 {
    g.as_ref().map(|g| g.pi()).unwrap_or(f64::NAN)
}

fn expect_pair(g: &Gtrig, p: f64, q: f64) -> Result<()> {
    let pp = g.params();
    if pp.p() == p && pp.q() == q {
        Ok(())
    } else {
        Err(Error::Domain { what: "evaluator has the wrong parameter pair", value: pp.p() })
    }
}

fn check_interval(x: f64, hi: f64) -> Result<()> {
    if (0.0..=hi).contains(&x) {
        Ok(())
    } else {
        Err(Error::Domain { what: "double-angle argument outside [0, pi_pq/2]", value: x })
    }
}

/// Both sides of the `(p, q) = (2, 3)` double-angle formula
/// `sin 2x = 4sc(3 + c)³ / ((1 + c)(8 + s³)²)` on `[0, π_{2,3}/2]`.
pub fn dbl_angle_2_3(g: &Gtrig, x: f64) -> Result<(f64, f64)> {
    expect_pair(g, 2.0, 3.0)?;
    check_interval(x, 0.5 * g.pi())?;
    let pt: TrigPoint = g.point(x)?;
    let (s, c) = (pt.sin(), pt.cos());
    let t = 3.0 + c;
    let d = 8.0 + s * s * s;
    let rhs = 4.0 * s * c * t * t * t / ((1.0 + c) * d * d);
    Ok((g.sin(2.0 * x)?.value, rhs))
}

/// Both sides of the `(p, q) = (4/3, 2)` double-angle formula
/// `sin 2x = 4s c^{1/3} (1 + c^{4/3}) / (2c^{2/3} + s²)²` on
/// `[0, π_{4/3,2}/2]`.
pub fn dbl_angle_43_2(g: &Gtrig, x: f64) -> Result<(f64, f64)> {
    expect_pair(g, 4.0 / 3.0, 2.0)?;
    check_interval(x, 0.5 * g.pi())?;
    let pt = g.point(x)?;
    let s = pt.sin();
    let d = 2.0 * pt.cos_abs_pow(2.0 / 3.0) + s * s;
    let rhs = 4.0 * s * pt.cos_abs_pow(1.0 / 3.0) * (1.0 + pt.cos_abs_pow(4.0 / 3.0)) / (d * d);
    Ok((g.sin(2.0 * x)?.value, rhs))
}

/// Evaluates any catalog identity once. Builds the evaluators on every call;
/// hold an [`Instance`] to evaluate repeatedly.
pub fn eval_identity(id: IdentityId, param: Param, x: f64, y: Option<f64>, cfg: EvalConfig) -> Result<Sides> {
    Instance::new(id, param, cfg)?.eval(x, y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(id: IdentityId, param: Param) -> Instance {
        Instance::new(id, param, EvalConfig::default()).unwrap()
    }

    #[test]
    fn vocabulary_round_trips() {
        assert_eq!(IdentityId::ALL.len(), 19);
        for id in IdentityId::ALL {
            assert_eq!(id.as_str().parse::<IdentityId>().unwrap(), *id);
        }
        assert_eq!("no-such-id".parse::<IdentityId>(), Err(Error::UnknownIdentity));
    }

    #[test]
    fn wrong_parameter_kind() {
        let e = Instance::new(IdentityId::MafSin, Param::None, EvalConfig::default()).unwrap_err();
        assert_eq!(e, Error::WrongParameter { id: IdentityId::MafSin });
        let pp = ParamPair::new(2.0, 3.0).unwrap();
        assert!(Instance::new(IdentityId::Dbl23, Param::Pair(pp), EvalConfig::default()).is_err());
    }

    #[test]
    fn dbl_2_3_endpoints() {
        let i = inst(IdentityId::Dbl23, Param::None);
        let Domain::Interval { hi, .. } = i.domain() else { panic!() };
        assert_eq!(i.eval(0.0, None).unwrap().first(), (0.0, 0.0));
        let (l, r) = i.eval(hi, None).unwrap().first();
        assert!(l.abs() < 1e-15 && r.abs() < 1e-15, "{l} {r}");
        let (l, r) = i.eval(hi / 2.0, None).unwrap().first();
        assert_eq!(l, 1.0);
        assert!((r - 1.0).abs() < 1e-10);
        assert!(i.eval(hi * 1.001, None).is_err());
        assert!(i.eval(-1e-3, None).is_err());
    }

    #[test]
    fn dbl_43_2_endpoints() {
        let i = inst(IdentityId::Dbl43_2, Param::None);
        let Domain::Interval { hi, .. } = i.domain() else { panic!() };
        assert_eq!(i.eval(0.0, None).unwrap().first(), (0.0, 0.0));
        let (l, r) = i.eval(hi, None).unwrap().first();
        assert!(l.abs() < 1e-15 && r.abs() < 1e-15, "{l} {r}");
        let (l, r) = i.eval(hi / 2.0, None).unwrap().first();
        assert_eq!(l, 1.0);
        assert!((r - 1.0).abs() < 1e-10);
    }

    #[test]
    fn dedicated_operations_check_their_pair() {
        let g = Gtrig::with_defaults(ParamPair::new(2.0, 2.0).unwrap()).unwrap();
        assert!(dbl_angle_2_3(&g, 0.1).is_err());
        assert!(dbl_angle_43_2(&g, 0.1).is_err());
    }

    #[test]
    fn catalog_examples() {
        let pp = ParamPair::new(5.0, 3.0).unwrap();
        let (l, r) = inst(IdentityId::Pythagorean, Param::Pair(pp)).eval(2.7, None).unwrap().first();
        assert!((l - r).abs() < 1e-10);

        let pp = ParamPair::new(2.0, 4.0).unwrap();
        let (l, r) = inst(IdentityId::DualityPi, Param::Pair(pp)).eval(0.0, None).unwrap().first();
        assert!((l - r).abs() < 1e-10, "{l} {r}");

        assert_eq!(inst(IdentityId::MafSin, Param::Exponent(3.0)).eval(0.0, None).unwrap().first(), (0.0, 0.0));

        let add = inst(IdentityId::LemniscateAdd, Param::None);
        let Domain::Triangle { side } = add.domain() else { panic!() };
        let (l, r) = add.eval(side / 2.0, Some(side / 2.0)).unwrap().first();
        assert!((l - 1.0).abs() < 1e-15 && (r - 1.0).abs() < 1e-12, "{l} {r}");
        assert!(add.eval(side, Some(side)).is_err());
        assert!(add.eval(0.1, None).is_err());
    }

    #[test]
    fn maf_cos_reports_six_comparisons() {
        let s = inst(IdentityId::MafCos, Param::Exponent(3.0)).eval(0.4, None).unwrap();
        assert_eq!(s.as_slice().len(), 6);
        for (l, r) in s.as_slice() {
            assert!((l - r).abs() < 1e-12);
        }
    }

    #[test]
    fn open_ends_are_rejected() {
        let f2x = inst(IdentityId::ProofF2x, Param::None);
        assert!(f2x.eval(0.0, None).is_err());
        assert!(f2x.eval(1e-3, None).is_ok());
    }

    #[test]
    fn panel_expansion() {
        let panel = Panel::default();
        assert_eq!(panel.params_for(IdentityId::MafSin).len(), 5);
        assert_eq!(panel.params_for(IdentityId::DualityPi).len(), 7);
        assert_eq!(panel.params_for(IdentityId::Dbl23), alloc::vec![Param::None]);
    }
}
