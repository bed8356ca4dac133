use core::fmt;

use crate::identities::IdentityId;

/// Errors produced by the numerical kernel, the function evaluators and the
/// identity catalog.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An exponent outside `(1, 1000]` or a non-finite one.
    InvalidParameter { name: &'static str, value: f64 },
    /// An argument outside the domain of the requested operation.
    Domain { what: &'static str, value: f64 },
    /// The error estimate never fell below the tolerance within the cap.
    NonConvergence { what: &'static str, estimate: f64, evaluations: usize },
    /// The integrand returned NaN or ±∞ at an interior node.
    NonFiniteIntegrand { at: f64 },
    /// `target` is not enclosed by `[f(lo), f(hi)]`.
    Bracket { target: f64, f_lo: f64, f_hi: f64 },
    /// An identity name that is not part of the catalog vocabulary.
    UnknownIdentity,
    /// The identity needs a parameter of a different kind.
    WrongParameter { id: IdentityId },
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter { name, value } => {
                if value.is_finite() && *value <= 1.0 {
                    write!(f, "{name} must exceed 1 (got {value})")
                } else {
                    write!(f, "{name} must be finite and at most 1000 (got {value})")
                }
            }
            Error::Domain { what, value } => write!(f, "{what} (got {value})"),
            Error::NonConvergence { what, estimate, evaluations } => write!(
                f,
                "{what} did not converge (error estimate {estimate:e} after {evaluations} evaluations)"
            ),
            Error::NonFiniteIntegrand { at } => write!(f, "integrand is not finite at {at}"),
            Error::Bracket { target, f_lo, f_hi } => {
                write!(f, "target {target} outside bracket values [{f_lo}, {f_hi}]")
            }
            Error::UnknownIdentity => f.write_str("unknown identity"),
            Error::WrongParameter { id } => {
                write!(f, "identity `{}` takes a different parameter kind", id.as_str())
            }
        }
    }
}

impl core::error::Error for Error {}
