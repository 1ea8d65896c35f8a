//! Error types shared across the crate.

use alloc::string::String;
use core::fmt;

/// Errors raised while evaluating metrics, assembling invariants, or
/// fitting expansions.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Metric failed the positive-definiteness check at a point.
    NonPositiveDefinite { point: [f64; 4], min_eig: f64 },
    /// A primitive left its domain during expression evaluation
    /// (log of a non-positive value, sqrt of a negative, ...).
    ExpressionDomain {
        op: &'static str,
        value: f64,
        point: [f64; 4],
    },
    /// Induced boundary metric h(x, 0) is singular.
    DegenerateBoundaryMetric { point: [f64; 4], min_eig: f64 },
    /// Quadrature integrand could not be evaluated at a node.
    NodeEvaluation { node: [f64; 4], detail: String },
    /// An inward trajectory left the chart domain before reaching the
    /// requested collar depth.
    OdeDivergence { start: [f64; 4], depth: f64 },
    /// Least-squares system for an expansion fit was numerically singular.
    FitIllConditioned { detail: String },
    /// Root bracketing for a defining-function level set failed.
    RootBracketing { detail: String },
    /// A model is missing data required by the requested operation.
    UnsupportedModel { detail: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonPositiveDefinite { point, min_eig } => write!(
                f,
                "metric not positive definite at {:?} (min eigenvalue {:e})",
                point, min_eig
            ),
            Error::ExpressionDomain { op, value, point } => write!(
                f,
                "domain error: {}({:e}) at coordinate {:?}",
                op, value, point
            ),
            Error::DegenerateBoundaryMetric { point, min_eig } => write!(
                f,
                "boundary metric singular at {:?} (min eigenvalue {:e})",
                point, min_eig
            ),
            Error::NodeEvaluation { node, detail } => {
                write!(f, "integrand failed at node {:?}: {}", node, detail)
            }
            Error::OdeDivergence { start, depth } => write!(
                f,
                "trajectory from {:?} left the domain before depth {}",
                start, depth
            ),
            Error::FitIllConditioned { detail } => {
                write!(f, "ill-conditioned fit: {}", detail)
            }
            Error::RootBracketing { detail } => {
                write!(f, "root bracketing failed: {}", detail)
            }
            Error::UnsupportedModel { detail } => {
                write!(f, "unsupported model: {}", detail)
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
