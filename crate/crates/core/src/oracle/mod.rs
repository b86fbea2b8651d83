//! Analytic cross-check of the combinatorial counts on random curves.
//!
//! A random integer polynomial supported on `P` is intersected with its
//! Hessian curve (inflections) or with `∂f/∂y` (vertical tangents). The
//! intersection points in the torus are counted by eliminating `y` exactly and
//! then locating and validating roots numerically. The dual curve is recovered
//! numerically from sampled tangent lines.

mod count;
mod dual;
pub mod modular;
mod poly;
mod resultant;
pub mod roots;
mod zpoly;

use thiserror::Error;

pub use count::{count_torus_solutions, inflection_oracle, sample_poly, vertical_tangent_oracle};
pub use dual::{implicitize_dual, implicitize_dual_of, sample_dual_points, DualEquation, DualSample, MAX_SUPPORT};
pub use poly::{hessian_curve, SparsePoly};
pub use resultant::{resultant_y, resultant_y_modular, squarefree_part};
pub use zpoly::ZPoly;

use crate::lattice::GeometryError;
use crate::plucker::PluckerError;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OracleConfig {
    pub seed: u64,
    /// Coefficients are drawn from `[-coeff_bound, coeff_bound] \ {0}`.
    pub coeff_bound: u64,
    /// Relative tolerance for matching a polished solution to its resultant root.
    pub root_tol: f64,
    /// Accepted solutions satisfy `torus_tol ≤ |x|, |y| ≤ 1/torus_tol`.
    pub torus_tol: f64,
    pub retries: u32,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { seed: 0, coeff_bound: 1000, root_tol: 1e-6, torus_tol: 1e-8, retries: 5 }
    }
}

impl OracleConfig {
    pub fn with_seed(seed: u64) -> Self {
        OracleConfig { seed, ..OracleConfig::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Error)]
pub enum OracleError {
    #[error("degenerate sample: resultant vanishes identically")]
    ZeroResultant,
    #[error("degenerate sample: {0}")]
    Degenerate(String),
    #[error("retries exhausted after {attempts} attempts; last failure: {last}")]
    RetriesExhausted { attempts: u32, last: Box<OracleError> },
    #[error("insufficient valid samples: found {found} of {wanted}")]
    InsufficientSamples { found: usize, wanted: usize },
    #[error("kernel dimension {0} != 1")]
    KernelDimension(usize),
    #[error("observed dual support {observed} differs from predicted {predicted}")]
    SupportMismatch { observed: String, predicted: String },
    #[error("predicted dual support has {0} lattice points; at most {max} are supported", max = dual::MAX_SUPPORT)]
    SupportTooLarge(usize),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Formula(#[from] PluckerError),
}

impl OracleError {
    pub(crate) fn degenerate(msg: impl Into<String>) -> Self {
        OracleError::Degenerate(msg.into())
    }

    /// Failures that a fresh random sample may cure.
    pub fn is_sample_failure(&self) -> bool {
        matches!(
            self,
            OracleError::ZeroResultant
                | OracleError::Degenerate(_)
                | OracleError::InsufficientSamples { .. }
                | OracleError::KernelDimension(_)
                | OracleError::SupportMismatch { .. }
        )
    }
}
