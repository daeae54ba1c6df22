//! Difference-quotient oracles.
//!
//! The oracle implements the slope definition of the derivative directly:
//! a central difference for smooth points, one-sided forward/backward
//! differences for corner checks. It refuses to answer when any evaluation
//! lands on a pole or when the stencil straddles a branch breakpoint, since
//! the quotient is then not an estimate of any one-branch slope.

use std::fmt;

use crate::angle::Angle;
use crate::functions::TrigFunction;

/// Reasons the difference-quotient oracle does not apply at a point.
#[derive(Clone, Debug, PartialEq)]
pub enum OracleError {
    /// An evaluation in the stencil hit a pole.
    PoleInStencil { function: TrigFunction, theta: f64 },
    /// The stencil crosses a branch breakpoint.
    StraddlesBreakpoint { theta: f64, h: f64 },
    /// A stencil point was not a finite float.
    NonFinite { theta: f64 },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::PoleInStencil { function, theta } => {
                write!(f, "{function} has a pole in the difference stencil at theta = {theta}")
            }
            OracleError::StraddlesBreakpoint { theta, h } => {
                write!(f, "stencil [{} , {}] straddles a breakpoint", theta - h, theta + h)
            }
            OracleError::NonFinite { theta } => write!(f, "stencil point {theta} is not finite"),
        }
    }
}

impl std::error::Error for OracleError {}

fn eval_f64(f: TrigFunction, theta: f64) -> Result<f64, OracleError> {
    let a = Angle::from_f64(theta).map_err(|_| OracleError::NonFinite { theta })?;
    match f.eval(&a).into_finite() {
        Some(v) => Ok(v.to_f64()),
        None => Err(OracleError::PoleInStencil { function: f, theta }),
    }
}

/// True when some even integer lies strictly inside `(lo, hi)`.
fn crosses_breakpoint(lo: f64, hi: f64) -> bool {
    let first_above = 2.0 * (lo / 2.0).floor() + 2.0;
    first_above < hi
}

/// Central difference `(f(theta+h) - f(theta-h)) / 2h`.
///
/// Requires `f` finite at `theta-h`, `theta`, `theta+h` and the whole
/// stencil within a single smooth region.
pub fn finite_difference(f: TrigFunction, theta: f64, h: f64) -> Result<f64, OracleError> {
    eval_f64(f, theta)?;
    if crosses_breakpoint(theta - h, theta + h) {
        return Err(OracleError::StraddlesBreakpoint { theta, h });
    }
    let hi = eval_f64(f, theta + h)?;
    let lo = eval_f64(f, theta - h)?;
    Ok((hi - lo) / (2.0 * h))
}

/// Forward difference `(f(theta+h) - f(theta)) / h`: converges to the
/// right-hand derivative at a corner.
pub fn forward_difference(f: TrigFunction, theta: f64, h: f64) -> Result<f64, OracleError> {
    if crosses_breakpoint(theta, theta + h) {
        return Err(OracleError::StraddlesBreakpoint { theta, h });
    }
    Ok((eval_f64(f, theta + h)? - eval_f64(f, theta)?) / h)
}

/// Backward difference `(f(theta) - f(theta-h)) / h`: converges to the
/// left-hand derivative at a corner.
pub fn backward_difference(f: TrigFunction, theta: f64, h: f64) -> Result<f64, OracleError> {
    if crosses_breakpoint(theta - h, theta) {
        return Err(OracleError::StraddlesBreakpoint { theta, h });
    }
    Ok((eval_f64(f, theta)? - eval_f64(f, theta - h)?) / h)
}

/// `count` deterministic float thetas in `[start, end)`, each at least
/// `min_distance` away from every breakpoint. Generated by the golden-ratio
/// low-discrepancy sequence, so the points are spread over the range and
/// identical on every run.
pub fn float_sample_points(start: f64, end: f64, count: usize, min_distance: f64) -> Vec<f64> {
    const GOLDEN_CONJUGATE: f64 = 0.618_033_988_749_894_9;
    let span = end - start;
    let mut out = Vec::with_capacity(count);
    let mut j = 1u64;
    while out.len() < count {
        let theta = start + (j as f64 * GOLDEN_CONJUGATE).fract() * span;
        let nearest = 2.0 * (theta / 2.0).round();
        if (theta - nearest).abs() >= min_distance {
            out.push(theta);
        }
        j += 1;
        assert!(
            j < 100 * (count as u64 + 100),
            "exclusion radius rejects too much of the range"
        );
    }
    out
}
