//! The verification harness as a library: deterministic grids, the
//! finite-difference oracle, and the equivalence/derivative/identity
//! sweeps. The automated test suite and the CLI `verify` command both run
//! through here.
//!
//! Rational-grid sweeps use zero tolerance: every comparison is exact
//! arithmetic equality. Only the float-mode oracle comparisons carry the
//! tolerances in [`Tolerances`].

mod oracle;
mod sweeps;

use std::fmt;

use crate::functions::TrigFunction;
use crate::scalar::{Backend, Scalar};

pub use oracle::{
    backward_difference, finite_difference, float_sample_points, forward_difference, OracleError,
};
pub use sweeps::{run_derivative_sweep, run_equivalence_sweep, run_identity_suite};

/// A deterministic rational evaluation grid.
#[derive(Clone, Debug)]
pub struct GridSpec {
    start: Scalar,
    end: Scalar,
    step: Scalar,
    exclusion_radius: f64,
}

/// Errors constructing a grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GridError {
    /// Sweep grids must use the exact backend.
    NotExact,
    /// `step` must be positive.
    NonPositiveStep,
    /// `start` must be below `end`.
    EmptyRange,
}

impl fmt::Display for GridError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GridError::NotExact => write!(f, "sweep grids require exact (rational) endpoints and step"),
            GridError::NonPositiveStep => write!(f, "grid step must be positive"),
            GridError::EmptyRange => write!(f, "grid start must be below its end"),
        }
    }
}

impl std::error::Error for GridError {}

impl GridSpec {
    /// A grid over `[start, end)` with the given step.
    pub fn new(start: Scalar, end: Scalar, step: Scalar) -> Result<GridSpec, GridError> {
        if start.backend() != Backend::Exact
            || end.backend() != Backend::Exact
            || step.backend() != Backend::Exact
        {
            return Err(GridError::NotExact);
        }
        if step.is_zero() || step.is_negative() {
            return Err(GridError::NonPositiveStep);
        }
        if start >= end {
            return Err(GridError::EmptyRange);
        }
        Ok(GridSpec {
            start,
            end,
            step,
            exclusion_radius: 1e-3,
        })
    }

    /// The default sweep grid: `[-16, 16)` in steps of `1/128`.
    pub fn default_range() -> GridSpec {
        GridSpec::new(
            Backend::Exact.int(-16),
            Backend::Exact.int(16),
            Backend::Exact.ratio(1, 128),
        )
        .expect("default grid is valid")
    }

    /// Radius around breakpoints excluded from float-oracle comparisons
    /// (exact checks still run there; corners get dedicated one-sided
    /// checks).
    pub fn with_exclusion_radius(mut self, radius: f64) -> GridSpec {
        self.exclusion_radius = radius;
        self
    }

    pub fn start(&self) -> &Scalar {
        &self.start
    }

    pub fn end(&self) -> &Scalar {
        &self.end
    }

    pub fn step(&self) -> &Scalar {
        &self.step
    }

    pub fn exclusion_radius(&self) -> f64 {
        self.exclusion_radius
    }

    /// All grid thetas, in order.
    pub fn points(&self) -> Vec<Scalar> {
        let mut out = Vec::new();
        let mut theta = self.start.clone();
        while theta < self.end {
            out.push(theta.clone());
            theta = &theta + &self.step;
        }
        out
    }
}

/// Float-oracle step size and comparison tolerances.
#[derive(Clone, Copy, Debug)]
pub struct Tolerances {
    /// Central-difference step.
    pub h: f64,
    /// Absolute tolerance on |analytic - oracle|.
    pub abs_tol: f64,
    /// Relative tolerance, applied as `rel_tol * |analytic|`.
    pub rel_tol: f64,
}

impl Default for Tolerances {
    fn default() -> Tolerances {
        Tolerances {
            h: 1e-6,
            abs_tol: 1e-6,
            rel_tol: 1e-6,
        }
    }
}

/// One recorded divergence.
#[derive(Clone, Debug)]
pub struct Failure {
    pub function: TrigFunction,
    /// Which comparison diverged, e.g. `piecewise-vs-literal` or
    /// `oracle-central-diff`.
    pub check: String,
    pub theta: String,
    pub expected: String,
    pub actual: String,
}

/// Aggregated result of one sweep.
#[derive(Clone, Debug)]
pub struct DiffReport {
    pub suite: &'static str,
    pub points_checked: usize,
    /// Largest float-comparison absolute error seen (0 for exact sweeps).
    pub max_abs_error: f64,
    /// Largest float-comparison relative error seen.
    pub max_rel_error: f64,
    pub failures: Vec<Failure>,
}

impl DiffReport {
    fn new(suite: &'static str) -> DiffReport {
        DiffReport {
            suite,
            points_checked: 0,
            max_abs_error: 0.0,
            max_rel_error: 0.0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Record an exact comparison; any inequality is a failure.
    fn check_exact<T: PartialEq + fmt::Debug>(
        &mut self,
        function: TrigFunction,
        check: &str,
        theta: &Scalar,
        expected: &T,
        actual: &T,
    ) {
        if expected != actual {
            self.failures.push(Failure {
                function,
                check: check.to_string(),
                theta: theta.to_string(),
                expected: format!("{expected:?}"),
                actual: format!("{actual:?}"),
            });
        }
    }

    /// Record a float comparison against `max(abs_tol, rel_tol * |expected|)`.
    fn check_float(
        &mut self,
        function: TrigFunction,
        check: &str,
        theta: f64,
        expected: f64,
        actual: f64,
        tol: &Tolerances,
    ) {
        let abs = (expected - actual).abs();
        let rel = if expected != 0.0 { abs / expected.abs() } else { abs };
        self.max_abs_error = self.max_abs_error.max(abs);
        self.max_rel_error = self.max_rel_error.max(rel);
        if abs > tol.abs_tol && rel > tol.rel_tol {
            self.failures.push(Failure {
                function,
                check: check.to_string(),
                theta: theta.to_string(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }
}

impl fmt::Display for DiffReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} points, {} failures, max_abs_err {:.3e}, max_rel_err {:.3e} ... {}",
            self.suite,
            self.points_checked,
            self.failures.len(),
            self.max_abs_error,
            self.max_rel_error,
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}
