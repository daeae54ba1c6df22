//! Taxicab trigonometry in t-radians.
//!
//! In pure taxicab geometry angles are measured by arc length on the unit
//! taxicab circle, whose circumference is 8: a full turn is 8 t-radians and
//! taxicab pi is 4. The resulting sine and cosine are piecewise linear with
//! slopes of plus or minus 1/2, which changes the calculus: the familiar
//! derivative pairing of sine and cosine is lost, tangent picks up a factor
//! of 1/2 in its derivative, and the secant and cosecant derivatives become
//! proportional to the square of the function itself.
//!
//! This crate provides:
//!
//! * [`scalar`] — dual-backend numbers (exact rationals or `f64`); every
//!   breakpoint and coefficient is rational, so exact mode has zero
//!   rounding error anywhere;
//! * [`angle`] — canonical reduction into `[0, 8)` with branch indexing;
//! * [`forms`] — the three equivalent representations of sine and cosine
//!   (piecewise, literal closed form with complex coefficients, parity-split
//!   pseudo closed form) behind one strategy trait;
//! * [`functions`] — the six trig functions with first-class pole results;
//! * [`deriv`] — analytic derivatives in four cross-checkable forms
//!   (direct, product, squared, quotient-rule), with corner and pole
//!   classification;
//! * [`series`] — sampled data for tables and plots;
//! * [`verify`] — deterministic grids, a finite-difference oracle, and the
//!   equivalence/derivative/identity sweeps.

pub mod angle;
pub mod complex;
pub mod constants;
pub mod deriv;
pub mod forms;
pub mod functions;
pub mod ipow;
pub mod scalar;
pub mod series;
pub mod verify;

pub use angle::{reduce_angle, Angle};
pub use constants::TaxicabConstants;
pub use deriv::{
    classify_differentiability, d_cos, d_cot, d_csc, d_sec, d_sin, d_tan, derivative,
    derivative_via_quotient_rule, DerivError, DerivForm, DerivResult, DerivStrategy,
    Differentiability,
};
pub use forms::{sin_cos_form, SinCosForm};
pub use functions::{cos, cot, csc, sec, sin, tan, EvalResult, TrigFunction};
pub use ipow::{i_pow, ImaginaryUnitPower};
pub use scalar::{Backend, NumericError, Scalar};
pub use series::{Series, SeriesPoint};
pub use verify::{DiffReport, GridSpec, Tolerances};
