//! The six taxicab trigonometric functions.
//!
//! Sine and cosine are total; tangent, cotangent, secant and cosecant have
//! poles where their defining denominator is exactly zero. A pole is a
//! first-class [`EvalResult`] variant, not an error: poles sit exactly at
//! rational breakpoints, so in exact mode they are structural, and in float
//! mode an angle near (but not at) a pole simply evaluates to a large
//! finite value.

use std::fmt;
use std::str::FromStr;

use crate::angle::Angle;
use crate::forms::{self, SinCosForm};
use crate::scalar::Scalar;

/// The closed inventory of functions this crate evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TrigFunction {
    Sin,
    Cos,
    Tan,
    Cot,
    Sec,
    Csc,
}

impl TrigFunction {
    pub const ALL: [TrigFunction; 6] = [
        TrigFunction::Sin,
        TrigFunction::Cos,
        TrigFunction::Tan,
        TrigFunction::Cot,
        TrigFunction::Sec,
        TrigFunction::Csc,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            TrigFunction::Sin => "sin",
            TrigFunction::Cos => "cos",
            TrigFunction::Tan => "tan",
            TrigFunction::Cot => "cot",
            TrigFunction::Sec => "sec",
            TrigFunction::Csc => "csc",
        }
    }

    /// Pole locations as residues of the reduced angle, empty for sin/cos.
    pub fn poles_mod8(&self) -> &'static [i64] {
        match self {
            TrigFunction::Sin | TrigFunction::Cos => &[],
            TrigFunction::Tan | TrigFunction::Sec => &[2, 6],
            TrigFunction::Cot | TrigFunction::Csc => &[0, 4],
        }
    }

    pub fn has_pole_at(&self, a: &Angle) -> bool {
        self.poles_mod8().iter().any(|&n| a.reduced_is(n))
    }

    /// Evaluate with the default (piecewise-backed) representations.
    pub fn eval(&self, a: &Angle) -> EvalResult {
        match self {
            TrigFunction::Sin => EvalResult::Finite(sin(a)),
            TrigFunction::Cos => EvalResult::Finite(cos(a)),
            TrigFunction::Tan => tan(a),
            TrigFunction::Cot => cot(a),
            TrigFunction::Sec => sec(a),
            TrigFunction::Csc => csc(a),
        }
    }

    /// Evaluate through a chosen sine/cosine representation: the ratio
    /// functions become ratios of that form, the reciprocal functions its
    /// reciprocals.
    pub fn eval_via(&self, form: &dyn SinCosForm, a: &Angle) -> EvalResult {
        if self.has_pole_at(a) {
            return EvalResult::Pole;
        }
        let v = match self {
            TrigFunction::Sin => form.sin(a),
            TrigFunction::Cos => form.cos(a),
            TrigFunction::Tan => &form.sin(a) / &form.cos(a),
            TrigFunction::Cot => &form.cos(a) / &form.sin(a),
            TrigFunction::Sec => &a.reduced().int_like(1) / &form.cos(a),
            TrigFunction::Csc => &a.reduced().int_like(1) / &form.sin(a),
        };
        EvalResult::Finite(v)
    }
}

impl fmt::Display for TrigFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TrigFunction {
    type Err = String;

    fn from_str(s: &str) -> Result<TrigFunction, String> {
        TrigFunction::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown function {s:?} (expected sin, cos, tan, cot, sec, or csc)"))
    }
}

/// Outcome of evaluating a trig function at an angle.
#[derive(Clone, Debug, PartialEq)]
pub enum EvalResult {
    Finite(Scalar),
    Pole,
}

impl EvalResult {
    pub fn is_pole(&self) -> bool {
        matches!(self, EvalResult::Pole)
    }

    pub fn finite(&self) -> Option<&Scalar> {
        match self {
            EvalResult::Finite(v) => Some(v),
            EvalResult::Pole => None,
        }
    }

    pub fn into_finite(self) -> Option<Scalar> {
        match self {
            EvalResult::Finite(v) => Some(v),
            EvalResult::Pole => None,
        }
    }
}

/// Taxicab sine (piecewise representation).
pub fn sin(a: &Angle) -> Scalar {
    forms::sin_piecewise(a)
}

/// Taxicab cosine (piecewise representation).
pub fn cos(a: &Angle) -> Scalar {
    forms::cos_piecewise(a)
}

/// Taxicab tangent: the branch ratio of sine to cosine, with poles at
/// reduced angles 2 and 6 (period 4, half that of sine and cosine).
pub fn tan(a: &Angle) -> EvalResult {
    if a.reduced_is(2) || a.reduced_is(6) {
        return EvalResult::Pole;
    }
    // The powers of i cancel in the ratio, leaving the branch linears.
    let k = a.branch_k() as i64;
    let value = if k.rem_euclid(2) == 0 {
        &forms::affine(a, k, -1) / &forms::affine(a, k - 1, -1)
    } else {
        &forms::affine(a, 1 - k, 1) / &forms::affine(a, k, -1)
    };
    EvalResult::Finite(value)
}

/// Taxicab cotangent: reciprocal of tangent, with poles where sine is zero
/// and zeros where tangent has its poles.
pub fn cot(a: &Angle) -> EvalResult {
    if a.reduced_is(0) || a.reduced_is(4) {
        return EvalResult::Pole;
    }
    let k = a.branch_k() as i64;
    let value = if k.rem_euclid(2) == 0 {
        &forms::affine(a, k - 1, -1) / &forms::affine(a, k, -1)
    } else {
        &forms::affine(a, k, -1) / &forms::affine(a, 1 - k, 1)
    };
    EvalResult::Finite(value)
}

/// Taxicab secant: reciprocal of the active cosine branch, with poles where
/// cosine is zero.
pub fn sec(a: &Angle) -> EvalResult {
    if a.reduced_is(2) || a.reduced_is(6) {
        return EvalResult::Pole;
    }
    let c = cos(a);
    EvalResult::Finite(&c.int_like(1) / &c)
}

/// Taxicab cosecant: reciprocal of the active sine branch, with poles where
/// sine is zero.
pub fn csc(a: &Angle) -> EvalResult {
    if a.reduced_is(0) || a.reduced_is(4) {
        return EvalResult::Pole;
    }
    let s = sin(a);
    EvalResult::Finite(&s.int_like(1) / &s)
}
