//! Analytic derivatives of the six functions, in every derivable form.
//!
//! Sine and cosine are piecewise linear, so their derivatives are the
//! constants 1/2 and -1/2, alternating about the extrema, with corners
//! where the branches meet. For the other four functions the derivative can
//! be written several ways:
//!
//! * **direct** — differentiate the branch expression itself;
//! * **product** — the secant/cosecant product forms
//!   `1/2 sec(theta) (tan(theta) -+ 1)` and
//!   `-1/2 csc(theta) (cot(theta) -+ 1)`;
//! * **squared** — the regional squared forms `+-1/2 sec^2(theta)` and
//!   `+-1/2 csc^2(theta)` obtained from the quadrant identities
//!   (for tangent and cotangent these are `1/2 sec^2` and `-1/2 csc^2`
//!   everywhere);
//! * **quotient** — rebuild each derivative from nothing but sin, cos and
//!   their piecewise-constant derivatives via the quotient and reciprocal
//!   rules.
//!
//! Each form is a [`DerivStrategy`] registered by name. All forms agree at
//! every point where the derivative is finite; the verification sweeps and
//! the acceptance suite check this exactly.
//!
//! At a corner the result carries both one-sided derivatives. The one-sided
//! values at secant/cosecant corners are the limits of the adjacent branch
//! derivative expressions, matching the corner convention of sine and
//! cosine.

use std::fmt;
use std::str::FromStr;

use crate::angle::Angle;
use crate::forms::affine;
use crate::functions::{cos, cot, csc, sec, sin, tan, TrigFunction};
use crate::ipow::i_pow;
use crate::scalar::Scalar;

/// Outcome of differentiating a trig function at a point.
#[derive(Clone, Debug, PartialEq)]
pub enum DerivResult {
    Finite(Scalar),
    /// Distinct one-sided derivatives at a continuous point.
    Corner { left: Scalar, right: Scalar },
    Pole,
}

impl DerivResult {
    pub fn finite(&self) -> Option<&Scalar> {
        match self {
            DerivResult::Finite(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_pole(&self) -> bool {
        matches!(self, DerivResult::Pole)
    }

    pub fn is_corner(&self) -> bool {
        matches!(self, DerivResult::Corner { .. })
    }
}

/// Differentiability class of a function at a point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Differentiability {
    Smooth,
    Corner,
    Pole,
}

/// Where `f` is smooth, has a corner, or has a pole.
///
/// Corners sit at the extrema of the underlying branch structure: sine at
/// reduced angles 2 and 6, cosine at 0 and 4, secant at the cosine extrema
/// 0 and 4, cosecant at the sine extrema 2 and 6. Tangent and cotangent are
/// smooth everywhere between their poles; the half-slopes of sine and
/// cosine cancel in the ratio.
pub fn classify_differentiability(f: TrigFunction, a: &Angle) -> Differentiability {
    let corners: &[i64] = match f {
        TrigFunction::Sin | TrigFunction::Csc => &[2, 6],
        TrigFunction::Cos | TrigFunction::Sec => &[0, 4],
        TrigFunction::Tan | TrigFunction::Cot => &[],
    };
    if f.has_pole_at(a) {
        Differentiability::Pole
    } else if corners.iter().any(|&c| a.reduced_is(c)) {
        Differentiability::Corner
    } else {
        Differentiability::Smooth
    }
}

/// Derivative form selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DerivForm {
    Direct,
    Product,
    Squared,
    Quotient,
}

impl DerivForm {
    pub const ALL: [DerivForm; 4] = [
        DerivForm::Direct,
        DerivForm::Product,
        DerivForm::Squared,
        DerivForm::Quotient,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            DerivForm::Direct => "direct",
            DerivForm::Product => "product",
            DerivForm::Squared => "squared",
            DerivForm::Quotient => "quotient",
        }
    }
}

impl fmt::Display for DerivForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DerivForm {
    type Err = String;

    fn from_str(s: &str) -> Result<DerivForm, String> {
        DerivForm::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| {
                format!("unknown derivative form {s:?} (expected direct, product, squared, or quotient)")
            })
    }
}

/// Errors from derivative form dispatch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DerivError {
    /// The requested form has no defining expression for this function,
    /// e.g. the product form for tangent or any quotient for sine.
    UnsupportedForm { form: DerivForm, function: TrigFunction },
}

impl fmt::Display for DerivError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DerivError::UnsupportedForm { form, function } => {
                write!(f, "the {form} derivative form does not apply to {function}")
            }
        }
    }
}

impl std::error::Error for DerivError {}

/// A named way of computing derivatives for some subset of the functions.
pub trait DerivStrategy: Sync {
    fn name(&self) -> &'static str;
    fn form(&self) -> DerivForm;
    fn supports(&self, f: TrigFunction) -> bool;
    fn derivative(&self, f: TrigFunction, a: &Angle) -> Result<DerivResult, DerivError>;
}

/// Every registered derivative strategy, in cross-check order.
pub static DERIV_STRATEGIES: [&dyn DerivStrategy; 4] =
    [&DirectForm, &ProductForm, &SquaredForm, &QuotientRuleForm];

/// Look up a strategy by form selector.
pub fn deriv_strategy(form: DerivForm) -> &'static dyn DerivStrategy {
    DERIV_STRATEGIES
        .iter()
        .copied()
        .find(|s| s.form() == form)
        .expect("all forms registered")
}

/// Look up a strategy by registry name.
pub fn deriv_strategy_by_name(name: &str) -> Option<&'static dyn DerivStrategy> {
    DERIV_STRATEGIES.iter().copied().find(|s| s.name() == name)
}

/// Differentiate `f` at `a` using the requested form.
pub fn derivative(f: TrigFunction, a: &Angle, form: DerivForm) -> Result<DerivResult, DerivError> {
    deriv_strategy(form).derivative(f, a)
}

// ---------------------------------------------------------------------------
// Shared pieces
// ---------------------------------------------------------------------------

fn half(a: &Angle) -> Scalar {
    a.reduced().ratio_like(1, 2)
}

/// Slope of the sine branch containing `r`, for `r` not at a sine corner
/// (at a breakpoint this is the slope of the branch beginning there).
fn sin_slope(a: &Angle) -> Scalar {
    let r = a.reduced();
    if r < &r.int_like(2) || r >= &r.int_like(6) {
        half(a)
    } else {
        -half(a)
    }
}

fn cos_slope(a: &Angle) -> Scalar {
    let r = a.reduced();
    if r < &r.int_like(4) {
        -half(a)
    } else {
        half(a)
    }
}

/// Regional sign of the squared form for secant: `+1/2 sec^2` on `(0, 4)`,
/// `-1/2 sec^2` on `(4, 8)`.
fn sec_region_sign(reduced_floor: i64) -> i64 {
    if (0..4).contains(&reduced_floor) {
        1
    } else {
        -1
    }
}

/// Regional sign of the squared form for cosecant: `+1/2 csc^2` on
/// `(2, 6)`, `-1/2 csc^2` on `(6, 8) U (0, 2)`.
fn csc_region_sign(reduced_floor: i64) -> i64 {
    if (2..6).contains(&reduced_floor) {
        1
    } else {
        -1
    }
}

/// One-sided derivative values at a corner of `f`, as limits of the
/// adjacent branch derivative expressions.
fn corner_values(f: TrigFunction, a: &Angle) -> (Scalar, Scalar) {
    let h = half(a);
    match f {
        TrigFunction::Sin => {
            if a.reduced_is(2) {
                (h.clone(), -h)
            } else {
                (-h.clone(), h)
            }
        }
        TrigFunction::Cos => {
            if a.reduced_is(0) {
                (h.clone(), -h)
            } else {
                (-h.clone(), h)
            }
        }
        TrigFunction::Sec => {
            // sec(corner)^2 = 1; the V shape flips the regional sign.
            let s = sec(a).into_finite().expect("sec finite at its corners");
            let sq = &(&s * &s) * &h;
            if a.reduced_is(0) {
                (-sq.clone(), sq)
            } else {
                (sq.clone(), -sq)
            }
        }
        TrigFunction::Csc => {
            let s = csc(a).into_finite().expect("csc finite at its corners");
            let sq = &(&s * &s) * &h;
            if a.reduced_is(2) {
                (-sq.clone(), sq)
            } else {
                (sq.clone(), -sq)
            }
        }
        TrigFunction::Tan | TrigFunction::Cot => unreachable!("tan/cot have no corners"),
    }
}

/// Handle the pole/corner cases shared by the direct, product and squared
/// strategies; `None` means the point is smooth for `f`.
fn classified_special(f: TrigFunction, a: &Angle) -> Option<DerivResult> {
    match classify_differentiability(f, a) {
        Differentiability::Pole => Some(DerivResult::Pole),
        Differentiability::Corner => {
            let (left, right) = corner_values(f, a);
            Some(DerivResult::Corner { left, right })
        }
        Differentiability::Smooth => None,
    }
}

// ---------------------------------------------------------------------------
// Direct form
// ---------------------------------------------------------------------------

/// Differentiate the branch expression of the function itself.
pub struct DirectForm;

impl DerivStrategy for DirectForm {
    fn name(&self) -> &'static str {
        "direct"
    }

    fn form(&self) -> DerivForm {
        DerivForm::Direct
    }

    fn supports(&self, _f: TrigFunction) -> bool {
        true
    }

    fn derivative(&self, f: TrigFunction, a: &Angle) -> Result<DerivResult, DerivError> {
        if let Some(special) = classified_special(f, a) {
            return Ok(special);
        }
        let k = a.branch_k() as i64;
        let even = k.rem_euclid(2) == 0;
        let h = half(a);
        let value = match f {
            TrigFunction::Sin => sin_slope(a),
            TrigFunction::Cos => cos_slope(a),
            TrigFunction::Tan => {
                // d/dtheta of the branch ratio collapses to 1/2 over the
                // squared cosine linear.
                let l = if even { affine(a, k - 1, -1) } else { affine(a, k, -1) };
                &h / &(&l * &l)
            }
            TrigFunction::Cot => {
                let l = if even { affine(a, k, -1) } else { affine(a, 1 - k, 1) };
                -&h / &(&l * &l)
            }
            TrigFunction::Sec => {
                // sec = i^-(k-2) (k-1-theta/2)^-1 on even branches, so the
                // reciprocal-power rule leaves the sign of the i power.
                let (sign, l) = if even {
                    (i_pow(k - 2).real_sign(), affine(a, k - 1, -1))
                } else {
                    (i_pow(k - 1).real_sign(), affine(a, k, -1))
                };
                &(&h * &a.reduced().int_like(sign)) / &(&l * &l)
            }
            TrigFunction::Csc => {
                let (sign, l) = if even {
                    (i_pow(k - 2).real_sign(), affine(a, k, -1))
                } else {
                    (-i_pow(k - 1).real_sign(), affine(a, 1 - k, 1))
                };
                &(&h * &a.reduced().int_like(sign)) / &(&l * &l)
            }
        };
        Ok(DerivResult::Finite(value))
    }
}

// ---------------------------------------------------------------------------
// Product form
// ---------------------------------------------------------------------------

/// The secant/cosecant product forms:
/// `1/2 sec (tan - 1)` on even branches and `1/2 sec (tan + 1)` on odd for
/// secant; `-1/2 csc (cot - 1)` and `-1/2 csc (cot + 1)` for cosecant.
pub struct ProductForm;

impl DerivStrategy for ProductForm {
    fn name(&self) -> &'static str {
        "product"
    }

    fn form(&self) -> DerivForm {
        DerivForm::Product
    }

    fn supports(&self, f: TrigFunction) -> bool {
        matches!(f, TrigFunction::Sec | TrigFunction::Csc)
    }

    fn derivative(&self, f: TrigFunction, a: &Angle) -> Result<DerivResult, DerivError> {
        if !self.supports(f) {
            return Err(DerivError::UnsupportedForm { form: self.form(), function: f });
        }
        if let Some(special) = classified_special(f, a) {
            return Ok(special);
        }
        let even = (a.branch_k() as i64).rem_euclid(2) == 0;
        let one = a.reduced().int_like(1);
        let h = half(a);
        let value = match f {
            TrigFunction::Sec => {
                let s = sec(a).into_finite().expect("smooth point");
                let t = tan(a).into_finite().expect("smooth point");
                let factor = if even { &t - &one } else { &t + &one };
                &(&h * &s) * &factor
            }
            TrigFunction::Csc => {
                let s = csc(a).into_finite().expect("smooth point");
                let c = cot(a).into_finite().expect("smooth point");
                let factor = if even { &c - &one } else { &c + &one };
                -&(&h * &s) * &factor
            }
            _ => unreachable!(),
        };
        Ok(DerivResult::Finite(value))
    }
}

// ---------------------------------------------------------------------------
// Squared form
// ---------------------------------------------------------------------------

/// The squared forms: `1/2 sec^2` for tangent, `-1/2 csc^2` for cotangent,
/// and the regional `+-1/2 sec^2` / `+-1/2 csc^2` for secant and cosecant.
pub struct SquaredForm;

impl DerivStrategy for SquaredForm {
    fn name(&self) -> &'static str {
        "squared"
    }

    fn form(&self) -> DerivForm {
        DerivForm::Squared
    }

    fn supports(&self, f: TrigFunction) -> bool {
        !matches!(f, TrigFunction::Sin | TrigFunction::Cos)
    }

    fn derivative(&self, f: TrigFunction, a: &Angle) -> Result<DerivResult, DerivError> {
        if !self.supports(f) {
            return Err(DerivError::UnsupportedForm { form: self.form(), function: f });
        }
        if let Some(special) = classified_special(f, a) {
            return Ok(special);
        }
        let h = half(a);
        let floor = a.reduced().floor_i64();
        let value = match f {
            TrigFunction::Tan => {
                let s = sec(a).into_finite().expect("smooth point");
                &h * &(&s * &s)
            }
            TrigFunction::Cot => {
                let s = csc(a).into_finite().expect("smooth point");
                -&h * &(&s * &s)
            }
            TrigFunction::Sec => {
                let s = sec(a).into_finite().expect("smooth point");
                let sign = a.reduced().int_like(sec_region_sign(floor));
                &(&h * &sign) * &(&s * &s)
            }
            TrigFunction::Csc => {
                let s = csc(a).into_finite().expect("smooth point");
                let sign = a.reduced().int_like(csc_region_sign(floor));
                &(&h * &sign) * &(&s * &s)
            }
            _ => unreachable!(),
        };
        Ok(DerivResult::Finite(value))
    }
}

// ---------------------------------------------------------------------------
// Quotient rule
// ---------------------------------------------------------------------------

/// Rebuild every derivative from the basic definitions: the quotient rule
/// on sin/cos for tangent and cotangent, the reciprocal rule for secant and
/// cosecant, using only the piecewise-constant derivatives of sine and
/// cosine. Classification (finite/corner/pole) falls out of the same
/// computation instead of being looked up, which makes this an independent
/// cross-check of the other strategies.
pub struct QuotientRuleForm;

/// One-sided (left, right) derivative pair of sin or cos at a point.
fn one_sided(d: DerivResult) -> (Scalar, Scalar) {
    match d {
        DerivResult::Finite(v) => (v.clone(), v),
        DerivResult::Corner { left, right } => (left, right),
        DerivResult::Pole => unreachable!("sin/cos have no poles"),
    }
}

impl DerivStrategy for QuotientRuleForm {
    fn name(&self) -> &'static str {
        "quotient"
    }

    fn form(&self) -> DerivForm {
        DerivForm::Quotient
    }

    fn supports(&self, f: TrigFunction) -> bool {
        !matches!(f, TrigFunction::Sin | TrigFunction::Cos)
    }

    fn derivative(&self, f: TrigFunction, a: &Angle) -> Result<DerivResult, DerivError> {
        if !self.supports(f) {
            return Err(DerivError::UnsupportedForm { form: self.form(), function: f });
        }
        let sin_v = sin(a);
        let cos_v = cos(a);
        let (sin_l, sin_r) = one_sided(d_sin(a));
        let (cos_l, cos_r) = one_sided(d_cos(a));

        let eval_side = |ds: &Scalar, dc: &Scalar| -> Option<Scalar> {
            match f {
                TrigFunction::Tan => {
                    if cos_v.is_zero() {
                        return None;
                    }
                    Some(&(&(&cos_v * ds) - &(&sin_v * dc)) / &(&cos_v * &cos_v))
                }
                TrigFunction::Cot => {
                    if sin_v.is_zero() {
                        return None;
                    }
                    Some(&(&(&sin_v * dc) - &(&cos_v * ds)) / &(&sin_v * &sin_v))
                }
                TrigFunction::Sec => {
                    if cos_v.is_zero() {
                        return None;
                    }
                    Some(-dc / &(&cos_v * &cos_v))
                }
                TrigFunction::Csc => {
                    if sin_v.is_zero() {
                        return None;
                    }
                    Some(-ds / &(&sin_v * &sin_v))
                }
                TrigFunction::Sin | TrigFunction::Cos => unreachable!(),
            }
        };

        let left = eval_side(&sin_l, &cos_l);
        let right = eval_side(&sin_r, &cos_r);
        Ok(match (left, right) {
            (Some(l), Some(r)) => {
                if l == r {
                    DerivResult::Finite(l)
                } else {
                    DerivResult::Corner { left: l, right: r }
                }
            }
            _ => DerivResult::Pole,
        })
    }
}

// ---------------------------------------------------------------------------
// Named entry points
// ---------------------------------------------------------------------------

/// Derivative of sine: 1/2 or -1/2 by region, corners at the extrema.
pub fn d_sin(a: &Angle) -> DerivResult {
    DirectForm
        .derivative(TrigFunction::Sin, a)
        .expect("direct form supports sin")
}

/// Derivative of cosine: -1/2 or 1/2 by region, corners at the extrema.
pub fn d_cos(a: &Angle) -> DerivResult {
    DirectForm
        .derivative(TrigFunction::Cos, a)
        .expect("direct form supports cos")
}

/// Derivative of tangent: `1/2 sec^2(theta)`, poles at reduced 2 and 6,
/// never a corner.
pub fn d_tan(a: &Angle) -> DerivResult {
    DirectForm
        .derivative(TrigFunction::Tan, a)
        .expect("direct form supports tan")
}

/// Derivative of cotangent: `-1/2 csc^2(theta)`, poles at reduced 0 and 4.
pub fn d_cot(a: &Angle) -> DerivResult {
    DirectForm
        .derivative(TrigFunction::Cot, a)
        .expect("direct form supports cot")
}

/// Derivative of secant in the requested form.
pub fn d_sec(a: &Angle, form: DerivForm) -> Result<DerivResult, DerivError> {
    derivative(TrigFunction::Sec, a, form)
}

/// Derivative of cosecant in the requested form.
pub fn d_csc(a: &Angle, form: DerivForm) -> Result<DerivResult, DerivError> {
    derivative(TrigFunction::Csc, a, form)
}

/// The alternate derivation path: quotient/reciprocal rules over sin, cos,
/// d_sin, d_cos only. Errors for sin and cos themselves, which have no
/// quotient structure.
pub fn derivative_via_quotient_rule(f: TrigFunction, a: &Angle) -> Result<DerivResult, DerivError> {
    QuotientRuleForm.derivative(f, a)
}
