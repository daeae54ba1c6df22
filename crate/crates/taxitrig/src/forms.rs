//! The three interchangeable representations of taxicab sine and cosine.
//!
//! Sine and cosine in t-radians are piecewise linear with period 8. They can
//! be written three ways, all provably equal on `[0, 8)`:
//!
//! * **piecewise** — the two- and three-branch linear definitions;
//! * **literal** — a single closed-form expression whose branch selection is
//!   done by parity selectors `1 + (-1)^k` and powers of the imaginary unit,
//!   evaluated here with genuine complex pair arithmetic (the imaginary part
//!   must come out exactly zero);
//! * **pseudo** — the parity-split form: one linear expression for even
//!   branch index, one for odd, with the power of `i` collapsed to a real
//!   sign.
//!
//! Each representation is a [`SinCosForm`] strategy registered by name, so
//! verification sweeps and the CLI can select and cross-check them at
//! runtime.

use crate::angle::Angle;
use crate::complex::ComplexScalar;
use crate::ipow::i_pow;
use crate::scalar::Scalar;

/// A named way of computing taxicab sine and cosine on a reduced angle.
pub trait SinCosForm: Sync {
    fn name(&self) -> &'static str;
    fn cos(&self, a: &Angle) -> Scalar;
    fn sin(&self, a: &Angle) -> Scalar;
}

/// Every registered representation, in cross-check order.
pub static SIN_COS_FORMS: [&dyn SinCosForm; 3] =
    [&Piecewise, &LiteralClosedForm, &PseudoClosedForm];

/// Look up a representation by its registry name.
pub fn sin_cos_form(name: &str) -> Option<&'static dyn SinCosForm> {
    SIN_COS_FORMS.iter().copied().find(|f| f.name() == name)
}

/// `c + theta/2` or `c - theta/2` on the reduced angle, in its backend.
/// All branch expressions of the six functions and their derivatives are
/// built from these linears.
pub(crate) fn affine(a: &Angle, c: i64, theta_sign: i64) -> Scalar {
    let theta = a.reduced();
    let half_theta = theta / theta.int_like(2);
    match theta_sign {
        1 => &theta.int_like(c) + &half_theta,
        -1 => &theta.int_like(c) - &half_theta,
        _ => unreachable!(),
    }
}

// ---------------------------------------------------------------------------
// Piecewise
// ---------------------------------------------------------------------------

/// Direct branch lookup on `[0, 8)`.
pub struct Piecewise;

impl SinCosForm for Piecewise {
    fn name(&self) -> &'static str {
        "piecewise"
    }

    /// `1 - theta/2` on `[0, 4)`, `-3 + theta/2` on `[4, 8)`.
    fn cos(&self, a: &Angle) -> Scalar {
        let four = a.reduced().int_like(4);
        if a.reduced() < &four {
            affine(a, 1, -1)
        } else {
            affine(a, -3, 1)
        }
    }

    /// `theta/2` on `[0, 2)`, `2 - theta/2` on `[2, 6)`, `-4 + theta/2` on
    /// `[6, 8)`. (The canonical domain re-indexes the `[-2, 10)` branches.)
    fn sin(&self, a: &Angle) -> Scalar {
        let theta = a.reduced();
        if theta < &theta.int_like(2) {
            affine(a, 0, 1)
        } else if theta < &theta.int_like(6) {
            affine(a, 2, -1)
        } else {
            affine(a, -4, 1)
        }
    }
}

// ---------------------------------------------------------------------------
// Literal closed form
// ---------------------------------------------------------------------------

/// The single-expression closed form with `i^(k-1)`, `i^(k-2)` coefficients
/// and parity selectors, evaluated with complex pair arithmetic as written.
pub struct LiteralClosedForm;

/// `1 + (-1)^k`: 2 when `k` is even, 0 when `k` is odd.
fn parity_selector(a: &Angle, k: i64) -> Scalar {
    let v = if k.rem_euclid(2) == 0 { 2 } else { 0 };
    a.reduced().int_like(v)
}

/// Complex-valued evaluation of the literal cosine closed form. The result
/// of a correct evaluation is always real; callers that want the real value
/// use [`cos_closed_literal`], the sweeps check `im == 0` through this.
pub fn cos_closed_literal_complex(a: &Angle) -> ComplexScalar {
    let k = a.branch_k() as i64;
    let b = a.backend();
    let even_term = i_pow(k - 2)
        .to_complex(b)
        .scale(&affine(a, k - 1, -1))
        .scale(&parity_selector(a, k));
    let odd_term = i_pow(k - 1)
        .to_complex(b)
        .scale(&affine(a, k, -1))
        .scale(&parity_selector(a, k + 1));
    even_term.add(&odd_term).scale(&b.ratio(1, 2))
}

/// Complex-valued evaluation of the literal sine closed form.
pub fn sin_closed_literal_complex(a: &Angle) -> ComplexScalar {
    let k = a.branch_k() as i64;
    let b = a.backend();
    let even_term = i_pow(k - 2)
        .to_complex(b)
        .scale(&affine(a, k, -1))
        .scale(&parity_selector(a, k));
    let odd_term = i_pow(k - 1)
        .to_complex(b)
        .scale(&affine(a, 1 - k, 1))
        .scale(&parity_selector(a, k + 1));
    even_term.add(&odd_term).scale(&b.ratio(1, 2))
}

fn expect_real(v: ComplexScalar, what: &str, a: &Angle) -> Scalar {
    assert!(
        v.is_real(),
        "{what} produced nonzero imaginary part {} at theta = {}",
        v.im,
        a.reduced()
    );
    v.re
}

impl SinCosForm for LiteralClosedForm {
    fn name(&self) -> &'static str {
        "literal"
    }

    fn cos(&self, a: &Angle) -> Scalar {
        expect_real(cos_closed_literal_complex(a), "literal cosine", a)
    }

    fn sin(&self, a: &Angle) -> Scalar {
        expect_real(sin_closed_literal_complex(a), "literal sine", a)
    }
}

// ---------------------------------------------------------------------------
// Pseudo closed form
// ---------------------------------------------------------------------------

/// The parity-split form: the surviving term of the literal expression for
/// each parity of `k`, with the even power of `i` realized as a real sign.
pub struct PseudoClosedForm;

impl SinCosForm for PseudoClosedForm {
    fn name(&self) -> &'static str {
        "pseudo"
    }

    fn cos(&self, a: &Angle) -> Scalar {
        let k = a.branch_k() as i64;
        if k.rem_euclid(2) == 0 {
            let sign = i_pow(k - 2).real_sign();
            &affine(a, k - 1, -1) * &a.reduced().int_like(sign)
        } else {
            let sign = i_pow(k - 1).real_sign();
            &affine(a, k, -1) * &a.reduced().int_like(sign)
        }
    }

    fn sin(&self, a: &Angle) -> Scalar {
        let k = a.branch_k() as i64;
        if k.rem_euclid(2) == 0 {
            let sign = i_pow(k - 2).real_sign();
            &affine(a, k, -1) * &a.reduced().int_like(sign)
        } else {
            let sign = i_pow(k - 1).real_sign();
            &affine(a, 1 - k, 1) * &a.reduced().int_like(sign)
        }
    }
}

// ---------------------------------------------------------------------------
// Free-function views
// ---------------------------------------------------------------------------

pub fn cos_piecewise(a: &Angle) -> Scalar {
    Piecewise.cos(a)
}

pub fn sin_piecewise(a: &Angle) -> Scalar {
    Piecewise.sin(a)
}

pub fn cos_closed_literal(a: &Angle) -> Scalar {
    LiteralClosedForm.cos(a)
}

pub fn sin_closed_literal(a: &Angle) -> Scalar {
    LiteralClosedForm.sin(a)
}

pub fn cos_pseudo(a: &Angle) -> Scalar {
    PseudoClosedForm.cos(a)
}

pub fn sin_pseudo(a: &Angle) -> Scalar {
    PseudoClosedForm.sin(a)
}
