//! The three verification sweeps.
//!
//! Each sweep walks a deterministic rational grid and aggregates into a
//! [`DiffReport`]. Exact comparisons carry zero tolerance; only the
//! float-oracle comparisons in the derivative sweep use [`Tolerances`].
//! Aggregation is max/merge only, so evaluation order cannot change a
//! report.

use crate::angle::Angle;
use crate::deriv::{
    classify_differentiability, deriv_strategy, DerivForm, DerivResult, Differentiability,
    DERIV_STRATEGIES,
};
use crate::forms::{
    cos_closed_literal_complex, cos_piecewise, sin_closed_literal_complex, sin_piecewise,
    SIN_COS_FORMS,
};
use crate::functions::{cot, sec, tan, EvalResult, TrigFunction};
use crate::scalar::Scalar;
use crate::verify::oracle::{backward_difference, finite_difference, forward_difference};
use crate::verify::{DiffReport, GridSpec, Tolerances};

fn reduce(theta: &Scalar) -> Angle {
    Angle::reduce(theta.clone()).expect("grid thetas are finite")
}

/// Check that the piecewise, literal and pseudo representations of sine and
/// cosine agree exactly at every grid point, that the literal form's
/// imaginary component is exactly zero, and that tangent equals the
/// sine/cosine ratio off its poles.
pub fn run_equivalence_sweep(grid: &GridSpec) -> DiffReport {
    let mut report = DiffReport::new("equivalence");
    for theta in grid.points() {
        let a = reduce(&theta);
        let cos_ref = cos_piecewise(&a);
        let sin_ref = sin_piecewise(&a);
        for form in &SIN_COS_FORMS[1..] {
            let check = format!("cos piecewise-vs-{}", form.name());
            report.check_exact(TrigFunction::Cos, &check, &theta, &cos_ref, &form.cos(&a));
            let check = format!("sin piecewise-vs-{}", form.name());
            report.check_exact(TrigFunction::Sin, &check, &theta, &sin_ref, &form.sin(&a));
        }

        let zero = theta.int_like(0);
        let cos_im = cos_closed_literal_complex(&a).im;
        report.check_exact(TrigFunction::Cos, "literal-imaginary-part", &theta, &zero, &cos_im);
        let sin_im = sin_closed_literal_complex(&a).im;
        report.check_exact(TrigFunction::Sin, "literal-imaginary-part", &theta, &zero, &sin_im);

        match tan(&a) {
            EvalResult::Pole => {
                report.check_exact(TrigFunction::Tan, "pole-iff-cos-zero", &theta, &true, &cos_ref.is_zero());
            }
            EvalResult::Finite(t) => {
                let ratio = &sin_ref / &cos_ref;
                report.check_exact(TrigFunction::Tan, "tan-vs-sin-over-cos", &theta, &ratio, &t);
            }
        }
        report.points_checked += 1;
    }
    report
}

/// Cross-check every derivative form exactly on the grid, then compare the
/// analytic derivatives against the central-difference oracle at float
/// points clear of breakpoints, and the corner one-sided values against
/// forward/backward quotients at the breakpoints.
pub fn run_derivative_sweep(grid: &GridSpec, tol: &Tolerances) -> DiffReport {
    let mut report = DiffReport::new("derivatives");

    // Exact all-forms agreement, including pole/corner classification.
    let direct = deriv_strategy(DerivForm::Direct);
    for theta in grid.points() {
        let a = reduce(&theta);
        for f in TrigFunction::ALL {
            let reference = direct.derivative(f, &a).expect("direct supports all");
            for strategy in DERIV_STRATEGIES {
                if strategy.form() != DerivForm::Direct && strategy.supports(f) {
                    let check = format!("{}-vs-direct", strategy.name());
                    report.check_exact(f, &check, &theta, &reference, &strategy.derivative(f, &a).expect("supported"));
                }
            }
        }
        report.points_checked += 1;
    }

    // Analytic vs central difference at smooth float points.
    for theta in grid.points() {
        let tf = theta.to_f64();
        let nearest_breakpoint = 2.0 * (tf / 2.0).round();
        if (tf - nearest_breakpoint).abs() < grid.exclusion_radius() {
            continue;
        }
        let a = Angle::from_f64(tf).expect("finite");
        for f in TrigFunction::ALL {
            if classify_differentiability(f, &a) != Differentiability::Smooth {
                continue;
            }
            let analytic = direct
                .derivative(f, &a)
                .expect("direct supports all")
                .finite()
                .expect("smooth point")
                .to_f64();
            match finite_difference(f, tf, tol.h) {
                Ok(estimate) => {
                    report.check_float(f, "oracle-central-diff", tf, analytic, estimate, tol)
                }
                Err(_) => continue,
            }
        }
        report.points_checked += 1;
    }

    // One-sided quotients at the corners inside the grid range.
    let (lo, hi) = (grid.start().to_f64(), grid.end().to_f64());
    let mut c = 2 * (lo / 2.0).floor() as i64;
    while (c as f64) < hi {
        if (c as f64) >= lo {
            let a = reduce(&grid.start().int_like(c));
            for f in TrigFunction::ALL {
                if classify_differentiability(f, &a) != Differentiability::Corner {
                    continue;
                }
                let d = direct.derivative(f, &a).expect("direct supports all");
                let DerivResult::Corner { left, right } = d else {
                    unreachable!("classified corner")
                };
                let back = backward_difference(f, c as f64, tol.h).expect("corner sides are smooth");
                let fwd = forward_difference(f, c as f64, tol.h).expect("corner sides are smooth");
                report.check_float(f, "corner-left-quotient", c as f64, left.to_f64(), back, tol);
                report.check_float(f, "corner-right-quotient", c as f64, right.to_f64(), fwd, tol);
            }
            report.points_checked += 1;
        }
        c += 2;
    }
    report
}

/// Exact identity checks: the taxicab unit-circle identity, the quadrant
/// tangent/secant relations, reciprocal pairing, and periodicity.
pub fn run_identity_suite(grid: &GridSpec) -> DiffReport {
    let mut report = DiffReport::new("identities");
    for theta in grid.points() {
        let a = reduce(&theta);
        let one = theta.int_like(1);

        // |sin| + |cos| = 1 on the whole circle.
        let sum = &sin_piecewise(&a).abs() + &cos_piecewise(&a).abs();
        report.check_exact(TrigFunction::Sin, "abs-sin-plus-abs-cos", &theta, &one, &sum);

        // Quadrant relations between tangent and secant: tan + 1 = sec in
        // QI, -tan + 1 = -sec in QII, tan + 1 = -sec in QIII, -tan + 1 =
        // sec in QIV.
        if let (EvalResult::Finite(t), EvalResult::Finite(s)) = (tan(&a), sec(&a)) {
            let (lhs, rhs) = match a.quadrant() {
                1 => (&t + &one, s),
                2 => (&(-&t) + &one, -s),
                3 => (&t + &one, -s),
                4 => (&(-&t) + &one, s),
                _ => unreachable!(),
            };
            report.check_exact(TrigFunction::Sec, "quadrant-tan-sec", &theta, &lhs, &rhs);
        }

        // tan * cot = 1 wherever both are finite and nonzero.
        if let (EvalResult::Finite(t), EvalResult::Finite(c)) = (tan(&a), cot(&a)) {
            if !t.is_zero() && !c.is_zero() {
                report.check_exact(TrigFunction::Tan, "tan-times-cot", &theta, &one, &(&t * &c));
            }
        }

        // Period 8 for all six functions, and the half period 4 for tan.
        let period = theta.int_like(8);
        let shifted = reduce(&(&theta + &period));
        for f in TrigFunction::ALL {
            report.check_exact(f, "period-8", &theta, &f.eval(&a), &f.eval(&shifted));
        }
        let half_period = theta.int_like(4);
        let tan_shifted = reduce(&(&theta + &half_period));
        report.check_exact(TrigFunction::Tan, "tan-period-4", &theta, &tan(&a), &tan(&tan_shifted));

        report.points_checked += 1;
    }
    report
}
