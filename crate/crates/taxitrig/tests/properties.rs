//! Property tests over random rational angles.
//!
//! The deterministic grid sweeps in `verify` are the contract; these
//! randomized checks cover the same invariants at arbitrary rationals and
//! arbitrary floats.

use proptest::prelude::*;

use taxitrig::deriv::DERIV_STRATEGIES;
use taxitrig::forms::SIN_COS_FORMS;
use taxitrig::{
    classify_differentiability, cos, cot, csc, d_sin, d_tan, sec, sin, tan, Angle, Backend,
    Differentiability, EvalResult, Scalar, TrigFunction,
};

fn rational_theta() -> impl Strategy<Value = Scalar> {
    (-4096i64..4096, 1i64..512).prop_map(|(n, d)| Backend::Exact.ratio(n, d))
}

fn reduce(theta: Scalar) -> Angle {
    Angle::reduce(theta).expect("finite")
}

proptest! {
    #[test]
    fn reduction_is_periodic_and_canonical(theta in rational_theta(), turns in -4i64..4) {
        let base = reduce(theta.clone());
        let shift = &theta + &Backend::Exact.int(8 * turns);
        let shifted = reduce(shift);
        prop_assert_eq!(base.reduced(), shifted.reduced());

        let r = base.reduced();
        prop_assert!(r >= &r.int_like(0) && r < &r.int_like(8));
        let k = base.branch_k() as i64;
        prop_assert_eq!(k, base.quadrant() as i64);
        prop_assert!(r >= &r.int_like(2 * (k - 1)) && r < &r.int_like(2 * k));
    }

    #[test]
    fn representations_agree_exactly(theta in rational_theta()) {
        let a = reduce(theta);
        let c = cos(&a);
        let s = sin(&a);
        for form in SIN_COS_FORMS {
            prop_assert_eq!(&form.cos(&a), &c, "cos via {}", form.name());
            prop_assert_eq!(&form.sin(&a), &s, "sin via {}", form.name());
        }
    }

    #[test]
    fn unit_circle_identity(theta in rational_theta()) {
        let a = reduce(theta);
        let sum = &sin(&a).abs() + &cos(&a).abs();
        prop_assert_eq!(sum, Backend::Exact.int(1));
    }

    #[test]
    fn value_ranges(theta in rational_theta()) {
        let a = reduce(theta);
        let one = Backend::Exact.int(1);
        prop_assert!(sin(&a).abs() <= one);
        prop_assert!(cos(&a).abs() <= one);
        if let EvalResult::Finite(v) = sec(&a) {
            prop_assert!(v.abs() >= one);
        }
        if let EvalResult::Finite(v) = csc(&a) {
            prop_assert!(v.abs() >= one);
        }
    }

    #[test]
    fn tan_cot_are_reciprocal(theta in rational_theta()) {
        let a = reduce(theta);
        if let (EvalResult::Finite(t), EvalResult::Finite(c)) = (tan(&a), cot(&a)) {
            if !t.is_zero() {
                prop_assert_eq!(&t * &c, Backend::Exact.int(1));
            }
        }
    }

    #[test]
    fn derivative_forms_agree(theta in rational_theta()) {
        let a = reduce(theta);
        for f in TrigFunction::ALL {
            let mut results = DERIV_STRATEGIES
                .iter()
                .filter(|s| s.supports(f))
                .map(|s| s.derivative(f, &a).expect("supported"));
            let reference = results.next().expect("direct always applies");
            for r in results {
                prop_assert_eq!(&r, &reference, "{}", f);
            }
        }
    }

    #[test]
    fn sec_derivative_magnitude_is_half_sec_squared(theta in rational_theta()) {
        let a = reduce(theta);
        if classify_differentiability(TrigFunction::Sec, &a) == Differentiability::Smooth {
            let d = taxitrig::d_sec(&a, taxitrig::DerivForm::Direct).unwrap();
            let d = d.finite().expect("smooth").abs();
            let s = sec(&a).into_finite().expect("no pole at smooth point");
            prop_assert_eq!(d, &Backend::Exact.ratio(1, 2) * &(&s * &s));
        }
    }

    #[test]
    fn sin_slope_is_half_everywhere_smooth(theta in rational_theta()) {
        let a = reduce(theta);
        if let Some(v) = d_sin(&a).finite() {
            prop_assert_eq!(v.abs(), Backend::Exact.ratio(1, 2));
        }
    }

    #[test]
    fn tan_never_has_a_corner(theta in rational_theta()) {
        let a = reduce(theta);
        prop_assert!(!d_tan(&a).is_corner());
    }

    #[test]
    fn float_reduction_stays_in_range(theta in prop::num::f64::NORMAL) {
        let a = Angle::from_f64(theta).expect("finite");
        let r = a.reduced().to_f64();
        prop_assert!((0.0..8.0).contains(&r), "reduced {theta} to {r}");
        prop_assert!((1..=4).contains(&a.branch_k()));
    }

    #[test]
    fn float_periodicity_on_dyadic_values(n in -64_000i64..64_000) {
        // Dyadic thetas keep theta and theta + 8 exactly representable, so
        // reduction must agree bit for bit.
        let theta = n as f64 / 64.0;
        let a = Angle::from_f64(theta).expect("finite");
        let b = Angle::from_f64(theta + 8.0).expect("finite");
        prop_assert_eq!(a.reduced().to_f64(), b.reduced().to_f64());
    }
}
