//! Acceptance suite: one test per release criterion, library-level checks
//! first, then the CLI/SVG contract through the built binary. Each test
//! prints a PASS line (visible with `--nocapture`) once its criterion
//! holds.

use std::process::Command;

use taxitrig::deriv::{
    classify_differentiability, d_cos, d_cot, d_csc, d_sec, d_sin, d_tan,
    derivative_via_quotient_rule, DerivForm, DerivResult, Differentiability,
};
use taxitrig::forms::{
    cos_closed_literal_complex, sin_closed_literal_complex, SIN_COS_FORMS,
};
use taxitrig::functions::{cos, sec, sin, tan, EvalResult};
use taxitrig::verify::{
    backward_difference, finite_difference, float_sample_points, forward_difference,
    run_derivative_sweep, run_equivalence_sweep, run_identity_suite, GridSpec, Tolerances,
};
use taxitrig::{Angle, Backend, Scalar, TrigFunction};

fn reduce(theta: Scalar) -> Angle {
    Angle::reduce(theta).expect("finite")
}

fn exact(n: i64) -> Scalar {
    Backend::Exact.int(n)
}

fn ratio(n: i64, d: i64) -> Scalar {
    Backend::Exact.ratio(n, d)
}

fn default_grid() -> GridSpec {
    GridSpec::new(exact(-16), exact(16), ratio(1, 128)).unwrap()
}

#[test]
fn criterion_1_representation_equivalence() {
    let grid = default_grid();
    let report = run_equivalence_sweep(&grid);
    assert_eq!(report.points_checked, 4096);
    assert!(report.passed(), "{report}\nfirst: {:?}", report.failures.first());
    assert_eq!(report.max_abs_error, 0.0);

    // The literal closed form's imaginary component is exactly zero at
    // every grid point.
    for theta in grid.points() {
        let a = reduce(theta);
        assert!(cos_closed_literal_complex(&a).im.is_zero());
        assert!(sin_closed_literal_complex(&a).im.is_zero());
    }
    println!("PASS criterion 1: piecewise/literal/pseudo agree exactly on 4096 points, literal imaginary part zero");
}

#[test]
fn criterion_2_anchor_values() {
    let expected_cos = [(0, 1), (2, 0), (4, -1), (6, 0)];
    let expected_sin = [(0, 0), (2, 1), (4, 0), (6, -1)];
    for (theta, want) in expected_cos {
        assert_eq!(cos(&reduce(exact(theta))), exact(want), "cos({theta})");
    }
    for (theta, want) in expected_sin {
        assert_eq!(sin(&reduce(exact(theta))), exact(want), "sin({theta})");
    }

    // First-branch check: cos = 1 - theta/2, sin = theta/2 on [0, 2), in
    // every representation.
    for n in 0..256 {
        let theta = ratio(n, 128);
        let a = reduce(theta.clone());
        let half_theta = &theta / &exact(2);
        for form in SIN_COS_FORMS {
            assert_eq!(form.cos(&a), &exact(1) - &half_theta, "cos via {}", form.name());
            assert_eq!(form.sin(&a), half_theta.clone(), "sin via {}", form.name());
        }
    }
    println!("PASS criterion 2: anchor values and first-branch expressions reproduced exactly");
}

#[test]
fn criterion_3_derivative_identities_exact() {
    let grid = default_grid();
    let half = ratio(1, 2);
    let mut smooth_points = 0usize;
    for theta in grid.points() {
        let a = reduce(theta.clone());

        // All applicable forms agree everywhere, including corner/pole
        // classification.
        for f in TrigFunction::ALL {
            let direct = taxitrig::derivative(f, &a, DerivForm::Direct).unwrap();
            for form in [DerivForm::Product, DerivForm::Squared, DerivForm::Quotient] {
                match taxitrig::derivative(f, &a, form) {
                    Ok(other) => assert_eq!(other, direct, "{f} {form} at {theta}"),
                    Err(_) => assert!(matches!(
                        (f, form),
                        (TrigFunction::Sin | TrigFunction::Cos, _)
                            | (TrigFunction::Tan | TrigFunction::Cot, DerivForm::Product)
                    )),
                }
            }
        }

        // Closed-form identities at smooth points, zero tolerance.
        if let Some(d) = d_tan(&a).finite() {
            let s = sec(&a).into_finite().expect("tan finite implies sec finite");
            assert_eq!(d, &(&half * &(&s * &s)), "d_tan = sec^2/2 at {theta}");
        }
        if let Some(d) = d_cot(&a).finite() {
            let s = taxitrig::csc(&a).into_finite().expect("cot finite implies csc finite");
            assert_eq!(d, &(-&(&half * &(&s * &s))), "d_cot = -csc^2/2 at {theta}");
        }
        if classify_differentiability(TrigFunction::Sec, &a) == Differentiability::Smooth {
            smooth_points += 1;
            let product = d_sec(&a, DerivForm::Product).unwrap();
            let squared = d_sec(&a, DerivForm::Squared).unwrap();
            let quotient = derivative_via_quotient_rule(TrigFunction::Sec, &a).unwrap();
            assert_eq!(product, squared, "sec product vs squared at {theta}");
            assert_eq!(product, quotient, "sec product vs quotient at {theta}");
        }
        if classify_differentiability(TrigFunction::Csc, &a) == Differentiability::Smooth {
            let product = d_csc(&a, DerivForm::Product).unwrap();
            let squared = d_csc(&a, DerivForm::Squared).unwrap();
            let quotient = derivative_via_quotient_rule(TrigFunction::Csc, &a).unwrap();
            assert_eq!(product, squared, "csc product vs squared at {theta}");
            assert_eq!(product, quotient, "csc product vs quotient at {theta}");
        }
    }
    assert!(smooth_points > 4000);
    println!("PASS criterion 3: derivative identities exact at every grid point (zero tolerance)");
}

#[test]
fn criterion_4_finite_difference_oracle() {
    let h = 1e-6;
    let tol = 1e-6;
    let points = float_sample_points(-16.0, 16.0, 1000, 1e-3);
    assert_eq!(points.len(), 1000);
    let mut comparisons = 0usize;
    for &theta in &points {
        let a = Angle::from_f64(theta).unwrap();
        for f in TrigFunction::ALL {
            assert_eq!(
                classify_differentiability(f, &a),
                Differentiability::Smooth,
                "sample points stay off the breakpoints"
            );
            let analytic = taxitrig::derivative(f, &a, DerivForm::Direct)
                .unwrap()
                .finite()
                .expect("smooth")
                .to_f64();
            let estimate = finite_difference(f, theta, h).expect("oracle applies at smooth points");
            let err = (analytic - estimate).abs();
            assert!(
                err <= tol || err <= tol * analytic.abs(),
                "{f} at {theta}: analytic {analytic}, oracle {estimate}"
            );
            comparisons += 1;
        }
    }
    assert_eq!(comparisons, 6000);
    println!("PASS criterion 4: analytic derivatives match the central-difference oracle at 1000 float points x 6 functions");
}

#[test]
fn criterion_5_corner_classification() {
    let h = 1e-6;
    let tol = 1e-6;
    // (function, corner residues, pole residues)
    let table: [(TrigFunction, &[i64], &[i64]); 4] = [
        (TrigFunction::Sin, &[2, 6], &[]),
        (TrigFunction::Cos, &[0, 4], &[]),
        (TrigFunction::Sec, &[0, 4], &[2, 6]),
        (TrigFunction::Csc, &[2, 6], &[0, 4]),
    ];
    for shift in [-8i64, 0, 8] {
        for residue in [0i64, 2, 4, 6] {
            let theta = residue + shift;
            let a = reduce(exact(theta));
            for (f, corners, poles) in table {
                let want = if corners.contains(&residue) {
                    Differentiability::Corner
                } else if poles.contains(&residue) {
                    Differentiability::Pole
                } else {
                    Differentiability::Smooth
                };
                assert_eq!(classify_differentiability(f, &a), want, "{f} at {theta}");

                if want == Differentiability::Corner {
                    let d = taxitrig::derivative(f, &a, DerivForm::Direct).unwrap();
                    let DerivResult::Corner { left, right } = d else {
                        panic!("{f} at {theta} must report a corner")
                    };
                    let back = backward_difference(f, theta as f64, h).unwrap();
                    let fwd = forward_difference(f, theta as f64, h).unwrap();
                    assert!((left.to_f64() - back).abs() <= tol, "{f} left at {theta}");
                    assert!((right.to_f64() - fwd).abs() <= tol, "{f} right at {theta}");
                }
            }
        }
    }
    println!("PASS criterion 5: corner/pole placement and one-sided values match one-sided quotients");
}

#[test]
fn criterion_6_identity_suite() {
    let report = run_identity_suite(&default_grid());
    assert!(report.passed(), "{report}\nfirst: {:?}", report.failures.first());

    // Named quadrant anchor points.
    let one = exact(1);
    let a3 = reduce(exact(3));
    let t3 = tan(&a3).into_finite().unwrap();
    let s3 = sec(&a3).into_finite().unwrap();
    assert_eq!(&(-&t3) + &one, exact(2));
    assert_eq!(&(-&t3) + &one, -&s3, "QII: -tan + 1 = -sec");

    let a7 = reduce(exact(7));
    let t7 = tan(&a7).into_finite().unwrap();
    let s7 = sec(&a7).into_finite().unwrap();
    assert_eq!(&(-&t7) + &one, exact(2));
    assert_eq!(&(-&t7) + &one, s7, "QIV: -tan + 1 = sec");

    let a1 = reduce(exact(1));
    assert_eq!(&sin(&a1).abs() + &cos(&a1).abs(), one);
    println!("PASS criterion 6: unit-circle, quadrant, reciprocal, and periodicity identities hold exactly");
}

#[test]
fn criterion_7_calculus_structure_claims() {
    // The Euclidean derivative pairing is lost: there are angles where
    // d_sin != cos and d_cos != -sin.
    let a = reduce(ratio(1, 2));
    let ds = d_sin(&a).finite().unwrap().clone();
    assert_eq!(ds, ratio(1, 2));
    assert_eq!(cos(&a), ratio(3, 4));
    assert_ne!(ds, cos(&a));
    let dc = d_cos(&a).finite().unwrap().clone();
    assert_eq!(dc, ratio(-1, 2));
    assert_ne!(dc, -sin(&a));

    // The secant derivative is proportional to the square of secant:
    // |d_sec| = 1/2 sec^2 exactly at every smooth grid point.
    let half = ratio(1, 2);
    for theta in default_grid().points() {
        let a = reduce(theta.clone());
        if classify_differentiability(TrigFunction::Sec, &a) != Differentiability::Smooth {
            continue;
        }
        let d = d_sec(&a, DerivForm::Direct).unwrap();
        let s = sec(&a).into_finite().unwrap();
        assert_eq!(
            d.finite().unwrap().abs(),
            &half * &(&s * &s),
            "at {theta}"
        );
    }
    println!("PASS criterion 7: lost sine/cosine pairing witnessed; |d_sec| = sec^2/2 at all smooth points");
}

// ---------------------------------------------------------------------------
// Criterion 8: CLI contract
// ---------------------------------------------------------------------------

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_taxitrig"))
}

fn render(args: &[&str], out_name: &str) -> String {
    let path = std::env::temp_dir().join(format!("taxitrig-accept-{}-{out_name}", std::process::id()));
    let status = bin()
        .args(args)
        .arg("--out")
        .arg(&path)
        .status()
        .expect("spawn taxitrig");
    assert!(status.success(), "plot command failed");
    let svg = std::fs::read_to_string(&path).expect("read svg");
    let _ = std::fs::remove_file(&path);
    svg
}

/// Polylines of one function's series group, as data-coordinate points.
fn series_polylines(svg: &str, name: &str) -> Vec<Vec<(f64, f64)>> {
    let marker = format!("id=\"series-{name}\"");
    let start = svg.find(&marker).unwrap_or_else(|| panic!("missing series group {name}"));
    let body = &svg[start..start + svg[start..].find("</g>").expect("closed group")];
    let mut polylines = Vec::new();
    for (i, _) in body.match_indices("points=\"") {
        let rest = &body[i + "points=\"".len()..];
        let attr = &rest[..rest.find('"').expect("closed attribute")];
        let points = attr
            .split_whitespace()
            .map(|pair| {
                let (x, y) = pair.split_once(',').expect("x,y pair");
                (x.parse::<f64>().unwrap(), y.parse::<f64>().unwrap())
            })
            .collect::<Vec<_>>();
        polylines.push(points);
    }
    assert!(!polylines.is_empty(), "series {name} has no polylines");
    polylines
}

/// x positions of the dashed asymptote guides for one function.
fn asymptote_positions(svg: &str, name: &str) -> Vec<f64> {
    let marker = format!("id=\"asymptotes-{name}\"");
    let start = svg.find(&marker).unwrap_or_else(|| panic!("missing asymptote group {name}"));
    let body = &svg[start..start + svg[start..].find("</g>").expect("closed group")];
    body.match_indices("x1=\"")
        .map(|(i, _)| {
            let rest = &body[i + 4..];
            rest[..rest.find('"').unwrap()].parse::<f64>().unwrap()
        })
        .collect()
}

/// The value of a series at an exactly-sampled theta.
fn vertex_value(polylines: &[Vec<(f64, f64)>], theta: f64) -> f64 {
    for line in polylines {
        if let Some((_, y)) = line.iter().find(|(x, _)| *x == theta) {
            return *y;
        }
    }
    panic!("no vertex at theta = {theta}");
}

#[test]
fn criterion_8_cli_contract() {
    // Figure 1 analogue: sine and cosine sawtooths with vertices at even
    // thetas and slopes +-1/2 everywhere.
    let svg = render(&["plot", "sin", "cos", "--from", "0", "--to", "16"], "f1.svg");
    let sin_lines = series_polylines(&svg, "sin");
    let cos_lines = series_polylines(&svg, "cos");
    for (theta, want) in [(0.0, 0.0), (2.0, 1.0), (4.0, 0.0), (6.0, -1.0), (8.0, 0.0), (10.0, 1.0), (16.0, 0.0)] {
        assert_eq!(vertex_value(&sin_lines, theta), want, "sin vertex at {theta}");
    }
    for (theta, want) in [(0.0, 1.0), (2.0, 0.0), (4.0, -1.0), (6.0, 0.0), (8.0, 1.0), (16.0, 1.0)] {
        assert_eq!(vertex_value(&cos_lines, theta), want, "cos vertex at {theta}");
    }
    for lines in [&sin_lines, &cos_lines] {
        for line in lines.iter() {
            for pair in line.windows(2) {
                let slope = (pair[1].1 - pair[0].1) / (pair[1].0 - pair[0].0);
                assert_eq!(slope.abs(), 0.5, "piecewise-linear slope between {pair:?}");
            }
        }
    }

    // Figure 2 analogue: tangent branches separated by asymptotes at 2, 6.
    let svg = render(&["plot", "tan", "--from", "0", "--to", "8"], "f2.svg");
    let mut guides = asymptote_positions(&svg, "tan");
    guides.sort_by(f64::total_cmp);
    assert_eq!(guides, vec![2.0, 6.0]);
    for line in series_polylines(&svg, "tan") {
        for (x, _) in line {
            assert!(x != 2.0 && x != 6.0, "no tangent vertex on an asymptote");
        }
    }

    // Figure 3 analogue: secant corners touch the cosine extrema at 0, 4.
    let svg = render(&["plot", "sec", "cos", "--from", "0", "--to", "8"], "f3.svg");
    let sec_lines = series_polylines(&svg, "sec");
    let cos_lines = series_polylines(&svg, "cos");
    for (theta, want) in [(0.0, 1.0), (4.0, -1.0), (8.0, 1.0)] {
        assert_eq!(vertex_value(&sec_lines, theta), want, "sec corner at {theta}");
        assert_eq!(vertex_value(&cos_lines, theta), want, "cos extremum at {theta}");
    }
    let mut guides = asymptote_positions(&svg, "sec");
    guides.sort_by(f64::total_cmp);
    assert_eq!(guides, vec![2.0, 6.0]);

    // `verify` exits 0 on defaults.
    let status = bin().arg("verify").status().expect("spawn taxitrig");
    assert!(status.success(), "verify must exit 0 on defaults");

    println!("PASS criterion 8: plotted figures match the expected vertex/asymptote structure; verify exits 0");
}

#[test]
fn acceptance_sweep_reports_are_within_tolerance() {
    // The derivative sweep's float-oracle comparisons stay inside the
    // default tolerances over the full acceptance grid.
    let report = run_derivative_sweep(&default_grid(), &Tolerances::default());
    assert!(report.passed(), "{report}\nfirst: {:?}", report.failures.first());
    assert!(report.max_rel_error <= 1e-6);

    // EvalResult/DerivResult classification is consistent across backends
    // at the breakpoints.
    for theta in [0i64, 2, 4, 6] {
        let e = reduce(exact(theta));
        let f = Angle::from_f64(theta as f64).unwrap();
        for func in TrigFunction::ALL {
            assert_eq!(
                func.eval(&e).is_pole(),
                func.eval(&f).is_pole(),
                "{func} at {theta}"
            );
            assert_eq!(
                matches!(func.eval(&e), EvalResult::Pole),
                func.has_pole_at(&e)
            );
        }
    }
}
