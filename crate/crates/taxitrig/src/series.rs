//! Sampled function data for tables and plots.
//!
//! A [`Series`] is an ordered sweep of one function over a theta range,
//! with the branch breakpoints and asymptote locations in the range
//! annotated so emitters can place exact vertices and gaps.

use crate::angle::Angle;
use crate::functions::TrigFunction;
use crate::scalar::{Backend, Scalar};

/// One sampled point; `value` is `None` exactly at a pole.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesPoint {
    pub theta: Scalar,
    pub value: Option<Scalar>,
}

/// Sampled `(theta, value)` data for one function.
#[derive(Clone, Debug)]
pub struct Series {
    pub function: TrigFunction,
    /// Strictly increasing in theta.
    pub points: Vec<SeriesPoint>,
    /// Branch-change thetas (multiples of 2) strictly inside the range.
    pub segment_breaks: Vec<Scalar>,
    /// Pole locations of the function within the range.
    pub asymptotes: Vec<Scalar>,
}

/// Even integers `m` with `from <= m <= to` (endpoints included only when
/// `inclusive` is set; otherwise strictly inside).
fn even_integers_between(from: f64, to: f64, inclusive: bool) -> Vec<i64> {
    let mut out = Vec::new();
    let mut m = 2 * (from / 2.0).floor() as i64 - 2;
    while (m as f64) <= to + 2.0 {
        let v = m as f64;
        let ok = if inclusive {
            v >= from && v <= to
        } else {
            v > from && v < to
        };
        if ok {
            out.push(m);
        }
        m += 2;
    }
    out
}

fn is_pole_of(f: TrigFunction, m: i64) -> bool {
    f.poles_mod8().contains(&m.rem_euclid(8))
}

impl Series {
    /// Sample on the half-open grid `from, from + step, ... < to` in the
    /// backend of the inputs. Poles produce rows with `value = None` so the
    /// grid stays intact for consumers.
    pub fn sample_grid(f: TrigFunction, from: &Scalar, to: &Scalar, step: &Scalar) -> Series {
        let mut points = Vec::new();
        let mut theta = from.clone();
        while &theta < to {
            let a = Angle::reduce(theta.clone()).expect("finite grid theta");
            points.push(SeriesPoint {
                theta: theta.clone(),
                value: f.eval(&a).into_finite(),
            });
            theta = &theta + step;
        }
        let backend = from.backend();
        let (lo, hi) = (from.to_f64(), to.to_f64());
        Series {
            function: f,
            points,
            segment_breaks: even_integers_between(lo, hi, false)
                .into_iter()
                .map(|m| backend.int(m))
                .collect(),
            asymptotes: even_integers_between(lo, hi, true)
                .into_iter()
                .filter(|&m| is_pole_of(f, m) && (m as f64) < hi)
                .map(|m| backend.int(m))
                .collect(),
        }
    }

    /// Sample for plotting: `samples` uniform float points over the closed
    /// range plus every breakpoint in range, so piecewise-linear functions
    /// get exact vertices.
    pub fn sample_for_plot(f: TrigFunction, from: f64, to: f64, samples: usize) -> Series {
        let samples = samples.max(2);
        let span = to - from;
        let mut thetas: Vec<f64> = (0..=samples)
            .map(|i| from + span * (i as f64) / (samples as f64))
            .collect();
        for m in even_integers_between(from, to, true) {
            thetas.push(m as f64);
        }
        thetas.sort_by(|a, b| a.partial_cmp(b).expect("finite thetas"));
        thetas.dedup();

        let points = thetas
            .into_iter()
            .map(|t| {
                let a = Angle::from_f64(t).expect("finite plot theta");
                SeriesPoint {
                    theta: Scalar::Float(t),
                    value: f.eval(&a).into_finite(),
                }
            })
            .collect();
        Series {
            function: f,
            points,
            segment_breaks: even_integers_between(from, to, false)
                .into_iter()
                .map(|m| Backend::Float.int(m))
                .collect(),
            asymptotes: even_integers_between(from, to, true)
                .into_iter()
                .filter(|&m| is_pole_of(f, m))
                .map(|m| Backend::Float.int(m))
                .collect(),
        }
    }
}
