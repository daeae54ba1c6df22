//! SVG rendering of function plots.
//!
//! Series data is drawn inside a single transform group that maps data
//! coordinates to the viewport, so every polyline carries raw `(theta,
//! value)` coordinates: piecewise-linear functions get exact vertex
//! placement at breakpoints and the output stays easy to check by parsing
//! coordinates back out. One polyline is emitted per smooth segment, with
//! gaps at asymptotes and dashed vertical guides where they sit.

use std::fmt::Write as _;

use taxitrig::deriv::{classify_differentiability, Differentiability};
use taxitrig::series::Series;
use taxitrig::{Angle, TrigFunction};

const SCALE: f64 = 40.0;
const MARGIN: f64 = 40.0;
const AXIS_COLOR: &str = "#888888";

fn color_for(f: TrigFunction) -> &'static str {
    match f {
        TrigFunction::Sin => "#1f77b4",
        TrigFunction::Cos => "#d62728",
        TrigFunction::Tan => "#2ca02c",
        TrigFunction::Cot => "#9467bd",
        TrigFunction::Sec => "#ff7f0e",
        TrigFunction::Csc => "#8c564b",
    }
}

/// Vertical clip limit: tight around the bounded functions, wider when a
/// function with asymptotes is on the plot.
fn y_limit(functions: &[TrigFunction]) -> f64 {
    if functions
        .iter()
        .all(|f| matches!(f, TrigFunction::Sin | TrigFunction::Cos))
    {
        1.25
    } else {
        4.5
    }
}

/// Split a sampled series into smooth runs: gaps at poles, shared vertices
/// at corners (the corner point ends one run and starts the next).
fn smooth_runs(series: &Series) -> Vec<Vec<(f64, f64)>> {
    let mut runs = Vec::new();
    let mut current: Vec<(f64, f64)> = Vec::new();
    let mut flush = |run: &mut Vec<(f64, f64)>| {
        if run.len() >= 2 {
            runs.push(std::mem::take(run));
        } else {
            run.clear();
        }
    };
    for p in &series.points {
        let theta = p.theta.to_f64();
        match &p.value {
            None => flush(&mut current),
            Some(v) => {
                let a = Angle::from_f64(theta).expect("finite plot theta");
                let point = (theta, v.to_f64());
                if classify_differentiability(series.function, &a) == Differentiability::Corner {
                    current.push(point);
                    flush(&mut current);
                    current.push(point);
                } else {
                    current.push(point);
                }
            }
        }
    }
    flush(&mut current);
    runs
}

/// Clip a run against `|y| <= ylim`, interpolating the boundary crossings.
fn clip_run(run: &[(f64, f64)], ylim: f64) -> Vec<Vec<(f64, f64)>> {
    let inside = |p: (f64, f64)| p.1.abs() <= ylim;
    let crossing = |p: (f64, f64), q: (f64, f64)| {
        let bound = if (p.1 > ylim) || (q.1 > ylim) { ylim } else { -ylim };
        let t = (bound - p.1) / (q.1 - p.1);
        (p.0 + (q.0 - p.0) * t, bound)
    };
    let mut out = Vec::new();
    let mut current: Vec<(f64, f64)> = Vec::new();
    for pair in run.windows(2) {
        let (p, q) = (pair[0], pair[1]);
        match (inside(p), inside(q)) {
            (true, true) => {
                if current.is_empty() {
                    current.push(p);
                }
                current.push(q);
            }
            (true, false) => {
                if current.is_empty() {
                    current.push(p);
                }
                current.push(crossing(p, q));
                out.push(std::mem::take(&mut current));
            }
            (false, true) => {
                current.push(crossing(p, q));
                current.push(q);
            }
            (false, false) => {}
        }
    }
    if current.len() >= 2 {
        out.push(current);
    }
    out
}

fn points_attr(run: &[(f64, f64)]) -> String {
    let mut s = String::new();
    for (i, (x, y)) in run.iter().enumerate() {
        if i > 0 {
            s.push(' ');
        }
        let _ = write!(s, "{x},{y}");
    }
    s
}

/// Render one figure with all requested functions over `[from, to]`.
pub fn render_plot(functions: &[TrigFunction], from: f64, to: f64, samples: usize) -> String {
    let ylim = y_limit(functions);
    let width = (to - from) * SCALE + 2.0 * MARGIN;
    let height = 2.0 * ylim * SCALE + 2.0 * MARGIN;
    let tx = MARGIN - from * SCALE;
    let ty = MARGIN + ylim * SCALE;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(svg, r##"<rect width="{width}" height="{height}" fill="#ffffff"/>"##);
    let _ = writeln!(
        svg,
        r#"<g transform="translate({tx} {ty}) scale({SCALE} -{SCALE})" fill="none" stroke-linejoin="round" stroke-linecap="round">"#
    );

    // axes and tick marks at even thetas
    let _ = writeln!(
        svg,
        r#"<line class="axis" x1="{from}" y1="0" x2="{to}" y2="0" stroke="{AXIS_COLOR}" stroke-width="0.03"/>"#
    );
    if from <= 0.0 && to >= 0.0 {
        let _ = writeln!(
            svg,
            r#"<line class="axis" x1="0" y1="{}" x2="0" y2="{ylim}" stroke="{AXIS_COLOR}" stroke-width="0.03"/>"#,
            -ylim
        );
    }
    let mut m = 2 * (from / 2.0).ceil() as i64;
    while (m as f64) <= to {
        let _ = writeln!(
            svg,
            r#"<line class="tick" x1="{m}" y1="-0.08" x2="{m}" y2="0.08" stroke="{AXIS_COLOR}" stroke-width="0.03"/>"#
        );
        m += 2;
    }

    for &f in functions {
        let series = Series::sample_for_plot(f, from, to, samples);
        let color = color_for(f);

        if !series.asymptotes.is_empty() {
            let _ = writeln!(svg, r#"<g id="asymptotes-{}" class="asymptotes">"#, f.name());
            for t in &series.asymptotes {
                let x = t.to_f64();
                let _ = writeln!(
                    svg,
                    r#"<line class="asymptote" x1="{x}" y1="{}" x2="{x}" y2="{ylim}" stroke="{color}" stroke-width="0.025" stroke-dasharray="0.25 0.2"/>"#,
                    -ylim
                );
            }
            let _ = writeln!(svg, "</g>");
        }

        let _ = writeln!(
            svg,
            r#"<g id="series-{}" class="series" stroke="{color}" stroke-width="0.06">"#,
            f.name()
        );
        for run in smooth_runs(&series) {
            for clipped in clip_run(&run, ylim) {
                let _ = writeln!(svg, r#"<polyline points="{}"/>"#, points_attr(&clipped));
            }
        }
        let _ = writeln!(svg, "</g>");
    }
    let _ = writeln!(svg, "</g>");

    // legend in viewport coordinates (text would mirror inside the flipped group)
    for (i, &f) in functions.iter().enumerate() {
        let x = MARGIN + 90.0 * i as f64;
        let _ = writeln!(
            svg,
            r#"<line x1="{x}" y1="16" x2="{}" y2="16" stroke="{}" stroke-width="3"/>"#,
            x + 24.0,
            color_for(f)
        );
        let _ = writeln!(
            svg,
            r##"<text x="{}" y="20" font-family="sans-serif" font-size="13" fill="#333333">{}</text>"##,
            x + 30.0,
            f.name()
        );
    }
    svg.push_str("</svg>\n");
    svg
}
