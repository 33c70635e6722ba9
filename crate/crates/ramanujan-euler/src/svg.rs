//! Plain-text SVG emission for the two plots the CLI offers: the angle
//! histogram with the model density overlaid, and the zero-cloud scatter.
//! No plotting dependency; the files are small and self-contained.

use std::fmt::Write;

use crate::boundary::ZeroCloudPoint;
use crate::satotate::SatoTateReport;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 500.0;
const MARGIN: f64 = 50.0;

/// Histogram of angles as density bars with the model density
/// `(2/pi) sin^2(theta)` drawn on top.
pub fn histogram_svg(report: &SatoTateReport) -> String {
    let pi = std::f64::consts::PI;
    let plot_w = WIDTH - 2.0 * MARGIN;
    let plot_h = HEIGHT - 2.0 * MARGIN;

    // Densities, so the bars and the curve share a scale.
    let total = report.total as f64;
    let densities: Vec<f64> = report
        .bins
        .iter()
        .map(|b| b.count as f64 / (total * (b.hi - b.lo)))
        .collect();
    let peak = densities
        .iter()
        .copied()
        .fold(2.0 / pi, f64::max)
        .max(1e-9);

    let x_of = |theta: f64| MARGIN + theta / pi * plot_w;
    let y_of = |density: f64| MARGIN + plot_h * (1.0 - density / (1.1 * peak));

    let mut svg = svg_header("angle histogram against the sin^2 density");
    // Bars.
    for (bin, density) in report.bins.iter().zip(&densities) {
        let x = x_of(bin.lo);
        let w = x_of(bin.hi) - x;
        let y = y_of(*density);
        let h = y_of(0.0) - y;
        let _ = writeln!(
            svg,
            r##"  <rect x="{x:.2}" y="{y:.2}" width="{w:.2}" height="{h:.2}" fill="#7aa6c2" stroke="#41708f" stroke-width="0.5"/>"##
        );
    }
    // Model density curve.
    let mut path = String::new();
    for i in 0..=256 {
        let theta = pi * i as f64 / 256.0;
        let density = 2.0 / pi * theta.sin().powi(2);
        let cmd = if i == 0 { 'M' } else { 'L' };
        let _ = write!(path, "{cmd}{:.2},{:.2} ", x_of(theta), y_of(density));
    }
    let _ = writeln!(
        svg,
        r##"  <path d="{path}" fill="none" stroke="#b03a2e" stroke-width="2"/>"##
    );
    axes(&mut svg, "theta", "density");
    let _ = writeln!(
        svg,
        r##"  <text x="{:.0}" y="{:.0}" font-size="13" fill="#333">n = {}, sup-distance = {:.5}</text>"##,
        MARGIN + 8.0,
        MARGIN - 10.0,
        report.total,
        report.sup_distance
    );
    svg.push_str("</svg>\n");
    svg
}

/// Scatter of `(sigma, t)` for a zero cloud; the axis `sigma = 0` is drawn
/// through the middle.
pub fn scatter_svg(points: &[ZeroCloudPoint]) -> String {
    let plot_w = WIDTH - 2.0 * MARGIN;
    let plot_h = HEIGHT - 2.0 * MARGIN;
    let sigma_span = points
        .iter()
        .map(|p| p.sigma.abs())
        .fold(1e-6, f64::max)
        * 1.1;
    let t_span = points.iter().map(|p| p.t.abs()).fold(1e-6, f64::max) * 1.1;

    let x_of = |sigma: f64| MARGIN + (sigma + sigma_span) / (2.0 * sigma_span) * plot_w;
    let y_of = |t: f64| MARGIN + (1.0 - (t + t_span) / (2.0 * t_span)) * plot_h;

    let mut svg = svg_header("zero cloud in the s-plane");
    // The vertical line sigma = 0.
    let _ = writeln!(
        svg,
        r##"  <line x1="{x:.2}" y1="{y1:.2}" x2="{x:.2}" y2="{y2:.2}" stroke="#b03a2e" stroke-width="1.5" stroke-dasharray="6 3"/>"##,
        x = x_of(0.0),
        y1 = MARGIN,
        y2 = MARGIN + plot_h
    );
    for p in points {
        let _ = writeln!(
            svg,
            r##"  <circle cx="{:.2}" cy="{:.2}" r="2.2" fill="#2e6f95" fill-opacity="0.55"/>"##,
            x_of(p.sigma),
            y_of(p.t)
        );
    }
    axes(&mut svg, "sigma", "t");
    let _ = writeln!(
        svg,
        r##"  <text x="{:.0}" y="{:.0}" font-size="13" fill="#333">{} points, |sigma| &lt;= {:.4}</text>"##,
        MARGIN + 8.0,
        MARGIN - 10.0,
        points.len(),
        sigma_span / 1.1
    );
    svg.push_str("</svg>\n");
    svg
}

fn svg_header(title: &str) -> String {
    format!(
        concat!(
            r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {w} {h}" width="{w}" height="{h}">"#,
            "\n",
            r##"  <rect width="{w}" height="{h}" fill="#fdfdfd"/>"##,
            "\n",
            "  <title>{title}</title>\n"
        ),
        w = WIDTH,
        h = HEIGHT,
        title = title
    )
}

fn axes(svg: &mut String, x_label: &str, y_label: &str) {
    let x0 = MARGIN;
    let x1 = WIDTH - MARGIN;
    let y0 = HEIGHT - MARGIN;
    let y1 = MARGIN;
    let _ = writeln!(
        svg,
        r##"  <line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}" stroke="#333" stroke-width="1"/>"##
    );
    let _ = writeln!(
        svg,
        r##"  <line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}" stroke="#333" stroke-width="1"/>"##
    );
    let _ = writeln!(
        svg,
        r##"  <text x="{:.0}" y="{:.0}" font-size="13" fill="#333">{x_label}</text>"##,
        x1 - 40.0,
        y0 + 30.0
    );
    let _ = writeln!(
        svg,
        r##"  <text x="{:.0}" y="{:.0}" font-size="13" fill="#333">{y_label}</text>"##,
        x0 - 35.0,
        y1 + 10.0
    );
}

/// Cheap structural check used by tests: every emitted file must be one
/// `<svg>` element with a closing tag.
pub fn looks_like_svg(text: &str) -> bool {
    text.starts_with("<svg") && text.trim_end().ends_with("</svg>")
}
