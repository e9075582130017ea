//! Minimal static SVG rendering of curve tables.

use std::fmt::Write as _;
use std::path::Path;

use classleak::{CurveKind, CurveTable};

const SIZE: f64 = 480.0;
const MARGIN: f64 = 56.0;
const MAX_POINTS: usize = 4000;
const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
];

fn axis_labels(kind: CurveKind) -> (&'static str, &'static str) {
    match kind {
        CurveKind::Roc => ("false positive rate", "true positive rate"),
        CurveKind::Pr => ("recall", "precision"),
        CurveKind::Leakage => ("u", "G(u)"),
    }
}

fn px(x: f64) -> f64 {
    MARGIN + x * (SIZE - 2.0 * MARGIN)
}

fn py(y: f64) -> f64 {
    SIZE - MARGIN - y * (SIZE - 2.0 * MARGIN)
}

/// Renders the tables on shared unit axes. `None` when there is nothing to
/// draw.
pub fn render(series: &[(String, &CurveTable)], title: &str) -> Option<String> {
    let kind = series.first()?.1.kind;
    let (xlabel, ylabel) = axis_labels(kind);
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}" font-family="sans-serif" font-size="11">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<text x="{}" y="20" text-anchor="middle" font-size="13">{}</text>"#,
        SIZE / 2.0,
        escape(title)
    );
    for i in 0..=4 {
        let t = i as f64 / 4.0;
        let _ = writeln!(
            s,
            r##"<line x1="{x}" y1="{y0}" x2="{x}" y2="{y1}" stroke="#eee"/><line x1="{x0}" y1="{y}" x2="{x1}" y2="{y}" stroke="#eee"/>"##,
            x = px(t),
            y = py(t),
            x0 = px(0.0),
            x1 = px(1.0),
            y0 = py(0.0),
            y1 = py(1.0),
        );
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" text-anchor="middle">{t}</text><text x="{}" y="{}" text-anchor="end">{t}</text>"#,
            px(t),
            py(0.0) + 16.0,
            px(0.0) - 6.0,
            py(t) + 4.0,
        );
    }
    let _ = writeln!(
        s,
        r##"<rect x="{}" y="{}" width="{w}" height="{w}" fill="none" stroke="#333"/>"##,
        px(0.0),
        py(1.0),
        w = SIZE - 2.0 * MARGIN
    );
    if kind != CurveKind::Pr {
        let _ = writeln!(
            s,
            r##"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#999" stroke-dasharray="4 3"/>"##,
            px(0.0),
            py(0.0),
            px(1.0),
            py(1.0)
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" text-anchor="middle">{xlabel}</text>"#,
        SIZE / 2.0,
        SIZE - 16.0
    );
    let _ = writeln!(
        s,
        r#"<text x="16" y="{}" text-anchor="middle" transform="rotate(-90 16 {})">{ylabel}</text>"#,
        SIZE / 2.0,
        SIZE / 2.0
    );

    for (i, (label, table)) in series.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let stride = table.points.len().div_ceil(MAX_POINTS).max(1);
        let last = table.points.len().saturating_sub(1);
        let mut path = String::new();
        for (j, p) in table.points.iter().enumerate() {
            if (j % stride != 0 && j != last) || !p.x.is_finite() || !p.y.is_finite() {
                continue;
            }
            let _ = write!(path, "{:.2},{:.2} ", px(p.x), py(p.y));
        }
        let _ = writeln!(
            s,
            r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="1.5"/>"#,
            path.trim_end()
        );
        let ly = MARGIN + 14.0 * i as f64 + 8.0;
        let lx = SIZE - MARGIN - 110.0;
        let _ = writeln!(
            s,
            r#"<line x1="{lx}" y1="{ly}" x2="{}" y2="{ly}" stroke="{color}" stroke-width="2"/><text x="{}" y="{}">{}</text>"#,
            lx + 16.0,
            lx + 20.0,
            ly + 4.0,
            escape(label)
        );
    }
    s.push_str("</svg>\n");
    Some(s)
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// Renders and writes a plot. Failures are reported on stderr only.
pub fn emit(path: &Path, series: &[(String, &CurveTable)], title: &str) {
    let Some(svg) = render(series, title) else {
        eprintln!("warning: nothing to plot for {}", path.display());
        return;
    };
    if let Err(e) = std::fs::write(path, svg) {
        eprintln!("warning: could not write plot {}: {e}", path.display());
    }
}
