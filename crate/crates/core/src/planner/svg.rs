use std::fmt::Write;

use super::SampledPath;

const PALETTE: [&str; 10] =
    ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"];
const SIZE: f64 = 480.0;
const PAD: f64 = 24.0;

/// One polyline per particle, a circle at its start and a cross at its goal.
/// Colors cycle through a fixed palette by particle index.
pub fn render_svg(path: &SampledPath) -> String {
    let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
    for p in path.frames.iter().flatten() {
        for k in 0..2 {
            lo[k] = lo[k].min(p[k]);
            hi[k] = hi[k].max(p[k]);
        }
    }
    let span = (hi[0] - lo[0]).max(hi[1] - lo[1]).max(1e-12);
    let scale = (SIZE - 2.0 * PAD) / span;
    // y grows upward in the plane, downward in SVG
    let map = |p: [f64; 2]| (PAD + (p[0] - lo[0]) * scale, SIZE - PAD - (p[1] - lo[1]) * scale);

    let mut out = String::new();
    let _ = writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#);
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    for i in 0..path.n {
        let color = PALETTE[i % PALETTE.len()];
        let points: Vec<String> = path
            .frames
            .iter()
            .map(|f| {
                let (x, y) = map(f[i]);
                format!("{x:.3},{y:.3}")
            })
            .collect();
        let _ = writeln!(out, r#"<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{}"/>"#, points.join(" "));
        let (sx, sy) = map(path.first()[i]);
        let _ = writeln!(out, r#"<circle cx="{sx:.3}" cy="{sy:.3}" r="5" fill="none" stroke="{color}" stroke-width="2"/>"#);
        let (gx, gy) = map(path.last()[i]);
        let _ = writeln!(
            out,
            r#"<path d="M{:.3},{:.3} L{:.3},{:.3} M{:.3},{:.3} L{:.3},{:.3}" stroke="{color}" stroke-width="2"/>"#,
            gx - 5.0,
            gy - 5.0,
            gx + 5.0,
            gy + 5.0,
            gx - 5.0,
            gy + 5.0,
            gx + 5.0,
            gy - 5.0
        );
    }
    out.push_str("</svg>\n");
    out
}
