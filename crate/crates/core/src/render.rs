//! SVG diagrams of fans on the junior simplex.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::fan::{label_point, Fan};
use crate::lattice::LatticePoint;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 580.0;
const MARGIN: f64 = 50.0;

/// Screen position of a ray in the triangle with e₁ at the top, e₂ bottom left, e₃ bottom right.
pub fn project(p: &LatticePoint) -> (f64, f64) {
    let [x, y, z] = p.0.map(|c| c as f64);
    let s = x + y + z;
    let (a, b, c) = (x / s, y / s, z / s);
    let side = WIDTH - 2.0 * MARGIN;
    let top = (WIDTH / 2.0, MARGIN);
    let left = (MARGIN, MARGIN + side * 3f64.sqrt() / 2.0);
    let right = (WIDTH - MARGIN, left.1);
    (a * top.0 + b * left.0 + c * right.0, a * top.1 + b * left.1 + c * right.1)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// One shaded polygon per cone, one segment per cone edge, one labeled dot per ray.
pub fn render_svg(fan: &Fan) -> String {
    let g = fan.group();
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(out, "  <title>{}</title>", escape(&g.to_string()));
    let mut edges: BTreeSet<(LatticePoint, LatticePoint)> = BTreeSet::new();
    for cone in fan.cones() {
        let pts: Vec<String> = cone
            .rays()
            .iter()
            .map(|p| {
                let (x, y) = project(p);
                format!("{x:.2},{y:.2}")
            })
            .collect();
        let _ = writeln!(out, r##"  <polygon class="cone" points="{}" fill="#eef3fb" stroke="none"/>"##, pts.join(" "));
        for (p, q) in cone.edges() {
            edges.insert(if p <= q { (p, q) } else { (q, p) });
        }
    }
    for (p, q) in &edges {
        let ((x1, y1), (x2, y2)) = (project(p), project(q));
        let _ = writeln!(
            out,
            r#"  <line class="edge" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="black" stroke-width="1.2"/>"#
        );
    }
    for p in fan.rays() {
        let (x, y) = project(p);
        let label = escape(&label_point(g, p));
        let _ = writeln!(out, r#"  <g class="ray">"#);
        let _ = writeln!(out, r#"    <circle cx="{x:.2}" cy="{y:.2}" r="3.5" fill="black"/>"#);
        let _ = writeln!(
            out,
            r#"    <text x="{:.2}" y="{:.2}" font-family="serif" font-size="13">{label}</text>"#,
            x + 6.0,
            y - 6.0
        );
        let _ = writeln!(out, "  </g>");
    }
    out.push_str("</svg>\n");
    out
}
