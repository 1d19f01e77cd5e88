//! SVG drawings of patterns: a dotted unit grid, the outline of `λ`, each
//! Dyck path as a polyline through its box centres and each bullet as a disk.
//!
//! Row 1 is drawn at the bottom. Box `(x, y)` covers `[x−1, x] × [y−1, y]`.

use std::fmt::Write as _;

use crate::dyck::DyckPattern;
use crate::partition::Partition;

/// Pixels per unit box.
const UNIT: u32 = 20;
const MARGIN: u32 = 10;

/// Renders `pattern` over `λ` in a grid of at least `cols × rows` boxes,
/// enlarged to hold `λ` and the pattern with one spare column and row.
pub fn render_svg(lambda: &Partition, pattern: &DyckPattern, cols: u32, rows: u32) -> String {
    let (ex, ey) = pattern.extent();
    let cols = cols.max(ex.max(lambda.part(1)) + 1);
    let rows = rows.max(ey.max(lambda.length() as u32) + 1);
    let (w, h) = (cols * UNIT + 2 * MARGIN, rows * UNIT + 2 * MARGIN);
    // grid point (x, y) in box units to SVG coordinates, y pointing up
    let pt = |x: f64, y: f64| {
        let sx = MARGIN as f64 + x * UNIT as f64;
        let sy = (MARGIN + rows * UNIT) as f64 - y * UNIT as f64;
        format!("{sx},{sy}")
    };
    let mut svg = String::new();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {w} {h}" width="{w}" height="{h}">"#
    )
    .unwrap();
    svg.push_str("<g class=\"grid\" stroke=\"#888\" stroke-width=\"0.5\" stroke-dasharray=\"1,2\">\n");
    for x in 0..=cols {
        writeln!(svg, r#"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}"/>"#, MARGIN + x * UNIT, MARGIN, MARGIN + rows * UNIT)
            .unwrap();
    }
    for y in 0..=rows {
        writeln!(svg, r#"<line x1="{1}" y1="{0}" x2="{2}" y2="{0}"/>"#, MARGIN + y * UNIT, MARGIN, MARGIN + cols * UNIT)
            .unwrap();
    }
    svg.push_str("</g>\n");

    if !lambda.is_empty() {
        let mut corners = vec![pt(0.0, 0.0)];
        for (i, part) in lambda.parts().iter().enumerate() {
            corners.push(pt(*part as f64, i as f64));
            corners.push(pt(*part as f64, i as f64 + 1.0));
        }
        corners.push(pt(0.0, lambda.length() as f64));
        writeln!(
            svg,
            r#"<polygon class="partition" points="{}" fill="none" stroke="black" stroke-width="3"/>"#,
            corners.join(" ")
        )
        .unwrap();
    }

    let centre = |x: u32, y: u32| pt(x as f64 - 0.5, y as f64 - 0.5);
    for path in pattern.paths() {
        let points: Vec<String> = path.cells().iter().map(|c| centre(c.x, c.y)).collect();
        if path.len() == 1 {
            // a singleton is drawn as a short stub so it stays visible
            let c = path.start();
            let (a, b) = (pt(c.x as f64 - 0.8, c.y as f64 - 0.5), pt(c.x as f64 - 0.2, c.y as f64 - 0.5));
            writeln!(svg, r#"<polyline class="path" points="{a} {b}" fill="none" stroke="black" stroke-width="3"/>"#).unwrap();
        } else {
            writeln!(
                svg,
                r#"<polyline class="path" points="{}" fill="none" stroke="black" stroke-width="3"/>"#,
                points.join(" ")
            )
            .unwrap();
        }
    }
    for b in pattern.bullets() {
        let c = centre(b.x, b.y);
        let (cx, cy) = c.split_once(',').expect("formatted as x,y");
        writeln!(svg, r#"<circle class="bullet" cx="{cx}" cy="{cy}" r="{}" fill="black"/>"#, UNIT / 4).unwrap();
    }
    svg.push_str("</svg>\n");
    svg
}
