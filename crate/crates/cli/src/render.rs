//! SVG drawings of straight-line graphs.

use std::fmt::Write as _;

use pseudotri::subdivision::extract_faces;
use pseudotri::GeomGraph;

pub const CANVAS: f64 = 800.0;
const MARGIN: f64 = 0.05;
const PALETTE: [&str; 6] = ["#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462"];

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RenderOptions {
    /// Fill each bounded face.
    pub shade_faces: bool,
    pub labels: bool,
}

/// Square canvas; the bounding box is scaled uniformly to fill it minus a 5%
/// margin on every side and centred. The y axis points up.
pub fn render_svg(g: &GeomGraph, options: RenderOptions) -> String {
    let pts = g.points().points();
    let (min_x, max_x) = (pts.iter().map(|p| p.x).min().unwrap(), pts.iter().map(|p| p.x).max().unwrap());
    let (min_y, max_y) = (pts.iter().map(|p| p.y).min().unwrap(), pts.iter().map(|p| p.y).max().unwrap());
    let w = ((max_x - min_x) as f64).max(1.0);
    let h = ((max_y - min_y) as f64).max(1.0);
    let inner = CANVAS * (1.0 - 2.0 * MARGIN);
    let scale = inner / w.max(h);
    let off_x = CANVAS * MARGIN + (inner - w * scale) / 2.0;
    let off_y = CANVAS * MARGIN + (inner - h * scale) / 2.0;
    let at = |i: usize| {
        let p = pts[i];
        (
            off_x + (p.x - min_x) as f64 * scale,
            CANVAS - (off_y + (p.y - min_y) as f64 * scale),
        )
    };

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{CANVAS}" height="{CANVAS}" viewBox="0 0 {CANVAS} {CANVAS}">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);

    if options.shade_faces {
        if let Ok(faces) = extract_faces(g) {
            let _ = writeln!(s, r#"<g fill-opacity="0.45" stroke="none">"#);
            for (k, f) in faces.interior.iter().enumerate() {
                let coords: Vec<String> = f
                    .boundary
                    .iter()
                    .map(|&v| {
                        let (x, y) = at(v);
                        format!("{x:.2},{y:.2}")
                    })
                    .collect();
                let _ = writeln!(
                    s,
                    r#"<polygon points="{}" fill="{}"/>"#,
                    coords.join(" "),
                    PALETTE[k % PALETTE.len()]
                );
            }
            let _ = writeln!(s, "</g>");
        }
    }

    let _ = writeln!(s, r#"<g stroke="black" stroke-width="2">"#);
    for e in g.edges() {
        let ((x1, y1), (x2, y2)) = (at(e.lo), at(e.hi));
        let _ = writeln!(s, r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}"/>"#);
    }
    let _ = writeln!(s, "</g>");

    let _ = writeln!(s, r#"<g fill="black">"#);
    for i in 0..pts.len() {
        let (x, y) = at(i);
        let _ = writeln!(s, r#"<circle cx="{x:.2}" cy="{y:.2}" r="5"/>"#);
    }
    let _ = writeln!(s, "</g>");

    if options.labels {
        let _ = writeln!(s, r##"<g font-family="sans-serif" font-size="14" fill="#b00">"##);
        for i in 0..pts.len() {
            let (x, y) = at(i);
            let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}">{i}</text>"#, x + 7.0, y - 7.0);
        }
        let _ = writeln!(s, "</g>");
    }
    s.push_str("</svg>\n");
    s
}
