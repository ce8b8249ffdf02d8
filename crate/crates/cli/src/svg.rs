//! Minimal SVG 1.1 rendering of polygons laid out side by side.

use std::fmt::Write as _;

use g2convex::Point;

pub struct Panel {
    pub title: String,
    pub vertices: Vec<(f64, f64)>,
    /// Vertex labels, drawn when present.
    pub labels: Vec<String>,
}

impl Panel {
    pub fn new(title: impl Into<String>, vertices: &[Point]) -> Self {
        Panel { title: title.into(), vertices: vertices.iter().map(Point::to_f64).collect(), labels: Vec::new() }
    }

    pub fn labelled(mut self, labels: &[&str]) -> Self {
        self.labels = labels.iter().map(|s| s.to_string()).collect();
        self
    }
}

const SIZE: f64 = 360.0;
const MARGIN: f64 = 40.0;

fn bounds(vs: &[(f64, f64)]) -> (f64, f64, f64, f64) {
    vs.iter().fold((f64::MAX, f64::MAX, f64::MIN, f64::MIN), |(x0, y0, x1, y1), &(x, y)| {
        (x0.min(x), y0.min(y), x1.max(x), y1.max(y))
    })
}

pub fn render(panels: &[Panel], notes: &[String]) -> String {
    let width = SIZE * panels.len().max(1) as f64;
    let height = SIZE + 20.0 * notes.len() as f64;
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    for (i, panel) in panels.iter().enumerate() {
        let ox = SIZE * i as f64;
        let (x0, y0, x1, y1) = bounds(&panel.vertices);
        let span = (x1 - x0).max(y1 - y0).max(1e-9);
        let k = (SIZE - 2.0 * MARGIN) / span;
        // flip y so the picture has the usual orientation
        let map = |(x, y): (f64, f64)| (ox + MARGIN + (x - x0) * k, MARGIN + (y1 - y) * k);
        let pts: Vec<String> = panel
            .vertices
            .iter()
            .map(|&v| {
                let (sx, sy) = map(v);
                format!("{sx:.4},{sy:.4}")
            })
            .collect();
        let _ = writeln!(out, r#"<g id="panel{i}">"#);
        let _ = writeln!(
            out,
            r#"<text x="{:.4}" y="20" font-family="sans-serif" font-size="14">{}</text>"#,
            ox + MARGIN,
            escape(&panel.title)
        );
        let _ = writeln!(
            out,
            r##"<polygon points="{}" fill="#dde8f5" stroke="#1b3a5c" stroke-width="1.5"/>"##,
            pts.join(" ")
        );
        for (j, &v) in panel.vertices.iter().enumerate() {
            let (sx, sy) = map(v);
            let _ = writeln!(
                out,
                r##"<circle cx="{sx:.4}" cy="{sy:.4}" r="2.5" fill="#1b3a5c"><title>({:.4}, {:.4})</title></circle>"##,
                v.0, v.1
            );
            if let Some(label) = panel.labels.get(j) {
                let _ = writeln!(
                    out,
                    r#"<text x="{:.4}" y="{:.4}" font-family="sans-serif" font-size="11">{}</text>"#,
                    sx + 4.0,
                    sy - 4.0,
                    escape(label)
                );
            }
        }
        let _ = writeln!(out, "</g>");
    }
    for (i, note) in notes.iter().enumerate() {
        let _ = writeln!(
            out,
            r#"<text x="{MARGIN:.4}" y="{:.4}" font-family="sans-serif" font-size="12">{}</text>"#,
            SIZE + 16.0 + 20.0 * i as f64,
            escape(note)
        );
    }
    let _ = writeln!(out, "</svg>");
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
