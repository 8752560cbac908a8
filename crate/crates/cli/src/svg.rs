//! Deterministic SVG 1.1 figures of configurations, inscribed rectangles and
//! the curve of unit rectangles.

use std::fmt::Write as _;

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Plane {
    Xy,
    Uw,
    Uv,
    Ut,
    Vt,
}

impl Plane {
    pub fn axes(self) -> (&'static str, &'static str) {
        match self {
            Plane::Xy => ("x", "y"),
            Plane::Uw => ("u", "w"),
            Plane::Uv => ("u", "v"),
            Plane::Ut => ("u", "t"),
            Plane::Vt => ("v", "t"),
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "xy" => Plane::Xy,
            "uw" => Plane::Uw,
            "uv" => Plane::Uv,
            "ut" => Plane::Ut,
            "vt" => Plane::Vt,
            _ => return None,
        })
    }
}

/// Drawing primitives in plane coordinates (y up).
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Scene {
    /// Labelled lines `a·x + b·y + c = 0`, drawn across the whole view.
    pub lines: Vec<(String, [f64; 3])>,
    pub polygons: Vec<Vec<[f64; 2]>>,
    pub polylines: Vec<Vec<[f64; 2]>>,
    pub markers: Vec<[f64; 2]>,
}

impl Scene {
    fn points(&self) -> impl Iterator<Item = &[f64; 2]> {
        self.polygons
            .iter()
            .flatten()
            .chain(self.polylines.iter().flatten())
            .chain(self.markers.iter())
    }
}

const LINE_COLORS: [&str; 4] = ["#c0392b", "#2471a3", "#1e8449", "#b9770e"];

#[derive(Debug, Clone, Copy, PartialEq)]
struct View {
    x0: f64,
    y0: f64,
    x1: f64,
    y1: f64,
}

impl View {
    fn around(scene: &Scene) -> Option<Self> {
        let mut pts = scene
            .points()
            .filter(|p| p[0].is_finite() && p[1].is_finite())
            .peekable();
        pts.peek()?;
        let (mut x0, mut y0, mut x1, mut y1) = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in pts {
            x0 = x0.min(p[0]);
            x1 = x1.max(p[0]);
            y0 = y0.min(p[1]);
            y1 = y1.max(p[1]);
        }
        let pad = |lo: f64, hi: f64| {
            let span = if hi > lo { hi - lo } else { 1.0 };
            (lo - 0.1 * span, hi + 0.1 * span)
        };
        let (x0, x1) = pad(x0, x1);
        let (y0, y1) = pad(y0, y1);
        Some(View { x0, y0, x1, y1 })
    }

    fn size(&self) -> f64 {
        (self.x1 - self.x0).max(self.y1 - self.y0)
    }

    /// Segment of `a·x + b·y + c = 0` inside the view.
    fn clip(&self, l: [f64; 3]) -> Option<([f64; 2], [f64; 2])> {
        let [a, b, c] = l;
        let mut hits: Vec<[f64; 2]> = Vec::new();
        if b != 0.0 {
            for x in [self.x0, self.x1] {
                let y = -(a * x + c) / b;
                if y >= self.y0 && y <= self.y1 {
                    hits.push([x, y]);
                }
            }
        }
        if a != 0.0 {
            for y in [self.y0, self.y1] {
                let x = -(b * y + c) / a;
                if x >= self.x0 && x <= self.x1 {
                    hits.push([x, y]);
                }
            }
        }
        hits.sort_by(|p, q| p.partial_cmp(q).unwrap());
        hits.dedup();
        match hits.as_slice() {
            [p, .., q] => Some((*p, *q)),
            _ => None,
        }
    }
}

fn n(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x}")
}

fn pt(p: &[f64; 2]) -> String {
    format!("{},{}", n(p[0]), n(-p[1]))
}

/// Renders the scene; the view is the bounding box of everything except the
/// lines, grown by 10% on each side, with `y` pointing up.
pub fn render_svg(scene: &Scene, plane: Plane) -> CliResult<String> {
    let view = View::around(scene).ok_or(CliError::EmptyScene)?;
    let stroke = view.size() * 0.004;
    let (w, h) = (view.x1 - view.x0, view.y1 - view.y0);
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{} {} {} {}" width="600" height="{}">"#,
        n(view.x0),
        n(-view.y1),
        n(w),
        n(h),
        n((600.0 * h / w).round())
    );
    let (ax, ay) = plane.axes();
    let _ = writeln!(s, "<title>{ax}{ay} view</title>");
    let _ = writeln!(s, r#"<g id="lines" fill="none" stroke-width="{}">"#, n(stroke));
    for (k, (label, l)) in scene.lines.iter().enumerate() {
        if let Some((p, q)) = view.clip(*l) {
            let _ = writeln!(
                s,
                r#"<line class="{label}" x1="{}" y1="{}" x2="{}" y2="{}" stroke="{}"/>"#,
                n(p[0]),
                n(-p[1]),
                n(q[0]),
                n(-q[1]),
                LINE_COLORS[k % 4]
            );
        }
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(
        s,
        r##"<g id="rectangles" fill="none" stroke="#333333" stroke-width="{}">"##,
        n(stroke * 0.6)
    );
    for poly in &scene.polygons {
        let pts: Vec<String> = poly.iter().map(pt).collect();
        let _ = writeln!(s, r#"<polygon points="{}"/>"#, pts.join(" "));
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(
        s,
        r##"<g id="curves" fill="none" stroke="#6c3483" stroke-width="{}">"##,
        n(stroke)
    );
    for line in &scene.polylines {
        let pts: Vec<String> = line.iter().map(pt).collect();
        let _ = writeln!(s, r#"<polyline points="{}"/>"#, pts.join(" "));
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, r##"<g id="markers" fill="#000000">"##);
    for m in &scene.markers {
        let _ = writeln!(
            s,
            r#"<circle cx="{}" cy="{}" r="{}"/>"#,
            n(m[0]),
            n(-m[1]),
            n(stroke * 2.0)
        );
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, "</svg>");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_scene() {
        let mut scene = Scene::default();
        assert!(matches!(render_svg(&scene, Plane::Xy), Err(CliError::EmptyScene)));
        scene.lines.push(("A".into(), [0.0, 1.0, 1.0]));
        assert!(matches!(render_svg(&scene, Plane::Xy), Err(CliError::EmptyScene)));
    }

    #[test]
    fn view_has_margin_and_clips_lines() {
        let scene = Scene {
            lines: vec![("C".into(), [1.0, -1.0, 0.0])],
            polygons: vec![vec![[0.0, 0.0], [10.0, 0.0], [10.0, 5.0], [0.0, 5.0]]],
            ..Default::default()
        };
        let svg = render_svg(&scene, Plane::Xy).unwrap();
        assert!(svg.contains(r#"viewBox="-1 -5.5 12 6""#), "{svg}");
        assert!(svg.contains(r#"x1="-0.5" y1="0.5" x2="5.5" y2="-5.5""#), "{svg}");
        assert_eq!(svg, render_svg(&scene, Plane::Xy).unwrap());
    }
}
