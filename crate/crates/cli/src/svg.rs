//! Minimal deterministic SVG writer.
//!
//! Plane coordinates are mapped into a 1000×1000 view box with the y-axis
//! pointing up; the unit disk fills it up to a small margin.

use std::fmt::Write;

use hilbert_disk::Point;

pub const SIZE: f64 = 1000.0;
const CENTER: f64 = SIZE / 2.0;
const DISK_RADIUS: f64 = 480.0;

/// Fixed stroke styles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stroke {
    Boundary,
    Hilbert,
    Inscribed,
    Circumscribed,
    Axis,
    Curve,
}

impl Stroke {
    fn attributes(self) -> &'static str {
        match self {
            Stroke::Boundary => r##"stroke="#000000" stroke-width="2""##,
            Stroke::Hilbert => r##"stroke="#c0392b" stroke-width="2""##,
            Stroke::Inscribed => r##"stroke="#2471a3" stroke-width="1.5""##,
            Stroke::Circumscribed => r##"stroke="#1e8449" stroke-width="1.5" stroke-dasharray="8 6""##,
            Stroke::Axis => r##"stroke="#555555" stroke-width="1""##,
            Stroke::Curve => r##"stroke="#c0392b" stroke-width="2.5""##,
        }
    }
}

/// Three decimals, with negative zero printed as zero.
pub fn num(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".to_string()
    } else {
        s
    }
}

/// Maps plane points into the view box, `extent` plane units per half-width.
#[derive(Clone, Copy, Debug)]
pub struct View {
    scale: f64,
}

impl View {
    /// The unit disk view.
    pub fn disk() -> Self {
        View { scale: DISK_RADIUS }
    }

    /// A view showing `|x|, |y| <= extent`.
    pub fn with_extent(extent: f64) -> Self {
        View {
            scale: DISK_RADIUS / extent.max(1.0),
        }
    }

    pub fn map(&self, p: Point) -> (f64, f64) {
        (CENTER + self.scale * p.re, CENTER - self.scale * p.im)
    }

    pub fn length(&self, r: f64) -> f64 {
        self.scale * r
    }
}

#[derive(Debug, Default)]
pub struct Svg {
    body: String,
}

impl Svg {
    pub fn new() -> Self {
        Svg::default()
    }

    pub fn comment(&mut self, text: &str) {
        let _ = writeln!(self.body, "  <!-- {} -->", text.replace("--", "- -"));
    }

    pub fn circle(&mut self, view: &View, center: Point, radius: f64, stroke: Stroke) {
        let (x, y) = view.map(center);
        let _ = writeln!(
            self.body,
            r#"  <circle cx="{}" cy="{}" r="{}" fill="none" {}/>"#,
            num(x),
            num(y),
            num(view.length(radius)),
            stroke.attributes()
        );
    }

    pub fn dot(&mut self, view: &View, p: Point) {
        let (x, y) = view.map(p);
        let _ = writeln!(self.body, r##"  <circle cx="{}" cy="{}" r="4" fill="#000000"/>"##, num(x), num(y));
    }

    pub fn path(&mut self, view: &View, points: &[Point], closed: bool, stroke: Stroke) {
        let raw: Vec<(f64, f64)> = points.iter().map(|&p| view.map(p)).collect();
        self.raw_path(&raw, closed, stroke);
    }

    /// A polyline in view-box coordinates.
    pub fn raw_path(&mut self, points: &[(f64, f64)], closed: bool, stroke: Stroke) {
        let coords: Vec<String> = points.iter().map(|&(x, y)| format!("{},{}", num(x), num(y))).collect();
        let tag = if closed { "polygon" } else { "polyline" };
        let _ = writeln!(
            self.body,
            r#"  <{tag} points="{}" fill="none" {}/>"#,
            coords.join(" "),
            stroke.attributes()
        );
    }

    pub fn text(&mut self, x: f64, y: f64, anchor: &str, content: &str) {
        let _ = writeln!(
            self.body,
            r##"  <text x="{}" y="{}" text-anchor="{anchor}" font-family="sans-serif" font-size="20" fill="#000000">{content}</text>"##,
            num(x),
            num(y)
        );
    }

    pub fn finish(self) -> String {
        format!(
            concat!(
                r#"<?xml version="1.0" encoding="UTF-8"?>"#,
                "\n",
                r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="1000" height="1000" viewBox="0 0 1000 1000">"#,
                "\n",
                r##"  <rect x="0" y="0" width="1000" height="1000" fill="#ffffff"/>"##,
                "\n{}</svg>\n"
            ),
            self.body
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disk_view_flips_y() {
        let view = View::disk();
        assert_eq!(view.map(Point::new(0.0, 0.0)), (500.0, 500.0));
        assert_eq!(view.map(Point::new(1.0, 1.0)), (980.0, 20.0));
    }

    #[test]
    fn numbers_are_stable() {
        assert_eq!(num(-0.0001), "0.000");
        assert_eq!(num(1.23456), "1.235");
    }

    #[test]
    fn document_is_self_contained() {
        let mut svg = Svg::new();
        svg.circle(&View::disk(), Point::new(0.0, 0.0), 1.0, Stroke::Boundary);
        let doc = svg.finish();
        assert!(doc.starts_with("<?xml"));
        assert!(doc.contains(r#"r="480.000""#));
        assert!(!doc.contains("href"));
    }
}
