//! Convex polygons as bounded convex domains, and the chord of a line through them.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::geometry::{check_finite, cross, fmt_point, line_intersection, pt, Point};
use crate::tolerance;

/// A strictly convex polygon with counterclockwise vertices.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
}

impl ConvexPolygon {
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::InvalidPolygon(format!("{n} vertices, need at least 3")));
        }
        for &v in &vertices {
            check_finite(v)?;
        }
        for i in 0..n {
            for j in i + 1..n {
                if (vertices[i] - vertices[j]).norm() <= 1e-12 {
                    return Err(Error::InvalidPolygon(format!("repeated vertex {}", fmt_point(vertices[i]))));
                }
            }
        }
        let mut turning = 0.0;
        for i in 0..n {
            let e0 = vertices[(i + 1) % n] - vertices[i];
            let e1 = vertices[(i + 2) % n] - vertices[(i + 1) % n];
            if cross(e0, e1) <= 0.0 {
                return Err(Error::InvalidPolygon(format!(
                    "not strictly convex and counterclockwise at vertex {}",
                    (i + 1) % n
                )));
            }
            turning += (e1 / e0).arg();
        }
        // Left turns everywhere but winding more than once is a star polygon.
        if (turning - std::f64::consts::TAU).abs() > 1e-9 {
            return Err(Error::InvalidPolygon("boundary winds more than once".into()));
        }
        Ok(ConvexPolygon { vertices })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Edges as `(start, end)` pairs, closing back to the first vertex.
    pub fn edges(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Strict interior test against every edge's half-plane.
    pub fn contains(&self, p: Point) -> bool {
        self.edges().all(|(c, d)| {
            let e = d - c;
            cross(e, p - c) / e.norm() > tolerance::ON_SEGMENT
        })
    }

    fn scale(&self) -> f64 {
        self.vertices.iter().fold(1.0, |s, v| s.max(v.norm()))
    }

    /// Boundary points of the whole line through `a` and `b`, deduplicated.
    pub(crate) fn line_hits(&self, a: Point, b: Point) -> Result<Vec<Point>> {
        let scale = self.scale().max(a.norm()).max(b.norm());
        let mut hits: Vec<Point> = Vec::with_capacity(2);
        for (c, d) in self.edges() {
            let p = match line_intersection(a, b, c, d) {
                Ok(p) => p,
                Err(Error::ParallelLines) => continue,
                Err(e) => return Err(e),
            };
            let gap = (c - p).norm() + (d - p).norm() - (c - d).norm();
            if gap <= tolerance::ON_SEGMENT * scale
                && hits.iter().all(|h| (h - p).norm() >= tolerance::VERTEX_DEDUP)
            {
                hits.push(p);
            }
        }
        Ok(hits)
    }
}

impl FromStr for ConvexPolygon {
    type Err = Error;

    /// Parses one `x y` vertex per line; `#` starts a comment.
    fn from_str(text: &str) -> Result<Self> {
        let mut vertices = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let parsed = match fields.as_slice() {
                [x, y] => x.parse::<f64>().ok().zip(y.parse::<f64>().ok()),
                _ => None,
            };
            let (x, y) = parsed.ok_or_else(|| {
                Error::InvalidPolygon(format!("line {}: expected \"x y\", got {line:?}", lineno + 1))
            })?;
            vertices.push(pt(x, y));
        }
        ConvexPolygon::new(vertices)
    }
}

/// The two boundary points of the polygon on the line through `a` and `b`,
/// ordered so that `|u - a| <= |u - b|`.
pub fn polygon_chord(polygon: &ConvexPolygon, a: Point, b: Point) -> Result<(Point, Point)> {
    for z in [a, b] {
        if !polygon.contains(z) {
            return Err(Error::PointOutsidePolygon(fmt_point(z)));
        }
    }
    if (a - b).norm() < tolerance::COINCIDENT {
        return Err(Error::CoincidentPoints);
    }
    let hits = polygon.line_hits(a, b)?;
    match hits.as_slice() {
        &[p, q] => {
            if (p - a).norm() <= (p - b).norm() {
                Ok((p, q))
            } else {
                Ok((q, p))
            }
        }
        other => Err(Error::ChordNotFound(other.len())),
    }
}
