//! Bounded convex domains on which the Hilbert metric is defined.

use crate::error::{Error, Result};
use crate::geometry::{chord_of, fmt_point, log_cross_ratio_ordered, DiskPoint, Point};
use crate::polygon::{polygon_chord, ConvexPolygon};
use crate::tolerance;

pub trait ConvexDomain {
    /// Strict interior membership.
    fn contains(&self, p: Point) -> bool;

    /// The error reported for a point that is not interior.
    fn outside(&self, p: Point) -> Error;

    /// Boundary points `(u, v)` of the line through `a` and `b`, ordered so
    /// that `|u - a| <= |u - b|`.
    fn chord(&self, a: Point, b: Point) -> Result<(Point, Point)>;

    /// Distance from an interior point to the boundary along a unit direction.
    fn exit_distance(&self, p: Point, dir: Point) -> Result<f64>;
}

/// The open unit disk.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct UnitDisk;

impl ConvexDomain for UnitDisk {
    fn contains(&self, p: Point) -> bool {
        p.norm() < 1.0
    }

    fn outside(&self, p: Point) -> Error {
        Error::NotInDisk(fmt_point(p))
    }

    fn chord(&self, a: Point, b: Point) -> Result<(Point, Point)> {
        let c = chord_of(DiskPoint::new(a)?, DiskPoint::new(b)?)?;
        Ok((c.u, c.v))
    }

    fn exit_distance(&self, p: Point, dir: Point) -> Result<f64> {
        if !self.contains(p) {
            return Err(self.outside(p));
        }
        let proj = (p.conj() * dir).re;
        let gap = 1.0 - p.norm_sqr();
        Ok(-proj + (proj * proj + gap).sqrt())
    }
}

impl ConvexDomain for ConvexPolygon {
    fn contains(&self, p: Point) -> bool {
        ConvexPolygon::contains(self, p)
    }

    fn outside(&self, p: Point) -> Error {
        Error::PointOutsidePolygon(fmt_point(p))
    }

    fn chord(&self, a: Point, b: Point) -> Result<(Point, Point)> {
        polygon_chord(self, a, b)
    }

    fn exit_distance(&self, p: Point, dir: Point) -> Result<f64> {
        if !self.contains(p) {
            return Err(self.outside(p));
        }
        let hits = self.line_hits(p, p + dir)?;
        hits.iter()
            .map(|&h| ((h - p) * dir.conj()).re)
            .filter(|&s| s > 0.0)
            .fold(None, |best: Option<f64>, s| Some(best.map_or(s, |b| b.min(s))))
            .ok_or(Error::ChordNotFound(hits.len()))
    }
}

/// Hilbert distance `log |u, a, b, v|` in a bounded convex domain; zero for
/// coincident points.
pub fn hilbert_distance<D: ConvexDomain + ?Sized>(domain: &D, a: Point, b: Point) -> Result<f64> {
    for z in [a, b] {
        if !domain.contains(z) {
            return Err(domain.outside(z));
        }
    }
    if (a - b).norm() < tolerance::COINCIDENT {
        return Ok(0.0);
    }
    let (u, v) = domain.chord(a, b)?;
    log_cross_ratio_ordered(u, a, b, v)
}
