//! Complex-plane primitives: disk points, lines, chords and cross-ratios.
//!
//! Points of the plane are plain [`Complex64`] values. Points that must lie in
//! the open unit disk are wrapped in [`DiskPoint`], which validates on
//! construction.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tolerance;

/// A point of the complex plane.
pub type Point = Complex64;

/// Shorthand for `Complex64::new(re, im)`.
#[inline]
pub fn pt(re: f64, im: f64) -> Point {
    Complex64::new(re, im)
}

pub(crate) fn fmt_point(z: Point) -> String {
    if z.im < 0.0 {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

pub(crate) fn check_finite(z: Point) -> Result<Point> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::NonFinite(fmt_point(z)))
    }
}

/// Twice the signed area of the triangle `(0, p, q)`.
#[inline]
pub(crate) fn cross(p: Point, q: Point) -> f64 {
    p.re * q.im - p.im * q.re
}

/// A point of the open unit disk.
#[derive(Clone, Copy, PartialEq)]
pub struct DiskPoint(Point);

impl DiskPoint {
    pub const ORIGIN: DiskPoint = DiskPoint(Complex64 { re: 0.0, im: 0.0 });

    pub fn new(z: Point) -> Result<Self> {
        let z = check_finite(z)?;
        if z.norm() < 1.0 {
            Ok(DiskPoint(z))
        } else {
            Err(Error::NotInDisk(fmt_point(z)))
        }
    }

    pub fn from_re_im(re: f64, im: f64) -> Result<Self> {
        Self::new(pt(re, im))
    }

    #[inline]
    pub fn value(self) -> Point {
        self.0
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.0.norm()
    }

    /// `1 - |z|^2`, evaluated as `(1 - |z|)(1 + |z|)`.
    #[inline]
    pub fn conformal_gap(self) -> f64 {
        let r = self.0.norm();
        (1.0 - r) * (1.0 + r)
    }

    /// True when `|z|` is within [`tolerance::NEAR_BOUNDARY`] of the unit circle.
    pub fn is_near_boundary(self) -> bool {
        self.0.norm() >= 1.0 - tolerance::NEAR_BOUNDARY
    }
}

impl fmt::Debug for DiskPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DiskPoint({})", fmt_point(self.0))
    }
}

impl serde::Serialize for DiskPoint {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl TryFrom<Point> for DiskPoint {
    type Error = Error;

    fn try_from(z: Point) -> Result<Self> {
        DiskPoint::new(z)
    }
}

impl From<DiskPoint> for Point {
    fn from(z: DiskPoint) -> Point {
        z.0
    }
}

/// The chord of the unit disk carried by the line through two disk points.
///
/// `u` is the endpoint nearer to the first point of the generating pair and
/// `m` is the Euclidean distance from the origin to the chord's line.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize)]
pub struct Chord {
    pub u: Point,
    pub v: Point,
    pub m: f64,
}

/// Intersection of the line through `a`, `b` with the line through `c`, `d`.
///
/// Uses the conjugate form
/// `w = ((a b̄ - ā b)(c - d) - (a - b)(c d̄ - c̄ d)) / ((a - b)(c̄ - d̄) - (ā - b̄)(c - d))`.
pub fn line_intersection(a: Point, b: Point, c: Point, d: Point) -> Result<Point> {
    let ab = a - b;
    let cd = c - d;
    if ab.norm() < tolerance::COINCIDENT || cd.norm() < tolerance::COINCIDENT {
        return Err(Error::DegenerateLine);
    }
    let den = ab * cd.conj() - ab.conj() * cd;
    if den.norm() < tolerance::PARALLEL * ab.norm() * cd.norm() {
        return Err(Error::ParallelLines);
    }
    let num = (a * b.conj() - a.conj() * b) * cd - ab * (c * d.conj() - c.conj() * d);
    Ok(num / den)
}

/// Endpoints of the chord through `a` and `b`, with the offset of its line.
///
/// The endpoints are the roots of `(ā - b̄) z² - (ā b - a b̄) z - (a - b) = 0`.
pub fn chord_of(a: DiskPoint, b: DiskPoint) -> Result<Chord> {
    let (a, b) = (a.value(), b.value());
    if (a - b).norm() < tolerance::COINCIDENT {
        return Err(Error::CoincidentPoints);
    }
    let qa = (a - b).conj();
    let qb = -(a.conj() * b - a * b.conj());
    let qc = -(a - b);
    let disc = (qb * qb - 4.0 * qa * qc).sqrt();
    // Larger-magnitude root first, the other from the product of roots.
    let disc = if (qb.conj() * disc).re >= 0.0 { disc } else { -disc };
    let q = -(qb + disc) / 2.0;
    let r1 = q / qa;
    let r2 = qc / q;
    let (r1, r2) = (r1 / r1.norm(), r2 / r2.norm());

    let (d1a, d1b) = ((r1 - a).norm(), (r1 - b).norm());
    let tie = (d1a - d1b).abs() <= 4.0 * f64::EPSILON * (d1a + d1b);
    let first_is_u = if tie { r1.arg() <= r2.arg() } else { d1a < d1b };
    let (u, v) = if first_is_u { (r1, r2) } else { (r2, r1) };
    Ok(Chord {
        u,
        v,
        m: (u + v).norm() / 2.0,
    })
}

/// Euclidean distance from the origin to the line through `a` and `b`,
/// `|ā b - a b̄| / (2 |a - b|)`.
pub fn chord_offset(a: DiskPoint, b: DiskPoint) -> Result<f64> {
    let (a, b) = (a.value(), b.value());
    let diff = (a - b).norm();
    if diff < tolerance::COINCIDENT {
        return Err(Error::CoincidentPoints);
    }
    Ok((a.conj() * b - a * b.conj()).norm() / (2.0 * diff))
}

/// The absolute cross-ratio `|u, a, b, v| = |u-b||a-v| / (|u-a||b-v|)`.
pub fn cross_ratio(u: Point, a: Point, b: Point, v: Point) -> Result<f64> {
    let scale = 1f64.max(u.norm()).max(a.norm()).max(b.norm()).max(v.norm());
    let ua = (u - a).norm();
    let bv = (b - v).norm();
    if ua < tolerance::COINCIDENT * scale || bv < tolerance::COINCIDENT * scale {
        return Err(Error::DegenerateCrossRatio);
    }
    Ok((u - b).norm() * (a - v).norm() / (ua * bv))
}

/// `log |u, a, b, v|` for points in the order `u, a, b, v` along a line.
///
/// Collinearity gives `|u-b| = |u-a| + |a-b|` and `|a-v| = |a-b| + |b-v|`,
/// so the logarithm splits into two `ln_1p` terms and keeps its relative
/// precision when `a` and `b` are close.
pub fn log_cross_ratio_ordered(u: Point, a: Point, b: Point, v: Point) -> Result<f64> {
    let scale = 1f64.max(u.norm()).max(a.norm()).max(b.norm()).max(v.norm());
    let ua = (u - a).norm();
    let bv = (b - v).norm();
    if ua < tolerance::COINCIDENT * scale || bv < tolerance::COINCIDENT * scale {
        return Err(Error::DegenerateCrossRatio);
    }
    let ab = (a - b).norm();
    Ok((ab / ua).ln_1p() + (ab / bv).ln_1p())
}

/// Center of the circle through three non-collinear points, found as the
/// intersection of two perpendicular bisectors.
pub fn circumcenter(a: Point, b: Point, c: Point) -> Result<Point> {
    let i = Complex64::i();
    let (mab, mbc) = ((a + b) / 2.0, (b + c) / 2.0);
    line_intersection(mab, mab + i * (b - a), mbc, mbc + i * (c - b)).map_err(|e| match e {
        Error::ParallelLines | Error::DegenerateLine => Error::CollinearPoints,
        other => other,
    })
}
