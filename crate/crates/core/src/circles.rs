//! Hilbert and hyperbolic circles as Euclidean conics, tangent hyperbolic
//! radii, Hilbert midpoints and related inclusions.
//!
//! With `r = e^t`, the Hilbert circle of radius `t` around `z0` is the
//! zero set of the real quadratic
//!
//! ```text
//! C1(z) = r (z̄0² z² + z0² z̄²) + ((r+1)² - (r²+1)|z0|²) |z|² - 4r (z̄0 z + z0 z̄) + (r+1)²|z0|² - (r-1)²
//! ```
//!
//! which is an ellipse with its short axis along the ray through `z0`. The
//! companion factor `C2` has no zeros in the closed disk.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{pt, DiskPoint, Point};
use crate::metrics::{hilbert_disk, rho_disk};
use crate::tolerance;

/// A Euclidean disk `|z - center| < radius`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EuclideanDisk {
    pub center: Point,
    pub radius: f64,
}

impl EuclideanDisk {
    pub fn point_at(&self, theta: f64) -> Point {
        self.center + Point::from_polar(self.radius, theta)
    }
}

fn check_radius(t: f64) -> Result<f64> {
    if t > 0.0 && t.is_finite() {
        Ok(t)
    } else {
        Err(Error::InvalidRadius(t))
    }
}

/// The hyperbolic disk `B_rho(x, M)` as a Euclidean disk:
/// center `x (1 - t²) / (1 - |x|² t²)`, radius `(1 - |x|²) t / (1 - |x|² t²)`,
/// with `t = th(M/2)`.
pub fn hyperbolic_disk_euclidean(x: DiskPoint, radius: f64) -> Result<EuclideanDisk> {
    let radius = check_radius(radius)?;
    let t = (radius / 2.0).tanh();
    let x2 = x.value().norm_sqr();
    let den = 1.0 - x2 * t * t;
    Ok(EuclideanDisk {
        center: x.value() * ((1.0 - t * t) / den),
        radius: x.conformal_gap() * t / den,
    })
}

/// A real plane conic `xx x² + xy x y + yy y² + x x + y y + c`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Conic {
    pub xx: f64,
    pub xy: f64,
    pub yy: f64,
    pub x: f64,
    pub y: f64,
    pub c: f64,
}

impl Conic {
    pub fn eval(&self, z: Point) -> f64 {
        let (x, y) = (z.re, z.im);
        self.xx * x * x + self.xy * x * y + self.yy * y * y + self.x * x + self.y * y + self.c
    }

    pub fn gradient(&self, z: Point) -> Point {
        let (x, y) = (z.re, z.im);
        pt(
            2.0 * self.xx * x + self.xy * y + self.x,
            self.xy * x + 2.0 * self.yy * y + self.y,
        )
    }

    /// Largest absolute coefficient.
    pub fn scale(&self) -> f64 {
        [self.xx, self.xy, self.yy, self.x, self.y, self.c]
            .iter()
            .fold(0.0, |s, c| s.max(c.abs()))
    }

    /// `|value| / scale`.
    pub fn normalized(&self, z: Point) -> f64 {
        self.eval(z).abs() / self.scale()
    }

    /// First-order distance from `z` to the zero set, `|value| / |gradient|`.
    pub fn geometric_residual(&self, z: Point) -> f64 {
        self.eval(z).abs() / self.gradient(z).norm()
    }
}

/// Both conic factors share the quadratic part `2r Re(z̄0² z²)` and the
/// linear part `-8r Re(z̄0 z)`.
fn hilbert_factor(z0: DiskPoint, t: f64, radial: f64, constant: f64) -> Conic {
    let r = t.exp();
    let (p, q) = (z0.value().re, z0.value().im);
    let twist = 2.0 * r * (p * p - q * q);
    Conic {
        xx: twist + radial,
        xy: 8.0 * r * p * q,
        yy: -twist + radial,
        x: -8.0 * r * p,
        y: -8.0 * r * q,
        c: constant,
    }
}

/// The ellipse factor `C1` of the Hilbert circle of radius `t` about `z0`.
pub fn c1_conic(z0: DiskPoint, t: f64) -> Conic {
    let r = t.exp();
    let s = z0.value().norm_sqr();
    hilbert_factor(
        z0,
        t,
        (r + 1.0).powi(2) - (r * r + 1.0) * s,
        (r + 1.0).powi(2) * s - (r - 1.0).powi(2),
    )
}

/// The spurious factor `C2`, nonvanishing on the closed disk.
pub fn c2_conic(z0: DiskPoint, t: f64) -> Conic {
    let r = t.exp();
    let s = z0.value().norm_sqr();
    hilbert_factor(
        z0,
        t,
        (r * r + 1.0) * s - (r - 1.0).powi(2),
        (r + 1.0).powi(2) - (r - 1.0).powi(2) * s,
    )
}

pub fn implicit_residual_c1(z0: DiskPoint, t: f64, z: Point) -> f64 {
    c1_conic(z0, t).eval(z)
}

pub fn implicit_residual_c2(z0: DiskPoint, t: f64, z: Point) -> f64 {
    c2_conic(z0, t).eval(z)
}

/// The Hilbert circle `∂B_h(z0, t)` as a Euclidean ellipse.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct HilbertEllipse {
    pub center: Point,
    /// Semi-axis along the ray through `z0`.
    pub semi_radial: f64,
    /// Semi-axis perpendicular to that ray.
    pub semi_transverse: f64,
    /// `arg z0`, or 0 when `z0 = 0`.
    pub orientation: f64,
    pub z0: DiskPoint,
    pub t: f64,
    pub r: f64,
}

/// Ellipse parameters for real `z0 = x ∈ [0, 1)`, then rotated by `arg z0`.
pub fn hilbert_circle(z0: DiskPoint, t: f64) -> Result<HilbertEllipse> {
    let t = check_radius(t)?;
    let r = t.exp();
    let x = z0.norm();
    let orientation = if x == 0.0 { 0.0 } else { z0.value().arg() };
    let q = (r + 1.0).powi(2) - (r - 1.0).powi(2) * x * x;
    let gap = z0.conformal_gap();
    // r - 1 and r² - 1 lose digits for small t.
    let rm1 = t.exp_m1();
    Ok(HilbertEllipse {
        center: Point::from_polar(4.0 * r * x / q, orientation),
        semi_radial: rm1 * (r + 1.0) * gap / q,
        semi_transverse: rm1 * gap.sqrt() / q.sqrt(),
        orientation,
        z0,
        t,
        r,
    })
}

impl HilbertEllipse {
    /// Unit vector along the radial axis.
    pub fn radial_axis(&self) -> Point {
        Point::from_polar(1.0, self.orientation)
    }

    /// `center + a cos θ · e_radial + b sin θ · e_transverse`.
    pub fn point_at(&self, theta: f64) -> Point {
        let local = pt(self.semi_radial * theta.cos(), self.semi_transverse * theta.sin());
        self.center + local * self.radial_axis()
    }

    /// `n` points at uniformly spaced parameter values, starting at θ = 0.
    pub fn boundary(&self, n: usize) -> Vec<Point> {
        (0..n)
            .map(|k| self.point_at(2.0 * PI * k as f64 / n as f64))
            .collect()
    }

    pub fn implicit(&self) -> Conic {
        c1_conic(self.z0, self.t)
    }

    /// Largest hyperbolic disk about `z0` inside the Hilbert disk.
    pub fn inscribed_radius(&self) -> f64 {
        self.t
    }

    /// Smallest hyperbolic disk about `z0` containing the Hilbert disk.
    pub fn circumscribed_radius(&self) -> f64 {
        let (r, x) = (self.r, self.z0.norm());
        let rm1 = self.t.exp_m1();
        let big_r = rm1 / ((r + 1.0).powi(2) - 4.0 * r * x * x).sqrt();
        2.0 * big_r.atanh()
    }
}

/// Largest `s` with `B_rho(z0, s) ⊂ B_h(z0, t)`: always `t`.
pub fn inscribed_radius(z0: DiskPoint, t: f64) -> Result<f64> {
    Ok(hilbert_circle(z0, t)?.inscribed_radius())
}

/// Smallest `s` with `B_h(z0, t) ⊂ B_rho(z0, s)`: `s = 2 arth R` with
/// `R = (r - 1) / sqrt((r + 1)² - 4 r |z0|²)`.
pub fn circumscribed_radius(z0: DiskPoint, t: f64) -> Result<f64> {
    Ok(hilbert_circle(z0, t)?.circumscribed_radius())
}

/// Segment parameter of the Hilbert midpoint,
/// `sqrt(1 - |a|²) / (sqrt(1 - |a|²) + sqrt(1 - |b|²))`.
pub fn midpoint_parameter(a: DiskPoint, b: DiskPoint) -> f64 {
    let (ga, gb) = (a.conformal_gap().sqrt(), b.conformal_gap().sqrt());
    ga / (ga + gb)
}

/// The point `c` of the segment `[a, b]` with `h(a, c) = h(c, b)`; it is also
/// the hyperbolic midpoint.
pub fn hilbert_midpoint(a: DiskPoint, b: DiskPoint) -> Result<DiskPoint> {
    if (a.value() - b.value()).norm() < tolerance::COINCIDENT {
        return Err(Error::CoincidentPoints);
    }
    let t = midpoint_parameter(a, b);
    DiskPoint::new(a.value() * (1.0 - t) + b.value() * t)
}

/// The diameter estimate `|x - y| <= 2 th(h(x, y)/4)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DiameterBound {
    pub bound: f64,
    pub slack: f64,
}

pub fn diameter_bound(x: DiskPoint, y: DiskPoint) -> DiameterBound {
    let bound = 2.0 * (hilbert_disk(x, y) / 4.0).tanh();
    DiameterBound {
        bound,
        slack: bound - (x.value() - y.value()).norm(),
    }
}

/// Sampled check of `B²(z0, s) ⊂ B_h(z0, rho(z0, z0 + s))` for real `z0`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct InclusionReport {
    pub z0: f64,
    pub s: f64,
    /// `rho(z0, z0 + s)`, the Hilbert radius.
    pub radius: f64,
    /// Largest Hilbert distance from `z0` over the sampled circle.
    pub max_hilbert: f64,
    /// `max(max_hilbert - radius, 0)`.
    pub excess: f64,
    /// `|h(z0, z0 + s) - radius|`, zero when the bound is attained.
    pub tangent_gap: f64,
    /// `radius - h(z0, z0 + i s)`.
    pub transverse_margin: f64,
}

pub fn euclidean_inclusion_check(z0: f64, s: f64, samples: usize) -> Result<InclusionReport> {
    let center = DiskPoint::from_re_im(z0, 0.0)?;
    if !(z0 > 0.0 && s > 0.0 && s < 1.0 - z0) {
        return Err(Error::InvalidRadius(s));
    }
    let tip = DiskPoint::from_re_im(z0 + s, 0.0)?;
    let radius = rho_disk(center, tip);
    let mut max_hilbert: f64 = 0.0;
    for k in 0..samples {
        let p = DiskPoint::new(center.value() + Point::from_polar(s, 2.0 * PI * k as f64 / samples as f64))?;
        max_hilbert = max_hilbert.max(hilbert_disk(center, p));
    }
    let side = DiskPoint::from_re_im(z0, s)?;
    Ok(InclusionReport {
        z0,
        s,
        radius,
        max_hilbert,
        excess: (max_hilbert - radius).max(0.0),
        tangent_gap: (hilbert_disk(center, tip) - radius).abs(),
        transverse_margin: radius - hilbert_disk(center, side),
    })
}
