//! Hyperbolic, Hilbert and visual angle metrics of the unit disk.
//!
//! All three metrics of a pair `a, b` depend only on two scalars: the
//! hyperbolic distance `rho` and the offset `m` of the line through `a` and
//! `b` from the origin. With `u = sh(rho/2)`:
//!
//! ```text
//! sh(h/2)  = sqrt(1 - m²) · u
//! tan(v/2) = (1 + m) u / (1 + sqrt(1 + (1 - m²) u²))
//!          = sqrt((1 + m)/(1 - m)) · th(h/4)
//! ```
//!
//! Distances are returned through the closed inverses `asinh`, `atanh` and
//! `atan` (natural-log units for `rho` and `h`, radians for `v`).

use crate::domain::hilbert_distance;
use crate::error::{Error, Result};
use crate::geometry::{chord_of, chord_offset, fmt_point, log_cross_ratio_ordered, DiskPoint, Point};
use crate::polygon::ConvexPolygon;
use crate::tolerance;

/// A point of the open upper half plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HalfPlanePoint(Point);

impl HalfPlanePoint {
    pub fn new(z: Point) -> Result<Self> {
        if z.re.is_finite() && z.im.is_finite() && z.im > 0.0 {
            Ok(HalfPlanePoint(z))
        } else {
            Err(Error::NotInHalfPlane(fmt_point(z)))
        }
    }

    pub fn value(self) -> Point {
        self.0
    }
}

fn check_offset(m: f64) -> Result<f64> {
    if (0.0..1.0).contains(&m) {
        Ok(m)
    } else {
        Err(Error::InvalidOffset(m))
    }
}

/// `sh(rho/2) = |a - b| / sqrt((1 - |a|²)(1 - |b|²))`.
pub fn half_sinh_rho(a: DiskPoint, b: DiskPoint) -> f64 {
    (a.value() - b.value()).norm() / (a.conformal_gap() * b.conformal_gap()).sqrt()
}

/// The pseudo-hyperbolic distance `|a - b| / |1 - a b̄| = th(rho/2)`.
pub fn pseudo_hyperbolic(a: DiskPoint, b: DiskPoint) -> f64 {
    let (a, b) = (a.value(), b.value());
    (a - b).norm() / (1.0 - a * b.conj()).norm()
}

/// Hyperbolic distance of the unit disk.
pub fn rho_disk(a: DiskPoint, b: DiskPoint) -> f64 {
    2.0 * half_sinh_rho(a, b).asinh()
}

/// Hyperbolic distance of the upper half plane, `arch(1 + |a-b|² / (2 Im a Im b))`.
pub fn rho_halfplane(a: HalfPlanePoint, b: HalfPlanePoint) -> f64 {
    let (a, b) = (a.value(), b.value());
    // arch(1 + x) = 2 asinh(sqrt(x/2)) keeps precision for small x.
    let x = (a - b).norm_sqr() / (2.0 * a.im * b.im);
    2.0 * (x / 2.0).sqrt().asinh()
}

/// Hilbert distance of the unit disk from the chord construction.
pub fn hilbert_disk(a: DiskPoint, b: DiskPoint) -> f64 {
    if (a.value() - b.value()).norm() < tolerance::COINCIDENT {
        return 0.0;
    }
    let chord = chord_of(a, b).expect("distinct disk points have a chord");
    log_cross_ratio_ordered(chord.u, a.value(), b.value(), chord.v).expect("chord endpoints lie outside the open disk")
}

/// Hilbert distance of the unit disk from the closed form `log H` with
/// `H = [Re((1 - a b̄)²) + |a-b|² + 2 Re(1 - a b̄) sqrt(|a-b|² - Im(a b̄)²)] / ((1-|a|²)(1-|b|²))`.
pub fn hilbert_closed_form(a: DiskPoint, b: DiskPoint) -> f64 {
    let (za, zb) = (a.value(), b.value());
    let abar = za * zb.conj();
    let one_minus = 1.0 - abar;
    let diff2 = (za - zb).norm_sqr();
    let mut radicand = diff2 - abar.im * abar.im;
    if radicand < 0.0 {
        assert!(
            radicand >= -tolerance::RADICAND_CLAMP,
            "closed-form Hilbert radicand {radicand} is negative"
        );
        radicand = 0.0;
    }
    let num = (one_minus * one_minus).re + diff2 + 2.0 * one_minus.re * radicand.sqrt();
    let h = (num / (a.conformal_gap() * b.conformal_gap())).ln();
    h.max(0.0)
}

/// Coefficients `(A, B, C)` of `A H² + B H + C = 0`, whose two roots are
/// `exp(h)` and `exp(-h)`.
pub fn hilbert_quadratic(a: DiskPoint, b: DiskPoint) -> (f64, f64, f64) {
    let (za, zb) = (a.value(), b.value());
    let outer = a.conformal_gap() * b.conformal_gap();
    let w = 1.0 - za * zb.conj();
    let middle = 2.0 * (w * w).re + 2.0 * (za - zb).norm_sqr();
    (outer, -middle, outer)
}

/// Visual angle distance from the closed form in terms of `rho` and `m`.
pub fn visual_angle_disk(a: DiskPoint, b: DiskPoint) -> f64 {
    let Ok(m) = chord_offset(a, b) else {
        return 0.0;
    };
    let u = half_sinh_rho(a, b);
    let t = (1.0 + m) * u / (1.0 + (1.0 + (1.0 - m * m) * u * u).sqrt());
    2.0 * t.atan()
}

/// Visual angle from the Hilbert distance and the chord offset,
/// `tan(v/2) = sqrt((1 + m)/(1 - m)) th(h/4)`.
pub fn visual_from_hilbert(h: f64, m: f64) -> Result<f64> {
    let m = check_offset(m)?;
    Ok(2.0 * (((1.0 + m) / (1.0 - m)).sqrt() * (h / 4.0).tanh()).atan())
}

/// Hilbert distance from the hyperbolic distance and the chord offset,
/// `sh(h/2) = sqrt(1 - m²) sh(rho/2)`.
pub fn hilbert_from_rho(rho: f64, m: f64) -> Result<f64> {
    let m = check_offset(m)?;
    Ok(2.0 * ((1.0 - m * m).sqrt() * (rho / 2.0).sinh()).asinh())
}

/// Hilbert distance in a convex polygon.
pub fn hilbert_polygon(polygon: &ConvexPolygon, a: Point, b: Point) -> Result<f64> {
    hilbert_distance(polygon, a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::pt;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    fn dp(re: f64, im: f64) -> DiskPoint {
        DiskPoint::from_re_im(re, im).unwrap()
    }

    fn hp(re: f64, im: f64) -> HalfPlanePoint {
        HalfPlanePoint::new(pt(re, im)).unwrap()
    }

    #[test]
    fn rho_disk_examples() {
        assert_abs_diff_eq!(rho_disk(dp(0.0, 0.0), dp(0.5, 0.0)), 3f64.ln(), epsilon = 1e-15);
        assert_eq!(rho_disk(dp(0.2, 0.4), dp(0.2, 0.4)), 0.0);
        let (a, b) = (dp(0.3, 0.2), dp(-0.1, 0.6));
        let via_tanh = 2.0 * pseudo_hyperbolic(a, b).atanh();
        assert_abs_diff_eq!(rho_disk(a, b), via_tanh, epsilon = 1e-14);
    }

    #[test]
    fn rho_halfplane_examples() {
        // Vertical geodesic: the integral of dy/y from 1 to 2.
        assert_abs_diff_eq!(rho_halfplane(hp(0.0, 1.0), hp(0.0, 2.0)), 2f64.ln(), epsilon = 1e-15);
        assert_eq!(rho_halfplane(hp(0.3, 0.7), hp(0.3, 0.7)), 0.0);
        assert_abs_diff_eq!(rho_halfplane(hp(0.0, 1.0), hp(1.0, 1.0)), 1.5f64.acosh(), epsilon = 1e-15);
        assert!(HalfPlanePoint::new(pt(0.0, 0.0)).is_err());
    }

    #[test]
    fn hilbert_examples() {
        assert_abs_diff_eq!(hilbert_disk(dp(0.0, 0.0), dp(0.5, 0.0)), 3f64.ln(), epsilon = 1e-15);
        assert_eq!(hilbert_disk(dp(0.1, 0.1), dp(0.1, 0.1)), 0.0);
        let (a, b) = (dp(0.5, 0.1), dp(0.5, -0.1));
        assert_abs_diff_eq!(hilbert_disk(a, b), hilbert_closed_form(a, b), epsilon = 1e-14);
    }

    #[test]
    fn closed_form_examples() {
        for x in [0.1f64, 0.5, 0.9, 0.999] {
            let expect = ((1.0 + x) / (1.0 - x)).ln();
            assert_abs_diff_eq!(hilbert_closed_form(dp(0.0, 0.0), dp(x, 0.0)), expect, epsilon = 1e-12);
        }
        assert_eq!(hilbert_closed_form(dp(0.3, -0.2), dp(0.3, -0.2)), 0.0);
    }

    #[test]
    fn closed_form_solves_quadratic() {
        let (a, b) = (dp(0.45, -0.3), dp(-0.62, 0.11));
        let h = hilbert_closed_form(a, b).exp();
        let (qa, qb, qc) = hilbert_quadratic(a, b);
        let scale = qa.abs().max(qb.abs()).max(qc.abs());
        assert!((qa * h * h + qb * h + qc).abs() <= 1e-10 * scale * h * h);
        // The other root is the reciprocal.
        let other = qc / (qa * h);
        assert_abs_diff_eq!(h * other, 1.0, epsilon = 1e-10);
        assert!((qa * other * other + qb * other + qc).abs() <= 1e-10 * scale);
    }

    #[test]
    fn visual_angle_examples() {
        assert_abs_diff_eq!(visual_angle_disk(dp(-0.5, 0.0), dp(0.5, 0.0)), 2.0 * 0.5f64.atan(), epsilon = 1e-15);
        assert_eq!(visual_angle_disk(dp(0.4, 0.4), dp(0.4, 0.4)), 0.0);
        // sh(rho/2) = 1/sqrt(3), m = 0: tan(v/2) = 2 - sqrt(3), v = pi/6.
        assert_abs_diff_eq!(visual_angle_disk(dp(0.0, 0.0), dp(0.5, 0.0)), PI / 6.0, epsilon = 1e-15);
    }

    #[test]
    fn functional_identities_reduce() {
        let h = 1.3;
        assert_abs_diff_eq!(visual_from_hilbert(h, 0.0).unwrap(), 2.0 * (h / 4.0).tanh().atan());
        assert_eq!(visual_from_hilbert(0.0, 0.4).unwrap(), 0.0);
        assert_abs_diff_eq!(hilbert_from_rho(2.2, 0.0).unwrap(), 2.2, epsilon = 1e-15);
        assert_eq!(hilbert_from_rho(0.0, 0.7).unwrap(), 0.0);
        assert_eq!(visual_from_hilbert(1.0, 1.0), Err(Error::InvalidOffset(1.0)));
        assert_eq!(hilbert_from_rho(1.0, -0.1), Err(Error::InvalidOffset(-0.1)));
    }

    #[test]
    fn identities_on_a_pair() {
        let (a, b) = (dp(0.5, 0.1), dp(0.5, -0.1));
        let m = chord_offset(a, b).unwrap();
        let h = hilbert_disk(a, b);
        assert_abs_diff_eq!(hilbert_from_rho(rho_disk(a, b), m).unwrap(), h, epsilon = 1e-13);
        assert_abs_diff_eq!(visual_from_hilbert(h, m).unwrap(), visual_angle_disk(a, b), epsilon = 1e-13);
    }

    #[test]
    fn polygon_examples() {
        let sq: ConvexPolygon = "-1 -1\n1 -1\n1 1\n-1 1".parse().unwrap();
        let d = hilbert_polygon(&sq, pt(0.0, 0.0), pt(0.5, 0.0)).unwrap();
        assert_abs_diff_eq!(d, 3f64.ln(), epsilon = 1e-15);
        assert_eq!(hilbert_polygon(&sq, pt(0.2, 0.3), pt(0.2, 0.3)).unwrap(), 0.0);
        assert!(matches!(
            hilbert_polygon(&sq, pt(0.0, 0.0), pt(2.0, 0.0)),
            Err(Error::PointOutsidePolygon(_))
        ));
        let tri: ConvexPolygon = "0 0\n2 0\n0 1".parse().unwrap();
        let (a, b, c) = (pt(0.3, 0.2), pt(1.2, 0.3), pt(0.4, 0.55));
        let ab = hilbert_polygon(&tri, a, b).unwrap();
        let bc = hilbert_polygon(&tri, b, c).unwrap();
        let ac = hilbert_polygon(&tri, a, c).unwrap();
        assert!(ac <= ab + bc + 1e-10);
        assert_abs_diff_eq!(ab, hilbert_polygon(&tri, b, a).unwrap(), epsilon = 1e-13);
    }
}
