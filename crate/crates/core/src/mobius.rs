//! Möbius transformations, disk automorphisms and the Hilbert-metric
//! distortion bound for K-quasiconformal self-maps of the disk.
//!
//! For a K-quasiregular `f` of the disk onto itself and `m` the chord offset
//! of the source pair,
//!
//! ```text
//! th(h(f(a), f(b))/4) <= D · th(h(a, b)/4)^(1/K),   D = 2^(1 - 1/K) (1 - m²)^(-1/(2K)).
//! ```
//!
//! The bound is exercised on a concrete family of maps with known dilatation:
//! disk automorphisms (K = 1), radial stretches and their compositions.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{chord_offset, pt, DiskPoint, Point};
use crate::metrics::hilbert_disk;
use crate::tolerance;

/// `z ↦ (a z + b) / (c z + d)` with `ad - bc ≠ 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MobiusMap {
    a: Complex64,
    b: Complex64,
    c: Complex64,
    d: Complex64,
}

impl MobiusMap {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Self> {
        let scale = a.norm().max(b.norm()).max(c.norm()).max(d.norm());
        let det = a * d - b * c;
        // NaN coefficients are singular too.
        if det.norm().is_nan() || det.norm() <= tolerance::COINCIDENT * scale * scale {
            return Err(Error::SingularMap);
        }
        Ok(MobiusMap { a, b, c, d })
    }

    pub fn identity() -> Self {
        let (one, zero) = (pt(1.0, 0.0), pt(0.0, 0.0));
        MobiusMap { a: one, b: zero, c: zero, d: one }
    }

    pub fn coefficients(&self) -> [Complex64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn determinant(&self) -> Complex64 {
        self.a * self.d - self.b * self.c
    }

    pub fn apply(&self, z: Point) -> Result<Point> {
        let den = self.c * z + self.d;
        let num = self.a * z + self.b;
        if den.norm() <= tolerance::COINCIDENT * num.norm().max(1.0) {
            return Err(Error::PoleEvaluation);
        }
        Ok(num / den)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &MobiusMap) -> Result<MobiusMap> {
        MobiusMap::new(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )
    }

    pub fn inverse(&self) -> Result<MobiusMap> {
        MobiusMap::new(self.d, -self.b, -self.c, self.a)
    }

    /// True when `other` has proportional coefficients.
    pub fn same_map(&self, other: &MobiusMap, tol: f64) -> bool {
        let mine = self.coefficients();
        let theirs = other.coefficients();
        let pivot = (0..4).max_by(|&i, &j| mine[i].norm().total_cmp(&mine[j].norm())).unwrap();
        if theirs[pivot].norm() == 0.0 {
            return false;
        }
        let k = mine[pivot] / theirs[pivot];
        let scale = mine[pivot].norm();
        (0..4).all(|i| (mine[i] - k * theirs[i]).norm() <= tol * scale)
    }
}

/// The automorphism `T_a(z) = (z - a) / (1 - ā z)`; `T_0` is the identity.
pub fn disk_automorphism(a: DiskPoint) -> MobiusMap {
    let a = a.value();
    MobiusMap {
        a: pt(1.0, 0.0),
        b: -a,
        c: -a.conj(),
        d: pt(1.0, 0.0),
    }
}

/// `z ↦ i (1 + z) / (1 - z)`, sending the unit disk onto the upper half plane.
pub fn cayley_to_halfplane() -> MobiusMap {
    let i = Complex64::i();
    MobiusMap {
        a: i,
        b: i,
        c: pt(-1.0, 0.0),
        d: pt(1.0, 0.0),
    }
}

fn check_dilatation(k: f64) -> Result<f64> {
    if k >= 1.0 && k.is_finite() {
        Ok(k)
    } else {
        Err(Error::InvalidDilatation(k))
    }
}

/// The K-quasiconformal radial stretch `z ↦ z |z|^(1/K - 1)`.
pub fn radial_stretch(k: f64, z: DiskPoint) -> Result<DiskPoint> {
    let k = check_dilatation(k)?;
    let r = z.norm();
    if r == 0.0 || k == 1.0 {
        return Ok(z);
    }
    DiskPoint::new(z.value() * r.powf(1.0 / k - 1.0))
}

/// Validated parameters of the distortion bound.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DistortionParams {
    pub k: f64,
    pub m: f64,
}

impl DistortionParams {
    pub fn new(k: f64, m: f64) -> Result<Self> {
        let k = check_dilatation(k)?;
        if !(0.0..1.0).contains(&m) {
            return Err(Error::InvalidOffset(m));
        }
        Ok(DistortionParams { k, m })
    }

    /// `D = 2^(1 - 1/K) · (1 / sqrt(1 - m²))^(1/K)`.
    pub fn constant(&self) -> f64 {
        let inv_k = 1.0 / self.k;
        2f64.powf(1.0 - inv_k) * (1.0 / (1.0 - self.m * self.m).sqrt()).powf(inv_k)
    }
}

pub fn distortion_constant(k: f64, m: f64) -> Result<f64> {
    Ok(DistortionParams::new(k, m)?.constant())
}

/// A self-map of the disk with known maximal dilatation.
#[derive(Clone, Debug, PartialEq)]
pub enum TestMap {
    /// `T_w`, conformal.
    Automorphism(DiskPoint),
    /// Radial stretch with dilatation `K`.
    Stretch(f64),
    /// `T_outer ∘ stretch(K) ∘ T_inner`.
    Sandwich { outer: DiskPoint, k: f64, inner: DiskPoint },
}

impl TestMap {
    pub fn dilatation(&self) -> f64 {
        match *self {
            TestMap::Automorphism(_) => 1.0,
            TestMap::Stretch(k) | TestMap::Sandwich { k, .. } => k,
        }
    }

    pub fn apply(&self, z: DiskPoint) -> Result<DiskPoint> {
        let auto = |w: DiskPoint, z: DiskPoint| DiskPoint::new(disk_automorphism(w).apply(z.value())?);
        match *self {
            TestMap::Automorphism(w) => auto(w, z),
            TestMap::Stretch(k) => radial_stretch(k, z),
            TestMap::Sandwich { outer, k, inner } => auto(outer, radial_stretch(k, auto(inner, z)?)?),
        }
    }
}

/// Both sides of the distortion inequality for one pair.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub k: f64,
    pub m: f64,
    pub d: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
}

/// Evaluates `th(h(f(a), f(b))/4)` against `D · th(h(a, b)/4)^(1/K)`.
pub fn check_distortion_bound<F>(f: F, a: DiskPoint, b: DiskPoint, k: f64) -> Result<BoundReport>
where
    F: Fn(DiskPoint) -> Result<DiskPoint>,
{
    let m = chord_offset(a, b)?;
    let params = DistortionParams::new(k, m)?;
    let (fa, fb) = (f(a)?, f(b)?);
    if (fa.value() - fb.value()).norm() < tolerance::COINCIDENT {
        return Err(Error::DegenerateImage);
    }
    let d = params.constant();
    let lhs = (hilbert_disk(fa, fb) / 4.0).tanh();
    let rhs = d * (hilbert_disk(a, b) / 4.0).tanh().powf(1.0 / k);
    Ok(BoundReport { k, m, d, lhs, rhs, slack: rhs - lhs })
}

/// One point of the sharpness experiment.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SharpnessSample {
    pub t: f64,
    /// Chord offset of the source pair, equal to `|Re a|`.
    pub m: f64,
    pub quotient: f64,
}

/// For `a = T_w⁻¹(it)`, `b = T_w⁻¹(-it)` and `f = T_w`, the quotient of the
/// two sides of the distortion inequality with `K = 1`.
pub fn sharpness_sweep(w: f64, ts: &[f64]) -> Result<Vec<SharpnessSample>> {
    let w_point = DiskPoint::from_re_im(w, 0.0)?;
    if w <= 0.0 {
        return Err(Error::NotInDisk(format!("{w} (need 0 < w < 1)")));
    }
    let t_w = disk_automorphism(w_point);
    let back = t_w.inverse()?;
    ts.iter()
        .map(|&t| {
            if !(t > 0.0 && t < 1.0) {
                return Err(Error::InvalidRadius(t));
            }
            let a = DiskPoint::new(back.apply(pt(0.0, t))?)?;
            let b = DiskPoint::new(back.apply(pt(0.0, -t))?)?;
            let report = check_distortion_bound(|z| DiskPoint::new(t_w.apply(z.value())?), a, b, 1.0)?;
            // Conjugate pair on a vertical chord.
            assert!((report.m - a.value().re.abs()).abs() <= 1e-12, "offset {} differs from |Re a|", report.m);
            Ok(SharpnessSample {
                t,
                m: report.m,
                quotient: report.lhs / report.rhs,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::{rho_disk, rho_halfplane, HalfPlanePoint};
    use approx::assert_abs_diff_eq;

    fn dp(re: f64, im: f64) -> DiskPoint {
        DiskPoint::from_re_im(re, im).unwrap()
    }

    fn sample_map() -> MobiusMap {
        MobiusMap::new(pt(1.0, 2.0), pt(-0.5, 0.3), pt(0.2, -0.7), pt(1.5, 0.1)).unwrap()
    }

    #[test]
    fn apply_examples() {
        let z = pt(0.3, -0.8);
        assert_eq!(MobiusMap::identity().apply(z).unwrap(), z);
        let flip = MobiusMap::new(pt(0.0, 0.0), pt(1.0, 0.0), pt(1.0, 0.0), pt(0.0, 0.0)).unwrap();
        assert_abs_diff_eq!(flip.apply(pt(2.0, 0.0)).unwrap().re, 0.5);
        assert_eq!(flip.apply(pt(0.0, 0.0)), Err(Error::PoleEvaluation));
        assert_eq!(
            MobiusMap::new(pt(1.0, 0.0), pt(2.0, 0.0), pt(2.0, 0.0), pt(4.0, 0.0)),
            Err(Error::SingularMap)
        );
    }

    #[test]
    fn cross_ratio_preserved() {
        use crate::geometry::cross_ratio;
        let m = sample_map();
        let zs = [pt(0.1, 0.2), pt(-0.7, 0.4), pt(2.0, -1.0), pt(0.5, 0.5)];
        let before = cross_ratio(zs[0], zs[1], zs[2], zs[3]).unwrap();
        let w: Vec<Point> = zs.iter().map(|&z| m.apply(z).unwrap()).collect();
        let after = cross_ratio(w[0], w[1], w[2], w[3]).unwrap();
        assert!((before - after).abs() <= 1e-12 * before);
    }

    #[test]
    fn group_structure() {
        let m = sample_map();
        assert!(MobiusMap::identity().compose(&m).unwrap().same_map(&m, 1e-15));
        assert!(MobiusMap::identity().inverse().unwrap().same_map(&MobiusMap::identity(), 0.0));
        let round = m.compose(&m.inverse().unwrap()).unwrap();
        for z in [pt(0.0, 0.0), pt(0.4, -0.9), pt(3.0, 1.0)] {
            assert!((round.apply(z).unwrap() - z).norm() <= 1e-12);
        }
        let n = disk_automorphism(dp(0.3, 0.1));
        let z = pt(0.2, 0.2);
        let lhs = m.compose(&n).unwrap().apply(z).unwrap();
        let rhs = m.apply(n.apply(z).unwrap()).unwrap();
        assert!((lhs - rhs).norm() <= 1e-12);
    }

    #[test]
    fn automorphism_examples() {
        let a = dp(0.35, -0.42);
        let t = disk_automorphism(a);
        assert!(t.apply(a.value()).unwrap().norm() < 1e-16);
        let e = a.value() / a.norm();
        assert!((t.apply(e).unwrap() - e).norm() < 1e-15);
        assert!((t.apply(-e).unwrap() + e).norm() < 1e-15);
        assert!(disk_automorphism(DiskPoint::ORIGIN).same_map(&MobiusMap::identity(), 0.0));
        let half = disk_automorphism(dp(0.5, 0.0));
        assert_abs_diff_eq!(half.apply(pt(0.8, 0.0)).unwrap().re, 0.5, epsilon = 1e-15);
    }

    #[test]
    fn cayley_examples() {
        let c = cayley_to_halfplane();
        assert_abs_diff_eq!((c.apply(pt(0.0, 0.0)).unwrap() - pt(0.0, 1.0)).norm(), 0.0);
        assert_eq!(c.apply(pt(1.0, 0.0)), Err(Error::PoleEvaluation));
        let (a, b) = (dp(0.3, 0.5), dp(-0.6, -0.1));
        let ha = HalfPlanePoint::new(c.apply(a.value()).unwrap()).unwrap();
        let hb = HalfPlanePoint::new(c.apply(b.value()).unwrap()).unwrap();
        assert_abs_diff_eq!(rho_disk(a, b), rho_halfplane(ha, hb), epsilon = 1e-12);
    }

    #[test]
    fn radial_stretch_examples() {
        let z = dp(0.3, -0.2);
        assert_eq!(radial_stretch(1.0, z).unwrap(), z);
        let s = radial_stretch(2.0, dp(0.25, 0.0)).unwrap();
        assert_abs_diff_eq!(s.value().re, 0.5, epsilon = 1e-15);
        let s = radial_stretch(2.0, dp(0.0, -0.25)).unwrap();
        assert_abs_diff_eq!(s.value().im, -0.5, epsilon = 1e-15);
        assert_eq!(radial_stretch(3.0, DiskPoint::ORIGIN).unwrap(), DiskPoint::ORIGIN);
        assert_eq!(radial_stretch(0.5, z), Err(Error::InvalidDilatation(0.5)));
    }

    #[test]
    fn distortion_constant_examples() {
        assert_eq!(distortion_constant(1.0, 0.0).unwrap(), 1.0);
        assert_abs_diff_eq!(distortion_constant(1.0, 0.6).unwrap(), 1.25, epsilon = 1e-15);
        assert_abs_diff_eq!(distortion_constant(2.0, 0.0).unwrap(), 2f64.sqrt(), epsilon = 1e-15);
        assert_eq!(distortion_constant(2.0, 1.0), Err(Error::InvalidOffset(1.0)));
        assert!(distortion_constant(0.9, 0.0).is_err());
    }

    #[test]
    fn bound_for_identity_and_automorphisms() {
        let (a, b) = (dp(0.2, 0.5), dp(-0.4, 0.1));
        let r = check_distortion_bound(Ok, a, b, 1.0).unwrap();
        assert!(r.slack >= 0.0);
        assert_abs_diff_eq!(r.lhs, (hilbert_disk(a, b) / 4.0).tanh());

        // Pair on a diameter: m = 0 and D = 1.
        let (a, b) = (dp(0.3, 0.3), dp(-0.1, -0.1));
        let map = TestMap::Automorphism(dp(0.6, -0.2));
        let r = check_distortion_bound(|z| map.apply(z), a, b, 1.0).unwrap();
        assert!(r.m < 1e-15);
        assert_abs_diff_eq!(r.d, 1.0, epsilon = 1e-15);
        assert!(r.lhs <= (rho_disk(a, b) / 4.0).tanh() + 1e-12);
    }

    #[test]
    fn bound_for_stretches() {
        let pairs = [(dp(0.2, 0.5), dp(-0.4, 0.1)), (dp(0.9, 0.0), dp(0.0, 0.9)), (dp(0.01, 0.0), dp(0.0, 0.02))];
        for k in [1.5, 2.0, 4.0] {
            for (a, b) in pairs {
                let r = check_distortion_bound(|z| radial_stretch(k, z), a, b, k).unwrap();
                assert!(r.slack >= -1e-12, "k={k} {r:?}");
            }
        }
    }

    #[test]
    fn degenerate_image_rejected() {
        let collapse = |_: DiskPoint| Ok(DiskPoint::ORIGIN);
        assert_eq!(
            check_distortion_bound(collapse, dp(0.1, 0.0), dp(0.2, 0.0), 1.0),
            Err(Error::DegenerateImage)
        );
    }

    #[test]
    fn sharpness_quotient_below_one_and_offset_is_real_part() {
        let samples = sharpness_sweep(0.9, &[0.9, 0.5, 1e-2]).unwrap();
        for s in &samples {
            assert!(s.quotient < 1.0 && s.quotient > 0.0);
        }
        assert!(samples.windows(2).all(|w| w[0].quotient < w[1].quotient));
        assert!(sharpness_sweep(0.9, &[1.0]).is_err());
    }

    #[test]
    fn stretch_through_origin_has_constant_quotient() {
        // th(h(-t, t)/4) = t, so the quotient is 2^(1/K - 1) for every t.
        for k in [1.5, 2.0, 4.0] {
            for t in [0.5, 1e-2, 1e-4] {
                let r = check_distortion_bound(|z| radial_stretch(k, z), dp(-t, 0.0), dp(t, 0.0), k).unwrap();
                assert_abs_diff_eq!(r.lhs / r.rhs, 2f64.powf(1.0 / k - 1.0), epsilon = 1e-12);
            }
        }
    }
}
