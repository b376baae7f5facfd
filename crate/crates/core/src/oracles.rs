//! Brute-force computations used as ground truth for the closed forms.
//!
//! Every routine here reaches its answer by a different route than the
//! corresponding closed form: boundary scans instead of the visual angle
//! formula, bisection along rays instead of the ellipse parameters, and an
//! explicit point construction for the collinear configuration.

use std::f64::consts::TAU;

use serde::Serialize;

use crate::circles::{c2_conic, HilbertEllipse};
use crate::domain::{hilbert_distance, ConvexDomain, UnitDisk};
use crate::error::{Error, Result};
use crate::geometry::{cross, line_intersection, DiskPoint, Point};
use crate::metrics::{hilbert_disk, pseudo_hyperbolic, rho_disk, visual_angle_disk};
use crate::sampling::halton_disk;
use crate::tolerance;

const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Golden-section search for a maximum of `f` on `[lo, hi]`, stopping once
/// the bracket is narrower than `tol`. Returns the best abscissa seen and its
/// value.
pub fn golden_section_max<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> (f64, f64) {
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    while hi - lo > tol {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        }
    }
    if f1 >= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Grid scan of `f` over a full period followed by golden-section refinement
/// of the best cell.
fn periodic_max<F: Fn(f64) -> f64>(f: F, grid: usize) -> (f64, f64) {
    let step = TAU / grid as f64;
    let (mut best, mut best_value) = (0.0, f(0.0));
    for k in 1..grid {
        let theta = k as f64 * step;
        let value = f(theta);
        if value > best_value {
            best = theta;
            best_value = value;
        }
    }
    let (theta, value) = golden_section_max(&f, best - step, best + step, tolerance::ANGLE_REFINE);
    if value >= best_value {
        (theta.rem_euclid(TAU), value)
    } else {
        (best, best_value)
    }
}

/// Angle at `e^{iθ}` subtended by `a` and `b`.
fn boundary_angle(a: Point, b: Point, theta: f64) -> f64 {
    let z = Point::from_polar(1.0, theta);
    ((a - z) / (b - z)).arg().abs()
}

/// Maximizer `θ` and value of the angle `∠(a, e^{iθ}, b)`.
pub fn visual_angle_search(a: DiskPoint, b: DiskPoint, grid: usize) -> (f64, f64) {
    assert!(grid >= 360, "grid must have at least 360 cells");
    let (a, b) = (a.value(), b.value());
    if a == b {
        return (0.0, 0.0);
    }
    periodic_max(|theta| boundary_angle(a, b, theta), grid)
}

/// The visual angle distance by maximizing over the boundary circle.
pub fn visual_angle_bruteforce(a: DiskPoint, b: DiskPoint, grid: usize) -> f64 {
    visual_angle_search(a, b, grid).1
}

/// The point `p = z0 + s·dir` with `h(z0, p) = t` in any convex domain,
/// located by bisection on `s`.
pub fn hilbert_ray_point_in<D: ConvexDomain + ?Sized>(domain: &D, z0: Point, dir: Point, t: f64) -> Result<Point> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::InvalidRadius(t));
    }
    if !domain.contains(z0) {
        return Err(domain.outside(z0));
    }
    let dir = dir / dir.norm();
    let exit = domain.exit_distance(z0, dir)?;
    let (mut lo, mut hi) = (0.0, exit);
    const STEPS: usize = 200;
    for _ in 0..STEPS {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            let p = z0 + dir * mid;
            if domain.contains(p) {
                return Ok(p);
            }
            return Err(Error::ConvergenceFailure(STEPS));
        }
        let p = z0 + dir * mid;
        if !domain.contains(p) || hilbert_distance(domain, z0, p)? > t {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Err(Error::ConvergenceFailure(STEPS))
}

/// The point of the Hilbert circle `∂B_h(z0, t)` in direction `dir`.
pub fn hilbert_ray_point(z0: DiskPoint, dir: Point, t: f64) -> Result<DiskPoint> {
    DiskPoint::new(hilbert_ray_point_in(&UnitDisk, z0.value(), dir, t)?)
}

/// Checks that `h(z0, ·)` strictly increases over `samples` radii of the ray
/// from `z0` in direction `dir`, up to the Hilbert radius `t_max`.
pub fn ray_is_monotone(z0: DiskPoint, dir: Point, t_max: f64, samples: usize) -> Result<bool> {
    let end = hilbert_ray_point(z0, dir, t_max)?;
    let span = end.value() - z0.value();
    let mut last = 0.0;
    for k in 1..=samples {
        let p = DiskPoint::new(z0.value() + span * (k as f64 / samples as f64))?;
        let h = hilbert_disk(z0, p);
        if h <= last {
            return Ok(false);
        }
        last = h;
    }
    Ok(true)
}

/// Orthogonal projection of the origin onto the line through `a` and `b`.
pub fn foot_of_perpendicular(a: Point, b: Point) -> Result<Point> {
    let d = b - a;
    if d.norm() < tolerance::COINCIDENT {
        return Err(Error::CoincidentPoints);
    }
    Ok(a - d * ((d.conj() * a).re / d.norm_sqr()))
}

/// Intersection of the lines `L[a, b]` and `L[c, d]` by solving
/// `a + s (b - a) = c + u (d - c)` with Cramer's rule.
pub fn line_intersection_solve(a: Point, b: Point, c: Point, d: Point) -> Result<Point> {
    let (p, q, r) = (b - a, d - c, c - a);
    let det = cross(p, q);
    if det.abs() <= tolerance::PARALLEL * p.norm() * q.norm() {
        return Err(Error::ParallelLines);
    }
    Ok(a + p * (cross(r, q) / det))
}

/// The midpoint segment parameter in its rational form
/// `(-(1 - |a|²) + sqrt((1 - |a|²)(1 - |b|²))) / (|a|² - |b|²)`.
///
/// The square root is corrected by one Newton step on the exact product, so
/// the only cancellation left is the one inherent in the formula. Returns
/// `None` when `|a| = |b|`.
pub fn midpoint_parameter_rational(a: DiskPoint, b: DiskPoint) -> Option<f64> {
    let (ga, gb) = (a.conformal_gap(), b.conformal_gap());
    let den = gb - ga;
    if den == 0.0 {
        return None;
    }
    let prod = ga * gb;
    let prod_err = ga.mul_add(gb, -prod);
    let root = prod.sqrt();
    let root_err = ((-root).mul_add(root, prod) + prod_err) / (2.0 * root);
    Some(((root - ga) + root_err) / den)
}

/// Extreme hyperbolic distances from the center to a Hilbert circle.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RhoExtrema {
    pub min: f64,
    pub max: f64,
    /// Ellipse parameters where the extrema are attained.
    pub argmin: f64,
    pub argmax: f64,
}

/// Minimum and maximum of `rho(z0, p(θ))` over the ellipse boundary, from a
/// 720-point scan refined by golden-section search.
pub fn rho_extrema_on_ellipse(ellipse: &HilbertEllipse) -> RhoExtrema {
    let z0 = ellipse.z0;
    let rho = |theta: f64| match DiskPoint::new(ellipse.point_at(theta)) {
        Ok(p) => rho_disk(z0, p),
        Err(_) => f64::INFINITY,
    };
    let (argmax, max) = periodic_max(rho, 720);
    let (argmin, neg_min) = periodic_max(|theta| -rho(theta), 720);
    RhoExtrema {
        min: -neg_min,
        max,
        argmin,
        argmax,
    }
}

/// Whether `p` lies on the counterclockwise arc of the unit circle from
/// `start` to `end`, endpoints excluded.
fn on_ccw_arc(start: Point, end: Point, p: Point) -> bool {
    let span = (end / start).arg().rem_euclid(TAU);
    let at = (p / start).arg().rem_euclid(TAU);
    at > 0.0 && at < span
}

/// The collinear configuration behind the equalities `rho(h, j) = rho(k, l)`
/// and `rho(h, k) = rho(j, l)`.
///
/// The chords through `g` from `a` and `d` end at `b` and `c`; the line
/// through `g` and a point `e` of the arc from `b` to `c` avoiding `a` and
/// `d` meets `L[b, c]`, `L[a, c]`, `L[b, d]`, `L[a, d]` in `h`, `k`, `j`, `l`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CollinearConfig {
    pub g: f64,
    pub a: Point,
    pub d: Point,
    pub e: Point,
    pub b: Point,
    pub c: Point,
    pub h: DiskPoint,
    pub j: DiskPoint,
    pub k: DiskPoint,
    pub l: DiskPoint,
}

/// The counterclockwise arc `(start, end)` between `b` and `c` that avoids
/// `a` and `d`, if there is one.
pub fn admissible_arc(g: f64, a: Point, d: Point) -> Option<(Point, Point)> {
    let (b, c) = (chord_partner(g, a), chord_partner(g, d));
    let clear = |s: Point, t: Point| !on_ccw_arc(s, t, a) && !on_ccw_arc(s, t, d);
    if clear(b, c) {
        Some((b, c))
    } else if clear(c, b) {
        Some((c, b))
    } else {
        None
    }
}

/// The second intersection of the line through `a` and the real point `g`
/// with the unit circle.
pub fn chord_partner(g: f64, a: Point) -> Point {
    (g - a) / (1.0 - g * a)
}

impl CollinearConfig {
    pub fn new(g: f64, a: Point, d: Point, e: Point) -> Result<Self> {
        use Error::InadmissibleConfiguration as Bad;
        if !(g > 0.0 && g.is_finite()) {
            return Err(Bad("g must be positive"));
        }
        if [a, d, e].iter().any(|z| (z.norm() - 1.0).abs() > 1e-12) {
            return Err(Bad("a, d and e must lie on the unit circle"));
        }
        let (b, c) = (chord_partner(g, a), chord_partner(g, d));
        let far = |p: Point, q: Point| (p - q).norm() > 1e-9;
        if !(far(a, b) && far(d, c) && far(a, d) && far(b, c)) {
            return Err(Bad("chord endpoints coincide"));
        }
        let on_arc = admissible_arc(g, a, d).is_some_and(|(start, end)| on_ccw_arc(start, end, e));
        if !on_arc || !far(e, b) || !far(e, c) {
            return Err(Bad("e is not inside the arc from b to c avoiding a and d"));
        }
        let g_point = Point::new(g, 0.0);
        let meet = |p: Point, q: Point| -> Result<DiskPoint> {
            let z = line_intersection(p, q, g_point, e).map_err(|_| Bad("parallel lines"))?;
            if z.norm() >= tolerance::SAMPLE_RADIUS {
                return Err(Bad("intersection point outside the disk"));
            }
            DiskPoint::new(z)
        };
        Ok(CollinearConfig {
            g,
            a,
            d,
            e,
            b,
            c,
            h: meet(b, c)?,
            k: meet(a, c)?,
            j: meet(b, d)?,
            l: meet(a, d)?,
        })
    }

    /// Largest distance from `h`, `j`, `k`, `l` to the line `L[g, e]`.
    pub fn collinearity_residual(&self) -> f64 {
        let g = Point::new(self.g, 0.0);
        let dir = self.e - g;
        [self.h, self.j, self.k, self.l]
            .iter()
            .map(|p| cross(p.value() - g, dir).abs() / dir.norm())
            .fold(0.0, f64::max)
    }
}

/// Two values that should agree.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Equality {
    pub left: f64,
    pub right: f64,
}

impl Equality {
    fn of<F: Fn(DiskPoint, DiskPoint) -> f64>(f: F, p: (DiskPoint, DiskPoint), q: (DiskPoint, DiskPoint)) -> Self {
        Equality {
            left: f(p.0, p.1),
            right: f(q.0, q.1),
        }
    }

    pub fn gap(&self) -> f64 {
        (self.left - self.right).abs()
    }
}

/// The six metric equalities of a collinear configuration together with the
/// pseudo-hyperbolic moduli they follow from.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ConfigReport {
    pub config: CollinearConfig,
    pub rho_hj_kl: Equality,
    pub rho_hk_jl: Equality,
    pub hilbert_hj_kl: Equality,
    pub hilbert_hk_jl: Equality,
    pub visual_hj_kl: Equality,
    pub visual_hk_jl: Equality,
    pub pseudo_hj_kl: Equality,
    pub pseudo_hk_jl: Equality,
    pub collinearity: f64,
}

impl ConfigReport {
    /// Largest gap among the hyperbolic and pseudo-hyperbolic equalities.
    pub fn rho_violation(&self) -> f64 {
        [self.rho_hj_kl, self.rho_hk_jl, self.pseudo_hj_kl, self.pseudo_hk_jl]
            .iter()
            .map(Equality::gap)
            .fold(0.0, f64::max)
    }

    /// Largest gap among the Hilbert and visual angle equalities, and the
    /// collinearity residual.
    pub fn hilbert_visual_violation(&self) -> f64 {
        [self.hilbert_hj_kl, self.hilbert_hk_jl, self.visual_hj_kl, self.visual_hk_jl]
            .iter()
            .map(Equality::gap)
            .fold(self.collinearity, f64::max)
    }
}

pub fn collinear_config_check(g: f64, a: Point, d: Point, e: Point) -> Result<ConfigReport> {
    let config = CollinearConfig::new(g, a, d, e)?;
    let CollinearConfig { h, j, k, l, .. } = config;
    Ok(ConfigReport {
        config,
        rho_hj_kl: Equality::of(rho_disk, (h, j), (k, l)),
        rho_hk_jl: Equality::of(rho_disk, (h, k), (j, l)),
        hilbert_hj_kl: Equality::of(hilbert_disk, (h, j), (k, l)),
        hilbert_hk_jl: Equality::of(hilbert_disk, (h, k), (j, l)),
        visual_hj_kl: Equality::of(visual_angle_disk, (h, j), (k, l)),
        visual_hk_jl: Equality::of(visual_angle_disk, (h, k), (j, l)),
        pseudo_hj_kl: Equality::of(pseudo_hyperbolic, (h, j), (k, l)),
        pseudo_hk_jl: Equality::of(pseudo_hyperbolic, (h, k), (j, l)),
        collinearity: config.collinearity_residual(),
    })
}

/// The boundary point `e` for which `j = k`: the line through `g` and the
/// intersection of `L[a, c]` and `L[b, d]`, met with the unit circle on the
/// admissible arc.
pub fn degenerate_e(g: f64, a: Point, d: Point) -> Result<Point> {
    let (b, c) = (chord_partner(g, a), chord_partner(g, d));
    let p = line_intersection(a, c, b, d)?;
    let g_point = Point::new(g, 0.0);
    let dir = (p - g_point) / (p - g_point).norm();
    // |g + s dir|² = 1 is s² + 2 Re(g dir̄) s + g² - 1 = 0.
    let half_b = (g_point * dir.conj()).re;
    let disc = half_b * half_b - (g * g - 1.0);
    if disc <= 0.0 {
        return Err(Error::InadmissibleConfiguration("the line through g misses the disk"));
    }
    let candidates = [-half_b + disc.sqrt(), -half_b - disc.sqrt()].map(|s| g_point + dir * s);
    candidates
        .into_iter()
        .find(|&e| CollinearConfig::new(g, a, d, e / e.norm()).is_ok())
        .map(|e| e / e.norm())
        .ok_or(Error::InadmissibleConfiguration("no admissible degenerate e"))
}

/// Sign pattern of `C2` over a point set.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SignReport {
    pub samples: usize,
    pub positive: usize,
    pub negative: usize,
    /// Smallest normalized `|C2|`.
    pub min_abs: f64,
    /// Offset into the Halton sequence.
    pub halton_offset: u64,
}

impl SignReport {
    pub fn constant_sign(&self) -> bool {
        (self.positive == 0 || self.negative == 0) && self.min_abs > 0.0
    }
}

/// Smallest number of interior samples in [`c2_disk_sign_sweep`].
pub const MIN_SIGN_SAMPLES: usize = 10_000;

/// Evaluates `C2` at `n` quasi-random points of the disk `|z| <= 0.999` and at
/// `n / 10` points of the circle `|z| = 0.999`.
pub fn c2_disk_sign_sweep(z0: DiskPoint, t: f64, n: usize) -> SignReport {
    let n = n.max(MIN_SIGN_SAMPLES);
    let conic = c2_conic(z0, t);
    let rim = n / 10;
    let offset = 0;
    let points = halton_disk(n, tolerance::SAMPLE_RADIUS, offset)
        .chain((0..rim).map(|k| Point::from_polar(tolerance::SAMPLE_RADIUS, TAU * k as f64 / rim as f64)));
    let mut report = SignReport {
        samples: n + rim,
        positive: 0,
        negative: 0,
        min_abs: f64::INFINITY,
        halton_offset: offset,
    };
    for z in points {
        let value = conic.eval(z) / conic.scale();
        if value > 0.0 {
            report.positive += 1;
        } else if value < 0.0 {
            report.negative += 1;
        }
        report.min_abs = report.min_abs.min(value.abs());
    }
    report
}
