//! Figures: every number drawn is computed by the library and recorded in a
//! JSON sidecar next to the SVG.

use std::f64::consts::TAU;

use hilbert_disk::circles::EuclideanDisk;
use hilbert_disk::mobius::{sharpness_sweep, SharpnessSample};
use hilbert_disk::oracles::{hilbert_ray_point_in, rho_extrema_on_ellipse, RhoExtrema};
use hilbert_disk::report::to_json;
use hilbert_disk::{
    hilbert_circle, hilbert_disk, hyperbolic_disk_euclidean, rho_disk, ConvexPolygon, DiskPoint, Error,
    HilbertEllipse, Point,
};
use serde::Serialize;

use crate::svg::{Stroke, Svg, View, SIZE};

/// Boundary samples of drawn ellipses.
const ELLIPSE_SAMPLES: usize = 720;
/// Directions sampled for Hilbert balls in polygons.
pub const BALL_DIRECTIONS: usize = 360;

pub struct Rendered {
    pub svg: String,
    pub sidecar: String,
}

fn render<T: Serialize>(svg: Svg, content: &T) -> Rendered {
    Rendered {
        svg: svg.finish(),
        sidecar: to_json(content),
    }
}

fn ellipse_path(svg: &mut Svg, view: &View, ellipse: &HilbertEllipse) {
    svg.path(view, &ellipse.boundary(ELLIPSE_SAMPLES), true, Stroke::Hilbert);
}

fn euclidean_circle(svg: &mut Svg, view: &View, disk: &EuclideanDisk, stroke: Stroke) {
    svg.circle(view, disk.center, disk.radius, stroke);
}

/// A Hilbert circle with its hyperbolic companions.
#[derive(Debug, Serialize)]
pub struct TangentCircles {
    pub kind: &'static str,
    pub ellipse: HilbertEllipse,
    pub inscribed_radius: f64,
    pub circumscribed_radius: f64,
    pub inscribed_disk: EuclideanDisk,
    pub circumscribed_disk: EuclideanDisk,
    /// Brute-force extrema of `rho(z0, ·)` on the ellipse.
    pub rho_extrema: RhoExtrema,
}

pub fn tangent_circles(z0: DiskPoint, t: f64) -> Result<TangentCircles, Error> {
    let ellipse = hilbert_circle(z0, t)?;
    let s = ellipse.circumscribed_radius();
    Ok(TangentCircles {
        kind: "hilbert-circle-tangent",
        ellipse,
        inscribed_radius: ellipse.inscribed_radius(),
        circumscribed_radius: s,
        inscribed_disk: hyperbolic_disk_euclidean(z0, t)?,
        circumscribed_disk: hyperbolic_disk_euclidean(z0, s)?,
        rho_extrema: rho_extrema_on_ellipse(&ellipse),
    })
}

pub fn hilbert_circle_tangent(z0: DiskPoint, t: f64) -> Result<Rendered, Error> {
    let fig = tangent_circles(z0, t)?;
    let view = View::disk();
    let mut svg = Svg::new();
    svg.comment(&format!("Hilbert circle about {} of radius {t}", z0.value()));
    svg.circle(&view, Point::new(0.0, 0.0), 1.0, Stroke::Boundary);
    euclidean_circle(&mut svg, &view, &fig.circumscribed_disk, Stroke::Circumscribed);
    ellipse_path(&mut svg, &view, &fig.ellipse);
    euclidean_circle(&mut svg, &view, &fig.inscribed_disk, Stroke::Inscribed);
    svg.dot(&view, z0.value());
    Ok(render(svg, &fig))
}

#[derive(Debug, Serialize)]
pub struct FamilyMember {
    pub ellipse: HilbertEllipse,
    pub inscribed_disk: EuclideanDisk,
    /// `semi_radial / semi_transverse`, decreasing toward the boundary.
    pub flatness: f64,
}

#[derive(Debug, Serialize)]
pub struct CircleFamily {
    pub kind: &'static str,
    pub re: f64,
    pub radius_pair: (f64, f64),
    pub hilbert_radius: f64,
    pub hyperbolic_radius: f64,
    pub members: Vec<FamilyMember>,
}

/// Hilbert circles centered on `Re z = re` at heights
/// `0.9 sqrt(1 - re²) k / count`, all with the radius `h(p, q)` of a real
/// pair, together with hyperbolic circles of radius `rho(p, q)`.
pub fn circle_family_data(re: f64, pair: (f64, f64), count: usize) -> Result<CircleFamily, Error> {
    if re.is_nan() || re.abs() >= 1.0 {
        return Err(Error::NotInDisk(format!("Re z = {re}")));
    }
    let p = DiskPoint::from_re_im(pair.0, 0.0)?;
    let q = DiskPoint::from_re_im(pair.1, 0.0)?;
    if pair.0 == pair.1 {
        return Err(Error::CoincidentPoints);
    }
    let (t, rho) = (hilbert_disk(p, q), rho_disk(p, q));
    let height = 0.9 * (1.0 - re * re).sqrt();
    let members = (0..count)
        .map(|k| {
            let z0 = DiskPoint::from_re_im(re, height * k as f64 / count as f64)?;
            let ellipse = hilbert_circle(z0, t)?;
            Ok(FamilyMember {
                ellipse,
                inscribed_disk: hyperbolic_disk_euclidean(z0, rho)?,
                flatness: ellipse.semi_radial / ellipse.semi_transverse,
            })
        })
        .collect::<Result<_, Error>>()?;
    Ok(CircleFamily {
        kind: "circle-family",
        re,
        radius_pair: pair,
        hilbert_radius: t,
        hyperbolic_radius: rho,
        members,
    })
}

pub fn circle_family(re: f64, pair: (f64, f64), count: usize) -> Result<Rendered, Error> {
    let fig = circle_family_data(re, pair, count)?;
    let view = View::disk();
    let mut svg = Svg::new();
    svg.comment(&format!("{count} Hilbert circles centered on Re z = {re}"));
    svg.circle(&view, Point::new(0.0, 0.0), 1.0, Stroke::Boundary);
    for member in &fig.members {
        ellipse_path(&mut svg, &view, &member.ellipse);
        euclidean_circle(&mut svg, &view, &member.inscribed_disk, Stroke::Inscribed);
        svg.dot(&view, member.ellipse.z0.value());
    }
    Ok(render(svg, &fig))
}

#[derive(Debug, Serialize)]
pub struct PolygonBall {
    pub kind: &'static str,
    pub vertices: Vec<Point>,
    pub center: Point,
    pub t: f64,
    pub boundary: Vec<Point>,
}

/// Boundary of the Hilbert ball `B_h(center, t)` in a polygon, one point per
/// direction found by bisection along the ray.
pub fn polygon_ball_data(polygon: &ConvexPolygon, center: Point, t: f64) -> Result<PolygonBall, Error> {
    let boundary = (0..BALL_DIRECTIONS)
        .map(|k| {
            let dir = Point::from_polar(1.0, TAU * k as f64 / BALL_DIRECTIONS as f64);
            hilbert_ray_point_in(polygon, center, dir, t)
        })
        .collect::<Result<_, Error>>()?;
    Ok(PolygonBall {
        kind: "polygon-ball",
        vertices: polygon.vertices().to_vec(),
        center,
        t,
        boundary,
    })
}

pub fn polygon_ball(polygon: &ConvexPolygon, center: Point, t: f64) -> Result<Rendered, Error> {
    let fig = polygon_ball_data(polygon, center, t)?;
    let extent = fig.vertices.iter().fold(0.0f64, |m, v| m.max(v.re.abs()).max(v.im.abs()));
    let view = View::with_extent(extent);
    let mut svg = Svg::new();
    svg.comment(&format!("Hilbert ball of radius {t} in a polygon"));
    svg.path(&view, &fig.vertices, true, Stroke::Boundary);
    svg.path(&view, &fig.boundary, true, Stroke::Hilbert);
    svg.dot(&view, center);
    Ok(render(svg, &fig))
}

#[derive(Debug, Serialize)]
pub struct SharpnessPlot {
    pub kind: &'static str,
    pub w: f64,
    pub decades: (u32, u32),
    pub samples: Vec<SharpnessSample>,
    /// Slope of `log(1 - quotient)` against `log t` between the end samples.
    pub convergence_order: f64,
}

/// Sample points per decade of the sharpness plot.
const PER_DECADE: u32 = 8;

pub fn sharpness_data(w: f64, decades: (u32, u32)) -> Result<SharpnessPlot, Error> {
    let (lo, hi) = decades;
    let ts: Vec<f64> = (0..=(hi - lo) * PER_DECADE)
        .map(|j| 10f64.powf(-(lo as f64 + j as f64 / PER_DECADE as f64)))
        .collect();
    let samples = sharpness_sweep(w, &ts)?;
    let (first, last) = (samples[0], samples[samples.len() - 1]);
    let convergence_order = ((1.0 - last.quotient).ln() - (1.0 - first.quotient).ln()) / (last.t.ln() - first.t.ln());
    Ok(SharpnessPlot {
        kind: "sharpness-plot",
        w,
        decades,
        samples,
        convergence_order,
    })
}

pub fn sharpness_plot(w: f64, decades: (u32, u32)) -> Result<Rendered, Error> {
    let fig = sharpness_data(w, decades)?;
    let (lo, hi) = (decades.0 as f64, decades.1 as f64);
    let q_min = fig.samples.iter().map(|s| s.quotient).fold(1.0, f64::min);
    let q_lo = q_min - 0.05 * (1.0 - q_min).max(1e-12);
    // Plot area [160, 920] × [100, 900]; x = -log10 t, y = quotient.
    let x = |t: f64| 160.0 + 760.0 * (-t.log10() - lo) / (hi - lo);
    let y = |q: f64| 900.0 - 800.0 * (q - q_lo) / (1.0 - q_lo);
    let mut svg = Svg::new();
    svg.comment(&format!("quotient of the distortion bound for T_w, w = {w}"));
    svg.raw_path(&[(160.0, 900.0), (920.0, 900.0)], false, Stroke::Axis);
    svg.raw_path(&[(160.0, 900.0), (160.0, 100.0)], false, Stroke::Axis);
    svg.raw_path(&[(160.0, y(1.0)), (920.0, y(1.0))], false, Stroke::Axis);
    for d in decades.0..=decades.1 {
        let xd = x(10f64.powi(-(d as i32)));
        svg.raw_path(&[(xd, 900.0), (xd, 910.0)], false, Stroke::Axis);
        svg.text(xd, 940.0, "middle", &format!("1e-{d}"));
    }
    svg.text(150.0, y(1.0) + 7.0, "end", "1");
    svg.text(150.0, y(q_min) + 7.0, "end", &hilbert_disk::report::human(q_min));
    svg.text(540.0, 985.0, "middle", "t");
    svg.text(540.0, 60.0, "middle", &format!("quotient of the two sides, w = {w}"));
    let curve: Vec<(f64, f64)> = fig.samples.iter().map(|s| (x(s.t), y(s.quotient))).collect();
    svg.raw_path(&curve, false, Stroke::Curve);
    debug_assert!(curve.iter().all(|&(a, b)| (0.0..=SIZE).contains(&a) && (0.0..=SIZE).contains(&b)));
    Ok(render(svg, &fig))
}
