//! Seeded verification sweeps. Each suite emits one report per checked
//! property, and a report passes when its largest violation is within its
//! tolerance.

use std::f64::consts::{FRAC_PI_4, TAU};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use thiserror::Error;

use crate::circles::{
    diameter_bound, euclidean_inclusion_check, hilbert_circle, hilbert_midpoint, hyperbolic_disk_euclidean,
    midpoint_parameter,
};
use crate::error::Result;
use crate::geometry::{chord_offset, fmt_point, pt, DiskPoint, Point};
use crate::metrics::{half_sinh_rho, hilbert_closed_form, hilbert_disk, hilbert_polygon, rho_disk, visual_angle_disk};
use crate::mobius::{check_distortion_bound, sharpness_sweep, TestMap};
use crate::oracles::{
    admissible_arc, c2_disk_sign_sweep, collinear_config_check, degenerate_e, hilbert_ray_point, midpoint_parameter_rational,
    ray_is_monotone, rho_extrema_on_ellipse, visual_angle_bruteforce, ConfigReport,
};
use crate::polygon::ConvexPolygon;
use crate::report::{Tally, VerificationReport};
use crate::sampling::DiskSampler;
use crate::tolerance::{accept, SAMPLE_RADIUS};

/// The verification suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Identities,
    Oracle,
    Ellipse,
    Tangency,
    Midpoint,
    Distortion,
    Sharpness,
    Config,
    Inclusion,
    HyperbolicDisk,
    Polygon,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Identities,
        Suite::Oracle,
        Suite::Ellipse,
        Suite::Tangency,
        Suite::Midpoint,
        Suite::Distortion,
        Suite::Sharpness,
        Suite::Config,
        Suite::Inclusion,
        Suite::HyperbolicDisk,
        Suite::Polygon,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Oracle => "oracle",
            Suite::Ellipse => "ellipse",
            Suite::Tangency => "tangency",
            Suite::Midpoint => "midpoint",
            Suite::Distortion => "distortion",
            Suite::Sharpness => "sharpness",
            Suite::Config => "config",
            Suite::Inclusion => "inclusion",
            Suite::HyperbolicDisk => "hyperbolic-disk",
            Suite::Polygon => "polygon",
        }
    }

    pub fn run(self, opts: &VerifyOptions) -> Vec<VerificationReport> {
        match self {
            Suite::Identities => identities(opts),
            Suite::Oracle => oracle(opts),
            Suite::Ellipse => ellipse(opts),
            Suite::Tangency => tangency(opts),
            Suite::Midpoint => midpoint(opts),
            Suite::Distortion => distortion(opts),
            Suite::Sharpness => sharpness(opts),
            Suite::Config => config(opts),
            Suite::Inclusion => inclusion(opts),
            Suite::HyperbolicDisk => hyperbolic_disk(opts),
            Suite::Polygon => polygon(opts),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown suite `{0}`")]
pub struct UnknownSuite(pub String);

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

/// Seed and sample count shared by all suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Number of random cases in the main sweep of each suite; secondary
    /// sweeps use a tenth of it.
    pub n: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { seed: 7, n: 10_000 }
    }
}

impl VerifyOptions {
    fn tenth(&self) -> usize {
        (self.n / 10).max(1)
    }

    fn hundredth(&self) -> usize {
        (self.n / 100).max(1)
    }
}

/// Runs every suite in order.
pub fn run_all(opts: &VerifyOptions) -> Vec<VerificationReport> {
    Suite::ALL.iter().flat_map(|suite| suite.run(opts)).collect()
}

fn timed<F: FnOnce() -> Tally>(seed: u64, sweep: F) -> VerificationReport {
    let start = Instant::now();
    let tally = sweep();
    tally.finish(seed, start.elapsed().as_millis() as u64)
}

fn pair_case(a: DiskPoint, b: DiskPoint) -> String {
    format!("a = {}, b = {}", fmt_point(a.value()), fmt_point(b.value()))
}

fn pairs(opts: &VerifyOptions, stream: u64, n: usize) -> Vec<(DiskPoint, DiskPoint)> {
    let mut s = DiskSampler::stream(opts.seed, stream);
    (0..n).map(|_| s.pair()).collect()
}

fn identities(opts: &VerifyOptions) -> Vec<VerificationReport> {
    let sample = pairs(opts, 1, opts.n);
    let hyperbolic = timed(opts.seed, || {
        let mut tally = Tally::new("identities.hilbert-hyperbolic", accept::HILBERT_HYPERBOLIC);
        for &(a, b) in &sample {
            let Ok(m) = chord_offset(a, b) else {
                tally.record_error(pair_case(a, b));
                continue;
            };
            let u = half_sinh_rho(a, b);
            let lhs = (hilbert_disk(a, b) / 2.0).sinh();
            let gap = (lhs - (1.0 - m * m).sqrt() * u).abs() / (1.0 + u);
            tally.record(gap, || pair_case(a, b));
        }
        tally
    });
    let visual = timed(opts.seed, || {
        let mut tally = Tally::new("identities.visual-hilbert", accept::VISUAL_HILBERT);
        for &(a, b) in &sample {
            let Ok(m) = chord_offset(a, b) else {
                tally.record_error(pair_case(a, b));
                continue;
            };
            let lhs = (visual_angle_disk(a, b) / 2.0).tan();
            let rhs = ((1.0 + m) / (1.0 - m)).sqrt() * (hilbert_disk(a, b) / 4.0).tanh();
            tally.record((lhs - rhs).abs(), || pair_case(a, b));
        }
        tally
    });
    vec![hyperbolic, visual]
}

/// Boundary grid resolution of the brute-force visual angle.
pub const VISUAL_GRID: usize = 10_000;

fn oracle(opts: &VerifyOptions) -> Vec<VerificationReport> {
    let visual = timed(opts.seed, || {
        let mut tally = Tally::new("oracle.visual-angle", accept::VISUAL_ORACLE);
        for (a, b) in pairs(opts, 2, opts.tenth()) {
            let gap = (visual_angle_disk(a, b) - visual_angle_bruteforce(a, b, VISUAL_GRID)).abs();
            tally.record(gap, || pair_case(a, b));
        }
        tally
    });
    let closed = timed(opts.seed, || {
        let mut tally = Tally::new("oracle.hilbert-closed-form", accept::HILBERT_CLOSED_FORM);
        for (a, b) in pairs(opts, 3, opts.n) {
            let h = hilbert_disk(a, b);
            let gap = (hilbert_closed_form(a, b) - h).abs() / h.max(f64::MIN_POSITIVE);
            tally.record(gap, || pair_case(a, b));
        }
        tally
    });
    vec![visual, closed]
}

const CIRCLE_RADII: [f64; 4] = [0.25, 0.5, 1.0, 2.0];

/// Centers `k/10 · e^{iπj/4}` for `k < 10`, `j < 8`, each with every radius.
fn ellipse_grid() -> Vec<(DiskPoint, f64)> {
    let mut grid = Vec::new();
    for k in 0..10 {
        for j in 0..8 {
            let z0 = DiskPoint::new(Point::from_polar(k as f64 / 10.0, j as f64 * FRAC_PI_4))
                .expect("grid centers lie inside the disk");
            grid.extend(CIRCLE_RADII.iter().map(|&t| (z0, t)));
        }
    }
    grid
}

fn circle_case(z0: DiskPoint, t: f64) -> String {
    format!("z0 = {}, t = {t}", fmt_point(z0.value()))
}

fn ellipse(opts: &VerifyOptions) -> Vec<VerificationReport> {
    let grid = ellipse_grid();
    let implicit = timed(opts.seed, || {
        let mut tally = Tally::new("ellipse.implicit", accept::ELLIPSE_IMPLICIT);
        for &(z0, t) in &grid {
            let e = hilbert_circle(z0, t).expect("grid radii are positive");
            let conic = e.implicit();
            for p in e.boundary(360) {
                tally.record(conic.normalized(p), || format!("{}, p = {}", circle_case(z0, t), fmt_point(p)));
            }
        }
        tally
    });
    let distance = timed(opts.seed, || {
        let mut tally = Tally::new("ellipse.distance", accept::ELLIPSE_DISTANCE);
        for &(z0, t) in &grid {
            let e = hilbert_circle(z0, t).expect("grid radii are positive");
            for p in e.boundary(360) {
                let case = || format!("{}, p = {}", circle_case(z0, t), fmt_point(p));
                match DiskPoint::new(p) {
                    Ok(p) => tally.record((hilbert_disk(z0, p) - t).abs(), case),
                    Err(_) => tally.record_error(case()),
                }
            }
        }
        tally
    });
    let rays = timed(opts.seed, || {
        let mut tally = Tally::new("ellipse.ray-bisection", accept::ELLIPSE_DISTANCE);
        for &(z0, t) in &grid {
            let conic = hilbert_circle(z0, t).expect("grid radii are positive").implicit();
            for k in 0..64 {
                let dir = Point::from_polar(1.0, TAU * k as f64 / 64.0);
                let case = || format!("{}, direction {k}/64", circle_case(z0, t));
                match hilbert_ray_point(z0, dir, t) {
                    Ok(p) => tally.record(conic.geometric_residual(p.value()), case),
                    Err(_) => tally.record_error(case()),
                }
            }
        }
        tally
    });
    let monotone = timed(opts.seed, || {
        let mut tally = Tally::new("ellipse.ray-monotonicity", 0.0);
        for &(z0, t) in &grid {
            for k in 0..8 {
                let dir = Point::from_polar(1.0, TAU * (k as f64 + 0.5) / 8.0);
                let ok = ray_is_monotone(z0, dir, t, 32).unwrap_or(false);
                tally.record(if ok { 0.0 } else { 1.0 }, || format!("{}, direction {k}/8", circle_case(z0, t)));
            }
        }
        tally
    });
    let sign = timed(opts.seed, || {
        let mut tally = Tally::new("ellipse.c2-sign", 0.0);
        for &(z0, t) in &grid {
            let report = c2_disk_sign_sweep(z0, t, 10_000);
            tally.record(if report.constant_sign() { 0.0 } else { 1.0 }, || {
                format!("{}, {report:?}", circle_case(z0, t))
            });
        }
        tally
    });
    vec![implicit, distance, rays, monotone, sign]
}

fn tangency(opts: &VerifyOptions) -> Vec<VerificationReport> {
    let report = timed(opts.seed, || {
        let mut tally = Tally::new("tangency.radii", accept::TANGENCY);
        for k in 0..10 {
            let x = k as f64 / 10.0;
            let z0 = DiskPoint::from_re_im(x, 0.0).expect("grid centers lie inside the disk");
            for t in CIRCLE_RADII {
                let e = hilbert_circle(z0, t).expect("grid radii are positive");
                let ext = rho_extrema_on_ellipse(&e);
                let r = t.exp();
                let s = 2.0 * ((r - 1.0) / ((r + 1.0).powi(2) - 4.0 * r * x * x).sqrt()).atanh();
                let gap = (ext.min - t).abs().max((ext.max - s).abs());
                tally.record(gap, || format!("{}, extrema {ext:?}, s = {s}", circle_case(z0, t)));
            }
        }
        tally
    });
    vec![report]
}

fn midpoint(opts: &VerifyOptions) -> Vec<VerificationReport> {
    let sample = pairs(opts, 4, opts.n);
    let equal = timed(opts.seed, || {
        let mut tally = Tally::new("midpoint.equalities", accept::MIDPOINT);
        for &(a, b) in &sample {
            let Ok(c) = hilbert_midpoint(a, b) else {
                tally.record_error(pair_case(a, b));
                continue;
            };
            let gap_h = (hilbert_disk(a, c) - hilbert_disk(c, b)).abs();
            let gap_rho = (rho_disk(a, c) - rho_disk(c, b)).abs();
            tally.record(gap_h.max(gap_rho), || pair_case(a, b));
        }
        tally
    });
    let parameter = timed(opts.seed, || {
        let mut tally = Tally::new("midpoint.parameter", accept::MIDPOINT_PARAMETER);
        for &(a, b) in &sample {
            if (a.conformal_gap() - b.conformal_gap()).abs() <= 1e-6 {
                continue;
            }
            let rational = midpoint_parameter_rational(a, b).expect("moduli differ");
            tally.record((midpoint_parameter(a, b) - rational).abs(), || pair_case(a, b));
        }
        tally
    });
    vec![equal, parameter]
}

const STRETCHES: [f64; 3] = [1.5, 2.0, 4.0];

fn distortion_case(map: &TestMap, a: DiskPoint, b: DiskPoint) -> String {
    format!("{map:?}, {}", pair_case(a, b))
}

fn bound_sweep(name: &str, opts: &VerifyOptions, stream: u64, maps: impl Fn(&mut DiskSampler, usize) -> TestMap) -> VerificationReport {
    timed(opts.seed, || {
        let mut tally = Tally::new(name, accept::DISTORTION);
        let mut s = DiskSampler::stream(opts.seed, stream);
        for i in 0..opts.tenth() {
            let map = maps(&mut s, i);
            let (a, b) = s.pair();
            match check_distortion_bound(|z| map.apply(z), a, b, map.dilatation()) {
                Ok(report) => tally.record((-report.slack).max(0.0), || distortion_case(&map, a, b)),
                Err(_) => tally.record_error(distortion_case(&map, a, b)),
            }
        }
        tally
    })
}

fn distortion(opts: &VerifyOptions) -> Vec<VerificationReport> {
    let mobius = bound_sweep("distortion.mobius", opts, 5, |s, _| TestMap::Automorphism(s.point()));
    let stretch = bound_sweep("distortion.radial-stretch", opts, 6, |_, i| TestMap::Stretch(STRETCHES[i % 3]));
    let sandwich = bound_sweep("distortion.composition", opts, 7, |s, i| TestMap::Sandwich {
        outer: s.point(),
        k: STRETCHES[i % 3],
        inner: s.point(),
    });
    let origin = timed(opts.seed, || {
        let mut tally = Tally::new("distortion.through-origin", accept::DISTORTION);
        let mut s = DiskSampler::stream(opts.seed, 8);
        for i in 0..opts.tenth() {
            let map = match i % 3 {
                0 => TestMap::Automorphism(s.point()),
                1 => TestMap::Stretch(STRETCHES[i % STRETCHES.len()]),
                _ => TestMap::Sandwich {
                    outer: s.point(),
                    k: STRETCHES[i % STRETCHES.len()],
                    inner: DiskPoint::ORIGIN,
                },
            };
            let dir = Point::from_polar(1.0, s.angle());
            let (ra, rb) = (s.uniform(-SAMPLE_RADIUS, SAMPLE_RADIUS), s.uniform(-SAMPLE_RADIUS, SAMPLE_RADIUS));
            let (Ok(a), Ok(b)) = (DiskPoint::new(dir * ra), DiskPoint::new(dir * rb)) else {
                continue;
            };
            let k = map.dilatation();
            match check_distortion_bound(|z| map.apply(z), a, b, k) {
                Ok(report) => {
                    let d_gap = (report.d - 2f64.powf(1.0 - 1.0 / k)).abs();
                    tally.record((-report.slack).max(d_gap), || distortion_case(&map, a, b));
                }
                Err(_) => tally.record_error(distortion_case(&map, a, b)),
            }
        }
        tally
    });
    vec![mobius, stretch, sandwich, origin]
}

/// Source parameters of the sharpness experiment and the quotients frozen
/// from a 40-digit evaluation of
/// `(1 + sqrt(1 + c² u²)) / (1 + sqrt(1 + u²))`, `c = sqrt(1 - m²)`.
pub const SHARPNESS_W: f64 = 0.9;
#[allow(clippy::excessive_precision)]
pub const SHARPNESS_GOLDEN: [(f64, f64); 3] = [
    (1e-2, 0.999_918_998_461_124_65),
    (1e-3, 0.999_999_189_999_846_10),
    (1e-4, 0.999_999_991_899_999_98),
];

fn sharpness(opts: &VerifyOptions) -> Vec<VerificationReport> {
    let ts: Vec<f64> = SHARPNESS_GOLDEN.iter().map(|&(t, _)| t).collect();
    let samples = sharpness_sweep(SHARPNESS_W, &ts);
    let golden = timed(opts.seed, || {
        let mut tally = Tally::new("sharpness.golden", accept::SHARPNESS_GOLDEN);
        match &samples {
            Ok(samples) => {
                for (sample, &(t, q)) in samples.iter().zip(&SHARPNESS_GOLDEN) {
                    tally.record((sample.quotient - q).abs(), || format!("t = {t}, quotient {}", sample.quotient));
                }
            }
            Err(e) => tally.record_error(e.to_string()),
        }
        tally
    });
    let shape = timed(opts.seed, || {
        let mut tally = Tally::new("sharpness.below-one-increasing", 0.0);
        match &samples {
            Ok(samples) => {
                for (i, sample) in samples.iter().enumerate() {
                    let rises = i == 0 || sample.quotient > samples[i - 1].quotient;
                    let ok = sample.quotient < 1.0 && rises;
                    tally.record(if ok { 0.0 } else { 1.0 }, || format!("{sample:?}"));
                }
            }
            Err(e) => tally.record_error(e.to_string()),
        }
        tally
    });
    vec![golden, shape]
}

/// Range of the real point `g`. Admissible configurations have `g > 1`,
/// where two opposite sides of the quadrilateral `a, b, c, d` meet.
const G_RANGE: (f64, f64) = (0.05, 3.0);

/// Random admissible configurations, the `j = k` family with small
/// perturbations, and the configurations symmetric in the real axis.
fn configurations(opts: &VerifyOptions) -> (Vec<std::result::Result<ConfigReport, String>>, usize) {
    let mut s = DiskSampler::stream(opts.seed, 9);
    let on_circle = |s: &mut DiskSampler| Point::from_polar(1.0, s.angle());
    let mut out = Vec::new();
    let wanted = opts.tenth();
    let mut attempts = 0;
    while out.len() < wanted && attempts < 1000 * wanted {
        attempts += 1;
        let (g, a, d) = (s.uniform(G_RANGE.0, G_RANGE.1), on_circle(&mut s), on_circle(&mut s));
        let Some((start, end)) = admissible_arc(g, a, d) else { continue };
        let span = (end / start).arg().rem_euclid(TAU);
        let e = start * Point::from_polar(1.0, s.uniform(0.0, 1.0) * span);
        if let Ok(report) = collinear_config_check(g, a, d, e) {
            out.push(Ok(report));
        }
    }
    let random_found = out.len();
    let mut extra = 0;
    while extra < opts.hundredth() && attempts < 1000 * wanted {
        attempts += 1;
        let (g, a, d) = (s.uniform(G_RANGE.0, G_RANGE.1), on_circle(&mut s), on_circle(&mut s));
        let Ok(e) = degenerate_e(g, a, d) else { continue };
        for delta in [0.0, 1e-9, -1e-6] {
            let e = e * Point::from_polar(1.0, delta);
            match collinear_config_check(g, a, d, e) {
                Ok(report) => out.push(Ok(report)),
                Err(err) if delta == 0.0 => out.push(Err(format!("g = {g}, a = {a}, d = {d}, e = {e}: {err}"))),
                Err(_) => {}
            }
        }
        extra += 1;
    }
    let mut symmetric = 0;
    while symmetric < opts.hundredth() && attempts < 1000 * wanted {
        attempts += 1;
        let (g, a) = (s.uniform(G_RANGE.0, G_RANGE.1), on_circle(&mut s));
        for e in [pt(1.0, 0.0), pt(-1.0, 0.0)] {
            if let Ok(report) = collinear_config_check(g, a, a.conj(), e) {
                out.push(Ok(report));
                symmetric += 1;
            }
        }
    }
    (out, wanted.saturating_sub(random_found))
}

fn config(opts: &VerifyOptions) -> Vec<VerificationReport> {
    let start = Instant::now();
    let (reports, missing) = configurations(opts);
    let setup_ms = start.elapsed().as_millis() as u64;
    let sweep = |name: &str, tol: f64, violation: fn(&ConfigReport) -> f64| {
        let mut tally = Tally::new(name, tol);
        for report in &reports {
            match report {
                Ok(r) => tally.record(violation(r), || format!("{:?}", r.config)),
                Err(case) => tally.record_error(case.clone()),
            }
        }
        if missing > 0 {
            tally.record_error(format!("{missing} random configurations could not be sampled"));
        }
        tally.finish(opts.seed, setup_ms)
    };
    vec![
        sweep("config.rho", accept::CONFIG_RHO, ConfigReport::rho_violation),
        sweep(
            "config.hilbert-visual",
            accept::CONFIG_HILBERT_VISUAL,
            ConfigReport::hilbert_visual_violation,
        ),
    ]
}

fn inclusion(opts: &VerifyOptions) -> Vec<VerificationReport> {
    let grid = ellipse_grid();
    let hyperbolic = timed(opts.seed, || {
        let mut tally = Tally::new("inclusion.hyperbolic-in-hilbert", accept::INCLUSION);
        for &(z0, t) in &grid {
            let disk = hyperbolic_disk_euclidean(z0, t).expect("grid radii are positive");
            for k in 0..360 {
                let p = disk.point_at(TAU * k as f64 / 360.0);
                let case = || format!("{}, p = {}", circle_case(z0, t), fmt_point(p));
                match DiskPoint::new(p) {
                    Ok(p) => tally.record((hilbert_disk(z0, p) - t).max(0.0), case),
                    Err(_) => tally.record_error(case()),
                }
            }
        }
        tally
    });
    let euclidean_cases: Vec<(f64, f64)> = (1..9)
        .flat_map(|k| {
            let z0 = k as f64 / 10.0;
            [0.1, 0.5, 0.9].map(|f| (z0, f * (1.0 - z0)))
        })
        .collect();
    let euclidean = timed(opts.seed, || {
        let mut tally = Tally::new("inclusion.euclidean-in-hilbert", accept::INCLUSION);
        for &(z0, s) in &euclidean_cases {
            match euclidean_inclusion_check(z0, s, 3600) {
                Ok(report) => tally.record(report.excess, || format!("{report:?}")),
                Err(e) => tally.record_error(format!("z0 = {z0}, s = {s}: {e}")),
            }
        }
        tally
    });
    let diagonal = |s: &mut DiskSampler| {
        let x = s.point();
        (x, DiskPoint::new(-x.value()).expect("negation stays in the disk"))
    };
    let tangent = timed(opts.seed, || {
        let mut tally = Tally::new("inclusion.tangent-points", accept::TANGENT_POINT);
        for &(z0, t) in &grid {
            let disk = hyperbolic_disk_euclidean(z0, t).expect("grid radii are positive");
            let axis = if z0.norm() == 0.0 { pt(1.0, 0.0) } else { z0.value() / z0.norm() };
            for p in [disk.center + axis * disk.radius, disk.center - axis * disk.radius] {
                let case = || format!("{}, p = {}", circle_case(z0, t), fmt_point(p));
                match DiskPoint::new(p) {
                    Ok(p) => tally.record((hilbert_disk(z0, p) - t).abs(), case),
                    Err(_) => tally.record_error(case()),
                }
            }
        }
        for &(z0, s) in &euclidean_cases {
            match euclidean_inclusion_check(z0, s, 8) {
                Ok(report) => tally.record(report.tangent_gap, || format!("{report:?}")),
                Err(e) => tally.record_error(format!("z0 = {z0}, s = {s}: {e}")),
            }
        }
        let mut s = DiskSampler::stream(opts.seed, 10);
        for _ in 0..opts.hundredth() {
            let (x, y) = diagonal(&mut s);
            tally.record(diameter_bound(x, y).slack.abs(), || pair_case(x, y));
        }
        tally
    });
    let diameter = timed(opts.seed, || {
        let mut tally = Tally::new("inclusion.diameter", accept::DIAMETER);
        let mut s = DiskSampler::stream(opts.seed, 11);
        for _ in 0..opts.n {
            let (x, y) = s.pair();
            tally.record((-diameter_bound(x, y).slack).max(0.0), || pair_case(x, y));
        }
        for _ in 0..opts.hundredth() {
            let (x, y) = diagonal(&mut s);
            tally.record((-diameter_bound(x, y).slack).max(0.0), || pair_case(x, y));
        }
        tally
    });
    vec![hyperbolic, euclidean, tangent, diameter]
}

fn hyperbolic_disk(opts: &VerifyOptions) -> Vec<VerificationReport> {
    let report = timed(opts.seed, || {
        let mut tally = Tally::new("hyperbolic-disk.euclidean-form", accept::HYPERBOLIC_DISK);
        for x in [0.0, 0.3, 0.6, 0.9] {
            let center = DiskPoint::from_re_im(x, 0.0).expect("grid centers lie inside the disk");
            for m in [0.1, 1.0, 3.0] {
                let disk = hyperbolic_disk_euclidean(center, m).expect("radii are positive");
                for k in 0..360 {
                    let p = disk.point_at(TAU * k as f64 / 360.0);
                    let case = || format!("x = {x}, M = {m}, p = {}", fmt_point(p));
                    match DiskPoint::new(p) {
                        Ok(p) => tally.record((rho_disk(center, p) - m).abs(), case),
                        Err(_) => tally.record_error(case()),
                    }
                }
            }
        }
        tally
    });
    vec![report]
}

/// The square `[-1, 1]²`.
pub fn unit_square() -> ConvexPolygon {
    ConvexPolygon::new(vec![pt(-1.0, -1.0), pt(1.0, -1.0), pt(1.0, 1.0), pt(-1.0, 1.0)])
        .expect("the square is convex")
}

/// A triangle with a vertex on the imaginary axis.
pub fn sample_triangle() -> ConvexPolygon {
    ConvexPolygon::new(vec![pt(-1.0, -0.8), pt(1.2, -0.6), pt(0.1, 1.0)]).expect("the triangle is convex")
}

fn polygon_point(polygon: &ConvexPolygon, s: &mut DiskSampler) -> Point {
    let v = polygon.vertices();
    let (lo_x, hi_x) = v.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), p| (lo.min(p.re), hi.max(p.re)));
    let (lo_y, hi_y) = v.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), p| (lo.min(p.im), hi.max(p.im)));
    loop {
        let p = pt(s.uniform(lo_x, hi_x), s.uniform(lo_y, hi_y));
        if polygon.contains(p) {
            return p;
        }
    }
}

fn polygon(opts: &VerifyOptions) -> Vec<VerificationReport> {
    let square = unit_square();
    let diameter = timed(opts.seed, || {
        let mut tally = Tally::new("polygon.square-diameter", accept::POLYGON_DISK);
        let mut s = DiskSampler::stream(opts.seed, 12);
        let mut reals = vec![(0.0, 0.5)];
        reals.extend((0..opts.tenth()).map(|_| {
            (
                s.uniform(-SAMPLE_RADIUS, SAMPLE_RADIUS),
                s.uniform(-SAMPLE_RADIUS, SAMPLE_RADIUS),
            )
        }));
        for (x, y) in reals {
            let case = || format!("x = {x}, y = {y}");
            let disk = hilbert_disk(
                DiskPoint::from_re_im(x, 0.0).expect("sampled inside"),
                DiskPoint::from_re_im(y, 0.0).expect("sampled inside"),
            );
            match hilbert_polygon(&square, pt(x, 0.0), pt(y, 0.0)) {
                Ok(h) => tally.record((h - disk).abs(), case),
                Err(_) => tally.record_error(case()),
            }
        }
        tally
    });
    let triangle_inequality = timed(opts.seed, || {
        let mut tally = Tally::new("polygon.triangle-inequality", accept::TRIANGLE);
        let mut s = DiskSampler::stream(opts.seed, 13);
        for polygon in [square.clone(), sample_triangle()] {
            for _ in 0..opts.tenth() {
                let (a, b, c) = (
                    polygon_point(&polygon, &mut s),
                    polygon_point(&polygon, &mut s),
                    polygon_point(&polygon, &mut s),
                );
                let case = || format!("a = {}, b = {}, c = {}", fmt_point(a), fmt_point(b), fmt_point(c));
                let h = |p, q| hilbert_polygon(&polygon, p, q);
                match (h(a, c), h(a, b), h(b, c)) {
                    (Ok(ac), Ok(ab), Ok(bc)) => tally.record((ac - ab - bc).max(0.0), case),
                    _ => tally.record_error(case()),
                }
            }
        }
        tally
    });
    vec![diameter, triangle_inequality]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert_eq!("bogus".parse::<Suite>(), Err(UnknownSuite("bogus".into())));
    }

    #[test]
    fn small_runs_pass() {
        let opts = VerifyOptions { seed: 1, n: 200 };
        for suite in [Suite::Identities, Suite::Midpoint, Suite::Sharpness, Suite::Polygon] {
            for report in suite.run(&opts) {
                assert!(report.passed(), "{report:?}");
                assert!(report.cases > 0, "{report:?}");
            }
        }
    }
}
