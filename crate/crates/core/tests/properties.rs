use hilbert_disk::circles::{c1_conic, hilbert_circle, hilbert_midpoint};
use hilbert_disk::geometry::cross_ratio;
use hilbert_disk::metrics::{half_sinh_rho, hilbert_quadratic};
use hilbert_disk::mobius::{check_distortion_bound, TestMap};
use hilbert_disk::oracles::{foot_of_perpendicular, line_intersection_solve};
use hilbert_disk::sampling::DiskSampler;
use hilbert_disk::*;
use proptest::prelude::*;

fn disk_point() -> impl Strategy<Value = DiskPoint> {
    (0.0..0.999f64, 0.0..std::f64::consts::TAU)
        .prop_map(|(r, theta)| DiskPoint::new(Point::from_polar(r, theta)).unwrap())
}

fn distinct_pair() -> impl Strategy<Value = (DiskPoint, DiskPoint)> {
    (disk_point(), disk_point()).prop_filter("distinct", |(a, b)| (a.value() - b.value()).norm() > 1e-6)
}

fn line_residual(p: Point, a: Point, b: Point) -> f64 {
    let d = b - a;
    (d.conj() * (p - a)).im.abs() / d.norm()
}

#[test]
fn chords_on_ten_thousand_pairs() {
    let mut s = DiskSampler::new(101);
    for _ in 0..10_000 {
        let (a, b) = s.pair();
        let c = chord_of(a, b).unwrap();
        assert!((c.u.norm() - 1.0).abs() <= 1e-12 && (c.v.norm() - 1.0).abs() <= 1e-12);
        assert!(line_residual(c.u, a.value(), b.value()) <= 1e-10);
        assert!(line_residual(c.v, a.value(), b.value()) <= 1e-10);
        let m = chord_offset(a, b).unwrap();
        assert!((m - (c.u + c.v).norm() / 2.0).abs() <= 1e-12);
        let foot = foot_of_perpendicular(a.value(), b.value()).unwrap();
        assert!((m - foot.norm()).abs() <= 1e-12);
    }
}

#[test]
fn metric_identities_on_ten_thousand_pairs() {
    let mut s = DiskSampler::new(102);
    for _ in 0..10_000 {
        let (a, b) = s.pair();
        let (rho, h) = (rho_disk(a, b), hilbert_disk(a, b));
        let m = chord_offset(a, b).unwrap();
        let u = half_sinh_rho(a, b);
        assert!(((h / 2.0).sinh() - (1.0 - m * m).sqrt() * u).abs() <= 1e-10 * (1.0 + u));
        let tan_half = (visual_angle_disk(a, b) / 2.0).tan();
        assert!((tan_half - ((1.0 + m) / (1.0 - m)).sqrt() * (h / 4.0).tanh()).abs() <= 1e-10);
        assert!((h - hilbert_closed_form(a, b)).abs() <= 1e-11 * (1.0 + h));
        assert!(h <= rho * (1.0 + 1e-14));
        if m > 0.001 {
            assert!(h < rho);
        }
    }
}

#[test]
fn mobius_invariance_on_ten_thousand_triples() {
    let mut s = DiskSampler::new(103);
    for _ in 0..10_000 {
        let w = s.point();
        let (a, b) = s.pair();
        let t = disk_automorphism(w);
        let fa = DiskPoint::new(t.apply(a.value()).unwrap()).unwrap();
        let fb = DiskPoint::new(t.apply(b.value()).unwrap()).unwrap();
        let (before, after) = (rho_disk(a, b), rho_disk(fa, fb));
        assert!((before - after).abs() <= 1e-11 * (1.0 + before), "{before} vs {after}");
    }
}

#[test]
fn hilbert_metric_is_not_mobius_invariant() {
    let w = DiskPoint::from_re_im(0.5, 0.0).unwrap();
    let a = DiskPoint::from_re_im(0.0, 0.2).unwrap();
    let b = DiskPoint::from_re_im(0.0, -0.2).unwrap();
    let t = disk_automorphism(w);
    let fa = DiskPoint::new(t.apply(a.value()).unwrap()).unwrap();
    let fb = DiskPoint::new(t.apply(b.value()).unwrap()).unwrap();
    let (before, after) = (hilbert_disk(a, b), hilbert_disk(fa, fb));
    assert!((after - before).abs() / before > 0.01, "{before} vs {after}");
}

#[test]
fn hilbert_circles_flatten_toward_the_boundary() {
    for t in [0.25, 0.5, 1.0, 2.0] {
        let ratios: Vec<f64> = (0..10)
            .map(|k| {
                let e = hilbert_circle(DiskPoint::from_re_im(k as f64 / 10.0, 0.0).unwrap(), t).unwrap();
                e.semi_radial / e.semi_transverse
            })
            .collect();
        assert!(ratios.windows(2).all(|w| w[1] < w[0]), "t = {t}: {ratios:?}");
    }
}

proptest! {
    #[test]
    fn chord_swap_reverses_endpoints((a, b) in distinct_pair()) {
        let forward = chord_of(a, b).unwrap();
        let backward = chord_of(b, a).unwrap();
        prop_assert!((forward.u - backward.v).norm() < 1e-10);
        prop_assert!((forward.v - backward.u).norm() < 1e-10);
        let (u, v) = (forward.u, forward.v);
        let cr = cross_ratio(u, a.value(), b.value(), v).unwrap();
        let swapped = cross_ratio(v, b.value(), a.value(), u).unwrap();
        prop_assert!((cr - swapped).abs() <= 1e-12 * cr);
    }

    #[test]
    fn line_intersection_is_on_both_lines(
        (a, b) in distinct_pair(),
        (c, d) in distinct_pair(),
    ) {
        let (a, b, c, d) = (a.value(), b.value(), c.value(), d.value());
        let Ok(p) = line_intersection(a, b, c, d) else { return Ok(()) };
        // Nearly parallel lines meet far away; the residual scales with that.
        let scale = 1.0 + p.norm();
        prop_assume!(scale < 1e3);
        prop_assert!(line_residual(p, a, b) <= 1e-10 * scale);
        prop_assert!(line_residual(p, c, d) <= 1e-10 * scale);
        for q in [line_intersection(b, a, c, d), line_intersection(a, b, d, c)] {
            prop_assert!((q.unwrap() - p).norm() <= 1e-10 * scale);
        }
        let solved = line_intersection_solve(a, b, c, d).unwrap();
        prop_assert!((solved - p).norm() <= 1e-10 * scale);
    }

    #[test]
    fn metric_axioms(a in disk_point(), b in disk_point(), c in disk_point()) {
        for d in [rho_disk, hilbert_disk, visual_angle_disk] {
            prop_assert_eq!(d(a, a), 0.0);
            prop_assert!((d(a, b) - d(b, a)).abs() <= 1e-10 * (1.0 + d(a, b)));
            prop_assert!(d(a, c) <= d(a, b) + d(b, c) + 1e-10);
        }
    }

    #[test]
    fn polygon_metric_axioms(a in disk_point(), b in disk_point(), c in disk_point()) {
        // The disk of radius 0.999 sits inside the square [-1, 1]².
        let square = hilbert_disk::verify::unit_square();
        let h = |p: DiskPoint, q: DiskPoint| hilbert_polygon(&square, p.value(), q.value()).unwrap();
        prop_assert_eq!(h(a, a), 0.0);
        prop_assert!((h(a, b) - h(b, a)).abs() <= 1e-10 * (1.0 + h(a, b)));
        prop_assert!(h(a, c) <= h(a, b) + h(b, c) + 1e-10);
    }

    #[test]
    fn identities_invert((a, b) in distinct_pair()) {
        let m = chord_offset(a, b).unwrap();
        let h = hilbert_disk(a, b);
        prop_assert!((hilbert_from_rho(rho_disk(a, b), m).unwrap() - h).abs() <= 1e-9 * (1.0 + h));
        prop_assert!((visual_from_hilbert(h, m).unwrap() - visual_angle_disk(a, b)).abs() <= 1e-10);
    }

    #[test]
    fn quadratic_roots_are_reciprocal((a, b) in distinct_pair()) {
        let (qa, qb, qc) = hilbert_quadratic(a, b);
        let big = hilbert_closed_form(a, b).exp();
        let other = qc / (qa * big);
        prop_assert!((big * other - 1.0).abs() <= 1e-10);
        prop_assert!(((qa * big + qb) * big + qc).abs() <= 1e-9 * qb.abs() * big);
    }

    #[test]
    fn cross_ratio_survives_mobius_maps(w in disk_point(), (a, b) in distinct_pair()) {
        let c = chord_of(a, b).unwrap();
        let t = disk_automorphism(w);
        let image = [c.u, a.value(), b.value(), c.v].map(|z| t.apply(z).unwrap());
        let before = cross_ratio(c.u, a.value(), b.value(), c.v).unwrap();
        let after = cross_ratio(image[0], image[1], image[2], image[3]).unwrap();
        prop_assert!((before - after).abs() <= 1e-10 * before);
    }

    #[test]
    fn c1_is_rotation_equivariant(z0 in disk_point(), z in disk_point(), phi in 0.0..6.3f64, t in 0.1..3.0f64) {
        let turn = Point::from_polar(1.0, phi);
        let rotated = DiskPoint::new(z0.value() * turn).unwrap();
        let (c, cr) = (c1_conic(z0, t), c1_conic(rotated, t));
        prop_assert!((c.eval(z.value()) - cr.eval(z.value() * turn)).abs() <= 1e-12 * c.scale());
    }

    #[test]
    fn midpoint_is_equidistant((a, b) in distinct_pair()) {
        let c = hilbert_midpoint(a, b).unwrap();
        prop_assert!((hilbert_disk(a, c) - hilbert_disk(c, b)).abs() <= 1e-10);
        prop_assert!((rho_disk(a, c) - rho_disk(c, b)).abs() <= 1e-10);
        prop_assert!(line_residual(c.value(), a.value(), b.value()) <= 1e-12);
    }

    #[test]
    fn distortion_bound_holds(w in disk_point(), v in disk_point(), k in 1.0..6.0f64, (a, b) in distinct_pair()) {
        for map in [TestMap::Automorphism(w), TestMap::Stretch(k), TestMap::Sandwich { outer: w, k, inner: v }] {
            let report = check_distortion_bound(|z| map.apply(z), a, b, map.dilatation()).unwrap();
            prop_assert!(report.slack >= -1e-12, "{:?} {:?}", map, report);
        }
    }
}
