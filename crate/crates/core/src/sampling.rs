//! Seeded samplers for the verification sweeps.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geometry::{DiskPoint, Point};
use crate::tolerance;

/// Deterministic sampler of disk points, seeded explicitly.
#[derive(Clone, Debug)]
pub struct DiskSampler {
    rng: ChaCha8Rng,
    max_radius: f64,
}

impl DiskSampler {
    pub fn new(seed: u64) -> Self {
        Self::with_radius(seed, tolerance::SAMPLE_RADIUS)
    }

    /// An independent stream for the same seed, so that sub-sweeps do not
    /// shift each other's samples.
    pub fn stream(seed: u64, stream: u64) -> Self {
        let mut s = Self::new(seed);
        s.rng.set_stream(stream);
        s
    }

    pub fn with_radius(seed: u64, max_radius: f64) -> Self {
        assert!(max_radius > 0.0 && max_radius < 1.0);
        DiskSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            max_radius,
        }
    }

    /// Area-uniform point with `|z| <= max_radius`.
    pub fn point(&mut self) -> DiskPoint {
        let r = self.max_radius * self.rng.random::<f64>().sqrt();
        let theta = self.rng.random_range(0.0..std::f64::consts::TAU);
        DiskPoint::new(Point::from_polar(r, theta)).expect("sampled inside the disk")
    }

    /// A pair of distinct points.
    pub fn pair(&mut self) -> (DiskPoint, DiskPoint) {
        loop {
            let (a, b) = (self.point(), self.point());
            if (a.value() - b.value()).norm() > 1e-9 {
                return (a, b);
            }
        }
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.random_range(lo..hi)
    }

    pub fn angle(&mut self) -> f64 {
        self.uniform(0.0, std::f64::consts::TAU)
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.rng.random_bool(p)
    }
}

/// Radical inverse of `index` in `base`.
fn radical_inverse(mut index: u64, base: u64) -> f64 {
    let inv = 1.0 / base as f64;
    let (mut value, mut scale) = (0.0, inv);
    while index > 0 {
        value += (index % base) as f64 * scale;
        index /= base;
        scale *= inv;
    }
    value
}

/// The 2-D Halton sequence (bases 2 and 3) mapped area-uniformly onto the
/// disk of the given radius, skipping the first `offset` terms.
pub fn halton_disk(n: usize, radius: f64, offset: u64) -> impl Iterator<Item = Point> {
    (0..n as u64).map(move |k| {
        let i = k + offset + 1;
        let r = radius * radical_inverse(i, 2).sqrt();
        Point::from_polar(r, std::f64::consts::TAU * radical_inverse(i, 3))
    })
}
