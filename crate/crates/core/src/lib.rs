//! Hyperbolic, Hilbert and visual angle metrics of the unit disk.
//!
//! The hyperbolic metric `rho`, the Hilbert metric `h` and the visual angle
//! metric `v` of the unit disk are tied together by the offset `m` of the
//! line through the two points from the origin:
//!
//! ```text
//! sh(h/2)  = sqrt(1 - m²) sh(rho/2)
//! tan(v/2) = sqrt((1 + m)/(1 - m)) th(h/4)
//! ```
//!
//! This crate computes all three metrics, Hilbert circles as explicit
//! ellipses, Hilbert midpoints, the distortion of the Hilbert metric under
//! quasiregular maps, and the Hilbert metric of convex polygons. The
//! [`oracles`] and [`verify`] modules check the closed forms against
//! independent brute-force computations.
//!
//! ```
//! use hilbert_disk::{hilbert_disk, rho_disk, visual_angle_disk, DiskPoint};
//!
//! let a = DiskPoint::from_re_im(0.0, 0.0)?;
//! let b = DiskPoint::from_re_im(0.5, 0.0)?;
//! // On a diameter the Hilbert and hyperbolic distances agree.
//! assert!((hilbert_disk(a, b) - 3f64.ln()).abs() < 1e-15);
//! assert!((rho_disk(a, b) - 3f64.ln()).abs() < 1e-15);
//! assert!((visual_angle_disk(a, b) - std::f64::consts::FRAC_PI_6).abs() < 1e-15);
//! # Ok::<(), hilbert_disk::Error>(())
//! ```

pub mod circles;
pub mod domain;
pub mod error;
pub mod geometry;
pub mod metrics;
pub mod mobius;
pub mod oracles;
pub mod polygon;
pub mod report;
pub mod sampling;
pub mod tolerance;
pub mod verify;

pub use circles::{
    circumscribed_radius, hilbert_circle, hilbert_midpoint, hyperbolic_disk_euclidean, inscribed_radius,
    HilbertEllipse,
};
pub use domain::{hilbert_distance, ConvexDomain, UnitDisk};
pub use error::{Error, Result};
pub use geometry::{chord_of, chord_offset, cross_ratio, line_intersection, pt, Chord, DiskPoint, Point};
pub use metrics::{
    hilbert_closed_form, hilbert_disk, hilbert_from_rho, hilbert_polygon, rho_disk, rho_halfplane,
    visual_angle_disk, visual_from_hilbert, HalfPlanePoint,
};
pub use mobius::{disk_automorphism, distortion_constant, radial_stretch, MobiusMap};
pub use polygon::{polygon_chord, ConvexPolygon};
pub use report::{Status, VerificationReport};
