//! Numerical thresholds shared by the library and its verification suites.
//!
//! Degeneracy thresholds sit a few orders of magnitude below the tightest
//! certification tolerance so that a rejected input never masks a failed check.

/// Two points closer than this are treated as the same point.
pub const COINCIDENT: f64 = 1e-14;

/// Line-intersection denominators below this, relative to the coefficient
/// scale, are treated as parallel lines.
pub const PARALLEL: f64 = 1e-14;

/// Points with modulus in `[1 - NEAR_BOUNDARY, 1)` are valid but flagged.
pub const NEAR_BOUNDARY: f64 = 1e-12;

/// Largest modulus used by random samplers.
pub const SAMPLE_RADIUS: f64 = 0.999;

/// Tolerated negative radicand in the closed-form Hilbert distance.
pub const RADICAND_CLAMP: f64 = 1e-15;

/// Polygon edge membership, relative to the edge scale.
pub const ON_SEGMENT: f64 = 1e-12;

/// Intersection points closer than this are the same boundary hit.
pub const VERTEX_DEDUP: f64 = 1e-10;

/// Target angular resolution of golden-section refinements.
pub const ANGLE_REFINE: f64 = 1e-10;

/// Acceptance tolerances of the verification suites.
pub mod accept {
    /// Hilbert-hyperbolic identity, scaled by `1 + sh(rho/2)`.
    pub const HILBERT_HYPERBOLIC: f64 = 1e-10;
    /// Visual angle / Hilbert identity on `tan(v/2)`.
    pub const VISUAL_HILBERT: f64 = 1e-10;
    /// Closed-form visual angle against boundary maximization.
    pub const VISUAL_ORACLE: f64 = 1e-6;
    /// Closed-form Hilbert distance against the chord construction, relative.
    pub const HILBERT_CLOSED_FORM: f64 = 1e-11;
    /// Normalized implicit residual of the ellipse equation.
    pub const ELLIPSE_IMPLICIT: f64 = 1e-9;
    /// Hilbert distance of ellipse points from the center.
    pub const ELLIPSE_DISTANCE: f64 = 1e-8;
    /// Hyperbolic extrema over a Hilbert circle.
    pub const TANGENCY: f64 = 1e-7;
    /// Two-sided midpoint equalities.
    pub const MIDPOINT: f64 = 1e-10;
    /// Stable midpoint parameter against the rational formula.
    pub const MIDPOINT_PARAMETER: f64 = 1e-12;
    /// Distortion bound one-sided slack.
    pub const DISTORTION: f64 = 1e-12;
    /// Regression tolerance of frozen sharpness quotients.
    pub const SHARPNESS_GOLDEN: f64 = 1e-12;
    /// Hyperbolic equalities of the collinear configuration.
    pub const CONFIG_RHO: f64 = 1e-10;
    /// Hilbert and visual angle equalities of the collinear configuration.
    pub const CONFIG_HILBERT_VISUAL: f64 = 1e-9;
    /// Inclusion chain slack.
    pub const INCLUSION: f64 = 1e-9;
    /// Equality at designated tangent points.
    pub const TANGENT_POINT: f64 = 1e-10;
    /// Diameter bound slack.
    pub const DIAMETER: f64 = 1e-12;
    /// Euclidean description of hyperbolic disks.
    pub const HYPERBOLIC_DISK: f64 = 1e-10;
    /// Polygon distance against the disk value.
    pub const POLYGON_DISK: f64 = 1e-12;
    /// Sampled triangle inequality.
    pub const TRIANGLE: f64 = 1e-10;
}
