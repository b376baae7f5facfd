use thiserror::Error;

/// Errors raised by the geometric and metric operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("point {0} is not finite")]
    NonFinite(String),
    #[error("point {0} is not inside the open unit disk")]
    NotInDisk(String),
    #[error("point {0} is not in the open upper half plane")]
    NotInHalfPlane(String),
    #[error("lines are parallel")]
    ParallelLines,
    #[error("a line needs two distinct points")]
    DegenerateLine,
    #[error("points coincide")]
    CoincidentPoints,
    #[error("cross-ratio has a vanishing denominator")]
    DegenerateCrossRatio,
    #[error("points are collinear")]
    CollinearPoints,
    #[error("point {0} is not strictly inside the polygon")]
    PointOutsidePolygon(String),
    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),
    #[error("line meets the polygon boundary in {0} points, expected 2")]
    ChordNotFound(usize),
    #[error("chord offset {0} is outside [0, 1)")]
    InvalidOffset(f64),
    #[error("dilatation {0} is below 1")]
    InvalidDilatation(f64),
    #[error("radius {0} must be positive")]
    InvalidRadius(f64),
    #[error("Möbius map is evaluated at its pole")]
    PoleEvaluation,
    #[error("Möbius map has vanishing determinant")]
    SingularMap,
    #[error("the map sends both points to the same image")]
    DegenerateImage,
    #[error("bisection did not converge after {0} steps")]
    ConvergenceFailure(usize),
    #[error("inadmissible configuration: {0}")]
    InadmissibleConfiguration(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
