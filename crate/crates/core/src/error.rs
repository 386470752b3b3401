use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("lines are coincident (angle {angle:e} below threshold)")]
    CoincidentLines { angle: f64 },
    #[error("point is not on the line (distance {distance:e})")]
    PointOffLine { distance: f64 },
    #[error("point is not on the circle (radial error {error:e})")]
    PointOffCircle { error: f64 },
    #[error("invalid body: {0}")]
    InvalidBody(String),
    #[error("point ({x}, {y}) is not exterior to the body")]
    InteriorPoint { x: f64, y: f64 },
    #[error("tangent lines coincide: point lies on the body boundary")]
    TangentDegenerate,
    #[error("found {roots} tangency roots, expected two: body is not convex")]
    ConvexityViolation { roots: usize },
    #[error("body is not strictly inside the outer circle (margin {margin:e})")]
    Containment { margin: f64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("closure bracket failed: {0}")]
    BracketFailure(String),
    #[error("iteration exhausted {steps} steps before the orbit could be classified")]
    MaxStepsExhausted {
        steps: usize,
        partial: Box<crate::poncelet::PonceletState>,
    },
    #[error("half-plane intersection is empty")]
    EmptyIntersection,
    #[error("no exterior sample points on the symmetry line")]
    NoExteriorPoints,
    #[error("viewpoint is on or inside the quadric (q = {q})")]
    NotExterior { q: f64 },
    #[error("cone form has degenerate signature (eigenvalues {eigenvalues:?})")]
    DegenerateCone { eigenvalues: [f64; 3] },
    #[error("plane section of the cone is unbounded")]
    UnboundedSection,
    #[error("axes are parallel: concurrency system is rank deficient")]
    RankDeficient,
    #[error("plane section of the quadric is empty")]
    EmptySection,
    #[error("plane does not meet the unit sphere")]
    PlaneMissesSphere,
}
