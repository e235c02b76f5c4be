//! Error type shared by every module in the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The requested norm has a unit circle containing line segments.
    #[error("not strictly convex: {0}")]
    NotStrictlyConvex(String),

    #[error("input point set is empty")]
    EmptyInput,

    #[error("coordinates must be finite, got ({0}, {1})")]
    NonFinite(f64, f64),

    /// Half-plane predicate called with coincident line endpoints.
    #[error("line endpoints coincide")]
    DegenerateLine,

    #[error("degenerate triangle: {0}")]
    DegenerateTriangle(&'static str),

    /// Bisector queried at a radius below half the pair distance.
    #[error("no bisector point: radius {radius} is below half the pair distance {half_distance}")]
    NoIntersection { radius: f64, half_distance: f64 },

    #[error("root finder did not converge within {0} iterations")]
    ConvergenceFailure(usize),

    /// Two norm-right vertices in one triangle, impossible under a
    /// strictly convex norm; indicates a broken custom norm.
    #[error("strict convexity violated: triangle is norm-right at two vertices")]
    StrictConvexityViolation,

    #[error("input size {actual} exceeds limit {limit}")]
    SizeLimit { actual: usize, limit: usize },

    #[error("malformed input: {0}")]
    Parse(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
