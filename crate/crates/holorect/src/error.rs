//! Library-wide error type with stable machine-readable codes.

use crate::complex::Complex;
use crate::geometry::Rectangle;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("rectangle is degenerate: {0}")]
    DegenerateRectangle(String),
    #[error("segment endpoints coincide at {0}")]
    DegenerateSegment(Complex),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid grid partition: {0}")]
    InvalidGrid(String),
    #[error("rectangle is not a square ({width} x {height})")]
    NotSquare { width: f64, height: f64 },
    #[error("invalid refinement config: {0}")]
    InvalidConfig(String),
    #[error("evaluation at declared singularity {0}")]
    EvalAtSingularity(Complex),
    #[error("evaluation overflowed to a non-finite value at {0}")]
    NonFiniteValue(Complex),
    #[error("declared singularity {0} lies on the integration contour")]
    SingularityOnContour(Complex),
    #[error("declared singularity {0} lies inside the contour; integrand is not entire on the rectangle")]
    SingularityInsideContour(Complex),
    #[error("loop passes through the base point (t = {t})")]
    LoopHitsPoint { t: f64 },
    #[error("winding number did not stabilize by k = {k_max}")]
    NoStabilization { k_max: usize },
    #[error("lifting step too coarse: arc increment {step} >= 1/4")]
    StepTooCoarse { step: f64 },
    #[error("point {0} is not on the projection square boundary")]
    PointNotOnBoundary(Complex),
    #[error("loop product endpoint mismatch: f(1) = {left}, g(0) = {right}")]
    EndpointMismatch { left: Complex, right: Complex },
    #[error("loop is not closed: curve(0) = {start}, curve(1) = {end}")]
    LoopNotClosed { start: Complex, end: Complex },
    #[error("point {0} is within 1e-6 of the rectangle boundary")]
    PointTooCloseToBoundary(Complex),
    #[error("sampled |f - p| = {min_dist} on the rectangle boundary is below the guard threshold")]
    BoundaryHitsValue { min_dist: f64 },
    #[error("|f'(z0)| = {magnitude} is below the 1e-9 threshold")]
    DerivativeTooSmall { magnitude: f64 },
    #[error("quadtree expansion exhausted max depth; {} nested offending squares", chain.len())]
    DepthExhausted { chain: Vec<Rectangle> },
    #[error("binary segment expansion exhausted max depth at depth {depth}")]
    SegmentDepthExhausted { depth: u32 },
    #[error("{0}")]
    Usage(String),
}

impl Error {
    /// Stable error code for scripted pipelines.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "E_SYNTAX",
            Error::DegenerateRectangle(_) => "E_DEGENERATE_RECTANGLE",
            Error::DegenerateSegment(_) => "E_DEGENERATE_SEGMENT",
            Error::InvalidPartition(_) => "E_INVALID_PARTITION",
            Error::InvalidGrid(_) => "E_INVALID_GRID",
            Error::NotSquare { .. } => "E_NOT_SQUARE",
            Error::InvalidConfig(_) => "E_INVALID_CONFIG",
            Error::EvalAtSingularity(_) => "E_EVAL_AT_SINGULARITY",
            Error::NonFiniteValue(_) => "E_RANGE",
            Error::SingularityOnContour(_) => "E_SINGULARITY_ON_CONTOUR",
            Error::SingularityInsideContour(_) => "E_SINGULARITY_INSIDE_CONTOUR",
            Error::LoopHitsPoint { .. } => "E_LOOP_HITS_POINT",
            Error::NoStabilization { .. } => "E_NO_STABILIZATION",
            Error::StepTooCoarse { .. } => "E_STEP_TOO_COARSE",
            Error::PointNotOnBoundary(_) => "E_POINT_NOT_ON_BOUNDARY",
            Error::EndpointMismatch { .. } => "E_ENDPOINT_MISMATCH",
            Error::LoopNotClosed { .. } => "E_LOOP_NOT_CLOSED",
            Error::PointTooCloseToBoundary(_) => "E_POINT_TOO_CLOSE_TO_BOUNDARY",
            Error::BoundaryHitsValue { .. } => "E_BOUNDARY_HITS_VALUE",
            Error::DerivativeTooSmall { .. } => "E_DERIVATIVE_TOO_SMALL",
            Error::DepthExhausted { .. } => "E_DEPTH_EXHAUSTED",
            Error::SegmentDepthExhausted { .. } => "E_DEPTH_EXHAUSTED",
            Error::Usage(_) => "E_USAGE",
        }
    }
}
