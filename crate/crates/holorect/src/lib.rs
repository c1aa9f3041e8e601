//! Rectangle-contour calculus for complex analysis.
//!
//! Everything here runs on axis-parallel rectangles instead of discs:
//! integrals are limits of right-endpoint Cauchy sums over rectangle
//! boundaries, values and derivatives of holomorphic functions are
//! reconstructed from boundary data alone, winding numbers are computed by
//! a fully discrete projection onto a unit-perimeter square, and zeros are
//! counted and localized by winding-guided quadtree subdivision.

pub mod cli;
pub mod complex;
pub mod cover;
pub mod error;
pub mod formulas;
pub mod funcspec;
pub mod geometry;
pub mod integrate;
mod jsonfmt;
pub mod path;
pub mod roots;
mod svg;
pub mod verify;
pub mod winding;

pub use complex::Complex;
pub use error::{Error, Result};
pub use funcspec::FunctionSpec;
pub use geometry::{GridPartition, Partition, Rectangle, Segment};
pub use integrate::{IntegralResult, RefinementConfig};
pub use path::LoopPath;
pub use roots::PreimageReport;
pub use winding::WindingResult;
