//! Minimal enclosing disks in strictly convex normed planes.
//!
//! Given a finite planar point set and a strictly convex norm (any ℓ^p with
//! 1 < p < ∞, or a user-supplied gauge), this crate computes the unique
//! smallest disk of that norm containing the set. Two independent solvers
//! are provided — an iterative two-point/circumdisk walk and a
//! farthest-point Voronoi search — plus a brute-force candidate enumeration
//! and a derivative-free descent for cross-checking.

pub mod bisector;
pub mod elzinga_hearn;
pub mod error;
pub mod geometry;
pub mod io;
pub mod norm;
pub mod oracle;
pub mod report;
mod root1d;
pub mod shamos_hoey;
pub mod svg;
pub mod triangle;

pub use error::{Error, Result};
pub use geometry::{convex_hull, half_plane_side, Disk, PointSet, Side, Vec2};
pub use norm::{Norm, StrictConvexity};
pub use report::{Algorithm, IterationRecord, SolveReport, StepKind};
