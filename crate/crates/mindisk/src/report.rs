//! Solver output: the optimal disk plus the evidence for it.

use crate::geometry::{Disk, Vec2};
use crate::norm::Norm;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    ElzingaHearn,
    ShamosHoey,
    Enumeration,
    Descent,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::ElzingaHearn => "elzinga_hearn",
            Algorithm::ShamosHoey => "shamos_hoey",
            Algorithm::Enumeration => "enumeration",
            Algorithm::Descent => "descent",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepKind {
    TwoPoint,
    Circumdisk,
}

/// One candidate disk considered by an iterative solver.
#[derive(Debug, Clone)]
pub struct IterationRecord {
    pub kind: StepKind,
    /// The 2 or 3 active points defining the candidate.
    pub active: Vec<Vec2>,
    pub radius: f64,
}

/// Result of a solve: the minimal enclosing disk, the input points found on
/// its boundary, and the trace of candidate disks that led there.
#[derive(Debug, Clone)]
pub struct SolveReport {
    pub disk: Disk,
    /// Input points at distance `radius ± tol` from the center. At least
    /// two whenever the input has two or more distinct points.
    pub support: Vec<Vec2>,
    pub iterations: Vec<IterationRecord>,
    pub algorithm: Algorithm,
}

/// Points of `points` whose distance from `center` is within `band` of
/// `radius`.
pub fn support_points(
    norm: &Norm,
    points: &[Vec2],
    center: Vec2,
    radius: f64,
    band: f64,
) -> Vec<Vec2> {
    points
        .iter()
        .copied()
        .filter(|p| (norm.distance(*p, center) - radius).abs() <= band)
        .collect()
}
