//! Ground-truth solvers for cross-checking.
//!
//! The minimal enclosing disk of a finite set is either the two-point disk
//! of some pair or the circumdisk of some triple, so enumerating both
//! families and keeping the smallest feasible candidate is an exact (if
//! slow) reference. A derivative-free minimax descent gives an independent
//! second opinion on top.

use crate::error::{Error, Result};
use crate::geometry::{Disk, PointSet, Vec2};
use crate::norm::Norm;
use crate::report::{support_points, Algorithm, IterationRecord, SolveReport, StepKind};
use crate::triangle::circumdisk;

/// Enumeration is O(n^4) in the worst case; refuse unreasonable inputs.
pub const MAX_ENUMERATION_POINTS: usize = 400;

/// Which point subset generated a candidate disk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CandidateKind {
    Pair(usize, usize),
    Triple(usize, usize, usize),
}

impl CandidateKind {
    fn rank(self) -> (u8, usize, usize, usize) {
        match self {
            CandidateKind::Pair(i, j) => (0, i, j, 0),
            CandidateKind::Triple(i, j, k) => (1, i, j, k),
        }
    }
}

/// A pair or triple disk considered by the enumeration.
#[derive(Debug, Clone)]
pub struct CandidateDisk {
    pub kind: CandidateKind,
    pub disk: Disk,
    pub feasible: bool,
}

/// Every pair disk and every circumscribable triple disk of the set.
/// Triples without a circumcenter are skipped: if the optimum is not a
/// pair disk, it is the circumdisk of a triple that does have one.
pub fn enumerate_candidates(norm: &Norm, points: &PointSet, tol: f64) -> Result<Vec<CandidateDisk>> {
    let pts = points.points();
    let n = pts.len();
    let mut out = Vec::new();
    let feasible = |d: &Disk| {
        let band = tol * d.radius.max(1.0);
        pts.iter().all(|p| d.contains(*p, band))
    };
    for i in 0..n {
        for j in (i + 1)..n {
            let disk = Disk::two_point(norm.clone(), pts[i], pts[j]);
            let feas = feasible(&disk);
            out.push(CandidateDisk { kind: CandidateKind::Pair(i, j), disk, feasible: feas });
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let disk = match circumdisk(norm, [pts[i], pts[j], pts[k]], tol / 8.0) {
                    Ok(Some(d)) => d,
                    Ok(None) => continue,
                    Err(Error::DegenerateTriangle(_)) => continue,
                    Err(e) => return Err(e),
                };
                let feas = feasible(&disk);
                out.push(CandidateDisk {
                    kind: CandidateKind::Triple(i, j, k),
                    disk,
                    feasible: feas,
                });
            }
        }
    }
    Ok(out)
}

/// Exact reference solver: the smallest feasible candidate among all pair
/// disks and triple circumdisks. Deterministic tie-breaking by
/// (radius, pair-before-triple, indices).
pub fn solve_enumeration(norm: &Norm, points: &PointSet, tol: f64) -> Result<SolveReport> {
    let pts = points.points();
    if pts.is_empty() {
        return Err(Error::EmptyInput);
    }
    if pts.len() > MAX_ENUMERATION_POINTS {
        return Err(Error::SizeLimit { actual: pts.len(), limit: MAX_ENUMERATION_POINTS });
    }
    if pts.len() == 1 {
        return Ok(SolveReport {
            disk: Disk::new(norm.clone(), pts[0], 0.0),
            support: vec![pts[0]],
            iterations: Vec::new(),
            algorithm: Algorithm::Enumeration,
        });
    }

    let candidates = enumerate_candidates(norm, points, tol)?;
    let winner = candidates
        .iter()
        .filter(|c| c.feasible)
        .min_by(|a, b| {
            a.disk
                .radius
                .partial_cmp(&b.disk.radius)
                .unwrap()
                .then_with(|| a.kind.rank().cmp(&b.kind.rank()))
        })
        .ok_or_else(|| {
            Error::InternalInconsistency("no feasible candidate disk was enumerated".into())
        })?;

    // second pass: re-verify the winner really contains everything
    let band = tol * winner.disk.radius.max(1.0);
    if !pts.iter().all(|p| winner.disk.contains(*p, band)) {
        return Err(Error::InternalInconsistency(
            "winning candidate failed the containment re-check".into(),
        ));
    }

    let kind = match winner.kind {
        CandidateKind::Pair(..) => StepKind::TwoPoint,
        CandidateKind::Triple(..) => StepKind::Circumdisk,
    };
    let active: Vec<Vec2> = match winner.kind {
        CandidateKind::Pair(i, j) => vec![pts[i], pts[j]],
        CandidateKind::Triple(i, j, k) => vec![pts[i], pts[j], pts[k]],
    };
    let support = support_points(norm, pts, winner.disk.center, winner.disk.radius, band);
    Ok(SolveReport {
        disk: winner.disk.clone(),
        support,
        iterations: vec![IterationRecord { kind, active, radius: winner.disk.radius }],
        algorithm: Algorithm::Enumeration,
    })
}

/// Max distance from `x` to the set.
pub fn max_distance(norm: &Norm, pts: &[Vec2], x: Vec2) -> f64 {
    pts.iter().map(|p| norm.distance(*p, x)).fold(0.0, f64::max)
}

/// Derivative-free minimax descent: from the coordinate-wise mean, walk
/// toward the centroid of the currently farthest points, with axis and
/// diagonal fallback moves, halving the step on failure until it drops
/// below `tol`. The objective is convex, so local descent reaches the
/// global optimum; the returned radius overshoots by at most ~10·tol.
/// A consistency check, never the reference.
pub fn solve_minimax_descent(norm: &Norm, points: &PointSet, tol: f64) -> Result<Disk> {
    let pts = points.points();
    if pts.is_empty() {
        return Err(Error::EmptyInput);
    }
    if pts.len() == 1 {
        return Ok(Disk::new(norm.clone(), pts[0], 0.0));
    }

    let inv = 1.0 / pts.len() as f64;
    let mut x = pts
        .iter()
        .fold(Vec2::ZERO, |acc, p| acc + *p * inv);
    let mut fx = max_distance(norm, pts, x);
    let mut step = fx.max(tol);

    let dirs: Vec<Vec2> = (0..16)
        .map(|k| {
            let a = k as f64 * std::f64::consts::TAU / 16.0;
            Vec2::new(a.cos(), a.sin())
        })
        .collect();

    let mut guard = 0usize;
    while step > tol && guard < 200_000 {
        guard += 1;
        // The currently farthest points, with a band that scales with the
        // step: near a two-point optimum both boundary points must count
        // as farthest, or the probes stall on the ridge of the max.
        let band = (2.0 * step).max(1e-12 * fx.max(1.0));
        let far: Vec<Vec2> = pts
            .iter()
            .copied()
            .filter(|p| norm.distance(*p, x) >= fx - band)
            .collect();

        // candidate targets: the centroid of the farthest points and the
        // midpoints of farthest pairs (a two-point optimum sits at one,
        // and stepping toward a lower point of a convex objective always
        // improves), plus a fan of fixed directions
        let mut targets: Vec<Vec2> = Vec::with_capacity(far.len() * far.len() / 2 + 2);
        if !far.is_empty() {
            let centroid = far.iter().fold(Vec2::ZERO, |acc, p| acc + *p) * (1.0 / far.len() as f64);
            targets.push(centroid);
        }
        for i in 0..far.len() {
            for j in (i + 1)..far.len() {
                targets.push(far[i].midpoint(far[j]));
            }
        }

        let mut best = fx;
        let mut best_x = x;
        let mut probe = |cand: Vec2| {
            let f = max_distance(norm, pts, cand);
            if f < best {
                best = f;
                best_x = cand;
            }
        };
        for t in targets {
            let dir = t - x;
            let len = dir.hypot();
            if len == 0.0 {
                continue;
            }
            for scale in [1.0, 0.25] {
                probe(x + dir * (scale * step / len).min(1.0));
            }
        }
        for d in &dirs {
            probe(x + *d * step);
        }
        if best < fx {
            x = best_x;
            fx = best;
        } else {
            step *= 0.5;
        }
    }

    Ok(Disk::new(norm.clone(), x, fx))
}
