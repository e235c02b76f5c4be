//! The iterative two-point / circumdisk solver.
//!
//! Starting from a pair of points, the solver alternates between the
//! two-point disk of the active pair and the circumdisk of the active
//! triple, dropping a vertex whenever the triple is norm-obtuse or
//! norm-right at it, and swapping in a violating point by a half-plane rule
//! otherwise. Each considered disk comes from a finite candidate family and
//! every step strictly increases the radius, so the walk terminates in the
//! unique minimal enclosing disk.

use crate::error::{Error, Result};
use crate::geometry::{half_plane_side, Disk, PointSet, Side, Vec2};
use crate::norm::Norm;
use crate::report::{support_points, Algorithm, IterationRecord, SolveReport, StepKind};
use crate::triangle::{circumdisk, classify_triangle, COLLINEAR_TOL, DEFAULT_CLASSIFY_EPS};

/// Default feasibility tolerance, relative to the disk radius.
pub const DEFAULT_SOLVE_TOL: f64 = 1e-9;

/// Half-plane band for the `p4 on line(p5, center)` test.
const LINE_MEMBERSHIP_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy)]
enum Active {
    Pair(usize, usize),
    Triple(usize, usize, usize),
}

/// Solve the minimal enclosing disk problem for `points` under `norm`.
///
/// `tol` controls the feasibility band (`tol·max(1, radius)`) used for
/// containment checks and the support-set band; internal root solves run
/// tighter. A single-point input returns a radius-0 disk.
pub fn solve_eh(norm: &Norm, points: &PointSet, tol: f64) -> Result<SolveReport> {
    let start = initial_pair(norm, points)?;
    match start {
        None => {
            // 0 or 1 distinct points
            let pts = points.points();
            if pts.is_empty() {
                return Err(Error::EmptyInput);
            }
            Ok(single_point_report(norm, pts[0]))
        }
        Some(pair) => solve_eh_from(norm, points, tol, pair),
    }
}

/// Like [`solve_eh`] but with an explicit starting pair of point indices.
/// Any distinct pair yields the same final disk (it is unique); the choice
/// only affects the iteration count.
pub fn solve_eh_from(
    norm: &Norm,
    points: &PointSet,
    tol: f64,
    initial: (usize, usize),
) -> Result<SolveReport> {
    let pts = points.points();
    if pts.is_empty() {
        return Err(Error::EmptyInput);
    }
    if pts.len() == 1 {
        return Ok(single_point_report(norm, pts[0]));
    }
    assert!(initial.0 != initial.1, "initial pair must be distinct indices");

    let mut trace: Vec<IterationRecord> = Vec::new();
    let mut active = Active::Pair(initial.0, initial.1);
    let budget = pts.len() * pts.len() + 64;

    for _ in 0..budget {
        match active {
            Active::Pair(i, j) => {
                let disk = Disk::two_point(norm.clone(), pts[i], pts[j]);
                trace.push(IterationRecord {
                    kind: StepKind::TwoPoint,
                    active: vec![pts[i], pts[j]],
                    radius: disk.radius,
                });
                match violator(norm, pts, &disk, tol) {
                    None => return Ok(finish(norm, pts, disk, trace, tol)),
                    Some(k) => active = Active::Triple(i, j, k),
                }
            }
            Active::Triple(i, j, k) => {
                let tri = [pts[i], pts[j], pts[k]];
                let idx = [i, j, k];

                // Collinear actives never need a circumdisk: the inner
                // point is redundant, keep the extreme pair.
                if let Side::On = half_plane_side(tri[0], tri[1], tri[2], COLLINEAR_TOL)? {
                    let drop = middle_of_collinear(norm, tri);
                    let keep: Vec<usize> =
                        (0..3).filter(|t| *t != drop).map(|t| idx[t]).collect();
                    active = Active::Pair(keep[0], keep[1]);
                    continue;
                }

                let class = classify_triangle(norm, tri, DEFAULT_CLASSIFY_EPS)?;
                if let Some(drop) = class.non_acute_vertex() {
                    let keep: Vec<usize> =
                        (0..3).filter(|t| *t != drop).map(|t| idx[t]).collect();
                    active = Active::Pair(keep[0], keep[1]);
                    continue;
                }

                // norm-acute: the circumdisk exists and is the smallest
                // disk containing the triple
                let disk = circumdisk(norm, tri, tol / 8.0)?.ok_or_else(|| {
                    Error::InternalInconsistency(
                        "no circumcenter found for a norm-acute triangle".into(),
                    )
                })?;
                trace.push(IterationRecord {
                    kind: StepKind::Circumdisk,
                    active: tri.to_vec(),
                    radius: disk.radius,
                });
                let p4 = match violator(norm, pts, &disk, tol) {
                    None => return Ok(finish(norm, pts, disk, trace, tol)),
                    Some(v) => v,
                };

                // p5: the active point farthest from the violator, ties by
                // lowest input index
                let p5_pos = (0..3)
                    .max_by(|a, b| {
                        let da = norm.distance(pts[p4], tri[*a]);
                        let db = norm.distance(pts[p4], tri[*b]);
                        da.partial_cmp(&db)
                            .unwrap()
                            .then_with(|| idx[*b].cmp(&idx[*a]))
                    })
                    .unwrap();
                let p5 = idx[p5_pos];
                let rest: Vec<usize> = (0..3).filter(|t| *t != p5_pos).map(|t| idx[t]).collect();

                // p6: the remaining active point on the side of the line
                // through p5 and the center opposite to p4; when p4 sits on
                // that line, either choice is valid and the lower index wins
                let p6 = match half_plane_side(pts[p5], disk.center, pts[p4], LINE_MEMBERSHIP_TOL)?
                {
                    Side::On => rest[0].min(rest[1]),
                    p4_side => {
                        let want = p4_side.opposite();
                        let is_opposite = |cand: usize| -> Result<bool> {
                            Ok(half_plane_side(
                                pts[p5],
                                disk.center,
                                pts[cand],
                                LINE_MEMBERSHIP_TOL,
                            )? == want)
                        };
                        if is_opposite(rest[0])? {
                            rest[0]
                        } else if is_opposite(rest[1])? {
                            rest[1]
                        } else {
                            rest[0].min(rest[1])
                        }
                    }
                };
                active = Active::Triple(p4, p5, p6);
            }
        }
    }
    Err(Error::InternalInconsistency(
        "iteration budget exceeded without convergence".into(),
    ))
}

/// Index pair realizing the maximum pairwise distance: exact scan for small
/// inputs, a 16-point strided sample beyond that. Any distinct pair is a
/// valid start; a far pair just converges in fewer iterations.
fn initial_pair(norm: &Norm, points: &PointSet) -> Result<Option<(usize, usize)>> {
    let pts = points.points();
    if pts.len() < 2 {
        return Ok(None);
    }
    let candidate_indices: Vec<usize> = if pts.len() <= 64 {
        (0..pts.len()).collect()
    } else {
        let mut v: Vec<usize> = (0..16).map(|t| t * pts.len() / 16).collect();
        v.dedup();
        v
    };
    let mut best = (0usize, 1usize);
    let mut best_d = -1.0f64;
    for (a, &i) in candidate_indices.iter().enumerate() {
        for &j in candidate_indices.iter().skip(a + 1) {
            let d = norm.distance(pts[i], pts[j]);
            if d > best_d {
                best_d = d;
                best = (i, j);
            }
        }
    }
    if best_d <= 0.0 {
        return Ok(None);
    }
    Ok(Some(best))
}

/// The worst violating point outside the disk, if any: maximal
/// `‖center - p‖ - radius` above `tol·max(1, radius)`, ties by lowest index.
fn violator(norm: &Norm, pts: &[Vec2], disk: &Disk, tol: f64) -> Option<usize> {
    let feas = tol * disk.radius.max(1.0);
    let mut worst: Option<(usize, f64)> = None;
    for (i, p) in pts.iter().enumerate() {
        let excess = norm.distance(*p, disk.center) - disk.radius;
        if excess > feas {
            match worst {
                Some((_, w)) if excess <= w => {}
                _ => worst = Some((i, excess)),
            }
        }
    }
    worst.map(|(i, _)| i)
}

/// Of three collinear points, the one strictly between the other two: the
/// point not belonging to the farthest pair.
fn middle_of_collinear(norm: &Norm, tri: [Vec2; 3]) -> usize {
    let d01 = norm.distance(tri[0], tri[1]);
    let d12 = norm.distance(tri[1], tri[2]);
    let d02 = norm.distance(tri[0], tri[2]);
    if d01 >= d12 && d01 >= d02 {
        2
    } else if d12 >= d01 && d12 >= d02 {
        0
    } else {
        1
    }
}

fn finish(norm: &Norm, pts: &[Vec2], disk: Disk, trace: Vec<IterationRecord>, tol: f64) -> SolveReport {
    let band = tol * disk.radius.max(1.0);
    let support = support_points(norm, pts, disk.center, disk.radius, band);
    SolveReport {
        disk,
        support,
        iterations: trace,
        algorithm: Algorithm::ElzingaHearn,
    }
}

fn single_point_report(norm: &Norm, p: Vec2) -> SolveReport {
    SolveReport {
        disk: Disk::new(norm.clone(), p, 0.0),
        support: vec![p],
        iterations: Vec::new(),
        algorithm: Algorithm::ElzingaHearn,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pset(coords: &[(f64, f64)]) -> PointSet {
        PointSet::new(coords.iter().map(|&(x, y)| Vec2::new(x, y))).unwrap()
    }

    #[test]
    fn empty_input_is_an_error() {
        let n = Norm::euclidean();
        assert!(matches!(solve_eh(&n, &pset(&[]), 1e-9), Err(Error::EmptyInput)));
    }

    #[test]
    fn single_point_radius_zero() {
        let n = Norm::p_norm(3.0).unwrap();
        let r = solve_eh(&n, &pset(&[(2.5, -1.0)]), 1e-9).unwrap();
        assert_eq!(r.disk.radius, 0.0);
        assert_eq!(r.disk.center, Vec2::new(2.5, -1.0));
        assert_eq!(r.support.len(), 1);
    }

    #[test]
    fn two_point_instance_l4() {
        let n = Norm::p_norm(4.0).unwrap();
        let r = solve_eh(&n, &pset(&[(-1.0, 0.0), (1.0, 0.0)]), 1e-9).unwrap();
        assert_eq!(r.disk.center, Vec2::new(0.0, 0.0));
        assert!((r.disk.radius - 1.0).abs() < 1e-12);
        assert_eq!(r.support.len(), 2);
    }

    #[test]
    fn diametral_pair_dominates_euclidean() {
        // enumeration over pairs/triples confirms the (0,0)-(2,0) disk
        let n = Norm::euclidean();
        let r = solve_eh(&n, &pset(&[(0.0, 0.0), (2.0, 0.0), (1.0, 1.0), (1.0, 0.2)]), 1e-9)
            .unwrap();
        assert!((r.disk.center.x - 1.0).abs() < 1e-9, "{:?}", r.disk.center);
        assert!((r.disk.center.y - 0.0).abs() < 1e-9, "{:?}", r.disk.center);
        assert!((r.disk.radius - 1.0).abs() < 1e-9);
        // (1,1) also lies on the boundary of that disk
        assert_eq!(r.support.len(), 3);
    }

    #[test]
    fn collinear_input_returns_diametral_disk() {
        let n = Norm::p_norm(1.5).unwrap();
        let r = solve_eh(&n, &pset(&[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (0.5, 0.0)]), 1e-9)
            .unwrap();
        assert!((r.disk.center.x - 1.0).abs() < 1e-12);
        assert!((r.disk.radius - 1.0).abs() < 1e-12);
    }

    #[test]
    fn duplicates_do_not_change_the_result() {
        let n = Norm::p_norm(4.0).unwrap();
        let a = solve_eh(&n, &pset(&[(-1.0, 0.0), (1.0, 0.0), (0.0, 0.5)]), 1e-9).unwrap();
        let b = solve_eh(
            &n,
            &pset(&[(-1.0, 0.0), (1.0, 0.0), (-1.0, 0.0), (0.0, 0.5), (0.0, 0.5)]),
            1e-9,
        )
        .unwrap();
        assert_eq!(a.disk.center, b.disk.center);
        assert_eq!(a.disk.radius, b.disk.radius);
    }

    #[test]
    fn trace_radii_strictly_increase() {
        let n = Norm::p_norm(3.0).unwrap();
        let coords = [
            (0.93, 0.7),
            (-0.67, 0.95),
            (0.5, -0.9),
            (0.13, -1.0),
            (-0.73, -0.4),
            (0.5, 0.57),
            (0.01, -0.32),
            (0.85, -0.4),
        ];
        let r = solve_eh(&n, &pset(&coords), 1e-9).unwrap();
        for w in r.iterations.windows(2) {
            assert!(
                w[1].radius > w[0].radius - 1e-12,
                "radii not increasing: {} then {}",
                w[0].radius,
                w[1].radius
            );
        }
        // final disk is feasible
        for &(x, y) in &coords {
            assert!(r.disk.contains(Vec2::new(x, y), 1e-8));
        }
    }

    #[test]
    fn any_starting_pair_reaches_the_same_disk() {
        let n = Norm::p_norm(1.5).unwrap();
        let ps = pset(&[
            (0.2, 0.1),
            (-0.9, 0.4),
            (0.7, -0.8),
            (0.1, 0.95),
            (-0.5, -0.6),
            (0.85, 0.65),
        ]);
        let a = solve_eh(&n, &ps, 1e-9).unwrap();
        let b = solve_eh_from(&n, &ps, 1e-9, (0, 1)).unwrap();
        let c = solve_eh_from(&n, &ps, 1e-9, (3, 4)).unwrap();
        for r in [&b, &c] {
            assert!((a.disk.radius - r.disk.radius).abs() <= 1e-8 * (1.0 + a.disk.radius));
            assert!((a.disk.center - r.disk.center).hypot() <= 1e-7);
        }
    }
}
