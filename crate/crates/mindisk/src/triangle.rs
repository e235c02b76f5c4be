//! Triangle classification and circumcenters under a strictly convex norm.
//!
//! Classification is the Thales-style distance test: a triangle is
//! norm-acute at a vertex when the vertex is farther from the midpoint of
//! the opposite side than half that side's length, norm-right on equality,
//! norm-obtuse below. A strictly convex plane never produces two norm-right
//! vertices in one triangle, and every norm-acute triangle has exactly one
//! circumcenter, lying inside the triangle.

use crate::bisector::{HalfBisector, HalfPlane};
use crate::error::{Error, Result};
use crate::geometry::{half_plane_side, Disk, Side, Vec2};
use crate::norm::Norm;
use crate::root1d::solve_bracketed;

/// Relative cross-product band below which a triple counts as collinear.
pub(crate) const COLLINEAR_TOL: f64 = 1e-14;

/// Default relative band for the norm-right verdict.
pub const DEFAULT_CLASSIFY_EPS: f64 = 1e-9;

/// Circumcenter search cap as a multiple of the triangle diameter.
const RADIUS_CAP_FACTOR: f64 = 64.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexKind {
    Acute,
    Right,
    Obtuse,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangleKind {
    NormAcute,
    NormRight,
    NormObtuse,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleClassification {
    pub per_vertex: [VertexKind; 3],
    pub aggregate: TriangleKind,
}

impl TriangleClassification {
    /// Index of a vertex at which the triangle is norm-obtuse or
    /// norm-right, if any. This is the vertex the iterative solver drops.
    pub fn non_acute_vertex(&self) -> Option<usize> {
        self.per_vertex
            .iter()
            .position(|k| matches!(k, VertexKind::Obtuse))
            .or_else(|| self.per_vertex.iter().position(|k| matches!(k, VertexKind::Right)))
    }
}

fn check_nondegenerate(tri: [Vec2; 3]) -> Result<()> {
    if tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2] {
        return Err(Error::DegenerateTriangle("coincident vertices"));
    }
    match half_plane_side(tri[0], tri[1], tri[2], COLLINEAR_TOL)? {
        Side::On => Err(Error::DegenerateTriangle("collinear vertices")),
        _ => Ok(()),
    }
}

/// Verdict at vertex `k`: compare the distance from `tri[k]` to the
/// midpoint of the opposite side against half that side's length, with a
/// relative band `eps·max(1, half side)` mapped to `Right`.
pub fn classify_vertex(norm: &Norm, tri: [Vec2; 3], k: usize, eps: f64) -> Result<VertexKind> {
    check_nondegenerate(tri)?;
    Ok(classify_vertex_unchecked(norm, tri, k, eps))
}

fn classify_vertex_unchecked(norm: &Norm, tri: [Vec2; 3], k: usize, eps: f64) -> VertexKind {
    let (i, j) = match k {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    let l = norm.distance(tri[k], tri[i].midpoint(tri[j]));
    let r = 0.5 * norm.distance(tri[i], tri[j]);
    let band = eps * r.max(1.0);
    if (l - r).abs() <= band {
        VertexKind::Right
    } else if l > r {
        VertexKind::Acute
    } else {
        VertexKind::Obtuse
    }
}

/// Classify all three vertices and derive the aggregate type.
///
/// Two norm-right vertices cannot occur under a strictly convex norm;
/// observing them is reported as [`Error::StrictConvexityViolation`].
pub fn classify_triangle(norm: &Norm, tri: [Vec2; 3], eps: f64) -> Result<TriangleClassification> {
    check_nondegenerate(tri)?;
    let per_vertex = [
        classify_vertex_unchecked(norm, tri, 0, eps),
        classify_vertex_unchecked(norm, tri, 1, eps),
        classify_vertex_unchecked(norm, tri, 2, eps),
    ];
    let rights = per_vertex.iter().filter(|k| matches!(k, VertexKind::Right)).count();
    let obtuses = per_vertex.iter().filter(|k| matches!(k, VertexKind::Obtuse)).count();
    if rights >= 2 {
        return Err(Error::StrictConvexityViolation);
    }
    let aggregate = if obtuses >= 1 {
        TriangleKind::NormObtuse
    } else if rights == 1 {
        TriangleKind::NormRight
    } else {
        TriangleKind::NormAcute
    };
    Ok(TriangleClassification { per_vertex, aggregate })
}

/// The point equidistant from all three vertices, if one exists.
///
/// The search walks the bisector of the longest side (best conditioning) by
/// radius: `g(mu) = ‖x(mu) - apex‖ - mu` starts at the midpoint with
/// `g = L - R`, whose sign is exactly the acuteness test at the apex, and a
/// doubling bracket up to `64·diam` captures the unique root. Norm-acute
/// triangles are guaranteed a circumcenter, so failing to find one there is
/// a convergence error; for other triangles both half planes are searched
/// before concluding `None`, which at the cap is best-effort.
pub fn circumcenter(norm: &Norm, tri: [Vec2; 3], tol: f64) -> Result<Option<Vec2>> {
    check_nondegenerate(tri)?;

    let d01 = norm.distance(tri[0], tri[1]);
    let d12 = norm.distance(tri[1], tri[2]);
    let d02 = norm.distance(tri[0], tri[2]);
    // base pair = the longest side, apex = the remaining vertex
    let (bi, bj, apex, base_len) = if d01 >= d12 && d01 >= d02 {
        (0, 1, 2, d01)
    } else if d12 >= d01 && d12 >= d02 {
        (1, 2, 0, d12)
    } else {
        (0, 2, 1, d02)
    };
    let diam = d01.max(d12).max(d02);
    let cap = RADIUS_CAP_FACTOR * diam;

    let apex_side = match half_plane_side(tri[bi], tri[bj], tri[apex], COLLINEAR_TOL)? {
        Side::Left => HalfPlane::Plus,
        Side::Right => HalfPlane::Minus,
        Side::On => return Err(Error::DegenerateTriangle("collinear vertices")),
    };
    let other_side = match apex_side {
        HalfPlane::Plus => HalfPlane::Minus,
        HalfPlane::Minus => HalfPlane::Plus,
    };

    let mu0 = 0.5 * base_len;
    let tol_f = 0.5 * tol * mu0.max(1.0);
    let inner_tol = 0.25 * tol;

    for (attempt, side) in [apex_side, other_side].into_iter().enumerate() {
        let hb = HalfBisector::new(norm, tri[bi], tri[bj], side)?;
        let g = |mu: f64| -> Result<f64> {
            Ok(norm.distance(hb.point_at(mu, inner_tol)?, tri[apex]) - mu)
        };
        let g0 = g(mu0)?;
        if g0.abs() <= tol_f {
            // right at the apex: the circumcenter is the base midpoint
            return Ok(Some(tri[bi].midpoint(tri[bj])));
        }
        // double the radius until g changes sign
        let mut lo = mu0;
        let mut g_lo = g0;
        let mut bracket = None;
        let mut mu = 2.0 * mu0;
        loop {
            let g_mu = g(mu)?;
            if g_mu == 0.0 || g_mu.signum() != g_lo.signum() {
                bracket = Some((lo, g_lo, mu, g_mu));
                break;
            }
            if mu >= cap {
                break;
            }
            lo = mu;
            g_lo = g_mu;
            mu = (2.0 * mu).min(cap);
        }
        if let Some((a, fa, b, fb)) = bracket {
            let mut g_plain = |mu: f64| match hb.point_at(mu, inner_tol) {
                Ok(x) => norm.distance(x, tri[apex]) - mu,
                Err(_) => f64::NAN,
            };
            let root = solve_bracketed(&mut g_plain, a, b, fa, fb, 1e-14 * cap, tol_f, 200)?;
            let x = hb.point_at(root, inner_tol)?;
            return Ok(Some(x));
        }
        // No root on the apex side. A triangle acute at the apex is
        // guaranteed a circumcenter on that side, so keep searching the
        // other half only for the non-acute case.
        if attempt == 0 && g0 > 0.0 {
            break;
        }
    }

    // Nothing found: legitimate for non-acute triples, a failure for
    // norm-acute ones.
    let class = classify_triangle(norm, tri, DEFAULT_CLASSIFY_EPS)?;
    if class.aggregate == TriangleKind::NormAcute {
        return Err(Error::ConvergenceFailure(200));
    }
    Ok(None)
}

/// The circumdisk of a triple: circumcenter plus radius `‖x - tri[0]‖`.
pub fn circumdisk(norm: &Norm, tri: [Vec2; 3], tol: f64) -> Result<Option<Disk>> {
    Ok(circumcenter(norm, tri, tol)?.map(|x| {
        let radius = norm.distance(x, tri[0]);
        Disk::new(norm.clone(), x, radius)
    }))
}
