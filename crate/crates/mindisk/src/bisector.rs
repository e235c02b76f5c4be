//! Bisector points at a prescribed radius.
//!
//! In a strictly convex normed plane the bisector of two distinct points is
//! a topological line, and on each closed half plane bounded by the line
//! through the points, the distance to either point parametrizes the half
//! bisector strictly monotonically. The point of `bisec(p1,p2)` on a chosen
//! half at a prescribed radius `mu` is therefore unique; this module locates
//! it as the intersection `S(p1,mu) ∩ S(p2,mu)` restricted to that half.

use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::geometry::{half_plane_side, Side, Vec2};
use crate::norm::Norm;
use crate::root1d::solve_bracketed;

/// Which closed half plane bounded by the line through `p1` and `p2` to
/// search: `Plus` is the left of the directed line `p1 -> p2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HalfPlane {
    Plus,
    Minus,
}

impl HalfPlane {
    fn matches(self, side: Side) -> bool {
        matches!(
            (self, side),
            (HalfPlane::Plus, Side::Left) | (HalfPlane::Minus, Side::Right)
        )
    }
}

/// A request for the bisector point of `(p1, p2)` at radius `mu` on `side`.
#[derive(Debug, Clone, Copy)]
pub struct BisectorQuery {
    pub p1: Vec2,
    pub p2: Vec2,
    pub mu: f64,
    pub side: HalfPlane,
}

/// Radii within this relative band of half the pair distance collapse to
/// the midpoint, where the two circles meet in a single point on the line
/// and the half-plane restriction is ill-conditioned.
const BOUNDARY_BAND: f64 = 1e-12;

/// Iteration budget for each internal root solve.
const MAX_ITER: usize = 200;

/// Scan resolution for locating where the circle around `p1` crosses the
/// line through `p1` and `p2`.
const CROSSING_SCAN: usize = 64;

/// One half of a bisector with its parametrization arc precomputed, so that
/// repeated radius queries against the same pair cost a single 1-D root
/// solve each.
pub struct HalfBisector<'a> {
    norm: &'a Norm,
    p1: Vec2,
    p2: Vec2,
    side: HalfPlane,
    /// Arc of the unit-circle parameter whose points lie on the requested
    /// side; theta_hi may exceed 2π (wrapped arc).
    theta_lo: f64,
    theta_hi: f64,
    distance: f64,
}

impl<'a> HalfBisector<'a> {
    pub fn new(norm: &'a Norm, p1: Vec2, p2: Vec2, side: HalfPlane) -> Result<Self> {
        if p1 == p2 {
            return Err(Error::DegenerateLine);
        }
        let dir = p2 - p1;
        // g(theta) changes sign exactly where the unit circle crosses the
        // line span(dir): twice, since the circle is strictly convex and
        // the line passes through the interior point 0.
        let g = |theta: f64| dir.cross(norm.unit_circle_point(theta));
        let crossings = find_line_crossings(g)?;
        let (c1, c2) = (crossings.0, crossings.1);

        // Two candidate arcs: (c1, c2) and (c2, c1 + 2π). Pick the one whose
        // interior lies on the requested side.
        let pick = |lo: f64, hi: f64| -> Option<(f64, f64)> {
            let mid = 0.5 * (lo + hi);
            let s = g(mid);
            let on_plus = s > 0.0;
            match side {
                HalfPlane::Plus if on_plus => Some((lo, hi)),
                HalfPlane::Minus if !on_plus => Some((lo, hi)),
                _ => None,
            }
        };
        let arc = pick(c1, c2)
            .or_else(|| pick(c2, c1 + TAU))
            .ok_or_else(|| {
                Error::InternalInconsistency("no parameter arc matches the requested side".into())
            })?;

        Ok(HalfBisector {
            norm,
            p1,
            p2,
            side,
            theta_lo: arc.0,
            theta_hi: arc.1,
            distance: norm.value(dir),
        })
    }

    /// ‖p1 - p2‖ in the underlying norm.
    pub fn pair_distance(&self) -> f64 {
        self.distance
    }

    pub fn half_distance(&self) -> f64 {
        0.5 * self.distance
    }

    /// The unique point of this bisector half at radius `mu` from both
    /// generators. The returned point `x` satisfies `|‖x-p1‖ - mu| <= t`
    /// and `|‖x-p2‖ - mu| <= t` with `t = tol·max(1, mu)`.
    pub fn point_at(&self, mu: f64, tol: f64) -> Result<Vec2> {
        let half = self.half_distance();
        if mu < half - tol {
            return Err(Error::NoIntersection { radius: mu, half_distance: half });
        }
        if mu <= half * (1.0 + BOUNDARY_BAND) {
            return Ok(self.p1.midpoint(self.p2));
        }

        let h = |theta: f64| self.norm.value(self.circle_point(mu, theta) - self.p2) - mu;
        // At the arc ends the circle S(p1, mu) meets the line through the
        // pair: one end is at distance mu + d from p2, the other at
        // |mu - d| < mu, so h brackets a sign change for every mu > d/2.
        let h_lo = h(self.theta_lo);
        let h_hi = h(self.theta_hi);
        let tol_f = tol * mu.max(1.0);
        let root = solve_bracketed(
            h,
            self.theta_lo,
            self.theta_hi,
            h_lo,
            h_hi,
            1e-15 * TAU,
            tol_f,
            MAX_ITER,
        )?;
        Ok(self.circle_point(mu, root))
    }

    fn circle_point(&self, mu: f64, theta: f64) -> Vec2 {
        self.p1 + self.norm.unit_circle_point(theta) * mu
    }

    pub fn side(&self) -> HalfPlane {
        self.side
    }
}

/// Locate the two parameter values where `g` changes sign on [0, 2π).
fn find_line_crossings(g: impl Fn(f64) -> f64) -> Result<(f64, f64)> {
    let step = TAU / CROSSING_SCAN as f64;
    let mut crossings: Vec<f64> = Vec::with_capacity(2);
    let mut prev_theta = 0.0f64;
    let mut prev_g = g(0.0);
    for k in 1..=CROSSING_SCAN {
        let theta = k as f64 * step;
        let g_now = g(theta);
        if prev_g == 0.0 {
            crossings.push(prev_theta);
        } else if prev_g.signum() != g_now.signum() && g_now != 0.0 {
            let r = solve_bracketed(&g, prev_theta, theta, prev_g, g_now, 1e-15 * TAU, 0.0, MAX_ITER)?;
            crossings.push(r);
        }
        prev_theta = theta;
        prev_g = g_now;
    }
    crossings.dedup_by(|a, b| (*a - *b).abs() < 1e-9 || (*a - *b).abs() > TAU - 1e-9);
    if crossings.len() != 2 {
        return Err(Error::InternalInconsistency(format!(
            "expected 2 line crossings on the unit circle, found {}",
            crossings.len()
        )));
    }
    Ok((crossings[0], crossings[1]))
}

/// The point of `bisec(p1, p2)` at distance `mu` from both generators in
/// the requested half plane. One-shot form of [`HalfBisector::point_at`];
/// batch callers should construct the `HalfBisector` once instead.
pub fn bisector_point(norm: &Norm, query: &BisectorQuery, tol: f64) -> Result<Vec2> {
    let hb = HalfBisector::new(norm, query.p1, query.p2, query.side)?;
    hb.point_at(query.mu, tol)
}

/// Check that `x` lies on the side requested by `query` (or on the line).
pub fn on_requested_side(query: &BisectorQuery, x: Vec2, tol: f64) -> bool {
    match half_plane_side(query.p1, query.p2, x, tol) {
        Ok(Side::On) => true,
        Ok(side) => query.side.matches(side),
        Err(_) => false,
    }
}
