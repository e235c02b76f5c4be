//! Points, disks, half-plane predicates, and convex hulls.
//!
//! Everything here except [`Disk`] is norm-independent: convexity and
//! sidedness are affine notions, so the predicates use the ordinary cross
//! product regardless of which norm the solvers measure distances in.

use std::collections::HashSet;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::norm::Norm;

/// A point or displacement in the plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn midpoint(self, other: Vec2) -> Vec2 {
        Vec2::new(0.5 * (self.x + other.x), 0.5 * (self.y + other.y))
    }

    /// z-component of the cross product `self × other`.
    pub fn cross(self, other: Vec2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn dot(self, other: Vec2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// Euclidean length, used only for tolerance scaling in predicates.
    pub fn hypot(self) -> f64 {
        (self.x * self.x + self.y * self.y).sqrt()
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    fn mul(self, k: f64) -> Vec2 {
        Vec2::new(self.x * k, self.y * k)
    }
}

/// Which side of a directed line a point lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
    On,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
            Side::On => Side::On,
        }
    }
}

/// Side of `x` relative to the directed line through `a` and `b`.
///
/// The `on` band is relative: `|cross| <= tol * |b-a| * |x-a|` (Euclidean
/// lengths), so the verdict survives both tiny and huge coordinates.
pub fn half_plane_side(a: Vec2, b: Vec2, x: Vec2, tol: f64) -> Result<Side> {
    if a == b {
        return Err(Error::DegenerateLine);
    }
    let cross = (b - a).cross(x - a);
    let scale = (b - a).hypot() * (x - a).hypot();
    if cross.abs() <= tol * scale {
        Ok(Side::On)
    } else if cross > 0.0 {
        Ok(Side::Left)
    } else {
        Ok(Side::Right)
    }
}

/// A disk `{x : ‖x - center‖ <= radius}` measured in a specific norm.
#[derive(Debug, Clone)]
pub struct Disk {
    pub center: Vec2,
    pub radius: f64,
    pub norm: Norm,
}

impl Disk {
    pub fn new(norm: Norm, center: Vec2, radius: f64) -> Self {
        Disk { center, radius, norm }
    }

    /// Smallest disk containing the pair: centered at the midpoint with
    /// radius half the pair distance. `p = q` yields a radius-0 disk.
    pub fn two_point(norm: Norm, p: Vec2, q: Vec2) -> Self {
        let center = p.midpoint(q);
        let radius = 0.5 * norm.value(p - q);
        Disk { center, radius, norm }
    }

    /// `‖x - center‖ <= radius + tol`.
    pub fn contains(&self, x: Vec2, tol: f64) -> bool {
        self.norm.value(x - self.center) <= self.radius + tol
    }
}

/// A finite point set with exact duplicates removed, input order preserved.
#[derive(Debug, Clone)]
pub struct PointSet {
    points: Vec<Vec2>,
}

impl PointSet {
    /// Deduplicates by exact coordinate equality and rejects non-finite
    /// coordinates. First occurrence wins, so indices stay stable for
    /// the solvers' deterministic tie-breaking.
    pub fn new(points: impl IntoIterator<Item = Vec2>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for p in points {
            if !p.is_finite() {
                return Err(Error::NonFinite(p.x, p.y));
            }
            // +0.0 and -0.0 compare equal; normalize before hashing.
            let key = ((p.x + 0.0).to_bits(), (p.y + 0.0).to_bits());
            if seen.insert(key) {
                out.push(p);
            }
        }
        Ok(PointSet { points: out })
    }

    pub fn points(&self) -> &[Vec2] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Extreme points of the convex hull in counterclockwise order, starting
/// from the lexicographically smallest point. Collinear inputs yield the
/// two endpoints; a single point yields itself. No three consecutive
/// output vertices are collinear.
pub fn convex_hull(points: &[Vec2]) -> Vec<Vec2> {
    let mut pts: Vec<Vec2> = points.to_vec();
    pts.sort_by(|a, b| (a.x, a.y).partial_cmp(&(b.x, b.y)).unwrap());
    pts.dedup();
    let n = pts.len();
    if n <= 2 {
        return pts;
    }

    // Monotone chain with strict turns, so collinear mid-edge points drop out.
    let mut hull: Vec<Vec2> = Vec::with_capacity(2 * n);
    for &p in pts.iter() {
        while hull.len() >= 2 {
            let q = hull[hull.len() - 1];
            let r = hull[hull.len() - 2];
            if (q - r).cross(p - r) <= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    let lower_len = hull.len() + 1;
    for &p in pts.iter().rev() {
        while hull.len() >= lower_len {
            let q = hull[hull.len() - 1];
            let r = hull[hull.len() - 2];
            if (q - r).cross(p - r) <= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    hull.pop();
    hull
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::norm::Norm;
    use proptest::prelude::*;

    #[test]
    fn two_point_disk_symmetric_pair() {
        let n = Norm::p_norm(4.0).unwrap();
        let d = Disk::two_point(n, Vec2::new(-1.0, 0.0), Vec2::new(1.0, 0.0));
        assert_eq!(d.center, Vec2::new(0.0, 0.0));
        assert!((d.radius - 1.0).abs() < 1e-15);
    }

    #[test]
    fn two_point_disk_degenerate_pair() {
        let n = Norm::p_norm(2.0).unwrap();
        let d = Disk::two_point(n, Vec2::new(3.0, 3.0), Vec2::new(3.0, 3.0));
        assert_eq!(d.center, Vec2::new(3.0, 3.0));
        assert_eq!(d.radius, 0.0);
    }

    #[test]
    fn two_point_disk_euclidean_radius() {
        // half of ‖(2,4)‖₂ = √5
        let n = Norm::p_norm(2.0).unwrap();
        let d = Disk::two_point(n, Vec2::new(1.0, 2.0), Vec2::new(3.0, 6.0));
        assert_eq!(d.center, Vec2::new(2.0, 4.0));
        assert!((d.radius - 5f64.sqrt()).abs() < 1e-12, "radius {}", d.radius);
    }

    #[test]
    fn disk_contains_boundary_and_outside() {
        let n = Norm::p_norm(4.0).unwrap();
        let d = Disk::new(n, Vec2::ZERO, 1.0);
        assert!(d.contains(Vec2::new(1.0, 0.0), 0.0));
        // ‖(1,1)‖₄ = 2^(1/4) ≈ 1.189 > 1
        assert!(!d.contains(Vec2::new(1.0, 1.0), 1e-9));
        let z = Disk::new(Norm::p_norm(2.0).unwrap(), Vec2::ZERO, 0.0);
        assert!(z.contains(Vec2::ZERO, 0.0));
    }

    #[test]
    fn half_plane_side_basic() {
        let a = Vec2::ZERO;
        let b = Vec2::new(1.0, 0.0);
        assert_eq!(half_plane_side(a, b, Vec2::new(0.0, 1.0), 1e-12).unwrap(), Side::Left);
        assert_eq!(half_plane_side(a, b, Vec2::new(2.0, 0.0), 1e-12).unwrap(), Side::On);
        assert_eq!(half_plane_side(a, b, Vec2::new(0.0, -1.0), 1e-12).unwrap(), Side::Right);
        assert_eq!(half_plane_side(a, a, b, 1e-12), Err(Error::DegenerateLine));
    }

    #[test]
    fn hull_drops_interior_point() {
        let pts = [
            Vec2::new(0.0, 0.0),
            Vec2::new(2.0, 0.0),
            Vec2::new(1.0, 1.0),
            Vec2::new(1.0, 0.2),
        ];
        let hull = convex_hull(&pts);
        assert_eq!(hull, vec![Vec2::new(0.0, 0.0), Vec2::new(2.0, 0.0), Vec2::new(1.0, 1.0)]);
    }

    #[test]
    fn hull_collinear_keeps_endpoints() {
        let pts = [Vec2::new(0.0, 0.0), Vec2::new(1.0, 0.0), Vec2::new(2.0, 0.0)];
        assert_eq!(convex_hull(&pts), vec![Vec2::new(0.0, 0.0), Vec2::new(2.0, 0.0)]);
    }

    #[test]
    fn hull_square_ccw() {
        let pts = [
            Vec2::new(1.0, 1.0),
            Vec2::new(-1.0, 1.0),
            Vec2::new(1.0, -1.0),
            Vec2::new(-1.0, -1.0),
        ];
        let hull = convex_hull(&pts);
        assert_eq!(
            hull,
            vec![
                Vec2::new(-1.0, -1.0),
                Vec2::new(1.0, -1.0),
                Vec2::new(1.0, 1.0),
                Vec2::new(-1.0, 1.0),
            ]
        );
    }

    #[test]
    fn pointset_dedups_and_rejects_nonfinite() {
        let ps = PointSet::new([
            Vec2::new(1.0, 2.0),
            Vec2::new(1.0, 2.0),
            Vec2::new(3.0, 4.0),
            Vec2::new(-0.0, 0.0),
            Vec2::new(0.0, -0.0),
        ])
        .unwrap();
        assert_eq!(ps.len(), 3);
        assert!(PointSet::new([Vec2::new(f64::NAN, 0.0)]).is_err());
    }

    proptest! {
        #[test]
        fn hull_is_idempotent(pts in proptest::collection::vec((-100.0..100.0f64, -100.0..100.0f64), 1..40)) {
            let pts: Vec<Vec2> = pts.into_iter().map(|(x, y)| Vec2::new(x, y)).collect();
            let h1 = convex_hull(&pts);
            let h2 = convex_hull(&h1);
            prop_assert_eq!(h1, h2);
        }

        #[test]
        fn hull_contains_all_inputs(pts in proptest::collection::vec((-10.0..10.0f64, -10.0..10.0f64), 3..30)) {
            let pts: Vec<Vec2> = pts.into_iter().map(|(x, y)| Vec2::new(x, y)).collect();
            let hull = convex_hull(&pts);
            prop_assume!(hull.len() >= 3);
            // every input point is on or left of every CCW hull edge
            for p in &pts {
                for w in 0..hull.len() {
                    let a = hull[w];
                    let b = hull[(w + 1) % hull.len()];
                    let c = (b - a).cross(*p - a);
                    prop_assert!(c >= -1e-9 * (b - a).hypot() * ((*p - a).hypot() + 1.0));
                }
            }
        }
    }
}
