//! Strictly convex planar norms: the built-in ℓ^p family and custom gauges.
//!
//! A norm is strictly convex when its unit circle contains no line segment,
//! equivalently ‖u + v‖ < 2 for any two distinct unit vectors u, v. Every
//! solver in this crate requires strict convexity, so ℓ¹ and ℓ∞ are rejected
//! at construction. Custom norms must bring their own unit-circle
//! parametrization; the library never inverts an evaluator to find boundary
//! points, because the root-finding layers need the parametrization directly.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::geometry::Vec2;

/// Default grid size (angles) for [`Norm::validate_strict_convexity`];
/// 40 angles give 780 distinct pairs.
pub const DEFAULT_CONVEXITY_SAMPLES: usize = 40;

/// A pair of unit vectors counts as a violation when ‖u+v‖ >= 2 - this.
const CONVEXITY_MARGIN: f64 = 1e-9;

type Evaluator = Arc<dyn Fn(Vec2) -> f64 + Send + Sync>;
type BoundaryMap = Arc<dyn Fn(f64) -> Vec2 + Send + Sync>;

#[derive(Clone)]
enum NormKind {
    P { p: f64 },
    Custom { evaluator: Evaluator, boundary: BoundaryMap },
}

/// A strictly convex norm on the plane.
///
/// Values are immutable after construction and cheap to clone, so one norm
/// can be shared freely across concurrent solver runs.
#[derive(Clone)]
pub struct Norm {
    kind: NormKind,
}

/// Outcome of sampling-based strict-convexity validation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StrictConvexity {
    Ok,
    Violation { u: Vec2, v: Vec2 },
}

impl Norm {
    /// The ℓ^p norm. Requires 1 < p < ∞ strictly: the ℓ¹ and ℓ∞ unit
    /// circles contain segments, and every p in between is strictly convex.
    pub fn p_norm(p: f64) -> Result<Self> {
        if !p.is_finite() || p <= 1.0 {
            return Err(Error::NotStrictlyConvex(format!(
                "the l^p norm requires 1 < p < inf, got p = {p}"
            )));
        }
        Ok(Norm { kind: NormKind::P { p } })
    }

    pub fn euclidean() -> Self {
        Norm { kind: NormKind::P { p: 2.0 } }
    }

    /// A user-supplied norm given by an evaluator and a unit-circle
    /// parametrization `theta in [0, 2π) -> boundary point`.
    ///
    /// The parametrization must be continuous, traverse the unit circle
    /// exactly once, and satisfy `evaluator(boundary(theta)) = 1`. Strict
    /// convexity is not checked here; run
    /// [`validate_strict_convexity`](Self::validate_strict_convexity)
    /// before handing the norm to a solver.
    pub fn custom(
        evaluator: impl Fn(Vec2) -> f64 + Send + Sync + 'static,
        boundary: impl Fn(f64) -> Vec2 + Send + Sync + 'static,
    ) -> Self {
        Norm {
            kind: NormKind::Custom {
                evaluator: Arc::new(evaluator),
                boundary: Arc::new(boundary),
            },
        }
    }

    /// The exponent for ℓ^p norms, `None` for custom ones.
    pub fn exponent(&self) -> Option<f64> {
        match self.kind {
            NormKind::P { p } => Some(p),
            NormKind::Custom { .. } => None,
        }
    }

    /// ‖v‖.
    pub fn value(&self, v: Vec2) -> f64 {
        match &self.kind {
            NormKind::P { p } => p_norm_value(*p, v),
            NormKind::Custom { evaluator, .. } => evaluator(v),
        }
    }

    /// ‖a - b‖.
    pub fn distance(&self, a: Vec2, b: Vec2) -> f64 {
        self.value(a - b)
    }

    /// A point on the unit circle. The map is continuous and sweeps the
    /// circle exactly once as `theta` runs through [0, 2π).
    ///
    /// For ℓ^p the superellipse parametrization
    /// `(sgn(cos θ)|cos θ|^(2/p), sgn(sin θ)|sin θ|^(2/p))` is used, which
    /// lands on the unit circle exactly: |x|^p + |y|^p = cos²θ + sin²θ = 1.
    pub fn unit_circle_point(&self, theta: f64) -> Vec2 {
        match &self.kind {
            NormKind::P { p } => {
                let e = 2.0 / *p;
                Vec2::new(signed_pow(theta.cos(), e), signed_pow(theta.sin(), e))
            }
            NormKind::Custom { boundary, .. } => boundary(theta.rem_euclid(std::f64::consts::TAU)),
        }
    }

    /// Sampling check of ‖u+v‖ < 2 over all pairs from a `sample_count`-angle
    /// grid of unit vectors. Reports the first offending pair in grid order.
    /// This is a heuristic screen for custom norms, not a proof; ℓ^p norms
    /// are validated analytically at construction and never need it.
    pub fn validate_strict_convexity(&self, sample_count: usize) -> StrictConvexity {
        let step = std::f64::consts::TAU / sample_count as f64;
        let samples: Vec<Vec2> = (0..sample_count)
            .map(|i| self.unit_circle_point(i as f64 * step))
            .collect();
        for i in 0..sample_count {
            for j in (i + 1)..sample_count {
                let (u, v) = (samples[i], samples[j]);
                if u == v {
                    continue;
                }
                if self.value(u + v) >= 2.0 - CONVEXITY_MARGIN {
                    return StrictConvexity::Violation { u, v };
                }
            }
        }
        StrictConvexity::Ok
    }

    /// The CLI norm spec string that reproduces this norm ("p:4"), or
    /// "custom" when there is none.
    pub fn spec_string(&self) -> String {
        match self.kind {
            NormKind::P { p } => format!("p:{p}"),
            NormKind::Custom { .. } => "custom".to_string(),
        }
    }
}

impl fmt::Debug for Norm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            NormKind::P { p } => write!(f, "Norm(p={p})"),
            NormKind::Custom { .. } => write!(f, "Norm(custom)"),
        }
    }
}

fn p_norm_value(p: f64, v: Vec2) -> f64 {
    let ax = v.x.abs();
    let ay = v.y.abs();
    // Scale out the larger component before exponentiation so large p or
    // large coordinates cannot overflow.
    let m = ax.max(ay);
    if m == 0.0 {
        return 0.0;
    }
    if ax == 0.0 || ay == 0.0 {
        return m;
    }
    if p == 2.0 {
        let (sx, sy) = (ax / m, ay / m);
        return m * (sx * sx + sy * sy).sqrt();
    }
    m * ((ax / m).powf(p) + (ay / m).powf(p)).powf(p.recip())
}

/// sgn(t)·|t|^e, with a snap to zero: cos(kπ/2) is not exactly zero in
/// floating point, and the snap keeps axis points of the parametrization
/// exact.
fn signed_pow(t: f64, e: f64) -> f64 {
    if t.abs() < 1e-15 {
        return 0.0;
    }
    t.signum() * t.abs().powf(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, TAU};

    #[test]
    fn p_norm_rejects_non_strictly_convex_exponents() {
        assert!(Norm::p_norm(4.0).is_ok());
        assert!(Norm::p_norm(2.5).is_ok());
        assert!(matches!(Norm::p_norm(1.0), Err(Error::NotStrictlyConvex(_))));
        assert!(matches!(Norm::p_norm(0.5), Err(Error::NotStrictlyConvex(_))));
        assert!(matches!(Norm::p_norm(f64::INFINITY), Err(Error::NotStrictlyConvex(_))));
        assert!(matches!(Norm::p_norm(f64::NAN), Err(Error::NotStrictlyConvex(_))));
    }

    #[test]
    fn euclidean_three_four_five() {
        let n = Norm::p_norm(2.0).unwrap();
        assert!((n.value(Vec2::new(3.0, 4.0)) - 5.0).abs() < 1e-15);
        assert_eq!(n.value(Vec2::ZERO), 0.0);
    }

    #[test]
    fn l4_norm_value_matches_direct_evaluation() {
        let n = Norm::p_norm(4.0).unwrap();
        let direct = (0.2f64.powi(4) + 0.5f64.powi(4)).powf(0.25);
        let got = n.value(Vec2::new(0.2, 0.5));
        assert!((got - direct).abs() < 1e-15);
        assert!((got - 0.50317).abs() < 1e-5, "got {got}");
    }

    #[test]
    fn unit_circle_axis_points_are_exact() {
        let n = Norm::p_norm(4.0).unwrap();
        assert_eq!(n.unit_circle_point(0.0), Vec2::new(1.0, 0.0));
        assert_eq!(n.unit_circle_point(FRAC_PI_2), Vec2::new(0.0, 1.0));
        assert_eq!(n.unit_circle_point(PI), Vec2::new(-1.0, 0.0));
    }

    #[test]
    fn unit_circle_diagonal_l4() {
        let n = Norm::p_norm(4.0).unwrap();
        let v = n.unit_circle_point(FRAC_PI_4);
        let expected = 2f64.powf(-0.25);
        assert!((v.x - expected).abs() < 1e-12);
        assert!((v.y - expected).abs() < 1e-12);
    }

    #[test]
    fn unit_circle_points_have_unit_norm() {
        for &p in &[1.2, 1.5, 2.0, 3.0, 4.0, 7.5] {
            let n = Norm::p_norm(p).unwrap();
            for k in 0..360 {
                let theta = k as f64 * TAU / 360.0;
                let v = n.unit_circle_point(theta);
                assert!(
                    (n.value(v) - 1.0).abs() <= 1e-12,
                    "p={p} theta={theta}: ‖v‖ = {}",
                    n.value(v)
                );
            }
        }
    }

    #[test]
    fn validate_accepts_strictly_convex_custom_norms() {
        for &p in &[1.5, 3.0] {
            let inner = Norm::p_norm(p).unwrap();
            let eval = inner.clone();
            let n = Norm::custom(move |v| eval.value(v), move |t| inner.unit_circle_point(t));
            assert_eq!(n.validate_strict_convexity(360), StrictConvexity::Ok, "p = {p}");
        }
    }

    #[test]
    fn validate_flags_max_norm() {
        let n = Norm::custom(
            |v| v.x.abs().max(v.y.abs()),
            |t| {
                // square traversal: project the Euclidean direction onto the ℓ∞ circle
                let (c, s) = (t.cos(), t.sin());
                let m = c.abs().max(s.abs());
                Vec2::new(c / m, s / m)
            },
        );
        match n.validate_strict_convexity(64) {
            StrictConvexity::Violation { u, v } => {
                // the witnesses are unit vectors whose sum still has norm ~2;
                // the first pair found lies on the segment between the
                // corners (1,1) and (1,-1) of the square unit circle
                assert!((n.value(u) - 1.0).abs() < 1e-12);
                assert!((n.value(v) - 1.0).abs() < 1e-12);
                assert!(n.value(u + v) >= 2.0 - 1e-9);
                assert_eq!(u.x, 1.0, "witness {u:?} should sit on the x = 1 edge");
                assert_eq!(v.x, 1.0, "witness {v:?} should sit on the x = 1 edge");
            }
            StrictConvexity::Ok => panic!("max norm must fail strict convexity"),
        }
    }

    proptest! {
        #[test]
        fn homogeneity(p in 1.1..8.0f64, alpha in -50.0..50.0f64,
                       x in -100.0..100.0f64, y in -100.0..100.0f64) {
            let n = Norm::p_norm(p).unwrap();
            let v = Vec2::new(x, y);
            let lhs = n.value(v * alpha);
            let rhs = alpha.abs() * n.value(v);
            prop_assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + rhs));
        }

        #[test]
        fn triangle_inequality(p in 1.1..8.0f64,
                               x1 in -100.0..100.0f64, y1 in -100.0..100.0f64,
                               x2 in -100.0..100.0f64, y2 in -100.0..100.0f64) {
            let n = Norm::p_norm(p).unwrap();
            let v = Vec2::new(x1, y1);
            let w = Vec2::new(x2, y2);
            prop_assert!(n.value(v + w) <= n.value(v) + n.value(w) + 1e-12);
        }

        #[test]
        fn symmetry_is_exact(p in 1.1..8.0f64, x in -100.0..100.0f64, y in -100.0..100.0f64) {
            let n = Norm::p_norm(p).unwrap();
            let v = Vec2::new(x, y);
            prop_assert_eq!(n.value(v), n.value(-v));
        }
    }
}
