//! C ABI for the mindisk solvers.
//!
//! Norms are opaque handles created and destroyed through this interface;
//! every fallible call returns an [`MdStatus`] code and writes results
//! through out-pointers. Point sets cross the boundary as interleaved
//! `x0 y0 x1 y1 ...` coordinate buffers.

use std::panic::{catch_unwind, AssertUnwindSafe};

use mindisk::elzinga_hearn::solve_eh;
use mindisk::error::Error;
use mindisk::oracle::{solve_enumeration, solve_minimax_descent};
use mindisk::report::SolveReport;
use mindisk::shamos_hoey::solve_sh;
use mindisk::{Norm, PointSet, Vec2};

/// Status code returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MdStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// An argument was out of domain (bad count, non-positive tolerance...).
    InvalidArgument = 2,
    /// The requested norm is not strictly convex (p <= 1 or p = inf).
    NotStrictlyConvex = 3,
    EmptyInput = 4,
    SizeLimit = 5,
    /// A coordinate was NaN or infinite.
    NonFinite = 6,
    DegenerateInput = 7,
    ConvergenceFailure = 8,
    InternalError = 9,
}

/// Solver selector for [`md_solve`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MdAlgorithm {
    ElzingaHearn = 0,
    ShamosHoey = 1,
    Enumeration = 2,
    Descent = 3,
}

/// A solved disk: center coordinates, radius, and the number of input
/// points on the boundary.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct MdDisk {
    pub center_x: f64,
    pub center_y: f64,
    pub radius: f64,
    pub support_count: usize,
}

/// Opaque norm handle. Create with [`md_norm_new_p`], release with
/// [`md_norm_free`].
pub struct MdNorm {
    inner: Norm,
}

fn status_of(e: &Error) -> MdStatus {
    match e {
        Error::NotStrictlyConvex(_) => MdStatus::NotStrictlyConvex,
        Error::EmptyInput => MdStatus::EmptyInput,
        Error::NonFinite(..) => MdStatus::NonFinite,
        Error::SizeLimit { .. } => MdStatus::SizeLimit,
        Error::DegenerateLine | Error::DegenerateTriangle(_) => MdStatus::DegenerateInput,
        Error::ConvergenceFailure(_) => MdStatus::ConvergenceFailure,
        Error::NoIntersection { .. } => MdStatus::InvalidArgument,
        Error::Parse(_) => MdStatus::InvalidArgument,
        Error::StrictConvexityViolation => MdStatus::NotStrictlyConvex,
        Error::InternalInconsistency(_) => MdStatus::InternalError,
    }
}

/// Create an ℓ^p norm handle. Fails with `NOT_STRICTLY_CONVEX` unless
/// 1 < p < inf. On success `*out` owns the handle.
///
/// # Safety
/// `out` must be null or point to writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn md_norm_new_p(p: f64, out: *mut *mut MdNorm) -> MdStatus {
    if out.is_null() {
        return MdStatus::NullArgument;
    }
    match Norm::p_norm(p) {
        Ok(n) => {
            let handle = Box::new(MdNorm { inner: n });
            *out = Box::into_raw(handle);
            MdStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Release a norm handle. Null is a no-op.
///
/// # Safety
/// `norm` must be a pointer previously returned by [`md_norm_new_p`] and
/// not yet freed.
#[no_mangle]
pub unsafe extern "C" fn md_norm_free(norm: *mut MdNorm) {
    if !norm.is_null() {
        drop(Box::from_raw(norm));
    }
}

/// Evaluate ‖(x, y)‖ under the norm.
///
/// # Safety
/// `norm` must be a live handle from [`md_norm_new_p`]; `out` must point to
/// writable memory for one f64.
#[no_mangle]
pub unsafe extern "C" fn md_norm_value(
    norm: *const MdNorm,
    x: f64,
    y: f64,
    out: *mut f64,
) -> MdStatus {
    if norm.is_null() || out.is_null() {
        return MdStatus::NullArgument;
    }
    if !x.is_finite() || !y.is_finite() {
        return MdStatus::NonFinite;
    }
    *out = (*norm).inner.value(Vec2::new(x, y));
    MdStatus::Ok
}

/// The unit-circle point of the norm at parameter `theta`, written to
/// `(*out_x, *out_y)`.
///
/// # Safety
/// `norm` must be a live handle; `out_x` and `out_y` must be writable.
#[no_mangle]
pub unsafe extern "C" fn md_norm_unit_circle_point(
    norm: *const MdNorm,
    theta: f64,
    out_x: *mut f64,
    out_y: *mut f64,
) -> MdStatus {
    if norm.is_null() || out_x.is_null() || out_y.is_null() {
        return MdStatus::NullArgument;
    }
    if !theta.is_finite() {
        return MdStatus::NonFinite;
    }
    let v = (*norm).inner.unit_circle_point(theta);
    *out_x = v.x;
    *out_y = v.y;
    MdStatus::Ok
}

fn solve_report(
    norm: &Norm,
    points: &PointSet,
    algorithm: MdAlgorithm,
    tol: f64,
) -> Result<SolveReport, Error> {
    match algorithm {
        MdAlgorithm::ElzingaHearn => solve_eh(norm, points, tol),
        MdAlgorithm::ShamosHoey => solve_sh(norm, points, tol),
        MdAlgorithm::Enumeration => solve_enumeration(norm, points, tol),
        MdAlgorithm::Descent => {
            let disk = solve_minimax_descent(norm, points, tol)?;
            let band = 20.0 * tol * disk.radius.max(1.0);
            let support = mindisk::report::support_points(
                norm,
                points.points(),
                disk.center,
                disk.radius,
                band,
            );
            Ok(SolveReport {
                disk,
                support,
                iterations: Vec::new(),
                algorithm: mindisk::report::Algorithm::Descent,
            })
        }
    }
}

/// Solve the minimal enclosing disk problem.
///
/// `coords` holds `n_points` points as interleaved `x0 y0 x1 y1 ...`
/// doubles. `tol` is the feasibility tolerance relative to the radius
/// (pass 1e-9 when unsure). On success `*out_disk` holds the center,
/// radius, and boundary support count.
///
/// # Safety
/// `norm` must be a live handle; `coords` must point to `2 * n_points`
/// readable doubles; `out_disk` must be writable.
#[no_mangle]
pub unsafe extern "C" fn md_solve(
    norm: *const MdNorm,
    coords: *const f64,
    n_points: usize,
    algorithm: MdAlgorithm,
    tol: f64,
    out_disk: *mut MdDisk,
) -> MdStatus {
    if norm.is_null() || out_disk.is_null() || (coords.is_null() && n_points > 0) {
        return MdStatus::NullArgument;
    }
    if tol.is_nan() || tol <= 0.0 || tol.is_infinite() {
        return MdStatus::InvalidArgument;
    }
    let slice = std::slice::from_raw_parts(coords, 2 * n_points);
    let pts: Vec<Vec2> = slice.chunks_exact(2).map(|c| Vec2::new(c[0], c[1])).collect();
    let norm_ref = &(*norm).inner;

    let outcome = catch_unwind(AssertUnwindSafe(|| -> Result<SolveReport, Error> {
        let set = PointSet::new(pts)?;
        solve_report(norm_ref, &set, algorithm, tol)
    }));
    match outcome {
        Ok(Ok(report)) => {
            *out_disk = MdDisk {
                center_x: report.disk.center.x,
                center_y: report.disk.center.y,
                radius: report.disk.radius,
                support_count: report.support.len(),
            };
            MdStatus::Ok
        }
        Ok(Err(e)) => status_of(&e),
        Err(_) => MdStatus::InternalError,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    fn new_norm(p: f64) -> *mut MdNorm {
        let mut handle: *mut MdNorm = ptr::null_mut();
        assert_eq!(unsafe { md_norm_new_p(p, &mut handle) }, MdStatus::Ok);
        assert!(!handle.is_null());
        handle
    }

    #[test]
    fn rejects_non_strictly_convex_exponents() {
        let mut handle: *mut MdNorm = ptr::null_mut();
        unsafe {
            assert_eq!(md_norm_new_p(1.0, &mut handle), MdStatus::NotStrictlyConvex);
            assert_eq!(md_norm_new_p(f64::INFINITY, &mut handle), MdStatus::NotStrictlyConvex);
            assert_eq!(md_norm_new_p(2.0, ptr::null_mut()), MdStatus::NullArgument);
        }
    }

    #[test]
    fn norm_value_through_the_boundary() {
        let n = new_norm(2.0);
        let mut v = 0.0f64;
        unsafe {
            assert_eq!(md_norm_value(n, 3.0, 4.0, &mut v), MdStatus::Ok);
            assert!((v - 5.0).abs() < 1e-15);
            assert_eq!(md_norm_value(n, f64::NAN, 0.0, &mut v), MdStatus::NonFinite);
            md_norm_free(n);
        }
    }

    #[test]
    fn unit_circle_points_are_on_the_circle() {
        let n = new_norm(4.0);
        unsafe {
            let (mut x, mut y) = (0.0f64, 0.0f64);
            for k in 0..32 {
                let theta = k as f64 * std::f64::consts::TAU / 32.0;
                assert_eq!(md_norm_unit_circle_point(n, theta, &mut x, &mut y), MdStatus::Ok);
                let mut v = 0.0f64;
                assert_eq!(md_norm_value(n, x, y, &mut v), MdStatus::Ok);
                assert!((v - 1.0).abs() < 1e-12);
            }
            md_norm_free(n);
        }
    }

    #[test]
    fn solve_through_the_boundary_all_algorithms() {
        let n = new_norm(4.0);
        let coords = [-1.0, 0.0, 1.0, 0.0, 0.2, 0.5];
        for algo in [
            MdAlgorithm::ElzingaHearn,
            MdAlgorithm::ShamosHoey,
            MdAlgorithm::Enumeration,
            MdAlgorithm::Descent,
        ] {
            let mut disk = MdDisk { center_x: 0.0, center_y: 0.0, radius: 0.0, support_count: 0 };
            let status =
                unsafe { md_solve(n, coords.as_ptr(), 3, algo, 1e-9, &mut disk) };
            assert_eq!(status, MdStatus::Ok, "{algo:?}");
            assert!((disk.center_x - 0.0).abs() < 1e-6, "{algo:?}: {disk:?}");
            assert!((disk.radius - 1.0).abs() < 1e-6, "{algo:?}: {disk:?}");
            if algo != MdAlgorithm::Descent {
                assert!(disk.support_count >= 2);
            }
        }
        unsafe { md_norm_free(n) };
    }

    #[test]
    fn solve_error_paths() {
        let n = new_norm(2.0);
        let mut disk = MdDisk { center_x: 0.0, center_y: 0.0, radius: 0.0, support_count: 0 };
        unsafe {
            assert_eq!(
                md_solve(n, ptr::null(), 2, MdAlgorithm::ElzingaHearn, 1e-9, &mut disk),
                MdStatus::NullArgument
            );
            assert_eq!(
                md_solve(n, [0.0].as_ptr(), 0, MdAlgorithm::ElzingaHearn, 1e-9, &mut disk),
                MdStatus::EmptyInput
            );
            let bad = [f64::NAN, 0.0];
            assert_eq!(
                md_solve(n, bad.as_ptr(), 1, MdAlgorithm::ElzingaHearn, 1e-9, &mut disk),
                MdStatus::NonFinite
            );
            let coords = [0.0, 0.0, 1.0, 1.0];
            assert_eq!(
                md_solve(n, coords.as_ptr(), 2, MdAlgorithm::ElzingaHearn, -1.0, &mut disk),
                MdStatus::InvalidArgument
            );
            md_norm_free(n);
        }
    }
}
