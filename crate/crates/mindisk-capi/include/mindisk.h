#ifndef MINDISK_H
#define MINDISK_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible function.
 */
typedef enum {
  MD_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  MD_STATUS_NULL_ARGUMENT = 1,
  /**
   * An argument was out of domain (bad count, non-positive tolerance...).
   */
  MD_STATUS_INVALID_ARGUMENT = 2,
  /**
   * The requested norm is not strictly convex (p <= 1 or p = inf).
   */
  MD_STATUS_NOT_STRICTLY_CONVEX = 3,
  MD_STATUS_EMPTY_INPUT = 4,
  MD_STATUS_SIZE_LIMIT = 5,
  /**
   * A coordinate was NaN or infinite.
   */
  MD_STATUS_NON_FINITE = 6,
  MD_STATUS_DEGENERATE_INPUT = 7,
  MD_STATUS_CONVERGENCE_FAILURE = 8,
  MD_STATUS_INTERNAL_ERROR = 9,
} MdStatus;

/**
 * Solver selector for [`md_solve`].
 */
typedef enum {
  MD_ALGORITHM_ELZINGA_HEARN = 0,
  MD_ALGORITHM_SHAMOS_HOEY = 1,
  MD_ALGORITHM_ENUMERATION = 2,
  MD_ALGORITHM_DESCENT = 3,
} MdAlgorithm;

/**
 * Opaque norm handle. Create with [`md_norm_new_p`], release with
 * [`md_norm_free`].
 */
typedef struct MdNorm MdNorm;

/**
 * A solved disk: center coordinates, radius, and the number of input
 * points on the boundary.
 */
typedef struct {
  double center_x;
  double center_y;
  double radius;
  uintptr_t support_count;
} MdDisk;

/**
 * Create an ℓ^p norm handle. Fails with `NOT_STRICTLY_CONVEX` unless
 * 1 < p < inf. On success `*out` owns the handle.
 *
 * # Safety
 * `out` must be null or point to writable memory for one pointer.
 */
MdStatus md_norm_new_p(double p, MdNorm **out);

/**
 * Release a norm handle. Null is a no-op.
 *
 * # Safety
 * `norm` must be a pointer previously returned by [`md_norm_new_p`] and
 * not yet freed.
 */
void md_norm_free(MdNorm *norm);

/**
 * Evaluate ‖(x, y)‖ under the norm.
 *
 * # Safety
 * `norm` must be a live handle from [`md_norm_new_p`]; `out` must point to
 * writable memory for one f64.
 */
MdStatus md_norm_value(const MdNorm *norm, double x, double y, double *out);

/**
 * The unit-circle point of the norm at parameter `theta`, written to
 * `(*out_x, *out_y)`.
 *
 * # Safety
 * `norm` must be a live handle; `out_x` and `out_y` must be writable.
 */
MdStatus md_norm_unit_circle_point(const MdNorm *norm, double theta, double *out_x, double *out_y);

/**
 * Solve the minimal enclosing disk problem.
 *
 * `coords` holds `n_points` points as interleaved `x0 y0 x1 y1 ...`
 * doubles. `tol` is the feasibility tolerance relative to the radius
 * (pass 1e-9 when unsure). On success `*out_disk` holds the center,
 * radius, and boundary support count.
 *
 * # Safety
 * `norm` must be a live handle; `coords` must point to `2 * n_points`
 * readable doubles; `out_disk` must be writable.
 */
MdStatus md_solve(const MdNorm *norm,
                  const double *coords,
                  uintptr_t n_points,
                  MdAlgorithm algorithm,
                  double tol,
                  MdDisk *out_disk);

#endif  /* MINDISK_H */
