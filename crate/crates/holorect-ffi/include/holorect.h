#ifndef HOLORECT_H
#define HOLORECT_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes; `HR_STATUS_OK` is zero, everything else is an error.
 */
typedef enum HrStatus {
  HR_STATUS_OK = 0,
  HR_STATUS_NULL_POINTER,
  HR_STATUS_INVALID_UTF8,
  HR_STATUS_SYNTAX,
  HR_STATUS_DEGENERATE_RECTANGLE,
  HR_STATUS_DEGENERATE_SEGMENT,
  HR_STATUS_INVALID_PARTITION,
  HR_STATUS_NOT_SQUARE,
  HR_STATUS_INVALID_CONFIG,
  HR_STATUS_EVAL_AT_SINGULARITY,
  HR_STATUS_RANGE,
  HR_STATUS_SINGULARITY_ON_CONTOUR,
  HR_STATUS_SINGULARITY_INSIDE_CONTOUR,
  HR_STATUS_LOOP_HITS_POINT,
  HR_STATUS_NO_STABILIZATION,
  HR_STATUS_STEP_TOO_COARSE,
  HR_STATUS_POINT_NOT_ON_BOUNDARY,
  HR_STATUS_ENDPOINT_MISMATCH,
  HR_STATUS_LOOP_NOT_CLOSED,
  HR_STATUS_POINT_TOO_CLOSE_TO_BOUNDARY,
  HR_STATUS_BOUNDARY_HITS_VALUE,
  HR_STATUS_DERIVATIVE_TOO_SMALL,
  HR_STATUS_DEPTH_EXHAUSTED,
  HR_STATUS_USAGE,
  HR_STATUS_PANIC,
} HrStatus;

/**
 * Opaque handle to a parsed function with its declared singularities.
 */
typedef struct HrFunction HrFunction;

typedef struct HrConfig {
  double abs_tol;
  double rel_tol;
  size_t k_min;
  size_t k_max;
} HrConfig;

typedef struct HrComplex {
  double re;
  double im;
} HrComplex;

typedef struct HrIntegral {
  struct HrComplex value;
  size_t partitions_used;
  double est_error;
  bool converged;
} HrIntegral;

typedef struct HrRect {
  double re_lo;
  double re_hi;
  double im_lo;
  double im_hi;
} HrRect;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Default refinement configuration (tolerances 1e-10, k in [16, 2^22]).
 */
struct HrConfig hr_config_default(void);

/**
 * Static name of a status code, e.g. "E_SINGULARITY_ON_CONTOUR".
 */
const char *hr_status_name(enum HrStatus status);

/**
 * Parses an expression in `z` into a new function handle. The handle
 * must be released with `hr_fn_free`.
 *
 * # Safety
 * `src` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum HrStatus hr_fn_parse(const char *src, struct HrFunction **out);

/**
 * Releases a function handle; a null pointer is a no-op.
 *
 * # Safety
 * `f` must have come from this library and not been freed already.
 */
void hr_fn_free(struct HrFunction *f);

/**
 * Appends a declared singularity to the handle's set.
 *
 * # Safety
 * `f` must be a live handle from `hr_fn_parse` or `hr_fn_differentiate`.
 */
enum HrStatus hr_fn_add_singularity(struct HrFunction *f, struct HrComplex s);

/**
 * Number of declared singularities on the handle.
 *
 * # Safety
 * `f` must be a live handle.
 */
size_t hr_fn_singularity_count(const struct HrFunction *f);

/**
 * Evaluates the function at `z`.
 *
 * # Safety
 * `f` must be a live handle and `out` a valid pointer.
 */
enum HrStatus hr_fn_eval(const struct HrFunction *f, struct HrComplex z, struct HrComplex *out);

/**
 * Symbolic derivative as a new handle.
 *
 * # Safety
 * `f` must be a live handle and `out` a valid pointer.
 */
enum HrStatus hr_fn_differentiate(const struct HrFunction *f, struct HrFunction **out);

/**
 * Integral over the segment from `a` to `b` as a limit of Cauchy sums.
 *
 * # Safety
 * `f` must be a live handle; `cfg` may be null (defaults); `out` valid.
 */
enum HrStatus hr_segment_integral(const struct HrFunction *f,
                                  struct HrComplex a,
                                  struct HrComplex b,
                                  const struct HrConfig *cfg,
                                  struct HrIntegral *out);

/**
 * Integral over the counter-clockwise rectangle boundary.
 *
 * # Safety
 * `f` must be a live handle; `cfg` may be null; `out` valid.
 */
enum HrStatus hr_rectangle_integral(const struct HrFunction *f,
                                    struct HrRect rect,
                                    const struct HrConfig *cfg,
                                    struct HrIntegral *out);

/**
 * Integral over an automatically chosen rectangle enclosing the declared
 * singularity set.
 *
 * # Safety
 * `f` must be a live handle; `cfg` may be null; `out` valid.
 */
enum HrStatus hr_functional_integral(const struct HrFunction *f,
                                     const struct HrConfig *cfg,
                                     struct HrIntegral *out);

/**
 * The constant rho: the integral of 1/z over the square with vertices
 * +-1 +- i (equal to 2 pi i).
 *
 * # Safety
 * `cfg` may be null; `out` must be valid.
 */
enum HrStatus hr_rho(const struct HrConfig *cfg, struct HrComplex *out);

/**
 * f(a) reconstructed from boundary samples of the rectangle.
 *
 * # Safety
 * `f` must be a live handle; `cfg` may be null; `out` valid.
 */
enum HrStatus hr_cauchy_value(const struct HrFunction *f,
                              struct HrComplex a,
                              struct HrRect rect,
                              const struct HrConfig *cfg,
                              struct HrComplex *out);

/**
 * f'(a) reconstructed from boundary samples of the rectangle.
 *
 * # Safety
 * `f` must be a live handle; `cfg` may be null; `out` valid.
 */
enum HrStatus hr_cauchy_derivative(const struct HrFunction *f,
                                   struct HrComplex a,
                                   struct HrRect rect,
                                   const struct HrConfig *cfg,
                                   struct HrComplex *out);

/**
 * Power-series coefficients a_0..=a_order around the origin, written to
 * `coeffs` (capacity order + 1). `radius_hint` may be null.
 *
 * # Safety
 * `f` must be a live handle; `coeffs` must point to order + 1 writable
 * elements; `cfg` and `radius_hint` may be null.
 */
enum HrStatus hr_series_coefficients(const struct HrFunction *f,
                                     size_t order,
                                     struct HrRect rect,
                                     const struct HrConfig *cfg,
                                     struct HrComplex *coeffs,
                                     double *radius_hint);

/**
 * Winding number of the counter-clockwise rectangle circuit about `p`.
 *
 * # Safety
 * `cfg` may be null; `out` must be valid.
 */
enum HrStatus hr_winding_rectangle(struct HrRect rect,
                                   struct HrComplex p,
                                   const struct HrConfig *cfg,
                                   int64_t *out);

/**
 * Winding-weighted number of preimages of `p` inside the rectangle.
 *
 * # Safety
 * `f` must be a live handle; `cfg` may be null; `out` valid.
 */
enum HrStatus hr_count_preimages(const struct HrFunction *f,
                                 struct HrRect rect,
                                 struct HrComplex p,
                                 const struct HrConfig *cfg,
                                 int64_t *out);

/**
 * Local degree of `f` at `z0` (1 whenever f'(z0) is nonzero).
 *
 * # Safety
 * `f` must be a live handle; `cfg` may be null; `out` valid.
 */
enum HrStatus hr_local_degree(const struct HrFunction *f,
                              struct HrComplex z0,
                              const struct HrConfig *cfg,
                              int64_t *out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* HOLORECT_H */
