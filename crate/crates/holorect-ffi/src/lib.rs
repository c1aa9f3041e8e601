//! C ABI for the holorect library.
//!
//! Functions are exposed through an opaque [`HrFunction`] handle plus
//! plain-old-data structs; every fallible call returns an [`HrStatus`]
//! code and writes its result through out-pointers. The matching header
//! is generated into `include/holorect.h` at build time.

use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use holorect::complex::Complex;
use holorect::error::Error;
use holorect::formulas;
use holorect::funcspec::FunctionSpec;
use holorect::geometry::Rectangle;
use holorect::integrate::{self, RefinementConfig};
use holorect::roots;
use holorect::winding;

/// Opaque handle to a parsed function with its declared singularities.
pub struct HrFunction(FunctionSpec);

/// Status codes; `HR_STATUS_OK` is zero, everything else is an error.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HrStatus {
    Ok = 0,
    NullPointer,
    InvalidUtf8,
    Syntax,
    DegenerateRectangle,
    DegenerateSegment,
    InvalidPartition,
    NotSquare,
    InvalidConfig,
    EvalAtSingularity,
    Range,
    SingularityOnContour,
    SingularityInsideContour,
    LoopHitsPoint,
    NoStabilization,
    StepTooCoarse,
    PointNotOnBoundary,
    EndpointMismatch,
    LoopNotClosed,
    PointTooCloseToBoundary,
    BoundaryHitsValue,
    DerivativeTooSmall,
    DepthExhausted,
    Usage,
    Panic,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HrComplex {
    pub re: f64,
    pub im: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HrRect {
    pub re_lo: f64,
    pub re_hi: f64,
    pub im_lo: f64,
    pub im_hi: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HrConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub k_min: usize,
    pub k_max: usize,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HrIntegral {
    pub value: HrComplex,
    pub partitions_used: usize,
    pub est_error: f64,
    pub converged: bool,
}

fn status_of(err: &Error) -> HrStatus {
    match err {
        Error::Syntax { .. } => HrStatus::Syntax,
        Error::DegenerateRectangle(_) => HrStatus::DegenerateRectangle,
        Error::DegenerateSegment(_) => HrStatus::DegenerateSegment,
        Error::InvalidPartition(_) | Error::InvalidGrid(_) => HrStatus::InvalidPartition,
        Error::NotSquare { .. } => HrStatus::NotSquare,
        Error::InvalidConfig(_) => HrStatus::InvalidConfig,
        Error::EvalAtSingularity(_) => HrStatus::EvalAtSingularity,
        Error::NonFiniteValue(_) => HrStatus::Range,
        Error::SingularityOnContour(_) => HrStatus::SingularityOnContour,
        Error::SingularityInsideContour(_) => HrStatus::SingularityInsideContour,
        Error::LoopHitsPoint { .. } => HrStatus::LoopHitsPoint,
        Error::NoStabilization { .. } => HrStatus::NoStabilization,
        Error::StepTooCoarse { .. } => HrStatus::StepTooCoarse,
        Error::PointNotOnBoundary(_) => HrStatus::PointNotOnBoundary,
        Error::EndpointMismatch { .. } => HrStatus::EndpointMismatch,
        Error::LoopNotClosed { .. } => HrStatus::LoopNotClosed,
        Error::PointTooCloseToBoundary(_) => HrStatus::PointTooCloseToBoundary,
        Error::BoundaryHitsValue { .. } => HrStatus::BoundaryHitsValue,
        Error::DerivativeTooSmall { .. } => HrStatus::DerivativeTooSmall,
        Error::DepthExhausted { .. } | Error::SegmentDepthExhausted { .. } => {
            HrStatus::DepthExhausted
        }
        Error::Usage(_) => HrStatus::Usage,
    }
}

fn complex_in(z: HrComplex) -> Complex {
    Complex::new(z.re, z.im)
}

fn complex_out(z: Complex) -> HrComplex {
    HrComplex { re: z.re, im: z.im }
}

fn rect_in(r: HrRect) -> Result<Rectangle, Error> {
    Rectangle::new(r.re_lo, r.re_hi, r.im_lo, r.im_hi)
}

fn config_in(cfg: *const HrConfig) -> RefinementConfig {
    if cfg.is_null() {
        RefinementConfig::default()
    } else {
        let c = unsafe { *cfg };
        RefinementConfig {
            abs_tol: c.abs_tol,
            rel_tol: c.rel_tol,
            k_min: c.k_min,
            k_max: c.k_max,
        }
    }
}

fn guarded<F: FnOnce() -> HrStatus>(body: F) -> HrStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => HrStatus::Panic,
    }
}

/// Default refinement configuration (tolerances 1e-10, k in [16, 2^22]).
#[no_mangle]
pub extern "C" fn hr_config_default() -> HrConfig {
    let c = RefinementConfig::default();
    HrConfig {
        abs_tol: c.abs_tol,
        rel_tol: c.rel_tol,
        k_min: c.k_min,
        k_max: c.k_max,
    }
}

/// Static name of a status code, e.g. "E_SINGULARITY_ON_CONTOUR".
#[no_mangle]
pub extern "C" fn hr_status_name(status: HrStatus) -> *const c_char {
    let name: &'static [u8] = match status {
        HrStatus::Ok => b"OK\0",
        HrStatus::NullPointer => b"E_NULL_POINTER\0",
        HrStatus::InvalidUtf8 => b"E_INVALID_UTF8\0",
        HrStatus::Syntax => b"E_SYNTAX\0",
        HrStatus::DegenerateRectangle => b"E_DEGENERATE_RECTANGLE\0",
        HrStatus::DegenerateSegment => b"E_DEGENERATE_SEGMENT\0",
        HrStatus::InvalidPartition => b"E_INVALID_PARTITION\0",
        HrStatus::NotSquare => b"E_NOT_SQUARE\0",
        HrStatus::InvalidConfig => b"E_INVALID_CONFIG\0",
        HrStatus::EvalAtSingularity => b"E_EVAL_AT_SINGULARITY\0",
        HrStatus::Range => b"E_RANGE\0",
        HrStatus::SingularityOnContour => b"E_SINGULARITY_ON_CONTOUR\0",
        HrStatus::SingularityInsideContour => b"E_SINGULARITY_INSIDE_CONTOUR\0",
        HrStatus::LoopHitsPoint => b"E_LOOP_HITS_POINT\0",
        HrStatus::NoStabilization => b"E_NO_STABILIZATION\0",
        HrStatus::StepTooCoarse => b"E_STEP_TOO_COARSE\0",
        HrStatus::PointNotOnBoundary => b"E_POINT_NOT_ON_BOUNDARY\0",
        HrStatus::EndpointMismatch => b"E_ENDPOINT_MISMATCH\0",
        HrStatus::LoopNotClosed => b"E_LOOP_NOT_CLOSED\0",
        HrStatus::PointTooCloseToBoundary => b"E_POINT_TOO_CLOSE_TO_BOUNDARY\0",
        HrStatus::BoundaryHitsValue => b"E_BOUNDARY_HITS_VALUE\0",
        HrStatus::DerivativeTooSmall => b"E_DERIVATIVE_TOO_SMALL\0",
        HrStatus::DepthExhausted => b"E_DEPTH_EXHAUSTED\0",
        HrStatus::Usage => b"E_USAGE\0",
        HrStatus::Panic => b"E_PANIC\0",
    };
    name.as_ptr() as *const c_char
}

/// Parses an expression in `z` into a new function handle. The handle
/// must be released with `hr_fn_free`.
///
/// # Safety
/// `src` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hr_fn_parse(src: *const c_char, out: *mut *mut HrFunction) -> HrStatus {
    if src.is_null() || out.is_null() {
        return HrStatus::NullPointer;
    }
    guarded(|| {
        let text = match CStr::from_ptr(src).to_str() {
            Ok(t) => t,
            Err(_) => return HrStatus::InvalidUtf8,
        };
        match FunctionSpec::parse(text) {
            Ok(f) => {
                *out = Box::into_raw(Box::new(HrFunction(f)));
                HrStatus::Ok
            }
            Err(e) => {
                *out = ptr::null_mut();
                status_of(&e)
            }
        }
    })
}

/// Releases a function handle; a null pointer is a no-op.
///
/// # Safety
/// `f` must have come from this library and not been freed already.
#[no_mangle]
pub unsafe extern "C" fn hr_fn_free(f: *mut HrFunction) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Appends a declared singularity to the handle's set.
///
/// # Safety
/// `f` must be a live handle from `hr_fn_parse` or `hr_fn_differentiate`.
#[no_mangle]
pub unsafe extern "C" fn hr_fn_add_singularity(f: *mut HrFunction, s: HrComplex) -> HrStatus {
    if f.is_null() {
        return HrStatus::NullPointer;
    }
    guarded(|| {
        let handle = &mut *f;
        handle.0 = handle.0.clone().with_singularities(&[complex_in(s)]);
        HrStatus::Ok
    })
}

/// Number of declared singularities on the handle.
///
/// # Safety
/// `f` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn hr_fn_singularity_count(f: *const HrFunction) -> usize {
    if f.is_null() {
        return 0;
    }
    (*f).0.singularities().len()
}

/// Evaluates the function at `z`.
///
/// # Safety
/// `f` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hr_fn_eval(
    f: *const HrFunction,
    z: HrComplex,
    out: *mut HrComplex,
) -> HrStatus {
    if f.is_null() || out.is_null() {
        return HrStatus::NullPointer;
    }
    guarded(|| match (*f).0.eval(complex_in(z)) {
        Ok(v) => {
            *out = complex_out(v);
            HrStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// Symbolic derivative as a new handle.
///
/// # Safety
/// `f` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hr_fn_differentiate(
    f: *const HrFunction,
    out: *mut *mut HrFunction,
) -> HrStatus {
    if f.is_null() || out.is_null() {
        return HrStatus::NullPointer;
    }
    guarded(|| {
        *out = Box::into_raw(Box::new(HrFunction((*f).0.differentiate())));
        HrStatus::Ok
    })
}

fn integral_out(r: integrate::IntegralResult) -> HrIntegral {
    HrIntegral {
        value: complex_out(r.value),
        partitions_used: r.partitions_used,
        est_error: r.est_error,
        converged: r.converged,
    }
}

/// Integral over the segment from `a` to `b` as a limit of Cauchy sums.
///
/// # Safety
/// `f` must be a live handle; `cfg` may be null (defaults); `out` valid.
#[no_mangle]
pub unsafe extern "C" fn hr_segment_integral(
    f: *const HrFunction,
    a: HrComplex,
    b: HrComplex,
    cfg: *const HrConfig,
    out: *mut HrIntegral,
) -> HrStatus {
    if f.is_null() || out.is_null() {
        return HrStatus::NullPointer;
    }
    guarded(|| {
        let seg = match holorect::geometry::Segment::new(complex_in(a), complex_in(b)) {
            Ok(s) => s,
            Err(e) => return status_of(&e),
        };
        match integrate::segment_integral(&(*f).0, &seg, &config_in(cfg)) {
            Ok(r) => {
                *out = integral_out(r);
                HrStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Integral over the counter-clockwise rectangle boundary.
///
/// # Safety
/// `f` must be a live handle; `cfg` may be null; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn hr_rectangle_integral(
    f: *const HrFunction,
    rect: HrRect,
    cfg: *const HrConfig,
    out: *mut HrIntegral,
) -> HrStatus {
    if f.is_null() || out.is_null() {
        return HrStatus::NullPointer;
    }
    guarded(|| {
        let r = match rect_in(rect) {
            Ok(r) => r,
            Err(e) => return status_of(&e),
        };
        match integrate::rectangle_integral(&(*f).0, &r, &config_in(cfg)) {
            Ok(res) => {
                *out = integral_out(res);
                HrStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Integral over an automatically chosen rectangle enclosing the declared
/// singularity set.
///
/// # Safety
/// `f` must be a live handle; `cfg` may be null; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn hr_functional_integral(
    f: *const HrFunction,
    cfg: *const HrConfig,
    out: *mut HrIntegral,
) -> HrStatus {
    if f.is_null() || out.is_null() {
        return HrStatus::NullPointer;
    }
    guarded(|| match integrate::functional_integral(&(*f).0, &config_in(cfg)) {
        Ok(res) => {
            *out = integral_out(res);
            HrStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// The constant rho: the integral of 1/z over the square with vertices
/// +-1 +- i (equal to 2 pi i).
///
/// # Safety
/// `cfg` may be null; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn hr_rho(cfg: *const HrConfig, out: *mut HrComplex) -> HrStatus {
    if out.is_null() {
        return HrStatus::NullPointer;
    }
    guarded(|| match integrate::rho(&config_in(cfg)) {
        Ok(v) => {
            *out = complex_out(v);
            HrStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// f(a) reconstructed from boundary samples of the rectangle.
///
/// # Safety
/// `f` must be a live handle; `cfg` may be null; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn hr_cauchy_value(
    f: *const HrFunction,
    a: HrComplex,
    rect: HrRect,
    cfg: *const HrConfig,
    out: *mut HrComplex,
) -> HrStatus {
    if f.is_null() || out.is_null() {
        return HrStatus::NullPointer;
    }
    guarded(|| {
        let r = match rect_in(rect) {
            Ok(r) => r,
            Err(e) => return status_of(&e),
        };
        match formulas::cauchy_value(&(*f).0, complex_in(a), &r, &config_in(cfg)) {
            Ok(v) => {
                *out = complex_out(v);
                HrStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// f'(a) reconstructed from boundary samples of the rectangle.
///
/// # Safety
/// `f` must be a live handle; `cfg` may be null; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn hr_cauchy_derivative(
    f: *const HrFunction,
    a: HrComplex,
    rect: HrRect,
    cfg: *const HrConfig,
    out: *mut HrComplex,
) -> HrStatus {
    if f.is_null() || out.is_null() {
        return HrStatus::NullPointer;
    }
    guarded(|| {
        let r = match rect_in(rect) {
            Ok(r) => r,
            Err(e) => return status_of(&e),
        };
        match formulas::cauchy_derivative(&(*f).0, complex_in(a), &r, &config_in(cfg)) {
            Ok(v) => {
                *out = complex_out(v);
                HrStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Power-series coefficients a_0..=a_order around the origin, written to
/// `coeffs` (capacity order + 1). `radius_hint` may be null.
///
/// # Safety
/// `f` must be a live handle; `coeffs` must point to order + 1 writable
/// elements; `cfg` and `radius_hint` may be null.
#[no_mangle]
pub unsafe extern "C" fn hr_series_coefficients(
    f: *const HrFunction,
    order: usize,
    rect: HrRect,
    cfg: *const HrConfig,
    coeffs: *mut HrComplex,
    radius_hint: *mut f64,
) -> HrStatus {
    if f.is_null() || coeffs.is_null() {
        return HrStatus::NullPointer;
    }
    guarded(|| {
        let r = match rect_in(rect) {
            Ok(r) => r,
            Err(e) => return status_of(&e),
        };
        match formulas::series_coefficients(&(*f).0, order, &r, &config_in(cfg)) {
            Ok(series) => {
                for (i, c) in series.coeffs.iter().enumerate() {
                    *coeffs.add(i) = complex_out(*c);
                }
                if !radius_hint.is_null() {
                    *radius_hint = series.radius_hint;
                }
                HrStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Winding number of the counter-clockwise rectangle circuit about `p`.
///
/// # Safety
/// `cfg` may be null; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn hr_winding_rectangle(
    rect: HrRect,
    p: HrComplex,
    cfg: *const HrConfig,
    out: *mut i64,
) -> HrStatus {
    if out.is_null() {
        return HrStatus::NullPointer;
    }
    guarded(|| {
        let r = match rect_in(rect) {
            Ok(r) => r,
            Err(e) => return status_of(&e),
        };
        match winding::winding_number(&r.boundary_circuit(), complex_in(p), &config_in(cfg)) {
            Ok(w) => {
                *out = w.value;
                HrStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Winding-weighted number of preimages of `p` inside the rectangle.
///
/// # Safety
/// `f` must be a live handle; `cfg` may be null; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn hr_count_preimages(
    f: *const HrFunction,
    rect: HrRect,
    p: HrComplex,
    cfg: *const HrConfig,
    out: *mut i64,
) -> HrStatus {
    if f.is_null() || out.is_null() {
        return HrStatus::NullPointer;
    }
    guarded(|| {
        let r = match rect_in(rect) {
            Ok(r) => r,
            Err(e) => return status_of(&e),
        };
        match roots::count_preimages(&(*f).0, &r, complex_in(p), &config_in(cfg)) {
            Ok(n) => {
                *out = n;
                HrStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Local degree of `f` at `z0` (1 whenever f'(z0) is nonzero).
///
/// # Safety
/// `f` must be a live handle; `cfg` may be null; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn hr_local_degree(
    f: *const HrFunction,
    z0: HrComplex,
    cfg: *const HrConfig,
    out: *mut i64,
) -> HrStatus {
    if f.is_null() || out.is_null() {
        return HrStatus::NullPointer;
    }
    guarded(|| match roots::local_degree(&(*f).0, complex_in(z0), &config_in(cfg)) {
        Ok(n) => {
            *out = n;
            HrStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}
