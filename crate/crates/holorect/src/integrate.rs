//! Cauchy-sum integration over segments and rectangle boundaries, the
//! rectangle-independent integral functional, the constant rho, and the
//! quartering descent diagnostic.
//!
//! The primitive is the right-endpoint Cauchy sum
//! `C(P,f) = sum f(a_i) (a_i - a_{i-1})` over equipartitions. Refinement
//! doubles the partition size; because successive sums of an analytic
//! integrand admit an expansion in powers 1, 2, 4, 6, ... of the mesh, the
//! doubling sequence is Richardson-extrapolated to its limit, which reaches
//! the default tolerances with a few thousand samples per side instead of
//! the ~1e10 a raw sum would need.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::funcspec::FunctionSpec;
use crate::geometry::{Partition, Rectangle, Segment};

/// Contour guard: a declared singularity closer than this to a segment is
/// an error rather than a (meaningless) huge sum.
pub const CONTOUR_GUARD: f64 = 1e-12;

/// Exponents of the mesh expansion of right-endpoint sums.
const EXPANSION_POWERS: [u32; 12] = [1, 2, 4, 6, 8, 10, 12, 14, 16, 18, 20, 22];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RefinementConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub k_min: usize,
    pub k_max: usize,
}

impl Default for RefinementConfig {
    fn default() -> Self {
        RefinementConfig {
            abs_tol: 1e-10,
            rel_tol: 1e-10,
            k_min: 16,
            k_max: 1 << 22,
        }
    }
}

impl RefinementConfig {
    pub fn with_tolerance(tol: f64) -> Self {
        RefinementConfig {
            abs_tol: tol,
            rel_tol: tol,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |t: f64| t.is_finite() && t > 0.0;
        if !positive(self.abs_tol) || !positive(self.rel_tol) {
            return Err(Error::InvalidConfig("tolerances must be positive".into()));
        }
        if self.k_min == 0 || self.k_min > self.k_max {
            return Err(Error::InvalidConfig(
                "need 1 <= k_min <= k_max".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegralResult {
    pub value: Complex,
    /// Final equipartition size per side.
    pub partitions_used: usize,
    /// Magnitude of the last refinement delta; heuristic, not certified.
    pub est_error: f64,
    /// False when k_max was reached before the tolerance was met; the best
    /// value is still returned.
    pub converged: bool,
}

/// Right-endpoint Cauchy sum of `f` over the segment for a given partition.
pub fn cauchy_sum(f: &FunctionSpec, seg: &Segment, partition: &Partition) -> Result<Complex> {
    let ts = partition.points();
    let mut prev = seg.point_at(ts[0]);
    let mut acc = Complex::new(0.0, 0.0);
    for &t in &ts[1..] {
        let cur = seg.point_at(t);
        acc = acc + f.eval(cur)? * (cur - prev);
        prev = cur;
    }
    Ok(acc)
}

/// Equipartition sum of function values (without the step factor), reusing
/// the sum at k to evaluate only the odd sample points at 2k.
fn refine_values<F>(f: &F, seg: &Segment, prev_sum: Complex, k2: usize) -> Result<Complex>
where
    F: Fn(Complex) -> Result<Complex> + ?Sized,
{
    // odd indices j of the 2k-point equipartition are the new samples
    let mut odd = Complex::new(0.0, 0.0);
    let denom = k2 as f64;
    let mut j = 1;
    while j < k2 {
        let t = j as f64 / denom;
        odd = odd + f(seg.point_at(t))?;
        j += 2;
    }
    Ok(prev_sum + odd)
}

fn initial_values<F>(f: &F, seg: &Segment, k: usize) -> Result<Complex>
where
    F: Fn(Complex) -> Result<Complex> + ?Sized,
{
    let mut acc = Complex::new(0.0, 0.0);
    for j in 1..=k {
        let t = j as f64 / k as f64;
        acc = acc + f(seg.point_at(t))?;
    }
    Ok(acc)
}

/// Doubling refinement of equipartition Cauchy sums with Richardson
/// extrapolation; stops when the accelerated sequence moves by less than
/// `abs_tol + rel_tol * |value|` between doublings.
pub(crate) fn refine_segment<F>(f: &F, seg: &Segment, cfg: &RefinementConfig) -> Result<IntegralResult>
where
    F: Fn(Complex) -> Result<Complex> + ?Sized,
{
    cfg.validate()?;
    let span = seg.b - seg.a;
    let mut k = cfg.k_min.max(1);
    let mut values = initial_values(f, seg, k)?;
    let mut rows: Vec<Vec<Complex>> = vec![vec![values * (1.0 / k as f64) * span]];
    let mut prev_diag = rows[0][0];
    let mut last_delta = f64::INFINITY;
    let mut level = 0usize;
    loop {
        if k.checked_mul(2).map(|kk| kk > cfg.k_max).unwrap_or(true) {
            return Ok(IntegralResult {
                value: prev_diag,
                partitions_used: k,
                est_error: if last_delta.is_finite() { last_delta } else { 0.0 },
                converged: false,
            });
        }
        k *= 2;
        level += 1;
        values = refine_values(f, seg, values, k)?;
        let mut row = vec![values * (1.0 / k as f64) * span];
        let prev_row = &rows[rows.len() - 1];
        let cols = (level).min(EXPANSION_POWERS.len()).min(prev_row.len());
        for j in 1..=cols {
            let factor = (1u64 << EXPANSION_POWERS[j - 1]) as f64 - 1.0;
            let improved = row[j - 1] + (row[j - 1] - prev_row[j - 1]) / factor;
            row.push(improved);
        }
        let diag = *row.last().unwrap();
        let delta = (diag - prev_diag).abs();
        let accept = level >= 2 && delta <= cfg.abs_tol + cfg.rel_tol * diag.abs();
        prev_diag = diag;
        last_delta = delta;
        rows.push(row);
        if rows.len() > 2 {
            rows.remove(0);
        }
        if accept {
            return Ok(IntegralResult {
                value: diag,
                partitions_used: k,
                est_error: delta,
                converged: true,
            });
        }
    }
}

pub(crate) fn refine_rectangle<F>(
    f: &F,
    rect: &Rectangle,
    cfg: &RefinementConfig,
) -> Result<IntegralResult>
where
    F: Fn(Complex) -> Result<Complex> + ?Sized,
{
    let mut value = Complex::new(0.0, 0.0);
    let mut est_error = 0.0;
    let mut partitions_used = 0;
    let mut converged = true;
    for side in rect.sides() {
        let r = refine_segment(f, &side, cfg)?;
        value = value + r.value;
        est_error += r.est_error;
        partitions_used = partitions_used.max(r.partitions_used);
        converged &= r.converged;
    }
    Ok(IntegralResult {
        value,
        partitions_used,
        est_error,
        converged,
    })
}

fn guard_segment(f: &FunctionSpec, seg: &Segment) -> Result<()> {
    for s in f.singularities() {
        if seg.distance_to(*s) < CONTOUR_GUARD {
            return Err(Error::SingularityOnContour(*s));
        }
    }
    Ok(())
}

fn guard_rectangle(f: &FunctionSpec, rect: &Rectangle) -> Result<()> {
    for side in rect.sides() {
        guard_segment(f, &side)?;
    }
    Ok(())
}

/// Integral of `f` over the segment as the limit of equipartition Cauchy
/// sums.
pub fn segment_integral(
    f: &FunctionSpec,
    seg: &Segment,
    cfg: &RefinementConfig,
) -> Result<IntegralResult> {
    guard_segment(f, seg)?;
    refine_segment(&|z| f.eval(z), seg, cfg)
}

/// Integral over the counter-clockwise rectangle boundary: the sum of the
/// four side integrals.
pub fn rectangle_integral(
    f: &FunctionSpec,
    rect: &Rectangle,
    cfg: &RefinementConfig,
) -> Result<IntegralResult> {
    guard_rectangle(f, rect)?;
    refine_rectangle(&|z| f.eval(z), rect, cfg)
}

/// The square with vertices +-1 +- i.
pub fn rho_square() -> Rectangle {
    Rectangle::new(-1.0, 1.0, -1.0, 1.0).expect("static rectangle")
}

/// The constant rho = integral of 1/z over the square with vertices
/// +-1 +- i; nonzero, with imaginary part at least 4 (the value is 2 pi i).
pub fn rho(cfg: &RefinementConfig) -> Result<Complex> {
    let f = FunctionSpec::parse("1/z").expect("static expression");
    let r = rectangle_integral(&f, &rho_square(), cfg)?;
    debug_assert!(r.value.im >= 4.0, "im(rho) = {} < 4", r.value.im);
    Ok(r.value)
}

type RhoCache = Mutex<HashMap<(u64, u64, usize, usize), Complex>>;

/// rho under the given config, computed once per distinct config.
pub(crate) fn rho_cached(cfg: &RefinementConfig) -> Result<Complex> {
    static CACHE: OnceLock<RhoCache> = OnceLock::new();
    let key = (
        cfg.abs_tol.to_bits(),
        cfg.rel_tol.to_bits(),
        cfg.k_min,
        cfg.k_max,
    );
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().unwrap().get(&key) {
        return Ok(*v);
    }
    let v = rho(cfg)?;
    cache.lock().unwrap().insert(key, v);
    Ok(v)
}

/// The integral functional on functions holomorphic off their declared
/// singularity set X: integrates over a rectangle whose interior contains
/// X (the bounding box of X inflated by margin 1; the origin-centered unit
/// square when X is empty). The value does not depend on the enclosure.
pub fn functional_integral(f: &FunctionSpec, cfg: &RefinementConfig) -> Result<IntegralResult> {
    let rect = enclosing_rectangle(f.singularities())?;
    rectangle_integral(f, &rect, cfg)
}

/// Default enclosure used by `functional_integral`.
pub fn enclosing_rectangle(singularities: &[Complex]) -> Result<Rectangle> {
    if singularities.is_empty() {
        return Rectangle::new(-0.5, 0.5, -0.5, 0.5);
    }
    let mut re_lo = f64::INFINITY;
    let mut re_hi = f64::NEG_INFINITY;
    let mut im_lo = f64::INFINITY;
    let mut im_hi = f64::NEG_INFINITY;
    for s in singularities {
        re_lo = re_lo.min(s.re);
        re_hi = re_hi.max(s.re);
        im_lo = im_lo.min(s.im);
        im_hi = im_hi.max(s.im);
    }
    Rectangle::new(re_lo - 1.0, re_hi + 1.0, im_lo - 1.0, im_hi + 1.0)
}

/// Quartering descent: starting from R, repeatedly selects the quarter
/// with the largest boundary-integral magnitude. Returns every rectangle
/// on the descent with its integral, the original rectangle first.
pub fn goursat_trace(
    f: &FunctionSpec,
    rect: &Rectangle,
    depth: u32,
    cfg: &RefinementConfig,
) -> Result<Vec<(Rectangle, Complex)>> {
    let mut out = Vec::with_capacity(depth as usize + 1);
    let mut cur = *rect;
    let r = rectangle_integral(f, &cur, cfg)?;
    out.push((cur, r.value));
    for _ in 0..depth {
        let mut best: Option<(Rectangle, Complex)> = None;
        for q in cur.quarters() {
            let v = rectangle_integral(f, &q, cfg)?.value;
            match &best {
                Some((_, bv)) if bv.abs() >= v.abs() => {}
                _ => best = Some((q, v)),
            }
        }
        let (q, v) = best.expect("four quarters");
        out.push((q, v));
        cur = q;
    }
    Ok(out)
}
