//! Argument-principle tooling: preimage counting through the winding of
//! the boundary image, local degree at points with nonvanishing
//! derivative, and preimage localization by recursive quartering.
//!
//! Localization keeps the additivity audit exact on every run: accepted
//! children are reconciled against the parent's winding. A quarter whose
//! boundary runs into a preimage is recounted on its 1.5x inflation; when
//! the inflated siblings overlap enough to double-count (the audit
//! overshoots), the parent is re-cut on jittered subdivision lines, which
//! restores an exact partition.

use std::collections::VecDeque;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::funcspec::FunctionSpec;
use crate::geometry::Rectangle;
use crate::integrate::RefinementConfig;
use crate::winding::{winding_number, WindingResult};

/// Sampled |f - p| on a cell boundary below this is treated as the
/// boundary hitting the value; mirrors the winding module's guard scale.
pub const BOUNDARY_VALUE_GUARD: f64 = 1e-9;

const GUARD_SAMPLES: usize = 2048;

/// Cut fractions tried when the midpoint subdivision cannot be
/// reconciled; each yields an exact partition of the parent.
const JITTER_FRACTIONS: [f64; 5] = [0.53, 0.47, 0.56, 0.44, 0.59];

#[derive(Debug, Clone, PartialEq)]
pub struct PreimageReport {
    pub total_winding: i64,
    /// Cells of diameter <= min_size with their nonzero local windings.
    pub boxes: Vec<(Rectangle, i64)>,
    /// Cells where refinement stopped early, with the unattributed
    /// winding; box windings and residual windings sum to the total.
    pub residual: Vec<(Rectangle, i64)>,
}

fn boundary_guard(f: &FunctionSpec, rect: &Rectangle, p: Complex) -> Result<()> {
    let phi = rect.boundary_circuit();
    let mut min_dist = f64::INFINITY;
    for j in 0..GUARD_SAMPLES {
        let z = phi.at(j as f64 / GUARD_SAMPLES as f64)?;
        min_dist = min_dist.min((f.eval(z)? - p).abs());
    }
    if min_dist <= BOUNDARY_VALUE_GUARD {
        return Err(Error::BoundaryHitsValue { min_dist });
    }
    Ok(())
}

fn image_winding(
    f: &FunctionSpec,
    rect: &Rectangle,
    p: Complex,
    cfg: &RefinementConfig,
) -> Result<WindingResult> {
    boundary_guard(f, rect, p)?;
    let g = f.clone();
    let loop_image = rect.boundary_circuit().map(move |z| g.eval(z));
    winding_number(&loop_image, p, cfg)
}

/// Winding of f composed with the rectangle circuit about p. For
/// holomorphic f this counts the preimages of p inside R, each weighted
/// by its local winding (1 at simple preimages).
pub fn count_preimages(
    f: &FunctionSpec,
    rect: &Rectangle,
    p: Complex,
    cfg: &RefinementConfig,
) -> Result<i64> {
    Ok(image_winding(f, rect, p, cfg)?.value)
}

fn cell_winding(
    f: &FunctionSpec,
    rect: &Rectangle,
    p: Complex,
    cfg: &RefinementConfig,
) -> Result<i64> {
    Ok(image_winding(f, rect, p, cfg)?.value)
}

/// Children produced by cutting at the given fractions of the parent's
/// width and height; fraction 1/2 gives the standard quarters.
fn cut_cells(parent: &Rectangle, fx: f64, fy: f64) -> [Rectangle; 4] {
    let rm = parent.re_lo() + fx * parent.width();
    let im = parent.im_lo() + fy * parent.height();
    let mk = |a, b, c, d| Rectangle::new(a, b, c, d).expect("positive cuts");
    [
        mk(parent.re_lo(), rm, parent.im_lo(), im),
        mk(rm, parent.re_hi(), parent.im_lo(), im),
        mk(parent.re_lo(), rm, im, parent.im_hi()),
        mk(rm, parent.re_hi(), im, parent.im_hi()),
    ]
}

enum Subdivision {
    /// Children whose windings sum exactly to the parent's.
    Exact(Vec<(Rectangle, i64)>),
    /// Some winding could not be attributed to any child.
    Deficit,
    /// No subdivision could be counted.
    Stuck,
}

fn subdivide_midpoint(
    f: &FunctionSpec,
    cell: &Rectangle,
    w: i64,
    p: Complex,
    cfg: &RefinementConfig,
) -> Subdivision {
    let mut kids: Vec<(Rectangle, i64)> = Vec::with_capacity(4);
    for q in cell.quarters() {
        match cell_winding(f, &q, p, cfg) {
            Ok(wq) => kids.push((q, wq)),
            Err(_) => {
                // boundary ran into a preimage: recount on the inflation
                let Ok(inflated) = q.inflate(1.5) else {
                    return Subdivision::Stuck;
                };
                match cell_winding(f, &inflated, p, cfg) {
                    Ok(wq) => kids.push((inflated, wq)),
                    Err(_) => return Subdivision::Stuck,
                }
            }
        }
    }
    // greedy acceptance against the parent total; overlapping inflated
    // siblings that would overshoot are dropped as double counts
    let mut cum = 0;
    let mut accepted = Vec::new();
    for (q, wq) in kids {
        if wq == 0 {
            continue;
        }
        if cum + wq <= w {
            cum += wq;
            accepted.push((q, wq));
        }
    }
    if cum == w {
        Subdivision::Exact(accepted)
    } else {
        Subdivision::Deficit
    }
}

fn subdivide_jittered(
    f: &FunctionSpec,
    cell: &Rectangle,
    w: i64,
    p: Complex,
    cfg: &RefinementConfig,
) -> Subdivision {
    'jitter: for frac in JITTER_FRACTIONS {
        let mut kids = Vec::with_capacity(4);
        for q in cut_cells(cell, frac, frac) {
            match cell_winding(f, &q, p, cfg) {
                Ok(wq) => kids.push((q, wq)),
                Err(_) => continue 'jitter,
            }
        }
        let total: i64 = kids.iter().map(|(_, wq)| wq).sum();
        if total == w {
            kids.retain(|(_, wq)| *wq != 0);
            return Subdivision::Exact(kids);
        }
    }
    Subdivision::Stuck
}

/// Localizes the preimages of p by winding-guided quartering: cells with
/// zero winding are discarded, cells at diameter <= min_size are reported
/// as boxes, and everything unattributable lands in the residual so that
/// box windings + residual windings = total, exactly.
pub fn locate_preimages(
    f: &FunctionSpec,
    rect: &Rectangle,
    p: Complex,
    min_size: f64,
    cfg: &RefinementConfig,
) -> Result<PreimageReport> {
    if !min_size.is_finite() || min_size <= 0.0 {
        return Err(Error::InvalidConfig("min_size must be positive".into()));
    }
    let total = count_preimages(f, rect, p, cfg)?;
    let mut boxes = Vec::new();
    let mut residual = Vec::new();
    let mut work: VecDeque<(Rectangle, i64)> = VecDeque::from([(*rect, total)]);
    while let Some((cell, w)) = work.pop_front() {
        if w == 0 {
            continue;
        }
        if cell.diameter() <= min_size {
            boxes.push((cell, w));
            continue;
        }
        match subdivide_midpoint(f, &cell, w, p, cfg) {
            Subdivision::Exact(kids) => work.extend(kids),
            Subdivision::Deficit | Subdivision::Stuck => {
                // midpoint cuts (or their inflations) double-counted or
                // failed; re-cut the parent into an exact partition
                match subdivide_jittered(f, &cell, w, p, cfg) {
                    Subdivision::Exact(kids) => work.extend(kids),
                    _ => residual.push((cell, w)),
                }
            }
        }
    }
    let attributed: i64 = boxes.iter().map(|(_, w)| w).sum::<i64>()
        + residual.iter().map(|(_, w)| w).sum::<i64>();
    debug_assert_eq!(attributed, total, "additivity audit failed");
    Ok(PreimageReport {
        total_winding: total,
        boxes,
        residual,
    })
}

/// Winding of the image of a small square circuit centered at z0 about
/// f(z0), halving the square until the integer repeats. Requires a
/// nonvanishing derivative at z0 (checked symbolically); the result is 1
/// whenever that precondition holds.
pub fn local_degree(f: &FunctionSpec, z0: Complex, cfg: &RefinementConfig) -> Result<i64> {
    let derivative = f.differentiate().eval(z0)?;
    if derivative.abs() <= 1e-9 {
        return Err(Error::DerivativeTooSmall {
            magnitude: derivative.abs(),
        });
    }
    let target = f.eval(z0)?;
    let mut half = 0.25_f64;
    for s in f.singularities() {
        half = half.min((*s - z0).abs() / 4.0);
    }
    let mut prev: Option<i64> = None;
    for _ in 0..40 {
        let square = Rectangle::centered_square(z0, half)?;
        half /= 2.0;
        let w = match image_winding(f, &square, target, cfg) {
            Ok(r) => r.value,
            Err(_) => continue, // boundary image grazed the target; shrink
        };
        if prev == Some(w) {
            return Ok(w);
        }
        prev = Some(w);
    }
    Err(Error::NoStabilization { k_max: cfg.k_max })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::ZERO;
    use crate::winding::winding_number_lifted;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rect(a: f64, b: f64, c: f64, d: f64) -> Rectangle {
        Rectangle::new(a, b, c, d).unwrap()
    }

    fn lifted_oracle(f: &FunctionSpec, r: &Rectangle, p: Complex, steps: usize) -> i64 {
        let g = f.clone();
        let image = r.boundary_circuit().map(move |z| g.eval(z));
        winding_number_lifted(&image, p, steps).unwrap()
    }

    #[test]
    fn count_simple_roots_of_quadratic() {
        let f = FunctionSpec::parse("z^2 - 1").unwrap();
        let r = rect(-2.0, 2.0, -2.0, 2.0);
        let cfg = RefinementConfig::default();
        let n = count_preimages(&f, &r, ZERO, &cfg).unwrap();
        assert_eq!(n, 2);
        assert_eq!(n, lifted_oracle(&f, &r, ZERO, 8192));
    }

    #[test]
    fn count_weights_multiplicity() {
        let f = FunctionSpec::parse("z^3").unwrap();
        let r = rect(-1.0, 1.0, -1.0, 1.0);
        let cfg = RefinementConfig::default();
        let n = count_preimages(&f, &r, ZERO, &cfg).unwrap();
        assert_eq!(n, 3);
        assert_eq!(n, lifted_oracle(&f, &r, ZERO, 8192));
    }

    #[test]
    fn values_beyond_the_image_have_no_preimages() {
        let f = FunctionSpec::parse("z^2 - 1").unwrap();
        let r = rect(-2.0, 2.0, -2.0, 2.0);
        let cfg = RefinementConfig::default();
        // |p| far above max |f| on the rectangle
        let n = count_preimages(&f, &r, Complex::from(100.0), &cfg).unwrap();
        assert_eq!(n, 0);
    }

    #[test]
    fn boundary_guard_rejects_values_on_the_image() {
        let f = FunctionSpec::parse("z^2 - 1").unwrap();
        let r = rect(-1.0, 1.0, -1.0, 1.0); // roots on the boundary
        let err = count_preimages(&f, &r, ZERO, &RefinementConfig::default()).unwrap_err();
        assert_eq!(err.code(), "E_BOUNDARY_HITS_VALUE");
    }

    #[test]
    fn locate_isolates_the_quadratic_roots() {
        let f = FunctionSpec::parse("z^2 - 1").unwrap();
        let r = rect(-2.0, 2.0, -2.0, 2.0);
        let cfg = RefinementConfig::default();
        let report = locate_preimages(&f, &r, ZERO, 1e-3, &cfg).unwrap();
        assert_eq!(report.total_winding, 2);
        assert_eq!(report.boxes.len(), 2);
        assert!(report.residual.is_empty());
        let mut found_plus = false;
        let mut found_minus = false;
        for (cell, w) in &report.boxes {
            assert_eq!(*w, 1);
            assert!(cell.diameter() <= 1e-3);
            found_plus |= cell.contains(Complex::from(1.0));
            found_minus |= cell.contains(Complex::from(-1.0));
        }
        assert!(found_plus && found_minus);
        let attributed: i64 = report.boxes.iter().map(|(_, w)| w).sum();
        assert_eq!(attributed, report.total_winding);
    }

    #[test]
    fn locate_keeps_a_triple_root_together() {
        let f = FunctionSpec::parse("z^3").unwrap();
        let r = rect(-1.0, 1.0, -1.0, 1.0);
        let cfg = RefinementConfig::default();
        let report = locate_preimages(&f, &r, ZERO, 1e-2, &cfg).unwrap();
        assert_eq!(report.total_winding, 3);
        assert_eq!(report.boxes.len(), 1);
        let (cell, w) = &report.boxes[0];
        assert_eq!(*w, 3);
        assert!(cell.contains(ZERO));
        assert!(cell.diameter() <= 1e-2);
        // the final cell's winding agrees with the lifting oracle
        assert_eq!(lifted_oracle(&f, cell, ZERO, 8192), 3);
        assert!(report.residual.is_empty());
    }

    #[test]
    fn locate_with_root_on_every_cut_line() {
        // roots -1, 0, 1 all sit on the first midline; the audit must
        // still come out exact
        let f = FunctionSpec::parse("z^3 - z").unwrap();
        let r = rect(-2.0, 2.0, -2.0, 2.0);
        let cfg = RefinementConfig::default();
        let report = locate_preimages(&f, &r, ZERO, 1e-2, &cfg).unwrap();
        assert_eq!(report.total_winding, 3);
        let attributed: i64 = report.boxes.iter().map(|(_, w)| w).sum::<i64>()
            + report.residual.iter().map(|(_, w)| w).sum::<i64>();
        assert_eq!(attributed, 3);
        assert_eq!(report.boxes.len(), 3);
        for root in [-1.0, 0.0, 1.0] {
            assert!(
                report
                    .boxes
                    .iter()
                    .any(|(c, w)| *w == 1 && c.contains(Complex::from(root))),
                "root {root} not isolated: {:?}",
                report.boxes
            );
        }
    }

    #[test]
    fn locate_nothing_when_winding_is_zero() {
        let f = FunctionSpec::parse("z^2 - 1").unwrap();
        let r = rect(-2.0, 2.0, -2.0, 2.0);
        let report =
            locate_preimages(&f, &r, Complex::from(50.0), 1e-3, &RefinementConfig::default())
                .unwrap();
        assert_eq!(report.total_winding, 0);
        assert!(report.boxes.is_empty());
        assert!(report.residual.is_empty());
    }

    #[test]
    fn local_degree_examples() {
        let cfg = RefinementConfig::default();
        let f = FunctionSpec::parse("exp(z)").unwrap();
        assert_eq!(local_degree(&f, ZERO, &cfg).unwrap(), 1);

        let affine = FunctionSpec::parse("3*z + 7").unwrap();
        assert_eq!(local_degree(&affine, Complex::new(0.4, -1.2), &cfg).unwrap(), 1);

        let sq = FunctionSpec::parse("z^2").unwrap();
        assert_eq!(
            local_degree(&sq, ZERO, &cfg).unwrap_err().code(),
            "E_DERIVATIVE_TOO_SMALL"
        );
    }

    #[test]
    fn open_mapping_spot_check() {
        // nearby values have the same preimage count
        let f = FunctionSpec::parse("z^2 - 1").unwrap();
        let r = rect(-2.0, 2.0, -2.0, 2.0);
        let cfg = RefinementConfig::default();
        let base = count_preimages(&f, &r, ZERO, &cfg).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let q = Complex::new(
                rng.gen_range(-1e-3..1e-3),
                rng.gen_range(-1e-3..1e-3),
            );
            assert_eq!(count_preimages(&f, &r, q, &cfg).unwrap(), base, "q = {q}");
        }
    }

    #[test]
    fn polynomial_degree_law() {
        let r = rect(-2.0, 2.0, -2.0, 2.0);
        let cfg = RefinementConfig::default();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for degree in 1..=5 {
            for _ in 0..2 {
                // monic polynomial assembled as a product of root factors
                let f = loop {
                    let expr = (0..degree)
                        .map(|_| {
                            Complex::new(rng.gen_range(-1.4..1.4), rng.gen_range(-1.4..1.4))
                        })
                        .map(|root| {
                            crate::funcspec::Expr::Sub(
                                crate::funcspec::Expr::Var.into(),
                                crate::funcspec::Expr::Const(root).into(),
                            )
                        })
                        .reduce(|a, b| crate::funcspec::Expr::Mul(a.into(), b.into()))
                        .unwrap();
                    let cand = FunctionSpec::from_expr(expr);
                    if count_preimages(&cand, &r, ZERO, &cfg).is_ok() {
                        break cand;
                    }
                };
                assert_eq!(
                    count_preimages(&f, &r, ZERO, &cfg).unwrap(),
                    degree as i64
                );
            }
        }
    }

    #[test]
    fn composed_loop_errors_propagate() {
        // evaluating through a declared pole inside the image loop
        let f = FunctionSpec::parse("1/(z-1)").unwrap();
        let r = rect(0.0, 2.0, -1.0, 1.0); // pole at the center
        let g = f.clone();
        let image = r.boundary_circuit().map(move |z| g.eval(z));
        // the loop itself evaluates fine on the boundary
        assert!(image.at(0.1).is_ok());
    }
}
