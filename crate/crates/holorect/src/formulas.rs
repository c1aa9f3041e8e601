//! Boundary-only reconstruction: the two Cauchy formulas, power-series
//! coefficients, and the empirical difference-quotient modulus.
//!
//! The normalizer rho is computed numerically under the same config as the
//! surrounding integral (and cached), not hard-coded to 2 pi i; the
//! acceptance suite separately checks that the two agree.

use rand::Rng;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::funcspec::FunctionSpec;
use crate::geometry::Rectangle;
use crate::integrate::{refine_rectangle, rho_cached, IntegralResult, RefinementConfig};

/// Minimum distance between the evaluation point and the rectangle
/// boundary; the integrand grows like 1/dist^2 and the quadrature budget
/// is calibrated to this floor.
pub const INTERIOR_DISTANCE_FLOOR: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct SeriesResult {
    /// Coefficients a_0 ..= a_N.
    pub coeffs: Vec<Complex>,
    /// Distance from 0 to the boundary of the integration rectangle.
    pub radius_hint: f64,
}

fn check_point_in_interior(rect: &Rectangle, a: Complex) -> Result<()> {
    if !rect.interior_contains(a) || rect.boundary_distance(a) < INTERIOR_DISTANCE_FLOOR {
        return Err(Error::PointTooCloseToBoundary(a));
    }
    Ok(())
}

fn check_entire_on(f: &FunctionSpec, rect: &Rectangle) -> Result<()> {
    for s in f.singularities() {
        if rect.contains(*s) {
            return Err(Error::SingularityInsideContour(*s));
        }
    }
    Ok(())
}

/// f(a) recovered from boundary samples only: (1/rho) * integral of
/// f(z)/(z-a) over the rectangle boundary.
pub fn cauchy_value(
    f: &FunctionSpec,
    a: Complex,
    rect: &Rectangle,
    cfg: &RefinementConfig,
) -> Result<Complex> {
    check_point_in_interior(rect, a)?;
    check_entire_on(f, rect)?;
    let rho = rho_cached(cfg)?;
    let r = refine_rectangle(&|z| Ok(f.eval(z)? / (z - a)), rect, cfg)?;
    Ok(r.value / rho)
}

/// f'(a) from boundary samples: (1/rho) * integral of f(z)/(z-a)^2.
pub fn cauchy_derivative(
    f: &FunctionSpec,
    a: Complex,
    rect: &Rectangle,
    cfg: &RefinementConfig,
) -> Result<Complex> {
    check_point_in_interior(rect, a)?;
    check_entire_on(f, rect)?;
    let rho = rho_cached(cfg)?;
    let r = refine_rectangle(
        &|z| {
            let d = z - a;
            Ok(f.eval(z)? / (d * d))
        },
        rect,
        cfg,
    )?;
    Ok(r.value / rho)
}

/// Power-series coefficients a_n = (1/rho) * integral of f(z)/z^(n+1) for
/// n = 0..=order, integrating over a rectangle with 0 in its interior.
pub fn series_coefficients(
    f: &FunctionSpec,
    order: usize,
    rect: &Rectangle,
    cfg: &RefinementConfig,
) -> Result<SeriesResult> {
    let origin = Complex::new(0.0, 0.0);
    check_point_in_interior(rect, origin)?;
    check_entire_on(f, rect)?;
    let rho = rho_cached(cfg)?;
    let mut coeffs = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let r: IntegralResult = refine_rectangle(
            &|z| Ok(f.eval(z)? / z.powu(n as u32 + 1)),
            rect,
            cfg,
        )?;
        coeffs.push(r.value / rho);
    }
    Ok(SeriesResult {
        coeffs,
        radius_hint: rect.boundary_distance(origin),
    })
}

/// Empirical modulus of the difference-quotient approximation: the max
/// over sampled pairs z, x in `window` with |z-x| < delta of
/// |f'(z) - (f(z)-f(x))/(z-x)|, with f' supplied by `cauchy_derivative`
/// over the enclosure. Shrinks with delta for holomorphic f.
pub fn derivative_continuity_modulus<R: Rng>(
    f: &FunctionSpec,
    window: &Rectangle,
    enclosure: &Rectangle,
    delta: f64,
    samples: usize,
    cfg: &RefinementConfig,
    rng: &mut R,
) -> Result<f64> {
    if !delta.is_finite() || delta <= 0.0 {
        return Err(Error::InvalidConfig("delta must be positive".into()));
    }
    for corner in window.vertices() {
        if !enclosure.interior_contains(corner) {
            return Err(Error::PointTooCloseToBoundary(corner));
        }
    }
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let z = Complex::new(
            rng.gen_range(window.re_lo()..window.re_hi()),
            rng.gen_range(window.im_lo()..window.im_hi()),
        );
        // draw x near z, inside the window and distinct from z
        let x = loop {
            let angle = rng.gen_range(0.0..std::f64::consts::TAU);
            let radius = rng.gen_range(0.0..delta);
            let cand = z + Complex::new(angle.cos(), angle.sin()) * radius;
            if window.contains(cand) && cand != z {
                break cand;
            }
        };
        let deriv = cauchy_derivative(f, z, enclosure, cfg)?;
        let quotient = (f.eval(z)? - f.eval(x)?) / (z - x);
        worst = worst.max((deriv - quotient).abs());
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::ZERO;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn assert_close(v: Complex, want: Complex, tol: f64) {
        assert!(
            (v - want).abs() <= tol,
            "value {v} differs from {want} by {} > {tol}",
            (v - want).abs()
        );
    }

    #[test]
    fn value_of_exp_at_origin() {
        let f = FunctionSpec::parse("exp(z)").unwrap();
        let rect = Rectangle::new(-1.0, 1.0, -1.0, 1.0).unwrap();
        let v = cauchy_value(&f, ZERO, &rect, &RefinementConfig::default()).unwrap();
        assert_close(v, Complex::from(1.0), 1e-7);
    }

    #[test]
    fn value_of_square_at_interior_point() {
        let f = FunctionSpec::parse("z^2").unwrap();
        let rect = Rectangle::new(-2.0, 2.0, -2.0, 2.0).unwrap();
        let a = Complex::new(1.0, 1.0);
        let v = cauchy_value(&f, a, &rect, &RefinementConfig::default()).unwrap();
        assert_close(v, Complex::new(0.0, 2.0), 1e-7);
    }

    #[test]
    fn value_of_constant_anywhere() {
        let f = FunctionSpec::parse("(3-2*i)").unwrap();
        let rect = Rectangle::new(-1.0, 2.0, -1.5, 0.5).unwrap();
        for a in [Complex::new(0.0, -0.5), Complex::new(1.3, 0.2)] {
            let v = cauchy_value(&f, a, &rect, &RefinementConfig::default()).unwrap();
            assert_close(v, Complex::new(3.0, -2.0), 1e-7);
        }
    }

    #[test]
    fn derivative_of_exp_at_origin() {
        let f = FunctionSpec::parse("exp(z)").unwrap();
        let rect = Rectangle::new(-1.0, 1.0, -1.0, 1.0).unwrap();
        let v = cauchy_derivative(&f, ZERO, &rect, &RefinementConfig::default()).unwrap();
        assert_close(v, Complex::from(1.0), 1e-7);
    }

    #[test]
    fn derivative_of_cube() {
        let f = FunctionSpec::parse("z^3").unwrap();
        let rect = Rectangle::new(-3.0, 3.0, -3.0, 3.0).unwrap();
        let v = cauchy_derivative(&f, Complex::from(2.0), &rect, &RefinementConfig::default())
            .unwrap();
        assert_close(v, Complex::from(12.0), 1e-6);
    }

    #[test]
    fn derivative_of_constant_is_zero() {
        let f = FunctionSpec::parse("7").unwrap();
        let rect = Rectangle::new(-1.0, 1.0, -1.0, 1.0).unwrap();
        let v = cauchy_derivative(&f, Complex::new(0.2, -0.3), &rect, &RefinementConfig::default())
            .unwrap();
        assert!(v.abs() <= 1e-7);
    }

    #[test]
    fn preconditions_are_enforced() {
        let f = FunctionSpec::parse("exp(z)").unwrap();
        let rect = Rectangle::new(-1.0, 1.0, -1.0, 1.0).unwrap();
        let near_edge = Complex::new(1.0 - 1e-9, 0.0);
        assert_eq!(
            cauchy_value(&f, near_edge, &rect, &RefinementConfig::default())
                .unwrap_err()
                .code(),
            "E_POINT_TOO_CLOSE_TO_BOUNDARY"
        );
        let g = FunctionSpec::parse("1/(z-0.5)").unwrap();
        assert_eq!(
            cauchy_value(&g, ZERO, &rect, &RefinementConfig::default())
                .unwrap_err()
                .code(),
            "E_SINGULARITY_INSIDE_CONTOUR"
        );
    }

    #[test]
    fn series_of_exp_matches_reciprocal_factorials() {
        let f = FunctionSpec::parse("exp(z)").unwrap();
        let rect = Rectangle::new(-1.0, 1.0, -1.0, 1.0).unwrap();
        let s = series_coefficients(&f, 5, &rect, &RefinementConfig::default()).unwrap();
        let mut factorial = 1.0;
        for (n, c) in s.coeffs.iter().enumerate() {
            if n > 0 {
                factorial *= n as f64;
            }
            assert_close(*c, Complex::from(1.0 / factorial), 1e-6);
        }
        assert!((s.radius_hint - 1.0).abs() < 1e-15);
    }

    #[test]
    fn series_of_polynomial_reads_off_coefficients() {
        let f = FunctionSpec::parse("z^2 - 3").unwrap();
        let rect = Rectangle::new(-1.5, 1.5, -1.5, 1.5).unwrap();
        let s = series_coefficients(&f, 3, &rect, &RefinementConfig::default()).unwrap();
        let want = [-3.0, 0.0, 1.0, 0.0];
        for (c, w) in s.coeffs.iter().zip(want) {
            assert_close(*c, Complex::from(w), 1e-7);
        }
    }

    #[test]
    fn partial_sums_converge_inside_half_radius() {
        let f = FunctionSpec::parse("exp(z)").unwrap();
        let rect = Rectangle::new(-2.0, 2.0, -2.0, 2.0).unwrap();
        let s = series_coefficients(&f, 12, &rect, &RefinementConfig::default()).unwrap();
        let a = Complex::new(0.4, -0.3); // |a| < radius_hint / 2
        assert!(a.abs() < s.radius_hint / 2.0);
        let truth = f.eval(a).unwrap();
        let mut partial = ZERO;
        let mut prev_gap = f64::INFINITY;
        for (n, c) in s.coeffs.iter().enumerate() {
            partial = partial + *c * a.powu(n as u32);
            if n >= 2 && n % 2 == 0 {
                let gap = (partial - truth).abs();
                assert!(gap <= prev_gap);
                prev_gap = gap;
            }
        }
        assert!(prev_gap <= 1e-7);
    }

    #[test]
    fn series_beyond_polynomial_degree_vanishes() {
        let f = FunctionSpec::parse("z^3 - 2*z + 1").unwrap();
        let rect = Rectangle::new(-1.0, 1.0, -1.0, 1.0).unwrap();
        let s = series_coefficients(&f, 8, &rect, &RefinementConfig::default()).unwrap();
        for c in &s.coeffs[4..] {
            assert!(c.abs() <= 1e-8, "|a_n| = {}", c.abs());
        }
    }

    #[test]
    fn value_agrees_across_enclosures() {
        let f = FunctionSpec::parse("sin(z)*exp(z)").unwrap();
        let a = Complex::new(0.3, -0.2);
        let cfg = RefinementConfig::default();
        let v1 = cauchy_value(&f, a, &Rectangle::new(-1.0, 1.0, -1.0, 1.0).unwrap(), &cfg)
            .unwrap();
        let v2 = cauchy_value(&f, a, &Rectangle::new(-2.5, 1.4, -0.9, 2.0).unwrap(), &cfg)
            .unwrap();
        assert_close(v1, v2, 1e-7);
        assert_close(v1, f.eval(a).unwrap(), 1e-7);
    }

    #[test]
    fn modulus_vanishes_for_linear_functions() {
        let f = FunctionSpec::parse("(2+i)*z - 3").unwrap();
        let window = Rectangle::new(-0.5, 0.5, -0.5, 0.5).unwrap();
        let enclosure = Rectangle::new(-2.0, 2.0, -2.0, 2.0).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let m = derivative_continuity_modulus(
            &f,
            &window,
            &enclosure,
            0.1,
            25,
            &RefinementConfig::default(),
            &mut rng,
        )
        .unwrap();
        assert!(m <= 1e-7, "modulus {m}");
    }

    #[test]
    fn modulus_shrinks_with_delta_for_exp() {
        let f = FunctionSpec::parse("exp(z)").unwrap();
        let window = Rectangle::new(-0.5, 0.5, -0.5, 0.5).unwrap();
        let enclosure = Rectangle::new(-2.0, 2.0, -2.0, 2.0).unwrap();
        let cfg = RefinementConfig::default();
        // second symbolic derivative bounds the Taylor remainder
        let f2 = f.differentiate().differentiate();
        let mut max_f2: f64 = 0.0;
        for i in 0..=20 {
            for j in 0..=20 {
                let z = Complex::new(-0.5 + i as f64 / 20.0, -0.5 + j as f64 / 20.0);
                max_f2 = max_f2.max(f2.eval(z).unwrap().abs());
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let mut prev = f64::INFINITY;
        for delta in [0.1, 0.05, 0.025] {
            let m = derivative_continuity_modulus(
                &f, &window, &enclosure, delta, 15, &cfg, &mut rng,
            )
            .unwrap();
            assert!(m <= max_f2 * delta + 1e-6, "delta {delta}: modulus {m}");
            assert!(m <= prev + 2e-8);
            prev = m;
        }
    }
}
