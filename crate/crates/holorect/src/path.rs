//! Loops: continuous maps from [0,1] into the plane with equal endpoints,
//! plus the loop combinators (product, reversal, cyclic start shift).

use std::sync::Arc;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::funcspec::FunctionSpec;

/// Closure tolerance for user-supplied curves; combinators close exactly.
pub const LOOP_CLOSURE_TOL: f64 = 1e-12;

type Curve = Arc<dyn Fn(f64) -> Result<Complex> + Send + Sync>;

/// An evaluable loop. Evaluation may fail (a loop built from an expression
/// can run into a declared singularity or overflow), and the failure
/// propagates out of whatever winding computation sampled it.
#[derive(Clone)]
pub struct LoopPath {
    curve: Curve,
}

impl LoopPath {
    /// Wraps a user curve, checking `curve(0) = curve(1)` to within 1e-12.
    pub fn from_fn<F>(curve: F) -> Result<Self>
    where
        F: Fn(f64) -> Result<Complex> + Send + Sync + 'static,
    {
        let start = curve(0.0)?;
        let end = curve(1.0)?;
        if (start - end).abs() > LOOP_CLOSURE_TOL {
            return Err(Error::LoopNotClosed { start, end });
        }
        Ok(LoopPath {
            curve: Arc::new(curve),
        })
    }

    pub(crate) fn from_fn_unchecked<F>(curve: F) -> Self
    where
        F: Fn(f64) -> Result<Complex> + Send + Sync + 'static,
    {
        LoopPath {
            curve: Arc::new(curve),
        }
    }

    pub fn constant(c: Complex) -> Self {
        LoopPath::from_fn_unchecked(move |_| Ok(c))
    }

    /// Loop given by an expression in the parameter (variable evaluated at
    /// the real point t). Checks closure like `from_fn`.
    pub fn from_function_spec(f: &FunctionSpec) -> Result<Self> {
        let f = f.clone();
        LoopPath::from_fn(move |t| f.eval(Complex::new(t, 0.0)))
    }

    pub fn at(&self, t: f64) -> Result<Complex> {
        (self.curve)(t)
    }

    /// Concatenation: runs `self` on [0,1/2] and `g` on [1/2,1].
    pub fn product(&self, g: &LoopPath) -> Result<LoopPath> {
        let left = self.at(1.0)?;
        let right = g.at(0.0)?;
        if (left - right).abs() > LOOP_CLOSURE_TOL {
            return Err(Error::EndpointMismatch { left, right });
        }
        let f = self.clone();
        let g = g.clone();
        Ok(LoopPath::from_fn_unchecked(move |t| {
            if t <= 0.5 {
                f.at(2.0 * t)
            } else {
                g.at(2.0 * t - 1.0)
            }
        }))
    }

    /// Time reversal t -> 1 - t.
    pub fn reverse(&self) -> LoopPath {
        let f = self.clone();
        LoopPath::from_fn_unchecked(move |t| f.at(1.0 - t))
    }

    /// Cyclic start shift t -> f(s + t mod 1).
    pub fn shift(&self, s: f64) -> LoopPath {
        let f = self.clone();
        LoopPath::from_fn_unchecked(move |t| {
            let mut u = (s + t).rem_euclid(1.0);
            // keep t = 1 sampling the loop's own endpoint when s is integral
            if u == 0.0 && t == 1.0 {
                u = 1.0;
            }
            f.at(u)
        })
    }

    /// Image of the loop under a pointwise map, e.g. f composed with a
    /// rectangle circuit.
    pub fn map<F>(&self, f: F) -> LoopPath
    where
        F: Fn(Complex) -> Result<Complex> + Send + Sync + 'static,
    {
        let base = self.clone();
        LoopPath::from_fn_unchecked(move |t| f(base.at(t)?))
    }
}

impl std::fmt::Debug for LoopPath {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LoopPath").finish_non_exhaustive()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn open_curve_is_rejected() {
        let err = LoopPath::from_fn(|t| Ok(Complex::new(t, 0.0))).unwrap_err();
        assert_eq!(err.code(), "E_LOOP_NOT_CLOSED");
    }

    #[test]
    fn product_schedule_matches_definition() {
        let f = LoopPath::constant(Complex::new(2.0, 0.0));
        let g = LoopPath::constant(Complex::new(2.0, 0.0));
        let h = f.product(&g).unwrap();
        assert_eq!(h.at(0.25).unwrap(), Complex::new(2.0, 0.0));
        assert_eq!(h.at(0.75).unwrap(), Complex::new(2.0, 0.0));
    }

    #[test]
    fn product_endpoint_mismatch() {
        let f = LoopPath::constant(Complex::new(2.0, 0.0));
        let g = LoopPath::constant(Complex::new(3.0, 0.0));
        assert_eq!(f.product(&g).unwrap_err().code(), "E_ENDPOINT_MISMATCH");
    }

    #[test]
    fn reverse_and_shift_preserve_closure() {
        let f = LoopPath::from_fn(|t| {
            let a = 2.0 * std::f64::consts::PI * t;
            Ok(Complex::new(a.cos(), a.sin()))
        })
        .unwrap();
        let r = f.reverse();
        assert!((r.at(0.0).unwrap() - f.at(1.0).unwrap()).abs() < 1e-15);
        let s = f.shift(0.25);
        assert!((s.at(0.0).unwrap() - f.at(0.25).unwrap()).abs() < 1e-15);
        assert!((s.at(1.0).unwrap() - s.at(0.0).unwrap()).abs() < 1e-12);
    }
}
