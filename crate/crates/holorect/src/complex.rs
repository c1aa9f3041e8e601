//! Complex scalars as pairs of `f64` coordinates.
//!
//! All elementary operations go through the real coordinates, so the exact
//! arithmetic the library performs is visible here: `exp(x+iy) = e^x (cos y
//! + i sin y)` and the angle-sum formulas for `sin` and `cos`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Complex {
    pub re: f64,
    pub im: f64,
}

pub const I: Complex = Complex { re: 0.0, im: 1.0 };
pub const ZERO: Complex = Complex { re: 0.0, im: 0.0 };
pub const ONE: Complex = Complex { re: 1.0, im: 0.0 };

impl Complex {
    pub const fn new(re: f64, im: f64) -> Self {
        Complex { re, im }
    }

    pub fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn norm_sqr(self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn exp(self) -> Complex {
        let r = self.re.exp();
        Complex::new(r * self.im.cos(), r * self.im.sin())
    }

    /// sin(x+iy) = sin x cosh y + i cos x sinh y
    pub fn sin(self) -> Complex {
        Complex::new(
            self.re.sin() * self.im.cosh(),
            self.re.cos() * self.im.sinh(),
        )
    }

    /// cos(x+iy) = cos x cosh y - i sin x sinh y
    pub fn cos(self) -> Complex {
        Complex::new(
            self.re.cos() * self.im.cosh(),
            -self.re.sin() * self.im.sinh(),
        )
    }

    /// Nonnegative integer power by repeated squaring.
    pub fn powu(self, n: u32) -> Complex {
        let mut base = self;
        let mut n = n;
        let mut acc = ONE;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            n >>= 1;
        }
        acc
    }
}

impl From<f64> for Complex {
    fn from(re: f64) -> Self {
        Complex::new(re, 0.0)
    }
}

impl Add for Complex {
    type Output = Complex;
    fn add(self, rhs: Complex) -> Complex {
        Complex::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for Complex {
    type Output = Complex;
    fn sub(self, rhs: Complex) -> Complex {
        Complex::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for Complex {
    type Output = Complex;
    fn mul(self, rhs: Complex) -> Complex {
        Complex::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl Mul<f64> for Complex {
    type Output = Complex;
    fn mul(self, rhs: f64) -> Complex {
        Complex::new(self.re * rhs, self.im * rhs)
    }
}

impl Div for Complex {
    type Output = Complex;
    fn div(self, rhs: Complex) -> Complex {
        let d = rhs.norm_sqr();
        Complex::new(
            (self.re * rhs.re + self.im * rhs.im) / d,
            (self.im * rhs.re - self.re * rhs.im) / d,
        )
    }
}

impl Div<f64> for Complex {
    type Output = Complex;
    fn div(self, rhs: f64) -> Complex {
        Complex::new(self.re / rhs, self.im / rhs)
    }
}

impl Neg for Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex::new(-self.re, -self.im)
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im >= 0.0 || self.im.is_nan() {
            write!(f, "{}+{}i", self.re, self.im)
        } else {
            write!(f, "{}{}i", self.re, self.im)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn multiplication_and_powers() {
        let z = Complex::new(1.0, 1.0);
        let sq = z * z;
        assert_abs_diff_eq!(sq.re, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(sq.im, 2.0, epsilon = 1e-15);
        let cube = z.powu(3);
        assert_abs_diff_eq!(cube.re, -2.0, epsilon = 1e-15);
        assert_abs_diff_eq!(cube.im, 2.0, epsilon = 1e-15);
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = Complex::new(3.0, -2.0);
        let b = Complex::new(-1.0, 4.0);
        let q = (a * b) / b;
        assert_abs_diff_eq!(q.re, a.re, epsilon = 1e-14);
        assert_abs_diff_eq!(q.im, a.im, epsilon = 1e-14);
    }

    #[test]
    fn exp_of_i_pi_is_minus_one() {
        let v = Complex::new(0.0, std::f64::consts::PI).exp();
        assert_abs_diff_eq!(v.re, -1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(v.im, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn trig_addition_identity() {
        // sin(z)^2 + cos(z)^2 = 1 off the real axis too
        let z = Complex::new(0.7, -0.3);
        let s = z.sin();
        let c = z.cos();
        let one = s * s + c * c;
        assert_abs_diff_eq!(one.re, 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(one.im, 0.0, epsilon = 1e-14);
    }
}
