//! Evaluable complex functions with a declared finite singularity set.
//!
//! A [`FunctionSpec`] carries an expression body together with the compact
//! set X of points where the function is undefined; everything downstream
//! (contour guards, enclosing rectangles) keys off that list.

mod expr;
mod parser;

use std::fmt;

use crate::complex::{Complex, ZERO};
use crate::error::{Error, Result};

pub use expr::{Builtin, Expr};
use expr::{add, derive, eval_expr, konst, mul};

#[derive(Debug, Clone, PartialEq)]
pub struct FunctionSpec {
    body: Expr,
    singularities: Vec<Complex>,
}

impl FunctionSpec {
    /// Parses an expression in the variable `z`. The singularity list is
    /// auto-populated from constant-shifted denominators (`1/z`, `1/(z-c)`,
    /// `1/(c-z)`, `1/(z+c)`, possibly under an integer power).
    pub fn parse(src: &str) -> Result<Self> {
        Self::parse_in_var(src, "z")
    }

    /// Same grammar with a caller-chosen variable name (loops use `t`).
    pub fn parse_in_var(src: &str, var: &str) -> Result<Self> {
        let body = parser::parse_expr(src, var)?;
        Ok(Self::from_expr(body))
    }

    pub fn from_expr(body: Expr) -> Self {
        let mut singularities = Vec::new();
        collect_singularities(&body, &mut singularities);
        FunctionSpec {
            body,
            singularities,
        }
    }

    /// Polynomial with the given coefficients, constant term first,
    /// evaluated in Horner form.
    pub fn polynomial(coeffs: &[Complex]) -> Self {
        let mut it = coeffs.iter().rev();
        let lead = it.next().copied().unwrap_or(ZERO);
        let body = it.fold(konst(lead), |acc, c| add(mul(acc, Expr::Var), konst(*c)));
        FunctionSpec {
            body,
            singularities: Vec::new(),
        }
    }

    /// Appends caller-declared singularities (CLI `--singularity`).
    pub fn with_singularities(mut self, extra: &[Complex]) -> Self {
        for s in extra {
            if !self.singularities.contains(s) {
                self.singularities.push(*s);
            }
        }
        self
    }

    pub fn body(&self) -> &Expr {
        &self.body
    }

    pub fn singularities(&self) -> &[Complex] {
        &self.singularities
    }

    /// Evaluates at `z`. Errors on a declared singularity and when the
    /// result overflows to a non-finite value.
    pub fn eval(&self, z: Complex) -> Result<Complex> {
        if self.singularities.contains(&z) {
            return Err(Error::EvalAtSingularity(z));
        }
        let v = eval_expr(&self.body, z);
        if !v.is_finite() {
            return Err(Error::NonFiniteValue(z));
        }
        Ok(v)
    }

    /// Symbolic derivative. The result carries the same declared
    /// singularity list; quotient-rule denominators appear squared.
    pub fn differentiate(&self) -> FunctionSpec {
        FunctionSpec {
            body: derive(&self.body),
            singularities: self.singularities.clone(),
        }
    }
}

impl fmt::Display for FunctionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.body.fmt(f)
    }
}

/// Value of a variable-free subtree, if it is one.
fn const_value(e: &Expr) -> Option<Complex> {
    fn has_var(e: &Expr) -> bool {
        match e {
            Expr::Var => true,
            Expr::Const(_) => false,
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                has_var(a) || has_var(b)
            }
            Expr::Pow(a, _) | Expr::Call(_, a) => has_var(a),
        }
    }
    if has_var(e) {
        return None;
    }
    let v = eval_expr(e, ZERO);
    v.is_finite().then_some(v)
}

/// Pole of a `1/(z-c)`-shaped denominator, read off syntactically.
fn shifted_pole(den: &Expr) -> Option<Complex> {
    let base = match den {
        Expr::Pow(b, n) if *n >= 1 => b,
        other => other,
    };
    match base {
        Expr::Var => Some(ZERO),
        Expr::Sub(l, r) => match (&**l, const_value(r)) {
            (Expr::Var, Some(c)) => Some(c),
            _ => match (const_value(l), &**r) {
                (Some(c), Expr::Var) => Some(c),
                _ => None,
            },
        },
        Expr::Add(l, r) => match (&**l, const_value(r)) {
            (Expr::Var, Some(c)) => Some(-c),
            _ => match (const_value(l), &**r) {
                (Some(c), Expr::Var) => Some(-c),
                _ => None,
            },
        },
        _ => None,
    }
}

fn collect_singularities(e: &Expr, out: &mut Vec<Complex>) {
    match e {
        Expr::Div(num, den) => {
            if let Some(p) = shifted_pole(den) {
                if !out.contains(&p) {
                    out.push(p);
                }
            }
            collect_singularities(num, out);
            collect_singularities(den, out);
        }
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
            collect_singularities(a, out);
            collect_singularities(b, out);
        }
        Expr::Pow(a, _) | Expr::Call(_, a) => collect_singularities(a, out),
        Expr::Const(_) | Expr::Var => {}
    }
}
