//! Expression trees: evaluation, symbolic differentiation, printing.

use std::fmt;

use crate::complex::{Complex, ONE, ZERO};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Builtin {
    Exp,
    Sin,
    Cos,
}

impl Builtin {
    pub fn name(self) -> &'static str {
        match self {
            Builtin::Exp => "exp",
            Builtin::Sin => "sin",
            Builtin::Cos => "cos",
        }
    }
}

/// Finite expression tree over one complex variable. Power exponents are
/// nonnegative integers, so every expression is holomorphic away from the
/// zeros of its denominators.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Const(Complex),
    Var,
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Call(Builtin, Box<Expr>),
}

pub(crate) fn eval_expr(e: &Expr, z: Complex) -> Complex {
    match e {
        Expr::Const(c) => *c,
        Expr::Var => z,
        Expr::Add(a, b) => eval_expr(a, z) + eval_expr(b, z),
        Expr::Sub(a, b) => eval_expr(a, z) - eval_expr(b, z),
        Expr::Mul(a, b) => eval_expr(a, z) * eval_expr(b, z),
        Expr::Div(a, b) => eval_expr(a, z) / eval_expr(b, z),
        Expr::Pow(a, n) => eval_expr(a, z).powu(*n),
        Expr::Call(Builtin::Exp, a) => eval_expr(a, z).exp(),
        Expr::Call(Builtin::Sin, a) => eval_expr(a, z).sin(),
        Expr::Call(Builtin::Cos, a) => eval_expr(a, z).cos(),
    }
}

// Smart constructors fold constants locally and drop exact 0/1 identities;
// folds that would produce a non-finite constant are left symbolic.

pub(crate) fn konst(c: Complex) -> Expr {
    Expr::Const(c)
}

fn as_const(e: &Expr) -> Option<Complex> {
    match e {
        Expr::Const(c) => Some(*c),
        _ => None,
    }
}

pub(crate) fn add(a: Expr, b: Expr) -> Expr {
    if let (Some(x), Some(y)) = (as_const(&a), as_const(&b)) {
        if (x + y).is_finite() {
            return konst(x + y);
        }
    }
    if as_const(&a) == Some(ZERO) {
        return b;
    }
    if as_const(&b) == Some(ZERO) {
        return a;
    }
    Expr::Add(a.into(), b.into())
}

pub(crate) fn sub(a: Expr, b: Expr) -> Expr {
    if let (Some(x), Some(y)) = (as_const(&a), as_const(&b)) {
        if (x - y).is_finite() {
            return konst(x - y);
        }
    }
    if as_const(&b) == Some(ZERO) {
        return a;
    }
    Expr::Sub(a.into(), b.into())
}

pub(crate) fn mul(a: Expr, b: Expr) -> Expr {
    if let (Some(x), Some(y)) = (as_const(&a), as_const(&b)) {
        if (x * y).is_finite() {
            return konst(x * y);
        }
    }
    if as_const(&a) == Some(ZERO) || as_const(&b) == Some(ZERO) {
        return konst(ZERO);
    }
    if as_const(&a) == Some(ONE) {
        return b;
    }
    if as_const(&b) == Some(ONE) {
        return a;
    }
    Expr::Mul(a.into(), b.into())
}

pub(crate) fn div(a: Expr, b: Expr) -> Expr {
    if let (Some(x), Some(y)) = (as_const(&a), as_const(&b)) {
        if y != ZERO && (x / y).is_finite() {
            return konst(x / y);
        }
    }
    if as_const(&b) == Some(ONE) {
        return a;
    }
    Expr::Div(a.into(), b.into())
}

pub(crate) fn pow(a: Expr, n: u32) -> Expr {
    match n {
        0 => konst(ONE),
        1 => a,
        _ => {
            if let Some(x) = as_const(&a) {
                if x.powu(n).is_finite() {
                    return konst(x.powu(n));
                }
            }
            Expr::Pow(a.into(), n)
        }
    }
}

/// Symbolic derivative by the usual rules; chain rule on the builtins.
pub(crate) fn derive(e: &Expr) -> Expr {
    match e {
        Expr::Const(_) => konst(ZERO),
        Expr::Var => konst(ONE),
        Expr::Add(a, b) => add(derive(a), derive(b)),
        Expr::Sub(a, b) => sub(derive(a), derive(b)),
        Expr::Mul(a, b) => add(
            mul(derive(a), (**b).clone()),
            mul((**a).clone(), derive(b)),
        ),
        Expr::Div(a, b) => div(
            sub(
                mul(derive(a), (**b).clone()),
                mul((**a).clone(), derive(b)),
            ),
            pow((**b).clone(), 2),
        ),
        Expr::Pow(a, n) => {
            if *n == 0 {
                return konst(ZERO);
            }
            mul(
                mul(konst(Complex::from(*n as f64)), pow((**a).clone(), n - 1)),
                derive(a),
            )
        }
        Expr::Call(Builtin::Exp, a) => mul(Expr::Call(Builtin::Exp, a.clone()), derive(a)),
        Expr::Call(Builtin::Sin, a) => mul(Expr::Call(Builtin::Cos, a.clone()), derive(a)),
        Expr::Call(Builtin::Cos, a) => mul(
            mul(konst(Complex::new(-1.0, 0.0)), Expr::Call(Builtin::Sin, a.clone())),
            derive(a),
        ),
    }
}

// Printing. Precedence levels: additive 1, multiplicative 2, unary minus 3,
// power 4, atoms 5. Re-parsing the printed form evaluates identically.

fn const_prec(c: Complex) -> u8 {
    if c.im == 0.0 {
        if c.re >= 0.0 {
            5
        } else {
            3
        }
    } else if c.re == 0.0 {
        if c.im == 1.0 {
            5
        } else if c.im == -1.0 {
            3
        } else {
            2
        }
    } else {
        5 // printed inside its own parentheses
    }
}

fn prec(e: &Expr) -> u8 {
    match e {
        Expr::Const(c) => const_prec(*c),
        Expr::Var => 5,
        Expr::Call(..) => 5,
        Expr::Pow(..) => 4,
        Expr::Mul(..) | Expr::Div(..) => 2,
        Expr::Add(..) | Expr::Sub(..) => 1,
    }
}

fn fmt_const(c: Complex, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if c.im == 0.0 {
        write!(f, "{:?}", c.re)
    } else if c.re == 0.0 {
        if c.im == 1.0 {
            write!(f, "i")
        } else if c.im == -1.0 {
            write!(f, "-i")
        } else {
            write!(f, "{:?}*i", c.im)
        }
    } else if c.im < 0.0 {
        write!(f, "({:?}-{:?}*i)", c.re, -c.im)
    } else {
        write!(f, "({:?}+{:?}*i)", c.re, c.im)
    }
}

fn fmt_prec(e: &Expr, f: &mut fmt::Formatter<'_>, min_prec: u8) -> fmt::Result {
    let own = prec(e);
    if own < min_prec {
        write!(f, "(")?;
        fmt_prec(e, f, 0)?;
        return write!(f, ")");
    }
    match e {
        Expr::Const(c) => fmt_const(*c, f),
        Expr::Var => write!(f, "z"),
        Expr::Add(a, b) => {
            fmt_prec(a, f, 1)?;
            write!(f, "+")?;
            fmt_prec(b, f, 2)
        }
        Expr::Sub(a, b) => {
            fmt_prec(a, f, 1)?;
            write!(f, "-")?;
            fmt_prec(b, f, 2)
        }
        Expr::Mul(a, b) => {
            fmt_prec(a, f, 2)?;
            write!(f, "*")?;
            fmt_prec(b, f, 3)
        }
        Expr::Div(a, b) => {
            fmt_prec(a, f, 2)?;
            write!(f, "/")?;
            fmt_prec(b, f, 3)
        }
        Expr::Pow(a, n) => {
            fmt_prec(a, f, 5)?;
            write!(f, "^{n}")
        }
        Expr::Call(b, a) => {
            write!(f, "{}(", b.name())?;
            fmt_prec(a, f, 0)?;
            write!(f, ")")
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_prec(self, f, 0)
    }
}
