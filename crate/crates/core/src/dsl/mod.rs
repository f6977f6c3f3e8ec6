//! A small expression language over multivectors.
//!
//! ```text
//! ((Pi | P) ^ Pi) & P
//! ```
//!
//! Operators, loosest first: `+ -`, `&` (regressive product via `J`), `^`
//! (native wedge), `|` (left contraction), `*` (geometric product), then
//! unary `~` (reverse), `!` (`J`), `#` (polarity) and `-` (negation), which
//! may be written before or after their operand. `<x>k` selects grade `k`.
//! Identifiers `e0`, `e12`, … are basis blades.

mod eval;
mod parser;

use std::fmt;

pub use eval::{eval, Environment};
pub use parser::parse;

use crate::error::GaError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Join,
    Wedge,
    Contract,
    Product,
}

impl BinOp {
    pub fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Join => "&",
            BinOp::Wedge => "^",
            BinOp::Contract => "|",
            BinOp::Product => "*",
        }
    }

    /// Binding strength; larger binds tighter.
    pub fn precedence(self) -> u8 {
        match self {
            BinOp::Add | BinOp::Sub => 1,
            BinOp::Join => 2,
            BinOp::Wedge => 3,
            BinOp::Contract => 4,
            BinOp::Product => 5,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnaryOp {
    Reverse,
    Dual,
    Polarity,
    Neg,
}

impl UnaryOp {
    pub fn symbol(self) -> &'static str {
        match self {
            UnaryOp::Reverse => "~",
            UnaryOp::Dual => "!",
            UnaryOp::Polarity => "#",
            UnaryOp::Neg => "-",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(f64),
    Ident(String),
    Unary(UnaryOp, Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Grade(Box<Expr>, usize),
}

impl Expr {
    pub fn binary(op: BinOp, l: Expr, r: Expr) -> Self {
        Expr::Binary(op, Box::new(l), Box::new(r))
    }

    pub fn unary(op: UnaryOp, e: Expr) -> Self {
        Expr::Unary(op, Box::new(e))
    }

    pub fn ident(name: &str) -> Self {
        Expr::Ident(name.to_string())
    }
}

/// Prints with the fewest parentheses that reparse to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(v) => write!(f, "{v}"),
            Expr::Ident(s) => f.write_str(s),
            Expr::Grade(e, k) => write!(f, "<{e}>{k}"),
            Expr::Unary(op, e) => {
                f.write_str(op.symbol())?;
                match **e {
                    Expr::Binary(..) => write!(f, "({e})"),
                    _ => write!(f, "{e}"),
                }
            }
            Expr::Binary(op, l, r) => {
                let p = op.precedence();
                match &**l {
                    Expr::Binary(lop, ..) if lop.precedence() < p => write!(f, "({l})")?,
                    _ => write!(f, "{l}")?,
                }
                write!(f, " {} ", op.symbol())?;
                match &**r {
                    Expr::Binary(rop, ..) if rop.precedence() <= p => write!(f, "({r})"),
                    _ => write!(f, "{r}"),
                }
            }
        }
    }
}

/// Errors from parsing or evaluating an expression.
#[derive(Debug, thiserror::Error, Clone, PartialEq)]
pub enum DslError {
    #[error("{line}:{column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("unbound identifier '{0}'")]
    Unbound(String),
    #[error(transparent)]
    Ga(#[from] GaError),
}
