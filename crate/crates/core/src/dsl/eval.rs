use std::collections::BTreeMap;
use std::sync::Arc;

use super::{BinOp, DslError, Expr, UnaryOp};
use crate::algebra::Algebra;
use crate::error::GaError;
use crate::multivector::Multivector;
use crate::scalar::Scalar;

/// Named multivectors over one algebra.
#[derive(Clone, Debug)]
pub struct Environment<T: Scalar> {
    algebra: Arc<Algebra>,
    bindings: BTreeMap<String, Multivector<T>>,
}

fn is_blade_name(name: &str) -> bool {
    name.len() > 1 && name.starts_with('e') && name[1..].bytes().all(|b| b.is_ascii_digit())
}

impl<T: Scalar> Environment<T> {
    pub fn new(algebra: &Arc<Algebra>) -> Self {
        Self { algebra: algebra.clone(), bindings: BTreeMap::new() }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    /// Adds a binding. Blade names are reserved.
    pub fn bind(&mut self, name: &str, value: Multivector<T>) -> Result<(), DslError> {
        if is_blade_name(name) {
            return Err(DslError::Syntax { line: 1, column: 1, message: format!("'{name}' is a blade name") });
        }
        if !self.algebra.compatible(value.algebra()) {
            return Err(GaError::AlgebraMismatch {
                left: self.algebra.signature(),
                right: value.algebra().signature(),
            }
            .into());
        }
        self.bindings.insert(name.to_string(), value);
        Ok(())
    }

    /// Returns a copy with one more binding.
    pub fn with(&self, name: &str, value: Multivector<T>) -> Result<Self, DslError> {
        let mut out = self.clone();
        out.bind(name, value)?;
        Ok(out)
    }

    pub fn get(&self, name: &str) -> Option<&Multivector<T>> {
        self.bindings.get(name)
    }

    fn lookup(&self, name: &str) -> Result<Multivector<T>, DslError> {
        if is_blade_name(name) {
            let gens: Vec<usize> = name[1..].bytes().map(|b| (b - b'0') as usize).collect();
            let (b, s) = self.algebra.blade_from_generators(&gens)?;
            return Ok(Multivector::blade(&self.algebra, b, T::from_sign(s)));
        }
        self.bindings.get(name).cloned().ok_or_else(|| DslError::Unbound(name.to_string()))
    }
}

/// Evaluates by structural recursion into the library operations.
pub fn eval<T: Scalar>(e: &Expr, env: &Environment<T>) -> Result<Multivector<T>, DslError> {
    Ok(match e {
        Expr::Num(v) => {
            Multivector::scalar(&env.algebra, T::from_f64(*v).ok_or(GaError::Parse(format!("number {v}")))?)
        }
        Expr::Ident(name) => env.lookup(name)?,
        Expr::Grade(x, k) => eval(x, env)?.try_grade_project(*k)?,
        Expr::Unary(op, x) => {
            let x = eval(x, env)?;
            match op {
                UnaryOp::Reverse => x.reverse(),
                UnaryOp::Dual => x.j_map(),
                UnaryOp::Polarity => x.polarity(),
                UnaryOp::Neg => -x,
            }
        }
        Expr::Binary(op, l, r) => {
            let (l, r) = (eval(l, env)?, eval(r, env)?);
            match op {
                BinOp::Add => l.try_add(&r)?,
                BinOp::Sub => l.try_sub(&r)?,
                BinOp::Join => l.try_join(&r)?,
                BinOp::Wedge => l.try_outer(&r)?,
                BinOp::Contract => l.try_left_contraction(&r)?,
                BinOp::Product => l.try_gp(&r)?,
            }
        }
    })
}
