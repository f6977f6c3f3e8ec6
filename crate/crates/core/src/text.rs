//! Text form of multivectors: `coef*blade` terms joined by ` + `, e.g.
//! `1.5*e12 + -2*e0`. Scalars print as a bare number and the zero
//! multivector prints as `0`. Printing uses the shortest representation that
//! parses back to the same bits, so print/parse round-trips exactly.

use std::fmt;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::GaError;
use crate::multivector::Multivector;
use crate::scalar::Scalar;

impl<T: Scalar> fmt::Display for Multivector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for &b in self.algebra().basis() {
            let c = self.get(b);
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if b.grade() == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*{}", b.name())?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl<T: Scalar> Multivector<T> {
    /// Parses the text form. Accepts `+`/`-` between terms, bare blades
    /// (`e12`, `-e0`) and blades written out of order (`e21` = `-e12`).
    pub fn parse(algebra: &Arc<Algebra>, src: &str) -> Result<Self, GaError> {
        let mut out = Self::zero(algebra);
        let mut rest = src.trim();
        if rest.is_empty() {
            return Err(GaError::Parse("empty input".into()));
        }
        let mut first = true;
        while !rest.is_empty() {
            let mut negate = false;
            if !first {
                match rest.as_bytes()[0] {
                    b'+' => {}
                    b'-' => negate = true,
                    _ => return Err(GaError::Parse(format!("expected '+' or '-' before {rest:?}"))),
                }
                rest = rest[1..].trim_start();
                if rest.is_empty() {
                    return Err(GaError::Parse("dangling sign".into()));
                }
            }
            first = false;
            let end = term_end(rest);
            let (term, tail) = rest.split_at(end);
            let (blade, coef) = parse_term::<T>(algebra, term.trim())?;
            let coef = if negate { -coef } else { coef };
            out.set(blade, out.get(blade) + coef);
            rest = tail.trim_start();
        }
        Ok(out)
    }
}

/// End of the current term: the next `+`/`-` that is not part of a number's
/// sign or exponent.
fn term_end(s: &str) -> usize {
    let bytes = s.as_bytes();
    for i in 1..bytes.len() {
        if matches!(bytes[i], b'+' | b'-') {
            let prev = bytes[i - 1];
            if matches!(prev, b'e' | b'E') && i >= 2 && bytes[i - 2].is_ascii_digit() {
                // exponent sign, unless this 'e' starts a blade name after '*'
                continue;
            }
            if prev == b'*' {
                continue;
            }
            return i;
        }
    }
    bytes.len()
}

fn parse_blade(algebra: &Arc<Algebra>, s: &str) -> Result<(crate::algebra::BladeIndex, i8), GaError> {
    let digits = s.strip_prefix('e').ok_or_else(|| GaError::Parse(format!("bad blade name {s:?}")))?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(GaError::Parse(format!("bad blade name {s:?}")));
    }
    let gens: Vec<usize> = digits.bytes().map(|b| (b - b'0') as usize).collect();
    algebra.blade_from_generators(&gens)
}

fn parse_number<T: Scalar>(s: &str) -> Result<T, GaError> {
    let v: T = s.parse().map_err(|_| GaError::Parse(format!("bad number {s:?}")))?;
    if !v.is_finite() {
        return Err(GaError::Parse(format!("non-finite number {s:?}")));
    }
    Ok(v)
}

fn parse_term<T: Scalar>(algebra: &Arc<Algebra>, term: &str) -> Result<(crate::algebra::BladeIndex, T), GaError> {
    if term.is_empty() {
        return Err(GaError::Parse("empty term".into()));
    }
    if let Some((num, blade)) = term.split_once('*') {
        let coef: T = parse_number(num.trim())?;
        let (b, s) = parse_blade(algebra, blade.trim())?;
        return Ok((b, coef * T::from_sign(s)));
    }
    let (neg, body) = match term.strip_prefix('-') {
        Some(b) => (true, b.trim_start()),
        None => (false, term),
    };
    let (b, value) = if body.starts_with('e') && body.len() > 1 && body.as_bytes()[1].is_ascii_digit() {
        let (b, s) = parse_blade(algebra, body)?;
        (b, T::from_sign(s))
    } else {
        (crate::algebra::BladeIndex::SCALAR, parse_number(body)?)
    };
    Ok((b, if neg { -value } else { value }))
}
