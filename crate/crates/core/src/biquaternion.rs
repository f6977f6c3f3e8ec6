//! Quaternions, biquaternions (dual quaternions), and the isomorphism
//! between the biquaternions and the even subalgebra of 3D euclidean PGA.
//!
//! Unit correspondence: `i ↔ −e23`, `j ↔ e13`, `k ↔ −e12`, `ε ↔ −I`, hence
//! `εi ↔ −e01`, `εj ↔ −e02`, `εk ↔ −e03`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use crate::algebra::{Algebra, BladeIndex};
use crate::error::GaError;
use crate::multivector::Multivector;
use crate::scalar::Scalar;

/// `w + x i + y j + z k`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Quaternion<T> {
    pub w: T,
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Scalar> Quaternion<T> {
    pub fn new(w: T, x: T, y: T, z: T) -> Self {
        Self { w, x, y, z }
    }

    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero(), T::zero(), T::zero())
    }

    pub fn one() -> Self {
        Self::new(T::one(), T::zero(), T::zero(), T::zero())
    }

    pub fn conj(self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn norm_sq(self) -> T {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn scale(self, s: T) -> Self {
        Self::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }

    pub fn to_array(self) -> [T; 4] {
        [self.w, self.x, self.y, self.z]
    }
}

impl<T: Scalar> Add for Quaternion<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl<T: Scalar> Sub for Quaternion<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl<T: Scalar> Neg for Quaternion<T> {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-T::one())
    }
}

impl<T: Scalar> Mul for Quaternion<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self::new(
            self.w * o.w - self.x * o.x - self.y * o.y - self.z * o.z,
            self.w * o.x + self.x * o.w + self.y * o.z - self.z * o.y,
            self.w * o.y - self.x * o.z + self.y * o.w + self.z * o.x,
            self.w * o.z + self.x * o.y - self.y * o.x + self.z * o.w,
        )
    }
}

/// `real + ε dual` with `ε² = 0` and `ε` central.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Biquaternion<T> {
    pub real: Quaternion<T>,
    pub dual: Quaternion<T>,
}

// even blades in the order of the eight units 1, i, j, k, ε, εi, εj, εk,
// with the sign of each correspondence
const UNITS: [(u8, f64); 8] = [
    (0b0000, 1.0),
    (0b1100, -1.0),
    (0b1010, 1.0),
    (0b0110, -1.0),
    (0b1111, -1.0),
    (0b0011, -1.0),
    (0b0101, -1.0),
    (0b1001, -1.0),
];

impl<T: Scalar> Biquaternion<T> {
    pub fn new(real: Quaternion<T>, dual: Quaternion<T>) -> Self {
        Self { real, dual }
    }

    pub fn one() -> Self {
        Self::new(Quaternion::one(), Quaternion::zero())
    }

    /// Coefficients on `1, i, j, k, ε, εi, εj, εk`.
    pub fn to_array(self) -> [T; 8] {
        let (r, d) = (self.real, self.dual);
        [r.w, r.x, r.y, r.z, d.w, d.x, d.y, d.z]
    }

    pub fn from_array(c: [T; 8]) -> Self {
        Self::new(Quaternion::new(c[0], c[1], c[2], c[3]), Quaternion::new(c[4], c[5], c[6], c[7]))
    }

    /// The `k`-th unit (`0 ↦ 1, …, 7 ↦ εk`).
    pub fn unit(k: usize) -> Self {
        let mut c = [T::zero(); 8];
        c[k] = T::one();
        Self::from_array(c)
    }

    pub fn conj(self) -> Self {
        Self::new(self.real.conj(), self.dual.conj())
    }

    pub fn max_abs_diff(self, o: Self) -> T {
        self.to_array().iter().zip(o.to_array().iter()).fold(T::zero(), |m, (a, b)| m.max((*a - *b).abs()))
    }
}

impl<T: Scalar> Mul for Biquaternion<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self::new(self.real * o.real, self.real * o.dual + self.dual * o.real)
    }
}

impl<T: Scalar> Add for Biquaternion<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.real + o.real, self.dual + o.dual)
    }
}

fn require_pga3(alg: &Algebra) -> Result<(), GaError> {
    let expected = crate::algebra::Signature::pga(3);
    if alg.signature() != expected {
        return Err(GaError::WrongAlgebra { required: "3D euclidean PGA", got: alg.signature() });
    }
    Ok(())
}

impl<T: Scalar> Multivector<T> {
    /// Image of an even element of 3D PGA in the biquaternions.
    pub fn to_biquaternion(&self) -> Result<Biquaternion<T>, GaError> {
        require_pga3(self.algebra())?;
        if !self.odd_part().is_zero() {
            return Err(GaError::OddContent("to_biquaternion"));
        }
        let mut c = [T::zero(); 8];
        for (k, &(bits, sign)) in UNITS.iter().enumerate() {
            c[k] = self.get(BladeIndex(bits)) * T::lit(sign);
        }
        Ok(Biquaternion::from_array(c))
    }

    /// Inverse of [`Self::to_biquaternion`].
    pub fn from_biquaternion(algebra: &Arc<Algebra>, q: &Biquaternion<T>) -> Result<Self, GaError> {
        require_pga3(algebra)?;
        let mut out = Self::zero(algebra);
        for (&(bits, sign), v) in UNITS.iter().zip(q.to_array()) {
            out.set(BladeIndex(bits), v * T::lit(sign));
        }
        Ok(out)
    }
}

fn write_quat<T: Scalar>(f: &mut fmt::Formatter<'_>, q: &Quaternion<T>) -> fmt::Result {
    write!(f, "({} + {}i + {}j + {}k)", q.w, q.x, q.y, q.z)
}

impl<T: Scalar> fmt::Display for Biquaternion<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_quat(f, &self.real)?;
        f.write_str(" + ε")?;
        write_quat(f, &self.dual)
    }
}

fn parse_quat<T: Scalar>(s: &str) -> Result<Quaternion<T>, GaError> {
    let inner = s
        .trim()
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| GaError::Parse(format!("expected parenthesized quaternion, got {s:?}")))?;
    let parts: Vec<&str> = inner.split(" + ").collect();
    if parts.len() != 4 {
        return Err(GaError::Parse(format!("expected four quaternion terms in {s:?}")));
    }
    let mut v = [T::zero(); 4];
    for (k, (part, suffix)) in parts.iter().zip(["", "i", "j", "k"]).enumerate() {
        let num = part
            .trim()
            .strip_suffix(suffix)
            .ok_or_else(|| GaError::Parse(format!("term {part:?} lacks unit {suffix:?}")))?;
        let x: T = num.parse().map_err(|_| GaError::Parse(format!("bad number {num:?}")))?;
        if !x.is_finite() {
            return Err(GaError::Parse(format!("non-finite number {num:?}")));
        }
        v[k] = x;
    }
    Ok(Quaternion::new(v[0], v[1], v[2], v[3]))
}

impl<T: Scalar> FromStr for Biquaternion<T> {
    type Err = GaError;

    /// Parses `(a + bi + cj + dk) + ε(e + fi + gj + hk)`.
    fn from_str(s: &str) -> Result<Self, GaError> {
        let (real, dual) = s.split_once(" + ε").ok_or_else(|| GaError::Parse(format!("missing ε part in {s:?}")))?;
        Ok(Self::new(parse_quat(real)?, parse_quat(dual)?))
    }
}
