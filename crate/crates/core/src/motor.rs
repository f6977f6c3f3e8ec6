//! Versors and their sandwiches, reflections, and the screw exponential and
//! logarithm.
//!
//! An even versor `g` acts by `g x g̃`, an odd one by `g x̂ g̃`. Bivector
//! exponentials use the invariant split `B² = s + p I`: for `s < 0`,
//! `B = B_r + B_t` with `B_r = (1 − μI) B`, `μ = p/(2s)`, `B_r² = s` and
//! `B_t` ideal and commuting with `B_r`, so
//! `exp B = (cos u + sin u / u · B_r)(1 + B_t)` with `u = √(−s)`.

use crate::error::GaError;
use crate::multivector::Multivector;
use crate::pga::Pga;
use crate::scalar::Scalar;

/// Even versors (rotors, motors) or odd ones (reflections and their
/// compositions with motors).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// A normalized versor: `⟨g g̃⟩₀ = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Versor<T: Scalar> {
    mv: Multivector<T>,
    parity: Parity,
}

fn parity_of<T: Scalar>(mv: &Multivector<T>) -> Result<Parity, GaError> {
    let even = mv.even_part().max_abs();
    let odd = mv.odd_part().max_abs();
    let tol = T::tight_tol() * mv.max_abs();
    match (even > tol, odd > tol) {
        (_, false) => Ok(Parity::Even),
        (false, true) => Ok(Parity::Odd),
        (true, true) => Err(GaError::OddContent("a versor of mixed parity")),
    }
}

fn norm_defect<T: Scalar>(mv: &Multivector<T>) -> T {
    (mv.gp(&mv.reverse()).scalar_part() - T::one()).abs()
}

impl<T: Scalar> Versor<T> {
    /// Wraps an already normalized multivector of pure parity.
    pub fn new(mv: Multivector<T>) -> Result<Self, GaError> {
        let parity = parity_of(&mv)?;
        if norm_defect(&mv) > T::loose_tol() {
            return Err(GaError::Unnormalized("versor: <g~g>0 must be 1"));
        }
        Ok(Self { mv, parity })
    }

    /// Normalizes, then wraps.
    pub fn normalized(mv: &Multivector<T>) -> Result<Self, GaError> {
        Self::new(normalize_versor(mv)?)
    }

    pub fn identity(algebra: &std::sync::Arc<crate::algebra::Algebra>) -> Self {
        Self { mv: Multivector::one(algebra), parity: Parity::Even }
    }

    /// Product of the given 1-vectors, normalized.
    pub fn from_reflections(mirrors: &[Multivector<T>]) -> Result<Self, GaError> {
        let first = mirrors.first().ok_or(GaError::Zero("from_reflections"))?;
        let mut g = Multivector::one(first.algebra());
        for m in mirrors {
            if m.grade() != Some(1) {
                return Err(GaError::WrongGrade("1-vector mirrors"));
            }
            g = g.try_gp(m)?;
        }
        Self::normalized(&g)
    }

    pub fn mv(&self) -> &Multivector<T> {
        &self.mv
    }

    pub fn into_mv(self) -> Multivector<T> {
        self.mv
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// `g h`: apply `h` first, then `g`.
    pub fn compose(&self, h: &Self) -> Result<Self, GaError> {
        let mv = self.mv.try_gp(&h.mv)?;
        let parity = if self.parity == h.parity { Parity::Even } else { Parity::Odd };
        Ok(Self { mv, parity })
    }

    pub fn inverse(&self) -> Self {
        Self { mv: self.mv.reverse(), parity: self.parity }
    }

    /// See [`sandwich`].
    pub fn apply(&self, x: &Multivector<T>) -> Result<Multivector<T>, GaError> {
        sandwich(self, x)
    }
}

/// `g x g̃` for even `g`, `g x̂ g̃` for odd `g`. A homogeneous operand
/// keeps its grade: rounding noise in other grades is dropped.
pub fn sandwich<T: Scalar>(g: &Versor<T>, x: &Multivector<T>) -> Result<Multivector<T>, GaError> {
    g.mv.same_algebra(x)?;
    if norm_defect(&g.mv) > T::loose_tol() {
        return Err(GaError::Unnormalized("versor: <g~g>0 must be 1"));
    }
    let operand = match g.parity {
        Parity::Even => x.clone(),
        Parity::Odd => x.grade_involution(),
    };
    let out = g.mv.gp(&operand).gp(&g.mv.reverse());
    Ok(match x.grade() {
        Some(k) => out.grade_project(k),
        None => out,
    })
}

/// `a x a` for a normalized euclidean 1-vector `a`.
pub fn reflect<T: Scalar>(a: &Multivector<T>, x: &Multivector<T>) -> Result<Multivector<T>, GaError> {
    a.same_algebra(x)?;
    if a.grade() != Some(1) {
        return Err(GaError::WrongGrade("a 1-vector mirror"));
    }
    let sq = a.gp(a).scalar_part();
    if sq.abs() <= T::tight_tol() * a.coeff_norm() * a.coeff_norm() {
        return Err(GaError::Ideal("mirror"));
    }
    if (sq.abs() - T::one()).abs() > T::loose_tol() {
        return Err(GaError::Unnormalized("mirror"));
    }
    Ok(a.gp(x).gp(a))
}

/// Scales a versor to `⟨g g̃⟩₀ = 1`. For even elements of a degenerate
/// algebra the pseudoscalar part of `g g̃ = s + pI` is removed as well:
/// `g ← g (1 − p/(2s) I) / √s`.
pub fn normalize_versor<T: Scalar>(g: &Multivector<T>) -> Result<Multivector<T>, GaError> {
    let alg = g.algebra().clone();
    let gg = g.gp(&g.reverse());
    let s = gg.scalar_part();
    if s.abs() <= T::tight_tol() * g.coeff_norm() * g.coeff_norm() || s.is_zero() {
        return Err(GaError::Ideal("versor with zero norm"));
    }
    let scale = T::one() / s.abs().sqrt();
    let degenerate_even_i = alg.signature().is_degenerate() && alg.dim().is_multiple_of(2);
    if degenerate_even_i && parity_of(g)? == Parity::Even {
        let p = gg.pseudoscalar_part();
        let mut fix = Multivector::scalar(&alg, T::one());
        fix.set(alg.pseudoscalar_blade(), -p / (T::lit(2.0) * s));
        Ok(g.gp(&fix).scale(scale))
    } else {
        Ok(g.scale(scale))
    }
}

fn euclidean_part<T: Scalar>(x: &Multivector<T>) -> Multivector<T> {
    let mut out = x.clone();
    let alg = x.algebra().clone();
    for &b in alg.basis() {
        if alg.metric_diag().iter().enumerate().any(|(i, &m)| m == 0 && b.contains(i)) {
            out.set(b, T::zero());
        }
    }
    out
}

fn series_exp<T: Scalar>(b: &Multivector<T>) -> Multivector<T> {
    // scaling and squaring
    let norm = b.coeff_norm();
    let mut k = 0;
    let mut scale = T::one();
    while norm * scale > T::lit(0.5) {
        scale = scale * T::lit(0.5);
        k += 1;
    }
    let x = b.scale(scale);
    let mut term = Multivector::one(b.algebra());
    let mut sum = term.clone();
    for i in 1..30 {
        term = term.gp(&x).scale(T::one() / T::from_usize(i).unwrap());
        sum = sum.add(&term);
        if term.max_abs() <= T::epsilon() * sum.max_abs() {
            break;
        }
    }
    for _ in 0..k {
        sum = sum.gp(&sum);
    }
    sum
}

/// Exponential of a bivector as an even versor.
pub fn exp_bivector<T: Scalar>(b: &Multivector<T>) -> Result<Versor<T>, GaError> {
    if !b.is_zero() && b.grade() != Some(2) {
        return Err(GaError::WrongGrade("a bivector"));
    }
    let alg = b.algebra().clone();
    let sq = b.gp(b);
    let s = sq.scalar_part();
    let p = sq.pseudoscalar_part();
    let mut rest = sq.clone();
    rest.set(crate::algebra::BladeIndex::SCALAR, T::zero());
    rest.set(alg.pseudoscalar_blade(), T::zero());
    let i_sq = alg.product(alg.pseudoscalar_blade(), alg.pseudoscalar_blade()).sign;
    let closed_form = rest.max_abs() <= T::tight_tol() * sq.max_abs() && (p.is_zero() || i_sq == 0);
    let mv = if !closed_form {
        series_exp(b)
    } else {
        let scale = b.coeff_norm() * b.coeff_norm();
        if s.abs() <= T::epsilon() * scale {
            Multivector::one(&alg).add(b)
        } else {
            let mu = p / (T::lit(2.0) * s);
            let i = Multivector::pseudoscalar(&alg);
            let b_t = b.gp(&i).scale(mu);
            let b_r = b.sub(&b_t);
            let u = s.abs().sqrt();
            let (c, sc) = if s < T::zero() { (u.cos(), u.sin() / u) } else { (u.cosh(), u.sinh() / u) };
            let rot = Multivector::scalar(&alg, c).add_scaled(&b_r, sc);
            rot.gp(&Multivector::one(&alg).add(&b_t))
        }
    };
    Versor::new(mv)
}

/// Logarithm of a normalized even versor of euclidean PGA, inverse of
/// [`exp_bivector`] with rotation half-angle in `[0, π)`.
pub fn log_versor<T: Scalar>(g: &Versor<T>) -> Result<Multivector<T>, GaError> {
    if g.parity != Parity::Even {
        return Err(GaError::OddContent("log of an odd versor"));
    }
    let g = &g.mv;
    let alg = g.algebra().clone();
    let a = g.scalar_part();
    let b = g.pseudoscalar_part();
    let g2 = g.grade_project(2);
    let sin_u = Pga::euclidean_norm_of(&euclidean_part(&g2));
    if sin_u <= T::tight_tol() {
        if a < T::zero() {
            return Err(GaError::Multivalued);
        }
        return Ok(g2.scale(T::one() / a));
    }
    let u = sin_u.atan2(a);
    let delta = if alg.dim().is_multiple_of(2) { -b / sin_u } else { T::zero() };
    let cot = a / sin_u;
    let i = Multivector::pseudoscalar(&alg);
    let mut factor = Multivector::scalar(&alg, T::one() / sin_u);
    factor = factor.add_scaled(&i, -delta * cot / sin_u);
    let line = factor.gp(&g2);
    let mut coef = Multivector::scalar(&alg, u);
    coef = coef.add_scaled(&i, delta);
    Ok(coef.gp(&line).grade_project(2))
}

impl Pga {
    /// Euclidean norm without a `Pga` instance.
    pub fn euclidean_norm_of<T: Scalar>(x: &Multivector<T>) -> T {
        x.gp(&x.reverse()).scalar_part().abs().sqrt()
    }

    /// Translator moving points by `v`.
    pub fn translator<T: Scalar>(&self, v: &[T]) -> Result<Versor<T>, GaError> {
        if v.len() != self.n() {
            return Err(GaError::CoordinateCount { expected: self.n(), got: v.len() });
        }
        let mut b = Multivector::zero(self.algebra());
        for (i, &c) in v.iter().enumerate() {
            let (blade, sign) = self.algebra().blade_from_generators(&[0, i + 1])?;
            b.set(blade, T::from_sign(sign) * c * T::lit(ORIENTATION * 0.5));
        }
        exp_bivector(&b)
    }

    /// Rotor turning by `angle` (right-handed) about a line: a 3D line or,
    /// in 2D, a point.
    pub fn rotor<T: Scalar>(&self, axis: &Multivector<T>, angle: T) -> Result<Versor<T>, GaError> {
        let unit = self.normalize(axis)?;
        if unit.is_ideal() {
            return Err(GaError::Ideal("rotation axis"));
        }
        if unit.mv().grade() != Some(2) {
            return Err(GaError::WrongGrade("a line (3D) or point (2D) axis"));
        }
        exp_bivector(&unit.mv().scale(angle * T::lit(ORIENTATION * 0.5)))
    }
}

// With the sandwich g x g̃ and lines oriented by the join P ∨ Q (direction
// from P to Q), exp(−θ/2 · L) turns right-handed by θ about L.
const ORIENTATION: f64 = -1.0;

/// Screw motion about a unit euclidean line: rotation by `angle` and
/// translation by `displacement` along the line.
#[derive(Clone, Debug, PartialEq)]
pub struct ScrewGenerator<T: Scalar> {
    axis: Multivector<T>,
    angle: T,
    displacement: T,
}

impl<T: Scalar> ScrewGenerator<T> {
    /// `axis` must be a euclidean line of 3D PGA with euclidean norm 1.
    pub fn new(axis: Multivector<T>, angle: T, displacement: T) -> Result<Self, GaError> {
        let pga = Pga::from_algebra(axis.algebra())?;
        if pga.n() != 3 {
            return Err(GaError::WrongAlgebra { required: "3D euclidean PGA", got: axis.algebra().signature() });
        }
        let flat = pga.flat(axis.clone())?;
        if flat.kind() != crate::pga::FlatKind::Line {
            return Err(GaError::WrongGrade("a line axis"));
        }
        if flat.is_ideal() {
            return Err(GaError::Ideal("screw axis"));
        }
        if (flat.weight() - T::one()).abs() > T::loose_tol() {
            return Err(GaError::Unnormalized("screw axis"));
        }
        Ok(Self { axis, angle, displacement })
    }

    /// Screw about the line through `point` with direction `direction`.
    pub fn from_point_direction(
        pga: &Pga,
        point: &[T],
        direction: &[T],
        angle: T,
        displacement: T,
    ) -> Result<Self, GaError> {
        if direction.len() != 3 {
            return Err(GaError::CoordinateCount { expected: 3, got: direction.len() });
        }
        let tip: Vec<T> = point.iter().zip(direction).map(|(p, d)| *p + *d).collect();
        let line = pga.line_from_points(pga.point(point)?.mv(), pga.point(&tip)?.mv())?;
        Self::new(pga.normalize(line.mv())?.into_mv(), angle, displacement)
    }

    pub fn axis(&self) -> &Multivector<T> {
        &self.axis
    }

    pub fn angle(&self) -> T {
        self.angle
    }

    pub fn displacement(&self) -> T {
        self.displacement
    }

    /// `(α + ε d)/2 · axis` with `ε ↔ −I`, the axis taken with the
    /// orientation opposite to its join direction (see [`Pga::rotor`]).
    pub fn bivector(&self) -> Multivector<T> {
        let alg = self.axis.algebra();
        let half = T::lit(0.5);
        let mut coef = Multivector::scalar(alg, T::lit(ORIENTATION) * self.angle * half);
        coef.set(alg.pseudoscalar_blade(), -T::lit(ORIENTATION) * self.displacement * half);
        coef.gp(&self.axis)
    }

    pub fn exp(&self) -> Result<Versor<T>, GaError> {
        exp_bivector(&self.bivector())
    }
}
