//! Dense multivectors and the graded products.

use std::ops::{Add, BitAnd, BitOr, BitXor, Mul, Neg, Sub};
use std::sync::Arc;

use crate::algebra::{Algebra, BladeIndex};
use crate::error::GaError;
use crate::scalar::Scalar;

/// Element of an [`Algebra`], stored as one coefficient per basis blade and
/// indexed by [`BladeIndex`] bits.
///
/// Binary products come in two flavours: `try_*` returns
/// [`GaError::AlgebraMismatch`] when the operands belong to different
/// algebras, the plain method (and the operator overloads) panic instead.
#[derive(Clone)]
pub struct Multivector<T> {
    algebra: Arc<Algebra>,
    coeffs: Vec<T>,
}

impl<T: Scalar> std::fmt::Debug for Multivector<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Multivector[{}]({})", self.algebra.signature(), self)
    }
}

impl<T: Scalar> PartialEq for Multivector<T> {
    fn eq(&self, other: &Self) -> bool {
        self.algebra.compatible(&other.algebra) && self.coeffs == other.coeffs
    }
}

macro_rules! checked_pair {
    ($(#[$doc:meta])* $name:ident, $try_name:ident, $imp:ident) => {
        $(#[$doc])*
        pub fn $name(&self, rhs: &Self) -> Self {
            self.$try_name(rhs).unwrap_or_else(|e| panic!("{e}"))
        }

        $(#[$doc])*
        pub fn $try_name(&self, rhs: &Self) -> Result<Self, GaError> {
            self.same_algebra(rhs)?;
            Ok(self.$imp(rhs))
        }
    };
}

impl<T: Scalar> Multivector<T> {
    pub fn zero(algebra: &Arc<Algebra>) -> Self {
        Self { algebra: algebra.clone(), coeffs: vec![T::zero(); algebra.size()] }
    }

    pub fn scalar(algebra: &Arc<Algebra>, s: T) -> Self {
        let mut mv = Self::zero(algebra);
        mv.coeffs[0] = s;
        mv
    }

    pub fn one(algebra: &Arc<Algebra>) -> Self {
        Self::scalar(algebra, T::one())
    }

    pub fn blade(algebra: &Arc<Algebra>, b: BladeIndex, coef: T) -> Self {
        let mut mv = Self::zero(algebra);
        mv.coeffs[b.bits()] = coef;
        mv
    }

    /// Generator `e_i` as a 1-vector.
    pub fn generator(algebra: &Arc<Algebra>, i: usize) -> Self {
        Self::blade(algebra, BladeIndex::generator(i), T::one())
    }

    /// Unit pseudoscalar `e_{01…}`.
    pub fn pseudoscalar(algebra: &Arc<Algebra>) -> Self {
        Self::blade(algebra, algebra.pseudoscalar_blade(), T::one())
    }

    /// Builds a multivector from coefficients indexed by blade bits.
    pub fn from_coeffs(algebra: &Arc<Algebra>, coeffs: Vec<T>) -> Result<Self, GaError> {
        if coeffs.len() != algebra.size() {
            return Err(GaError::CoefficientCount { expected: algebra.size(), got: coeffs.len() });
        }
        if let Some(i) = coeffs.iter().position(|c| !c.is_finite()) {
            return Err(GaError::NonFinite(BladeIndex(i as u8)));
        }
        Ok(Self { algebra: algebra.clone(), coeffs })
    }

    /// Builds a homogeneous element from coefficients listed in canonical
    /// order over the grade-`k` blades.
    pub fn from_grade(algebra: &Arc<Algebra>, k: usize, values: &[T]) -> Result<Self, GaError> {
        if k > algebra.dim() {
            return Err(GaError::GradeOutOfRange { grade: k, max: algebra.dim() });
        }
        let blades: Vec<_> = algebra.blades_of_grade(k).collect();
        if blades.len() != values.len() {
            return Err(GaError::CoefficientCount { expected: blades.len(), got: values.len() });
        }
        let mut mv = Self::zero(algebra);
        for (b, v) in blades.iter().zip(values) {
            mv.coeffs[b.bits()] = *v;
        }
        Ok(mv)
    }

    /// Coefficients over the grade-`k` blades in canonical order.
    pub fn grade_coeffs(&self, k: usize) -> Vec<T> {
        self.algebra.blades_of_grade(k).map(|b| self.coeffs[b.bits()]).collect()
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    #[inline]
    pub fn get(&self, b: BladeIndex) -> T {
        self.coeffs[b.bits()]
    }

    #[inline]
    pub fn set(&mut self, b: BladeIndex, v: T) {
        self.coeffs[b.bits()] = v;
    }

    pub fn scalar_part(&self) -> T {
        self.coeffs[0]
    }

    /// Coefficient of the unit pseudoscalar.
    pub fn pseudoscalar_part(&self) -> T {
        self.coeffs[self.algebra.pseudoscalar_blade().bits()]
    }

    pub fn same_algebra(&self, other: &Self) -> Result<(), GaError> {
        if self.algebra.compatible(&other.algebra) {
            Ok(())
        } else {
            Err(GaError::AlgebraMismatch { left: self.algebra.signature(), right: other.algebra.signature() })
        }
    }

    fn map_blades(&self, f: impl Fn(BladeIndex, T) -> T) -> Self {
        let coeffs = self.coeffs.iter().enumerate().map(|(i, &c)| f(BladeIndex(i as u8), c)).collect();
        Self { algebra: self.algebra.clone(), coeffs }
    }

    pub fn scale(&self, s: T) -> Self {
        self.map_blades(|_, c| c * s)
    }

    /// Bit mask of the grades carrying a nonzero coefficient.
    pub fn grade_mask(&self) -> u32 {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(0, |m, (i, _)| m | 1 << (i as u32).count_ones())
    }

    /// The single grade present, if the element is homogeneous and nonzero.
    pub fn grade(&self) -> Option<usize> {
        let m = self.grade_mask();
        (m.count_ones() == 1).then(|| m.trailing_zeros() as usize)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Largest absolute coefficient.
    pub fn max_abs(&self) -> T {
        self.coeffs.iter().fold(T::zero(), |m, c| m.max(c.abs()))
    }

    /// Euclidean norm of the coefficient vector (metric-free).
    pub fn coeff_norm(&self) -> T {
        self.coeffs.iter().map(|c| *c * *c).sum::<T>().sqrt()
    }

    /// Largest coefficient difference; infinite on algebra mismatch.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        if self.same_algebra(other).is_err() {
            return T::infinity();
        }
        self.coeffs.iter().zip(&other.coeffs).fold(T::zero(), |m, (a, b)| m.max((*a - *b).abs()))
    }

    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        self.max_abs_diff(other) <= tol
    }

    /// Whether `self = λ·other` for some nonzero λ, up to `tol` relative to
    /// the coefficient norms.
    pub fn proportional(&self, other: &Self, tol: T) -> bool {
        let (na, nb) = (self.coeff_norm(), other.coeff_norm());
        if na.is_zero() || nb.is_zero() {
            return na.is_zero() && nb.is_zero();
        }
        let a = self.scale(T::one() / na);
        let b = other.scale(T::one() / nb);
        a.approx_eq(&b, tol) || a.approx_eq(&-&b, tol)
    }

    // ---------------------------------------------------------------------
    // involutions and grade machinery

    /// Reversion: grade `k` picks up `(−1)^{k(k−1)/2}`.
    pub fn reverse(&self) -> Self {
        self.map_blades(|b, c| {
            let k = b.grade();
            if (k * k.saturating_sub(1) / 2) % 2 == 1 {
                -c
            } else {
                c
            }
        })
    }

    /// Grade involution: grade `k` picks up `(−1)^k`.
    pub fn grade_involution(&self) -> Self {
        self.map_blades(|b, c| if b.grade() % 2 == 1 { -c } else { c })
    }

    /// Clifford conjugate (reverse ∘ grade involution).
    pub fn conjugate(&self) -> Self {
        self.reverse().grade_involution()
    }

    /// Grade-`k` part. Grades above the algebra dimension yield zero.
    pub fn grade_project(&self, k: usize) -> Self {
        self.map_blades(|b, c| if b.grade() == k { c } else { T::zero() })
    }

    pub fn try_grade_project(&self, k: usize) -> Result<Self, GaError> {
        if k > self.algebra.dim() {
            return Err(GaError::GradeOutOfRange { grade: k, max: self.algebra.dim() });
        }
        Ok(self.grade_project(k))
    }

    pub fn even_part(&self) -> Self {
        self.map_blades(|b, c| if b.grade() % 2 == 0 { c } else { T::zero() })
    }

    pub fn odd_part(&self) -> Self {
        self.map_blades(|b, c| if b.grade() % 2 == 1 { c } else { T::zero() })
    }

    // ---------------------------------------------------------------------
    // products

    /// Dense kernel: visits every blade pair.
    fn gp_dense(&self, rhs: &Self) -> Self {
        let n = self.algebra.size();
        let table = self.algebra.table();
        let mut out = vec![T::zero(); n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            let row = &table[i * n..(i + 1) * n];
            for (entry, &b) in row.iter().zip(&rhs.coeffs) {
                out[entry.blade.bits()] = out[entry.blade.bits()] + T::from_sign(entry.sign) * a * b;
            }
        }
        Self { algebra: self.algebra.clone(), coeffs: out }
    }

    /// Sparse kernel: visits only pairs of nonzero coefficients.
    fn gp_sparse_impl(&self, rhs: &Self) -> Self {
        self.filtered_product(rhs, |_, _| true)
    }

    fn filtered_product(&self, rhs: &Self, keep: impl Fn(BladeIndex, BladeIndex) -> bool) -> Self {
        let n = self.algebra.size();
        let table = self.algebra.table();
        let nz_rhs: Vec<usize> = (0..n).filter(|&j| !rhs.coeffs[j].is_zero()).collect();
        let mut out = vec![T::zero(); n];
        for i in (0..n).filter(|&i| !self.coeffs[i].is_zero()) {
            let a = self.coeffs[i];
            for &j in &nz_rhs {
                let entry = table[i * n + j];
                if entry.sign == 0 || !keep(BladeIndex(i as u8), BladeIndex(j as u8)) {
                    continue;
                }
                let k = entry.blade.bits();
                out[k] = out[k] + T::from_sign(entry.sign) * a * rhs.coeffs[j];
            }
        }
        Self { algebra: self.algebra.clone(), coeffs: out }
    }

    fn outer_impl(&self, rhs: &Self) -> Self {
        self.filtered_product(rhs, |a, b| a.0 & b.0 == 0)
    }

    fn left_contraction_impl(&self, rhs: &Self) -> Self {
        // ⟨A B⟩_{k−j}: nonzero only when a's generators are a subset of b's.
        self.filtered_product(rhs, |a, b| a.0 & !b.0 == 0)
    }

    fn right_contraction_impl(&self, rhs: &Self) -> Self {
        self.filtered_product(rhs, |a, b| b.0 & !a.0 == 0)
    }

    fn scalar_product_impl(&self, rhs: &Self) -> Self {
        self.filtered_product(rhs, |a, b| a.0 == b.0)
    }

    fn commutator_impl(&self, rhs: &Self) -> Self {
        let ab = self.gp_sparse_impl(rhs);
        let ba = rhs.gp_sparse_impl(self);
        let half = T::lit(0.5);
        Self {
            algebra: self.algebra.clone(),
            coeffs: ab.coeffs.iter().zip(&ba.coeffs).map(|(x, y)| (*x - *y) * half).collect(),
        }
    }

    checked_pair!(
        /// Geometric product.
        gp, try_gp, gp_dense
    );
    checked_pair!(
        /// Geometric product through the sparse kernel; agrees with [`Self::gp`].
        gp_sparse, try_gp_sparse, gp_sparse_impl
    );
    checked_pair!(
        /// Outer (wedge) product. In a plane-based algebra this is the meet.
        outer, try_outer, outer_impl
    );
    checked_pair!(
        /// Left contraction `A⌋B`, grade-wise `⟨A B⟩_{k−j}` (zero when `j > k`).
        left_contraction, try_left_contraction, left_contraction_impl
    );
    checked_pair!(
        /// Right contraction `A⌊B`, grade-wise `⟨A B⟩_{j−k}`.
        right_contraction, try_right_contraction, right_contraction_impl
    );
    checked_pair!(
        /// Scalar product `⟨A B⟩₀` returned as a multivector.
        scalar_product, try_scalar_product, scalar_product_impl
    );
    checked_pair!(
        /// Commutator product `½(ab − ba)`.
        commutator, try_commutator, commutator_impl
    );

    fn add_impl(&self, rhs: &Self) -> Self {
        Self {
            algebra: self.algebra.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| *a + *b).collect(),
        }
    }

    fn sub_impl(&self, rhs: &Self) -> Self {
        Self {
            algebra: self.algebra.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| *a - *b).collect(),
        }
    }

    checked_pair!(
        /// Sum.
        add, try_add, add_impl
    );
    checked_pair!(
        /// Difference.
        sub, try_sub, sub_impl
    );

    /// `self + s·rhs`, the axpy used by the integrators.
    pub fn add_scaled(&self, rhs: &Self, s: T) -> Self {
        self.same_algebra(rhs).unwrap_or_else(|e| panic!("{e}"));
        Self {
            algebra: self.algebra.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| *a + s * *b).collect(),
        }
    }

    /// Converts the coefficients to another scalar type.
    pub fn cast<U: Scalar>(&self) -> Multivector<U> {
        Multivector {
            algebra: self.algebra.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|c| U::from_f64(c.to_f64().unwrap_or(f64::NAN)).unwrap_or(U::nan()))
                .collect(),
        }
    }
}

impl<T: Scalar> Neg for &Multivector<T> {
    type Output = Multivector<T>;
    fn neg(self) -> Multivector<T> {
        self.scale(-T::one())
    }
}

impl<T: Scalar> Neg for Multivector<T> {
    type Output = Multivector<T>;
    fn neg(self) -> Multivector<T> {
        -&self
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $call:ident) => {
        impl<T: Scalar> $trait<&Multivector<T>> for &Multivector<T> {
            type Output = Multivector<T>;
            fn $method(self, rhs: &Multivector<T>) -> Multivector<T> {
                self.$call(rhs)
            }
        }
        impl<T: Scalar> $trait<Multivector<T>> for Multivector<T> {
            type Output = Multivector<T>;
            fn $method(self, rhs: Multivector<T>) -> Multivector<T> {
                (&self).$call(&rhs)
            }
        }
        impl<T: Scalar> $trait<&Multivector<T>> for Multivector<T> {
            type Output = Multivector<T>;
            fn $method(self, rhs: &Multivector<T>) -> Multivector<T> {
                (&self).$call(rhs)
            }
        }
        impl<T: Scalar> $trait<Multivector<T>> for &Multivector<T> {
            type Output = Multivector<T>;
            fn $method(self, rhs: Multivector<T>) -> Multivector<T> {
                self.$call(&rhs)
            }
        }
    };
}

binop!(Add, add, add);
binop!(Sub, sub, sub);
binop!(Mul, mul, gp);
binop!(BitXor, bitxor, outer);
binop!(BitOr, bitor, left_contraction);
binop!(BitAnd, bitand, join);
