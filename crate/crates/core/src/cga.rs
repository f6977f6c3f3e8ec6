//! A minimal conformal model `R_{n+1,1}` used to cross-check the euclidean
//! PGA results.
//!
//! Generators: `e0 = e+` squares to `+1`, `e1..en` are the euclidean axes
//! and `e_{n+1} = e−` squares to `−1`. The null basis is
//! `n∞ = e− + e+` and `n₀ = ½(e− − e+)`, so `n₀ · n∞ = −1`, and a point is
//! embedded as `up(x) = n₀ + x + ½|x|² n∞`, giving `up(x)·up(y) = −½|x − y|²`.

use std::sync::Arc;

use crate::algebra::{Algebra, BladeIndex};
use crate::error::GaError;
use crate::multivector::Multivector;
use crate::pga::{EuclideanFlat, Pga};
use crate::scalar::Scalar;

/// Conformal model of euclidean `n`-space, `n = 2, 3`.
#[derive(Clone, Debug)]
pub struct Cga {
    algebra: Arc<Algebra>,
    n: usize,
}

/// A normalized null 1-vector: `p² = 0` and `p · n∞ = −1`.
#[derive(Clone, Debug, PartialEq)]
pub struct CgaPoint<T: Scalar> {
    mv: Multivector<T>,
}

impl<T: Scalar> CgaPoint<T> {
    pub fn mv(&self) -> &Multivector<T> {
        &self.mv
    }

    pub fn into_mv(self) -> Multivector<T> {
        self.mv
    }
}

impl Cga {
    pub fn new(n: usize) -> Result<Self, GaError> {
        if !(2..=3).contains(&n) {
            return Err(GaError::WrongAlgebra {
                required: "conformal model with n = 2 or 3",
                got: crate::algebra::Signature::cga(n as u8),
            });
        }
        Ok(Self { algebra: Algebra::cga(n as u8)?, n })
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn minus(&self) -> usize {
        self.n + 1
    }

    /// `n∞ = e− + e+`.
    pub fn n_inf<T: Scalar>(&self) -> Multivector<T> {
        let mut m = Multivector::zero(&self.algebra);
        m.set(BladeIndex::generator(0), T::one());
        m.set(BladeIndex::generator(self.minus()), T::one());
        m
    }

    /// `n₀ = ½(e− − e+)`.
    pub fn n_origin<T: Scalar>(&self) -> Multivector<T> {
        let half = T::lit(0.5);
        let mut m = Multivector::zero(&self.algebra);
        m.set(BladeIndex::generator(0), -half);
        m.set(BladeIndex::generator(self.minus()), half);
        m
    }

    /// `n₀ + x + ½|x|² n∞`.
    pub fn up<T: Scalar>(&self, x: &[T]) -> Result<CgaPoint<T>, GaError> {
        if x.len() != self.n {
            return Err(GaError::CoordinateCount { expected: self.n, got: x.len() });
        }
        if x.iter().any(|c| !c.is_finite()) {
            return Err(GaError::Parse("non-finite coordinate".into()));
        }
        let h = x.iter().map(|c| *c * *c).sum::<T>() * T::lit(0.5);
        let mut mv = self.n_origin().add_scaled(&self.n_inf(), h);
        for (i, &c) in x.iter().enumerate() {
            mv.set(BladeIndex::generator(i + 1), c);
        }
        Ok(CgaPoint { mv })
    }

    /// `−p · n∞`.
    pub fn weight<T: Scalar>(&self, p: &Multivector<T>) -> T {
        -p.left_contraction(&self.n_inf()).scalar_part()
    }

    /// Euclidean coordinates of a null point of nonzero weight.
    pub fn down<T: Scalar>(&self, p: &CgaPoint<T>) -> Result<Vec<T>, GaError> {
        let w = self.weight(p.mv());
        if w.abs() <= T::tight_tol() * p.mv().max_abs() {
            return Err(GaError::PointAtInfinity);
        }
        Ok((1..=self.n).map(|i| p.mv().get(BladeIndex::generator(i)) / w).collect())
    }

    /// Validates and normalizes a null 1-vector. The null test is relative
    /// to the squared coefficient norm.
    pub fn point<T: Scalar>(&self, mv: Multivector<T>) -> Result<CgaPoint<T>, GaError> {
        if !self.algebra.compatible(mv.algebra()) {
            return Err(GaError::AlgebraMismatch { left: self.algebra.signature(), right: mv.algebra().signature() });
        }
        if mv.grade() != Some(1) {
            return Err(GaError::WrongGrade("a conformal 1-vector"));
        }
        let sq = mv.scalar_product(&mv).scalar_part();
        let scale = mv.coeff_norm() * mv.coeff_norm();
        if sq.abs() > T::tight_tol() * scale {
            return Err(GaError::NotNull(sq.to_f64().unwrap_or(f64::NAN)));
        }
        let w = self.weight(&mv);
        if w.abs() <= T::tight_tol() * mv.max_abs() {
            return Err(GaError::PointAtInfinity);
        }
        Ok(CgaPoint { mv: mv.scale(T::one() / w) })
    }

    /// `(α, β)` with `p = α n₀ + β n∞ + x`.
    fn null_coords<T: Scalar>(&self, p: &Multivector<T>) -> (T, T) {
        let a = p.get(BladeIndex::generator(0));
        let b = p.get(BladeIndex::generator(self.minus()));
        (b - a, (a + b) * T::lit(0.5))
    }

    /// `⟨p q⟩₀` of two conformal 1-vectors, evaluated in the null basis as
    /// `x·y − α_p β_q − β_p α_q`. Equal to the scalar product, but free of
    /// the cancellation between the large `e+` and `e−` coefficients.
    pub fn inner<T: Scalar>(&self, p: &Multivector<T>, q: &Multivector<T>) -> Result<T, GaError> {
        p.same_algebra(q)?;
        if p.grade() != Some(1) || q.grade() != Some(1) {
            return Err(GaError::WrongGrade("conformal 1-vectors"));
        }
        let (ap, bp) = self.null_coords(p);
        let (aq, bq) = self.null_coords(q);
        let xy = (1..=self.n).map(|i| p.get(BladeIndex::generator(i)) * q.get(BladeIndex::generator(i))).sum::<T>();
        Ok(xy - ap * bq - bp * aq)
    }

    /// `√(−2 p·q)`, clamped at zero against rounding.
    pub fn distance<T: Scalar>(&self, p: &CgaPoint<T>, q: &CgaPoint<T>) -> Result<T, GaError> {
        let p = self.point(p.mv.clone())?;
        let q = self.point(q.mv.clone())?;
        let pq = self.inner(&p.mv, &q.mv)?;
        Ok((-T::lit(2.0) * pq).max(T::zero()).sqrt())
    }

    /// Conformal vector of the hyperplane `a·x + d = 0`: `a − d n∞`.
    pub fn plane<T: Scalar>(&self, normal: &[T], d: T) -> Result<Multivector<T>, GaError> {
        if normal.len() != self.n {
            return Err(GaError::CoordinateCount { expected: self.n, got: normal.len() });
        }
        let mut mv = self.n_inf().scale(-d);
        for (i, &a) in normal.iter().enumerate() {
            mv.set(BladeIndex::generator(i + 1), a);
        }
        Ok(mv)
    }

    /// The conformal vector of a PGA hyperplane `d e0 + a1 e1 + …`.
    pub fn from_pga_plane<T: Scalar>(&self, plane: &Multivector<T>) -> Result<Multivector<T>, GaError> {
        let pga = Pga::from_algebra(plane.algebra())?;
        if pga.n() != self.n {
            return Err(GaError::WrongAlgebra {
                required: "a PGA of matching dimension",
                got: plane.algebra().signature(),
            });
        }
        if plane.grade() != Some(1) {
            return Err(GaError::WrongGrade("a hyperplane"));
        }
        let normal: Vec<T> = (1..=self.n).map(|i| plane.get(BladeIndex::generator(i))).collect();
        self.plane(&normal, plane.get(BladeIndex::generator(0)))
    }

    /// Flat representation `up(x₀) ∧ … ∧ up(x_k) ∧ n∞` from points spanning
    /// a euclidean PGA flat.
    pub fn flat_rep<T: Scalar>(&self, pga: &Pga, flat: &EuclideanFlat<T>) -> Result<Multivector<T>, GaError> {
        if pga.n() != self.n {
            return Err(GaError::WrongAlgebra {
                required: "a PGA of matching dimension",
                got: pga.algebra().signature(),
            });
        }
        let mut out = Multivector::one(&self.algebra);
        for p in pga.spanning_points(flat)? {
            out = out.outer(self.up(&p)?.mv());
        }
        Ok(out.outer(&self.n_inf()))
    }
}
