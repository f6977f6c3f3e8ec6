//! Euclidean primitives of `P(R*_{n,0,1})` for `n = 2, 3`.
//!
//! Hyperplanes are 1-vectors (`a·x + d = 0` ↦ `d e0 + a1 e1 + …`), points
//! are `n`-vectors and, in 3D, lines are bivectors. A point is normalized
//! when its weight, the `e0` coefficient of `P I`, equals `+1`; with this
//! choice `P I = e0` (the ideal plane) for every normalized point.

use std::sync::Arc;

use crate::algebra::{Algebra, BladeIndex, Orientation};
use crate::error::GaError;
use crate::multivector::Multivector;
use crate::scalar::Scalar;

/// What a euclidean flat blade represents.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FlatKind {
    /// Grade 1: a plane in 3D, a line in 2D.
    Hyperplane,
    /// Grade 2 in 3D.
    Line,
    /// Grade `n`.
    Point,
}

/// A blade of euclidean PGA tagged with its geometric kind.
#[derive(Clone, Debug, PartialEq)]
pub struct EuclideanFlat<T: Scalar> {
    mv: Multivector<T>,
    kind: FlatKind,
    weight: T,
}

impl<T: Scalar> EuclideanFlat<T> {
    pub fn mv(&self) -> &Multivector<T> {
        &self.mv
    }

    pub fn into_mv(self) -> Multivector<T> {
        self.mv
    }

    pub fn kind(&self) -> FlatKind {
        self.kind
    }

    /// Signed weight for points, euclidean norm otherwise.
    pub fn weight(&self) -> T {
        self.weight
    }

    /// Ideal (at infinity): zero euclidean norm.
    pub fn is_ideal(&self) -> bool {
        self.weight.abs() <= T::tight_tol()
    }
}

/// Euclidean PGA of dimension 2 or 3.
#[derive(Clone, Debug)]
pub struct Pga {
    algebra: Arc<Algebra>,
    n: usize,
}

impl Pga {
    pub fn new(n: usize) -> Result<Self, GaError> {
        if !(2..=3).contains(&n) {
            return Err(GaError::WrongAlgebra {
                required: "euclidean PGA with n = 2 or 3",
                got: crate::algebra::Signature::pga(n as u8),
            });
        }
        Ok(Self { algebra: Algebra::pga(n as u8)?, n })
    }

    /// Wraps an existing algebra, which must be `(n,0,1)` plane-based.
    pub fn from_algebra(algebra: &Arc<Algebra>) -> Result<Self, GaError> {
        let sig = algebra.signature();
        let n = sig.p as usize;
        if sig.q != 0 || sig.r != 1 || sig.orientation != Orientation::Dual || !(2..=3).contains(&n) {
            return Err(GaError::WrongAlgebra { required: "euclidean PGA with n = 2 or 3", got: sig });
        }
        Ok(Self { algebra: algebra.clone(), n })
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The ideal plane `e0`.
    pub fn ideal_plane<T: Scalar>(&self) -> Multivector<T> {
        Multivector::generator(&self.algebra, 0)
    }

    fn kind_of_grade(&self, k: usize) -> Option<FlatKind> {
        match (k, self.n) {
            (1, _) => Some(FlatKind::Hyperplane),
            (2, 3) => Some(FlatKind::Line),
            (k, n) if k == n => Some(FlatKind::Point),
            _ => None,
        }
    }

    fn check_algebra<T: Scalar>(&self, x: &Multivector<T>) -> Result<(), GaError> {
        if self.algebra.compatible(x.algebra()) {
            Ok(())
        } else {
            Err(GaError::AlgebraMismatch { left: self.algebra.signature(), right: x.algebra().signature() })
        }
    }

    /// Classifies a blade. Fails on mixed grades, non-blades, scalars and
    /// pseudoscalars.
    pub fn flat<T: Scalar>(&self, mv: Multivector<T>) -> Result<EuclideanFlat<T>, GaError> {
        self.check_algebra(&mv)?;
        let k = mv.grade().ok_or(GaError::NotABlade)?;
        let kind = self.kind_of_grade(k).ok_or(GaError::NotABlade)?;
        if kind == FlatKind::Line {
            // a bivector in four dimensions is a blade iff B ∧ B = 0
            let bb = mv.outer(&mv);
            if bb.max_abs() > T::loose_tol() * mv.coeff_norm() * mv.coeff_norm() {
                return Err(GaError::NotABlade);
            }
        }
        let weight = match kind {
            FlatKind::Point => self.point_weight(&mv),
            _ => self.euclidean_norm(&mv),
        };
        Ok(EuclideanFlat { mv, kind, weight })
    }

    fn expect_len(&self, got: usize, expected: usize) -> Result<(), GaError> {
        if got == expected {
            Ok(())
        } else {
            Err(GaError::CoordinateCount { expected, got })
        }
    }

    /// Hyperplane `a1 x1 + … + an xn + d = 0` from `[a1, …, an, d]`.
    pub fn plane<T: Scalar>(&self, coeffs: &[T]) -> Result<EuclideanFlat<T>, GaError> {
        self.expect_len(coeffs.len(), self.n + 1)?;
        if coeffs[..self.n].iter().all(|c| c.is_zero()) {
            return Err(GaError::ZeroNormal);
        }
        let mut mv = Multivector::zero(&self.algebra);
        mv.set(BladeIndex::generator(0), coeffs[self.n]);
        for (i, &a) in coeffs[..self.n].iter().enumerate() {
            mv.set(BladeIndex::generator(i + 1), a);
        }
        self.flat(mv)
    }

    /// Normalized euclidean point: the meet of the hyperplanes `x_i = c_i`,
    /// scaled to weight `+1`.
    pub fn point<T: Scalar>(&self, coords: &[T]) -> Result<EuclideanFlat<T>, GaError> {
        self.expect_len(coords.len(), self.n)?;
        let mut p = Multivector::one(&self.algebra);
        for (i, &c) in coords.iter().enumerate() {
            let mut h = Multivector::generator(&self.algebra, i + 1);
            h.set(BladeIndex::generator(0), -c);
            p = p.outer(&h);
        }
        let w = self.point_weight(&p);
        self.flat(p.scale(T::one() / w))
    }

    /// Ideal point in direction `dir` (zero weight).
    pub fn ideal_point<T: Scalar>(&self, dir: &[T]) -> Result<EuclideanFlat<T>, GaError> {
        self.expect_len(dir.len(), self.n)?;
        if dir.iter().all(|c| c.is_zero()) {
            return Err(GaError::Zero("ideal_point"));
        }
        let origin = self.point(&vec![T::zero(); self.n])?.into_mv();
        let mut mv = Multivector::zero(&self.algebra);
        for (i, &d) in dir.iter().enumerate() {
            let mut unit = vec![T::zero(); self.n];
            unit[i] = T::one();
            let axis = self.point(&unit)?.into_mv() - &origin;
            mv = mv.add_scaled(&axis, d);
        }
        self.flat(mv)
    }

    /// The `e0` coefficient of `P I`.
    pub fn point_weight<T: Scalar>(&self, p: &Multivector<T>) -> T {
        p.polarity().get(BladeIndex::generator(0))
    }

    /// Euclidean coordinates of a point with nonzero weight.
    pub fn point_coords<T: Scalar>(&self, p: &Multivector<T>) -> Result<Vec<T>, GaError> {
        self.check_algebra(p)?;
        let (w, v) = self.point_parts(p);
        if w.abs() <= T::tight_tol() * v.iter().fold(T::one(), |m, c| m.max(c.abs())) {
            return Err(GaError::PointAtInfinity);
        }
        Ok(v.into_iter().map(|c| c / w).collect())
    }

    /// Direction of an ideal point (or the unnormalized position vector of a
    /// euclidean one).
    pub fn point_direction<T: Scalar>(&self, p: &Multivector<T>) -> Vec<T> {
        self.point_parts(p).1
    }

    // For a plane h, h ∧ P = (h evaluated at P)·I. Probing with e0 and e_i
    // recovers the homogeneous coordinates.
    fn point_parts<T: Scalar>(&self, p: &Multivector<T>) -> (T, Vec<T>) {
        let probe = |i: usize| Multivector::<T>::generator(&self.algebra, i).outer(p).pseudoscalar_part();
        let w = probe(0);
        let v = (1..=self.n).map(probe).collect();
        (w, v)
    }

    /// `√|⟨x x̃⟩₀|`.
    pub fn euclidean_norm<T: Scalar>(&self, x: &Multivector<T>) -> T {
        x.gp(&x.reverse()).scalar_part().abs().sqrt()
    }

    /// Root sum of squares of the coefficients on blades containing `e0`.
    pub fn ideal_norm<T: Scalar>(&self, x: &Multivector<T>) -> T {
        self.algebra.basis().iter().filter(|b| b.contains(0)).map(|&b| x.get(b) * x.get(b)).sum::<T>().sqrt()
    }

    /// Scales a flat to unit weight: points to weight `+1`, other euclidean
    /// flats to euclidean norm 1, ideal flats to ideal norm 1.
    pub fn normalize<T: Scalar>(&self, x: &Multivector<T>) -> Result<EuclideanFlat<T>, GaError> {
        if x.is_zero() {
            return Err(GaError::Zero("normalize"));
        }
        let flat = self.flat(x.clone())?;
        let scale = if flat.kind == FlatKind::Point && !flat.is_ideal() {
            flat.weight
        } else {
            let e = self.euclidean_norm(x);
            if e > T::tight_tol() * x.coeff_norm() {
                e
            } else {
                self.ideal_norm(x)
            }
        };
        self.flat(x.scale(T::one() / scale))
    }

    fn require_normalized_point<T: Scalar>(&self, p: &Multivector<T>) -> Result<(), GaError> {
        self.check_algebra(p)?;
        if p.grade() != Some(self.n) {
            return Err(GaError::WrongGrade("a point (grade n)"));
        }
        let w = self.point_weight(p);
        if w.abs() <= T::tight_tol() {
            return Err(GaError::Ideal("point"));
        }
        if (w - T::one()).abs() > T::loose_tol() {
            return Err(GaError::Unnormalized("point weight must be 1"));
        }
        Ok(())
    }

    fn require_unit<T: Scalar>(&self, x: &Multivector<T>, what: &'static str) -> Result<(), GaError> {
        self.check_algebra(x)?;
        let e = self.euclidean_norm(x);
        if e <= T::tight_tol() {
            return Err(GaError::Ideal(what));
        }
        if (e - T::one()).abs() > T::loose_tol() {
            return Err(GaError::Unnormalized(what));
        }
        Ok(())
    }

    /// `‖P ∨ Q‖`, the euclidean norm of the joining line.
    pub fn distance_via_join<T: Scalar>(&self, p: &Multivector<T>, q: &Multivector<T>) -> T {
        self.euclidean_norm(&p.join(q))
    }

    /// `‖⟨P Q⟩₂‖`, measured with the ideal norm (the bivector is ideal).
    pub fn distance_via_product<T: Scalar>(&self, p: &Multivector<T>, q: &Multivector<T>) -> T {
        self.ideal_norm(&p.gp(q).grade_project(2))
    }

    /// Distance between normalized euclidean points. Both routes are
    /// evaluated and must agree.
    pub fn distance<T: Scalar>(&self, p: &Multivector<T>, q: &Multivector<T>) -> Result<T, GaError> {
        self.require_normalized_point(p)?;
        self.require_normalized_point(q)?;
        let a = self.distance_via_join(p, q);
        let b = self.distance_via_product(p, q);
        if (a - b).abs() > T::tight_tol() * T::one().max(a) {
            return Err(GaError::DistanceMismatch {
                via_join: a.to_f64().unwrap_or(f64::NAN),
                via_product: b.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(a)
    }

    /// Angle in `[0, π]` between normalized hyperplanes.
    pub fn angle<T: Scalar>(&self, u: &Multivector<T>, v: &Multivector<T>) -> Result<T, GaError> {
        for x in [u, v] {
            if x.grade() != Some(1) {
                return Err(GaError::WrongGrade("a hyperplane (grade 1)"));
            }
            self.require_unit(x, "hyperplane")?;
        }
        let c = u.left_contraction(v).scalar_part();
        Ok(c.max(-T::one()).min(T::one()).acos())
    }

    /// Line through two points.
    pub fn line_from_points<T: Scalar>(
        &self,
        a: &Multivector<T>,
        b: &Multivector<T>,
    ) -> Result<EuclideanFlat<T>, GaError> {
        let l = a.try_join(b)?;
        if l.max_abs() <= T::tight_tol() * a.coeff_norm() * b.coeff_norm() {
            return Err(GaError::Coincident);
        }
        self.flat(l)
    }

    /// Line where two planes meet (3D only).
    pub fn line_from_planes<T: Scalar>(
        &self,
        a: &Multivector<T>,
        b: &Multivector<T>,
    ) -> Result<EuclideanFlat<T>, GaError> {
        if self.n != 3 {
            return Err(GaError::WrongGrade("n = 3 for a line as a meet of planes"));
        }
        let l = a.try_meet(b)?;
        if l.max_abs() <= T::tight_tol() * a.coeff_norm() * b.coeff_norm() {
            return Err(GaError::Coincident);
        }
        self.flat(l)
    }

    /// Size of `P ∨ X` relative to the inputs; zero when `P` lies on `X`.
    pub fn incidence_residual<T: Scalar>(&self, p: &Multivector<T>, x: &Multivector<T>) -> T {
        let scale = p.coeff_norm() * x.coeff_norm();
        if scale.is_zero() {
            return T::zero();
        }
        p.join(x).max_abs() / scale
    }

    pub fn incident<T: Scalar>(&self, p: &Multivector<T>, x: &Multivector<T>) -> bool {
        self.incidence_residual(p, x) < T::loose_tol()
    }

    /// Whether two lines (3D) meet or are parallel: `L1 ∧ L2 = 0`.
    pub fn lines_coplanar<T: Scalar>(&self, a: &Multivector<T>, b: &Multivector<T>) -> bool {
        let scale = a.coeff_norm() * b.coeff_norm();
        a.outer(b).max_abs() <= T::loose_tol() * scale
    }

    /// Whether the euclidean directions of two flats are orthogonal:
    /// `⟨A B⟩₀ = 0` relative to their euclidean norms.
    pub fn orthogonal<T: Scalar>(&self, a: &Multivector<T>, b: &Multivector<T>) -> bool {
        let scale = self.euclidean_norm(a) * self.euclidean_norm(b);
        a.scalar_product(b).scalar_part().abs() <= T::loose_tol() * scale
    }

    /// Parallelism test for normalized blades of equal grade:
    /// `A I = ±B I` (the sign allows opposite orientation).
    pub fn parallel<T: Scalar>(&self, a: &Multivector<T>, b: &Multivector<T>) -> bool {
        let (pa, pb) = (a.polarity(), b.polarity());
        pa.approx_eq(&pb, T::loose_tol()) || pa.approx_eq(&-&pb, T::loose_tol())
    }

    /// `Π · P = ⟨Π P⟩₁`: the hyperplane through `P` perpendicular to `Π`.
    pub fn perpendicular_hyperplane<T: Scalar>(&self, line: &Multivector<T>, p: &Multivector<T>) -> Multivector<T> {
        line.left_contraction(p)
    }

    /// `((Π · P) ∧ Π) ∨ P`: the line through `P` meeting the line `Π` at a
    /// right angle. Both inputs must be normalized and non-incident.
    pub fn perpendicular_through_point<T: Scalar>(
        &self,
        line: &Multivector<T>,
        p: &Multivector<T>,
    ) -> Result<EuclideanFlat<T>, GaError> {
        self.require_normalized_point(p)?;
        if line.grade() != Some(self.n - 1) {
            return Err(GaError::WrongGrade("a line"));
        }
        self.require_unit(line, "line")?;
        let foot = self.perpendicular_hyperplane(line, p).meet(line);
        let sigma = foot.join(p);
        if self.euclidean_norm(&sigma) <= T::loose_tol() {
            return Err(GaError::MeetDegenerates);
        }
        self.normalize(&sigma)
    }

    /// Direction vector of a 3D line, pointing from `P` to `Q` for `P ∨ Q`.
    pub fn line_direction<T: Scalar>(&self, line: &Multivector<T>) -> Vec<T> {
        self.point_direction(&line.outer(&self.ideal_plane())).into_iter().map(|c| -c).collect()
    }

    /// `k + 1` points spanning a `k`-dimensional flat: the point closest to
    /// the origin followed by that point offset along an orthonormal basis
    /// of the flat's directions.
    pub fn spanning_points<T: Scalar>(&self, flat: &EuclideanFlat<T>) -> Result<Vec<Vec<T>>, GaError> {
        if flat.is_ideal() {
            return Err(GaError::Ideal("flat"));
        }
        let origin = self.point(&vec![T::zero(); self.n])?.into_mv();
        let x = flat.mv();
        let (foot, dirs): (Vec<T>, Vec<Vec<T>>) = match flat.kind {
            FlatKind::Point => (self.point_coords(x)?, vec![]),
            FlatKind::Hyperplane => {
                let foot = x.outer(&x.left_contraction(&origin));
                let normal: Vec<T> = (1..=self.n).map(|i| x.get(BladeIndex::generator(i))).collect();
                (self.point_coords(&foot)?, orthonormal_complement(&normal))
            }
            FlatKind::Line => {
                let foot = x.left_contraction(&origin).outer(x);
                let d = self.line_direction(x);
                let len = d.iter().map(|c| *c * *c).sum::<T>().sqrt();
                (self.point_coords(&foot)?, vec![d.into_iter().map(|c| c / len).collect()])
            }
        };
        let mut pts = vec![foot.clone()];
        for d in dirs {
            pts.push(foot.iter().zip(&d).map(|(a, b)| *a + *b).collect());
        }
        Ok(pts)
    }
}

/// Orthonormal basis of the complement of `v` via Gram–Schmidt on the
/// standard basis.
fn orthonormal_complement<T: Scalar>(v: &[T]) -> Vec<Vec<T>> {
    let n = v.len();
    let norm = v.iter().map(|c| *c * *c).sum::<T>().sqrt();
    let mut basis: Vec<Vec<T>> = vec![v.iter().map(|c| *c / norm).collect()];
    for i in 0..n {
        let mut w = vec![T::zero(); n];
        w[i] = T::one();
        for b in &basis {
            let dot = w.iter().zip(b).map(|(a, c)| *a * *c).sum::<T>();
            for (wj, bj) in w.iter_mut().zip(b) {
                *wj = *wj - dot * *bj;
            }
        }
        let len = w.iter().map(|c| *c * *c).sum::<T>().sqrt();
        if len > T::lit(1e-6) {
            basis.push(w.into_iter().map(|c| c / len).collect());
        }
        if basis.len() == n {
            break;
        }
    }
    basis.remove(0);
    basis
}
