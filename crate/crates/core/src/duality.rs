//! Poincaré duality, the join/meet pair, and metric polarity.
//!
//! `J` is the metric-free dual coordinate map: a blade goes to its
//! complementary blade, signed so that `b ∧ J(b) = +I`. It reads only blade
//! bitmasks and never touches the metric. Polarity is multiplication by the
//! pseudoscalar and does depend on the metric; in a degenerate signature it
//! is not invertible and must not be used to build the regressive product.

use crate::algebra::Orientation;
use crate::error::GaError;
use crate::multivector::Multivector;
use crate::scalar::Scalar;

impl<T: Scalar> Multivector<T> {
    /// Dual coordinate map `J`. Grade `k` goes to grade `dim − k` and
    /// `J(J(x)) = (−1)^{k(dim−k)} x`.
    pub fn j_map(&self) -> Self {
        let map = self.algebra().duality();
        let mut out = Self::zero(self.algebra());
        for &b in self.algebra().basis() {
            let (c, s) = map.image(b);
            out.set(c, T::from_sign(s) * self.get(b));
        }
        out
    }

    /// Inverse of [`Self::j_map`].
    pub fn j_inverse(&self) -> Self {
        let map = self.algebra().duality();
        let mut out = Self::zero(self.algebra());
        for &b in self.algebra().basis() {
            let (c, s) = map.preimage(b);
            out.set(c, T::from_sign(s) * self.get(b));
        }
        out
    }

    fn regressive_impl(&self, rhs: &Self) -> Self {
        self.j_inverse().outer(&rhs.j_inverse()).j_map()
    }

    /// Regressive product `J(J⁻¹(x) ∧ J⁻¹(y))`. In a plane-based algebra this
    /// is the join `∨`; in a point-based one it is the meet.
    pub fn try_join(&self, rhs: &Self) -> Result<Self, GaError> {
        self.same_algebra(rhs)?;
        Ok(self.regressive_impl(rhs))
    }

    /// See [`Self::try_join`]. Panics on algebra mismatch.
    pub fn join(&self, rhs: &Self) -> Self {
        self.try_join(rhs).unwrap_or_else(|e| panic!("{e}"))
    }

    /// Meet `∧` of a plane-based algebra, i.e. its native wedge.
    pub fn try_meet(&self, rhs: &Self) -> Result<Self, GaError> {
        self.same_algebra(rhs)?;
        if self.algebra().orientation() != Orientation::Dual {
            return Err(GaError::WrongAlgebra { required: "plane-based (dual)", got: self.algebra().signature() });
        }
        Ok(self.outer(rhs))
    }

    /// See [`Self::try_meet`]. Panics on error.
    pub fn meet(&self, rhs: &Self) -> Self {
        self.try_meet(rhs).unwrap_or_else(|e| panic!("{e}"))
    }

    /// Polarity `Π(x) = x I`.
    pub fn polarity(&self) -> Self {
        self.gp(&Self::pseudoscalar(self.algebra()))
    }
}

/// Human-readable binding of the two subspace operators for an algebra,
/// e.g. for CLI banners.
pub fn operator_interpretation(orientation: Orientation) -> &'static str {
    match orientation {
        Orientation::Dual => "'^' = meet (native wedge), '&' = join (regressive via J)",
        Orientation::Standard => "'^' = join-like outer product (native wedge), '&' = meet (regressive via J)",
    }
}
