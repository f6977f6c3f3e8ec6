//! Force-free rigid bodies in the even subalgebra of 3D euclidean PGA.
//!
//! The state is a pose motor `g` (body to space) and the body-frame
//! momentum bivector `M`. With body velocity `V = A⁻¹(M)`:
//!
//! ```text
//! ġ = −½ g V
//! Ṁ = ½ (V M − M V)
//! ```
//!
//! The inertia operator is `A(V) = J(D V)` with `D` diagonal on the bivector
//! basis: the moments of inertia on `e23, e13, e12` and the mass on
//! `e01, e02, e03`. A rotation about a line through the center of mass thus
//! carries an ideal momentum and a translation a momentum line through the
//! center of mass. The space-frame momentum `g M g̃` and the energy
//! `E = ½ [V ∧ A(V)]_I` are conserved.

use std::io::{self, Write};
use std::sync::Arc;

use crate::algebra::{Algebra, BladeIndex, Signature};
use crate::error::GaError;
use crate::motor::normalize_versor;
use crate::multivector::Multivector;
use crate::scalar::Scalar;

/// Bivector blades of 3D PGA in canonical order: `e01, e02, e12, e03, e13, e23`.
pub const BIVECTOR_BLADES: [BladeIndex; 6] = [
    BladeIndex(0b0011),
    BladeIndex(0b0101),
    BladeIndex(0b0110),
    BladeIndex(0b1001),
    BladeIndex(0b1010),
    BladeIndex(0b1100),
];

/// Even blades of 3D PGA in canonical order: `1, e01, e02, e12, e03, e13, e23, e0123`.
pub const EVEN_BLADES: [BladeIndex; 8] = [
    BladeIndex(0),
    BladeIndex(0b0011),
    BladeIndex(0b0101),
    BladeIndex(0b0110),
    BladeIndex(0b1001),
    BladeIndex(0b1010),
    BladeIndex(0b1100),
    BladeIndex(0b1111),
];

fn require_pga3(alg: &Algebra) -> Result<(), GaError> {
    if alg.signature() != Signature::pga(3) {
        return Err(GaError::WrongAlgebra { required: "3D euclidean PGA", got: alg.signature() });
    }
    Ok(())
}

/// Diagonal inertia on the bivector basis, composed with `J`.
#[derive(Clone, Debug)]
pub struct InertiaOperator<T: Scalar> {
    algebra: Arc<Algebra>,
    diag: [T; 6],
}

impl<T: Scalar> InertiaOperator<T> {
    /// Principal moments about the body `x, y, z` axes and the total mass.
    pub fn new(algebra: &Arc<Algebra>, moments: [T; 3], mass: T) -> Result<Self, GaError> {
        let [ix, iy, iz] = moments;
        Self::from_diagonal(algebra, [mass, mass, iz, mass, iy, ix])
    }

    /// Entries on `e01, e02, e12, e03, e13, e23`.
    pub fn from_diagonal(algebra: &Arc<Algebra>, diag: [T; 6]) -> Result<Self, GaError> {
        require_pga3(algebra)?;
        if diag.iter().any(|d| !(d.is_finite() && *d > T::zero())) {
            return Err(GaError::SingularInertia);
        }
        Ok(Self { algebra: algebra.clone(), diag })
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn diagonal(&self) -> [T; 6] {
        self.diag
    }

    fn scale_diag(&self, v: &Multivector<T>, inverse: bool) -> Multivector<T> {
        let mut out = Multivector::zero(&self.algebra);
        for (b, d) in BIVECTOR_BLADES.iter().zip(self.diag) {
            let f = if inverse { T::one() / d } else { d };
            out.set(*b, v.get(*b) * f);
        }
        out
    }

    /// `M = A(V)`.
    pub fn momentum(&self, v: &Multivector<T>) -> Multivector<T> {
        self.scale_diag(v, false).j_map()
    }

    /// `V = A⁻¹(M)`.
    pub fn velocity(&self, m: &Multivector<T>) -> Multivector<T> {
        self.scale_diag(&m.j_inverse(), true)
    }

    /// `½ [V ∧ A(V)]_I` for a body velocity `V`.
    pub fn energy(&self, v: &Multivector<T>) -> T {
        v.outer(&self.momentum(v)).pseudoscalar_part() * T::lit(0.5)
    }
}

/// Pose and body-frame momentum.
#[derive(Clone, Debug, PartialEq)]
pub struct BodyState<T: Scalar> {
    pub g: Multivector<T>,
    pub m: Multivector<T>,
}

impl<T: Scalar> BodyState<T> {
    pub fn new(g: Multivector<T>, m: Multivector<T>) -> Result<Self, GaError> {
        g.same_algebra(&m)?;
        require_pga3(g.algebra())?;
        if !g.odd_part().is_zero() {
            return Err(GaError::OddContent("pose"));
        }
        if !m.is_zero() && m.grade() != Some(2) {
            return Err(GaError::WrongGrade("a bivector momentum"));
        }
        Ok(Self { g, m })
    }

    /// Identity pose with the given momentum coefficients on
    /// `e01, e02, e12, e03, e13, e23`.
    pub fn at_rest_pose(algebra: &Arc<Algebra>, momentum: [T; 6]) -> Result<Self, GaError> {
        let mut m = Multivector::zero(algebra);
        for (b, c) in BIVECTOR_BLADES.iter().zip(momentum) {
            m.set(*b, c);
        }
        Self::new(Multivector::one(algebra), m)
    }

    /// `g M g̃`.
    pub fn space_momentum(&self) -> Multivector<T> {
        self.g.gp(&self.m).gp(&self.g.reverse())
    }

    /// `⟨g g̃⟩₀ − 1`.
    pub fn norm_deviation(&self) -> T {
        self.g.gp(&self.g.reverse()).scalar_part() - T::one()
    }

    fn is_finite(&self) -> bool {
        self.g.coeffs().iter().chain(self.m.coeffs()).all(|c| c.is_finite())
    }

    fn axpy(&self, d: &(Multivector<T>, Multivector<T>), h: T) -> Self {
        Self { g: self.g.add_scaled(&d.0, h), m: self.m.add_scaled(&d.1, h) }
    }
}

/// `(ġ, Ṁ)` at a state.
pub fn derivatives<T: Scalar>(
    state: &BodyState<T>,
    inertia: &InertiaOperator<T>,
) -> Result<(Multivector<T>, Multivector<T>), GaError> {
    state.g.same_algebra(&Multivector::zero(inertia.algebra()))?;
    let v = inertia.velocity(&state.m);
    let g_dot = state.g.gp(&v).scale(-T::lit(0.5));
    let m_dot = v.commutator(&state.m);
    Ok((g_dot, m_dot))
}

/// One classical RK4 step, optionally followed by motor renormalization.
pub fn rk4_step<T: Scalar>(
    state: &BodyState<T>,
    inertia: &InertiaOperator<T>,
    h: T,
    renormalize: bool,
) -> Result<BodyState<T>, GaError> {
    if !(h.is_finite() && h > T::zero()) {
        return Err(GaError::BadStep);
    }
    let half = h * T::lit(0.5);
    let k1 = derivatives(state, inertia)?;
    let k2 = derivatives(&state.axpy(&k1, half), inertia)?;
    let k3 = derivatives(&state.axpy(&k2, half), inertia)?;
    let k4 = derivatives(&state.axpy(&k3, h), inertia)?;
    let w = h / T::lit(6.0);
    let two = T::lit(2.0);
    let g = state.g.add_scaled(&k1.0, w).add_scaled(&k2.0, w * two).add_scaled(&k3.0, w * two).add_scaled(&k4.0, w);
    let m = state.m.add_scaled(&k1.1, w).add_scaled(&k2.1, w * two).add_scaled(&k3.1, w * two).add_scaled(&k4.1, w);
    let next = BodyState { g: if renormalize { normalize_versor(&g)? } else { g }, m };
    if !next.is_finite() {
        return Err(GaError::NonFiniteState { step: 0 });
    }
    Ok(next)
}

/// One recorded step of a trajectory.
#[derive(Clone, Debug)]
pub struct Sample<T: Scalar> {
    pub t: T,
    pub state: BodyState<T>,
    pub energy: T,
    pub space_momentum: Multivector<T>,
}

/// Samples at strictly increasing times.
#[derive(Clone, Debug)]
pub struct Trajectory<T: Scalar> {
    pub samples: Vec<Sample<T>>,
}

fn sample<T: Scalar>(t: T, state: BodyState<T>, inertia: &InertiaOperator<T>) -> Sample<T> {
    let energy = inertia.energy(&inertia.velocity(&state.m));
    let space_momentum = state.space_momentum();
    Sample { t, state, energy, space_momentum }
}

/// Integrates `steps` RK4 steps of size `h`, recording the initial state and
/// every step.
pub fn simulate<T: Scalar>(
    initial: &BodyState<T>,
    inertia: &InertiaOperator<T>,
    h: T,
    steps: usize,
    renormalize: bool,
) -> Result<Trajectory<T>, GaError> {
    let mut samples = Vec::with_capacity(steps + 1);
    samples.push(sample(T::zero(), initial.clone(), inertia));
    let mut state = initial.clone();
    for step in 1..=steps {
        state = rk4_step(&state, inertia, h, renormalize).map_err(|e| match e {
            GaError::NonFiniteState { .. } => GaError::NonFiniteState { step },
            other => other,
        })?;
        let t = h * T::from_usize(step).unwrap();
        samples.push(sample(t, state.clone(), inertia));
    }
    Ok(Trajectory { samples })
}

impl<T: Scalar> Trajectory<T> {
    pub fn first(&self) -> &Sample<T> {
        &self.samples[0]
    }

    pub fn last(&self) -> &Sample<T> {
        &self.samples[self.samples.len() - 1]
    }

    /// Largest `|E(t) − E(0)| / |E(0)|`.
    pub fn max_energy_drift(&self) -> T {
        let e0 = self.first().energy;
        let denom = if e0.is_zero() { T::one() } else { e0.abs() };
        self.samples.iter().fold(T::zero(), |m, s| m.max((s.energy - e0).abs() / denom))
    }

    /// Largest coefficient norm of `g M g̃ (t) − g M g̃ (0)`.
    pub fn max_momentum_drift(&self) -> T {
        let m0 = &self.first().space_momentum;
        self.samples.iter().fold(T::zero(), |m, s| m.max(s.space_momentum.sub(m0).coeff_norm()))
    }

    /// `t,g0..g7,m0..m5,energy,ms0..ms5` with 17 significant digits.
    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        let mut header = vec!["t".to_string()];
        header.extend((0..8).map(|i| format!("g{i}")));
        header.extend((0..6).map(|i| format!("m{i}")));
        header.push("energy".into());
        header.extend((0..6).map(|i| format!("ms{i}")));
        writeln!(w, "{}", header.join(","))?;
        for s in &self.samples {
            let mut row = vec![s.t];
            row.extend(EVEN_BLADES.iter().map(|b| s.state.g.get(*b)));
            row.extend(BIVECTOR_BLADES.iter().map(|b| s.state.m.get(*b)));
            row.push(s.energy);
            row.extend(BIVECTOR_BLADES.iter().map(|b| s.space_momentum.get(*b)));
            let cells: Vec<String> = row.iter().map(|v| format!("{:.16e}", v.to_f64().unwrap_or(f64::NAN))).collect();
            writeln!(w, "{}", cells.join(","))?;
        }
        Ok(())
    }
}

/// Model whose state-space dimensions are audited.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Model {
    Pga,
    Cga,
}

/// Dimensions of the integration state versus the valid solutions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolutionSpace {
    pub bivector_dim: usize,
    pub even_dim: usize,
    pub valid_dim: usize,
    pub codim: usize,
}

/// Counts blades of the built 3D algebras. Valid rigid-body states are a
/// pose and a momentum, each of the dimension of the euclidean motion
/// group, i.e. twice the bivector count of 3D PGA.
pub fn solution_space_dims(model: Model) -> Result<SolutionSpace, GaError> {
    let alg = match model {
        Model::Pga => Algebra::pga(3)?,
        Model::Cga => Algebra::cga(3)?,
    };
    let bivector_dim = alg.blades_of_grade(2).count();
    let even_dim = alg.basis().iter().filter(|b| b.grade() % 2 == 0).count();
    let valid_dim = 2 * Algebra::pga(3)?.blades_of_grade(2).count();
    Ok(SolutionSpace { bivector_dim, even_dim, valid_dim, codim: bivector_dim + even_dim - valid_dim })
}
