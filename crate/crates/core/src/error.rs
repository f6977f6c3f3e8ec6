use thiserror::Error;

use crate::algebra::{BladeIndex, Signature};

/// Errors raised by the algebra kernel and the geometric layers above it.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum GaError {
    #[error("algebra with {dim} generators exceeds the supported maximum of {max}")]
    DimensionTooLarge { dim: usize, max: usize },
    #[error("product table is not associative at ({a}, {b}, {c})")]
    NonAssociative { a: BladeIndex, b: BladeIndex, c: BladeIndex },
    #[error("algebra mismatch: {left} vs {right}")]
    AlgebraMismatch { left: Signature, right: Signature },
    #[error("expected {expected} coefficients, got {got}")]
    CoefficientCount { expected: usize, got: usize },
    #[error("non-finite coefficient at blade {0}")]
    NonFinite(BladeIndex),
    #[error("generator e{index} does not exist in a {dim}-generator algebra")]
    UnknownGenerator { index: usize, dim: usize },
    #[error("generator e{index} repeated in blade name")]
    RepeatedGenerator { index: usize },
    #[error("grade {grade} out of range 0..={max}")]
    GradeOutOfRange { grade: usize, max: usize },
    #[error("cannot parse multivector: {0}")]
    Parse(String),
    #[error("operation requires a {required} algebra, got {got}")]
    WrongAlgebra { required: &'static str, got: Signature },
    #[error("operation requires {0}")]
    WrongGrade(&'static str),
    #[error("zero input to {0}")]
    Zero(&'static str),
    #[error("plane normal is zero")]
    ZeroNormal,
    #[error("expected {expected} coordinates, got {got}")]
    CoordinateCount { expected: usize, got: usize },
    #[error("coincident inputs produce a zero blade")]
    Coincident,
    #[error("meet degenerates: point is incident to the line")]
    MeetDegenerates,
    #[error("input is not normalized ({0})")]
    Unnormalized(&'static str),
    #[error("input is ideal ({0})")]
    Ideal(&'static str),
    #[error("distance routes disagree: join {via_join} vs commutator {via_product}")]
    DistanceMismatch { via_join: f64, via_product: f64 },
    #[error("input is not a blade")]
    NotABlade,
    #[error("logarithm is multivalued at a half-turn (scalar part -1)")]
    Multivalued,
    #[error("odd-grade content present in {0}")]
    OddContent(&'static str),
    #[error("point is not null (square {0})")]
    NotNull(f64),
    #[error("point at infinity has no euclidean coordinates")]
    PointAtInfinity,
    #[error("inertia is singular: entries must be positive and finite")]
    SingularInertia,
    #[error("state became non-finite at step {step}")]
    NonFiniteState { step: usize },
    #[error("step size must be positive and finite")]
    BadStep,
}
