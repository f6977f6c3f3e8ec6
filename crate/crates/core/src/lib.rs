//! Euclidean projective geometric algebra.
//!
//! The kernel ([`Algebra`], [`Multivector`]) handles any signature `(p,q,r)`
//! with up to six generators. On top of it:
//!
//! * [`duality`]: the metric-free dual coordinate map `J`, join and meet,
//!   and polarity (multiplication by the pseudoscalar);
//! * [`pga`]: points, lines and planes of `P(R*_{n,0,1})` for `n = 2, 3`,
//!   norms, distances, angles and the perpendicular-line construction;
//! * [`motor`]: reflections, versor sandwiches, screw exponential and
//!   logarithm, and the isomorphism with the biquaternions;
//! * [`dynamics`]: force-free rigid bodies integrated in the even
//!   subalgebra with RK4 and renormalization;
//! * [`cga`]: a small conformal model used to cross-check distances and
//!   flat representations;
//! * [`dsl`]: a tiny expression language over multivectors.
//!
//! All numeric code is generic over [`Scalar`] (`f32` or `f64`); the aliases
//! below fix the common choice.

pub mod algebra;
pub mod biquaternion;
pub mod cga;
pub mod check;
pub mod dsl;
pub mod duality;
pub mod dynamics;
pub mod error;
pub mod motor;
pub mod multivector;
pub mod pga;
pub mod scalar;
mod text;

pub use algebra::{Algebra, BladeIndex, Orientation, Signature, MAX_GENERATORS};
pub use biquaternion::{Biquaternion, Quaternion};
pub use cga::{Cga, CgaPoint};
pub use error::GaError;
pub use motor::{Parity, ScrewGenerator, Versor};
pub use multivector::Multivector;
pub use pga::{EuclideanFlat, FlatKind, Pga};
pub use scalar::Scalar;

pub type Multivector64 = Multivector<f64>;
pub type Multivector32 = Multivector<f32>;
pub type Versor64 = Versor<f64>;
pub type Versor32 = Versor<f32>;
pub type Biquaternion64 = Biquaternion<f64>;
pub type EuclideanFlat64 = EuclideanFlat<f64>;
pub type BodyState64 = dynamics::BodyState<f64>;
pub type InertiaOperator64 = dynamics::InertiaOperator<f64>;
