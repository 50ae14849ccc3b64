//! Exact computations with root systems, finite and affine Weyl groups, and the
//! abelian ideals of a Borel subalgebra.
//!
//! The core is generic over an exact scalar type ([`scalar::Exact`]); the
//! aliases at the crate root fix it to arbitrary-precision rationals.

pub mod affine;
pub mod cartan;
pub mod error;
pub mod group;
pub mod hasse;
pub mod ideals;
pub mod linalg;
pub mod poly;
pub mod reference;
pub mod report;
pub mod root_system;
pub mod scalar;
pub mod weyl;
pub mod young;

pub use cartan::{Family, SimpleType};
pub use error::{Error, Result};
pub use linalg::Matrix;
pub use poly::{IntPoly, Poly};
pub use root_system::{Root, RootSystem, RootSystem64, RootSystemQ, WeightVector};
pub use scalar::{Exact, Scalar};

/// Default exact scalar.
pub type Rational = num_rational::BigRational;
/// Weight vectors over [`Rational`].
pub type WeightVectorQ = WeightVector<Rational>;
