//! Numeric traits the rest of the crate is generic over.
//!
//! Everything that only needs ring/field operations (matrices, polynomials)
//! is written against [`Scalar`]. Code that compares, sorts or hashes values
//! (root systems, alcoves, ideals) requires [`Exact`], which rules out floats.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{FromPrimitive, Num, Signed};

/// A signed numeric type usable as matrix or polynomial coefficients.
pub trait Scalar: Clone + Debug + PartialOrd + Num + Signed + FromPrimitive {
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer not representable in scalar type")
    }
}

impl<T: Clone + Debug + PartialOrd + Num + Signed + FromPrimitive> Scalar for T {}

/// A scalar with exact equality and a total order, e.g. a rational type.
pub trait Exact: Scalar + Ord + Hash + Display + Send + Sync + 'static {
    /// Build `num/den` exactly.
    fn ratio(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }

    /// `true` if the value is an integer.
    fn is_integral(&self) -> bool;

    /// The value as `i64` when it is an integer that fits.
    fn to_int(&self) -> Option<i64>;
}

impl Exact for num_rational::Ratio<i64> {
    fn is_integral(&self) -> bool {
        self.is_integer()
    }
    fn to_int(&self) -> Option<i64> {
        self.is_integer().then(|| self.to_integer())
    }
}

impl Exact for num_rational::BigRational {
    fn is_integral(&self) -> bool {
        self.is_integer()
    }
    fn to_int(&self) -> Option<i64> {
        use num_traits::ToPrimitive;
        if self.is_integer() {
            self.to_integer().to_i64()
        } else {
            None
        }
    }
}
