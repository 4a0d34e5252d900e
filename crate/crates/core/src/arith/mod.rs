//! Exact scalar arithmetic.
//!
//! Every solver in the crate is generic over [`Field`]. Three instances are
//! provided: [`Rational`] (ℚ), [`QuadExt`] (ℚ(√d)) and [`RatFunc`] (ℚ(t)).
//! Polynomials over any of them live in [`Poly`].

mod poly;
mod quad;
mod ratfunc;
mod rational;
mod scalar;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub use poly::Poly;
pub use quad::{is_squarefree_int, QuadExt, QuadField};
pub use ratfunc::RatFunc;
pub use rational::Rational;
pub use scalar::{parse_quad, parse_rational, ParsedScalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("mixed radicands: sqrt({0}) and sqrt({1})")]
    MixedRadicand(u64, u64),
    #[error("radicand {0} is not a squarefree integer greater than 1")]
    BadRadicand(u64),
    #[error("cannot parse scalar {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

impl ArithError {
    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        ArithError::Parse {
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}

/// A field with exact, canonical element representations.
///
/// Equality is structural; implementations keep every value normalized so
/// that `==` coincides with mathematical equality.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Result<Self, ArithError>;
    fn from_rational(q: Rational) -> Self;

    /// Sign in the real embedding, or `None` when the field carries no order.
    fn sign(&self) -> Option<Ordering>;

    /// The value as a rational number, if it is one.
    fn to_rational(&self) -> Option<Rational>;

    /// Approximate real value, for drawing only.
    fn to_f64(&self) -> Option<f64>;

    fn checked_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        Ok(self.clone() * &rhs.inv()?)
    }

    fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from(n))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn is_positive(&self) -> bool {
        self.sign() == Some(Ordering::Greater)
    }
}

/// A field with a total order compatible with its arithmetic.
pub trait OrderedField: Field {
    fn cmp_exact(&self, other: &Self) -> Ordering {
        (self.clone() - other)
            .sign()
            .expect("ordered field element without a sign")
    }

    fn max_exact(self, other: Self) -> Self {
        if self.cmp_exact(&other) == Ordering::Less {
            other
        } else {
            self
        }
    }
}

impl OrderedField for Rational {}
impl OrderedField for QuadExt {}

/// Implements the owned/borrowed operator matrix for a type that already
/// provides `fn add_ref(&self, &Self) -> Self` style methods.
macro_rules! forward_binops {
    ($ty:ty) => {
        forward_binops!(@op $ty, Add, add, add_ref);
        forward_binops!(@op $ty, Sub, sub, sub_ref);
        forward_binops!(@op $ty, Mul, mul, mul_ref);

        impl std::ops::Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                self.neg_ref()
            }
        }
        impl std::ops::Neg for &$ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                self.neg_ref()
            }
        }
    };
    (@op $ty:ty, $tr:ident, $method:ident, $imp:ident) => {
        impl std::ops::$tr<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                self.$imp(&rhs)
            }
        }
        impl<'a> std::ops::$tr<&'a $ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &'a $ty) -> $ty {
                self.$imp(rhs)
            }
        }
        impl<'a> std::ops::$tr<$ty> for &'a $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                self.$imp(&rhs)
            }
        }
        impl<'a, 'b> std::ops::$tr<&'b $ty> for &'a $ty {
            type Output = $ty;
            fn $method(self, rhs: &'b $ty) -> $ty {
                self.$imp(rhs)
            }
        }
    };
}
pub(crate) use forward_binops;
