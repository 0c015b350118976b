//! Exact scalar arithmetic: rationals, cyclotomic fields `Q(zeta_m)`, and
//! rational functions in formal parameters over these.
//!
//! Every computation in this crate runs over one of these scalar domains via
//! the [`Scalar`] trait; there is no floating point anywhere.

mod cyclotomic;
mod param;
mod rational;

pub use cyclotomic::{cyclo_reduce, cyclotomic_polynomial, Cyclotomic};
pub use param::{MPoly, ParamScalar};
pub use rational::{parse_rational, rat, ratio, Rational};

use std::fmt::{Debug, Display};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes under the given assignment")]
    DenominatorVanishes,
    #[error("assignment missing for symbol {0}")]
    MissingSymbol(usize),
}

/// Field operations shared by every exact scalar domain in the crate.
///
/// Implementors: [`Rational`] (= `Q`), [`Cyclotomic`] (= `Q(zeta_m)`) and
/// [`ParamScalar`] (rational functions in formal symbols over a cyclotomic
/// field). All values are immutable; operations return fresh values.
pub trait Scalar: Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; `Err` on zero.
    fn inv(&self) -> Result<Self, FieldError>;
    fn from_rational(q: &Rational) -> Self;
    fn from_cyclotomic(z: &Cyclotomic) -> Self;
    /// The value as a rational number, if it is one.
    fn as_rational(&self) -> Option<Rational>;

    fn div(&self, other: &Self) -> Result<Self, FieldError> {
        Ok(self.mul(&other.inv()?))
    }
    fn from_int(n: i64) -> Self {
        Self::from_rational(&rat(n))
    }
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        rat(0)
    }
    fn one() -> Self {
        rat(1)
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self, FieldError> {
        if Scalar::is_zero(self) {
            Err(FieldError::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn from_cyclotomic(z: &Cyclotomic) -> Self {
        z.as_rational()
            .expect("cyclotomic value is not rational; cannot lower to Q")
    }
    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}
