//! Exact coefficient fields.
//!
//! Every algorithm in the crate is generic over [`Field`]. Two families of
//! implementations exist: the rationals ([`Rational`], a `BigRational`) and
//! the prime cyclotomic fields [`Cyclotomic<P>`](super::Cyclotomic). The field
//! is part of the type, so scalars of `Q(zeta_3)` and `Q(zeta_5)` can never be
//! combined by accident.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::univariate::UniPoly;

pub type Rational = BigRational;

/// Identifies a coefficient field at runtime (for reports and CLI dispatch).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum FieldId {
    Rational,
    Cyclotomic(u32),
}

impl Display for FieldId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldId::Rational => write!(f, "Q"),
            FieldId::Cyclotomic(p) => write!(f, "Q(zeta_{p})"),
        }
    }
}

pub trait Field:
    Clone
    + PartialEq
    + Eq
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn field_id() -> FieldId;

    fn from_rational(q: Rational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    /// `Some(q)` when the element lies in the prime field.
    fn to_rational(&self) -> Option<Rational>;

    fn inv(&self) -> Option<Self>;

    /// A primitive root of unity generating the field over Q, if any.
    fn generator() -> Option<Self>;

    /// Splits a squarefree univariate polynomial of positive degree into
    /// monic irreducible factors over this field.
    fn factor_squarefree(f: &UniPoly<Self>) -> Vec<UniPoly<Self>>;

    /// Whether `Display` output needs parentheses when used as a coefficient.
    fn is_compound(&self) -> bool {
        self.to_rational().is_none()
    }

    fn powu(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * &base;
            }
            base = base.clone() * &base;
            e >>= 1;
        }
        acc
    }
}

impl Field for Rational {
    fn field_id() -> FieldId {
        FieldId::Rational
    }

    fn from_rational(q: Rational) -> Self {
        q
    }

    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn generator() -> Option<Self> {
        None
    }

    fn factor_squarefree(f: &UniPoly<Self>) -> Vec<UniPoly<Self>> {
        super::zassenhaus::factor_squarefree_rational(f)
    }

    fn is_compound(&self) -> bool {
        false
    }
}

#[cfg(test)]
pub(crate) fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[cfg(test)]
pub(crate) fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats a rational the way the polynomial grammar reads it back.
pub(crate) fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub(crate) fn is_negative_rational(q: &Rational) -> bool {
    q.is_negative()
}
