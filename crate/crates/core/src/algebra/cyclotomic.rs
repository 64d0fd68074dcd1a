//! Prime cyclotomic fields `Q(zeta_P)`.
//!
//! Elements are stored in the power basis `1, zeta, ..., zeta^(P-2)`; the
//! relation `1 + zeta + ... + zeta^(P-1) = 0` is applied after every product.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::field::{fmt_rational, is_negative_rational, Field, FieldId, Rational};
use super::univariate::UniPoly;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic<const P: u32> {
    coords: Vec<Rational>,
}

impl<const P: u32> Cyclotomic<P> {
    const DIM: usize = P as usize - 1;

    pub fn from_coords(mut coords: Vec<Rational>) -> Self {
        assert!(
            coords.len() <= Self::DIM,
            "too many coordinates for Q(zeta_{P})"
        );
        coords.resize(Self::DIM, Rational::zero());
        Cyclotomic { coords }
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// `zeta^k` for any integer `k`.
    pub fn zeta_pow(k: i64) -> Self {
        let mut v = vec![Rational::zero(); P as usize];
        v[k.rem_euclid(P as i64) as usize] = Rational::one();
        Self::reduce(v)
    }

    /// Folds a coefficient vector modulo `t^P - 1` and then modulo the
    /// cyclotomic polynomial.
    fn reduce(mut v: Vec<Rational>) -> Self {
        let p = P as usize;
        for i in p..v.len() {
            let c = std::mem::take(&mut v[i]);
            v[i % p] += c;
        }
        v.resize(p, Rational::zero());
        let top = v.pop().unwrap();
        if !top.is_zero() {
            for c in v.iter_mut() {
                *c -= &top;
            }
        }
        Cyclotomic { coords: v }
    }

    /// Image under the automorphism `zeta -> zeta^k`.
    pub fn conjugate(&self, k: u32) -> Self {
        let p = P as usize;
        let mut v = vec![Rational::zero(); p];
        for (i, c) in self.coords.iter().enumerate() {
            if !c.is_zero() {
                v[(i * k as usize) % p] += c;
            }
        }
        Self::reduce(v)
    }

    /// Field norm down to Q.
    pub fn norm(&self) -> Rational {
        let mut acc = self.clone();
        for k in 2..P {
            acc = acc * &self.conjugate(k);
        }
        acc.coords[0].clone()
    }
}

impl<const P: u32> Zero for Cyclotomic<P> {
    fn zero() -> Self {
        Cyclotomic {
            coords: vec![Rational::zero(); Self::DIM],
        }
    }

    fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
}

impl<const P: u32> One for Cyclotomic<P> {
    fn one() -> Self {
        Self::from_rational(Rational::one())
    }
}

impl<'a, const P: u32> Add<&'a Self> for Cyclotomic<P> {
    type Output = Self;
    fn add(mut self, rhs: &'a Self) -> Self {
        for (a, b) in self.coords.iter_mut().zip(&rhs.coords) {
            *a += b;
        }
        self
    }
}

impl<'a, const P: u32> Sub<&'a Self> for Cyclotomic<P> {
    type Output = Self;
    fn sub(mut self, rhs: &'a Self) -> Self {
        for (a, b) in self.coords.iter_mut().zip(&rhs.coords) {
            *a -= b;
        }
        self
    }
}

impl<'a, const P: u32> Mul<&'a Self> for Cyclotomic<P> {
    type Output = Self;
    fn mul(self, rhs: &'a Self) -> Self {
        let p = P as usize;
        let mut v = vec![Rational::zero(); p];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coords.iter().enumerate() {
                if !b.is_zero() {
                    v[(i + j) % p] += a * b;
                }
            }
        }
        Self::reduce(v)
    }
}

impl<const P: u32> Add for Cyclotomic<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self + &rhs
    }
}

impl<const P: u32> Sub for Cyclotomic<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self - &rhs
    }
}

impl<const P: u32> Mul for Cyclotomic<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self * &rhs
    }
}

impl<const P: u32> Div for Cyclotomic<P> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * &rhs.inv().expect("division by zero in cyclotomic field")
    }
}

impl<const P: u32> Neg for Cyclotomic<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Cyclotomic {
            coords: self.coords.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<const P: u32> Field for Cyclotomic<P> {
    fn field_id() -> FieldId {
        FieldId::Cyclotomic(P)
    }

    fn from_rational(q: Rational) -> Self {
        let mut coords = vec![Rational::zero(); Self::DIM];
        coords[0] = q;
        Cyclotomic { coords }
    }

    fn to_rational(&self) -> Option<Rational> {
        self.coords[1..]
            .iter()
            .all(|c| c.is_zero())
            .then(|| self.coords[0].clone())
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let mut cof = Self::one();
        for k in 2..P {
            cof = cof * &self.conjugate(k);
        }
        let n = (self.clone() * &cof).coords[0].clone();
        Some(cof * &Self::from_rational(n.recip()))
    }

    fn generator() -> Option<Self> {
        Some(Self::zeta_pow(1))
    }

    fn factor_squarefree(f: &UniPoly<Self>) -> Vec<UniPoly<Self>> {
        super::trager::factor_squarefree_cyclotomic(f)
    }
}

impl<const P: u32> fmt::Display for Cyclotomic<P> {
    /// Polynomial in `zeta`, constant term first: `1-zeta`, `-2*zeta^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = is_negative_rational(c);
            let abs = if neg { -c.clone() } else { c.clone() };
            if neg {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            let mono = match i {
                0 => None,
                1 => Some("zeta".to_string()),
                _ => Some(format!("zeta^{i}")),
            };
            match (mono, abs.is_one()) {
                (None, _) => write!(f, "{}", fmt_rational(&abs))?,
                (Some(m), true) => write!(f, "{m}")?,
                (Some(m), false) => write!(f, "{}*{m}", fmt_rational(&abs))?,
            }
        }
        Ok(())
    }
}

impl<const P: u32> fmt::Debug for Cyclotomic<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::rat;

    type K5 = Cyclotomic<5>;
    type K3 = Cyclotomic<3>;

    #[test]
    fn zeta_has_order_p() {
        let z = K5::generator().unwrap();
        assert_eq!(z.powu(5), K5::one());
        assert_ne!(z.powu(1), K5::one());
        let w = K3::generator().unwrap();
        assert_eq!(w.clone() * &w + &w + &K3::one(), K3::zero());
    }

    #[test]
    fn inverse_round_trip() {
        let a = K5::from_coords(vec![rat(1), rat(-2), rat(0), rat(3)]);
        let b = a.inv().unwrap();
        assert_eq!(a * &b, K5::one());
    }

    #[test]
    fn norm_of_one_minus_zeta_is_p() {
        let a = K5::one() - &K5::zeta_pow(1);
        assert_eq!(a.norm(), rat(5));
        let b = K3::one() - &K3::zeta_pow(1);
        assert_eq!(b.norm(), rat(3));
    }

    #[test]
    fn display() {
        let a = K5::one() - &K5::zeta_pow(1);
        assert_eq!(a.to_string(), "1-zeta");
        assert_eq!(K5::zeta_pow(4).to_string(), "-1-zeta-zeta^2-zeta^3");
        assert_eq!(K3::from_rational(rat(2)).to_string(), "2");
    }
}
