//! Weierstrass normal forms `w^2 = z^3 + A z + B` with coefficients that may
//! depend on parameters.

use crate::algebra::{parse_with_vars, Field, MultiPoly, VarSet, Vars};
use crate::error::{Error, Result};

/// `w^2 = z^3 + A z + B`; `A` and `B` are polynomials in the parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct EllipticModel<F: Field> {
    pub a: MultiPoly<F>,
    pub b: MultiPoly<F>,
}

/// `j = 1728 * 4A^3 / (4A^3 + 27B^2)` as a fraction of parameter polynomials.
#[derive(Debug, Clone, PartialEq)]
pub struct JInvariant<F: Field> {
    pub numerator: MultiPoly<F>,
    pub denominator: MultiPoly<F>,
}

impl<F: Field> JInvariant<F> {
    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// The value when no parameter occurs.
    pub fn value(&self) -> Option<F> {
        if self.numerator.is_constant() && self.denominator.is_constant() {
            Some(self.numerator.constant_term() / self.denominator.constant_term())
        } else {
            None
        }
    }
}

fn c<F: Field>(n: i64, d: i64) -> F {
    F::from_rational(crate::algebra::Rational::new(n.into(), d.into()))
}

impl<F: Field> EllipticModel<F> {
    pub fn params(&self) -> &Vars {
        self.a.vars()
    }

    pub fn discriminant(&self) -> MultiPoly<F> {
        let a3 = self.a.powu(3).scale(&c(4, 1));
        let b2 = self.b.powu(2).scale(&c(27, 1));
        &a3 + &b2
    }

    pub fn j_invariant(&self) -> Result<JInvariant<F>> {
        let den = self.discriminant();
        if den.is_zero() {
            return Err(Error::Degenerate(
                "4A^3 + 27B^2 vanishes identically".into(),
            ));
        }
        Ok(JInvariant {
            numerator: self.a.powu(3).scale(&c(6912, 1)),
            denominator: den,
        })
    }

    /// `A -> u^4 A`, `B -> u^6 B`, the effect of `z -> u^2 z`, `w -> u^3 w`.
    pub fn rescale(&self, u: &F) -> Self {
        EllipticModel {
            a: self.a.scale(&u.powu(4)),
            b: self.b.scale(&u.powu(6)),
        }
    }
}

/// Brings `f(w, z; params) = 0` to Weierstrass form, where `f` is
/// quadratic in `w` with constant leading coefficient, the `w`-linear
/// coefficient has degree at most 1 in `z`, and after completing the square
/// the right side is a cubic in `z` with constant leading coefficient.
/// All other variables are parameters.
pub fn weierstrass_normalize<F: Field>(f: &MultiPoly<F>) -> Result<EllipticModel<F>> {
    let names = f.vars().names();
    let wi = names
        .iter()
        .position(|n| n == "w")
        .ok_or_else(|| Error::UnknownVariable("w".into()))?;
    let zi = names
        .iter()
        .position(|n| n == "z")
        .ok_or_else(|| Error::UnknownVariable("z".into()))?;
    let param_idx: Vec<usize> = (0..names.len()).filter(|&i| i != wi && i != zi).collect();
    let params = VarSet::new(
        &param_idx
            .iter()
            .map(|&i| names[i].as_str())
            .collect::<Vec<_>>(),
    );
    let bad = |msg: &str| Error::Unsupported(format!("not a Weierstrass-reducible model: {msg}"));

    // coefficients in w, then in z, as parameter polynomials
    let in_w = f.coeffs_in(wi);
    if in_w.len() != 3 {
        return Err(bad("expected degree 2 in w"));
    }
    let to_params = |p: &MultiPoly<F>| -> MultiPoly<F> {
        MultiPoly::from_terms(
            &params,
            p.terms()
                .map(|(m, c)| (param_idx.iter().map(|&i| m[i]).collect(), c.clone())),
        )
    };
    let in_z = |p: &MultiPoly<F>| -> Vec<MultiPoly<F>> {
        let mut v: Vec<MultiPoly<F>> = p.coeffs_in(zi).iter().map(&to_params).collect();
        v.resize(4, MultiPoly::zero(&params));
        v
    };
    if in_w[2].uses_var(zi) || !to_params(&in_w[2]).is_constant() {
        return Err(bad("the coefficient of w^2 must be a constant"));
    }
    let a2 = to_params(&in_w[2]).constant_term();
    if in_w[1].degree_in(zi) > 1 || in_w[0].degree_in(zi) > 3 {
        return Err(bad("degrees in z too high"));
    }
    let b = in_z(&in_w[1]);
    let g = in_z(&in_w[0]);
    // a2 w^2 + b w + g = 0  <=>  (w + b / 2a2)^2 = (b^2 - 4 a2 g) / (4 a2^2) = h
    let scale = (a2.clone() * &a2 * &c(4, 1))
        .inv()
        .ok_or(Error::DivisionByZero)?;
    let four_a2 = a2.clone() * &c(4, 1);
    let mut h: Vec<MultiPoly<F>> = Vec::with_capacity(4);
    for k in 0..4 {
        let mut bb = MultiPoly::zero(&params);
        for i in 0..=k.min(1) {
            let j = k - i;
            if j <= 1 {
                bb = &bb + &(&b[i] * &b[j]);
            }
        }
        h.push((&bb - &g[k].scale(&four_a2)).scale(&scale));
    }
    if !h[3].is_constant() || h[3].is_zero() {
        return Err(bad(
            "the cubic term must have a nonzero constant coefficient",
        ));
    }
    let c3 = h[3].constant_term();
    // (c3 w)^2 = Z^3 + c2 Z^2 + c1 c3 Z + c0 c3^2 with Z = c3 z
    let r2 = h[2].clone();
    let r1 = h[1].scale(&c3);
    let r0 = h[0].scale(&(c3.clone() * &c3));
    // Z = X - r2/3
    let third = c::<F>(1, 3);
    let a = &r1 - &r2.powu(2).scale(&third);
    let bcoef = &(&r0 - &(&r1 * &r2).scale(&third)) + &r2.powu(3).scale(&c(2, 27));
    if a.is_zero() && bcoef.is_zero() {
        return Err(Error::Degenerate("cuspidal model (A = B = 0)".into()));
    }
    Ok(EllipticModel { a, b: bcoef })
}

/// Parses a model in `w`, `z` and parameters.
pub fn parse_model<F: Field>(text: &str) -> Result<MultiPoly<F>> {
    parse_with_vars(text, &["w", "z"])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;
    use num_traits::Zero;

    fn normalize(text: &str) -> EllipticModel<Rational> {
        weierstrass_normalize(&parse_model::<Rational>(text).unwrap()).unwrap()
    }

    #[test]
    fn already_normal() {
        let e = normalize("w^2 - z^3 - 1");
        assert!(e.a.is_zero());
        assert_eq!(e.b.constant_term(), Rational::from_integer(1.into()));
        assert_eq!(e.j_invariant().unwrap().value(), Some(Rational::zero()));
        let e = normalize("w^2 - z^3 - z");
        assert_eq!(
            e.j_invariant().unwrap().value(),
            Some(Rational::from_integer(1728.into()))
        );
    }

    #[test]
    fn anticanonical_family_of_x0_has_j_zero() {
        // x = 1, y = t on x^6 + x y^5 + z^3 + w^2
        let e = normalize("w^2 + z^3 + 1 + t^5");
        assert!(e.a.is_zero());
        assert!(!e.b.is_constant());
        assert!(e.j_invariant().unwrap().is_zero());
    }

    #[test]
    fn a_does_not_depend_on_the_parameter() {
        // t^5 = F(1, z, w) for a generic weighted sextic F
        let e = normalize("3*w^2 + (2 + 5*z)*w + 7*z^3 - 2*z^2 + 11*z + 13 - t^5");
        assert!(e.a.is_constant());
        assert!(!e.a.is_zero());
        assert!(!e.b.is_constant());
    }

    #[test]
    fn completing_the_square_and_cube() {
        // w^2 + 2zw - z^3 - z^2 - 1 is (w + z)^2 = z^3 + 2z^2 + 1
        let e = normalize("w^2 + 2*z*w - z^3 - z^2 - 1");
        let direct = normalize("w^2 - z^3 - 2*z^2 - 1");
        assert_eq!(
            e.j_invariant().unwrap().value(),
            direct.j_invariant().unwrap().value()
        );
        assert!(weierstrass_normalize(&parse_model::<Rational>("w^3 - z").unwrap()).is_err());
        assert!(weierstrass_normalize(&parse_model::<Rational>("w^2 - z^3").unwrap()).is_err());
    }

    #[test]
    fn j_is_invariant_under_rescaling() {
        let e = normalize("w^2 - z^3 - 2*z - 5");
        let u = Rational::new(3.into(), 2.into());
        assert_eq!(
            e.rescale(&u).j_invariant().unwrap().value(),
            e.j_invariant().unwrap().value()
        );
    }
}
