//! Weighted polynomial rings, diagonal cyclic actions on them, and
//! hypersurfaces in weighted projective space.

mod invariants;
mod quotient;
mod smooth;

use serde::{Deserialize, Serialize};

use crate::algebra::{parse_equation, Field, Monomial, MultiPoly, VarSet, Vars};
use crate::error::{Error, Result};

pub use invariants::{invariant_generators, InvariantGenerators};
pub use quotient::{quotient_presentation, QuotientPresentation};
pub use smooth::{
    coordinate_automorphisms_a1, dual_actions_check, jacobian_smooth, DualActionsReport,
    SmoothnessReport,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedRing {
    vars: Vars,
}

impl WeightedRing {
    pub fn new<S: AsRef<str>>(names: &[S], weights: &[u32]) -> Result<Self> {
        if names.len() != weights.len() {
            return Err(Error::Config("one weight per variable".into()));
        }
        Ok(WeightedRing {
            vars: VarSet::weighted(names, weights)?,
        })
    }

    /// Variables named `x, y, z, w` (then `x4, x5, ...`) with the given weights.
    pub fn with_weights(weights: &[u32]) -> Result<Self> {
        let names: Vec<String> = (0..weights.len())
            .map(|i| {
                ["x", "y", "z", "w"]
                    .get(i)
                    .map_or(format!("x{i}"), |s| s.to_string())
            })
            .collect();
        Self::new(&names, weights)
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn weights(&self) -> &[u32] {
        self.vars.weights()
    }

    pub fn names(&self) -> &[String] {
        self.vars.names()
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }
}

/// `x_i -> zeta_n^{e_i} x_i` for a primitive `n`-th root of unity, `n` prime.
///
/// Exponents are stored normalized: on weighted projective space the
/// actions `e` and `e + c w` agree, and the stored representative has the
/// fewest nonzero exponents, then is lexicographically smallest.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DiagonalAction {
    order: u32,
    exponents: Vec<u32>,
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

impl DiagonalAction {
    /// The action as given (exponents reduced mod `order`), without
    /// projective normalization.
    pub fn new(order: u32, exponents: &[i64]) -> Result<Self> {
        if !is_prime(order) {
            return Err(Error::Config(format!("action order {order} is not prime")));
        }
        let exponents = exponents
            .iter()
            .map(|e| e.rem_euclid(order as i64) as u32)
            .collect();
        Ok(DiagonalAction { order, exponents })
    }

    /// Normalized representative of the projective action.
    pub fn normalized(&self, weights: &[u32]) -> Self {
        let n = self.order;
        (0..n)
            .map(|c| DiagonalAction {
                order: n,
                exponents: self
                    .exponents
                    .iter()
                    .zip(weights)
                    .map(|(e, w)| (e + c * w) % n)
                    .collect(),
            })
            .min_by_key(|a| {
                (
                    a.exponents.iter().filter(|&&e| e != 0).count(),
                    a.exponents.clone(),
                )
            })
            .unwrap()
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn is_trivial(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// Character of a monomial: the power of `zeta` it is multiplied by.
    pub fn character(&self, m: &[u32]) -> u32 {
        (m.iter()
            .zip(&self.exponents)
            .map(|(a, e)| (*a as u64) * (*e as u64))
            .sum::<u64>()
            % self.order as u64) as u32
    }

    /// Indices of the variables that are moved.
    pub fn moved(&self) -> Vec<usize> {
        (0..self.exponents.len())
            .filter(|&i| self.exponents[i] != 0)
            .collect()
    }
}

/// A weighted-homogeneous hypersurface, optionally with a diagonal action
/// under which its equation is an eigenvector.
#[derive(Debug, Clone, PartialEq)]
pub struct HypersurfaceModel<F: Field> {
    ring: WeightedRing,
    equation: MultiPoly<F>,
    action: Option<DiagonalAction>,
}

/// JSON form `{ "weights": [...], "variables": [...], "equation": "...",
/// "action": { "order": n, "exponents": [...] } }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelSpec {
    pub weights: Vec<u32>,
    #[serde(default)]
    pub variables: Option<Vec<String>>,
    pub equation: String,
    #[serde(default)]
    pub action: Option<ActionSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionSpec {
    pub order: u32,
    pub exponents: Vec<i64>,
}

impl<F: Field> HypersurfaceModel<F> {
    pub fn new(
        ring: WeightedRing,
        equation: MultiPoly<F>,
        action: Option<DiagonalAction>,
    ) -> Result<Self> {
        let equation = equation.embed_by_name(ring.vars())?;
        if equation.is_zero() || equation.is_constant() {
            return Err(Error::InvalidCurve(
                "hypersurface equation must be nonconstant".into(),
            ));
        }
        if !equation.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        if let Some(a) = &action {
            if a.exponents.len() != ring.len() {
                return Err(Error::Config("one exponent per variable".into()));
            }
            let mut chars = equation.terms().map(|(m, _)| a.character(m));
            let first = chars.next().unwrap();
            if chars.any(|c| c != first) {
                return Err(Error::Precondition(
                    "equation is not an eigenvector of the action".into(),
                ));
            }
        }
        let action = action.map(|a| a.normalized(ring.weights()));
        Ok(HypersurfaceModel {
            ring,
            equation,
            action,
        })
    }

    pub fn from_spec(spec: &ModelSpec) -> Result<Self> {
        let ring = match &spec.variables {
            Some(names) => WeightedRing::new(names, &spec.weights)?,
            None => WeightedRing::with_weights(&spec.weights)?,
        };
        let equation = parse_equation(&spec.equation, ring.vars())?;
        let action = spec
            .action
            .as_ref()
            .map(|a| DiagonalAction::new(a.order, &a.exponents))
            .transpose()?;
        Self::new(ring, equation, action)
    }

    pub fn parse(weights: &[u32], equation: &str, action: Option<(u32, &[i64])>) -> Result<Self> {
        let ring = WeightedRing::with_weights(weights)?;
        let eq = parse_equation(equation, ring.vars())?;
        let action = action.map(|(n, e)| DiagonalAction::new(n, e)).transpose()?;
        Self::new(ring, eq, action)
    }

    pub fn ring(&self) -> &WeightedRing {
        &self.ring
    }

    pub fn equation(&self) -> &MultiPoly<F> {
        &self.equation
    }

    pub fn action(&self) -> Option<&DiagonalAction> {
        self.action.as_ref()
    }

    /// Weighted degree of the equation.
    pub fn degree(&self) -> u64 {
        self.equation.degree().unwrap()
    }
}

/// `x^2*y^5` style text for a monomial over the ring's variable names.
pub fn format_monomial(names: &[String], m: &Monomial) -> String {
    let parts: Vec<String> = m
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                names[i].clone()
            } else {
                format!("{}^{e}", names[i])
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;

    #[test]
    fn actions_normalize_projectively() {
        // on P^3, (0,2,2,2) mod 3 is the same as (1,0,0,0)
        let a = DiagonalAction::new(3, &[0, 2, 2, 2])
            .unwrap()
            .normalized(&[1, 1, 1, 1]);
        assert_eq!(a.exponents(), &[1, 0, 0, 0]);
        assert!(DiagonalAction::new(4, &[1]).is_err());
        let t = DiagonalAction::new(5, &[5, 10]).unwrap();
        assert!(t.is_trivial());
    }

    #[test]
    fn models_check_the_eigenvector_condition() {
        let m = HypersurfaceModel::<Rational>::parse(
            &[1, 1, 2, 3],
            "x*y^5 = x^6+z^3+w^2",
            Some((5, &[0, 1, 0, 0])),
        )
        .unwrap();
        assert_eq!(m.degree(), 6);
        assert_eq!(m.action().unwrap().exponents(), &[0, 1, 0, 0]);
        assert!(HypersurfaceModel::<Rational>::parse(
            &[1, 1, 2, 3],
            "x*y^5+y^6+z^3+w^2",
            Some((5, &[0, 1, 0, 0]))
        )
        .is_err());
        assert!(HypersurfaceModel::<Rational>::parse(&[1, 1, 2, 3], "x^2+w", None).is_err());
    }

    #[test]
    fn model_json_round_trip() {
        let spec: ModelSpec = serde_json::from_str(
            r#"{"weights":[1,1,2,3],"equation":"x^6+x*y^5+z^3+w^2","action":{"order":3,"exponents":[0,0,1,0]}}"#,
        )
        .unwrap();
        let m = HypersurfaceModel::<Rational>::from_spec(&spec).unwrap();
        assert_eq!(m.ring().names(), &["x", "y", "z", "w"]);
        assert_eq!(
            format_monomial(m.ring().names(), &vec![1, 5, 0, 0]),
            "x*y^5"
        );
    }
}
