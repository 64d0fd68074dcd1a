use crate::algebra::{Field, MultiPoly, VarSet};
use crate::error::{Error, Result};

use super::{HypersurfaceModel, WeightedRing};

/// `X / (Z/n)` as a hypersurface (or, when the relation eliminates the new
/// generator, the whole weighted projective space of the fixed variables).
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientPresentation<F: Field> {
    pub ring: WeightedRing,
    /// `None` when the quotient is the whole ambient space.
    pub relation: Option<MultiPoly<F>>,
    /// Name of the new generator `v^n`.
    pub new_generator: String,
    /// Index of the moving variable `v` in the original ring.
    pub moving: usize,
}

impl<F: Field> QuotientPresentation<F> {
    /// Substitutes `u = v^n` back into the relation, giving a polynomial in
    /// the original ring.
    pub fn pull_back(&self, original: &WeightedRing, order: u32) -> Option<MultiPoly<F>> {
        let rel = self.relation.as_ref()?;
        let images: Vec<MultiPoly<F>> = self
            .ring
            .names()
            .iter()
            .map(|name| {
                if *name == self.new_generator {
                    MultiPoly::var(original.vars(), self.moving).powu(order)
                } else {
                    MultiPoly::var_named(original.vars(), name).expect("kept variable")
                }
            })
            .collect();
        Some(rel.substitute(&images))
    }
}

/// Handles one moving variable `v` whose exponents in the equation are all
/// multiples of the order `n`. With `u = v^n` the equation becomes linear in
/// `u`. A constant coefficient eliminates `u` (the pure power case
/// `v^n = F(others)`); a monomial coefficient keeps the relation
/// `m u = F(others)` in the ring of the others plus `u`.
pub fn quotient_presentation<F: Field>(
    model: &HypersurfaceModel<F>,
) -> Result<QuotientPresentation<F>> {
    let action = model
        .action()
        .ok_or_else(|| Error::Precondition("model has no action".into()))?;
    let moved = action.moved();
    let v = match moved.as_slice() {
        [v] => *v,
        [] => return Err(Error::Unsupported("trivial action".into())),
        _ => {
            return Err(Error::Unsupported(
                "more than one moving variable after normalization".into(),
            ))
        }
    };
    let n = action.order();
    let f = model.equation();
    if f.terms().any(|(m, _)| m[v] % n != 0) {
        return Err(Error::Unsupported(
            "the moving variable occurs to powers not divisible by the order".into(),
        ));
    }
    let coeffs = f.coeffs_in(v);
    // coeffs[k] is the coefficient of v^k; only k = 0 and k = n may occur
    if coeffs.len() != n as usize + 1 {
        return Err(Error::Unsupported(
            "equation is not linear in the invariant v^n".into(),
        ));
    }
    let ring = model.ring();
    let others: Vec<usize> = (0..ring.len()).filter(|&i| i != v).collect();
    let lead = &coeffs[n as usize];
    let rest = &coeffs[0];
    let sub_names: Vec<String> = others.iter().map(|&i| ring.names()[i].clone()).collect();
    let sub_weights: Vec<u32> = others.iter().map(|&i| ring.weights()[i]).collect();
    let mut new_name = "u".to_string();
    while ring.names().contains(&new_name) {
        new_name.push('\'');
    }
    if lead.is_constant() {
        let ring = WeightedRing::new(&sub_names, &sub_weights)?;
        return Ok(QuotientPresentation {
            ring,
            relation: None,
            new_generator: new_name,
            moving: v,
        });
    }
    if lead.num_terms() != 1 {
        return Err(Error::Unsupported(
            "the coefficient of v^n is not a monomial".into(),
        ));
    }
    let mut names = sub_names.clone();
    names.push(new_name.clone());
    let mut weights = sub_weights;
    weights.push(n * ring.weights()[v]);
    let new_ring = WeightedRing::new(&names, &weights)?;
    let sub_vars = VarSet::new(&sub_names);
    let project = |p: &MultiPoly<F>| -> MultiPoly<F> {
        // drop the (absent) moving variable, then embed by name
        let q = MultiPoly::from_terms(
            &sub_vars,
            p.terms()
                .map(|(m, c)| (others.iter().map(|&i| m[i]).collect(), c.clone())),
        );
        q.embed_by_name(new_ring.vars()).expect("subset of names")
    };
    let u = MultiPoly::var(new_ring.vars(), names.len() - 1);
    let relation = &(&project(lead) * &u) + &project(rest);
    Ok(QuotientPresentation {
        ring: new_ring,
        relation: Some(relation),
        new_generator: new_name,
        moving: v,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_equation, Rational};
    use crate::weighted::HypersurfaceModel;

    fn x0(action: (u32, &[i64])) -> HypersurfaceModel<Rational> {
        HypersurfaceModel::parse(&[1, 1, 2, 3], "x^6+x*y^5+z^3+w^2", Some(action)).unwrap()
    }

    #[test]
    fn pure_power_quotient_is_weighted_plane() {
        let q = quotient_presentation(&x0((3, &[0, 0, 1, 0]))).unwrap();
        assert_eq!(q.ring.weights(), &[1, 1, 3]);
        assert_eq!(q.ring.names(), &["x", "y", "w"]);
        assert!(q.relation.is_none());
    }

    #[test]
    fn cubic_surface_mod_three_is_the_plane() {
        let m = HypersurfaceModel::<Rational>::parse(
            &[1, 1, 1, 1],
            "x^3 = y*z*w+y^3+z^3+w^3",
            Some((3, &[1, 0, 0, 0])),
        )
        .unwrap();
        let q = quotient_presentation(&m).unwrap();
        assert_eq!(q.ring.weights(), &[1, 1, 1]);
        assert!(q.relation.is_none());
    }

    #[test]
    fn xu_pattern_keeps_a_relation() {
        let model = x0((5, &[0, 1, 0, 0]));
        let q = quotient_presentation(&model).unwrap();
        assert_eq!(q.ring.names(), &["x", "z", "w", "u"]);
        assert_eq!(q.ring.weights(), &[1, 2, 3, 5]);
        let rel = q.relation.clone().unwrap();
        let expected = parse_equation::<Rational>("x*u = -(x^6+z^3+w^2)", q.ring.vars()).unwrap();
        assert_eq!(rel, expected);
        assert_eq!(q.pull_back(model.ring(), 5).unwrap(), *model.equation());
    }

    #[test]
    fn other_shapes_are_unsupported() {
        // y^10 and y^5 both occur: not linear in u
        let m = HypersurfaceModel::<Rational>::parse(
            &[1, 1, 2, 3],
            "y^10+x*y^5*z^2+w^2*z^2+x^10",
            Some((5, &[0, 1, 0, 0])),
        )
        .unwrap();
        assert!(matches!(
            quotient_presentation(&m),
            Err(Error::Unsupported(_))
        ));
        let m = HypersurfaceModel::<Rational>::parse(
            &[1, 1, 1, 1],
            "x^3+y^3+z^3+w^3",
            Some((3, &[1, 1, 0, 0])),
        )
        .unwrap();
        assert!(matches!(
            quotient_presentation(&m),
            Err(Error::Unsupported(_))
        ));
        let m =
            HypersurfaceModel::<Rational>::parse(&[1, 1, 1, 1], "x^3+y^3+z^3+w^3", None).unwrap();
        assert!(quotient_presentation(&m).is_err());
    }
}
