use serde::Serialize;

use crate::algebra::{groebner, Field, HilbertSeries, Ideal, TermOrder};
use crate::error::{Error, Result};

use super::{quotient_presentation, DiagonalAction, HypersurfaceModel};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SmoothnessReport {
    /// No common zero of the equation and its partials off the origin.
    pub smooth: bool,
    /// Projective dimension of the singular locus (`-1` when empty).
    pub singular_locus_dimension: i64,
    pub basis_size: usize,
    pub steps: usize,
}

/// Jacobian criterion on the affine cone. For weighted ambients this is
/// quasi-smoothness.
pub fn jacobian_smooth<F: Field>(
    model: &HypersurfaceModel<F>,
    budget: usize,
) -> Result<SmoothnessReport> {
    let f = model.equation();
    let mut gens = vec![f.clone()];
    gens.extend(f.gradient());
    let ideal = Ideal::from_nonzero(f.vars(), gens)?;
    let gb = groebner(&ideal, TermOrder::GRevLex, budget)?;
    let hs = HilbertSeries::from_leading_monomials(&gb.leading_monomials(), model.ring().weights());
    let dim = hs.projective_dimension();
    Ok(SmoothnessReport {
        smooth: dim < 0,
        singular_locus_dimension: dim,
        basis_size: gb.basis().len(),
        steps: gb.steps,
    })
}

/// The model with `action` attached, if the equation is an eigenvector.
fn with_action<F: Field>(
    model: &HypersurfaceModel<F>,
    action: DiagonalAction,
) -> Option<HypersurfaceModel<F>> {
    HypersurfaceModel::new(model.ring().clone(), model.equation().clone(), Some(action)).ok()
}

/// Order-3 actions `x_i -> zeta x_i` on a cubic surface in `P^3` for which the
/// equation reads `x_i^3 = F(others)`, i.e. the quotient is the plane.
pub fn coordinate_automorphisms_a1<F: Field>(
    model: &HypersurfaceModel<F>,
) -> Result<Vec<DiagonalAction>> {
    let ring = model.ring();
    if ring.weights() != [1, 1, 1, 1] || model.degree() != 3 {
        return Err(Error::Precondition(
            "expected a cubic surface in P^3".into(),
        ));
    }
    let mut out: Vec<DiagonalAction> = Vec::new();
    for i in 0..4 {
        for e in 1..3 {
            let mut ex = vec![0i64; 4];
            ex[i] = e;
            let action = DiagonalAction::new(3, &ex)?;
            let Some(m) = with_action(model, action) else {
                continue;
            };
            let fixed = m
                .equation()
                .terms()
                .all(|(mono, _)| m.action().unwrap().character(mono) == 0);
            if !fixed {
                continue;
            }
            if let Ok(q) = quotient_presentation(&m) {
                if q.relation.is_none() && !out.contains(m.action().unwrap()) {
                    out.push(m.action().unwrap().clone());
                }
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualActionsReport {
    /// Order 3 on the weight-2 variable with quotient `P(1,1,3)`.
    pub order_three: Option<DiagonalAction>,
    /// Order 5 on a weight-1 variable with quotient `x u = F` in `P(1,2,3,5)`.
    pub order_five: Option<DiagonalAction>,
    pub both: bool,
}

/// Looks for both quotient structures on a sextic in `P(1,1,2,3)`.
pub fn dual_actions_check<F: Field>(model: &HypersurfaceModel<F>) -> Result<DualActionsReport> {
    let ring = model.ring();
    if ring.weights() != [1, 1, 2, 3] || model.degree() != 6 {
        return Err(Error::Precondition(
            "expected a sextic in P(1,1,2,3)".into(),
        ));
    }
    let fixes = |m: &HypersurfaceModel<F>| {
        m.equation()
            .terms()
            .all(|(mono, _)| m.action().unwrap().character(mono) == 0)
    };
    let order_three = (1..3).find_map(|e| {
        let m = with_action(model, DiagonalAction::new(3, &[0, 0, e, 0]).ok()?)?;
        let q = quotient_presentation(&m).ok()?;
        (fixes(&m) && q.relation.is_none() && q.ring.weights() == [1, 1, 3])
            .then(|| m.action().unwrap().clone())
    });
    let order_five = (0..2).find_map(|i| {
        (1..5).find_map(|e| {
            let mut ex = vec![0i64; 4];
            ex[i] = e;
            let m = with_action(model, DiagonalAction::new(5, &ex).ok()?)?;
            let q = quotient_presentation(&m).ok()?;
            let mut w = q.ring.weights().to_vec();
            w.sort();
            (fixes(&m) && q.relation.is_some() && w == [1, 2, 3, 5])
                .then(|| m.action().unwrap().clone())
        })
    });
    let both = order_three.is_some() && order_five.is_some();
    Ok(DualActionsReport {
        order_three,
        order_five,
        both,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::groebner::DEFAULT_BUDGET;
    use crate::algebra::Rational;

    fn model(w: &[u32], eq: &str) -> HypersurfaceModel<Rational> {
        HypersurfaceModel::parse(w, eq, None).unwrap()
    }

    #[test]
    fn smoothness_by_jacobian() {
        let x0 = model(&[1, 1, 2, 3], "x^6+x*y^5+z^3+w^2");
        assert!(jacobian_smooth(&x0, DEFAULT_BUDGET).unwrap().smooth);
        let fermat = model(&[1, 1, 1, 1], "x^3+y^3+z^3+w^3");
        assert!(jacobian_smooth(&fermat, DEFAULT_BUDGET).unwrap().smooth);
        let cusp = model(&[1, 1, 1], "y^2*z-x^3");
        let r = jacobian_smooth(&cusp, DEFAULT_BUDGET).unwrap();
        assert!(!r.smooth);
        assert_eq!(r.singular_locus_dimension, 0);
        // a cone over a plane cubic is singular at the vertex only
        let cone = model(&[1, 1, 1, 1], "x^3+y^3+z^3");
        assert_eq!(
            jacobian_smooth(&cone, DEFAULT_BUDGET)
                .unwrap()
                .singular_locus_dimension,
            0
        );
    }

    #[test]
    fn fermat_has_eight_coordinate_actions() {
        let fermat = model(&[1, 1, 1, 1], "x^3+y^3+z^3+w^3");
        assert_eq!(coordinate_automorphisms_a1(&fermat).unwrap().len(), 8);
        let other = model(&[1, 1, 1, 1], "x^3 = y*z*w+y^3+z^3+w^3");
        let acts = coordinate_automorphisms_a1(&other).unwrap();
        assert_eq!(acts.len(), 2);
        assert!(acts.iter().all(|a| a.moved() == vec![0]));
        assert!(coordinate_automorphisms_a1(&model(&[1, 1, 2, 3], "x^6+x*y^5+z^3+w^2")).is_err());
    }

    #[test]
    fn the_sextic_admits_both_actions() {
        let x0 = model(&[1, 1, 2, 3], "x^6+x*y^5+z^3+w^2");
        let r = dual_actions_check(&x0).unwrap();
        assert!(r.both);
        assert_eq!(r.order_five.unwrap().exponents(), &[0, 1, 0, 0]);
        assert_eq!(r.order_three.unwrap().exponents(), &[0, 0, 1, 0]);
        // a generic-looking sextic has neither
        let g = model(&[1, 1, 2, 3], "x^6+y^6+x*y*z^2+z^3+w^2+x^3*w");
        let r = dual_actions_check(&g).unwrap();
        assert!(!r.both);
        assert!(r.order_five.is_none());
    }
}
