use serde::Serialize;

use crate::algebra::Monomial;
use crate::error::{Error, Result};

use super::{format_monomial, DiagonalAction, WeightedRing};

/// Minimal monomial generators of the invariant ring `k[x]^{Z/n}`.
///
/// The certificate: every invariant monomial of weighted degree at most
/// `bound` was factored as a product of the generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantGenerators {
    pub generators: Vec<Monomial>,
    pub display: Vec<String>,
    pub bound: u64,
    pub checked_monomials: usize,
}

/// All monomials of weighted degree at most `bound`, by increasing degree.
fn monomials_up_to(weights: &[u32], bound: u64) -> Vec<Monomial> {
    fn go(weights: &[u32], i: usize, left: u64, cur: &mut Monomial, out: &mut Vec<Monomial>) {
        if i == weights.len() {
            out.push(cur.clone());
            return;
        }
        let w = weights[i] as u64;
        let mut e = 0;
        while e * w <= left {
            cur[i] = e as u32;
            go(weights, i + 1, left - e * w, cur, out);
            e += 1;
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    go(weights, 0, bound, &mut vec![0; weights.len()], &mut out);
    let deg = |m: &Monomial| {
        m.iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w as u64)
            .sum::<u64>()
    };
    out.sort_by_key(|m| (deg(m), m.clone()));
    out
}

fn divides(a: &Monomial, b: &Monomial) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn quotient(b: &Monomial, a: &Monomial) -> Monomial {
    b.iter().zip(a).map(|(y, x)| y - x).collect()
}

/// Writes `m` as a product of `gens`, if possible.
fn factor(m: &Monomial, gens: &[Monomial]) -> bool {
    if m.iter().all(|&e| e == 0) {
        return true;
    }
    gens.iter()
        .any(|g| divides(g, m) && factor(&quotient(m, g), gens))
}

/// Any bound at least `n * max weight` is complete, since minimal invariant
/// monomials have at most `n` factors. `None` uses twice that.
pub fn invariant_generators(
    ring: &WeightedRing,
    action: &DiagonalAction,
    bound: Option<u64>,
) -> Result<InvariantGenerators> {
    let w = ring.weights();
    if action.exponents().len() != w.len() {
        return Err(Error::Config("one exponent per variable".into()));
    }
    let needed = action.order() as u64 * *w.iter().max().unwrap_or(&1) as u64;
    let bound = bound.unwrap_or(2 * needed);
    if bound < needed {
        return Err(Error::Precondition(format!(
            "degree bound {bound} is below {needed}, too small to certify the generators"
        )));
    }
    let invariant: Vec<Monomial> = monomials_up_to(w, bound)
        .into_iter()
        .filter(|m| m.iter().any(|&e| e > 0) && action.character(m) == 0)
        .collect();
    let mut generators: Vec<Monomial> = Vec::new();
    // in increasing degree, a monomial is a generator when no earlier
    // generator divides it (the cofactor is then automatically invariant)
    for m in &invariant {
        if !generators.iter().any(|g| divides(g, m)) {
            generators.push(m.clone());
        }
    }
    for m in &invariant {
        if !factor(m, &generators) {
            return Err(Error::Precondition(format!(
                "invariant monomial {m:?} is not generated"
            )));
        }
    }
    let display = generators
        .iter()
        .map(|g| format_monomial(ring.names(), g))
        .collect();
    Ok(InvariantGenerators {
        generators,
        display,
        bound,
        checked_monomials: invariant.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_action_gives_the_variables() {
        let r = WeightedRing::with_weights(&[1, 1, 2, 3]).unwrap();
        let a = DiagonalAction::new(5, &[0, 0, 0, 0]).unwrap();
        let g = invariant_generators(&r, &a, None).unwrap();
        let mut d = g.display.clone();
        d.sort();
        assert_eq!(d, vec!["w", "x", "y", "z"]);
    }

    #[test]
    fn one_moving_variable() {
        let r = WeightedRing::with_weights(&[1, 1, 2, 3]).unwrap();
        let a = DiagonalAction::new(5, &[0, 1, 0, 0]).unwrap();
        let g = invariant_generators(&r, &a, None).unwrap();
        let mut d = g.display.clone();
        d.sort();
        assert_eq!(d, vec!["w", "x", "y^5", "z"]);
        assert!(g.checked_monomials > 100);
        assert!(invariant_generators(&r, &a, Some(10)).is_err());
    }

    #[test]
    fn two_moving_variables_need_mixed_generators() {
        // (1, 2) mod 3 on P^1: invariants x^3, xy, y^3
        let r = WeightedRing::with_weights(&[1, 1]).unwrap();
        let a = DiagonalAction::new(3, &[1, 2]).unwrap();
        let mut d = invariant_generators(&r, &a, None).unwrap().display;
        d.sort();
        assert_eq!(d, vec!["x*y", "x^3", "y^3"]);
    }
}
