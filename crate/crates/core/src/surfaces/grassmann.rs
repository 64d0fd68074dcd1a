//! The diagonal order-5 action on `Gr(2,5)` in its Plücker embedding and
//! the invariant `P^5` cutting out a quintic del Pezzo surface.

use serde::Serialize;

use crate::algebra::linalg::det_poly;
use crate::algebra::{
    groebner, hilbert_series, Ideal, MultiPoly, Rational, TermOrder, VarSet, Vars,
};
use crate::error::{Error, Result};

/// `e_i -> zeta^{a_i} e_i` on `C^5`; `p_ij` picks up `zeta^{a_i + a_j}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlueckerAction {
    pub order: u32,
    pub exponents: [u32; 5],
}

impl PlueckerAction {
    pub fn standard() -> Self {
        PlueckerAction {
            order: 5,
            exponents: [0, 1, 2, 3, 4],
        }
    }

    pub fn induced(&self, i: usize, j: usize) -> u32 {
        (self.exponents[i] + self.exponents[j]) % self.order
    }
}

/// Index pairs `i < j` in the coordinate order of [`pluecker_vars`].
pub fn pluecker_pairs() -> Vec<(usize, usize)> {
    (0..5)
        .flat_map(|i| (i + 1..5).map(move |j| (i, j)))
        .collect()
}

pub fn pluecker_vars() -> Vars {
    let names: Vec<String> = pluecker_pairs()
        .iter()
        .map(|(i, j)| format!("p{i}{j}"))
        .collect();
    VarSet::new(&names)
}

fn coord(i: usize, j: usize) -> usize {
    pluecker_pairs()
        .iter()
        .position(|&p| p == (i, j))
        .expect("i < j < 5")
}

/// `p_ij p_kl - p_ik p_jl + p_il p_jk` for each `i < j < k < l`.
pub fn pluecker_relations() -> Vec<MultiPoly<Rational>> {
    let v = pluecker_vars();
    let p = |i, j| MultiPoly::<Rational>::var(&v, coord(i, j));
    let mut out = Vec::new();
    for i in 0..5 {
        for j in i + 1..5 {
            for k in j + 1..5 {
                for l in k + 1..5 {
                    let r =
                        &(&(&p(i, j) * &p(k, l)) - &(&p(i, k) * &p(j, l))) + &(&p(i, l) * &p(j, k));
                    out.push(r);
                }
            }
        }
    }
    out
}

/// The four binomials `p01 - p24`, `p02 - p34`, `p03 - p12`, `p04 - p13`.
pub fn invariant_subspace() -> [((usize, usize), (usize, usize)); 4] {
    [
        ((0, 1), (2, 4)),
        ((0, 2), (3, 4)),
        ((0, 3), (1, 2)),
        ((0, 4), (1, 3)),
    ]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "lowercase")]
pub enum Stage {
    Passed,
    Failed(String),
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BinomialCheck {
    pub left: String,
    pub right: String,
    pub left_exponent: u32,
    pub right_exponent: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrassmannReport {
    pub relation_count: usize,
    pub relations_vanish_on_wedges: bool,
    pub binomials: Vec<BinomialCheck>,
    pub subspace_invariant: bool,
    /// The Plücker quadrics are eigenvectors, so the Grassmannian is invariant.
    pub grassmannian_invariant: bool,
    pub restricted_order: Option<u32>,
    pub projective_dimension: Option<i64>,
    pub degree: Option<String>,
    pub hilbert: Stage,
    pub smoothness: Stage,
}

impl GrassmannReport {
    pub fn passes(&self) -> bool {
        self.relation_count == 5
            && self.relations_vanish_on_wedges
            && self.subspace_invariant
            && self.grassmannian_invariant
            && self.restricted_order == Some(5)
            && self.hilbert == Stage::Passed
            && !matches!(self.smoothness, Stage::Failed(_))
    }
}

fn relations_vanish_on_wedges(rel: &[MultiPoly<Rational>]) -> bool {
    let uv = VarSet::new(&["u0", "u1", "u2", "u3", "u4", "v0", "v1", "v2", "v3", "v4"]);
    let u = |i| MultiPoly::<Rational>::var(&uv, i);
    let v = |i| MultiPoly::<Rational>::var(&uv, 5 + i);
    let wedge: Vec<MultiPoly<Rational>> = pluecker_pairs()
        .iter()
        .map(|&(i, j)| &(&u(i) * &v(j)) - &(&u(j) * &v(i)))
        .collect();
    rel.iter().all(|r| r.substitute(&wedge).is_zero())
}

fn name(p: (usize, usize)) -> String {
    format!("p{}{}", p.0, p.1)
}

/// The projective order of the action restricted to the span of the given
/// coordinates: the least `k` making all `k * exponent` equal.
fn restricted_order(action: &PlueckerAction, coords: &[(usize, usize)]) -> Option<u32> {
    (1..=action.order).find(|k| {
        let mut vals = coords
            .iter()
            .map(|&(i, j)| (k * action.induced(i, j)) % action.order);
        let first = vals.next().unwrap();
        vals.all(|x| x == first)
    })
}

/// The `P^5` section as an ideal in the six surviving coordinates
/// `p01, p02, p03, p04, p14, p23`.
fn section_on_p5() -> (Vars, Vec<MultiPoly<Rational>>) {
    let kept = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 4), (2, 3)];
    let v6 = VarSet::new(&kept.iter().map(|&p| name(p)).collect::<Vec<_>>());
    let images: Vec<MultiPoly<Rational>> = pluecker_pairs()
        .iter()
        .map(|&p| {
            let target = invariant_subspace()
                .iter()
                .find(|(_, r)| *r == p)
                .map(|(l, _)| *l)
                .unwrap_or(p);
            MultiPoly::var(
                &v6,
                kept.iter()
                    .position(|&k| k == target)
                    .expect("kept coordinate"),
            )
        })
        .collect();
    let rel = pluecker_relations()
        .iter()
        .map(|r| r.substitute(&images))
        .collect();
    (v6, rel)
}

/// Jacobian criterion for the codimension-3 surface in `P^5`: the 3x3
/// minors of the Jacobian of the quadrics, together with the quadrics,
/// must define the empty set.
fn smoothness_stage(budget: usize) -> Result<Stage> {
    let (v6, rel) = section_on_p5();
    let jac: Vec<Vec<MultiPoly<Rational>>> = rel.iter().map(|r| r.gradient()).collect();
    let mut gens = rel.clone();
    let rows: Vec<[usize; 3]> = (0..5)
        .flat_map(|a| (a + 1..5).flat_map(move |b| (b + 1..5).map(move |c| [a, b, c])))
        .collect();
    let cols: Vec<[usize; 3]> = (0..6)
        .flat_map(|a| (a + 1..6).flat_map(move |b| (b + 1..6).map(move |c| [a, b, c])))
        .collect();
    for r in &rows {
        for c in &cols {
            let m: Vec<Vec<MultiPoly<Rational>>> = r
                .iter()
                .map(|&i| c.iter().map(|&j| jac[i][j].clone()).collect())
                .collect();
            let d = det_poly(&m);
            if !d.is_zero() && !gens.contains(&d) {
                gens.push(d);
            }
        }
    }
    let ideal = Ideal::from_nonzero(&v6, gens)?;
    match hilbert_series(&ideal, TermOrder::GRevLex, budget) {
        Ok(hs) if hs.krull_dimension() == 0 => Ok(Stage::Passed),
        Ok(hs) => Ok(Stage::Failed(format!(
            "singular locus of projective dimension {}",
            hs.projective_dimension()
        ))),
        Err(Error::BudgetExceeded(n)) => Ok(Stage::Skipped(format!(
            "budget of {n} reductions exhausted"
        ))),
        Err(e) => Err(e),
    }
}

/// Runs every stage. `smooth_budget = None` skips the smoothness stage.
pub fn grassmannian_check(budget: usize, smooth_budget: Option<usize>) -> Result<GrassmannReport> {
    let action = PlueckerAction::standard();
    let rel = pluecker_relations();
    let binomials: Vec<BinomialCheck> = invariant_subspace()
        .iter()
        .map(|&(l, r)| BinomialCheck {
            left: name(l),
            right: name(r),
            left_exponent: action.induced(l.0, l.1),
            right_exponent: action.induced(r.0, r.1),
        })
        .collect();
    let subspace_invariant = binomials
        .iter()
        .all(|b| b.left_exponent == b.right_exponent);
    let v = pluecker_vars();
    let pairs = pluecker_pairs();
    let grassmannian_invariant = rel.iter().all(|r| {
        let mut chars = r.terms().map(|(m, _)| {
            m.iter()
                .enumerate()
                .map(|(k, &e)| e * action.induced(pairs[k].0, pairs[k].1))
                .sum::<u32>()
                % action.order
        });
        let first = chars.next().unwrap();
        chars.all(|c| c == first)
    });
    let restricted_order = restricted_order(&action, &pairs);

    let mut gens = rel.clone();
    for &(l, r) in &invariant_subspace() {
        gens.push(&MultiPoly::var(&v, coord(l.0, l.1)) - &MultiPoly::var(&v, coord(r.0, r.1)));
    }
    let ideal = Ideal::new(&v, gens)?;
    let (projective_dimension, degree, hilbert) = match groebner(&ideal, TermOrder::GRevLex, budget)
    {
        Ok(gb) => {
            let hs = crate::algebra::HilbertSeries::from_leading_monomials(
                &gb.leading_monomials(),
                v.weights(),
            );
            let (d, deg) = (hs.projective_dimension(), hs.degree());
            let stage = if d == 2 && deg == Rational::from_integer(5.into()) {
                Stage::Passed
            } else {
                Stage::Failed(format!("dimension {d}, degree {deg}"))
            };
            (Some(d), Some(deg.to_string()), stage)
        }
        Err(Error::BudgetExceeded(n)) => (
            None,
            None,
            Stage::Skipped(format!("budget of {n} reductions exhausted")),
        ),
        Err(e) => return Err(e),
    };
    let smoothness = match smooth_budget {
        Some(b) => smoothness_stage(b)?,
        None => Stage::Skipped("not requested".into()),
    };
    Ok(GrassmannReport {
        relation_count: rel.len(),
        relations_vanish_on_wedges: relations_vanish_on_wedges(&rel),
        binomials,
        subspace_invariant,
        grassmannian_invariant,
        restricted_order,
        projective_dimension,
        degree,
        hilbert,
        smoothness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::groebner::DEFAULT_BUDGET;

    #[test]
    fn five_relations_vanish_on_wedges() {
        let rel = pluecker_relations();
        assert_eq!(rel.len(), 5);
        assert!(relations_vanish_on_wedges(&rel));
        // a non-relation does not vanish
        let v = pluecker_vars();
        let bad = &MultiPoly::<Rational>::var(&v, 0) * &MultiPoly::var(&v, 9);
        assert!(!relations_vanish_on_wedges(&[bad]));
    }

    #[test]
    fn binomials_pair_equal_exponents() {
        let a = PlueckerAction::standard();
        assert_eq!(a.induced(0, 1), 1);
        assert_eq!(a.induced(2, 4), 1);
        for ((i, j), (k, l)) in invariant_subspace() {
            assert_eq!(a.induced(i, j), a.induced(k, l));
        }
        // p01 - p02 would not be invariant
        assert_ne!(a.induced(0, 1), a.induced(0, 2));
    }

    #[test]
    fn section_is_a_quintic_surface() {
        let r = grassmannian_check(DEFAULT_BUDGET, Some(DEFAULT_BUDGET)).unwrap();
        assert_eq!(r.projective_dimension, Some(2));
        assert_eq!(r.degree.as_deref(), Some("5"));
        assert_eq!(r.restricted_order, Some(5));
        assert!(r.grassmannian_invariant);
        assert!(r.passes());
        assert_eq!(r.smoothness, Stage::Passed);
        let r = grassmannian_check(DEFAULT_BUDGET, None).unwrap();
        assert!(matches!(r.smoothness, Stage::Skipped(_)));
    }

    #[test]
    fn smoothness_under_a_tiny_budget_is_skipped() {
        assert!(matches!(smoothness_stage(1).unwrap(), Stage::Skipped(_)));
    }
}
