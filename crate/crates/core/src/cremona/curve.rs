//! Plane curves with declared singular points, and the genus of their
//! normalization.
//!
//! Completeness of the declared singularities is certified exactly: the
//! total Tjurina number (degree of the scheme cut out by the three partial
//! derivatives) must equal the sum of the local Tjurina numbers at the
//! declared points.

use std::sync::OnceLock;

use num_traits::ToPrimitive;

use crate::algebra::groebner::DEFAULT_BUDGET;
use crate::algebra::order::divides;
use crate::algebra::{
    factor_binary_form, groebner, hilbert_series, Field, Ideal, MultiPoly, TermOrder, VarSet, Vars,
};
use crate::error::{Error, Result};

use super::plane_vars;

#[derive(Debug, Clone, PartialEq)]
pub struct SingularPoint<F: Field> {
    pub point: [F; 3],
    pub multiplicity: u32,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlaneCurve<F: Field> {
    equation: MultiPoly<F>,
    points: Vec<SingularPoint<F>>,
}

impl<F: Field> PlaneCurve<F> {
    /// Checks that every declared point lies on the curve with the stated
    /// multiplicity.
    pub fn new(equation: MultiPoly<F>, points: Vec<SingularPoint<F>>) -> Result<Self> {
        let equation = equation.embed_by_name(&plane_vars())?;
        if equation.is_zero() || !equation.is_homogeneous() || equation.is_constant() {
            return Err(Error::InvalidCurve("expected a nonconstant form".into()));
        }
        for sp in &points {
            let m = multiplicity_at(&equation, &sp.point)?;
            if m != sp.multiplicity {
                return Err(Error::InvalidCurve(format!(
                    "declared multiplicity {} at {}, found {m}",
                    sp.multiplicity,
                    fmt_point(&sp.point)
                )));
            }
        }
        Ok(PlaneCurve { equation, points })
    }

    pub fn equation(&self) -> &MultiPoly<F> {
        &self.equation
    }

    pub fn points(&self) -> &[SingularPoint<F>] {
        &self.points
    }

    pub fn degree(&self) -> u64 {
        self.equation.degree().unwrap()
    }
}

fn fmt_point<F: Field>(p: &[F; 3]) -> String {
    format!("({}:{}:{})", p[0], p[1], p[2])
}

fn local_vars() -> Vars {
    static VARS: OnceLock<Vars> = OnceLock::new();
    VARS.get_or_init(|| VarSet::new(&["u", "v"])).clone()
}

/// The equation in the affine chart around `p`, with `p` moved to the
/// origin of `(u, v)`.
fn local_equation<F: Field>(f: &MultiPoly<F>, p: &[F; 3]) -> Result<MultiPoly<F>> {
    let k = p
        .iter()
        .position(|c| !c.is_zero())
        .ok_or_else(|| Error::Precondition("(0:0:0) is not a point".into()))?;
    let s = p[k].inv().unwrap();
    let lv = local_vars();
    let mut images = Vec::with_capacity(3);
    let mut next_local = 0;
    for i in 0..3 {
        if i == k {
            images.push(MultiPoly::one(&lv));
        } else {
            let shift = MultiPoly::constant(&lv, p[i].clone() * &s);
            images.push(shift + MultiPoly::var(&lv, next_local));
            next_local += 1;
        }
    }
    Ok(f.substitute(&images))
}

/// Multiplicity of the curve `f = 0` at `p` (0 when `p` is off the curve).
pub fn multiplicity_at<F: Field>(f: &MultiPoly<F>, p: &[F; 3]) -> Result<u32> {
    let g = local_equation(f, p)?;
    Ok(g.min_degree().unwrap_or(0) as u32)
}

/// Whether the tangent cone at `p` consists of distinct lines.
pub fn is_ordinary_at<F: Field>(f: &MultiPoly<F>, p: &[F; 3]) -> Result<bool> {
    let g = local_equation(f, p)?;
    let m = g.min_degree().unwrap_or(0);
    if m <= 1 {
        return Ok(true);
    }
    let cone = g.homogeneous_components().remove(&m).unwrap();
    let bf = factor_binary_form(&cone)?;
    Ok(bf.linear.iter().chain(&bf.residual).all(|(_, e)| *e == 1))
}

fn count_standard_monomials(lms: &[Vec<u32>], below: u32) -> usize {
    let mut n = 0;
    for a in 0..below {
        for b in 0..below - a {
            if !lms.iter().any(|m| divides(m, &[a, b])) {
                n += 1;
            }
        }
    }
    n
}

/// Local Tjurina number `dim O_p / (f, f_u, f_v)` at `p`, computed as the
/// stable value of `dim k[u,v] / (f, f_u, f_v, m^N)`.
pub fn local_tjurina<F: Field>(f: &MultiPoly<F>, p: &[F; 3]) -> Result<usize> {
    let g = local_equation(f, p)?;
    let lv = local_vars();
    let gens = vec![g.clone(), g.derivative(0), g.derivative(1)];
    let dim_at = |n: u32| -> Result<usize> {
        let mut all = gens.clone();
        for a in 0..=n {
            all.push(MultiPoly::monomial(&lv, vec![a, n - a], F::one()));
        }
        let ideal = Ideal::from_nonzero(&lv, all)?;
        let gb = groebner(&ideal, TermOrder::GRevLex, DEFAULT_BUDGET)?;
        Ok(count_standard_monomials(&gb.leading_monomials(), n))
    };
    let mut n = 1;
    let mut prev = dim_at(n)?;
    loop {
        n += 1;
        let cur = dim_at(n)?;
        if cur == prev {
            return Ok(cur);
        }
        prev = cur;
    }
}

/// Degree of the singular scheme `V(f_x, f_y, f_z)`; errors when the curve
/// has a multiple component.
pub fn total_tjurina<F: Field>(f: &MultiPoly<F>) -> Result<usize> {
    let v = plane_vars();
    let f = f.embed_by_name(&v)?;
    let ideal = Ideal::from_nonzero(&v, f.gradient())?;
    if ideal.generators().is_empty() {
        return Err(Error::InvalidCurve("constant equation".into()));
    }
    let hs = hilbert_series(&ideal, TermOrder::GRevLex, DEFAULT_BUDGET)?;
    match hs.krull_dimension() {
        0 => Ok(0),
        1 => Ok(hs.degree().to_integer().to_usize().expect("small degree")),
        _ => Err(Error::InvalidCurve("the curve is not reduced".into())),
    }
}

/// Genus of the normalization, `(d-1)(d-2)/2 - sum m(m-1)/2`, for an
/// irreducible curve whose singularities are all declared and ordinary.
pub fn nfc_genus<F: Field>(curve: &PlaneCurve<F>) -> Result<u64> {
    let f = curve.equation();
    let total = total_tjurina(f)?;
    let mut declared = 0;
    let mut delta: u64 = 0;
    for sp in curve.points() {
        if !is_ordinary_at(f, &sp.point)? {
            return Err(Error::InvalidCurve(format!(
                "singularity at {} is not ordinary",
                fmt_point(&sp.point)
            )));
        }
        declared += local_tjurina(f, &sp.point)?;
        let m = sp.multiplicity as u64;
        delta += m * m.saturating_sub(1) / 2;
    }
    if declared != total {
        return Err(Error::InvalidCurve(format!(
            "undeclared singular points (Tjurina total {total}, declared {declared})"
        )));
    }
    let d = curve.degree();
    let arith = (d - 1) * (d - 2) / 2;
    arith
        .checked_sub(delta)
        .ok_or_else(|| Error::InvalidCurve("negative genus: the curve is reducible".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;
    use crate::cremona::parse_plane_poly;

    fn p(s: &str) -> MultiPoly<Rational> {
        parse_plane_poly(s).unwrap()
    }

    fn pt(a: i64, b: i64, c: i64) -> [Rational; 3] {
        [a, b, c].map(|n| Rational::from_integer(n.into()))
    }

    fn vertex(m: u32) -> SingularPoint<Rational> {
        SingularPoint {
            point: pt(0, 0, 1),
            multiplicity: m,
        }
    }

    #[test]
    fn smooth_cubic_has_genus_one() {
        let c = PlaneCurve::new(p("x^3+y^3+z^3"), vec![]).unwrap();
        assert_eq!(total_tjurina(c.equation()).unwrap(), 0);
        assert_eq!(nfc_genus(&c).unwrap(), 1);
    }

    #[test]
    fn nodal_quartic_has_genus_two() {
        let c = PlaneCurve::new(p("x*y*z^2+x^4+y^4"), vec![vertex(2)]).unwrap();
        assert_eq!(local_tjurina(c.equation(), &pt(0, 0, 1)).unwrap(), 1);
        assert_eq!(nfc_genus(&c).unwrap(), 2);
        // forgetting the node is detected
        let bare = PlaneCurve::new(p("x*y*z^2+x^4+y^4"), vec![]).unwrap();
        assert!(matches!(nfc_genus(&bare), Err(Error::InvalidCurve(_))));
    }

    #[test]
    fn cusp_is_not_ordinary() {
        let c = PlaneCurve::new(p("y^2*z-x^3"), vec![vertex(2)]).unwrap();
        assert_eq!(local_tjurina(c.equation(), &pt(0, 0, 1)).unwrap(), 2);
        assert!(matches!(nfc_genus(&c), Err(Error::InvalidCurve(_))));
    }

    #[test]
    fn wrong_multiplicity_is_rejected() {
        assert!(PlaneCurve::new(p("x^3+y^3+z^3"), vec![vertex(2)]).is_err());
        assert!(matches!(
            total_tjurina(&(p("x+y") * p("x+y") * p("z"))),
            Err(Error::InvalidCurve(_))
        ));
    }

    #[test]
    fn chart_away_from_the_vertex() {
        // node of y^2 z = x^2 (x + z) at (0:0:1), seen from another point too
        let f = p("y^2*z-x^2*(x+z)");
        assert_eq!(multiplicity_at(&f, &pt(0, 0, 1)).unwrap(), 2);
        assert_eq!(multiplicity_at(&f, &pt(0, 1, 0)).unwrap(), 1);
        assert_eq!(multiplicity_at(&f, &pt(1, 1, 1)).unwrap(), 0);
        assert!(is_ordinary_at(&f, &pt(0, 0, 1)).unwrap());
        assert_eq!(total_tjurina(&f).unwrap(), 1);
    }
}
