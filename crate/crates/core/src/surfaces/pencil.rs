//! Singular members of pencils of plane cubics.

use serde::Serialize;

use crate::algebra::binary::{is_triangle, linear_factors_ternary};
use crate::algebra::linalg::det_poly;
use crate::algebra::{
    factor_binary_form, poly_gcd, resultant, Field, MultiPoly, TermOrder, VarSet, Vars,
};
use crate::cremona::{plane_vars, total_tjurina};
use crate::error::{Error, Result};

/// The pencil `mu A + lambda B`; the affine parameter is `lambda / mu`.
#[derive(Debug, Clone, PartialEq)]
pub struct CubicPencil<F: Field> {
    a: MultiPoly<F>,
    b: MultiPoly<F>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MemberType {
    /// Three non-concurrent lines.
    Triangle,
    /// Irreducible with one node.
    Nodal,
    /// Irreducible with one cusp.
    Cuspidal,
    Other,
}

/// Where a singular member sits in the pencil.
#[derive(Debug, Clone, PartialEq)]
pub enum Parameter<F: Field> {
    Value(F),
    Infinity,
    /// An irreducible factor of degree at least 2 of the discriminant,
    /// dehomogenized at `mu = 1`; its roots are conjugate parameters.
    Roots(MultiPoly<F>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SingularMember<F: Field> {
    pub parameter: Parameter<F>,
    /// Multiplicity as a root of the discriminant.
    pub multiplicity: u32,
    /// The member itself, when the parameter lies in the field.
    pub member: Option<MultiPoly<F>>,
    pub kind: MemberType,
    /// Sum of the Tjurina numbers of the member, when it lies in the field.
    pub tjurina: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PencilReport<F: Field> {
    /// Binary form of degree 12 in `(lambda, mu)`.
    pub discriminant: MultiPoly<F>,
    pub members: Vec<SingularMember<F>>,
    /// Base points with coordinates in the field.
    pub base_points: Vec<[F; 3]>,
}

impl<F: Field> PencilReport<F> {
    pub fn total_multiplicity(&self) -> u32 {
        self.members
            .iter()
            .map(|m| m.multiplicity * m.degree())
            .sum()
    }

    pub fn count(&self, kind: MemberType) -> u32 {
        self.members
            .iter()
            .filter(|m| m.kind == kind)
            .map(|m| m.degree())
            .sum()
    }
}

impl<F: Field> SingularMember<F> {
    /// Number of parameter values this entry stands for.
    pub fn degree(&self) -> u32 {
        match &self.parameter {
            Parameter::Roots(g) => g.degree().unwrap_or(0) as u32,
            _ => 1,
        }
    }
}

fn pencil_vars() -> Vars {
    VarSet::new(&["x", "y", "z", "lambda", "mu"])
}

fn parameter_vars() -> Vars {
    VarSet::new(&["lambda", "mu"])
}

impl<F: Field> CubicPencil<F> {
    pub fn new(a: MultiPoly<F>, b: MultiPoly<F>) -> Result<Self> {
        let v = plane_vars();
        let (a, b) = (a.embed_by_name(&v)?, b.embed_by_name(&v)?);
        for f in [&a, &b] {
            if f.degree() != Some(3) || !f.is_homogeneous() {
                return Err(Error::InvalidCurve(
                    "pencil members must be plane cubics".into(),
                ));
            }
        }
        if poly_gcd(&a, &b)?.degree() == Some(3) {
            return Err(Error::Degenerate("the two cubics are proportional".into()));
        }
        Ok(CubicPencil { a, b })
    }

    pub fn a(&self) -> &MultiPoly<F> {
        &self.a
    }

    pub fn b(&self) -> &MultiPoly<F> {
        &self.b
    }

    /// `mu A + lambda B`.
    pub fn member(&self, lambda: &F, mu: &F) -> MultiPoly<F> {
        &self.a.scale(mu) + &self.b.scale(lambda)
    }

    /// Discriminant of the generic member as a form in `(lambda, mu)`, from
    /// Sylvester's determinant: the partials of the cubic and of its Hessian
    /// are six conics whose coefficient matrix is singular exactly when the
    /// cubic is.
    pub fn discriminant(&self) -> Result<MultiPoly<F>> {
        let v = pencil_vars();
        let lam = MultiPoly::var(&v, 3);
        let mu = MultiPoly::var(&v, 4);
        let f = &(&self.a.embed_by_name(&v)? * &mu) + &(&self.b.embed_by_name(&v)? * &lam);
        let hess: Vec<Vec<MultiPoly<F>>> = (0..3)
            .map(|i| (0..3).map(|j| f.derivative(i).derivative(j)).collect())
            .collect();
        let h = det_poly(&hess);
        let conics: Vec<MultiPoly<F>> = (0..3)
            .map(|i| f.derivative(i))
            .chain((0..3).map(|i| h.derivative(i)))
            .collect();
        let columns: [[u32; 3]; 6] = [
            [2, 0, 0],
            [1, 1, 0],
            [1, 0, 1],
            [0, 2, 0],
            [0, 1, 1],
            [0, 0, 2],
        ];
        let matrix: Vec<Vec<MultiPoly<F>>> = conics
            .iter()
            .map(|q| {
                columns
                    .iter()
                    .map(|col| {
                        MultiPoly::from_terms(
                            &v,
                            q.terms()
                                .filter(|(m, _)| m[..3] == col[..])
                                .map(|(m, c)| (vec![0, 0, 0, m[3], m[4]], c.clone())),
                        )
                    })
                    .collect()
            })
            .collect();
        let d = det_poly(&matrix);
        let pv = parameter_vars();
        Ok(MultiPoly::from_terms(
            &pv,
            d.terms().map(|(m, c)| (vec![m[3], m[4]], c.clone())),
        ))
    }

    /// Every parameter with a singular member, classified. Parameters in the
    /// field are examined directly. For a conjugate family of parameters
    /// (an irreducible factor of higher degree) only the discriminant is
    /// used: a simple root is a smooth point of the discriminant
    /// hypersurface, whose cubics have exactly one singular point, an
    /// ordinary node, and are therefore irreducible.
    pub fn singular_members(&self) -> Result<PencilReport<F>> {
        let disc = self.discriminant()?;
        if disc.is_zero() {
            return Err(Error::Precondition(
                "every member of the pencil is singular".into(),
            ));
        }
        let fact = factor_binary_form(&disc)?;
        let mut members = Vec::new();
        for (lin, mult) in &fact.linear {
            // a lambda + b mu = 0
            let a = lin.coeff(&[1, 0]);
            let b = lin.coeff(&[0, 1]);
            let (parameter, lam, mu) = if a.is_zero() {
                (Parameter::Infinity, F::one(), F::zero())
            } else {
                let value = -(b / a.clone());
                (Parameter::Value(value.clone()), value, F::one())
            };
            let member = self.member(&lam, &mu).normalized();
            let (kind, tj) = classify(&member)?;
            members.push(SingularMember {
                parameter,
                multiplicity: *mult,
                member: Some(member),
                kind,
                tjurina: tj,
            });
        }
        for (g, mult) in &fact.residual {
            let affine = g.eval_var(1, &F::one());
            let affine = MultiPoly::from_terms(
                &VarSet::new(&["lambda"]),
                affine.terms().map(|(m, c)| (vec![m[0]], c.clone())),
            );
            let kind = if *mult == 1 {
                MemberType::Nodal
            } else {
                MemberType::Other
            };
            members.push(SingularMember {
                parameter: Parameter::Roots(affine.monic(TermOrder::GRevLex)),
                multiplicity: *mult,
                member: None,
                kind,
                tjurina: None,
            });
        }
        Ok(PencilReport {
            discriminant: disc,
            members,
            base_points: self.rational_base_points()?,
        })
    }

    /// Common zeros of `A` and `B` with coordinates in the field, found by
    /// projecting from `(1:0:0)`.
    pub fn rational_base_points(&self) -> Result<Vec<[F; 3]>> {
        let (a, b) = (&self.a, &self.b);
        let mut out: Vec<[F; 3]> = Vec::new();
        let mut push = |p: [F; 3]| {
            let k = p.iter().find(|c| !c.is_zero()).unwrap().inv().unwrap();
            let p = [p[0].clone() * &k, p[1].clone() * &k, p[2].clone() * &k];
            if !out.contains(&p) {
                out.push(p);
            }
        };
        let e = [F::one(), F::zero(), F::zero()];
        if a.eval(&e).is_zero() && b.eval(&e).is_zero() {
            push(e);
        }
        let r = resultant(a, b, 0)?;
        if r.is_zero() {
            return Err(Error::Degenerate("the cubics share a component".into()));
        }
        if r.is_constant() {
            return Ok(out);
        }
        for (lin, _) in factor_binary_form(&r)?.linear {
            // alpha y + beta z = 0
            let alpha = lin.coeff(&[0, 1, 0]);
            let beta = lin.coeff(&[0, 0, 1]);
            let (y0, z0) = (beta, -alpha);
            let restrict = |f: &MultiPoly<F>| {
                f.eval_var(1, &y0)
                    .eval_var(2, &z0)
                    .to_univariate(0)
                    .expect("only x left")
            };
            let (ua, ub) = (restrict(a), restrict(b));
            let g = if ua.is_zero() {
                ub
            } else if ub.is_zero() {
                ua
            } else {
                ua.gcd(&ub)
            };
            for (x0, _) in g.roots() {
                push([x0, y0.clone(), z0.clone()]);
            }
        }
        Ok(out)
    }
}

fn classify<F: Field>(member: &MultiPoly<F>) -> Result<(MemberType, Option<usize>)> {
    if is_triangle(member) {
        return Ok((MemberType::Triangle, total_tjurina(member).ok()));
    }
    let (lines, _) = linear_factors_ternary(member)?;
    let tj = match total_tjurina(member) {
        Ok(t) => t,
        Err(Error::InvalidCurve(_)) => return Ok((MemberType::Other, None)),
        Err(e) => return Err(e),
    };
    let kind = match (lines.is_empty(), tj) {
        (true, 1) => MemberType::Nodal,
        (true, 2) => MemberType::Cuspidal,
        _ => MemberType::Other,
    };
    Ok((kind, Some(tj)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Cyclotomic, Rational};
    use crate::cremona::parse_plane_poly;
    use num_traits::{One, Zero};

    fn pencil<F: Field>(a: &str, b: &str) -> CubicPencil<F> {
        CubicPencil::new(parse_plane_poly(a).unwrap(), parse_plane_poly(b).unwrap()).unwrap()
    }

    #[test]
    fn smooth_and_singular_discriminants() {
        let p = pencil::<Rational>("x^3+y^3+z^3", "x*y*z");
        let d = p.discriminant().unwrap();
        assert_eq!(d.degree(), Some(12));
        assert!(d.is_homogeneous());
        // the Fermat member (mu = 1, lambda = 0) is smooth
        assert!(!d.eval(&[Rational::zero(), Rational::one()]).is_zero());
        // the triangle member (lambda = 1, mu = 0) is singular
        assert!(d.eval(&[Rational::one(), Rational::zero()]).is_zero());
    }

    #[test]
    fn z5511_pencil() {
        let p = pencil::<Rational>("y*(x-y)*(x-z)", "x*z*(y-z)");
        let r = p.singular_members().unwrap();
        assert_eq!(r.total_multiplicity(), 12);
        assert_eq!(r.count(MemberType::Triangle), 2);
        assert_eq!(r.count(MemberType::Nodal), 2);
        assert_eq!(r.members.len(), 3);
        for m in &r.members {
            match (&m.parameter, m.kind) {
                (Parameter::Value(v), MemberType::Triangle) => assert!(v.is_zero()),
                (Parameter::Infinity, MemberType::Triangle) => {}
                (Parameter::Roots(g), MemberType::Nodal) => {
                    assert_eq!(g.degree(), Some(2));
                    assert_eq!(m.multiplicity, 1);
                }
                other => panic!("unexpected member {other:?}"),
            }
        }
        assert_eq!(r.base_points.len(), 5);
    }

    #[test]
    fn hesse_pencil_has_four_triangles() {
        // over Q only the member at infinity splits; over Q(zeta3) all four do
        let q = pencil::<Rational>("x^3+y^3+z^3", "x*y*z")
            .singular_members()
            .unwrap();
        assert_eq!(q.total_multiplicity(), 12);
        assert_eq!(q.count(MemberType::Triangle), 1);
        let k = pencil::<Cyclotomic<3>>("x^3+y^3+z^3", "x*y*z")
            .singular_members()
            .unwrap();
        assert_eq!(k.total_multiplicity(), 12);
        assert_eq!(k.count(MemberType::Triangle), 4);
        assert!(k.members.iter().all(|m| m.multiplicity == 3));
    }

    #[test]
    fn rational_nodal_and_cuspidal_members() {
        // y^2 z - x^3 - lambda x^2 z: cusp at 0, nodes elsewhere
        let p = pencil::<Rational>("y^2*z-x^3", "x^2*z");
        let r = p.singular_members();
        // every member is singular at (0:0:1)
        assert!(r.is_err());
        let p = pencil::<Rational>("y^2*z-x^3-x*z^2", "x^2*z-z^3");
        let r = p.singular_members().unwrap();
        assert_eq!(r.total_multiplicity(), 12);
        assert!(r
            .members
            .iter()
            .all(|m| m.kind != MemberType::Triangle || m.member.is_some()));
        assert!(CubicPencil::<Rational>::new(
            parse_plane_poly("x^3").unwrap(),
            parse_plane_poly("2*x^3").unwrap()
        )
        .is_err());
    }
}
