//! De Jonquières involutions: on each line through `q = (0:0:1)`, a point
//! is sent to its harmonic conjugate with respect to the two residual
//! intersections with a curve `C` having a point of multiplicity `d - 2`
//! at `q`.

use crate::algebra::{Field, MultiPoly};
use crate::error::{Error, Result};

use super::{plane_vars, CremonaMap};

/// Writes `C = a z^2 + b z + c` with `a, b, c` forms in `(x, y)`, checking
/// that `(0:0:1)` has multiplicity exactly `deg C - 2`.
pub fn split_at_vertex<F: Field>(curve: &MultiPoly<F>) -> Result<[MultiPoly<F>; 3]> {
    let v = plane_vars();
    let curve = curve.embed_by_name(&v)?;
    if curve.is_zero() || !curve.is_homogeneous() {
        return Err(Error::InvalidCurve("expected a nonzero form".into()));
    }
    let d = curve.degree().unwrap();
    if d < 3 {
        return Err(Error::Precondition(format!("curve degree {d} is below 3")));
    }
    // multiplicity at (0:0:1) is d - deg_z
    let dz = curve.degree_in(2) as u64;
    if dz != 2 {
        return Err(Error::Precondition(format!(
            "(0:0:1) has multiplicity {} on the curve, expected {}",
            d - dz,
            d - 2
        )));
    }
    let cs = curve.coeffs_in(2);
    Ok([cs[2].clone(), cs[1].clone(), cs[0].clone()])
}

/// The involution `(x(2az+b), y(2az+b), -(bz+2c))`.
pub fn dejonquieres<F: Field>(curve: &MultiPoly<F>) -> Result<CremonaMap<F>> {
    let [a, b, c] = split_at_vertex(curve)?;
    let v = plane_vars();
    let (x, y, z) = (
        MultiPoly::var(&v, 0),
        MultiPoly::var(&v, 1),
        MultiPoly::var(&v, 2),
    );
    let two = MultiPoly::constant(&v, F::from_i64(2));
    let s = &(&(&two * &a) * &z) + &b;
    let last = -&(&(&b * &z) + &(&two * &c));
    CremonaMap::new([&x * &s, &y * &s, last])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;
    use crate::cremona::parse_plane_poly;

    fn p(s: &str) -> MultiPoly<Rational> {
        parse_plane_poly(s).unwrap()
    }

    #[test]
    fn cubic_through_the_vertex() {
        let c = p("z^2*x+z*y^2+x^3");
        let j = dejonquieres(&c).unwrap();
        assert_eq!(j.degree(), 3);
        assert_eq!(
            j,
            CremonaMap::parse("x*(2*x*z+y^2);y*(2*x*z+y^2);-(y^2*z+2*x^3)").unwrap()
        );
        assert!(j.compose(&j).is_identity());
        assert!(j.fixed_curve().unwrap().div_exact(&c).is_some());
    }

    #[test]
    fn degenerate_vertex_is_rejected() {
        // a = 0: the vertex has multiplicity d - 1
        assert!(matches!(
            dejonquieres(&p("z*x^2+y^3")),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            dejonquieres(&p("z^3+x^3+y^3")),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            dejonquieres(&p("z*x+y^2")),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn harmonic_conjugate_on_a_line() {
        // on the line x = y = 1 (affine in z) the conic part has roots 1, 3
        let c = p("x*z^2-4*x^2*z+3*x^3");
        let j = dejonquieres(&c).unwrap();
        let img = j
            .apply(&[
                Rational::from_integer(1.into()),
                Rational::from_integer(1.into()),
                Rational::from_integer(0.into()),
            ])
            .unwrap();
        // cross-ratio (0, w; 1, 3) = -1 gives w = 3/2
        assert_eq!(
            img[2].clone() / img[0].clone(),
            Rational::new(3.into(), 2.into())
        );
    }

    #[test]
    fn involutions_of_degrees_three_to_five() {
        use crate::cremona::{nfc_genus, PlaneCurve, SingularPoint};
        let one = Rational::from_integer(1.into());
        let zero = Rational::from_integer(0.into());
        for (d, text) in [
            (3, "z^2*x+z*y^2+x^3"),
            (4, "x*y*z^2+(x^3-y^3)*z+x^4+2*y^4"),
            (5, "(x^3-y^3)*z^2+(x^4+y^4)*z+x^5+3*y^5+x^2*y^3"),
        ] {
            let c = p(text);
            let j = dejonquieres(&c).unwrap();
            assert_eq!(j.degree(), d);
            assert!(j.compose(&j).is_identity());
            assert!(j.fixed_curve().unwrap().div_exact(&c).is_some());
            let pts = if d > 3 {
                vec![SingularPoint {
                    point: [zero.clone(), zero.clone(), one.clone()],
                    multiplicity: d as u32 - 2,
                }]
            } else {
                vec![]
            };
            let curve = PlaneCurve::new(c, pts).unwrap();
            assert_eq!(nfc_genus(&curve).unwrap(), d - 2);
        }
    }
}
