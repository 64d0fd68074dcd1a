//! Elements of PGL(3) as scaled 3x3 matrices.

use std::fmt;

use crate::algebra::linalg::{det, inverse, mat_mul, mat_vec, solve, Matrix};
use crate::algebra::{Field, MultiPoly};
use crate::error::{Error, Result};

use super::{plane_vars, CremonaMap};

/// Invertible 3x3 matrix up to scalar, scaled so its first nonzero entry
/// (row-major) is 1.
#[derive(Clone, PartialEq, Eq)]
pub struct ProjLinearMap<F: Field> {
    m: [[F; 3]; 3],
}

impl<F: Field> ProjLinearMap<F> {
    pub fn new(rows: [[F; 3]; 3]) -> Result<Self> {
        let as_mat: Matrix<F> = rows.iter().map(|r| r.to_vec()).collect();
        if det(&as_mat).is_zero() {
            return Err(Error::Degenerate("singular matrix".into()));
        }
        let first = rows
            .iter()
            .flatten()
            .find(|c| !c.is_zero())
            .unwrap()
            .inv()
            .unwrap();
        Ok(ProjLinearMap {
            m: rows.map(|r| r.map(|c| c * &first)),
        })
    }

    fn from_matrix(m: &Matrix<F>) -> Result<Self> {
        let row = |i: usize| [m[i][0].clone(), m[i][1].clone(), m[i][2].clone()];
        Self::new([row(0), row(1), row(2)])
    }

    pub fn identity() -> Self {
        Self::diagonal([F::one(), F::one(), F::one()]).unwrap()
    }

    pub fn diagonal(d: [F; 3]) -> Result<Self> {
        let z = F::zero;
        let [a, b, c] = d;
        Self::new([[a, z(), z()], [z(), b, z()], [z(), z(), c]])
    }

    pub fn matrix(&self) -> &[[F; 3]; 3] {
        &self.m
    }

    fn as_matrix(&self) -> Matrix<F> {
        self.m.iter().map(|r| r.to_vec()).collect()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        Self::from_matrix(&mat_mul(&self.as_matrix(), &other.as_matrix()))
            .expect("product of invertible matrices")
    }

    pub fn inverse(&self) -> Self {
        Self::from_matrix(&inverse(&self.as_matrix()).expect("invertible")).unwrap()
    }

    pub fn apply(&self, p: &[F; 3]) -> [F; 3] {
        let v = mat_vec(&self.as_matrix(), p);
        [v[0].clone(), v[1].clone(), v[2].clone()]
    }

    pub fn order_up_to(&self, bound: u32) -> Option<u32> {
        let id = Self::identity();
        let mut acc = self.clone();
        for k in 1..=bound {
            if acc == id {
                return Some(k);
            }
            acc = self.compose(&acc);
        }
        None
    }

    /// The linear forms `(row_i · (x, y, z))` as a Cremona map.
    pub fn to_cremona(&self) -> CremonaMap<F> {
        let v = plane_vars();
        let comps = self.m.clone().map(|r| {
            MultiPoly::from_terms(
                &v,
                [
                    (vec![1, 0, 0], r[0].clone()),
                    (vec![0, 1, 0], r[1].clone()),
                    (vec![0, 0, 1], r[2].clone()),
                ],
            )
        });
        CremonaMap::new(comps).expect("invertible linear map")
    }
}

impl<F: Field> fmt::Display for ProjLinearMap<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .m
            .iter()
            .map(|r| format!("[{},{},{}]", r[0], r[1], r[2]))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

impl<F: Field> fmt::Debug for ProjLinearMap<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ProjLinearMap({self})")
    }
}

/// Matrix sending `e1, e2, e3, (1,1,1)` to the four given points.
fn frame_matrix<F: Field>(pts: &[[F; 3]; 4]) -> Result<Matrix<F>> {
    let cols: Matrix<F> = (0..3)
        .map(|i| (0..3).map(|j| pts[j][i].clone()).collect())
        .collect();
    let lambda = solve(&cols, &pts[3])
        .ok_or_else(|| Error::Degenerate("three of the points are collinear".into()))?;
    if lambda.iter().any(|l| l.is_zero()) {
        return Err(Error::Degenerate(
            "three of the points are collinear".into(),
        ));
    }
    Ok((0..3)
        .map(|i| (0..3).map(|j| cols[i][j].clone() * &lambda[j]).collect())
        .collect())
}

/// The unique projective map sending `src[i]` to `dst[i]` for `i = 0..4`.
pub fn pgl3_from_frames<F: Field>(
    src: &[[F; 3]; 4],
    dst: &[[F; 3]; 4],
) -> Result<ProjLinearMap<F>> {
    let a = frame_matrix(src)?;
    let b = frame_matrix(dst)?;
    ProjLinearMap::from_matrix(&mat_mul(
        &b,
        &inverse(&a).expect("frame matrix is invertible"),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;
    use crate::cremona::{conjugate, frame_permutation, order_five_map, standard_frame};

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn same_point(a: &[Rational; 3], b: &[Rational; 3]) -> bool {
        (0..3).all(|i| (0..3).all(|j| a[i].clone() * &b[j] == a[j].clone() * &b[i]))
    }

    #[test]
    fn standard_frame_to_itself_is_identity() {
        let f = standard_frame::<Rational>();
        assert_eq!(pgl3_from_frames(&f, &f).unwrap(), ProjLinearMap::identity());
    }

    #[test]
    fn double_transposition_of_the_frame() {
        // (p1 p2)(p3 p4)
        let g = frame_permutation::<Rational>([1, 0, 3, 2]).unwrap();
        let f = standard_frame::<Rational>();
        for (i, j) in [(0, 1), (1, 0), (2, 3), (3, 2)] {
            assert!(same_point(&g.apply(&f[i]), &f[j]));
        }
        assert_eq!(g.order_up_to(4), Some(2));
        // oracle: solving the scaling system by hand gives these rows
        let expected =
            ProjLinearMap::new([[r(0), r(-1), r(1)], [r(-1), r(0), r(1)], [r(0), r(0), r(1)]])
                .unwrap();
        assert_eq!(g, expected);
    }

    #[test]
    fn frames_compose_to_identity() {
        let a = standard_frame::<Rational>();
        let b = [
            [r(1), r(2), r(0)],
            [r(0), r(1), r(3)],
            [r(1), r(0), r(1)],
            [r(5), r(1), r(-2)],
        ];
        let ab = pgl3_from_frames(&a, &b).unwrap();
        let ba = pgl3_from_frames(&b, &a).unwrap();
        assert_eq!(ab.compose(&ba), ProjLinearMap::identity());
        for i in 0..4 {
            assert!(same_point(&ab.apply(&a[i]), &b[i]));
        }
    }

    #[test]
    fn collinear_frames_are_rejected() {
        let a = standard_frame::<Rational>();
        let bad = [
            [r(1), r(0), r(0)],
            [r(0), r(1), r(0)],
            [r(1), r(1), r(0)],
            [r(1), r(2), r(3)],
        ];
        assert!(matches!(
            pgl3_from_frames(&a, &bad),
            Err(Error::Degenerate(_))
        ));
        let bad4 = [
            [r(1), r(0), r(0)],
            [r(0), r(1), r(0)],
            [r(0), r(0), r(1)],
            [r(1), r(1), r(0)],
        ];
        assert!(matches!(
            pgl3_from_frames(&bad4, &a),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn permutation_orders() {
        let c = ProjLinearMap::new([[r(0), r(1), r(0)], [r(0), r(0), r(1)], [r(1), r(0), r(0)]])
            .unwrap();
        assert_eq!(c.order_up_to(10), Some(3));
        assert_eq!(
            frame_permutation::<Rational>([1, 2, 3, 0])
                .unwrap()
                .order_up_to(10),
            Some(4)
        );
    }

    #[test]
    fn conjugation_preserves_order() {
        let t = order_five_map::<Rational>();
        assert_eq!(conjugate(&t, &ProjLinearMap::identity()), t);
        let g = frame_permutation::<Rational>([2, 0, 3, 1]).unwrap();
        assert_eq!(conjugate(&t, &g).order_up_to(6), Some(5));
        let d = ProjLinearMap::diagonal([r(1), r(1), r(-1)]).unwrap();
        assert_eq!(conjugate(&d.to_cremona(), &g).order_up_to(6), Some(2));
    }
}
