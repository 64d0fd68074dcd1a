//! The 27 lines on the Fermat cubic surface and the Picard action of
//! `(x, y, z, w) -> (zeta x, y, z, w)`.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::linalg::det;
use crate::algebra::{parse_poly, Cyclotomic, Field, MultiPoly, VarSet, Vars};
use crate::error::{Error, Result};
use crate::lattice::{PicClass, PicIsometry, PicLattice};

type K3 = Cyclotomic<3>;

/// A line in `P^3`, spanned by two points, with its normalized Plücker
/// vector `(p01, p02, p03, p12, p13, p23)`.
#[derive(Debug, Clone, PartialEq)]
pub struct LineInP3<F: Field> {
    points: [[F; 4]; 2],
    pluecker: [F; 6],
}

const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

impl<F: Field> LineInP3<F> {
    pub fn new(p: [F; 4], q: [F; 4]) -> Result<Self> {
        let mut pl: Vec<F> = PAIRS
            .iter()
            .map(|&(i, j)| p[i].clone() * &q[j] - q[i].clone() * &p[j])
            .collect();
        let Some(first) = pl.iter().find(|c| !c.is_zero()).cloned() else {
            return Err(Error::Degenerate("spanning points coincide".into()));
        };
        let inv = first.inv().unwrap();
        for c in pl.iter_mut() {
            *c = c.clone() * &inv;
        }
        Ok(LineInP3 {
            points: [p, q],
            pluecker: pl.try_into().ok().unwrap(),
        })
    }

    pub fn points(&self) -> &[[F; 4]; 2] {
        &self.points
    }

    pub fn pluecker(&self) -> &[F; 6] {
        &self.pluecker
    }

    /// `p01 p23 - p02 p13 + p03 p12`, zero for every line.
    pub fn pluecker_residual(&self) -> F {
        let p = &self.pluecker;
        p[0].clone() * &p[5] - p[1].clone() * &p[4] + p[2].clone() * &p[3]
    }

    /// Whether the line lies on the surface `f = 0`: `f(s p + t q)` vanishes
    /// identically in `s, t`.
    pub fn lies_on(&self, f: &MultiPoly<F>) -> bool {
        let st = VarSet::new(&["s", "t"]);
        let s = MultiPoly::var(&st, 0);
        let t = MultiPoly::var(&st, 1);
        let images: Vec<MultiPoly<F>> = (0..4)
            .map(|i| &s.scale(&self.points[0][i]) + &t.scale(&self.points[1][i]))
            .collect();
        f.substitute(&images).is_zero()
    }

    pub fn meets(&self, other: &Self) -> bool {
        let m: Vec<Vec<F>> = self
            .points
            .iter()
            .chain(&other.points)
            .map(|p| p.to_vec())
            .collect();
        det(&m).is_zero()
    }

    pub fn map(&self, f: impl Fn(&[F; 4]) -> [F; 4]) -> Result<Self> {
        Self::new(f(&self.points[0]), f(&self.points[1]))
    }
}

pub fn fermat_vars() -> Vars {
    VarSet::new(&["x", "y", "z", "w"])
}

pub fn fermat_equation() -> MultiPoly<K3> {
    parse_poly("x^3+y^3+z^3+w^3", &fermat_vars()).expect("valid")
}

/// `{x_a + u x_b = 0, x_c + v x_d = 0}` for the three pairings `{a,b}{c,d}`
/// of the coordinates and `u, v` ranging over the cube roots of unity.
pub fn lines_on_fermat() -> Vec<LineInP3<K3>> {
    let pairings = [[0, 1, 2, 3], [0, 2, 1, 3], [0, 3, 1, 2]];
    let mut out = Vec::with_capacity(27);
    for [a, b, c, d] in pairings {
        for i in 0..3 {
            for j in 0..3 {
                let mut p = [K3::zero(), K3::zero(), K3::zero(), K3::zero()];
                let mut q = p.clone();
                p[a] = -K3::zeta_pow(i);
                p[b] = K3::one();
                q[c] = -K3::zeta_pow(j);
                q[d] = K3::one();
                out.push(LineInP3::new(p, q).expect("distinct points"));
            }
        }
    }
    out
}

/// `-1` on the diagonal, `1` for meeting pairs, `0` otherwise.
pub fn line_intersections<F: Field>(lines: &[LineInP3<F>]) -> Vec<Vec<i64>> {
    (0..lines.len())
        .map(|i| {
            (0..lines.len())
                .map(|j| {
                    if i == j {
                        -1
                    } else {
                        lines[i].meets(&lines[j]) as i64
                    }
                })
                .collect()
        })
        .collect()
}

/// `perm[i]` is the index of the image of line `i`.
pub fn line_permutation<F: Field>(
    lines: &[LineInP3<F>],
    f: impl Fn(&[F; 4]) -> [F; 4],
) -> Result<Vec<usize>> {
    lines
        .iter()
        .map(|l| {
            let img = l.map(&f)?;
            lines
                .iter()
                .position(|m| m.pluecker == img.pluecker)
                .ok_or_else(|| Error::Precondition("map does not preserve the set of lines".into()))
        })
        .collect()
}

/// The lexicographically first six pairwise disjoint lines.
fn first_sixer(meet: &[Vec<i64>]) -> Option<Vec<usize>> {
    fn go(meet: &[Vec<i64>], start: usize, cur: &mut Vec<usize>) -> bool {
        if cur.len() == 6 {
            return true;
        }
        for i in start..meet.len() {
            if cur.iter().all(|&j| meet[i][j] == 0) {
                cur.push(i);
                if go(meet, i + 1, cur) {
                    return true;
                }
                cur.pop();
            }
        }
        false
    }
    let mut cur = Vec::new();
    go(meet, 0, &mut cur).then_some(cur)
}

/// Classes of all lines in the basis `(L, E1..E6)` where `E_i` is the
/// `i`-th line of the first sixer: a line meeting `e_i, e_j` only is
/// `L - E_i - E_j`, one missing only `e_j` is `2L - sum E + E_j`.
pub fn line_classes(meet: &[Vec<i64>]) -> Result<(Vec<usize>, Vec<PicClass>)> {
    let six = first_sixer(meet).ok_or_else(|| Error::Lattice("no six disjoint lines".into()))?;
    let classes = (0..meet.len())
        .map(|i| {
            let mut c = vec![0i64; 7];
            if let Some(k) = six.iter().position(|&s| s == i) {
                c[k + 1] = 1;
                return Ok(PicClass(c));
            }
            let hits: Vec<usize> = (0..6).filter(|&k| meet[i][six[k]] == 1).collect();
            match hits.len() {
                2 => {
                    c[0] = 1;
                    c[hits[0] + 1] = -1;
                    c[hits[1] + 1] = -1;
                }
                5 => {
                    c[0] = 2;
                    for k in &hits {
                        c[k + 1] = -1;
                    }
                }
                n => return Err(Error::Lattice(format!("line meets {n} lines of a sixer"))),
            }
            Ok(PicClass(c))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((six, classes))
}

#[derive(Debug, Clone, Serialize)]
pub struct FermatSigma {
    pub isometry: PicIsometry,
    pub permutation: Vec<usize>,
    pub sixer: Vec<usize>,
    pub trace: i64,
    pub invariant_rank: usize,
    pub order: Option<u32>,
}

/// The action of `(x, y, z, w) -> (zeta x, y, z, w)` on the Picard lattice
/// of the Fermat cubic, viewed as the blowup of the plane in six points.
pub fn fermat_sigma_action() -> Result<FermatSigma> {
    let lines = lines_on_fermat();
    let meet = line_intersections(&lines);
    let perm = line_permutation(&lines, |p| {
        let mut q = p.clone();
        q[0] = q[0].clone() * &K3::zeta_pow(1);
        q
    })?;
    let (six, classes) = line_classes(&meet)?;
    let l = PicLattice::new(6)?;
    let src: Vec<PicClass> = classes.clone();
    let dst: Vec<PicClass> = perm.iter().map(|&j| classes[j].clone()).collect();
    let iso = crate::lattice::isometry_from_images(&l, &src, &dst)?;
    Ok(FermatSigma {
        trace: iso.trace(),
        invariant_rank: iso.invariant_rank(),
        order: iso.order_up_to(12),
        isometry: iso,
        permutation: perm,
        sixer: six,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twenty_seven_lines_on_the_surface() {
        let lines = lines_on_fermat();
        assert_eq!(lines.len(), 27);
        let f = fermat_equation();
        for l in &lines {
            assert!(l.lies_on(&f));
            assert!(l.pluecker_residual().is_zero());
        }
        for i in 0..27 {
            for j in 0..i {
                assert_ne!(lines[i].pluecker(), lines[j].pluecker());
            }
        }
        // a line off the surface
        let off = LineInP3::new(
            [K3::one(), K3::zero(), K3::zero(), K3::zero()],
            [K3::zero(), K3::one(), K3::zero(), K3::zero()],
        )
        .unwrap();
        assert!(!off.lies_on(&f));
    }

    #[test]
    fn each_line_meets_ten() {
        let m = line_intersections(&lines_on_fermat());
        for (i, row) in m.iter().enumerate() {
            assert_eq!(row.iter().filter(|&&v| v == 1).count(), 10);
            for j in 0..27 {
                assert_eq!(m[i][j], m[j][i]);
            }
        }
    }

    #[test]
    fn line_classes_reproduce_intersections() {
        let m = line_intersections(&lines_on_fermat());
        let (_, classes) = line_classes(&m).unwrap();
        let l = PicLattice::new(6).unwrap();
        for i in 0..27 {
            assert!(l.is_minus_one(&classes[i]));
            for j in 0..27 {
                assert_eq!(l.dot(&classes[i], &classes[j]), m[i][j]);
            }
        }
    }

    #[test]
    fn sigma_trace_is_minus_two() {
        let s = fermat_sigma_action().unwrap();
        assert_eq!(s.trace, -2);
        assert_eq!(s.invariant_rank, 1);
        assert_eq!(s.order, Some(3));
        // the permutation preserves the intersection matrix
        let m = line_intersections(&lines_on_fermat());
        for i in 0..27 {
            for j in 0..27 {
                assert_eq!(m[s.permutation[i]][s.permutation[j]], m[i][j]);
            }
        }
    }
}
