use num_traits::ToPrimitive;
use serde::Serialize;

use crate::algebra::linalg::{inverse, kernel, mat_mul, rank, Matrix};
use crate::algebra::Rational;
use crate::error::{Error, Result};

use super::{PicClass, PicLattice};

/// Integer matrix acting on column vectors, preserving the intersection form
/// and the canonical class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PicIsometry {
    #[serde(rename = "matrix")]
    m: Vec<Vec<i64>>,
}

fn to_q(m: &[Vec<i64>]) -> Matrix<Rational> {
    m.iter()
        .map(|r| {
            r.iter()
                .map(|&x| Rational::from_integer(x.into()))
                .collect()
        })
        .collect()
}

impl PicIsometry {
    /// Verifies `M^T G M = G` and `M K = K`.
    pub fn new(l: &PicLattice, m: Vec<Vec<i64>>) -> Result<Self> {
        let n = l.rank();
        if m.len() != n || m.iter().any(|r| r.len() != n) {
            return Err(Error::Lattice(format!("expected a {n}x{n} matrix")));
        }
        let iso = PicIsometry { m };
        let g = l.gram();
        for i in 0..n {
            for j in 0..n {
                let mut s = 0;
                for k in 0..n {
                    s += iso.m[k][i] * g[k][k] * iso.m[k][j];
                }
                if s != g[i][j] {
                    return Err(Error::Lattice(
                        "matrix does not preserve the intersection form".into(),
                    ));
                }
            }
        }
        if iso.apply(&l.canonical()) != l.canonical() {
            return Err(Error::Lattice(
                "matrix does not fix the canonical class".into(),
            ));
        }
        Ok(iso)
    }

    pub fn identity(l: &PicLattice) -> Self {
        let n = l.rank();
        PicIsometry {
            m: (0..n)
                .map(|i| (0..n).map(|j| (i == j) as i64).collect())
                .collect(),
        }
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.m
    }

    pub fn dim(&self) -> usize {
        self.m.len()
    }

    pub fn apply(&self, v: &PicClass) -> PicClass {
        PicClass(
            self.m
                .iter()
                .map(|r| r.iter().zip(&v.0).map(|(a, b)| a * b).sum())
                .collect(),
        )
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.dim();
        PicIsometry {
            m: (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| (0..n).map(|k| self.m[i][k] * other.m[k][j]).sum())
                        .collect()
                })
                .collect(),
        }
    }

    pub fn powu(&self, k: u32) -> Self {
        let mut acc = PicIsometry {
            m: (0..self.dim())
                .map(|i| (0..self.dim()).map(|j| (i == j) as i64).collect())
                .collect(),
        };
        for _ in 0..k {
            acc = self.compose(&acc);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.m
            .iter()
            .enumerate()
            .all(|(i, r)| r.iter().enumerate().all(|(j, &x)| x == (i == j) as i64))
    }

    pub fn order_up_to(&self, bound: u32) -> Option<u32> {
        let mut acc = self.clone();
        for k in 1..=bound {
            if acc.is_identity() {
                return Some(k);
            }
            acc = self.compose(&acc);
        }
        None
    }

    pub fn trace(&self) -> i64 {
        (0..self.dim()).map(|i| self.m[i][i]).sum()
    }

    /// Rank of the fixed sublattice, `dim ker(M - I)` over Q.
    pub fn invariant_rank(&self) -> usize {
        let n = self.dim();
        let shifted: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| self.m[i][j] - (i == j) as i64).collect())
            .collect();
        kernel(&to_q(&shifted)).len()
    }
}

/// The linear map sending `cycle[i]` to `cycle[i+1]` (cyclically), verified
/// to be an integral isometry fixing `K`.
pub fn isometry_from_cycle(l: &PicLattice, cycle: &[PicClass]) -> Result<PicIsometry> {
    let shifted: Vec<PicClass> = (0..cycle.len())
        .map(|i| cycle[(i + 1) % cycle.len()].clone())
        .collect();
    isometry_from_images(l, cycle, &shifted)
}

/// The linear map sending `src[i]` to `dst[i]`, verified to be an integral
/// isometry fixing `K`. The sources must span the lattice over Q.
pub fn isometry_from_images(
    l: &PicLattice,
    src: &[PicClass],
    dst: &[PicClass],
) -> Result<PicIsometry> {
    let n = l.rank();
    if src.len() != dst.len() || src.iter().chain(dst).any(|c| c.0.len() != n) {
        return Err(Error::Lattice("class of the wrong length".into()));
    }
    // greedily pick a spanning subset
    let mut chosen: Vec<usize> = Vec::new();
    for i in 0..src.len() {
        let mut trial: Vec<Vec<i64>> = chosen.iter().map(|&j| src[j].0.clone()).collect();
        trial.push(src[i].0.clone());
        if rank(&to_q(&trial)) == trial.len() {
            chosen.push(i);
        }
        if chosen.len() == n {
            break;
        }
    }
    if chosen.len() < n {
        return Err(Error::Lattice(format!(
            "classes span rank {} < {n}",
            chosen.len()
        )));
    }
    let columns = |cls: &[PicClass]| -> Matrix<Rational> {
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|r| chosen.iter().map(|&j| cls[j].0[r]).collect())
            .collect();
        to_q(&rows)
    };
    let mq = mat_mul(
        &columns(dst),
        &inverse(&columns(src)).expect("independent columns"),
    );
    let mut m = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let q = &mq[i][j];
            if !q.is_integer() {
                return Err(Error::Lattice(
                    "the assignment does not extend integrally".into(),
                ));
            }
            m[i][j] = q.to_integer().to_i64().expect("small entries");
        }
    }
    let iso = PicIsometry::new(l, m)?;
    if src.iter().zip(dst).any(|(a, b)| iso.apply(a) != *b) {
        return Err(Error::Lattice(
            "the assignment is not consistent with a linear map".into(),
        ));
    }
    Ok(iso)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{bertini, geiser, standard_pentagons};

    #[test]
    fn identity_has_full_invariant_rank() {
        let l = PicLattice::new(6).unwrap();
        let id = PicIsometry::identity(&l);
        assert_eq!(id.invariant_rank(), 7);
        assert_eq!(id.trace(), 7);
    }

    #[test]
    fn involutions_have_rank_one() {
        let g = geiser(&PicLattice::new(7).unwrap()).unwrap();
        assert_eq!(g.order_up_to(4), Some(2));
        assert_eq!(g.invariant_rank(), 1);
        let b = bertini(&PicLattice::new(8).unwrap()).unwrap();
        assert_eq!(b.order_up_to(4), Some(2));
        assert_eq!(b.invariant_rank(), 1);
    }

    #[test]
    fn pentagon_isometry() {
        let l = PicLattice::new(4).unwrap();
        let [d1, d2] = standard_pentagons(&l).unwrap();
        let s = isometry_from_cycle(&l, &d1).unwrap();
        assert_eq!(s.order_up_to(10), Some(5));
        assert_eq!(s.invariant_rank(), 1);
        // D2 is permuted cyclically too
        let mut cur = d2[0].clone();
        let mut seen = vec![cur.clone()];
        for _ in 0..4 {
            cur = s.apply(&cur);
            assert!(d2.contains(&cur));
            seen.push(cur.clone());
        }
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 5);
    }

    #[test]
    fn short_cycle_does_not_span() {
        let l = PicLattice::new(4).unwrap();
        let c = vec![l.exceptional(1), l.exceptional(2), l.exceptional(3)];
        assert!(isometry_from_cycle(&l, &c).is_err());
    }

    #[test]
    fn non_isometries_are_rejected() {
        let l = PicLattice::new(2).unwrap();
        assert!(PicIsometry::new(&l, vec![vec![2, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).is_err());
        // swapping E1 and E2 is fine
        assert!(PicIsometry::new(&l, vec![vec![1, 0, 0], vec![0, 0, 1], vec![0, 1, 0]]).is_ok());
        // swapping L and E1 preserves nothing
        assert!(PicIsometry::new(&l, vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]).is_err());
    }
}
