//! Picard lattices `Z^{1+r}` of blowups of the plane in `r <= 8` points,
//! in the basis `(L, E1, ..., Er)` with form `diag(1, -1, ..., -1)` and
//! canonical class `K = -3L + E1 + ... + Er`.

mod isometry;
mod search;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use isometry::{isometry_from_cycle, isometry_from_images, PicIsometry};
pub use search::{
    check_ro1_divisibility, count_order5_isometries, isometries_r4, minimal_pair_check,
    minus_one_classes, orbit_decomposition, order5_isometries, pentagon_splittings,
    DivisibilityEntry, DivisibilityReport, MinimalPairReport, Orbit, Splitting,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PicLattice {
    r: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PicClass(pub Vec<i64>);

impl PicLattice {
    pub fn new(r: usize) -> Result<Self> {
        if !(1..=8).contains(&r) {
            return Err(Error::Lattice(format!(
                "number of points {r} outside 1..=8"
            )));
        }
        Ok(PicLattice { r })
    }

    pub fn points(&self) -> usize {
        self.r
    }

    pub fn rank(&self) -> usize {
        self.r + 1
    }

    /// `K^2 = 9 - r`.
    pub fn degree(&self) -> i64 {
        9 - self.r as i64
    }

    pub fn gram(&self) -> Vec<Vec<i64>> {
        (0..self.rank())
            .map(|i| {
                (0..self.rank())
                    .map(|j| {
                        if i != j {
                            0
                        } else if i == 0 {
                            1
                        } else {
                            -1
                        }
                    })
                    .collect()
            })
            .collect()
    }

    pub fn dot(&self, a: &PicClass, b: &PicClass) -> i64 {
        a.0[0] * b.0[0]
            - a.0[1..]
                .iter()
                .zip(&b.0[1..])
                .map(|(x, y)| x * y)
                .sum::<i64>()
    }

    pub fn canonical(&self) -> PicClass {
        let mut v = vec![1; self.rank()];
        v[0] = -3;
        PicClass(v)
    }

    pub fn line(&self) -> PicClass {
        self.basis(0)
    }

    /// `E_i` for `i` in `1..=r`.
    pub fn exceptional(&self, i: usize) -> PicClass {
        assert!((1..=self.r).contains(&i));
        self.basis(i)
    }

    /// `L - E_i - E_j`, the strict transform of the line through two points.
    pub fn line_through(&self, i: usize, j: usize) -> PicClass {
        let mut v = self.line();
        v.0[i] -= 1;
        v.0[j] -= 1;
        v
    }

    fn basis(&self, i: usize) -> PicClass {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        PicClass(v)
    }

    pub fn is_minus_one(&self, e: &PicClass) -> bool {
        self.dot(e, e) == -1 && self.dot(e, &self.canonical()) == -1
    }

    /// Parses `[a, b1, ..., br]` or a symbolic sum such as `3L-E1-2*E4`.
    pub fn parse_class(&self, text: &str) -> Result<PicClass> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |msg: &str| Error::Parse {
            pos: 0,
            msg: format!("{msg} in class `{text}`"),
        };
        if let Some(inner) = t.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
            let v: Vec<i64> = inner
                .split(',')
                .map(|s| s.parse::<i64>().map_err(|_| bad("bad integer")))
                .collect::<Result<_>>()?;
            if v.len() != self.rank() {
                return Err(bad("wrong number of coordinates"));
            }
            return Ok(PicClass(v));
        }
        let mut v = vec![0i64; self.rank()];
        let bytes = t.as_bytes();
        let mut i = 0;
        if bytes.is_empty() {
            return Err(bad("empty input"));
        }
        while i < bytes.len() {
            let mut sign = 1;
            if bytes[i] == b'+' || bytes[i] == b'-' {
                if bytes[i] == b'-' {
                    sign = -1;
                }
                i += 1;
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let coeff: i64 = if start == i {
                1
            } else {
                t[start..i].parse().map_err(|_| bad("bad integer"))?
            };
            if i < bytes.len() && bytes[i] == b'*' {
                i += 1;
            }
            let idx = match bytes.get(i) {
                Some(b'L') => {
                    i += 1;
                    0
                }
                Some(b'E') => {
                    i += 1;
                    let s = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let k: usize = t[s..i].parse().map_err(|_| bad("missing index after E"))?;
                    if k == 0 || k > self.r {
                        return Err(bad("exceptional index out of range"));
                    }
                    k
                }
                _ => return Err(bad("expected L or E<i>")),
            };
            v[idx] += sign * coeff;
        }
        Ok(PicClass(v))
    }
}

impl PicClass {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn add(&self, o: &PicClass) -> PicClass {
        PicClass(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: i64) -> PicClass {
        PicClass(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> PicClass {
        self.scale(-1)
    }

    /// `Some(a)` when `self = a * other` for an integer `a`.
    pub fn multiple_of(&self, other: &PicClass) -> Option<i64> {
        let i = other.0.iter().position(|&c| c != 0)?;
        if self.0[i] % other.0[i] != 0 {
            return None;
        }
        let a = self.0[i] / other.0[i];
        (*self == other.scale(a)).then_some(a)
    }
}

impl fmt::Display for PicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (i, &c) in self.0.iter().enumerate() {
            // coordinates are (a, b1, ..., br) with class aL + sum b_i E_i
            if c == 0 {
                continue;
            }
            let name = if i == 0 {
                "L".to_string()
            } else {
                format!("E{i}")
            };
            if c < 0 {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if c.abs() != 1 {
                out.push_str(&c.abs().to_string());
            }
            out.push_str(&name);
        }
        if out.is_empty() {
            out.push('0');
        }
        write!(f, "{out}")
    }
}

/// `D -> -D + (D.K) K` on the blowup in 7 points.
pub fn geiser(l: &PicLattice) -> Result<PicIsometry> {
    if l.points() != 7 {
        return Err(Error::Lattice(format!(
            "the Geiser action needs r = 7, got {}",
            l.points()
        )));
    }
    PicIsometry::new(l, reflection_through_canonical(l, 1))
}

/// `D -> -D + 2 (D.K) K` on the blowup in 8 points.
pub fn bertini(l: &PicLattice) -> Result<PicIsometry> {
    if l.points() != 8 {
        return Err(Error::Lattice(format!(
            "the Bertini action needs r = 8, got {}",
            l.points()
        )));
    }
    PicIsometry::new(l, reflection_through_canonical(l, 2))
}

fn reflection_through_canonical(l: &PicLattice, c: i64) -> Vec<Vec<i64>> {
    let k = l.canonical();
    let gk: Vec<i64> = l
        .gram()
        .iter()
        .map(|row| row.iter().zip(&k.0).map(|(g, x)| g * x).sum())
        .collect();
    (0..l.rank())
        .map(|i| {
            (0..l.rank())
                .map(|j| -((i == j) as i64) + c * k.0[i] * gk[j])
                .collect()
        })
        .collect()
}

/// The two pentagons of `(-1)`-classes on the blowup in 4 points exchanged by
/// the order-5 map, in cyclic order.
pub fn standard_pentagons(l: &PicLattice) -> Result<[Vec<PicClass>; 2]> {
    if l.points() != 4 {
        return Err(Error::Lattice(
            "pentagons live on the blowup in 4 points".into(),
        ));
    }
    let d1 = vec![
        l.line_through(1, 2),
        l.exceptional(1),
        l.line_through(1, 4),
        l.line_through(2, 3),
        l.exceptional(2),
    ];
    let d2 = vec![
        l.line_through(3, 4),
        l.exceptional(4),
        l.line_through(2, 4),
        l.line_through(1, 3),
        l.exceptional(3),
    ];
    Ok([d1, d2])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_class_has_square_nine_minus_r() {
        for r in 1..=8 {
            let l = PicLattice::new(r).unwrap();
            let k = l.canonical();
            assert_eq!(l.dot(&k, &k), l.degree());
        }
        assert!(PicLattice::new(0).is_err());
        assert!(PicLattice::new(9).is_err());
    }

    #[test]
    fn class_text_round_trips() {
        let l = PicLattice::new(4).unwrap();
        let c = l.parse_class("3L-E1-2*E4").unwrap();
        assert_eq!(c, PicClass(vec![3, -1, 0, 0, -2]));
        assert_eq!(c.to_string(), "3L-E1-2E4");
        assert_eq!(l.parse_class(&c.to_string()).unwrap(), c);
        assert_eq!(
            l.parse_class("[1,-1,-1,0,0]").unwrap(),
            l.line_through(1, 2)
        );
        assert!(l.parse_class("E5").is_err());
        assert!(l.parse_class("[1,2]").is_err());
        assert!(l.parse_class("Q").is_err());
    }

    #[test]
    fn geiser_and_bertini_fix_k() {
        let l7 = PicLattice::new(7).unwrap();
        let g = geiser(&l7).unwrap();
        assert_eq!(g.apply(&l7.canonical()), l7.canonical());
        assert_eq!(g.trace(), -6);
        let l8 = PicLattice::new(8).unwrap();
        let b = bertini(&l8).unwrap();
        assert_eq!(b.apply(&l8.canonical()), l8.canonical());
        assert!(geiser(&l8).is_err());
        assert!(bertini(&l7).is_err());
    }

    #[test]
    fn pentagon_sums_to_minus_k() {
        let l = PicLattice::new(4).unwrap();
        for p in standard_pentagons(&l).unwrap() {
            let sum = p.iter().fold(PicClass(vec![0; 5]), |a, b| a.add(b));
            assert_eq!(sum, l.canonical().neg());
            for i in 0..5 {
                assert_eq!(l.dot(&p[i], &p[(i + 1) % 5]), 1);
                assert_eq!(l.dot(&p[i], &p[(i + 2) % 5]), 0);
            }
        }
    }
}
