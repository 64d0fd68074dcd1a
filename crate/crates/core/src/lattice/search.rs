//! Exhaustive searches: `(-1)`-classes, orbits, order-5 isometries on the
//! quintic del Pezzo lattice and its pentagon splittings.

use itertools::Itertools;
use num_integer::Roots;
use serde::Serialize;

use crate::error::{Error, Result};

use super::{PicClass, PicIsometry, PicLattice};

/// Bound on iterating an isometry when looking for its order; finite-order
/// isometries of these lattices have order at most 30.
const ORDER_BOUND: u32 = 1000;

/// All classes `E = aL - sum b_i E_i` with `E^2 = -1` and `E.K = -1`.
///
/// The two equations read `sum b_i^2 = a^2 + 1` and `sum b_i = 3a - 1`, and
/// Cauchy-Schwarz gives `(3a-1)^2 <= r (a^2+1)`, i.e.
/// `(9-r) a^2 - 6a + 1 - r <= 0`. Since `9 - r >= 1` the left side is at
/// least `a^2 - 6|a| - 7 > 0` once `|a| >= 8`, so `a` ranges over `-7..=7`.
pub fn minus_one_classes(l: &PicLattice) -> Vec<PicClass> {
    let r = l.points() as i64;
    let mut out = Vec::new();
    for a in -7i64..=7 {
        if (9 - r) * a * a - 6 * a + 1 - r > 0 {
            continue;
        }
        let mut b = Vec::with_capacity(r as usize);
        fill(&mut b, r as usize, 3 * a - 1, a * a + 1, &mut |b| {
            let mut v = vec![a];
            v.extend(b.iter().map(|x| -x));
            out.push(PicClass(v));
        });
    }
    out.sort();
    out
}

/// Enumerates integer vectors of length `len` with the given sum and sum of
/// squares.
fn fill(prefix: &mut Vec<i64>, len: usize, sum: i64, sq: i64, emit: &mut impl FnMut(&[i64])) {
    let left = (len - prefix.len()) as i64;
    if left == 0 {
        if sum == 0 && sq == 0 {
            emit(prefix);
        }
        return;
    }
    if sq < 0 || sum * sum > left * sq {
        return;
    }
    let bmax = sq.sqrt();
    for x in -bmax..=bmax {
        prefix.push(x);
        fill(prefix, len, sum - x, sq - x * x, emit);
        prefix.pop();
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Orbit {
    pub members: Vec<PicClass>,
    pub sum: PicClass,
}

/// Splits `classes` into orbits of `m`, in order of first appearance.
pub fn orbit_decomposition(m: &PicIsometry, classes: &[PicClass]) -> Result<Vec<Orbit>> {
    let mut seen = vec![false; classes.len()];
    let mut out = Vec::new();
    for start in 0..classes.len() {
        if seen[start] {
            continue;
        }
        let mut members = vec![classes[start].clone()];
        seen[start] = true;
        let mut cur = m.apply(&classes[start]);
        while cur != classes[start] {
            let Some(i) = classes.iter().position(|c| *c == cur) else {
                return Err(Error::Lattice(format!(
                    "image {cur} lies outside the class set"
                )));
            };
            if seen[i] {
                return Err(Error::Lattice(
                    "map is not a permutation of the class set".into(),
                ));
            }
            seen[i] = true;
            members.push(cur.clone());
            cur = m.apply(&cur);
        }
        let sum = members
            .iter()
            .skip(1)
            .fold(members[0].clone(), |a, b| a.add(b));
        out.push(Orbit { members, sum });
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivisibilityEntry {
    pub orbit: Orbit,
    /// `a` with `sum = a * (-K)`, if any.
    pub multiple: Option<i64>,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivisibilityReport {
    pub order: u32,
    pub degree: i64,
    pub entries: Vec<DivisibilityEntry>,
    pub pass: bool,
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// For an isometry of prime order `n` with invariant rank 1, checks that
/// every orbit sum of `(-1)`-classes is `a (-K)` with `n = a (9 - r)`.
pub fn check_ro1_divisibility(l: &PicLattice, m: &PicIsometry) -> Result<DivisibilityReport> {
    let n = m
        .order_up_to(ORDER_BOUND)
        .ok_or_else(|| Error::Precondition("isometry of infinite order".into()))?;
    if !is_prime(n) {
        return Err(Error::Precondition(format!("order {n} is not prime")));
    }
    let rho = m.invariant_rank();
    if rho != 1 {
        return Err(Error::Precondition(format!(
            "invariant rank is {rho}, expected 1"
        )));
    }
    let anti = l.canonical().neg();
    let d = l.degree();
    let entries: Vec<DivisibilityEntry> = orbit_decomposition(m, &minus_one_classes(l))?
        .into_iter()
        .map(|orbit| {
            let multiple = orbit.sum.multiple_of(&anti);
            let ok = multiple.is_some_and(|a| a > 0 && n as i64 == a * d);
            DivisibilityEntry {
                orbit,
                multiple,
                ok,
            }
        })
        .collect();
    let pass = entries.iter().all(|e| e.ok);
    Ok(DivisibilityReport {
        order: n,
        degree: d,
        entries,
        pass,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimalPairReport {
    pub holds: bool,
    /// For each `(-1)`-class, the least `k` with `M^k E != E` and
    /// `E . M^k E >= 1`, or `None` when there is none.
    pub witnesses: Vec<(PicClass, Option<u32>)>,
}

/// Whether every `(-1)`-class meets some distinct translate of itself.
pub fn minimal_pair_check(m: &PicIsometry, l: &PicLattice) -> MinimalPairReport {
    let order = m.order_up_to(ORDER_BOUND).unwrap_or(ORDER_BOUND);
    let witnesses: Vec<(PicClass, Option<u32>)> = minus_one_classes(l)
        .into_iter()
        .map(|e| {
            let mut cur = e.clone();
            let mut found = None;
            for k in 1..order {
                cur = m.apply(&cur);
                if cur != e && l.dot(&e, &cur) >= 1 {
                    found = Some(k);
                    break;
                }
            }
            (e, found)
        })
        .collect();
    let holds = witnesses.iter().all(|(_, w)| w.is_some());
    MinimalPairReport { holds, witnesses }
}

fn require_four_points(l: &PicLattice) -> Result<()> {
    if l.points() != 4 {
        return Err(Error::Lattice(format!(
            "expected r = 4, got {}",
            l.points()
        )));
    }
    Ok(())
}

/// Every isometry fixing `K`, found by choosing images of `E1..E4` among
/// the `(-1)`-classes; the image of `L` is then `(sum M E_i - K) / 3`.
pub fn isometries_r4(l: &PicLattice) -> Result<Vec<PicIsometry>> {
    require_four_points(l)?;
    let classes = minus_one_classes(l);
    let k = l.canonical();
    let mut out = Vec::new();
    for imgs in classes.iter().permutations(4) {
        if imgs
            .iter()
            .tuple_combinations()
            .any(|(a, b)| l.dot(a, b) != 0)
        {
            continue;
        }
        let sum = imgs.iter().fold(k.neg(), |acc, e| acc.add(e));
        if sum.0.iter().any(|c| c % 3 != 0) {
            continue;
        }
        let limg = PicClass(sum.0.iter().map(|c| c / 3).collect());
        let cols: Vec<&PicClass> = std::iter::once(&limg).chain(imgs.iter().copied()).collect();
        let m: Vec<Vec<i64>> = (0..5)
            .map(|i| cols.iter().map(|c| c.0[i]).collect())
            .collect();
        if let Ok(iso) = PicIsometry::new(l, m) {
            out.push(iso);
        }
    }
    Ok(out)
}

pub fn order5_isometries(l: &PicLattice) -> Result<Vec<PicIsometry>> {
    Ok(isometries_r4(l)?
        .into_iter()
        .filter(|m| m.order_up_to(5) == Some(5))
        .collect())
}

pub fn count_order5_isometries(l: &PicLattice) -> Result<usize> {
    Ok(order5_isometries(l)?.len())
}

/// Two disjoint sets of five `(-1)`-classes, each forming a pentagon (a
/// 5-cycle in the graph where classes meeting once are adjacent).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Splitting {
    pub first: Vec<PicClass>,
    pub second: Vec<PicClass>,
}

impl Splitting {
    pub fn contains_orbits_of(&self, m: &PicIsometry) -> bool {
        [&self.first, &self.second]
            .iter()
            .all(|side| side.iter().all(|c| side.contains(&m.apply(c))))
    }
}

/// Cyclic order of the classes if they form a pentagon.
fn as_pentagon(l: &PicLattice, set: &[PicClass]) -> Option<Vec<PicClass>> {
    let adj = |a: &PicClass, b: &PicClass| l.dot(a, b) == 1;
    if set
        .iter()
        .any(|a| set.iter().filter(|b| adj(a, b)).count() != 2)
    {
        return None;
    }
    let mut cycle = vec![set[0].clone()];
    let mut prev: Option<PicClass> = None;
    loop {
        let cur = cycle.last().unwrap().clone();
        let next = set
            .iter()
            .find(|b| adj(&cur, b) && Some(*b) != prev.as_ref())
            .unwrap()
            .clone();
        if next == set[0] {
            break;
        }
        prev = Some(cur);
        cycle.push(next);
    }
    (cycle.len() == set.len()).then_some(cycle)
}

/// Unordered splittings of the ten `(-1)`-classes into two pentagons.
pub fn pentagon_splittings(l: &PicLattice) -> Result<Vec<Splitting>> {
    require_four_points(l)?;
    let classes = minus_one_classes(l);
    let mut out = Vec::new();
    // fixing classes[0] in the first half counts each unordered pair once
    for rest in (1..classes.len()).combinations(4) {
        let first: Vec<PicClass> = std::iter::once(0)
            .chain(rest.iter().copied())
            .map(|i| classes[i].clone())
            .collect();
        let second: Vec<PicClass> = classes
            .iter()
            .filter(|c| !first.contains(c))
            .cloned()
            .collect();
        if let (Some(a), Some(b)) = (as_pentagon(l, &first), as_pentagon(l, &second)) {
            out.push(Splitting {
                first: a,
                second: b,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{bertini, geiser, isometry_from_cycle, standard_pentagons};

    /// Independent count: brute force over a box larger than the proven one.
    fn brute_count(r: usize) -> usize {
        let l = PicLattice::new(r).unwrap();
        let mut n = 0;
        let range: Vec<i64> = (-4..=4).collect();
        for a in -8i64..=8 {
            for b in std::iter::repeat(range.iter())
                .take(r)
                .multi_cartesian_product()
            {
                let mut v = vec![a];
                v.extend(b.into_iter().copied());
                if l.is_minus_one(&PicClass(v)) {
                    n += 1;
                }
            }
        }
        n
    }

    #[test]
    fn classical_counts() {
        let expected = [1, 3, 6, 10, 16, 27, 56, 240];
        for r in 1..=8 {
            let l = PicLattice::new(r).unwrap();
            let cs = minus_one_classes(&l);
            assert_eq!(cs.len(), expected[r - 1], "r = {r}");
            assert!(cs.iter().all(|c| l.is_minus_one(c)));
        }
        for r in 1..=5 {
            assert_eq!(brute_count(r), expected[r - 1]);
        }
    }

    #[test]
    fn geiser_pairs_classes() {
        let l = PicLattice::new(7).unwrap();
        let g = geiser(&l).unwrap();
        let orbits = orbit_decomposition(&g, &minus_one_classes(&l)).unwrap();
        assert_eq!(orbits.len(), 28);
        assert!(orbits
            .iter()
            .all(|o| o.members.len() == 2 && o.sum == l.canonical().neg()));
        let rep = check_ro1_divisibility(&l, &g).unwrap();
        assert!(rep.pass);
        assert!(rep.entries.iter().all(|e| e.multiple == Some(1)));
        assert!(minimal_pair_check(&g, &l).holds);
    }

    #[test]
    fn bertini_orbits_sum_to_twice_minus_k() {
        let l = PicLattice::new(8).unwrap();
        let b = bertini(&l).unwrap();
        let rep = check_ro1_divisibility(&l, &b).unwrap();
        assert!(rep.pass);
        assert!(rep.entries.iter().all(|e| e.multiple == Some(2)));
    }

    #[test]
    fn identity_fails_the_checks() {
        let l = PicLattice::new(4).unwrap();
        let id = PicIsometry::identity(&l);
        assert!(!minimal_pair_check(&id, &l).holds);
        assert!(check_ro1_divisibility(&l, &id).is_err());
        let orbits = orbit_decomposition(&id, &minus_one_classes(&l)).unwrap();
        assert_eq!(orbits.len(), 10);
    }

    #[test]
    fn pentagon_divisibility_and_pairs() {
        let l = PicLattice::new(4).unwrap();
        let [d1, _] = standard_pentagons(&l).unwrap();
        let s = isometry_from_cycle(&l, &d1).unwrap();
        let rep = check_ro1_divisibility(&l, &s).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.entries.len(), 2);
        let mp = minimal_pair_check(&s, &l);
        assert!(mp.holds);
        for (e, k) in &mp.witnesses {
            let f = s.powu(k.unwrap()).apply(e);
            assert!(f != *e && l.dot(e, &f) >= 1);
        }
    }

    #[test]
    fn quintic_del_pezzo_counts() {
        let l = PicLattice::new(4).unwrap();
        // the full group is the Weyl group of A4, of order 120
        assert_eq!(isometries_r4(&l).unwrap().len(), 120);
        let fives = order5_isometries(&l).unwrap();
        assert_eq!(fives.len(), 24);
        let splits = pentagon_splittings(&l).unwrap();
        assert_eq!(splits.len(), 6);
        for s in &splits {
            assert_eq!(fives.iter().filter(|m| s.contains_orbits_of(m)).count(), 4);
        }
        assert!(count_order5_isometries(&PicLattice::new(5).unwrap()).is_err());
    }
}
