//! The action of a plane Cremona map on the Picard lattice of the blowup of
//! the plane in four general points, when the map lifts to an automorphism.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::linalg::{det, kernel};
use crate::algebra::Rational;
use crate::cremona::CremonaMap;
use crate::error::{Error, Result};
use crate::lattice::{
    isometry_from_cycle, isometry_from_images, minus_one_classes, standard_pentagons, PicClass,
    PicIsometry, PicLattice,
};

type P = [Rational; 3];

fn proportional(a: &P, b: &P) -> bool {
    (0..3).all(|i| (i + 1..3).all(|j| a[i].clone() * &b[j] == a[j].clone() * &b[i]))
}

fn on_line(line: &[Rational], p: &P) -> bool {
    (line[0].clone() * &p[0] + line[1].clone() * &p[1] + line[2].clone() * &p[2]).is_zero()
}

/// Where the line through points `i` and `j` of the frame goes: a frame
/// point `k` (class `E_k`) or the line through frame points `k, l`.
fn image_of_line(
    f: &CremonaMap<Rational>,
    frame: &[P; 4],
    i: usize,
    j: usize,
    l: &PicLattice,
) -> Result<PicClass> {
    let mut images: Vec<P> = Vec::new();
    for t in 1..40i64 {
        let t = Rational::from_integer(t.into());
        let p: Vec<Rational> = (0..3)
            .map(|k| frame[i][k].clone() + t.clone() * &frame[j][k])
            .collect();
        if let Some(q) = f.apply(&p) {
            images.push(q);
        }
        if images.len() == 4 {
            break;
        }
    }
    if images.len() < 4 {
        return Err(Error::Degenerate("too few regular points on a line".into()));
    }
    if images.iter().all(|q| proportional(q, &images[0])) {
        let k = frame
            .iter()
            .position(|p| proportional(p, &images[0]))
            .ok_or_else(|| Error::Precondition("a line is contracted off the frame".into()))?;
        return Ok(l.exceptional(k + 1));
    }
    let m: Vec<Vec<Rational>> = images[..2].iter().map(|q| q.to_vec()).collect();
    let line = kernel(&m).pop().expect("two distinct points span a line");
    if !images.iter().all(|q| on_line(&line, q)) {
        return Err(Error::Precondition(
            "the image of a line is not a line".into(),
        ));
    }
    let through: Vec<usize> = (0..4).filter(|&k| on_line(&line, &frame[k])).collect();
    match through.as_slice() {
        [a, b] => Ok(l.line_through(a + 1, b + 1)),
        _ => Err(Error::Precondition(
            "the image line does not join two frame points".into(),
        )),
    }
}

/// Push-forward on `Pic` of the blowup at the frame. The six lines
/// `L - E_i - E_j` only span a corank-one sublattice, so the image of each
/// `E_k` is taken to be the unique `(-1)`-class with the right
/// intersections against the images of the lines.
pub fn cremona_picard_action(f: &CremonaMap<Rational>, frame: &[P; 4]) -> Result<PicIsometry> {
    let m: Vec<Vec<Rational>> = frame[..3].iter().map(|p| p.to_vec()).collect();
    if det(&m).is_zero() {
        return Err(Error::Degenerate(
            "frame points are not in general position".into(),
        ));
    }
    let l = PicLattice::new(4)?;
    let mut src = Vec::new();
    let mut dst = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            src.push(l.line_through(i + 1, j + 1));
            dst.push(image_of_line(f, frame, i, j, &l)?);
        }
    }
    let classes = minus_one_classes(&l);
    for k in 1..=4 {
        let e = l.exceptional(k);
        let fits: Vec<&PicClass> = classes
            .iter()
            .filter(|c| {
                src.iter()
                    .zip(&dst)
                    .all(|(s, d)| l.dot(c, d) == l.dot(&e, s))
            })
            .collect();
        match fits.as_slice() {
            [c] => {
                let c = (*c).clone();
                src.push(e);
                dst.push(c);
            }
            _ => {
                return Err(Error::Precondition(format!(
                    "the image of E{k} is not determined"
                )))
            }
        }
    }
    isometry_from_images(&l, &src, &dst)
}

#[derive(Debug, Clone, Serialize)]
pub struct PowerMatch {
    pub map_action: PicIsometry,
    pub pentagon_action: PicIsometry,
    /// `m` with `map_action = pentagon_action^m`, if any.
    pub exponent: Option<u32>,
}

/// Compares the Picard action of `f` with the powers of the isometry that
/// rotates the first standard pentagon.
pub fn match_pentagon_power(f: &CremonaMap<Rational>, frame: &[P; 4]) -> Result<PowerMatch> {
    let l = PicLattice::new(4)?;
    let act = cremona_picard_action(f, frame)?;
    let [d1, _] = standard_pentagons(&l)?;
    let rot = isometry_from_cycle(&l, &d1)?;
    let exponent = (0..5).find(|&m| rot.powu(m) == act);
    Ok(PowerMatch {
        map_action: act,
        pentagon_action: rot,
        exponent,
    })
}

/// Every labelling of the standard frame (`labels[i]` is the frame point
/// called `p_{i+1}`) under which the Picard action of `f` is a power of the
/// first-pentagon rotation, with that power.
pub fn pentagon_powers_over_labellings(f: &CremonaMap<Rational>) -> Result<Vec<([usize; 4], u32)>> {
    let fr = rational_frame();
    let mut out = Vec::new();
    for labels in permutations4() {
        let relabelled = labels.map(|i| fr[i].clone());
        if let Some(m) = match_pentagon_power(f, &relabelled)?.exponent {
            out.push((labels, m));
        }
    }
    Ok(out)
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                if a != b && b != c && a != c {
                    out.push([a, b, c, 6 - a - b - c]);
                }
            }
        }
    }
    out
}

pub fn rational_frame() -> [P; 4] {
    let o = Rational::one;
    let z = Rational::zero;
    [
        [o(), z(), z()],
        [z(), o(), z()],
        [z(), z(), o()],
        [o(), o(), o()],
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cremona::{order_five_map, order_five_map_on_frame};

    #[test]
    fn order_five_maps_act_with_order_five() {
        for f in [order_five_map_on_frame(), order_five_map()] {
            let act = cremona_picard_action(&f, &rational_frame()).unwrap();
            assert_eq!(act.order_up_to(10), Some(5));
            assert_eq!(act.invariant_rank(), 1);
        }
    }

    #[test]
    fn picard_action_is_multiplicative() {
        let f = order_five_map_on_frame();
        let a = cremona_picard_action(&f, &rational_frame()).unwrap();
        let a2 = cremona_picard_action(&f.powu(2), &rational_frame()).unwrap();
        assert_eq!(a.compose(&a), a2);
    }

    #[test]
    fn pentagon_rotation_powers() {
        // the order-5 map of the classification rotates the first pentagon
        // with the standard labels
        let r = match_pentagon_power(&order_five_map(), &rational_frame()).unwrap();
        assert_eq!(r.exponent, Some(1));
        // the frame form needs p1 and p3 exchanged
        let r = match_pentagon_power(&order_five_map_on_frame(), &rational_frame()).unwrap();
        assert_eq!(r.exponent, None);
        let found = pentagon_powers_over_labellings(&order_five_map_on_frame()).unwrap();
        assert!(found.contains(&([2, 1, 0, 3], 1)));
        let mut powers: Vec<u32> = found.iter().map(|(_, m)| *m).collect();
        powers.sort();
        assert_eq!(powers, vec![1, 2, 3, 4]);
        assert_eq!(permutations4().len(), 24);
    }

    #[test]
    fn maps_not_lifting_are_rejected() {
        // moves (1:1:1) off the frame
        let f = CremonaMap::<Rational>::parse("x;y;2*z").unwrap();
        assert!(cremona_picard_action(&f, &rational_frame()).is_err());
    }
}
