//! Plane Cremona transformations given by coprime triples of forms in
//! `(x, y, z)`.
//!
//! Maps are stored saturated (the three components have no common factor)
//! and canonically scaled, so structural equality is equality of maps.

mod curve;
mod dejonquieres;
mod linear;

use std::fmt;
use std::sync::OnceLock;

use crate::algebra::{parse_poly, poly_gcd_many, Field, MultiPoly, TermOrder, VarSet, Vars};
use crate::error::{Error, Result};

pub use curve::{
    is_ordinary_at, local_tjurina, multiplicity_at, nfc_genus, total_tjurina, PlaneCurve,
    SingularPoint,
};
pub use dejonquieres::{dejonquieres, split_at_vertex};
pub use linear::{pgl3_from_frames, ProjLinearMap};

/// The shared variable set `(x, y, z)` of the plane.
pub fn plane_vars() -> Vars {
    static VARS: OnceLock<Vars> = OnceLock::new();
    VARS.get_or_init(|| VarSet::new(&["x", "y", "z"])).clone()
}

pub fn parse_plane_poly<F: Field>(text: &str) -> Result<MultiPoly<F>> {
    parse_poly(text, &plane_vars())
}

#[derive(Clone, PartialEq, Eq)]
pub struct CremonaMap<F: Field> {
    comps: [MultiPoly<F>; 3],
    degree: u64,
}

impl<F: Field> CremonaMap<F> {
    /// Builds a map from three forms of equal degree; common factors are
    /// divided out and the result is canonically scaled.
    pub fn new(comps: [MultiPoly<F>; 3]) -> Result<Self> {
        let vars = plane_vars();
        if comps.iter().all(|c| c.is_zero()) {
            return Err(Error::InvalidMap("all components are zero".into()));
        }
        let [a, b, c] = comps;
        let comps = [
            a.embed_by_name(&vars)?,
            b.embed_by_name(&vars)?,
            c.embed_by_name(&vars)?,
        ];
        let mut degree = None;
        for c in comps.iter().filter(|c| !c.is_zero()) {
            if !c.is_homogeneous() {
                return Err(Error::NotHomogeneous);
            }
            let d = c.degree().unwrap();
            if *degree.get_or_insert(d) != d {
                return Err(Error::InvalidMap("components of different degrees".into()));
            }
        }
        Self::saturate(comps, degree.unwrap())
    }

    pub fn parse(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(';').collect();
        if parts.len() != 3 {
            return Err(Error::InvalidMap(format!(
                "expected three components separated by ';', got {}",
                parts.len()
            )));
        }
        let v = plane_vars();
        Self::new([
            parse_poly(parts[0], &v)?,
            parse_poly(parts[1], &v)?,
            parse_poly(parts[2], &v)?,
        ])
    }

    fn saturate(comps: [MultiPoly<F>; 3], degree: u64) -> Result<Self> {
        let g = poly_gcd_many(&comps)?;
        let (comps, degree) = if g.is_constant() {
            (comps, degree)
        } else {
            let gd = g.degree().unwrap();
            let divided = comps.map(|c| c.div_exact(&g).expect("gcd divides"));
            (divided, degree - gd)
        };
        let lead = comps
            .iter()
            .find(|c| !c.is_zero())
            .unwrap()
            .leading_coeff(TermOrder::GrLex);
        let s = lead.inv().expect("nonzero leading coefficient");
        Ok(CremonaMap {
            comps: comps.map(|c| c.scale(&s)),
            degree,
        })
    }

    pub fn identity() -> Self {
        let v = plane_vars();
        CremonaMap {
            comps: [
                MultiPoly::var(&v, 0),
                MultiPoly::var(&v, 1),
                MultiPoly::var(&v, 2),
            ],
            degree: 1,
        }
    }

    pub fn components(&self) -> &[MultiPoly<F>; 3] {
        &self.comps
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// `self ∘ other`, saturated.
    pub fn compose(&self, other: &Self) -> Self {
        let raw = self.comps.clone().map(|c| c.substitute(&other.comps));
        Self::saturate(raw, self.degree * other.degree)
            .expect("composition of dominant maps is nonzero")
    }

    /// Degree of `self ∘ other` before the common factor is removed.
    pub fn raw_compose_degree(&self, other: &Self) -> u64 {
        self.degree * other.degree
    }

    pub fn powu(&self, k: u32) -> Self {
        let mut acc = Self::identity();
        for _ in 0..k {
            acc = self.compose(&acc);
        }
        acc
    }

    /// Least `k <= bound` with `self^k = id`.
    pub fn order_up_to(&self, bound: u32) -> Option<u32> {
        let mut acc = self.clone();
        for k in 1..=bound {
            if acc.is_identity() {
                return Some(k);
            }
            if k < bound {
                acc = self.compose(&acc);
            }
        }
        None
    }

    /// GCD of the 2x2 minors of the matrix with rows `(x, y, z)` and the
    /// components; returns 1 when no curve is fixed pointwise.
    pub fn fixed_curve(&self) -> Result<MultiPoly<F>> {
        if self.is_identity() {
            return Err(Error::IdentityMap);
        }
        let v = plane_vars();
        let (x, y, z) = (
            MultiPoly::var(&v, 0),
            MultiPoly::var(&v, 1),
            MultiPoly::var(&v, 2),
        );
        let [f0, f1, f2] = &self.comps;
        let minors = [
            &(&y * f2) - &(&z * f1),
            &(&z * f0) - &(&x * f2),
            &(&x * f1) - &(&y * f0),
        ];
        poly_gcd_many(&minors)
    }

    /// Image of a point; `None` when it is a base point.
    pub fn apply(&self, p: &[F]) -> Option<[F; 3]> {
        let img = [
            self.comps[0].eval(p),
            self.comps[1].eval(p),
            self.comps[2].eval(p),
        ];
        if img.iter().all(|c| c.is_zero()) {
            None
        } else {
            Some(img)
        }
    }
}

/// `g ∘ f ∘ g^{-1}`, saturated.
pub fn conjugate<F: Field>(f: &CremonaMap<F>, g: &ProjLinearMap<F>) -> CremonaMap<F> {
    g.to_cremona()
        .compose(&f.compose(&g.inverse().to_cremona()))
}

impl<F: Field> fmt::Display for CremonaMap<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{};{}", self.comps[0], self.comps[1], self.comps[2])
    }
}

impl<F: Field> fmt::Debug for CremonaMap<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CremonaMap({self})")
    }
}

/// The quadratic map `(x(z-y), z(x-y), xz)` of order 5.
pub fn order_five_map<F: Field>() -> CremonaMap<F> {
    CremonaMap::parse("x*(z-y);z*(x-y);x*z").unwrap()
}

/// The order-5 map `(xz, x(z-y), z(x-y))`, whose base points and those of
/// its inverse form the standard frame `e1, e2, e3, (1,1,1)`.
pub fn order_five_map_on_frame<F: Field>() -> CremonaMap<F> {
    CremonaMap::parse("x*z;x*(z-y);z*(x-y)").unwrap()
}

/// The standard frame `(1,0,0), (0,1,0), (0,0,1), (1,1,1)`.
pub fn standard_frame<F: Field>() -> [[F; 3]; 4] {
    let (o, z) = (F::one(), F::zero());
    [
        [o.clone(), z.clone(), z.clone()],
        [z.clone(), o.clone(), z.clone()],
        [z.clone(), z, o.clone()],
        [o.clone(), o.clone(), o],
    ]
}

/// The projective map permuting the standard frame: point `i` goes to
/// point `perm[i]`.
pub fn frame_permutation<F: Field>(perm: [usize; 4]) -> Result<ProjLinearMap<F>> {
    let src = standard_frame::<F>();
    let mut dst = src.clone();
    for i in 0..4 {
        dst[i] = src[perm[i]].clone();
    }
    pgl3_from_frames(&src, &dst)
}

/// The projective map realizing a permutation of four labelled points,
/// given in cycle notation on labels `0..4`, where label `i` sits at frame
/// point `labels[i]`.
pub fn labelled_frame_permutation<F: Field>(
    cycles: &[Vec<usize>],
    labels: [usize; 4],
) -> Result<ProjLinearMap<F>> {
    let mut perm = [0, 1, 2, 3];
    for c in cycles {
        for i in 0..c.len() {
            let (from, to) = (c[i], c[(i + 1) % c.len()]);
            if from > 3 || to > 3 {
                return Err(Error::Precondition(format!(
                    "point label {} out of range",
                    from.max(to) + 1
                )));
            }
            perm[labels[from]] = labels[to];
        }
    }
    frame_permutation(perm)
}

/// Closure of `gens` under composition (stops after `limit` elements).
pub fn generated_group<F: Field>(gens: &[ProjLinearMap<F>], limit: usize) -> Vec<ProjLinearMap<F>> {
    let mut group = vec![ProjLinearMap::identity()];
    let mut frontier = group.clone();
    while !frontier.is_empty() && group.len() < limit {
        let mut next = Vec::new();
        for h in &frontier {
            for g in gens {
                let e = g.compose(h);
                if !group.contains(&e) {
                    group.push(e.clone());
                    next.push(e);
                }
            }
        }
        frontier = next;
    }
    group
}

/// For each `k` in `2..order`, the first candidate `g` with
/// `g ∘ f ∘ g^{-1} = f^k`, if any.
pub fn power_conjugators<F: Field>(
    f: &CremonaMap<F>,
    candidates: &[ProjLinearMap<F>],
    order: u32,
) -> Vec<(u32, Option<ProjLinearMap<F>>)> {
    let conj: Vec<CremonaMap<F>> = candidates.iter().map(|g| conjugate(f, g)).collect();
    (2..order)
        .map(|k| {
            let fk = f.powu(k);
            (
                k,
                conj.iter()
                    .position(|c| *c == fk)
                    .map(|i| candidates[i].clone()),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;

    type M = CremonaMap<Rational>;

    fn p(s: &str) -> MultiPoly<Rational> {
        parse_plane_poly(s).unwrap()
    }

    #[test]
    fn both_order_five_maps_have_order_five() {
        for t in [order_five_map::<Rational>(), order_five_map_on_frame()] {
            assert_eq!(t.order_up_to(10), Some(5));
            assert_eq!(t.order_up_to(4), None);
            for k in 1..5 {
                assert!(!t.powu(k).is_identity());
            }
        }
    }

    #[test]
    fn square_of_the_order_five_map_drops_degree() {
        let t = order_five_map::<Rational>();
        let t2 = t.compose(&t);
        assert_eq!(t.raw_compose_degree(&t), 4);
        assert_eq!(t2.degree(), 2);
    }

    #[test]
    fn identity_is_neutral_and_saturation_scales() {
        let t = order_five_map::<Rational>();
        assert_eq!(M::identity().compose(&t), t);
        assert_eq!(t.compose(&M::identity()), t);
        let scaled = M::new([p("2*x^2"), p("2*x*y"), p("2*x*z")]).unwrap();
        assert!(scaled.is_identity());
        assert!(M::new([p("0"), p("0"), p("0")]).is_err());
        assert!(M::new([p("x"), p("y^2"), p("z")]).is_err());
        assert!(M::parse("x;y").is_err());
    }

    #[test]
    fn fixed_line_of_a_reflection() {
        let r = M::parse("x;y;-z").unwrap();
        assert_eq!(r.order_up_to(5), Some(2));
        assert_eq!(r.fixed_curve().unwrap(), p("z"));
        assert_eq!(M::identity().fixed_curve(), Err(Error::IdentityMap));
        // the order-5 map fixes no curve
        assert!(order_five_map::<Rational>()
            .fixed_curve()
            .unwrap()
            .is_constant());
    }

    #[test]
    fn composition_is_associative() {
        let a = order_five_map::<Rational>();
        let b = M::parse("y*z;x*z;x*y").unwrap();
        let c = M::parse("x+y;y;z-x").unwrap();
        assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
    }

    #[test]
    fn display_round_trips() {
        let t = order_five_map_on_frame::<Rational>();
        assert_eq!(M::parse(&t.to_string()).unwrap(), t);
    }

    fn cycles_on_frame(labels: [usize; 4]) -> Vec<ProjLinearMap<Rational>> {
        // (p1 p4 p2 p3), (p1 p3 p2 p4), (p1 p2)(p3 p4)
        [
            vec![vec![0, 3, 1, 2]],
            vec![vec![0, 2, 1, 3]],
            vec![vec![0, 1], vec![2, 3]],
        ]
        .iter()
        .map(|cs| labelled_frame_permutation(cs, labels).unwrap())
        .collect()
    }

    #[test]
    fn powers_are_conjugate_under_frame_permutations() {
        let t = order_five_map_on_frame::<Rational>();
        // with p1..p4 in the order e1, e2, e3, (1,1,1) no generator works
        let literal = cycles_on_frame([0, 1, 2, 3]);
        assert_eq!(generated_group(&literal, 100).len(), 4);
        assert!(power_conjugators(&t, &generated_group(&literal, 100), 5)
            .iter()
            .all(|(_, w)| w.is_none()));
        // exchanging the labels of p2 and p4, each generator conjugates t to a power
        let swapped = cycles_on_frame([0, 3, 2, 1]);
        let found: Vec<u32> = swapped
            .iter()
            .map(|g| (2..5).find(|&k| conjugate(&t, g) == t.powu(k)).unwrap())
            .collect();
        assert_eq!(found, vec![3, 2, 4]);
        for (_, w) in power_conjugators(&t, &swapped, 5) {
            assert!(w.is_some());
        }
    }
}
