use std::collections::BTreeSet;

use num_traits::Zero;
use proptest::prelude::*;

use cremona_core::algebra::{groebner, parse_poly, Ideal, MultiPoly, TermOrder, VarSet, Vars};
use cremona_core::cremona::{
    dejonquieres, order_five_map, parse_plane_poly, CremonaMap, ProjLinearMap,
};
use cremona_core::lattice::{minus_one_classes, PicClass, PicIsometry, PicLattice};
use cremona_core::surfaces::EllipticModel;
use cremona_core::weighted::DiagonalAction;
use cremona_core::{Cyclotomic, QZeta3, Q};

fn xyz() -> Vars {
    VarSet::new(&["x", "y", "z"])
}

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

fn rational() -> impl Strategy<Value = Q> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Q::new(n.into(), d.into()))
}

fn poly_q() -> impl Strategy<Value = MultiPoly<Q>> {
    prop::collection::vec((prop::collection::vec(0u32..4, 3), rational()), 0..6)
        .prop_map(|terms| MultiPoly::from_terms(&xyz(), terms))
}

fn zeta3() -> impl Strategy<Value = QZeta3> {
    (rational(), rational()).prop_map(|(a, b)| Cyclotomic::from_coords(vec![a, b]))
}

fn poly_z3() -> impl Strategy<Value = MultiPoly<QZeta3>> {
    prop::collection::vec((prop::collection::vec(0u32..3, 3), zeta3()), 0..5)
        .prop_map(|terms| MultiPoly::from_terms(&xyz(), terms))
}

fn linear_map() -> impl Strategy<Value = ProjLinearMap<Q>> {
    prop::collection::vec(-3i64..=3, 9).prop_filter_map("singular", |v| {
        ProjLinearMap::new([
            [q(v[0]), q(v[1]), q(v[2])],
            [q(v[3]), q(v[4]), q(v[5])],
            [q(v[6]), q(v[7]), q(v[8])],
        ])
        .ok()
    })
}

/// Simple roots `E_i - E_{i+1}` and `L - E1 - E2 - E3` of the lattice of `r` points.
fn simple_roots(r: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 1..r {
        let mut a = vec![0; r + 1];
        a[i] = 1;
        a[i + 1] = -1;
        out.push(a);
    }
    if r >= 3 {
        let mut a = vec![0; r + 1];
        a[0] = 1;
        a[1..4].fill(-1);
        out.push(a);
    }
    out
}

/// The reflection `v -> v + (v.a) a` as a matrix on column vectors.
fn reflection(r: usize, a: &[i64]) -> Vec<Vec<i64>> {
    let sign = |j: usize| if j == 0 { 1 } else { -1 };
    (0..=r)
        .map(|i| {
            (0..=r)
                .map(|j| (i == j) as i64 + a[i] * sign(j) * a[j])
                .collect()
        })
        .collect()
}

fn weyl_element() -> impl Strategy<Value = (usize, Vec<usize>)> {
    (3usize..=8).prop_flat_map(|r| (Just(r), prop::collection::vec(0..r, 0..12)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn printed_polynomials_parse_back(p in poly_q()) {
        prop_assert_eq!(parse_poly::<Q>(&p.to_string(), &xyz()).unwrap(), p);
    }

    #[test]
    fn printed_cyclotomic_polynomials_parse_back(p in poly_z3()) {
        prop_assert_eq!(parse_poly::<QZeta3>(&p.to_string(), &xyz()).unwrap(), p);
    }

    #[test]
    fn ring_axioms(a in poly_q(), b in poly_q(), c in poly_q()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !b.is_zero() {
            prop_assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
        }
    }

    #[test]
    fn generators_reduce_to_zero(a in poly_q(), b in poly_q(), m in poly_q()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let gb = groebner(&Ideal::new(&xyz(), vec![a.clone(), b.clone()]).unwrap(), TermOrder::GRevLex, 5_000);
        if let Ok(gb) = gb {
            prop_assert!(gb.contains(&a));
            prop_assert!(gb.contains(&(&(&m * &a) + &b)));
        }
    }

    #[test]
    fn composition_is_associative(g in linear_map(), h in linear_map()) {
        let t = order_five_map::<Q>();
        let j = dejonquieres(&parse_plane_poly::<Q>("z^2*x+z*y^2+x^3").unwrap()).unwrap();
        let (g, h) = (g.to_cremona(), h.to_cremona());
        prop_assert_eq!(t.compose(&g).compose(&h), t.compose(&g.compose(&h)));
        prop_assert_eq!(j.compose(&t).compose(&g), j.compose(&t.compose(&g)));
        prop_assert_eq!(g.compose(&h.compose(&j)), g.compose(&h).compose(&j));
    }

    #[test]
    fn conjugation_preserves_order_and_degree(g in linear_map()) {
        let t = order_five_map::<Q>();
        let c = cremona_core::cremona::conjugate(&t, &g);
        prop_assert_eq!(c.order_up_to(6), Some(5));
        prop_assert_eq!(c.degree(), 2);
    }

    #[test]
    fn weyl_elements_permute_minus_one_classes((r, word) in weyl_element()) {
        let l = PicLattice::new(r).unwrap();
        let roots = simple_roots(r);
        let mut m = PicIsometry::identity(&l);
        for &i in &word {
            let s = PicIsometry::new(&l, reflection(r, &roots[i % roots.len()])).unwrap();
            m = m.compose(&s);
        }
        let classes = minus_one_classes(&l);
        let set: BTreeSet<&PicClass> = classes.iter().collect();
        let images: BTreeSet<PicClass> = classes.iter().map(|c| m.apply(c)).collect();
        prop_assert_eq!(images.len(), classes.len());
        prop_assert!(images.iter().all(|c| set.contains(c)));
        prop_assert_eq!(m.apply(&l.canonical()), l.canonical());
    }

    #[test]
    fn class_text_round_trips(r in 1usize..=8, coords in prop::collection::vec(-4i64..=4, 9)) {
        let l = PicLattice::new(r).unwrap();
        let c = PicClass(coords[..=r].to_vec());
        prop_assert_eq!(l.parse_class(&c.to_string()).unwrap(), c);
    }

    #[test]
    fn j_is_invariant_under_rescaling(a in rational(), b in rational(), u in rational()) {
        prop_assume!(!u.is_zero());
        let v = VarSet::new::<&str>(&[]);
        let e = EllipticModel { a: MultiPoly::constant(&v, a), b: MultiPoly::constant(&v, b) };
        prop_assume!(!e.discriminant().is_zero());
        prop_assert_eq!(e.rescale(&u).j_invariant().unwrap().value(), e.j_invariant().unwrap().value());
    }

    #[test]
    fn action_normalization_is_idempotent(e in prop::collection::vec(-10i64..10, 4), n in prop::sample::select(vec![2u32, 3, 5, 7])) {
        let w = [1, 1, 2, 3];
        let a = DiagonalAction::new(n, &e).unwrap().normalized(&w);
        prop_assert_eq!(a.normalized(&w), a.clone());
        // a weight shift of the exponents names the same action
        let shifted: Vec<i64> = e.iter().zip(w).map(|(x, wi)| x + wi as i64).collect();
        prop_assert_eq!(DiagonalAction::new(n, &shifted).unwrap().normalized(&w), a);
    }
}

#[test]
fn maps_round_trip_through_text() {
    let t = order_five_map::<Q>();
    assert_eq!(CremonaMap::<Q>::parse(&t.to_string()).unwrap(), t);
}
