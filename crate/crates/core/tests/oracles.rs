//! Cross-checks of computed values against independent derivations.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use cremona_core::algebra::groebner::DEFAULT_BUDGET;
use cremona_core::algebra::{
    groebner, hilbert_series, parse_poly, resultant, Field, HilbertSeries, Ideal, MultiPoly,
    TermOrder, UniPoly, VarSet,
};
use cremona_core::cremona::{nfc_genus, parse_plane_poly, PlaneCurve, SingularPoint};
use cremona_core::lattice::{minus_one_classes, PicLattice};
use cremona_core::surfaces::{
    invariant_subspace, pluecker_pairs, pluecker_relations, pluecker_vars, CubicPencil, MemberType,
};
use cremona_core::weighted::{
    invariant_generators, jacobian_smooth, DiagonalAction, HypersurfaceModel, WeightedRing,
};
use cremona_core::{QZeta3, QZeta5, QZeta7, Q};

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

#[test]
fn resultant_is_the_product_over_roots() {
    // a = (t - 1)(t + 2)(t - 3), so res(a, b) = b(1) b(-2) b(3)
    let v = VarSet::new(&["t", "s"]);
    let a = parse_poly::<Q>("(t-1)*(t+2)*(t-3)", &v).unwrap();
    let b = parse_poly::<Q>("t^2 + s*t + 5", &v).unwrap();
    let r = resultant(&a, &b, 0).unwrap();
    let at = |x: i64| b.eval_var(0, &q(x));
    let expected = &(&at(1) * &at(-2)) * &at(3);
    assert_eq!(r.embed_by_name(expected.vars()).unwrap(), expected);
}

fn norm_of_one_minus_zeta<F: Field>() -> Q {
    let z = F::generator().unwrap();
    let mut prod = F::one();
    let mut cur = z.clone();
    // the conjugates of zeta are its powers 1..p-1
    loop {
        prod = prod * (F::one() - cur.clone());
        cur = cur * &z;
        if cur.is_one() {
            break;
        }
    }
    prod.to_rational().unwrap()
}

#[test]
fn norms_of_one_minus_zeta_are_the_primes() {
    assert_eq!(norm_of_one_minus_zeta::<QZeta3>(), q(3));
    assert_eq!(norm_of_one_minus_zeta::<QZeta5>(), q(5));
    assert_eq!(norm_of_one_minus_zeta::<QZeta7>(), q(7));
    let one_minus = QZeta5::one() - QZeta5::zeta_pow(1);
    assert_eq!(one_minus.norm(), q(5));
}

#[test]
fn sophie_germain_quartic_splits_into_two_quadratics() {
    // t^4 + 4 = (t^2 + 2t + 2)(t^2 - 2t + 2)
    let f = UniPoly::new(vec![q(4), q(0), q(0), q(0), q(1)]);
    let fs = Q::factor_squarefree(&f);
    assert_eq!(fs.len(), 2);
    assert!(fs.iter().all(|g| g.degree() == Some(2)));
    assert_eq!(fs[0].mul(&fs[1]), f);
    // over Q(zeta_3) nothing more happens; over Q(i) it would split fully
    assert_eq!(
        QZeta3::factor_squarefree(&f.map(|c| QZeta3::from_rational(c.clone()))).len(),
        2
    );
}

#[test]
fn bezout_and_the_twisted_cubic() {
    let v = VarSet::new(&["x", "y", "z", "w"]);
    let p = |s: &str| parse_poly::<Q>(s, &v).unwrap();
    let ci = Ideal::new(&v, vec![p("x*w - y*z"), p("x^3 + y^3 + z^3 + w^3")]).unwrap();
    let hs = hilbert_series(&ci, TermOrder::GRevLex, DEFAULT_BUDGET).unwrap();
    assert_eq!((hs.projective_dimension(), hs.degree()), (1, q(6)));
    let tc = Ideal::new(&v, vec![p("x*z - y^2"), p("y*w - z^2"), p("x*w - y*z")]).unwrap();
    let hs = hilbert_series(&tc, TermOrder::GRevLex, DEFAULT_BUDGET).unwrap();
    assert_eq!((hs.projective_dimension(), hs.degree()), (1, q(3)));
    // Hilbert function 3n + 1
    for n in 0..8 {
        assert_eq!(hs.coefficient(n), BigInt::from(3 * n + 1));
    }
}

#[test]
fn grassmannian_section_has_the_quintic_del_pezzo_hilbert_function() {
    // h(n) = 1 + 5 n (n + 1) / 2 for a del Pezzo surface of degree 5
    let v = pluecker_vars();
    let pairs = pluecker_pairs();
    let var =
        |p: (usize, usize)| MultiPoly::<Q>::var(&v, pairs.iter().position(|&x| x == p).unwrap());
    let mut gens = pluecker_relations();
    for (l, r) in invariant_subspace() {
        gens.push(&var(l) - &var(r));
    }
    let gb = groebner(
        &Ideal::new(&v, gens).unwrap(),
        TermOrder::GRevLex,
        DEFAULT_BUDGET,
    )
    .unwrap();
    let hs = HilbertSeries::from_leading_monomials(&gb.leading_monomials(), v.weights());
    for n in 0..8usize {
        assert_eq!(
            hs.coefficient(n),
            BigInt::from(1 + 5 * n * (n + 1) / 2),
            "degree {n}"
        );
    }
}

#[test]
fn hesse_discriminant_is_mu_cubed_times_a_cube() {
    // mu (x^3 + y^3 + z^3) + lambda xyz is singular iff mu = 0 or lambda^3 = -27 mu^3
    let p = CubicPencil::new(
        parse_plane_poly::<Q>("x^3+y^3+z^3").unwrap(),
        parse_plane_poly("x*y*z").unwrap(),
    )
    .unwrap();
    let d = p.discriminant().unwrap();
    let v = d.vars().clone();
    let factor = parse_poly::<Q>("mu^3*(lambda^3 + 27*mu^3)^3", &v).unwrap();
    let quotient = d.div_exact(&factor).unwrap();
    assert!(quotient.is_constant() && !quotient.is_zero());
}

#[test]
fn z5511_discriminant_vanishes_exactly_at_singular_members() {
    let a = parse_plane_poly::<Q>("y*(x-y)*(x-z)").unwrap();
    let b = parse_plane_poly::<Q>("x*z*(y-z)").unwrap();
    let p = CubicPencil::new(a.clone(), b.clone()).unwrap();
    let d = p.discriminant().unwrap();
    for lam in [-3i64, -1, 0, 1, 2, 5] {
        let member = &a + &b.scale(&q(lam));
        let model = HypersurfaceModel::new(
            WeightedRing::new(&["x", "y", "z"], &[1, 1, 1]).unwrap(),
            member,
            None,
        )
        .unwrap();
        let smooth = jacobian_smooth(&model, DEFAULT_BUDGET).unwrap().smooth;
        let value = d.eval(&[q(lam), q(1)]);
        assert_eq!(smooth, !value.is_zero(), "lambda = {lam}");
    }
    let r = p.singular_members().unwrap();
    assert_eq!(
        r.count(MemberType::Triangle) + r.count(MemberType::Nodal),
        r.members.iter().map(|m| m.degree()).sum::<u32>()
    );
}

#[test]
fn nodal_cubic_has_genus_zero_and_undeclared_nodes_are_caught() {
    let f = parse_plane_poly::<Q>("y^2*z - x^3 - x^2*z").unwrap();
    let node = SingularPoint {
        point: [q(0), q(0), q(1)],
        multiplicity: 2,
    };
    assert_eq!(
        nfc_genus(&PlaneCurve::new(f.clone(), vec![node]).unwrap()).unwrap(),
        0
    );
    assert!(nfc_genus(&PlaneCurve::new(f, vec![]).unwrap()).is_err());
    // a smooth quartic has genus 3
    let g = parse_plane_poly::<Q>("x^4 + y^4 + z^4").unwrap();
    assert_eq!(nfc_genus(&PlaneCurve::new(g, vec![]).unwrap()).unwrap(), 3);
}

#[test]
fn minus_one_graph_on_four_points_is_petersen() {
    let l = PicLattice::new(4).unwrap();
    let cs = minus_one_classes(&l);
    let adj = |i: usize, j: usize| i != j && l.dot(&cs[i], &cs[j]) == 1;
    assert_eq!(cs.len(), 10);
    for i in 0..10 {
        assert_eq!((0..10).filter(|&j| adj(i, j)).count(), 3);
        // no triangles and no 4-cycles: girth 5
        for j in 0..10 {
            if i != j {
                let common = (0..10).filter(|&k| adj(i, k) && adj(j, k)).count();
                assert_eq!(common, if adj(i, j) { 0 } else { 1 });
            }
        }
    }
}

#[test]
fn invariant_generators_match_brute_force() {
    // minimal invariant monomials of degree <= 12 under (1, 2) mod 5 on two variables
    let ring = WeightedRing::with_weights(&[1, 1]).unwrap();
    let act = DiagonalAction::new(5, &[1, 2]).unwrap();
    let g = invariant_generators(&ring, &act, Some(12)).unwrap();
    let invariant = |a: u32, b: u32| (a + 2 * b) % 5 == 0 && a + b > 0;
    let mut brute: Vec<Vec<u32>> = Vec::new();
    for a in 0..=12u32 {
        for b in 0..=12 - a {
            let reducible = (0..=a).any(|c| {
                (0..=b).any(|d| {
                    (c, d) != (0, 0)
                        && (c, d) != (a, b)
                        && invariant(c, d)
                        && invariant(a - c, b - d)
                })
            });
            if invariant(a, b) && !reducible {
                brute.push(vec![a, b]);
            }
        }
    }
    let mut found = g.generators.clone();
    found.sort();
    brute.sort();
    assert_eq!(found, brute);
}
