//! Multivariate GCD by content / primitive-part recursion.
//!
//! The main variable is the last one occurring in either input; coefficients
//! with respect to it are handled recursively, and primitive parts go through
//! a primitive pseudo-remainder sequence. Homogeneous inputs are
//! dehomogenized first, which removes one variable from the recursion.

use super::field::Field;
use super::order::TermOrder;
use super::poly::{check_vars, MultiPoly};
use crate::error::{Error, Result};

/// Greatest common divisor with leading coefficient 1 under graded lex.
pub fn poly_gcd<F: Field>(a: &MultiPoly<F>, b: &MultiPoly<F>) -> Result<MultiPoly<F>> {
    check_vars(a.vars(), b.vars())?;
    if a.is_zero() && b.is_zero() {
        return Err(Error::BothZero);
    }
    if a.is_zero() {
        return Ok(b.normalized());
    }
    if b.is_zero() {
        return Ok(a.normalized());
    }
    let vars = a.vars();
    let n = vars.len();
    if n >= 2 && vars.is_unweighted() && a.is_homogeneous() && b.is_homogeneous() {
        let h = n - 1;
        let (va, vb) = (a.valuation_in(h), b.valuation_in(h));
        let ad = strip_power(a, h, va).dehomogenize(h);
        let bd = strip_power(b, h, vb).dehomogenize(h);
        let g = gcd_rec(&ad, &bd);
        let deg = g.degree().unwrap_or(0);
        let mut hpow = vec![0; n];
        hpow[h] = va.min(vb);
        let g = g.homogenize(h, deg).mul_term(&hpow, &F::one());
        return Ok(g.normalized());
    }
    Ok(gcd_rec(a, b).normalized())
}

/// GCD of a list; zero entries are skipped. Errors if all are zero.
pub fn poly_gcd_many<F: Field>(polys: &[MultiPoly<F>]) -> Result<MultiPoly<F>> {
    let mut acc: Option<MultiPoly<F>> = None;
    for p in polys {
        if p.is_zero() {
            continue;
        }
        acc = Some(match acc {
            None => p.normalized(),
            Some(g) if g.is_one() => return Ok(g),
            Some(g) => poly_gcd(&g, p)?,
        });
    }
    acc.ok_or(Error::BothZero)
}

/// Least common multiple, normalized like [`poly_gcd`].
pub fn poly_lcm<F: Field>(a: &MultiPoly<F>, b: &MultiPoly<F>) -> Result<MultiPoly<F>> {
    let g = poly_gcd(a, b)?;
    let q = (a * b).div_exact(&g).ok_or(Error::InexactDivision)?;
    Ok(q.normalized())
}

fn strip_power<F: Field>(p: &MultiPoly<F>, i: usize, e: u32) -> MultiPoly<F> {
    if e == 0 {
        return p.clone();
    }
    let mut out = MultiPoly::zero(p.vars());
    for (m, c) in p.terms() {
        let mut k = m.clone();
        k[i] -= e;
        out.add_term(k, c.clone());
    }
    out
}

fn unit_normal<F: Field>(p: MultiPoly<F>) -> MultiPoly<F> {
    p.monic(TermOrder::GrLex)
}

/// Both inputs nonzero.
fn gcd_rec<F: Field>(a: &MultiPoly<F>, b: &MultiPoly<F>) -> MultiPoly<F> {
    let vars = a.vars().clone();
    let used: Vec<usize> = (0..a.nvars())
        .filter(|&i| a.uses_var(i) || b.uses_var(i))
        .collect();
    let Some(&v) = used.last() else {
        return MultiPoly::one(&vars);
    };
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one(&vars);
    }
    if used.len() == 1 {
        let ua = a.to_univariate(v).unwrap();
        let ub = b.to_univariate(v).unwrap();
        return MultiPoly::from_univariate(&vars, v, &ua.gcd(&ub));
    }
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let gc = gcd_rec(&ca, &cb);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let gp = primitive_prs(pa, pb, v);
    unit_normal(&gc * &gp)
}

/// GCD of the coefficients with respect to variable `v`.
pub(crate) fn content_in<F: Field>(p: &MultiPoly<F>, v: usize) -> MultiPoly<F> {
    let mut coeffs: Vec<MultiPoly<F>> = p
        .coeffs_in(v)
        .into_iter()
        .filter(|c| !c.is_zero())
        .collect();
    // fewest terms first keeps the fold cheap
    coeffs.sort_by_key(|c| c.num_terms());
    let mut acc = unit_normal(coeffs[0].clone());
    for c in &coeffs[1..] {
        if acc.is_constant() {
            break;
        }
        acc = gcd_rec(&acc, c);
    }
    if acc.is_constant() {
        MultiPoly::one(p.vars())
    } else {
        acc
    }
}

fn primitive_part<F: Field>(p: &MultiPoly<F>, v: usize) -> MultiPoly<F> {
    let c = content_in(p, v);
    let q = if c.is_one() {
        p.clone()
    } else {
        p.div_exact(&c).expect("content divides")
    };
    unit_normal(q)
}

/// Pseudo-remainder of `f` by `g` with respect to `v`.
fn prem<F: Field>(f: &MultiPoly<F>, g: &MultiPoly<F>, v: usize) -> MultiPoly<F> {
    let dg = g.degree_in(v);
    let gc = g.coeffs_in(v);
    let lg = gc.last().unwrap().clone();
    let mut r = f.clone();
    while !r.is_zero() && r.degree_in(v) >= dg {
        let dr = r.degree_in(v);
        let lr = r.coeffs_in(v).pop().unwrap();
        let mut shift = vec![0; r.nvars()];
        shift[v] = dr - dg;
        let t = (&lr * g).mul_term(&shift, &F::one());
        r = &(&lg * &r) - &t;
    }
    r
}

fn primitive_prs<F: Field>(a: MultiPoly<F>, b: MultiPoly<F>, v: usize) -> MultiPoly<F> {
    let (mut f, mut g) = if a.degree_in(v) >= b.degree_in(v) {
        (a, b)
    } else {
        (b, a)
    };
    loop {
        if g.is_zero() {
            return primitive_part(&f, v);
        }
        if g.degree_in(v) == 0 {
            return MultiPoly::one(f.vars());
        }
        let r = prem(&f, &g, v);
        f = g;
        g = if r.is_zero() {
            r
        } else {
            primitive_part(&r, v)
        };
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::Rational;
    use crate::algebra::parse::parse_poly;
    use crate::algebra::poly::{VarSet, Vars};

    fn xyz() -> Vars {
        VarSet::new(&["x", "y", "z"])
    }

    fn p(s: &str) -> MultiPoly<Rational> {
        parse_poly(s, &xyz()).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(
            poly_gcd(&p("x^2-y^2"), &p("x^2+2*x*y+y^2")).unwrap(),
            p("x+y")
        );
    }

    #[test]
    fn gcd_with_zero_normalizes() {
        assert_eq!(
            poly_gcd(&p("3*x*y - 6*z^2"), &p("0")).unwrap(),
            p("x*y - 2*z^2")
        );
        assert_eq!(poly_gcd(&p("0"), &p("0")), Err(Error::BothZero));
    }

    #[test]
    fn shared_factor_of_three_variables() {
        let g = poly_gcd(&p("x*z*(x-y)"), &p("z*(x-y)*(y-z)")).unwrap();
        assert_eq!(g, p("x*z - y*z"));
    }

    #[test]
    fn non_homogeneous_inputs() {
        let c = p("x*y + z + 1");
        let a = &c * &p("x^2 + 3");
        let b = &c * &p("y - z^2");
        assert_eq!(poly_gcd(&a, &b).unwrap(), c);
    }

    #[test]
    fn powers_of_the_dehomogenized_variable() {
        let a = p("z^3*(x+y)");
        let b = p("z^2*x*(x+y)^2");
        assert_eq!(poly_gcd(&a, &b).unwrap(), p("x*z^2 + y*z^2"));
    }

    #[test]
    fn mismatched_variables() {
        let other = VarSet::new(&["u"]);
        let u = parse_poly::<Rational>("u", &other).unwrap();
        assert!(matches!(
            poly_gcd(&p("x"), &u),
            Err(Error::VariableMismatch { .. })
        ));
    }
}
