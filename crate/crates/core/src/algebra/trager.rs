//! Factorization over `Q(zeta_P)` by Trager's norm method.

use num_traits::Zero;

use super::cyclotomic::Cyclotomic;
use super::field::{Field, Rational};
use super::univariate::UniPoly;

fn conjugate_poly<const P: u32>(f: &UniPoly<Cyclotomic<P>>, k: u32) -> UniPoly<Cyclotomic<P>> {
    f.map(|c| c.conjugate(k))
}

/// Norm of `f` down to `Q[t]`: the product of all Galois conjugates.
pub(crate) fn norm_poly<const P: u32>(f: &UniPoly<Cyclotomic<P>>) -> UniPoly<Rational> {
    let mut acc = f.clone();
    for k in 2..P {
        acc = acc.mul(&conjugate_poly(f, k));
    }
    acc.map(|c| c.to_rational().expect("norm has rational coefficients"))
}

pub(crate) fn factor_squarefree_cyclotomic<const P: u32>(
    f: &UniPoly<Cyclotomic<P>>,
) -> Vec<UniPoly<Cyclotomic<P>>> {
    let f = f.monic();
    if f.deg() <= 1 {
        return vec![f];
    }
    let zeta = Cyclotomic::<P>::generator().unwrap();
    // shifts 0, 1, -1, 2, -2, ... until the norm is squarefree
    for step in 0i64.. {
        let s = if step % 2 == 1 {
            (step + 1) / 2
        } else {
            -(step / 2)
        };
        let shift = zeta.clone() * &Cyclotomic::<P>::from_i64(s);
        // g(t) = f(t - s*zeta)
        let g = f.shift(&-shift.clone());
        let n = norm_poly(&g);
        if n.gcd(&n.derivative()).deg() > 0 {
            continue;
        }
        let parts = Rational::factor_squarefree(&n);
        if parts.len() == 1 {
            return vec![f];
        }
        let mut out = Vec::new();
        let mut rest = g.clone();
        for h in parts {
            let hk = h.map(|c| Cyclotomic::<P>::from_rational(c.clone()));
            let d = rest.gcd(&hk);
            if d.deg() > 0 {
                rest = rest.div_exact(&d).expect("gcd divides");
                out.push(d.shift(&shift));
            }
        }
        debug_assert!(rest.deg() == 0 && !rest.lc().is_zero());
        return out;
    }
    unreachable!()
}
