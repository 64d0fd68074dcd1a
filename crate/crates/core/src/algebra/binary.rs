//! Factorization of binary forms, and extraction of linear factors of
//! ternary forms.

use super::field::Field;
use super::linalg::det;
use super::poly::{MultiPoly, VarSet};
use super::univariate::UniPoly;
use crate::error::{Error, Result};

/// `f = unit * prod linear^m * prod residual^m`.
#[derive(Debug, Clone, PartialEq)]
pub struct BinaryFactorization<F: Field> {
    pub unit: F,
    pub linear: Vec<(MultiPoly<F>, u32)>,
    /// Factors of degree at least 2, irreducible over the coefficient field.
    pub residual: Vec<(MultiPoly<F>, u32)>,
}

impl<F: Field> BinaryFactorization<F> {
    pub fn expand(&self, vars: &super::poly::Vars) -> MultiPoly<F> {
        let mut acc = MultiPoly::constant(vars, self.unit.clone());
        for (p, m) in self.linear.iter().chain(&self.residual) {
            acc = &acc * &p.powu(*m);
        }
        acc
    }

    pub fn linear_count(&self) -> u32 {
        self.linear.iter().map(|(_, m)| m).sum()
    }
}

/// Splits a homogeneous form in (at most) two variables into linear factors
/// over its coefficient field, plus irreducible residual factors.
pub fn factor_binary_form<F: Field>(f: &MultiPoly<F>) -> Result<BinaryFactorization<F>> {
    if f.is_zero() {
        return Err(Error::Precondition("cannot factor the zero form".into()));
    }
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let vars = f.vars().clone();
    let (u, v) = if vars.len() == 2 {
        (0, 1)
    } else {
        let used = f.used_vars();
        if used.len() > 2 {
            return Err(Error::TooManyVariables(used.len()));
        }
        let mut pick = used.clone();
        for i in 0..vars.len() {
            if pick.len() == 2 {
                break;
            }
            if !pick.contains(&i) {
                pick.push(i);
            }
        }
        if pick.len() < 2 {
            return Err(Error::Precondition("need two variables".into()));
        }
        pick.sort();
        (pick[0], pick[1])
    };
    if vars.weights()[u] != 1 || vars.weights()[v] != 1 {
        return Err(Error::Unsupported(
            "binary forms in weighted variables".into(),
        ));
    }
    let mut linear = Vec::new();
    let mut residual = Vec::new();
    let k = f.valuation_in(v);
    if k > 0 {
        linear.push((MultiPoly::var(&vars, v), k));
    }
    let h = f.dehomogenize(v).to_univariate(u).expect("binary form");
    let unit = h.lc();
    for (p, m) in h.factor() {
        let form = MultiPoly::from_univariate(&vars, u, &p).homogenize(v, p.deg() as u64);
        if p.deg() == 1 {
            linear.push((form, m));
        } else {
            residual.push((form, m));
        }
    }
    Ok(BinaryFactorization {
        unit,
        linear,
        residual,
    })
}

/// Finds one linear factor of a ternary form in variables (x, y, z).
fn find_linear_factor<F: Field>(f: &MultiPoly<F>) -> Option<MultiPoly<F>> {
    let vars = f.vars();
    if f.valuation_in(2) > 0 {
        return Some(MultiPoly::var(vars, 2));
    }
    let base = f.eval_var(2, &F::zero());
    let bf = factor_binary_form(&base).ok()?;
    // work in (x, y, z, g) where g is the unknown z-coefficient
    let ext = VarSet::new(&["x", "y", "z", "g"]);
    let fe = f.embed(&ext, &[0, 1, 2]);
    let xe = MultiPoly::<F>::var(&ext, 0);
    let ye = MultiPoly::<F>::var(&ext, 1);
    let ze = MultiPoly::<F>::var(&ext, 2);
    let ge = MultiPoly::<F>::var(&ext, 3);
    for (l, _) in &bf.linear {
        let a = l.coeff(&[1, 0, 0]);
        let b = l.coeff(&[0, 1, 0]);
        // restrict f to the line a x + b y + g z = 0
        let restricted = if !b.is_zero() {
            let binv = b.inv().unwrap();
            let y_img = (&xe.scale(&a) + &(&ge * &ze)).scale(&-binv);
            fe.substitute(&[xe.clone(), y_img, ze.clone(), ge.clone()])
        } else {
            let ainv = a.inv().unwrap();
            let x_img = (&ge * &ze).scale(&-ainv);
            fe.substitute(&[x_img, ye.clone(), ze.clone(), ge.clone()])
        };
        // every coefficient in (x, y, z) must vanish as a polynomial in g
        let mut groups: std::collections::BTreeMap<Vec<u32>, Vec<F>> = Default::default();
        for (m, c) in restricted.terms() {
            let e = groups.entry(m[..3].to_vec()).or_default();
            let d = m[3] as usize;
            if e.len() <= d {
                e.resize(d + 1, F::zero());
            }
            e[d] = c.clone();
        }
        let mut g: Option<UniPoly<F>> = None;
        for coeffs in groups.into_values() {
            let u = UniPoly::new(coeffs);
            g = Some(match g {
                None => u.monic(),
                Some(prev) => prev.gcd(&u),
            });
        }
        let g = g.unwrap_or_else(UniPoly::zero);
        if g.is_zero() {
            // the whole pencil of lines through this point lies on f: impossible
            continue;
        }
        if let Some((gamma, _)) = g.roots().into_iter().next() {
            let lin = MultiPoly::from_terms(
                vars,
                [
                    (vec![1, 0, 0], a.clone()),
                    (vec![0, 1, 0], b.clone()),
                    (vec![0, 0, 1], gamma),
                ],
            );
            return Some(lin.normalized());
        }
    }
    None
}

/// Linear factors (normalized, with multiplicity) of a ternary form in
/// (x, y, z), and the cofactor left after removing them.
pub fn linear_factors_ternary<F: Field>(
    f: &MultiPoly<F>,
) -> Result<(Vec<(MultiPoly<F>, u32)>, MultiPoly<F>)> {
    if f.nvars() != 3 {
        return Err(Error::Precondition(
            "expected a form in three variables".into(),
        ));
    }
    if f.is_zero() || !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let mut rest = f.clone();
    let mut out: Vec<(MultiPoly<F>, u32)> = Vec::new();
    while rest.degree().unwrap_or(0) > 0 {
        let Some(l) = find_linear_factor(&rest) else {
            break;
        };
        rest = rest.div_exact(&l).expect("linear factor divides");
        match out.iter_mut().find(|(m, _)| m == &l) {
            Some(e) => e.1 += 1,
            None => out.push((l, 1)),
        }
    }
    Ok((out, rest))
}

/// Whether a plane cubic is a product of three non-concurrent lines.
pub fn is_triangle<F: Field>(f: &MultiPoly<F>) -> bool {
    if f.degree() != Some(3) {
        return false;
    }
    let Ok((lines, _)) = linear_factors_ternary(f) else {
        return false;
    };
    if lines.len() != 3 || lines.iter().any(|(_, m)| *m != 1) {
        return false;
    }
    let m: Vec<Vec<F>> = lines
        .iter()
        .map(|(l, _)| {
            vec![
                l.coeff(&[1, 0, 0]),
                l.coeff(&[0, 1, 0]),
                l.coeff(&[0, 0, 1]),
            ]
        })
        .collect();
    !det(&m).is_zero()
}
