//! Sylvester resultants.
//!
//! Convention: the Sylvester matrix has the `deg b` shifted rows of `a`
//! first, then the `deg a` shifted rows of `b`; coefficients run from the
//! highest power of the eliminated variable to the lowest.

use super::field::Field;
use super::linalg::det_poly;
use super::poly::{check_vars, MultiPoly};
use crate::error::{Error, Result};

pub fn sylvester_matrix<F: Field>(
    a: &MultiPoly<F>,
    b: &MultiPoly<F>,
    var: usize,
) -> Vec<Vec<MultiPoly<F>>> {
    let vars = a.vars().clone();
    let mut ca = a.coeffs_in(var);
    let mut cb = b.coeffs_in(var);
    ca.reverse();
    cb.reverse();
    let m = ca.len() - 1;
    let n = cb.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![MultiPoly::zero(&vars); size];
        for (j, c) in ca.iter().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![MultiPoly::zero(&vars); size];
        for (j, c) in cb.iter().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Resultant of `a` and `b` with respect to the variable at index `var`.
pub fn resultant<F: Field>(a: &MultiPoly<F>, b: &MultiPoly<F>, var: usize) -> Result<MultiPoly<F>> {
    check_vars(a.vars(), b.vars())?;
    if !a.uses_var(var) && !b.uses_var(var) {
        return Err(Error::VariableAbsent(a.vars().names()[var].clone()));
    }
    if a.is_zero() || b.is_zero() {
        return Ok(MultiPoly::zero(a.vars()));
    }
    Ok(det_poly(&sylvester_matrix(a, b, var)))
}

pub fn resultant_named<F: Field>(
    a: &MultiPoly<F>,
    b: &MultiPoly<F>,
    var: &str,
) -> Result<MultiPoly<F>> {
    let i = a
        .vars()
        .index(var)
        .ok_or_else(|| Error::UnknownVariable(var.into()))?;
    resultant(a, b, i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::Rational;
    use crate::algebra::parse::parse_poly;
    use crate::algebra::poly::VarSet;

    #[test]
    fn spec_style_examples() {
        let v = VarSet::new(&["t", "x", "y", "a", "b", "c"]);
        let p = |s: &str| parse_poly::<Rational>(s, &v).unwrap();
        assert_eq!(resultant(&p("t^2-x"), &p("t-1"), 0).unwrap(), p("1-x"));
        assert_eq!(resultant(&p("x+y"), &p("x-y"), 1).unwrap(), p("-2*y"));
        assert_eq!(
            resultant(&p("a*t^2+b*t+c"), &p("2*a*t+b"), 0).unwrap(),
            p("a*(4*a*c-b^2)")
        );
        assert!(matches!(
            resultant(&p("x"), &p("y"), 0),
            Err(Error::VariableAbsent(_))
        ));
    }

    #[test]
    fn constant_in_the_variable() {
        let v = VarSet::new(&["t", "x"]);
        let p = |s: &str| parse_poly::<Rational>(s, &v).unwrap();
        // res(a, b) = b^deg(a) when b is free of t
        assert_eq!(resultant(&p("t^3+x"), &p("x+1"), 0).unwrap(), p("(x+1)^3"));
    }
}
