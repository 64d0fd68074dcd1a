//! Hilbert series of graded quotients `k[x]/I`, read off the leading-term
//! ideal of a Gröbner basis.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::field::{Field, Rational};
use super::groebner::{groebner, Ideal};
use super::order::{divides, mono_div, mono_lcm, weighted_degree, Monomial, TermOrder};
use crate::error::{Error, Result};

/// `numerator(t) / prod (1 - t^w_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertSeries {
    /// Coefficients lowest degree first.
    pub numerator: Vec<BigInt>,
    pub weights: Vec<u32>,
}

fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn sub_shifted(a: &[BigInt], b: &[BigInt], shift: usize) -> Vec<BigInt> {
    let n = a.len().max(b.len() + shift);
    let mut out = vec![BigInt::zero(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i + shift] -= c;
    }
    trim(out)
}

fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::new();
    let mut sorted = gens.to_vec();
    sorted.sort_by_key(|m| m.iter().sum::<u32>());
    sorted.dedup();
    for m in sorted {
        if !out.iter().any(|g| divides(g, &m)) {
            out.push(m);
        }
    }
    out
}

/// Numerator of the Hilbert series of `k[x]/(monomials)`.
fn monomial_numerator(gens: &[Monomial], w: &[u32]) -> Vec<BigInt> {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    // product of pairwise coprime generators: N = prod (1 - t^deg)
    let pairwise_coprime = gens.iter().enumerate().all(|(i, a)| {
        gens[i + 1..]
            .iter()
            .all(|b| a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0))
    });
    if pairwise_coprime {
        let mut acc = vec![BigInt::one()];
        for g in &gens {
            let d = weighted_degree(g, w) as usize;
            acc = sub_shifted(&acc, &acc, d);
        }
        return acc;
    }
    // N(I) = N(I') - t^deg(m) N(I' : m)
    let (last, rest) = gens.split_last().unwrap();
    let colon: Vec<Monomial> = rest
        .iter()
        .map(|g| mono_div(&mono_lcm(g, last), last))
        .collect();
    let a = monomial_numerator(rest, w);
    let b = monomial_numerator(&colon, w);
    sub_shifted(&a, &b, weighted_degree(last, w) as usize)
}

impl HilbertSeries {
    pub fn from_leading_monomials(lms: &[Monomial], weights: &[u32]) -> Self {
        HilbertSeries {
            numerator: monomial_numerator(lms, weights),
            weights: weights.to_vec(),
        }
    }

    /// Splits the numerator as `(1 - t)^k * q(t)` with `q(1) != 0`.
    fn split_one_minus_t(&self) -> (usize, Vec<BigInt>) {
        let mut q = self.numerator.clone();
        let mut k = 0;
        loop {
            if q.is_empty() {
                return (k, q);
            }
            let at_one: BigInt = q.iter().sum();
            if !at_one.is_zero() {
                return (k, q);
            }
            // divide by (1 - t): q = (1 - t) r, r_i = sum_{j <= i} q_j
            let mut r = Vec::with_capacity(q.len() - 1);
            let mut acc = BigInt::zero();
            for c in &q[..q.len() - 1] {
                acc += c;
                r.push(acc.clone());
            }
            q = trim(r);
            k += 1;
        }
    }

    /// Krull dimension of the graded quotient ring.
    pub fn krull_dimension(&self) -> usize {
        if self.numerator.is_empty() {
            return 0;
        }
        let (k, _) = self.split_one_minus_t();
        self.weights.len() - k
    }

    /// Dimension of the associated projective scheme (`-1` when empty).
    pub fn projective_dimension(&self) -> i64 {
        self.krull_dimension() as i64 - 1
    }

    /// Degree: `q(1) / prod w_i` where the numerator is `(1-t)^k q(t)`.
    pub fn degree(&self) -> Rational {
        if self.numerator.is_empty() {
            return Rational::zero();
        }
        let (_, q) = self.split_one_minus_t();
        let at_one: BigInt = q.iter().sum();
        let wprod: BigInt = self.weights.iter().map(|&w| BigInt::from(w)).product();
        Rational::new(at_one, wprod)
    }

    /// Coefficient of `t^d` in the power-series expansion.
    pub fn coefficient(&self, d: usize) -> BigInt {
        // multiply the numerator by 1/(1 - t^w) for each weight, truncated
        let mut series = vec![BigInt::zero(); d + 1];
        for (i, c) in self.numerator.iter().enumerate().take(d + 1) {
            series[i] = c.clone();
        }
        for &w in &self.weights {
            let w = w as usize;
            for i in w..=d {
                let prev = series[i - w].clone();
                series[i] += prev;
            }
        }
        series[d].clone()
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut num = String::new();
        for (i, c) in self.numerator.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if neg {
                num.push('-');
            } else if !num.is_empty() {
                num.push('+');
            }
            let mono = match i {
                0 => String::new(),
                1 => "t".into(),
                _ => format!("t^{i}"),
            };
            if mono.is_empty() {
                num.push_str(&a.to_string());
            } else if a.is_one() {
                num.push_str(&mono);
            } else {
                num.push_str(&format!("{a}*{mono}"));
            }
        }
        if num.is_empty() {
            num.push('0');
        }
        let mut den: Vec<String> = Vec::new();
        let mut ws = self.weights.clone();
        ws.sort();
        let mut i = 0;
        while i < ws.len() {
            let w = ws[i];
            let mut k = 0;
            while i < ws.len() && ws[i] == w {
                k += 1;
                i += 1;
            }
            let base = if w == 1 {
                "(1-t)".to_string()
            } else {
                format!("(1-t^{w})")
            };
            den.push(if k == 1 { base } else { format!("{base}^{k}") });
        }
        if den.is_empty() {
            write!(f, "{num}")
        } else {
            write!(f, "({num})/{}", den.join("*"))
        }
    }
}

/// Hilbert series of `k[vars]/I`; the generators must be weighted-homogeneous.
pub fn hilbert_series<F: Field>(
    ideal: &Ideal<F>,
    order: TermOrder,
    budget: usize,
) -> Result<HilbertSeries> {
    let weights = ideal.vars().weights().to_vec();
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    if ideal.generators().is_empty() {
        return Ok(HilbertSeries {
            numerator: vec![BigInt::one()],
            weights,
        });
    }
    let gb = groebner(ideal, order, budget)?;
    Ok(HilbertSeries::from_leading_monomials(
        &gb.leading_monomials(),
        &weights,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::rat;
    use crate::algebra::parse::parse_poly;
    use crate::algebra::poly::VarSet;

    fn hs(names: &[&str], weights: &[u32], gens: &[&str]) -> HilbertSeries {
        let v = VarSet::weighted(names, weights).unwrap();
        let gens = gens
            .iter()
            .map(|g| parse_poly::<Rational>(g, &v).unwrap())
            .collect();
        hilbert_series(&Ideal::new(&v, gens).unwrap(), TermOrder::GRevLex, 1000).unwrap()
    }

    #[test]
    fn empty_ideal_in_three_variables() {
        let h = hs(&["x", "y", "z"], &[1, 1, 1], &[]);
        assert_eq!(h.to_string(), "(1)/(1-t)^3");
        assert_eq!(h.krull_dimension(), 3);
        assert_eq!(h.degree(), rat(1));
    }

    #[test]
    fn single_product() {
        let h = hs(&["x", "y"], &[1, 1], &["x*y"]);
        assert_eq!(h.to_string(), "(1-t^2)/(1-t)^2");
        assert_eq!(h.krull_dimension(), 1);
        assert_eq!(h.degree(), rat(2));
        // monomials avoiding xy: 1, then 2 in each positive degree
        assert_eq!(h.coefficient(0), BigInt::from(1));
        assert_eq!(h.coefficient(5), BigInt::from(2));
    }

    #[test]
    fn twisted_cubic() {
        let h = hs(
            &["x", "y", "z", "w"],
            &[1, 1, 1, 1],
            &["x*z-y^2", "y*w-z^2", "x*w-y*z"],
        );
        assert_eq!(h.projective_dimension(), 1);
        assert_eq!(h.degree(), rat(3));
    }

    #[test]
    fn weighted_hypersurface() {
        let h = hs(&["x", "y", "z", "w"], &[1, 1, 2, 3], &["x^6+x*y^5+z^3+w^2"]);
        assert_eq!(h.krull_dimension(), 3);
        // degree of a sextic in P(1,1,2,3) is 6/6 = 1
        assert_eq!(h.degree(), rat(1));
        assert!(hilbert_series(
            &Ideal::new(
                &VarSet::new(&["x", "y"]),
                vec![parse_poly::<Rational>("x+y^2", &VarSet::new(&["x", "y"])).unwrap()]
            )
            .unwrap(),
            TermOrder::GRevLex,
            10
        )
        .is_err());
    }
}
