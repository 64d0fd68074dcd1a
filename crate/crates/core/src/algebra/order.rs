use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

/// Exponent vector, one entry per variable of the owning [`VarSet`](super::VarSet).
pub type Monomial = Vec<u32>;

/// Monomial orders. Graded orders use the weighted degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TermOrder {
    Lex,
    GrLex,
    #[default]
    GRevLex,
}

pub fn weighted_degree(m: &[u32], weights: &[u32]) -> u64 {
    m.iter()
        .zip(weights)
        .map(|(&e, &w)| e as u64 * w as u64)
        .sum()
}

impl TermOrder {
    pub fn cmp(&self, a: &[u32], b: &[u32], weights: &[u32]) -> Ordering {
        match self {
            TermOrder::Lex => a.cmp(b),
            TermOrder::GrLex => weighted_degree(a, weights)
                .cmp(&weighted_degree(b, weights))
                .then_with(|| a.cmp(b)),
            TermOrder::GRevLex => weighted_degree(a, weights)
                .cmp(&weighted_degree(b, weights))
                .then_with(|| {
                    for (x, y) in a.iter().zip(b).rev() {
                        if x != y {
                            return y.cmp(x);
                        }
                    }
                    Ordering::Equal
                }),
        }
    }
}

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn mono_lcm(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub fn mono_gcd(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| *x.min(y)).collect()
}

pub fn mono_mul(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// `a / b`, assuming `b` divides `a`.
pub fn mono_div(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_breaks_ties_on_last_variable() {
        let w = [1, 1, 1];
        // x*z < y^2 in grevlex, x*z > y^2 in grlex
        assert_eq!(
            TermOrder::GRevLex.cmp(&[1, 0, 1], &[0, 2, 0], &w),
            Ordering::Less
        );
        assert_eq!(
            TermOrder::GrLex.cmp(&[1, 0, 1], &[0, 2, 0], &w),
            Ordering::Greater
        );
        assert_eq!(
            TermOrder::Lex.cmp(&[0, 0, 5], &[1, 0, 0], &w),
            Ordering::Less
        );
    }

    #[test]
    fn weights_enter_the_degree() {
        let w = [1, 2];
        assert_eq!(TermOrder::GrLex.cmp(&[3, 0], &[0, 2], &w), Ordering::Less);
    }
}
