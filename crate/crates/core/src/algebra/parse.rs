//! Text grammar for polynomials.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | '+' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | name | 'zeta' | '(' expr ')'
//! ```
//!
//! Division is only allowed by nonzero constants. `zeta` denotes the
//! generator of the coefficient field and is rejected over Q.

use num_bigint::BigInt;

use super::field::{Field, Rational};
use super::poly::{MultiPoly, VarSet, Vars};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Name(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let bytes: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = bytes[start..i].iter().collect();
            out.push((start, Tok::Num(text.parse().unwrap())));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len()
                && (bytes[i].is_alphanumeric() || bytes[i] == '_' || bytes[i] == '\'')
            {
                i += 1;
            }
            out.push((start, Tok::Name(bytes[start..i].iter().collect())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(Error::Parse {
                pos: i,
                msg: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

struct Parser<'a, F> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    vars: &'a Vars,
    end: usize,
    _f: std::marker::PhantomData<F>,
}

impl<'a, F: Field> Parser<'a, F> {
    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.here(),
            msg: msg.into(),
        })
    }

    fn peek_op(&self) -> Option<char> {
        match self.toks.get(self.pos) {
            Some((_, Tok::Op(c))) => Some(*c),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<MultiPoly<F>> {
        let mut acc = self.term()?;
        while let Some(c @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let t = self.term()?;
            acc = if c == '+' { &acc + &t } else { &acc - &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly<F>> {
        let mut acc = self.unary()?;
        while let Some(c @ ('*' | '/')) = self.peek_op() {
            self.pos += 1;
            let at = self.here();
            let t = self.unary()?;
            if c == '*' {
                acc = &acc * &t;
            } else {
                if !t.is_constant() || t.is_zero() {
                    return Err(Error::Parse {
                        pos: at,
                        msg: "division by a non-constant or zero".into(),
                    });
                }
                let inv = t.constant_term().inv().unwrap();
                acc = acc.scale(&inv);
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MultiPoly<F>> {
        match self.peek_op() {
            Some('-') => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MultiPoly<F>> {
        let base = self.atom()?;
        if self.peek_op() == Some('^') {
            self.pos += 1;
            match self.toks.get(self.pos).cloned() {
                Some((_, Tok::Num(n))) => {
                    self.pos += 1;
                    let e: u32 = n.try_into().map_err(|_| Error::Parse {
                        pos: self.here(),
                        msg: "exponent too large".into(),
                    })?;
                    Ok(base.powu(e))
                }
                _ => self.err("expected a nonnegative integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<MultiPoly<F>> {
        match self.toks.get(self.pos).cloned() {
            Some((_, Tok::Num(n))) => {
                self.pos += 1;
                Ok(MultiPoly::constant(
                    self.vars,
                    F::from_rational(Rational::from_integer(n)),
                ))
            }
            Some((p, Tok::Name(name))) => {
                self.pos += 1;
                if name == "zeta" {
                    return match F::generator() {
                        Some(z) => Ok(MultiPoly::constant(self.vars, z)),
                        None => Err(Error::Parse {
                            pos: p,
                            msg: "`zeta` is not defined over Q".into(),
                        }),
                    };
                }
                match self.vars.index(&name) {
                    Some(i) => Ok(MultiPoly::var(self.vars, i)),
                    None => Err(Error::Parse {
                        pos: p,
                        msg: format!("unknown variable `{name}`"),
                    }),
                }
            }
            Some((_, Tok::Op('('))) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek_op() != Some(')') {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(_) => self.err("unexpected token"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses `text` as a polynomial in the given variables.
pub fn parse_poly<F: Field>(text: &str, vars: &Vars) -> Result<MultiPoly<F>> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(Error::Parse {
            pos: 0,
            msg: "empty input".into(),
        });
    }
    let mut p = Parser {
        toks,
        pos: 0,
        vars,
        end: text.len(),
        _f: std::marker::PhantomData,
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// Parses `lhs = rhs` as `lhs - rhs`; plain expressions are accepted as is.
pub fn parse_equation<F: Field>(text: &str, vars: &Vars) -> Result<MultiPoly<F>> {
    match text.split_once('=') {
        None => parse_poly(text, vars),
        Some((l, r)) => {
            let lhs = parse_poly::<F>(l, vars)?;
            let rhs = parse_poly::<F>(r, vars).map_err(|e| match e {
                Error::Parse { pos, msg } => Error::Parse {
                    pos: pos + l.len() + 1,
                    msg,
                },
                other => other,
            })?;
            Ok(&lhs - &rhs)
        }
    }
}

/// Variable names occurring in `text`, in order of first appearance.
pub fn scan_variables(text: &str) -> Result<Vec<String>> {
    let mut names: Vec<String> = Vec::new();
    for (_, t) in lex(&text.replace('=', "-"))? {
        if let Tok::Name(n) = t {
            if n != "zeta" && !names.contains(&n) {
                names.push(n);
            }
        }
    }
    Ok(names)
}

/// Parses with variables taken from `preferred` (in that order) followed by any
/// other names found in the text.
pub fn parse_with_vars<F: Field>(text: &str, preferred: &[&str]) -> Result<MultiPoly<F>> {
    let mut names: Vec<String> = preferred.iter().map(|s| s.to_string()).collect();
    for n in scan_variables(text)? {
        if !names.contains(&n) {
            names.push(n);
        }
    }
    let vars = VarSet::weighted(&names, &vec![1; names.len()])?;
    parse_equation(text, &vars)
}

/// Parses a scalar (a polynomial expression without variables).
pub fn parse_scalar<F: Field>(text: &str) -> Result<F> {
    let vars = VarSet::new::<&str>(&[]);
    let p = parse_poly::<F>(text, &vars)?;
    Ok(if p.is_zero() {
        F::zero()
    } else {
        p.constant_term()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::cyclotomic::Cyclotomic;
    use num_traits::Zero;

    fn xyz() -> Vars {
        VarSet::new(&["x", "y", "z"])
    }

    #[test]
    fn precedence_and_powers() {
        let f = parse_poly::<Rational>("-x^2*y + 2*(x - y)^2/3", &xyz()).unwrap();
        assert_eq!(f.to_string(), "-x^2*y+2/3*x^2-4/3*x*y+2/3*y^2");
    }

    #[test]
    fn zeta_needs_a_cyclotomic_field() {
        assert!(parse_poly::<Rational>("zeta*x", &xyz()).is_err());
        let f = parse_poly::<Cyclotomic<3>>("(1-zeta)*x^2*y", &xyz()).unwrap();
        assert_eq!(f.to_string(), "(1-zeta)*x^2*y");
        let g = parse_poly::<Cyclotomic<3>>("zeta^3", &xyz()).unwrap();
        assert!(g.is_one());
    }

    #[test]
    fn errors_carry_positions() {
        match parse_poly::<Rational>("x + q", &xyz()) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_poly::<Rational>("x / y", &xyz()).is_err());
        assert!(parse_poly::<Rational>("(x", &xyz()).is_err());
        assert!(parse_poly::<Rational>("", &xyz()).is_err());
    }

    #[test]
    fn equations_and_scanning() {
        let f = parse_with_vars::<Rational>("w^2 = z^3 + 1", &[]).unwrap();
        assert_eq!(f.vars().names(), &["w".to_string(), "z".to_string()]);
        assert_eq!(f.to_string(), "-z^3+w^2-1");
        assert!(parse_scalar::<Rational>("3/4").unwrap() == crate::algebra::field::rat_frac(3, 4));
        assert!(parse_scalar::<Rational>("0").unwrap().is_zero());
    }
}
