//! Sparse multivariate polynomials over a [`Field`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::One;

use super::field::{fmt_rational, is_negative_rational, Field};
use super::order::{divides, mono_div, mono_mul, weighted_degree, Monomial, TermOrder};
use super::univariate::UniPoly;
use crate::error::{Error, Result};

/// Ordered variable names with positive weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarSet {
    names: Vec<String>,
    weights: Vec<u32>,
}

pub type Vars = Arc<VarSet>;

impl VarSet {
    /// Unit-weight variables.
    pub fn new<S: AsRef<str>>(names: &[S]) -> Vars {
        let w = vec![1; names.len()];
        Self::weighted(names, &w).expect("distinct variable names")
    }

    pub fn weighted<S: AsRef<str>>(names: &[S], weights: &[u32]) -> Result<Vars> {
        if names.len() != weights.len() {
            return Err(Error::Precondition("one weight per variable".into()));
        }
        if weights.iter().any(|&w| w == 0) {
            return Err(Error::Precondition("weights must be positive".into()));
        }
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || n == "zeta" || names[..i].contains(n) {
                return Err(Error::Precondition(format!(
                    "bad or repeated variable name `{n}`"
                )));
            }
        }
        Ok(Arc::new(VarSet {
            names,
            weights: weights.to_vec(),
        }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn is_unweighted(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (n, w)) in self.names.iter().zip(&self.weights).enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if *w == 1 {
                write!(f, "{n}")?;
            } else {
                write!(f, "{n}:{w}")?;
            }
        }
        Ok(())
    }
}

pub(crate) fn same_vars(a: &Vars, b: &Vars) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

pub(crate) fn check_vars(a: &Vars, b: &Vars) -> Result<()> {
    if same_vars(a, b) {
        Ok(())
    } else {
        Err(Error::VariableMismatch {
            left: a.to_string(),
            right: b.to_string(),
        })
    }
}

#[derive(Clone)]
pub struct MultiPoly<F> {
    vars: Vars,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> PartialEq for MultiPoly<F> {
    fn eq(&self, other: &Self) -> bool {
        same_vars(&self.vars, &other.vars) && self.terms == other.terms
    }
}

impl<F: Field> Eq for MultiPoly<F> {}

impl<F: Field> MultiPoly<F> {
    pub fn zero(vars: &Vars) -> Self {
        MultiPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, F::one())
    }

    pub fn constant(vars: &Vars, c: F) -> Self {
        Self::monomial(vars, vec![0; vars.len()], c)
    }

    pub fn monomial(vars: &Vars, m: Monomial, c: F) -> Self {
        assert_eq!(m.len(), vars.len(), "exponent vector length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly {
            vars: vars.clone(),
            terms,
        }
    }

    /// The `i`-th variable as a polynomial.
    pub fn var(vars: &Vars, i: usize) -> Self {
        let mut m = vec![0; vars.len()];
        m[i] = 1;
        Self::monomial(vars, m, F::one())
    }

    pub fn var_named(vars: &Vars, name: &str) -> Result<Self> {
        let i = vars
            .index(name)
            .ok_or_else(|| Error::UnknownVariable(name.into()))?;
        Ok(Self::var(vars, i))
    }

    pub fn from_terms(vars: &Vars, terms: impl IntoIterator<Item = (Monomial, F)>) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.len(), self.vars.len());
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.iter().all(|&e| e == 0))
    }

    pub fn is_one(&self) -> bool {
        self.is_constant() && self.constant_term().is_one()
    }

    pub fn coeff(&self, m: &[u32]) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    pub fn constant_term(&self) -> F {
        self.coeff(&vec![0; self.nvars()])
    }

    /// Weighted total degree; `None` for zero.
    pub fn degree(&self) -> Option<u64> {
        self.terms
            .keys()
            .map(|m| weighted_degree(m, self.vars.weights()))
            .max()
    }

    pub fn min_degree(&self) -> Option<u64> {
        self.terms
            .keys()
            .map(|m| weighted_degree(m, self.vars.weights()))
            .min()
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m[i]).max().unwrap_or(0)
    }

    /// Largest power of the `i`-th variable dividing every term.
    pub fn valuation_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m[i]).min().unwrap_or(0)
    }

    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m[i] > 0)
    }

    pub fn used_vars(&self) -> Vec<usize> {
        (0..self.nvars()).filter(|&i| self.uses_var(i)).collect()
    }

    /// Weighted-homogeneous (the zero polynomial counts as homogeneous).
    pub fn is_homogeneous(&self) -> bool {
        self.degree() == self.min_degree()
    }

    pub fn leading_term(&self, order: TermOrder) -> Option<(&Monomial, &F)> {
        let w = self.vars.weights();
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0, w))
    }

    pub fn leading_monomial(&self, order: TermOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|t| t.0)
    }

    pub fn leading_coeff(&self, order: TermOrder) -> F {
        self.leading_term(order)
            .map(|t| t.1.clone())
            .unwrap_or_else(F::zero)
    }

    /// Scaled so the leading coefficient under `order` is 1.
    pub fn monic(&self, order: TermOrder) -> Self {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero")),
        }
    }

    /// Canonical representative up to scalars: leading coefficient 1 under grlex.
    pub fn normalized(&self) -> Self {
        self.monic(TermOrder::GrLex)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() * c))
                .collect(),
        }
    }

    pub fn mul_term(&self, m: &[u32], c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (mono_mul(k, m), a.clone() * c))
                .collect(),
        }
    }

    pub fn powu(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.vars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            if m[i] == 0 {
                continue;
            }
            let mut k = m.clone();
            k[i] -= 1;
            out.add_term(k, c.clone() * &F::from_i64(m[i] as i64));
        }
        out
    }

    pub fn gradient(&self) -> Vec<Self> {
        (0..self.nvars()).map(|i| self.derivative(i)).collect()
    }

    pub fn eval(&self, point: &[F]) -> F {
        assert_eq!(point.len(), self.nvars());
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m) {
                if e > 0 {
                    t = t * &x.powu(e);
                }
            }
            acc = acc + &t;
        }
        acc
    }

    /// Replaces the `i`-th variable by a scalar (the variable stays in the set).
    pub fn eval_var(&self, i: usize, v: &F) -> Self {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let mut k = m.clone();
            let e = std::mem::replace(&mut k[i], 0);
            out.add_term(k, c.clone() * &v.powu(e));
        }
        out
    }

    /// Simultaneous substitution of every variable; the result lives in the
    /// variable set of the images.
    pub fn substitute(&self, images: &[Self]) -> Self {
        assert_eq!(images.len(), self.nvars(), "one image per variable");
        let target = images
            .first()
            .map(|p| p.vars.clone())
            .expect("at least one variable");
        for p in images {
            assert!(
                same_vars(&p.vars, &target),
                "images must share a variable set"
            );
        }
        // cache powers per variable
        let mut powers: Vec<Vec<Self>> = images
            .iter()
            .map(|p| vec![Self::one(&target), p.clone()])
            .collect();
        let mut out = Self::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Self::constant(&target, c.clone());
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            out = &out + &t;
        }
        out
    }

    /// Substitutes a polynomial for a single variable.
    pub fn substitute_var(&self, i: usize, image: &Self) -> Self {
        let images: Vec<Self> = (0..self.nvars())
            .map(|j| {
                if j == i {
                    image.clone()
                } else {
                    Self::var(&self.vars, j)
                }
            })
            .collect();
        self.substitute(&images)
    }

    /// Moves the polynomial into another variable set, mapping variable `j`
    /// to `target[map[j]]`.
    pub fn embed(&self, target: &Vars, map: &[usize]) -> Self {
        assert_eq!(map.len(), self.nvars());
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut k = vec![0; target.len()];
            for (j, &e) in m.iter().enumerate() {
                k[map[j]] += e;
            }
            out.add_term(k, c.clone());
        }
        out
    }

    /// Embeds by variable name; fails if a used variable is missing from `target`.
    pub fn embed_by_name(&self, target: &Vars) -> Result<Self> {
        let mut map = Vec::with_capacity(self.nvars());
        for (j, name) in self.vars.names().iter().enumerate() {
            match target.index(name) {
                Some(k) => map.push(k),
                None if !self.uses_var(j) => map.push(usize::MAX),
                None => return Err(Error::UnknownVariable(name.clone())),
            }
        }
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut k = vec![0; target.len()];
            for (j, &e) in m.iter().enumerate() {
                if e > 0 {
                    k[map[j]] += e;
                }
            }
            out.add_term(k, c.clone());
        }
        Ok(out)
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> MultiPoly<G> {
        let mut out = MultiPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Coefficients with respect to the `i`-th variable, lowest power first.
    /// Each coefficient lives in the same variable set with exponent 0 at `i`.
    pub fn coeffs_in(&self, i: usize) -> Vec<Self> {
        let d = self.degree_in(i) as usize;
        let mut out = vec![Self::zero(&self.vars); d + 1];
        if self.is_zero() {
            return Vec::new();
        }
        for (m, c) in &self.terms {
            let mut k = m.clone();
            let e = std::mem::replace(&mut k[i], 0) as usize;
            out[e].add_term(k, c.clone());
        }
        out
    }

    pub fn from_coeffs_in(vars: &Vars, i: usize, coeffs: &[Self]) -> Self {
        let mut out = Self::zero(vars);
        for (e, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                let mut k = m.clone();
                k[i] += e as u32;
                out.add_term(k, a.clone());
            }
        }
        out
    }

    /// Univariate view when only the `i`-th variable occurs.
    pub fn to_univariate(&self, i: usize) -> Option<UniPoly<F>> {
        let mut v = vec![F::zero(); self.degree_in(i) as usize + 1];
        for (m, c) in &self.terms {
            if m.iter().enumerate().any(|(j, &e)| j != i && e > 0) {
                return None;
            }
            v[m[i] as usize] = c.clone();
        }
        Some(UniPoly::new(v))
    }

    pub fn from_univariate(vars: &Vars, i: usize, f: &UniPoly<F>) -> Self {
        let mut out = Self::zero(vars);
        for (e, c) in f.coeffs().iter().enumerate() {
            let mut m = vec![0; vars.len()];
            m[i] = e as u32;
            out.add_term(m, c.clone());
        }
        out
    }

    /// Sets the `i`-th variable to 1.
    pub fn dehomogenize(&self, i: usize) -> Self {
        self.eval_var(i, &F::one())
    }

    /// Multiplies terms by powers of the `i`-th variable (unit weight assumed)
    /// to reach weighted degree `deg`.
    pub fn homogenize(&self, i: usize, deg: u64) -> Self {
        let w = self.vars.weights();
        assert_eq!(w[i], 1, "homogenizing variable must have weight 1");
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let d = weighted_degree(m, w);
            assert!(d <= deg, "target degree too small");
            let mut k = m.clone();
            k[i] += (deg - d) as u32;
            out.add_term(k, c.clone());
        }
        out
    }

    /// Exact quotient, `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        check_vars(&self.vars, &d.vars).ok()?;
        if d.is_zero() {
            return None;
        }
        let order = TermOrder::Lex;
        let (dm, dc) = d.leading_term(order).map(|(m, c)| (m.clone(), c.clone()))?;
        let dinv = dc.inv()?;
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.vars);
        while let Some((m, c)) = rem.leading_term(order).map(|(m, c)| (m.clone(), c.clone())) {
            if !divides(&dm, &m) {
                return None;
            }
            let qm = mono_div(&m, &dm);
            let qc = c * &dinv;
            rem = &rem - &d.mul_term(&qm, &qc);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Total-degree-graded pieces, lowest first.
    pub fn homogeneous_components(&self) -> BTreeMap<u64, Self> {
        let mut out: BTreeMap<u64, Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            let d = weighted_degree(m, self.vars.weights());
            out.entry(d)
                .or_insert_with(|| Self::zero(&self.vars))
                .add_term(m.clone(), c.clone());
        }
        out
    }

    /// Terms sorted descending under `order`.
    pub fn sorted_terms(&self, order: TermOrder) -> Vec<(&Monomial, &F)> {
        let w = self.vars.weights();
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0, w));
        v
    }
}

fn combine<F: Field>(a: &MultiPoly<F>, b: &MultiPoly<F>, negate: bool) -> MultiPoly<F> {
    assert!(
        same_vars(&a.vars, &b.vars),
        "variable sets differ: [{}] vs [{}]",
        a.vars,
        b.vars
    );
    let mut out = a.clone();
    for (m, c) in &b.terms {
        let c = if negate { -c.clone() } else { c.clone() };
        out.add_term(m.clone(), c);
    }
    out
}

impl<'a, F: Field> Add<&'a MultiPoly<F>> for &'a MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn add(self, rhs: &'a MultiPoly<F>) -> MultiPoly<F> {
        combine(self, rhs, false)
    }
}

impl<'a, F: Field> Sub<&'a MultiPoly<F>> for &'a MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn sub(self, rhs: &'a MultiPoly<F>) -> MultiPoly<F> {
        combine(self, rhs, true)
    }
}

impl<'a, F: Field> Mul<&'a MultiPoly<F>> for &'a MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn mul(self, rhs: &'a MultiPoly<F>) -> MultiPoly<F> {
        assert!(
            same_vars(&self.vars, &rhs.vars),
            "variable sets differ: [{}] vs [{}]",
            self.vars,
            rhs.vars
        );
        let mut out = MultiPoly::zero(&self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(mono_mul(ma, mb), ca.clone() * cb);
            }
        }
        out
    }
}

impl<'a, F: Field> Neg for &'a MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn neg(self) -> MultiPoly<F> {
        self.scale(&-F::one())
    }
}

impl<F: Field> Add for MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<F: Field> Sub for MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<F: Field> Mul for MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<F: Field> Neg for MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn neg(self) -> Self {
        -&self
    }
}

/// Writes a coefficient in front of a monomial; `mono` is empty for constants.
fn write_term<F: Field>(f: &mut fmt::Formatter<'_>, c: &F, mono: &str, first: bool) -> fmt::Result {
    match c.to_rational() {
        Some(q) => {
            let neg = is_negative_rational(&q);
            let abs = if neg { -q } else { q };
            if neg {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            if mono.is_empty() {
                write!(f, "{}", fmt_rational(&abs))
            } else if abs.is_one() {
                write!(f, "{mono}")
            } else {
                write!(f, "{}*{mono}", fmt_rational(&abs))
            }
        }
        None => {
            if !first {
                write!(f, "+")?;
            }
            if mono.is_empty() {
                write!(f, "({c})")
            } else {
                write!(f, "({c})*{mono}")
            }
        }
    }
}

impl<F: Field> fmt::Display for MultiPoly<F> {
    /// Terms in descending graded-lex order, e.g. `3/4*x^2*y-z+1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.sorted_terms(TermOrder::GrLex).into_iter().enumerate() {
            let mono: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    let n = &self.vars.names()[i];
                    if e == 1 {
                        n.clone()
                    } else {
                        format!("{n}^{e}")
                    }
                })
                .collect();
            write_term(f, c, &mono.join("*"), k == 0)?;
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in [{}]", self.vars)
    }
}
