//! Buchberger's algorithm with the sugar strategy and the Gebauer–Möller
//! pair update.

use std::cmp::Ordering;

use super::field::Field;
use super::order::{divides, mono_div, mono_lcm, mono_mul, weighted_degree, Monomial, TermOrder};
use super::poly::{check_vars, MultiPoly, Vars};
use crate::error::{Error, Result};

/// Default limit on the number of S-pair reductions.
pub const DEFAULT_BUDGET: usize = 20_000;

/// A polynomial ideal given by generators in one variable set.
#[derive(Clone, Debug)]
pub struct Ideal<F: Field> {
    vars: Vars,
    gens: Vec<MultiPoly<F>>,
}

impl<F: Field> Ideal<F> {
    /// Generators must be nonzero and share `vars`; the list may be empty.
    pub fn new(vars: &Vars, gens: Vec<MultiPoly<F>>) -> Result<Self> {
        for g in &gens {
            check_vars(vars, g.vars())?;
            if g.is_zero() {
                return Err(Error::ZeroGenerator);
            }
        }
        Ok(Ideal {
            vars: vars.clone(),
            gens,
        })
    }

    /// Convenience constructor dropping zero generators.
    pub fn from_nonzero(vars: &Vars, gens: impl IntoIterator<Item = MultiPoly<F>>) -> Result<Self> {
        Self::new(vars, gens.into_iter().filter(|g| !g.is_zero()).collect())
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn generators(&self) -> &[MultiPoly<F>] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }
}

/// A reduced Gröbner basis, monic and sorted by decreasing leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    vars: Vars,
    order: TermOrder,
    basis: Vec<MultiPoly<F>>,
    /// S-pair reductions performed.
    pub steps: usize,
}

impl<F: Field> PartialEq for GroebnerBasis<F> {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.basis == other.basis
    }
}

impl<F: Field> GroebnerBasis<F> {
    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn basis(&self) -> &[MultiPoly<F>] {
        &self.basis
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis
            .iter()
            .map(|g| g.leading_monomial(self.order).unwrap().clone())
            .collect()
    }

    /// Whether the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }

    /// Normal form of `f` modulo the basis.
    pub fn reduce(&self, f: &MultiPoly<F>) -> MultiPoly<F> {
        let basis: Vec<GPoly<F>> = self
            .basis
            .iter()
            .map(|g| GPoly::from_poly(g, self.order))
            .collect();
        let w = self.vars.weights().to_vec();
        let r = normal_form(GPoly::from_poly(f, self.order), &basis, self.order, &w);
        r.to_poly(&self.vars)
    }

    pub fn contains(&self, f: &MultiPoly<F>) -> bool {
        self.reduce(f).is_zero()
    }
}

#[derive(Clone, Debug)]
struct GPoly<F> {
    /// Sorted by decreasing monomial under the active order.
    terms: Vec<(Monomial, F)>,
    sugar: u64,
}

impl<F: Field> GPoly<F> {
    fn from_poly(p: &MultiPoly<F>, order: TermOrder) -> Self {
        let terms: Vec<(Monomial, F)> = p
            .sorted_terms(order)
            .into_iter()
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        let sugar = p.degree().unwrap_or(0);
        GPoly { terms, sugar }
    }

    fn to_poly(&self, vars: &Vars) -> MultiPoly<F> {
        MultiPoly::from_terms(vars, self.terms.iter().cloned())
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn make_monic(&mut self) {
        if let Some((_, c)) = self.terms.first() {
            let inv = c.inv().unwrap();
            for (_, a) in self.terms.iter_mut() {
                *a = a.clone() * &inv;
            }
        }
    }
}

/// `a - c * m * b`, both sorted descending.
fn sub_mul<F: Field>(
    a: &[(Monomial, F)],
    c: &F,
    m: &[u32],
    b: &[(Monomial, F)],
    order: TermOrder,
    w: &[u32],
) -> Vec<(Monomial, F)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    let shifted = |k: usize| mono_mul(&b[k].0, m);
    let mut bj = if b.is_empty() { None } else { Some(shifted(0)) };
    while i < a.len() || bj.is_some() {
        let ord = match (&bj, a.get(i)) {
            (None, _) => Ordering::Greater,
            (Some(_), None) => Ordering::Less,
            (Some(bm), Some((am, _))) => order.cmp(am, bm, w),
        };
        match ord {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((bj.take().unwrap(), -(b[j].1.clone() * c)));
                j += 1;
                bj = (j < b.len()).then(|| shifted(j));
            }
            Ordering::Equal => {
                let v = a[i].1.clone() - &(b[j].1.clone() * c);
                if !v.is_zero() {
                    out.push((a[i].0.clone(), v));
                }
                i += 1;
                j += 1;
                bj = (j < b.len()).then(|| shifted(j));
            }
        }
    }
    out
}

/// Full reduction; reducers are monic.
fn normal_form<F: Field>(f: GPoly<F>, g: &[GPoly<F>], order: TermOrder, w: &[u32]) -> GPoly<F> {
    let mut h = f.terms;
    let mut sugar = f.sugar;
    let mut rem: Vec<(Monomial, F)> = Vec::new();
    let mut start = 0;
    while start < h.len() {
        let (m, c) = h[start].clone();
        match g.iter().find(|r| divides(r.lm(), &m)) {
            Some(r) => {
                let q = mono_div(&m, r.lm());
                sugar = sugar.max(r.sugar + weighted_degree(&q, w));
                let tail = sub_mul(&h[start..], &c, &q, &r.terms, order, w);
                h.truncate(start);
                h.extend(tail);
            }
            None => {
                rem.push((m, c));
                start += 1;
            }
        }
    }
    GPoly { terms: rem, sugar }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u64,
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

/// Reduced Gröbner basis of `ideal` under `order`, within `budget` reductions.
pub fn groebner<F: Field>(
    ideal: &Ideal<F>,
    order: TermOrder,
    budget: usize,
) -> Result<GroebnerBasis<F>> {
    if ideal.gens.is_empty() {
        return Err(Error::EmptyIdeal);
    }
    let vars = ideal.vars.clone();
    let w: Vec<u32> = vars.weights().to_vec();
    let mut polys: Vec<GPoly<F>> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut steps = 0;

    let mut inputs: Vec<GPoly<F>> = ideal
        .gens
        .iter()
        .map(|g| GPoly::from_poly(g, order))
        .collect();
    inputs.sort_by(|a, b| {
        order
            .cmp(a.lm(), b.lm(), &w)
            .then(a.terms.len().cmp(&b.terms.len()))
    });
    for p in inputs {
        let basis: Vec<GPoly<F>> = active.iter().map(|&k| polys[k].clone()).collect();
        let mut h = normal_form(p, &basis, order, &w);
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        insert(&mut polys, &mut active, &mut pairs, h, &w);
    }

    while !pairs.is_empty() {
        // lowest sugar first, then smallest lcm
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                pairs[a]
                    .sugar
                    .cmp(&pairs[b].sugar)
                    .then_with(|| order.cmp(&pairs[a].lcm, &pairs[b].lcm, &w))
            })
            .unwrap();
        let pair = pairs.swap_remove(best);
        steps += 1;
        if steps > budget {
            return Err(Error::BudgetExceeded(budget));
        }
        let (f, g) = (&polys[pair.i], &polys[pair.j]);
        let qf = mono_div(&pair.lcm, f.lm());
        let qg = mono_div(&pair.lcm, g.lm());
        let mut scaled: Vec<(Monomial, F)> = f.terms[1..]
            .iter()
            .map(|(m, c)| (mono_mul(m, &qf), c.clone()))
            .collect();
        scaled = sub_mul(&scaled, &F::one(), &qg, &g.terms[1..], order, &w);
        let s = GPoly {
            terms: scaled,
            sugar: pair.sugar,
        };
        let basis: Vec<GPoly<F>> = active.iter().map(|&k| polys[k].clone()).collect();
        let mut h = normal_form(s, &basis, order, &w);
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        insert(&mut polys, &mut active, &mut pairs, h, &w);
    }

    // interreduce
    let mut gens: Vec<GPoly<F>> = active.iter().map(|&k| polys[k].clone()).collect();
    gens.sort_by(|a, b| order.cmp(b.lm(), a.lm(), &w));
    let mut reduced: Vec<GPoly<F>> = Vec::new();
    for i in 0..gens.len() {
        let others: Vec<GPoly<F>> = gens
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let lead = gens[i].terms[0].clone();
        let tail = GPoly {
            terms: gens[i].terms[1..].to_vec(),
            sugar: gens[i].sugar,
        };
        let mut r = normal_form(tail, &others, order, &w);
        r.terms.insert(0, lead);
        reduced.push(r);
    }
    let basis = reduced.iter().map(|g| g.to_poly(&vars)).collect();
    Ok(GroebnerBasis {
        vars,
        order,
        basis,
        steps,
    })
}

fn insert<F: Field>(
    polys: &mut Vec<GPoly<F>>,
    active: &mut Vec<usize>,
    pairs: &mut Vec<Pair>,
    h: GPoly<F>,
    w: &[u32],
) {
    let hi = polys.len();
    let hlm = h.lm().clone();
    let hsugar = h.sugar;
    polys.push(h);

    let sugar_of = |polys: &Vec<GPoly<F>>, i: usize, lcm: &Monomial| -> u64 {
        let p = &polys[i];
        p.sugar + weighted_degree(&mono_div(lcm, p.lm()), w)
    };

    // candidate new pairs (h, g)
    let cands: Vec<(usize, Monomial)> = active
        .iter()
        .map(|&g| (g, mono_lcm(&hlm, polys[g].lm())))
        .collect();
    let mut keep: Vec<(usize, Monomial)> = Vec::new();
    for (k, (g, l)) in cands.iter().enumerate() {
        if coprime(&hlm, polys[*g].lm()) {
            keep.push((*g, l.clone()));
            continue;
        }
        let dominated = cands[k + 1..].iter().any(|(_, l2)| divides(l2, l))
            || keep.iter().any(|(_, l2)| divides(l2, l));
        if !dominated {
            keep.push((*g, l.clone()));
        }
    }
    // drop pairs whose lcm is divisible by lm(h) in a strict way
    pairs.retain(|p| {
        !(divides(&hlm, &p.lcm)
            && mono_lcm(polys[p.i].lm(), &hlm) != p.lcm
            && mono_lcm(&hlm, polys[p.j].lm()) != p.lcm)
    });
    for (g, l) in keep {
        if coprime(&hlm, polys[g].lm()) {
            continue;
        }
        let sugar = (hsugar + weighted_degree(&mono_div(&l, &hlm), w)).max(sugar_of(polys, g, &l));
        pairs.push(Pair {
            i: g,
            j: hi,
            lcm: l,
            sugar,
        });
    }
    active.retain(|&g| !divides(&hlm, polys[g].lm()));
    active.push(hi);
}
