//! Factorization of squarefree polynomials over Q.
//!
//! Classical Berlekamp–Zassenhaus scheme: factor modulo a small good prime
//! (distinct-degree then Cantor–Zassenhaus splitting), Hensel-lift the
//! modular factorization past the Mignotte bound, then recombine subsets by
//! trial division over Z. The modular arithmetic is internal only.

use itertools::Itertools;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::Rational;
use super::univariate::UniPoly;

type ZPoly = Vec<BigInt>;
type PPoly = Vec<u64>;

const PRIMES: &[u64] = &[
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193,
    197, 199, 211, 223, 227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283, 293,
];

/// Monic irreducible factors over Q of a squarefree polynomial.
pub(crate) fn factor_squarefree_rational(f: &UniPoly<Rational>) -> Vec<UniPoly<Rational>> {
    if f.deg() == 0 {
        return Vec::new();
    }
    if f.deg() == 1 {
        return vec![f.monic()];
    }
    let mut out = Vec::new();
    let mut z = primitive_integer(f);
    // strip the factor t, which the modular step would otherwise see as a unit issue
    if z[0].is_zero() {
        out.push(UniPoly::new(vec![Rational::zero(), Rational::one()]));
        z.remove(0);
    }
    for g in factor_primitive(z) {
        out.push(to_rational(&g).monic());
    }
    out
}

fn primitive_integer(f: &UniPoly<Rational>) -> ZPoly {
    let lcm = f
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut z: ZPoly = f
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = content(&z);
    for c in z.iter_mut() {
        *c = &*c / &g;
    }
    if z.last().is_some_and(|c| c.is_negative()) {
        for c in z.iter_mut() {
            *c = -&*c;
        }
    }
    z
}

fn content(z: &[BigInt]) -> BigInt {
    let g = z.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() {
        BigInt::one()
    } else {
        g
    }
}

fn to_rational(z: &[BigInt]) -> UniPoly<Rational> {
    UniPoly::new(
        z.iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect(),
    )
}

fn factor_primitive(f: ZPoly) -> Vec<ZPoly> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f];
    }
    let lc = f[n].clone();

    // pick the good prime (among the first few) giving the fewest modular factors
    let mut best: Option<(u64, Vec<PPoly>)> = None;
    let mut tried = 0;
    for &p in PRIMES {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = reduce(&f, p);
        let dfp = deriv_p(&fp, p);
        if gcd_p(&fp, &dfp, p).len() != 1 {
            continue;
        }
        let facs = factor_mod_p(&monic_p(&fp, p), p);
        if facs.len() == 1 {
            return vec![f];
        }
        if best.as_ref().map_or(true, |(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
        tried += 1;
        if tried >= 5 {
            break;
        }
    }
    let (p, modular) = best.expect("some prime is good for a squarefree polynomial");

    // Mignotte-style bound on coefficients of lc * g for any factor g
    let maxc = f.iter().map(|c| c.abs()).max().unwrap();
    let bound: BigInt =
        BigInt::from(2u32).pow(n as u32) * BigInt::from(n as u64 + 1) * maxc * lc.abs() * 2u32
            + 1u32;
    let pb = BigInt::from(p);
    let mut modulus = pb.clone();
    let mut exp_steps = 0;
    while modulus <= bound {
        modulus = &modulus * &modulus;
        exp_steps += 1;
    }

    let lifted = multifactor_lift(&f, &modular, p, exp_steps);
    recombine(f, lifted, &modulus)
}

fn recombine(mut f: ZPoly, mut lifted: Vec<ZPoly>, modulus: &BigInt) -> Vec<ZPoly> {
    let mut found = Vec::new();
    let mut s = 1;
    while 2 * s <= lifted.len() {
        let mut hit = None;
        for subset in (0..lifted.len()).combinations(s) {
            let lc = f.last().unwrap().clone();
            let mut g: ZPoly = vec![lc];
            for &i in &subset {
                g = mul_mod(&g, &lifted[i], modulus);
            }
            let g = symmetric(&g, modulus);
            let c = content(&g);
            let g: ZPoly = g.iter().map(|x| x / &c).collect();
            if let Some(q) = div_exact_z(&f, &g) {
                hit = Some((subset, g, q));
                break;
            }
        }
        match hit {
            Some((subset, g, q)) => {
                found.push(normalize_sign(g));
                f = q;
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
            }
            None => s += 1,
        }
    }
    if f.len() > 1 {
        found.push(normalize_sign(f));
    }
    found
}

fn normalize_sign(mut g: ZPoly) -> ZPoly {
    if g.last().is_some_and(|c| c.is_negative()) {
        for c in g.iter_mut() {
            *c = -&*c;
        }
    }
    g
}

fn div_exact_z(f: &ZPoly, g: &ZPoly) -> Option<ZPoly> {
    let (q, r) = to_rational(f).div_rem(&to_rational(g));
    if !r.is_zero() {
        return None;
    }
    let coeffs: Option<ZPoly> = (0..f.len() - g.len() + 1)
        .map(|i| {
            let c = q.coeff(i);
            c.is_integer().then(|| c.to_integer())
        })
        .collect();
    coeffs
}

fn symmetric(g: &ZPoly, m: &BigInt) -> ZPoly {
    let half = m / 2;
    let mut out: ZPoly = g
        .iter()
        .map(|c| {
            let r = c.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect();
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

// ---------------------------------------------------------------------------
// Hensel lifting over Z / p^(2^k)

fn multifactor_lift(f: &ZPoly, factors: &[PPoly], p: u64, steps: u32) -> Vec<ZPoly> {
    let lc_p = (f.last().unwrap().mod_floor(&BigInt::from(p)))
        .to_u64()
        .unwrap();
    lift_rec(f, lc_p, factors, p, steps)
}

/// Returns monic polynomials `F_i` with `f = lc(f) * prod F_i` modulo `p^(2^steps)`.
fn lift_rec(f: &ZPoly, lc_p: u64, factors: &[PPoly], p: u64, steps: u32) -> Vec<ZPoly> {
    let modulus = BigInt::from(p).pow(1u32 << steps);
    if factors.len() == 1 {
        let lc = f.last().unwrap();
        let inv = mod_inverse(lc, &modulus);
        return vec![f.iter().map(|c| (c * &inv).mod_floor(&modulus)).collect()];
    }
    let (left, right) = factors.split_at(factors.len() / 2);
    let g0 = scale_p(&product_p(left, p), lc_p, p);
    let h0 = product_p(right, p);
    let (_, s0, t0) = xgcd_p(&g0, &h0, p);
    let (g, h) = hensel(f, &g0, &h0, &s0, &t0, p, steps);
    let mut out = lift_rec(&g, lc_p, left, p, steps);
    out.extend(lift_rec(&h, 1, right, p, steps));
    out
}

/// Quadratic Hensel lifting of `f = g h (mod p)` with `h` monic.
fn hensel(
    f: &ZPoly,
    g0: &PPoly,
    h0: &PPoly,
    s0: &PPoly,
    t0: &PPoly,
    p: u64,
    steps: u32,
) -> (ZPoly, ZPoly) {
    let lift = |v: &PPoly| -> ZPoly { v.iter().map(|&c| BigInt::from(c)).collect() };
    let (mut g, mut h, mut s, mut t) = (lift(g0), lift(h0), lift(s0), lift(t0));
    let mut m = BigInt::from(p);
    for _ in 0..steps {
        let m2 = &m * &m;
        let e = sub_mod(f, &mul_mod(&g, &h, &m2), &m2);
        let (q, r) = divrem_monic_mod(&mul_mod(&s, &e, &m2), &h, &m2);
        let g1 = add_mod(
            &add_mod(&g, &mul_mod(&t, &e, &m2), &m2),
            &mul_mod(&q, &g, &m2),
            &m2,
        );
        let h1 = add_mod(&h, &r, &m2);
        let b = sub_mod(
            &add_mod(&mul_mod(&s, &g1, &m2), &mul_mod(&t, &h1, &m2), &m2),
            &[BigInt::one()],
            &m2,
        );
        let (c, d) = divrem_monic_mod(&mul_mod(&s, &b, &m2), &h1, &m2);
        let s1 = sub_mod(&s, &d, &m2);
        let t1 = sub_mod(
            &sub_mod(&t, &mul_mod(&t, &b, &m2), &m2),
            &mul_mod(&c, &g1, &m2),
            &m2,
        );
        g = g1;
        h = h1;
        s = s1;
        t = t1;
        m = m2;
    }
    (g, h)
}

fn trim_z(mut v: ZPoly) -> ZPoly {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn add_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    trim_z(
        (0..n)
            .map(|i| (a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z)).mod_floor(m))
            .collect(),
    )
}

fn sub_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    trim_z(
        (0..n)
            .map(|i| (a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).mod_floor(m))
            .collect(),
    )
}

fn mul_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim_z(out.into_iter().map(|c| c.mod_floor(m)).collect())
}

fn divrem_monic_mod(a: &[BigInt], d: &[BigInt], m: &BigInt) -> (ZPoly, ZPoly) {
    let dd = d.len() - 1;
    let mut rem: ZPoly = a.to_vec();
    if rem.len() <= dd {
        return (Vec::new(), trim_z(rem));
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].mod_floor(m);
        if c.is_zero() {
            continue;
        }
        for (j, dc) in d.iter().enumerate() {
            rem[k + j] = (&rem[k + j] - &c * dc).mod_floor(m);
        }
        quot[k] = c;
    }
    rem.truncate(dd);
    (
        trim_z(quot),
        trim_z(rem.into_iter().map(|c| c.mod_floor(m)).collect()),
    )
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

// ---------------------------------------------------------------------------
// arithmetic in F_p[t]

fn reduce(f: &[BigInt], p: u64) -> PPoly {
    let pb = BigInt::from(p);
    trim_p(
        f.iter()
            .map(|c| c.mod_floor(&pb).to_u64().unwrap())
            .collect(),
    )
}

fn trim_p(mut v: PPoly) -> PPoly {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn inv_p(a: u64, p: u64) -> u64 {
    pow_scalar(a, p - 2, p)
}

fn pow_scalar(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    acc
}

fn monic_p(f: &PPoly, p: u64) -> PPoly {
    let inv = inv_p(*f.last().unwrap(), p);
    scale_p(f, inv, p)
}

fn scale_p(f: &PPoly, c: u64, p: u64) -> PPoly {
    trim_p(f.iter().map(|&x| x * c % p).collect())
}

fn deriv_p(f: &PPoly, p: u64) -> PPoly {
    trim_p(
        f.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| (i as u64 % p) * c % p)
            .collect(),
    )
}

fn sub_p(a: &PPoly, b: &PPoly, p: u64) -> PPoly {
    let n = a.len().max(b.len());
    trim_p(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
            .collect(),
    )
}

fn mul_p(a: &PPoly, b: &PPoly, p: u64) -> PPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim_p(out)
}

fn divrem_p(a: &PPoly, d: &PPoly, p: u64) -> (PPoly, PPoly) {
    let dd = d.len() - 1;
    let inv = inv_p(*d.last().unwrap(), p);
    let mut rem = a.clone();
    if rem.len() <= dd {
        return (Vec::new(), trim_p(rem));
    }
    let mut quot = vec![0u64; rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd] * inv % p;
        if c == 0 {
            continue;
        }
        for (j, &dc) in d.iter().enumerate() {
            rem[k + j] = (rem[k + j] + p - c * dc % p) % p;
        }
        quot[k] = c;
    }
    rem.truncate(dd);
    (trim_p(quot), trim_p(rem))
}

fn gcd_p(a: &PPoly, b: &PPoly, p: u64) -> PPoly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = divrem_p(&a, &b, p).1;
        a = b;
        b = r;
    }
    if a.is_empty() {
        a
    } else {
        monic_p(&a, p)
    }
}

fn xgcd_p(a: &PPoly, b: &PPoly, p: u64) -> (PPoly, PPoly, PPoly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = divrem_p(&r0, &r1, p);
        r0 = std::mem::replace(&mut r1, r);
        let s = sub_p(&s0, &mul_p(&q, &s1, p), p);
        s0 = std::mem::replace(&mut s1, s);
        let t = sub_p(&t0, &mul_p(&q, &t1, p), p);
        t0 = std::mem::replace(&mut t1, t);
    }
    let inv = inv_p(*r0.last().unwrap(), p);
    (
        scale_p(&r0, inv, p),
        scale_p(&s0, inv, p),
        scale_p(&t0, inv, p),
    )
}

fn product_p(fs: &[PPoly], p: u64) -> PPoly {
    fs.iter().fold(vec![1u64], |acc, f| mul_p(&acc, f, p))
}

fn powmod_p(base: &PPoly, exp: &BigUint, m: &PPoly, p: u64) -> PPoly {
    let mut acc = vec![1u64];
    let mut b = divrem_p(base, m, p).1;
    let bits = exp.bits();
    for i in 0..bits {
        if exp.bit(i) {
            acc = divrem_p(&mul_p(&acc, &b, p), m, p).1;
        }
        b = divrem_p(&mul_p(&b, &b, p), m, p).1;
    }
    acc
}

/// Monic irreducible factors of a monic squarefree polynomial over F_p.
fn factor_mod_p(f: &PPoly, p: u64) -> Vec<PPoly> {
    let mut out = Vec::new();
    let x = vec![0u64, 1];
    let mut rest = f.clone();
    let mut h = x.clone();
    let mut d = 0usize;
    let pb = BigUint::from(p);
    while rest.len() > 1 {
        d += 1;
        if 2 * d > rest.len() - 1 {
            out.push(monic_p(&rest, p));
            break;
        }
        h = powmod_p(&h, &pb, &rest, p);
        let g = gcd_p(&rest, &sub_p(&h, &x, p), p);
        if g.len() > 1 {
            rest = divrem_p(&rest, &g, p).0;
            h = divrem_p(&h, &rest, p).1;
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ (p << 8) ^ d as u64);
            equal_degree(&g, d, p, &mut rng, &mut out);
        }
    }
    out.sort();
    out
}

fn equal_degree(g: &PPoly, d: usize, p: u64, rng: &mut ChaCha8Rng, out: &mut Vec<PPoly>) {
    let n = g.len() - 1;
    if n == d {
        out.push(monic_p(g, p));
        return;
    }
    let exp = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let a: PPoly = trim_p((0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.len() < 2 {
            continue;
        }
        let b = sub_p(&powmod_p(&a, &exp, g, p), &vec![1u64], p);
        let c = gcd_p(g, &b, p);
        if c.len() > 1 && c.len() < g.len() {
            let other = divrem_p(g, &c, p).0;
            equal_degree(&c, d, p, rng, out);
            equal_degree(&other, d, p, rng, out);
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::rat;

    fn p(c: &[i64]) -> UniPoly<Rational> {
        UniPoly::new(c.iter().map(|&x| rat(x)).collect())
    }

    fn product(fs: &[UniPoly<Rational>]) -> UniPoly<Rational> {
        fs.iter().fold(UniPoly::one(), |acc, f| acc.mul(f))
    }

    #[test]
    fn irreducible_quadratic() {
        let f = p(&[1, 0, 1]);
        assert_eq!(factor_squarefree_rational(&f), vec![f]);
    }

    #[test]
    fn splits_product_of_quadratics() {
        // (t^2 + 1)(t^2 - 2)(3t + 1): no rational structure visible mod small primes
        let f = p(&[1, 0, 1]).mul(&p(&[-2, 0, 1])).mul(&p(&[1, 3]));
        let facs = factor_squarefree_rational(&f);
        assert_eq!(facs.len(), 3);
        assert_eq!(product(&facs), f.monic());
    }

    #[test]
    fn cyclotomic_polynomials_stay_irreducible() {
        // Phi_5 and Phi_7 split into many factors mod most primes
        assert_eq!(factor_squarefree_rational(&p(&[1, 1, 1, 1, 1])).len(), 1);
        assert_eq!(
            factor_squarefree_rational(&p(&[1, 1, 1, 1, 1, 1, 1])).len(),
            1
        );
        // t^4 + 1 is reducible modulo every prime yet irreducible over Q
        assert_eq!(factor_squarefree_rational(&p(&[1, 0, 0, 0, 1])).len(), 1);
    }

    #[test]
    fn degree_twelve_split() {
        // (t^3 - 2)(t^4 + t + 1)(t^5 - t - 1) with non-monic scaling
        let f = p(&[-2, 0, 0, 1])
            .mul(&p(&[1, 1, 0, 0, 1]))
            .mul(&p(&[-1, -1, 0, 0, 0, 1]))
            .scale(&rat(7));
        let facs = factor_squarefree_rational(&f);
        assert_eq!(facs.len(), 3);
        assert_eq!(product(&facs), f.monic());
    }

    #[test]
    fn keeps_factor_t() {
        let f = p(&[0, -1, 0, 1]); // t(t-1)(t+1)
        let facs = factor_squarefree_rational(&f);
        assert_eq!(facs.len(), 3);
    }
}
