//! Factorization of rational univariate polynomials into irreducibles.
//!
//! Square-free decomposition (Yun), then per square-free part: linear
//! factors from the rational-root test, the quadratic discriminant test, and
//! otherwise Zassenhaus: factor modulo a good prime, lift the modular
//! factorization p-adically (Hensel) and recombine subsets.

mod hensel;
pub mod modp;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use self::modp::{ModPoly, PrimeField};
use super::ring::Rational;
use super::upoly::UniPoly;
use crate::error::{Error, Result};

/// Default upper bound on the degree accepted by [`factor_rationals`].
pub const DEFAULT_DEGREE_CAP: usize = 64;

/// Integer polynomial, ascending coefficients.
pub(crate) type ZPoly = Vec<BigInt>;

/// `a = constant * prod factor^exponent` with monic irreducible factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub constant: Rational,
    pub factors: Vec<(UniPoly, usize)>,
}

impl Factorization {
    pub fn expand(&self) -> UniPoly {
        super::upoly::expand_factors(&self.factors).scale(&self.constant)
    }
}

/// Factors `a` over `Q`. Factors are sorted by degree, then coefficients.
pub fn factor_rationals(a: &UniPoly, degree_cap: usize) -> Result<Factorization> {
    let Some(lc) = a.lc().cloned() else {
        return Err(Error::ZeroPolynomial);
    };
    if a.deg() > degree_cap {
        return Err(Error::DegreeCapExceeded {
            degree: a.deg(),
            cap: degree_cap,
        });
    }
    let mut factors = Vec::new();
    for (part, e) in a.squarefree_decompose()? {
        for f in factor_squarefree(&part.primitive_integer()) {
            factors.push((UniPoly::from_bigints(&f).monic(), e));
        }
    }
    factors.sort_by(|x, y| x.0.sort_key().cmp(&y.0.sort_key()).then(x.1.cmp(&y.1)));
    Ok(Factorization {
        constant: lc,
        factors,
    })
}

/// `true` when `a` (nonconstant) is irreducible over `Q`.
pub fn is_irreducible(a: &UniPoly) -> bool {
    if a.deg() == 0 {
        return false;
    }
    matches!(factor_rationals(a, usize::MAX), Ok(f) if f.factors.len() == 1 && f.factors[0].1 == 1)
}

fn zdeg(f: &[BigInt]) -> usize {
    f.len() - 1
}

fn ztrim(mut f: ZPoly) -> ZPoly {
    while f.last().is_some_and(Zero::is_zero) {
        f.pop();
    }
    f
}

fn zprimitive(f: ZPoly) -> ZPoly {
    let f = ztrim(f);
    let g = f.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() {
        return f;
    }
    let sign = if f.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
    f.into_iter().map(|c| c / &g * &sign).collect()
}

pub(crate) fn zmul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
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
    out
}

/// Exact quotient over `Z`, or `None` if `g` does not divide `f`.
fn zdiv_exact(f: &[BigInt], g: &[BigInt]) -> Option<ZPoly> {
    let dg = zdeg(g);
    let mut r = f.to_vec();
    if r.len() <= dg {
        return None;
    }
    let lg = g.last().unwrap();
    let mut q = vec![BigInt::zero(); r.len() - dg];
    while r.len() > dg {
        let dr = r.len() - 1;
        let (c, rem) = r[dr].div_rem(lg);
        if !rem.is_zero() {
            return None;
        }
        for (k, gc) in g.iter().enumerate() {
            r[dr - dg + k] -= &c * gc;
        }
        q[dr - dg] = c;
        r = ztrim(r);
    }
    if r.iter().all(Zero::is_zero) {
        Some(q)
    } else {
        None
    }
}

fn zeval(f: &[BigInt], num: &BigInt, den: &BigInt) -> BigInt {
    // den^deg * f(num/den)
    let n = zdeg(f);
    let mut acc = BigInt::zero();
    let mut dpow = BigInt::one();
    let mut terms = Vec::with_capacity(n + 1);
    for _ in 0..=n {
        terms.push(dpow.clone());
        dpow *= den;
    }
    let mut npow = BigInt::one();
    for (k, c) in f.iter().enumerate() {
        acc += c * &npow * &terms[n - k];
        npow *= num;
    }
    acc
}

/// Positive divisors of `n`, or `None` when `n` is too large to enumerate.
fn small_divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n == 0 || n > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    Some(out)
}

/// Splits off linear factors found by the rational-root test.
fn peel_rational_roots(mut f: ZPoly, out: &mut Vec<ZPoly>) -> ZPoly {
    if f[0].is_zero() {
        out.push(vec![BigInt::zero(), BigInt::one()]);
        f.remove(0);
    }
    if zdeg(&f) == 0 {
        return f;
    }
    let (Some(nums), Some(dens)) = (small_divisors(&f[0]), small_divisors(f.last().unwrap())) else {
        return f;
    };
    for q in &dens {
        for p in &nums {
            for sign in [1i64, -1] {
                if zdeg(&f) == 0 {
                    return f;
                }
                let num = BigInt::from(*p) * sign;
                let den = BigInt::from(*q);
                if num.gcd(&den) != BigInt::one() {
                    continue;
                }
                if zeval(&f, &num, &den).is_zero() {
                    let lin = vec![-num.clone(), den.clone()];
                    f = zdiv_exact(&f, &lin).expect("root gives exact linear factor");
                    out.push(lin);
                }
            }
        }
    }
    f
}

/// Irreducible primitive factors of a primitive square-free integer polynomial.
fn factor_squarefree(f: &[BigInt]) -> Vec<ZPoly> {
    let mut out = Vec::new();
    let f = zprimitive(f.to_vec());
    if zdeg(&f) == 0 {
        return out;
    }
    if zdeg(&f) == 1 {
        out.push(f);
        return out;
    }
    let f = peel_rational_roots(f, &mut out);
    match zdeg(&f) {
        0 => {}
        1 => out.push(zprimitive(f)),
        2 => out.extend(split_quadratic(&f)),
        _ => out.extend(zassenhaus(&f)),
    }
    out
}

fn split_quadratic(f: &[BigInt]) -> Vec<ZPoly> {
    let (c, b, a) = (&f[0], &f[1], &f[2]);
    let disc = b * b - BigInt::from(4) * a * c;
    if disc.is_negative() {
        return vec![f.to_vec()];
    }
    let r = disc.sqrt();
    if &r * &r != disc {
        return vec![f.to_vec()];
    }
    // roots (-b +- r) / 2a
    let two_a = BigInt::from(2) * a;
    let l1 = zprimitive(vec![-(-b + &r), two_a.clone()]);
    let l2 = zprimitive(vec![-(-b - &r), two_a]);
    vec![l1, l2]
}

fn reduce_mod(f: &[BigInt], p: u64) -> ModPoly {
    let pb = BigInt::from(p);
    PrimeField::trim(f.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect())
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Chooses a prime with `p` not dividing the leading coefficient and `f mod p`
/// square-free, preferring the fewest modular factors among a few candidates.
fn choose_prime(f: &[BigInt]) -> (PrimeField, Vec<ModPoly>) {
    let lc = f.last().unwrap();
    let mut best: Option<(PrimeField, Vec<ModPoly>)> = None;
    let mut tried = 0;
    for p in (3u64..).filter(|&p| is_prime(p)) {
        let pb = BigInt::from(p);
        if lc.mod_floor(&pb).is_zero() {
            continue;
        }
        let field = PrimeField::new(p);
        let fp = reduce_mod(f, p);
        if !field.is_squarefree(&fp) {
            continue;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(p);
        let facs = field.factor_squarefree(&field.monic(&fp), &mut rng);
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((field, facs));
        }
        tried += 1;
        if tried >= 5 || best.as_ref().is_some_and(|(_, b)| b.len() == 1) {
            break;
        }
    }
    best.unwrap()
}

fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn zassenhaus(f: &[BigInt]) -> Vec<ZPoly> {
    let n = zdeg(f);
    let (field, modular) = choose_prime(f);
    if modular.len() <= 1 {
        return vec![f.to_vec()];
    }
    let p = field.p;
    let lc = f.last().unwrap().clone();

    // coefficients of lc/lc(h) * h for any factor h are bounded by |lc| 2^n ||f||_1
    let norm1: BigInt = f.iter().map(|c| c.abs()).sum();
    let bound = lc.abs() * (BigInt::one() << n) * norm1 * 2;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut modulus = pb.clone();
    while modulus <= bound {
        modulus *= &pb;
        k += 1;
    }

    let lifted = hensel::lift_factorization(f, &modular, field, k);

    let mut remaining = lifted;
    let mut f = f.to_vec();
    let mut out = Vec::new();
    let mut size = 1;
    while 2 * size <= remaining.len() {
        let mut found = None;
        for subset in combinations(remaining.len(), size) {
            let lcf = f.last().unwrap().clone();
            let mut g: ZPoly = vec![lcf];
            for &i in &subset {
                g = zmul(&g, &remaining[i]);
                g.iter_mut().for_each(|c| *c = c.mod_floor(&modulus));
            }
            let g = zprimitive(g.iter().map(|c| symmetric(c, &modulus)).collect());
            if !f[0].is_zero() && (g[0].is_zero() || !(&f[0] % &g[0]).is_zero()) {
                continue;
            }
            if let Some(q) = zdiv_exact(&f, &g) {
                found = Some((subset, g, q));
                break;
            }
        }
        match found {
            Some((subset, g, q)) => {
                out.push(g);
                f = zprimitive(q);
                remaining = remaining
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, h)| h)
                    .collect();
            }
            None => size += 1,
        }
    }
    if zdeg(&f) > 0 {
        out.push(zprimitive(f));
    }
    out
}
