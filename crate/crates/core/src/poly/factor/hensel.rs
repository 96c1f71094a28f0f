//! Multifactor Hensel lifting by a balanced factor tree.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::modp::{ModPoly, PrimeField};
use super::{zmul, ZPoly};

fn to_z(a: &[u64]) -> ZPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

fn reduce(a: &[BigInt], m: &BigInt) -> ZPoly {
    a.iter().map(|c| c.mod_floor(m)).collect()
}

fn to_modp(a: &[BigInt], p: u64) -> ModPoly {
    let pb = BigInt::from(p);
    PrimeField::trim(a.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect())
}

fn sub(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| a.get(i).cloned().unwrap_or_default() - b.get(i).cloned().unwrap_or_default())
        .collect()
}

fn add_scaled(a: &[BigInt], b: &[u64], c: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| a.get(i).cloned().unwrap_or_default() + c * BigInt::from(b.get(i).copied().unwrap_or(0)))
        .collect()
}

/// Inverse of `a` modulo `m` (assumed coprime).
fn inv_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    assert!(e.gcd.is_one(), "leading coefficient not invertible");
    e.x.mod_floor(m)
}

/// Lifts `f = g0 * h0 (mod p)` to `f = g * h (mod p^k)` for monic `f`, `g0`, `h0`.
fn lift_pair(f: &[BigInt], g0: &ModPoly, h0: &ModPoly, field: PrimeField, k: u32) -> (ZPoly, ZPoly) {
    let p = field.p;
    let (_, s, t) = field.xgcd(g0, h0);
    let mut g = to_z(g0);
    let mut h = to_z(h0);
    let pb = BigInt::from(p);
    let mut pi = pb.clone();
    for _ in 1..k {
        let next = &pi * &pb;
        let e = reduce(&sub(f, &zmul(&g, &h)), &next);
        let e: ZPoly = e.iter().map(|c| c / &pi).collect();
        let ep = to_modp(&e, p);
        if !ep.is_empty() {
            let (q, r) = field.div_rem(&field.mul(&t, &ep), g0);
            let dh = field.add(&field.mul(&s, &ep), &field.mul(&q, h0));
            g = add_scaled(&g, &r, &pi);
            h = add_scaled(&h, &dh, &pi);
        }
        pi = next;
    }
    (g, h)
}

/// Lifts monic modular factors of `lc^{-1} f` to factors modulo `p^k`.
/// The results are monic with coefficients in `[0, p^k)`.
pub(super) fn lift_factorization(f: &[BigInt], factors: &[ModPoly], field: PrimeField, k: u32) -> Vec<ZPoly> {
    let m = BigInt::from(field.p).pow(k);
    let lc = f.last().unwrap();
    let inv = inv_mod(lc, &m);
    let monic: ZPoly = f.iter().map(|c| (c * &inv).mod_floor(&m)).collect();
    let mut out = Vec::with_capacity(factors.len());
    lift_tree(&monic, factors, field, k, &m, &mut out);
    out
}

fn lift_tree(f: &[BigInt], factors: &[ModPoly], field: PrimeField, k: u32, m: &BigInt, out: &mut Vec<ZPoly>) {
    if factors.len() == 1 {
        let mut g = reduce(f, m);
        while g.last().is_some_and(Zero::is_zero) {
            g.pop();
        }
        out.push(g);
        return;
    }
    let (left, right) = factors.split_at(factors.len() / 2);
    let prod = |fs: &[ModPoly]| fs.iter().fold(vec![1u64], |acc, g| field.mul(&acc, g));
    let (g, h) = lift_pair(f, &prod(left), &prod(right), field, k);
    let g = reduce(&g, m);
    let h = reduce(&h, m);
    lift_tree(&g, left, field, k, m, out);
    lift_tree(&h, right, field, k, m, out);
}
