#![allow(dead_code)]

use curvesing::input::parse_input;
use curvesing::param::{make_param, ProjParam};
use curvesing::poly::{Rational, Ring, UniPoly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn data(name: &str) -> String {
    let path = format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

pub fn param(name: &str) -> ProjParam {
    parse_input(&data(name)).unwrap().param().unwrap()
}

pub fn ints(c: &[i64]) -> UniPoly {
    UniPoly::from_ints(c)
}

/// `(c t + d)^n p((a t + b) / (c t + d))`
pub fn moebius(p: &UniPoly, [a, b, c, d]: [i64; 4], n: usize) -> UniPoly {
    let num = ints(&[b, a]);
    let den = ints(&[d, c]);
    p.coeffs().iter().enumerate().fold(UniPoly::zero(), |acc, (k, coef)| {
        &acc + &(&num.pow(k) * &den.pow(n - k)).scale(coef)
    })
}

pub fn reparametrize(p: &ProjParam, m: [i64; 4]) -> ProjParam {
    let d = p.degree();
    make_param(p.components().iter().map(|c| moebius(c, m, d)).collect()).unwrap()
}

/// Applies the coordinate change with integer rows `m`.
pub fn transform(p: &ProjParam, m: &[[i64; 3]; 3]) -> ProjParam {
    let c = p.components();
    let comps = m
        .iter()
        .map(|row| {
            (0..3).fold(UniPoly::zero(), |acc, j| &acc + &c[j].scale(&Rational::from_int(row[j])))
        })
        .collect();
    make_param(comps).unwrap()
}

/// The quadratic transformation `(x : y : w) -> (y w : x w : x y)`.
pub fn cremona(p: &ProjParam) -> ProjParam {
    let [x, y, w] = [p.component(0), p.component(1), p.component(2)];
    make_param(vec![y * w, x * w, x * y]).unwrap()
}

pub fn ellipse() -> ProjParam {
    param("ellipse.txt")
}

pub fn nodal_cubic() -> ProjParam {
    param("nodal_cubic.txt")
}

/// Quartic with three nodes at the coordinate points.
pub fn cremona_conic() -> ProjParam {
    let conic = make_param(vec![ints(&[3, 2, 1]), ints(&[1, -1, 2]), ints(&[-2, 1, 1])]).unwrap();
    cremona(&conic)
}

/// Quintic from a cubic moved so that `P(2)` sits on a base point.
pub fn cremona_cubic() -> ProjParam {
    let moved = transform(&nodal_cubic(), &[[1, 0, -3], [0, 1, -6], [1, 1, 1]]);
    cremona(&moved)
}

fn det3(m: &[[i64; 3]; 3]) -> i64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Seeded proper curves of degree at most 5: known nodal curves under random
/// Möbius reparametrizations and coordinate changes.
pub fn random_curves(count: usize, seed: u64) -> Vec<ProjParam> {
    let bases = [nodal_cubic(), cremona_conic(), cremona_cubic()];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let base = &bases[out.len() % bases.len()];
        let m: [i64; 4] = std::array::from_fn(|_| rng.gen_range(-3..=3));
        if m[0] * m[3] - m[1] * m[2] == 0 {
            continue;
        }
        let a: [[i64; 3]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| rng.gen_range(-3..=3)));
        if det3(&a) == 0 {
            continue;
        }
        out.push(transform(&reparametrize(base, m), &a));
    }
    out
}

/// Plane inputs checked against the formulas and the implicit oracle.
pub fn plane_suite() -> Vec<(String, ProjParam)> {
    let mut suite = vec![
        ("ellipse".to_string(), ellipse()),
        ("nodal cubic".to_string(), nodal_cubic()),
        ("conjugate node".to_string(), make_param(vec![ints(&[1, 0, 1]), ints(&[0, 1, 0, 1]), ints(&[1])]).unwrap()),
        ("cremona conic".to_string(), cremona_conic()),
        ("cremona cubic".to_string(), cremona_cubic()),
        ("unreachable limit".to_string(), param("unreachable_limit.txt")),
        ("reachable limit".to_string(), param("reachable_limit.txt")),
    ];
    for (i, p) in random_curves(20, 7).into_iter().enumerate() {
        suite.push((format!("random {i}"), p));
    }
    suite
}
