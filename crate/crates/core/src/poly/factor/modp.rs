//! Dense polynomials over a small prime field `F_p` and their factorization
//! by distinct-degree and equal-degree (Cantor-Zassenhaus) splitting.

use rand::Rng;

pub type Fp = u64;

/// Polynomial over `F_p`, ascending coefficients, no trailing zeros.
pub type ModPoly = Vec<Fp>;

#[derive(Clone, Copy, Debug)]
pub struct PrimeField {
    pub p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        assert!(p > 2 && p < (1 << 31));
        PrimeField { p }
    }

    fn mulm(&self, a: Fp, b: Fp) -> Fp {
        a * b % self.p
    }

    pub fn inv(&self, a: Fp) -> Fp {
        assert!(a != 0, "inverse of zero in F_p");
        self.powm(a, self.p - 2)
    }

    fn powm(&self, mut a: Fp, mut e: u64) -> Fp {
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mulm(acc, a);
            }
            a = self.mulm(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn trim(mut a: ModPoly) -> ModPoly {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn add(&self, a: &[Fp], b: &[Fp]) -> ModPoly {
        let n = a.len().max(b.len());
        Self::trim(
            (0..n)
                .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % self.p)
                .collect(),
        )
    }

    pub fn sub(&self, a: &[Fp], b: &[Fp]) -> ModPoly {
        let n = a.len().max(b.len());
        Self::trim(
            (0..n)
                .map(|i| {
                    (a.get(i).copied().unwrap_or(0) + self.p - b.get(i).copied().unwrap_or(0))
                        % self.p
                })
                .collect(),
        )
    }

    pub fn mul(&self, a: &[Fp], b: &[Fp]) -> ModPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        Self::trim(out)
    }

    pub fn scale(&self, a: &[Fp], c: Fp) -> ModPoly {
        Self::trim(a.iter().map(|&x| self.mulm(x, c)).collect())
    }

    pub fn div_rem(&self, a: &[Fp], b: &[Fp]) -> (ModPoly, ModPoly) {
        assert!(!b.is_empty(), "division by zero polynomial");
        let db = b.len() - 1;
        let inv = self.inv(b[db]);
        let mut r = a.to_vec();
        if r.len() <= db {
            return (Vec::new(), Self::trim(r));
        }
        let mut q = vec![0u64; r.len() - db];
        while r.len() > db {
            let dr = r.len() - 1;
            let c = self.mulm(r[dr], inv);
            if c != 0 {
                for (k, &bc) in b.iter().enumerate() {
                    let idx = dr - db + k;
                    r[idx] = (r[idx] + self.p - self.mulm(c, bc)) % self.p;
                }
            }
            q[dr - db] = c;
            r.pop();
            r = Self::trim(r);
        }
        (Self::trim(q), r)
    }

    pub fn rem(&self, a: &[Fp], b: &[Fp]) -> ModPoly {
        self.div_rem(a, b).1
    }

    pub fn monic(&self, a: &[Fp]) -> ModPoly {
        match a.last() {
            None => Vec::new(),
            Some(&lc) => self.scale(a, self.inv(lc)),
        }
    }

    pub fn gcd(&self, a: &[Fp], b: &[Fp]) -> ModPoly {
        let mut a = a.to_vec();
        let mut b = b.to_vec();
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// Returns `(g, u, v)` with `u*a + v*b = g` monic.
    pub fn xgcd(&self, a: &[Fp], b: &[Fp]) -> (ModPoly, ModPoly, ModPoly) {
        let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = self.div_rem(&r0, &r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = self.sub(&s0, &self.mul(&q, &s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = self.sub(&t0, &self.mul(&q, &t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = self.inv(*r0.last().expect("xgcd of two zero polynomials"));
        (self.scale(&r0, inv), self.scale(&s0, inv), self.scale(&t0, inv))
    }

    pub fn derivative(&self, a: &[Fp]) -> ModPoly {
        Self::trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| self.mulm(c, k as u64 % self.p))
                .collect(),
        )
    }

    /// `base^e mod m`
    pub fn powmod(&self, base: &[Fp], mut e: u128, m: &[Fp]) -> ModPoly {
        let mut acc = vec![1u64];
        let mut b = self.rem(base, m);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.rem(&self.mul(&acc, &b), m);
            }
            b = self.rem(&self.mul(&b, &b), m);
            e >>= 1;
        }
        acc
    }

    pub fn is_squarefree(&self, a: &[Fp]) -> bool {
        self.gcd(a, &self.derivative(a)).len() == 1
    }

    /// Distinct-degree factorization of a monic square-free polynomial:
    /// pairs `(d, g_d)` with `g_d` the product of all irreducible factors of degree `d`.
    pub fn distinct_degree(&self, f: &[Fp]) -> Vec<(usize, ModPoly)> {
        let mut out = Vec::new();
        let mut f = f.to_vec();
        let x = vec![0u64, 1];
        let mut h = x.clone();
        let mut d = 0;
        while f.len() > 1 {
            d += 1;
            if 2 * d > f.len() - 1 {
                out.push((f.len() - 1, f.clone()));
                break;
            }
            h = self.powmod(&h, self.p as u128, &f);
            let g = self.gcd(&f, &self.sub(&h, &x));
            if g.len() > 1 {
                f = self.div_rem(&f, &g).0;
                h = self.rem(&h, &f);
                out.push((d, g));
            }
        }
        out
    }

    /// Splits a monic product of irreducibles all of degree `d` (odd `p`).
    pub fn equal_degree<R: Rng>(&self, f: &[Fp], d: usize, rng: &mut R) -> Vec<ModPoly> {
        let n = f.len() - 1;
        if n == d {
            return vec![f.to_vec()];
        }
        loop {
            let a: ModPoly = Self::trim((0..n).map(|_| rng.gen_range(0..self.p)).collect());
            if a.len() < 2 {
                continue;
            }
            let g = self.gcd(&a, f);
            let split = if g.len() > 1 && g.len() < f.len() {
                g
            } else {
                // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p - 1)/2)
                let mut frob = self.rem(&a, f);
                let mut norm = frob.clone();
                for _ in 1..d {
                    frob = self.powmod(&frob, self.p as u128, f);
                    norm = self.rem(&self.mul(&norm, &frob), f);
                }
                let b = self.powmod(&norm, ((self.p - 1) / 2) as u128, f);
                let g = self.gcd(&self.sub(&b, &[1]), f);
                if g.len() > 1 && g.len() < f.len() {
                    g
                } else {
                    continue;
                }
            };
            let rest = self.div_rem(f, &split).0;
            let mut out = self.equal_degree(&split, d, rng);
            out.extend(self.equal_degree(&self.monic(&rest), d, rng));
            return out;
        }
    }

    /// Complete factorization of a monic square-free polynomial into monic irreducibles.
    pub fn factor_squarefree<R: Rng>(&self, f: &[Fp], rng: &mut R) -> Vec<ModPoly> {
        let mut out = Vec::new();
        for (d, g) in self.distinct_degree(f) {
            out.extend(self.equal_degree(&g, d, rng));
        }
        out.sort();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn factor_x4_minus_1_mod_5() {
        let f = PrimeField::new(5);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        // x^4 - 1 = (x-1)(x-2)(x-3)(x-4) mod 5
        let poly = vec![4, 0, 0, 0, 1];
        let fs = f.factor_squarefree(&poly, &mut rng);
        assert_eq!(fs.len(), 4);
        let prod = fs.iter().fold(vec![1], |acc, g| f.mul(&acc, g));
        assert_eq!(prod, poly);
    }

    #[test]
    fn irreducible_quadratic_mod_3() {
        let f = PrimeField::new(3);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        // x^2 + 1 is irreducible mod 3
        assert_eq!(f.factor_squarefree(&[1, 0, 1], &mut rng), vec![vec![1, 0, 1]]);
        // mixed degrees: (x^2+1)(x+1)(x+2)
        let poly = f.mul(&f.mul(&[1, 0, 1], &[1, 1]), &[2, 1]);
        let fs = f.factor_squarefree(&poly, &mut rng);
        assert_eq!(fs.len(), 3);
    }

    #[test]
    fn xgcd_identity() {
        let f = PrimeField::new(7);
        let a = vec![1, 2, 1];
        let b = vec![3, 1];
        let (g, u, v) = f.xgcd(&a, &b);
        assert_eq!(g, vec![1]);
        assert_eq!(f.add(&f.mul(&u, &a), &f.mul(&v, &b)), vec![1]);
    }
}
