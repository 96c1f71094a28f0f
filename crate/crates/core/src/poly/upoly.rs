use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use super::dense::Poly;
use super::ring::{fmt_rational, rat, Rational, Ring};
use crate::error::{Error, Result};

/// Univariate polynomial with rational coefficients.
pub type UniPoly = Poly<Rational>;

impl Poly<Rational> {
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Poly::new(coeffs.iter().cloned().map(Rational::from_integer).collect())
    }

    /// Euclidean division: `self = q * b + r` with `deg r < deg b`.
    pub fn div_rem(&self, b: &Self) -> (Self, Self) {
        let db = b.degree().expect("division by zero polynomial");
        let mut r = self.clone();
        if r.deg() < db || r.is_zero() {
            return (Poly::zero(), r);
        }
        let inv = b.lc().unwrap().recip();
        let mut q = vec![Rational::zero(); r.deg() - db + 1];
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let c = r.lc().unwrap() * &inv;
            r = &r - &b.scale(&c).shift(dr - db);
            q[dr - db] = c;
        }
        (Poly::new(q), r)
    }

    pub fn rem(&self, b: &Self) -> Self {
        self.div_rem(b).1
    }

    /// `true` when `b` divides `self` exactly.
    pub fn divides(b: &Self, a: &Self) -> bool {
        if b.is_zero() {
            return a.is_zero();
        }
        a.rem(b).is_zero()
    }

    /// Scales to leading coefficient one. The zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.lc() {
            None => Poly::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn is_monic(&self) -> bool {
        self.lc().is_some_and(|c| c.is_one())
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Monic gcd of a list; the empty list and all-zero lists give zero.
    pub fn gcd_all<'a>(polys: impl IntoIterator<Item = &'a Self>) -> Self {
        let mut g = Poly::zero();
        for p in polys {
            g = g.gcd(p);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Extended Euclid: returns `(g, u, v)` with `u*a + v*b = g`, `g` monic.
    pub fn xgcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = &s0 - &(&q * &s1);
            s0 = std::mem::replace(&mut s1, s);
            let t = &t0 - &(&q * &t1);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.lc().cloned() {
            None => (r0, s0, t0),
            Some(lc) => {
                let inv = lc.recip();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    pub fn is_one(&self) -> bool {
        self.coeffs().len() == 1 && self.coeffs()[0].is_one()
    }

    /// Multiplicity of `root` as a zero of `self` (0 if not a root).
    pub fn root_multiplicity(&self, root: &Rational) -> usize {
        assert!(!self.is_zero());
        let mut p = self.clone();
        let mut k = 0;
        loop {
            let (q, r) = p.div_linear(root);
            if !r.is_zero() {
                return k;
            }
            p = q;
            k += 1;
        }
    }

    /// Yun's square-free decomposition of the monic part.
    ///
    /// Returns monic, square-free, pairwise coprime `f_i` with strictly
    /// increasing exponents such that `self = lc * prod f_i^e_i`.
    pub fn squarefree_decompose(&self) -> Result<Vec<(Self, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let f = self.monic();
        let mut out = Vec::new();
        if f.deg() == 0 {
            return Ok(out);
        }
        let df = f.derivative();
        let mut a = f.gcd(&df);
        let mut b = f.div_rem(&a).0;
        let mut c = df.div_rem(&a).0;
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while b.deg() > 0 {
            a = b.gcd(&d);
            b = b.div_rem(&a).0;
            c = d.div_rem(&a).0;
            if a.deg() > 0 {
                out.push((a.monic(), i));
            }
            d = &c - &b.derivative();
            i += 1;
        }
        Ok(out)
    }

    /// Product of the distinct monic irreducible factors.
    pub fn squarefree_part(&self) -> Self {
        if self.deg() == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Rescales to a primitive integer polynomial with positive leading coefficient.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let lcm = self
            .coeffs()
            .iter()
            .fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs()
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::from(0), |acc, c| acc.gcd(c));
        let sign = if ints.last().unwrap().is_negative() {
            -BigInt::from(1)
        } else {
            BigInt::from(1)
        };
        ints.into_iter().map(|c| c / &g * &sign).collect()
    }

    /// `(t - 1)^deg * self(theta t / (t - 1))`, padded to degree `n`.
    pub fn moebius_transform(&self, theta: &Rational, n: usize) -> Self {
        // sum_k c_k theta^k t^k (t-1)^(n-k)
        let tm1 = Poly::from_ints(&[-1, 1]);
        let mut acc = Poly::zero();
        for (k, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = Poly::monomial(c * Ring::pow(theta, k), k);
            acc = &acc + &(&term * &tm1.pow(n - k));
        }
        acc
    }

    /// Pretty form using `var` as the variable name, highest degree first.
    pub fn pretty(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if k == 0 || !mag.is_one() {
                out.push_str(&fmt_rational(&mag));
                if k > 0 {
                    out.push('*');
                }
            }
            out.push_str(&mono);
        }
        out
    }

    /// Coefficients in ascending order as `n` / `n/d` strings.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs().iter().map(fmt_rational).collect()
    }

    /// Canonical sort key: degree, then coefficients from the top.
    pub fn sort_key(&self) -> (usize, Vec<Rational>) {
        (self.deg(), self.coeffs().iter().rev().cloned().collect())
    }
}

impl fmt::Display for Poly<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty("t"))
    }
}

/// Multiplies out `prod f_i^e_i`.
pub fn expand_factors(factors: &[(UniPoly, usize)]) -> UniPoly {
    factors
        .iter()
        .fold(UniPoly::one(), |acc, (f, e)| &acc * &f.pow(*e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ring::ratio;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 1])), p(&[-1, 1]));
        // t^4 + t^2 and 2t^3 + t + 1 share no root
        assert_eq!(p(&[0, 0, 1, 0, 1]).gcd(&p(&[1, 1, 0, 2])), p(&[1]));
        assert!(UniPoly::zero().gcd(&UniPoly::zero()).is_zero());
        assert_eq!(
            UniPoly::zero().gcd(&p(&[2, 4])),
            UniPoly::new(vec![ratio(1, 2), rat(1)])
        );
    }

    #[test]
    fn gcd_of_second_example_components_is_t_plus_1() {
        let p1 = p(&[1, 2, 3, 4, 3, 2, 1]);
        let p2 = p(&[-1, -2, -1, -1, -1]);
        assert_eq!(p1.gcd(&p2), p(&[1, 1]));
    }

    #[test]
    fn xgcd_identity() {
        let a = p(&[1, 0, 1]);
        let b = p(&[2, 1]);
        let (g, u, v) = a.xgcd(&b);
        assert!(g.is_one());
        assert_eq!(&(&u * &a) + &(&v * &b), g);
    }

    #[test]
    fn squarefree_examples() {
        let s1 = p(&[1, 1]);
        assert_eq!(s1.squarefree_decompose().unwrap(), vec![(s1.clone(), 1)]);

        let q = p(&[1, 0, 1]);
        let a = &q.pow(6) * &s1;
        assert_eq!(
            a.squarefree_decompose().unwrap(),
            vec![(s1.clone(), 1), (q.clone(), 6)]
        );

        let b = &p(&[-1, 1]).pow(2) * &p(&[-3, 1]).pow(2);
        assert_eq!(
            b.squarefree_decompose().unwrap(),
            vec![(p(&[3, -4, 1]), 2)]
        );
        assert_eq!(UniPoly::zero().squarefree_decompose(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn primitive_integer_form() {
        let a = UniPoly::new(vec![ratio(1, 2), ratio(-3, 4)]);
        assert_eq!(
            a.primitive_integer(),
            vec![BigInt::from(-2), BigInt::from(3)]
        );
    }

    #[test]
    fn pretty_printing() {
        assert_eq!(p(&[-1, -1, 1]).pretty("s"), "s^2 - s - 1");
        assert_eq!(p(&[16, 44, 0, 3]).pretty("t"), "3*t^3 + 44*t + 16");
        assert_eq!(UniPoly::new(vec![ratio(-1, 5)]).pretty("t"), "-1/5");
    }

    #[test]
    fn root_multiplicity() {
        let a = &p(&[0, 1]).pow(3) * &p(&[1, 1]);
        assert_eq!(a.root_multiplicity(&rat(0)), 3);
        assert_eq!(a.root_multiplicity(&rat(-1)), 1);
        assert_eq!(a.root_multiplicity(&rat(2)), 0);
    }
}
