use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use super::ring::{fmt_rational, Rational, Ring};
use super::upoly::UniPoly;
use crate::error::{Error, Result};

/// Exponent vector with trailing zeros stripped, so that polynomials over
/// different numbers of variables compare and combine directly.
pub type Monomial = Vec<u32>;

fn trim(mut m: Monomial) -> Monomial {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

fn mono_mul(a: &[u32], b: &[u32]) -> Monomial {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0))
            .collect(),
    )
}

fn mono_div(a: &[u32], b: &[u32]) -> Option<Monomial> {
    if b.len() > a.len() {
        return None;
    }
    let mut out = a.to_vec();
    for (i, &e) in b.iter().enumerate() {
        out[i] = out[i].checked_sub(e)?;
    }
    Some(trim(out))
}

/// Sparse multivariate polynomial over `Q`.
///
/// Variables are indexed from 0. The map is ordered lexicographically with
/// variable 0 most significant, which is a monomial order, so the last entry
/// is the leading term used by exact division.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Vec::new())
    }

    pub fn term(c: Rational, mono: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(trim(mono), c);
        }
        MultiPoly { terms }
    }

    /// The variable with index `i`.
    pub fn var(i: usize) -> Self {
        let mut m = vec![0; i + 1];
        m[i] = 1;
        Self::term(Rational::from_int(1), m)
    }

    /// Embeds a univariate polynomial as a polynomial in variable `i`.
    pub fn from_univariate(p: &UniPoly, i: usize) -> Self {
        let mut out = MultiPoly::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            let mut m = vec![0; i + 1];
            m[i] = k as u32;
            out.add_term(trim(m), c.clone());
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of variables actually present (highest index + 1).
    pub fn num_vars(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> usize {
        self.terms
            .keys()
            .map(|m| m.get(var).copied().unwrap_or(0) as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> usize {
        self.terms
            .keys()
            .map(|m| m.iter().map(|&e| e as usize).sum())
            .max()
            .unwrap_or(0)
    }

    /// Smallest total degree among the terms; `None` for zero.
    pub fn order(&self) -> Option<usize> {
        self.terms
            .keys()
            .map(|m| m.iter().map(|&e| e as usize).sum())
            .min()
    }

    /// `true` if no variable other than `var` occurs.
    pub fn only_uses(&self, var: usize) -> bool {
        self.terms
            .keys()
            .all(|m| m.iter().enumerate().all(|(i, &e)| i == var || e == 0))
    }

    /// Converts to a univariate polynomial when only `var` occurs.
    pub fn to_univariate(&self, var: usize) -> Option<UniPoly> {
        if !self.only_uses(var) {
            return None;
        }
        let mut coeffs = vec![Rational::zero(); self.degree_in(var) + 1];
        for (m, c) in &self.terms {
            coeffs[m.get(var).copied().unwrap_or(0) as usize] = c.clone();
        }
        Some(UniPoly::new(coeffs))
    }

    fn add_term(&mut self, mono: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    fn mul_term(&self, mono: &[u32], c: &Rational) -> Self {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (mono_mul(m, mono), a * c))
                .collect(),
        }
    }

    fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Groups terms by the exponent of `var`: returns `coeff_k` with
    /// `self = sum_k coeff_k * var^k` and `var` absent from each `coeff_k`.
    pub fn coefficients_in(&self, var: usize) -> Vec<MultiPoly> {
        let mut out = vec![MultiPoly::zero(); self.degree_in(var) + 1];
        for (m, c) in &self.terms {
            let k = m.get(var).copied().unwrap_or(0) as usize;
            let mut rest = m.clone();
            if var < rest.len() {
                rest[var] = 0;
            }
            out[k].add_term(trim(rest), c.clone());
        }
        out
    }

    /// Substitutes `var -> value` where `value` is another polynomial.
    pub fn substitute(&self, var: usize, value: &MultiPoly) -> Self {
        let coeffs = self.coefficients_in(var);
        coeffs
            .iter()
            .rev()
            .fold(MultiPoly::zero(), |acc, c| acc.times(value).plus(c))
    }

    /// Partial derivative with respect to `var`.
    pub fn derivative(&self, var: usize) -> Self {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let e = m.get(var).copied().unwrap_or(0);
            if e == 0 {
                continue;
            }
            let mut m = m.clone();
            m[var] -= 1;
            out.add_term(trim(m), c * Rational::from_int(e as i64));
        }
        out
    }

    /// Removes the largest power of variable `var` dividing every term.
    pub fn strip_var(&self, var: usize) -> (Self, usize) {
        let k = self
            .terms
            .keys()
            .map(|m| m.get(var).copied().unwrap_or(0))
            .min()
            .unwrap_or(0);
        if k == 0 {
            return (self.clone(), 0);
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut m = m.clone();
            m[var] -= k;
            terms.insert(trim(m), c.clone());
        }
        (MultiPoly { terms }, k as usize)
    }

    /// Scales so the leading term (lex order) has coefficient 1.
    pub fn normalized(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Integer coefficients with gcd 1 and a positive leading coefficient.
    pub fn primitive(&self) -> Self {
        let Some((_, lc)) = self.leading() else {
            return Self::zero();
        };
        let lcm = self
            .terms
            .values()
            .fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
        let gcd = self
            .terms
            .values()
            .fold(BigInt::from(0), |acc, c| acc.gcd(&(c.numer() * &lcm / c.denom())));
        let mut factor = Rational::new(lcm, gcd);
        if lc.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Pretty form with the given variable names.
    pub fn pretty(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (m, c) in self.terms.iter().rev() {
            let mono: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    let name = names.get(i).map(|s| s.to_string()).unwrap_or(format!("v{i}"));
                    if e == 1 {
                        name
                    } else {
                        format!("{name}^{e}")
                    }
                })
                .collect();
            let mag = c.abs();
            let body = if mono.is_empty() {
                fmt_rational(&mag)
            } else if mag == Rational::from_int(1) {
                mono.join("*")
            } else {
                format!("{}*{}", fmt_rational(&mag), mono.join("*"))
            };
            parts.push((c.is_negative(), body));
        }
        let mut out = String::new();
        for (i, (neg, body)) in parts.into_iter().enumerate() {
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(&body);
        }
        out
    }

    /// Content with respect to all variables except `keep`: the monic gcd of
    /// the univariate coefficients obtained by treating every other variable
    /// as an outer variable.
    pub fn content_except(&self, keep: usize) -> Result<UniPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut groups: BTreeMap<Monomial, Vec<Rational>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let k = m.get(keep).copied().unwrap_or(0) as usize;
            let mut outer = m.clone();
            if keep < outer.len() {
                outer[keep] = 0;
            }
            let entry = groups.entry(trim(outer)).or_default();
            if entry.len() <= k {
                entry.resize(k + 1, Rational::zero());
            }
            entry[k] = c.clone();
        }
        let polys: Vec<UniPoly> = groups.into_values().map(UniPoly::new).collect();
        Ok(UniPoly::gcd_all(polys.iter()))
    }
}

impl Ring for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn one() -> Self {
        MultiPoly::constant(Rational::from_int(1))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        let (big, small) = if self.terms.len() >= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
    fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
    fn times(&self, other: &Self) -> Self {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(mono_mul(ma, mb), ca * cb);
            }
        }
        out
    }
    fn negated(&self) -> Self {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        let (lm, lc) = other.leading()?;
        if other.terms.len() == 1 {
            let mut terms = BTreeMap::new();
            for (m, c) in &self.terms {
                terms.insert(mono_div(m, lm)?, c / lc);
            }
            return Some(MultiPoly { terms });
        }
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        while let Some((rm, rc)) = rem.leading() {
            let qm = mono_div(rm, lm)?;
            let qc = rc / lc;
            rem = rem.minus(&other.mul_term(&qm, &qc));
            quot.add_term(qm, qc);
        }
        Some(quot)
    }
    fn from_int(n: i64) -> Self {
        MultiPoly::constant(Rational::from_int(n))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty(&[]))
    }
}
