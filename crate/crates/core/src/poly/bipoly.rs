use std::collections::BTreeMap;



use super::dense::Poly;
use super::ring::{Rational, Ring};
use super::upoly::UniPoly;

/// Sparse polynomial in two variables `s` and `t`, keyed by `(deg_s, deg_t)`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), Rational)>) -> Self {
        let mut out = BiPoly::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    fn add_term(&mut self, key: (u32, u32), c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(key).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, ds: u32, dt: u32) -> Rational {
        self.terms.get(&(ds, dt)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree_s(&self) -> usize {
        self.terms.keys().map(|k| k.0 as usize).max().unwrap_or(0)
    }

    pub fn degree_t(&self) -> usize {
        self.terms.keys().map(|k| k.1 as usize).max().unwrap_or(0)
    }

    /// `a(s) * b(t)`
    pub fn outer(a: &UniPoly, b: &UniPoly) -> Self {
        let mut out = BiPoly::zero();
        for (i, ca) in a.coeffs().iter().enumerate() {
            for (j, cb) in b.coeffs().iter().enumerate() {
                out.add_term((i as u32, j as u32), ca * cb);
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, -c);
        }
        out
    }

    /// Exchanges the roles of `s` and `t`.
    pub fn swap_vars(&self) -> Self {
        BiPoly {
            terms: self.terms.iter().map(|(&(a, b), c)| ((b, a), c.clone())).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        BiPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    /// View as a polynomial in `t` whose coefficients are polynomials in `s`.
    pub fn to_t_poly(&self) -> Poly<UniPoly> {
        let mut cols: Vec<Vec<Rational>> = vec![Vec::new(); self.degree_t() + 1];
        for (&(ds, dt), c) in &self.terms {
            let col = &mut cols[dt as usize];
            if col.len() <= ds as usize {
                col.resize(ds as usize + 1, Rational::zero());
            }
            col[ds as usize] = c.clone();
        }
        Poly::new(cols.into_iter().map(UniPoly::new).collect())
    }

    pub fn from_t_poly(p: &Poly<UniPoly>) -> Self {
        let mut out = BiPoly::zero();
        for (dt, col) in p.coeffs().iter().enumerate() {
            for (ds, c) in col.coeffs().iter().enumerate() {
                out.add_term((ds as u32, dt as u32), c.clone());
            }
        }
        out
    }

    pub fn eval(&self, s: &Rational, t: &Rational) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, (&(ds, dt), c)| {
            acc + c * Ring::pow(s, ds as usize) * Ring::pow(t, dt as usize)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ring::rat;

    #[test]
    fn t_poly_round_trip() {
        let a = BiPoly::from_terms([((0, 1), rat(1)), ((1, 0), rat(-1)), ((2, 3), rat(5))]);
        let tp = a.to_t_poly();
        assert_eq!(tp.degree(), Some(3));
        assert_eq!(BiPoly::from_t_poly(&tp), a);
        assert_eq!(a.swap_vars().swap_vars(), a);
        assert_eq!(a.eval(&rat(2), &rat(1)), rat(1 - 2 + 20));
    }
}
