//! Arithmetic in a simple algebraic extension `Q[s]/(f)` and in polynomial
//! rings over it. Used to evaluate a parametrization at a root of an
//! irreducible factor without leaving exact arithmetic.

use std::sync::Arc;



use super::ring::{Rational, Ring};
use super::upoly::UniPoly;
use crate::error::{Error, Result};

/// Element of `Q[s]/(f)`: a residue of degree below `deg f`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtElem {
    residue: UniPoly,
    modulus: Arc<UniPoly>,
}

impl ExtElem {
    pub fn residue(&self) -> &UniPoly {
        &self.residue
    }

    pub fn modulus(&self) -> &UniPoly {
        &self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.residue.is_zero()
    }

    /// The rational value when the residue is constant.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.residue.degree() {
            None => Some(Rational::zero()),
            Some(0) => Some(self.residue.coeff(0)),
            _ => None,
        }
    }

    fn wrap(&self, residue: UniPoly) -> Self {
        ExtElem {
            residue,
            modulus: self.modulus.clone(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.wrap(&self.residue + &o.residue)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.wrap(&self.residue - &o.residue)
    }

    pub fn neg(&self) -> Self {
        self.wrap(-&self.residue)
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.wrap((&self.residue * &o.residue).rem(&self.modulus))
    }

    /// Multiplicative inverse via extended Euclid.
    pub fn inv(&self) -> Result<Self> {
        let (g, u, _) = self.residue.xgcd(&self.modulus);
        if g.deg() != 0 || g.is_zero() {
            return Err(Error::NonInvertible {
                modulus: self.modulus.pretty("s"),
            });
        }
        Ok(self.wrap(u.rem(&self.modulus)))
    }
}

/// The field `Q[s]/(f)` for a monic irreducible `f`.
#[derive(Clone, Debug)]
pub struct ExtField {
    modulus: Arc<UniPoly>,
}

impl ExtField {
    pub fn new(f: &UniPoly) -> Result<Self> {
        if f.deg() == 0 {
            return Err(Error::ZeroPolynomial);
        }
        Ok(ExtField {
            modulus: Arc::new(f.monic()),
        })
    }

    pub fn modulus(&self) -> &UniPoly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.deg()
    }

    pub fn elem(&self, p: &UniPoly) -> ExtElem {
        ExtElem {
            residue: p.rem(&self.modulus),
            modulus: self.modulus.clone(),
        }
    }

    pub fn from_rational(&self, q: Rational) -> ExtElem {
        self.elem(&UniPoly::constant(q))
    }

    pub fn zero(&self) -> ExtElem {
        self.elem(&UniPoly::zero())
    }

    pub fn one(&self) -> ExtElem {
        self.from_rational(Rational::from_int(1))
    }

    /// The class of `s`, a root of the modulus.
    pub fn generator(&self) -> ExtElem {
        self.elem(&UniPoly::x())
    }

    /// Evaluates a rational polynomial at an element.
    pub fn eval(&self, p: &UniPoly, at: &ExtElem) -> ExtElem {
        p.coeffs().iter().rev().fold(self.zero(), |acc, c| {
            acc.mul(at).add(&self.from_rational(c.clone()))
        })
    }

    /// Lifts a rational polynomial in `t` to one over the extension.
    pub fn lift(&self, p: &UniPoly) -> ExtPoly {
        ExtPoly::new(p.coeffs().iter().map(|c| self.from_rational(c.clone())).collect())
    }

    /// Monic GCD in `(Q[s]/(f))[t]` by Euclid with modular inverses.
    pub fn gcd(&self, a: &ExtPoly, b: &ExtPoly) -> Result<ExtPoly> {
        let mut a = a.clone();
        let mut b = b.clone();
        while !b.is_zero() {
            let r = self.div_rem(&a, &b)?.1;
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    pub fn monic(&self, a: &ExtPoly) -> Result<ExtPoly> {
        match a.coeffs.last() {
            None => Ok(a.clone()),
            Some(lc) => {
                let inv = lc.inv()?;
                Ok(ExtPoly::new(a.coeffs.iter().map(|c| c.mul(&inv)).collect()))
            }
        }
    }

    pub fn div_rem(&self, a: &ExtPoly, b: &ExtPoly) -> Result<(ExtPoly, ExtPoly)> {
        let db = b.degree().expect("division by zero polynomial");
        let inv = b.coeffs.last().unwrap().inv()?;
        let mut r = a.coeffs.clone();
        let mut q = vec![self.zero(); r.len().saturating_sub(db).max(1)];
        while r.len() > db && !r.is_empty() {
            let dr = r.len() - 1;
            let c = r[dr].mul(&inv);
            for (k, bc) in b.coeffs.iter().enumerate() {
                r[dr - db + k] = r[dr - db + k].sub(&c.mul(bc));
            }
            q[dr - db] = c;
            while r.last().is_some_and(ExtElem::is_zero) {
                r.pop();
            }
        }
        Ok((ExtPoly::new(q), ExtPoly::new(r)))
    }

    pub fn mul(&self, a: &ExtPoly, b: &ExtPoly) -> ExtPoly {
        if a.is_zero() || b.is_zero() {
            return ExtPoly::new(Vec::new());
        }
        let mut out = vec![self.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            for (j, y) in b.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&x.mul(y));
            }
        }
        ExtPoly::new(out)
    }

    pub fn sub(&self, a: &ExtPoly, b: &ExtPoly) -> ExtPoly {
        let n = a.coeffs.len().max(b.coeffs.len());
        let z = self.zero();
        ExtPoly::new(
            (0..n)
                .map(|k| {
                    a.coeffs
                        .get(k)
                        .unwrap_or(&z)
                        .sub(b.coeffs.get(k).unwrap_or(&z))
                })
                .collect(),
        )
    }

    /// `true` if `b` divides `a`.
    pub fn divides(&self, b: &ExtPoly, a: &ExtPoly) -> Result<bool> {
        Ok(self.div_rem(a, b)?.1.is_zero())
    }

    pub fn derivative(&self, a: &ExtPoly) -> ExtPoly {
        ExtPoly::new(
            a.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.mul(&self.from_rational(Rational::from_int(k as i64))))
                .collect(),
        )
    }

    /// Multiplicity of `root` as a zero of `a`.
    pub fn root_multiplicity(&self, a: &ExtPoly, root: &ExtElem) -> Result<usize> {
        let lin = ExtPoly::new(vec![root.neg(), self.one()]);
        let mut p = a.clone();
        let mut k = 0;
        while !p.is_zero() {
            let (q, r) = self.div_rem(&p, &lin)?;
            if !r.is_zero() {
                break;
            }
            p = q;
            k += 1;
        }
        Ok(k)
    }

    /// Yun's square-free decomposition over the extension: `(part, exponent)`.
    pub fn squarefree_decompose(&self, a: &ExtPoly) -> Result<Vec<(ExtPoly, usize)>> {
        if a.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let f = self.monic(a)?;
        let mut out = Vec::new();
        if f.deg() == 0 {
            return Ok(out);
        }
        let df = self.derivative(&f);
        let mut g = self.gcd(&f, &df)?;
        let mut b = self.div_rem(&f, &g)?.0;
        let mut c = self.div_rem(&df, &g)?.0;
        let mut d = self.sub(&c, &self.derivative(&b));
        let mut i = 1;
        while b.deg() > 0 {
            g = self.gcd(&b, &d)?;
            b = self.div_rem(&b, &g)?.0;
            c = self.div_rem(&d, &g)?.0;
            if g.deg() > 0 {
                out.push((g.clone(), i));
            }
            d = self.sub(&c, &self.derivative(&b));
            i += 1;
        }
        Ok(out)
    }
}

/// Polynomial in `t` with coefficients in an extension field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtPoly {
    coeffs: Vec<ExtElem>,
}

impl ExtPoly {
    pub fn new(mut coeffs: Vec<ExtElem>) -> Self {
        while coeffs.last().is_some_and(ExtElem::is_zero) {
            coeffs.pop();
        }
        ExtPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[ExtElem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    /// The polynomial over `Q` when every coefficient is rational.
    pub fn to_rational(&self) -> Option<UniPoly> {
        let cs: Option<Vec<Rational>> = self.coeffs.iter().map(ExtElem::as_rational).collect();
        cs.map(UniPoly::new)
    }

    /// Residues of the coefficients.
    pub fn coefficient_residues(&self) -> Vec<UniPoly> {
        self.coeffs.iter().map(|c| c.residue.clone()).collect()
    }
}

/// Monic GCD of `a` and `b` in `(Q[s]/(f))[t]`.
pub fn ext_gcd_t(field: &ExtField, a: &ExtPoly, b: &ExtPoly) -> Result<ExtPoly> {
    field.gcd(a, b)
}
