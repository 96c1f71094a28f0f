//! Resultants over integral domains.
//!
//! The production path is the subresultant polynomial remainder sequence,
//! which keeps intermediate coefficients small by exact division. The
//! Sylvester determinant (fraction-free Bareiss elimination) is kept as an
//! independent cross-check.

use super::bipoly::BiPoly;
use super::dense::Poly;
use super::ring::Ring;
use super::upoly::UniPoly;
use crate::error::{Error, Result};

fn odd(n: usize) -> bool {
    n % 2 == 1
}

/// Resultant of `a` and `b` via the subresultant PRS.
///
/// Agrees with the Sylvester determinant including sign. A zero input gives
/// a zero resultant; a constant input `c` gives `c^deg(other)`.
pub fn subresultant<R: Ring>(a: &Poly<R>, b: &Poly<R>) -> R {
    let (Some(mut da), Some(mut db)) = (a.degree(), b.degree()) else {
        return R::zero();
    };
    let mut a = a.clone();
    let mut b = b.clone();
    let mut sign_neg = false;
    if da < db {
        std::mem::swap(&mut a, &mut b);
        std::mem::swap(&mut da, &mut db);
        sign_neg = odd(da) && odd(db);
    }
    if db == 0 {
        let r = b.lc().unwrap().pow(da);
        return if sign_neg { r.negated() } else { r };
    }

    let mut g = R::one();
    let mut h = R::one();
    loop {
        let da = a.deg();
        let db = b.deg();
        let delta = da - db;
        if odd(da) && odd(db) {
            sign_neg = !sign_neg;
        }
        let r = a.prem(&b);
        a = b;
        if r.is_zero() {
            return R::zero();
        }
        let divisor = g.times(&h.pow(delta));
        b = r.map(|c| c.div_exact(&divisor).expect("subresultant division is exact"));
        g = a.lc().unwrap().clone();
        // h = g^delta / h^(delta - 1)
        h = if delta == 0 {
            h
        } else {
            g.pow(delta)
                .div_exact(&h.pow(delta - 1))
                .expect("subresultant division is exact")
        };
        if b.deg() == 0 {
            let da = a.deg();
            let lb = b.lc().unwrap().clone();
            let res = if da == 0 {
                R::one()
            } else {
                lb.pow(da)
                    .div_exact(&h.pow(da - 1))
                    .expect("subresultant division is exact")
            };
            return if sign_neg { res.negated() } else { res };
        }
    }
}

/// Sylvester matrix of `a` (degree m) and `b` (degree n), size `(m+n) x (m+n)`.
pub fn sylvester_matrix<R: Ring>(a: &Poly<R>, b: &Poly<R>) -> Vec<Vec<R>> {
    let m = a.deg();
    let n = b.deg();
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![R::zero(); size];
        for k in 0..=m {
            row[i + k] = a.coeff(m - k);
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![R::zero(); size];
        for k in 0..=n {
            row[i + k] = b.coeff(n - k);
        }
        rows.push(row);
    }
    rows
}

/// Determinant by fraction-free Bareiss elimination.
pub fn bareiss_determinant<R: Ring>(mut m: Vec<Vec<R>>) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return R::zero();
            };
            m.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].times(&m[k][k]).minus(&m[i][k].times(&m[k][j]));
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = R::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        det.negated()
    } else {
        det
    }
}

/// Resultant as the determinant of the Sylvester matrix.
pub fn sylvester_resultant<R: Ring>(a: &Poly<R>, b: &Poly<R>) -> R {
    if a.is_zero() || b.is_zero() {
        return R::zero();
    }
    bareiss_determinant(sylvester_matrix(a, b))
}

/// `Res_t(a, b)` for polynomials in `s` and `t`, as a polynomial in `s`.
pub fn resultant_t(a: &BiPoly, b: &BiPoly) -> Result<UniPoly> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(subresultant(&a.to_t_poly(), &b.to_t_poly()))
}

/// Same as [`resultant_t`] through the Sylvester determinant.
pub fn resultant_t_sylvester(a: &BiPoly, b: &BiPoly) -> Result<UniPoly> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(sylvester_resultant(&a.to_t_poly(), &b.to_t_poly()))
}
