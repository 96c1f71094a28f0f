use std::ops::{Add, Mul, Neg, Sub};

use super::ring::Ring;

/// Dense univariate polynomial over a ring `R`, coefficients in ascending order.
///
/// The zero polynomial has no coefficients; otherwise the last coefficient is
/// nonzero.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: R, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::monomial(R::one(), 1)
    }

    /// `x - root`
    pub fn linear_root(root: &R) -> Self {
        Self::new(vec![root.negated(), R::one()])
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a.times(c)).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn eval(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc.times(x).plus(c))
    }

    pub fn pow(&self, exp: usize) -> Self {
        Ring::pow(self, exp)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.times(&R::from_int(k as i64)))
                .collect(),
        )
    }

    /// Reverses the coefficient list after padding to length `n + 1`: `x^n p(1/x)`.
    pub fn reversed(&self, n: usize) -> Self {
        assert!(self.deg() <= n || self.is_zero());
        let mut coeffs: Vec<R> = (0..=n).map(|k| self.coeff(k)).collect();
        coeffs.reverse();
        Self::new(coeffs)
    }

    /// Substitutes `x -> other` (composition `self(other(x))`).
    pub fn compose(&self, other: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * other) + &Self::constant(c.clone()))
    }

    /// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a mod b`.
    pub fn prem(&self, b: &Self) -> Self {
        let db = b.degree().expect("pseudo-division by zero polynomial");
        let Some(da) = self.degree() else {
            return Self::zero();
        };
        if da < db {
            return self.clone();
        }
        let lb = b.lc().unwrap().clone();
        let mut r = self.clone();
        let mut steps = da - db + 1;
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.lc().unwrap().clone();
            r = &r.scale(&lb) - &b.scale(&lr).shift(dr - db);
            steps -= 1;
        }
        if steps > 0 {
            r = r.scale(&lb.pow(steps));
        }
        r
    }

    /// Exact quotient `self / b`, or `None` if `b` does not divide `self`
    /// in `R[x]`.
    pub fn div_exact_poly(&self, b: &Self) -> Option<Self> {
        let db = b.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let lb = b.lc().unwrap();
        let mut r = self.clone();
        let da = r.deg();
        if da < db {
            return None;
        }
        let mut q = vec![R::zero(); da - db + 1];
        while let Some(dr) = r.degree() {
            if dr < db {
                return None;
            }
            let c = r.lc().unwrap().div_exact(lb)?;
            r = &r - &b.scale(&c).shift(dr - db);
            q[dr - db] = c;
        }
        Some(Self::new(q))
    }

    /// Divides by `x - root`, returning quotient and remainder.
    pub fn div_linear(&self, root: &R) -> (Self, R) {
        if self.is_zero() {
            return (Self::zero(), R::zero());
        }
        let n = self.coeffs.len();
        let mut q = vec![R::zero(); n - 1];
        let mut carry = R::zero();
        for k in (0..n).rev() {
            let v = self.coeffs[k].plus(&carry.times(root));
            if k == 0 {
                return (Self::new(q), v);
            }
            q[k - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = R::zero();
        Self::new(
            (0..n)
                .map(|k| {
                    f(
                        self.coeffs.get(k).unwrap_or(&zero),
                        other.coeffs.get(k).unwrap_or(&zero),
                    )
                })
                .collect(),
        )
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        self.div_exact_poly(other)
    }
    fn from_int(n: i64) -> Self {
        Poly::constant(R::from_int(n))
    }
}

impl<R: Ring> Add for &Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: Self) -> Poly<R> {
        self.zip_with(rhs, |a, b| a.plus(b))
    }
}

impl<R: Ring> Sub for &Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: Self) -> Poly<R> {
        self.zip_with(rhs, |a, b| a.minus(b))
    }
}

impl<R: Ring> Mul for &Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: Self) -> Poly<R> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].plus(&a.times(b));
                }
            }
        }
        Poly::new(out)
    }
}

impl<R: Ring> Neg for &Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly::new(self.coeffs.iter().map(Ring::negated).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<R: Ring> $tr for Poly<R> {
            type Output = Poly<R>;
            fn $m(self, rhs: Self) -> Poly<R> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<R: Ring> Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        -&self
    }
}
