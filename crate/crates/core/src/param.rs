//! Projective rational parametrizations, their G-polynomials, properness and
//! fibre functions.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::ring::fmt_rational;
use crate::poly::{BiPoly, Poly, Rational, Ring, UniPoly};

/// A parametrization `t -> (p_1(t) : ... : p_n(t) : p(t))` with `n >= 2`.
///
/// The last component is the denominator `p`. Components share no common
/// factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjParam {
    components: Vec<UniPoly>,
    degree: usize,
}

impl ProjParam {
    pub fn from_ints(components: &[&[i64]]) -> Result<Self> {
        make_param(components.iter().map(|c| UniPoly::from_ints(c)).collect())
    }

    pub fn components(&self) -> &[UniPoly] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &UniPoly {
        &self.components[i]
    }

    /// Ambient dimension `n`.
    pub fn dim(&self) -> usize {
        self.components.len() - 1
    }

    pub fn is_plane(&self) -> bool {
        self.dim() == 2
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn denominator(&self) -> &UniPoly {
        self.components.last().unwrap()
    }

    /// Coefficients of `t^d` in each component.
    pub fn leading_coefficients(&self) -> Vec<Rational> {
        self.components.iter().map(|c| c.coeff(self.degree)).collect()
    }

    pub fn evaluate(&self, t0: &Rational) -> ProjPoint {
        ProjPoint::new(self.components.iter().map(|c| c.eval(t0)).collect())
    }

    /// Builds from components already known to be coprime.
    pub(crate) fn from_coprime(components: Vec<UniPoly>) -> Self {
        let degree = components.iter().map(UniPoly::deg).max().unwrap_or(0);
        ProjParam { components, degree }
    }

    /// Composes with `t -> g(t)`.
    pub fn compose(&self, g: &UniPoly) -> Result<Self> {
        make_param(self.components.iter().map(|c| c.compose(g)).collect())
    }

    /// The plane parametrization `(p_i : p_j : p)`.
    pub fn plane_projection(&self, coords: [&UniPoly; 2]) -> Result<Self> {
        make_param(vec![coords[0].clone(), coords[1].clone(), self.denominator().clone()])
    }
}

impl fmt::Display for ProjParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|c| c.pretty("t")).collect();
        write!(f, "({})", parts.join(" : "))
    }
}

/// Removes the common factor of the components and rejects constant maps.
pub fn make_param(raw: Vec<UniPoly>) -> Result<ProjParam> {
    if raw.len() < 3 {
        return Err(Error::DegenerateInput(format!(
            "need at least 3 components, got {}",
            raw.len()
        )));
    }
    if raw.iter().all(UniPoly::is_zero) {
        return Err(Error::DegenerateInput("all components are zero".into()));
    }
    let g = UniPoly::gcd_all(raw.iter());
    let components: Vec<UniPoly> = raw.iter().map(|c| c.div_rem(&g).0).collect();
    // proportional components collapse to constants once the gcd is removed
    if components.iter().all(|c| c.deg() == 0) {
        return Err(Error::DegenerateInput("parametrization is constant".into()));
    }
    Ok(ProjParam::from_coprime(components))
}

/// A point of projective space, compared up to a nonzero scalar.
#[derive(Clone, Debug)]
pub struct ProjPoint {
    coords: Vec<Rational>,
}

impl ProjPoint {
    pub fn new(coords: Vec<Rational>) -> Self {
        assert!(coords.iter().any(|c| !c.is_zero()), "projective point with all coordinates zero");
        ProjPoint { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| Rational::from_int(c)).collect())
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// Coordinates divided by the last nonzero one, so affine points end in 1.
    pub fn canonical(&self) -> Vec<Rational> {
        let lead = self.coords.iter().rev().find(|c| !c.is_zero()).unwrap();
        self.coords.iter().map(|c| c / lead).collect()
    }

    pub fn at_infinity(&self) -> bool {
        self.coords.last().unwrap().is_zero()
    }

    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }
}

impl PartialEq for ProjPoint {
    fn eq(&self, other: &Self) -> bool {
        if self.coords.len() != other.coords.len() {
            return false;
        }
        let n = self.coords.len();
        (0..n).all(|i| {
            (i + 1..n).all(|j| self.coords[i].clone() * &other.coords[j] == self.coords[j].clone() * &other.coords[i])
        })
    }
}

impl Eq for ProjPoint {}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.canonical().iter().map(fmt_rational).collect();
        write!(f, "({})", parts.join(":"))
    }
}

/// `a(s) b(t) - b(s) a(t)`
pub fn g_poly(a: &UniPoly, b: &UniPoly) -> BiPoly {
    BiPoly::outer(a, b).sub(&BiPoly::outer(b, a))
}

/// The plane G-polynomials `G_1 = (p_1, p)`, `G_2 = (p_2, p)`, `G_3 = (p_1, p_2)`.
pub fn g_polys(p: &ProjParam) -> [BiPoly; 3] {
    assert!(p.is_plane(), "g_polys needs a plane parametrization");
    let c = p.components();
    [g_poly(&c[0], &c[2]), g_poly(&c[1], &c[2]), g_poly(&c[0], &c[1])]
}

/// Content in `Q[s]` of a polynomial in `t` over `Q[s]` and its primitive part.
fn content_primitive(a: &Poly<UniPoly>) -> (UniPoly, Poly<UniPoly>) {
    let content = UniPoly::gcd_all(a.coeffs().iter());
    if content.is_zero() {
        return (content, a.clone());
    }
    (content.clone(), a.map(|c| c.div_rem(&content).0))
}

/// GCD over `Q(s)[t]`, as a primitive polynomial in `Q[s][t]`.
pub fn gcd_over_qs(a: &Poly<UniPoly>, b: &Poly<UniPoly>) -> Poly<UniPoly> {
    let (mut a, mut b) = (content_primitive(a).1, content_primitive(b).1);
    if a.deg() < b.deg() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        if b.deg() == 0 {
            return Poly::one();
        }
        let r = a.prem(&b);
        a = b;
        b = content_primitive(&r).1;
    }
    a
}

/// The nonzero pairwise G-polynomials of all component pairs.
pub fn all_g_polys(p: &ProjParam) -> Vec<BiPoly> {
    let c = p.components();
    let mut out = Vec::new();
    for i in 0..c.len() {
        for j in i + 1..c.len() {
            let g = g_poly(&c[i], &c[j]);
            if !g.is_zero() {
                out.push(g);
            }
        }
    }
    out
}

/// Degree of the induced map: the `t`-degree of the gcd of the G-polynomials.
pub fn tracing_index(p: &ProjParam) -> usize {
    let gs = all_g_polys(p);
    let mut acc = gs[0].to_t_poly();
    for g in &gs[1..] {
        if acc.deg() <= 1 {
            break;
        }
        acc = gcd_over_qs(&acc, &g.to_t_poly());
    }
    acc.deg()
}

/// Rejects improper parametrizations and lines.
pub fn assert_proper(p: &ProjParam) -> Result<()> {
    let index = tracing_index(p);
    if index != 1 {
        return Err(Error::NotProper(index));
    }
    if p.degree() == 1 {
        return Err(Error::DegenerateInput("the curve is a line".into()));
    }
    Ok(())
}

/// A fibre function together with the point it belongs to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibreFunction {
    pub poly: UniPoly,
    pub point: ProjPoint,
}

/// Monic gcd of the cross equations `q_i p_j - q_j p_i`. Degree 0 means the
/// point is not reached by any finite parameter.
pub fn fibre_function(p: &ProjParam, q: &ProjPoint) -> FibreFunction {
    assert_eq!(p.dim(), q.dim(), "point and parametrization dimensions differ");
    let c = p.components();
    let x = q.coords();
    let mut acc = UniPoly::zero();
    for i in 0..c.len() {
        for j in i + 1..c.len() {
            let phi = &c[j].scale(&x[i]) - &c[i].scale(&x[j]);
            acc = acc.gcd(&phi);
            if acc.is_one() {
                break;
            }
        }
    }
    FibreFunction {
        poly: acc.monic(),
        point: q.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ring::rat;

    fn ellipse() -> ProjParam {
        ProjParam::from_ints(&[&[-1, 0, 1], &[0, -1, 1], &[1, 0, 1]]).unwrap()
    }

    fn example2() -> ProjParam {
        ProjParam::from_ints(&[
            &[1, 2, 3, 4, 3, 2, 1],
            &[-1, -2, -1, -1, -1],
            &[1, 1, 2, 3, 1, 3, 0, 1],
        ])
        .unwrap()
    }

    #[test]
    fn make_param_normalizes() {
        let p = ProjParam::from_ints(&[&[0, 1, 1], &[0, -1, 1], &[0, 1]]).unwrap();
        assert_eq!(p.components()[2], UniPoly::from_ints(&[1]));
        assert_eq!(p.degree(), 1);
        assert!(matches!(ProjParam::from_ints(&[&[1], &[1], &[1]]), Err(Error::DegenerateInput(_))));
        assert_eq!(ellipse().degree(), 2);
    }

    #[test]
    fn g_polys_are_antisymmetric_and_divisible() {
        for p in [ellipse(), example2()] {
            for g in g_polys(&p) {
                assert_eq!(g.swap_vars(), g.neg());
                assert!(g.eval(&rat(3), &rat(3)).is_zero());
            }
        }
        assert_eq!(g_polys(&example2())[0].degree_t(), 7);
    }

    #[test]
    fn tracing_index_detects_covers() {
        assert_eq!(tracing_index(&ellipse()), 1);
        let doubled = ellipse().compose(&UniPoly::from_ints(&[0, 0, 1])).unwrap();
        assert_eq!(tracing_index(&doubled), 2);
        assert_eq!(assert_proper(&doubled), Err(Error::NotProper(2)));
        assert!(assert_proper(&example2()).is_ok());
    }

    #[test]
    fn evaluation_and_points() {
        assert_eq!(ellipse().evaluate(&rat(0)), ProjPoint::from_ints(&[-1, 0, 1]));
        assert_eq!(example2().evaluate(&rat(-1)), ProjPoint::from_ints(&[0, 0, 1]));
        assert_eq!(ProjPoint::from_ints(&[2, 4, 6]), ProjPoint::from_ints(&[1, 2, 3]));
        assert_eq!(ProjPoint::from_ints(&[0, 0, 5]).to_string(), "(0:0:1)");
    }

    #[test]
    fn fibre_functions() {
        let h = fibre_function(&example2(), &ProjPoint::from_ints(&[0, 0, 1]));
        assert_eq!(h.poly, UniPoly::from_ints(&[1, 1]));
        let h = fibre_function(&example2(), &ProjPoint::from_ints(&[0, 1, 0]));
        assert_eq!(h.poly, UniPoly::from_ints(&[1, 0, 1]).pow(2));
        let h = fibre_function(&ellipse(), &ProjPoint::from_ints(&[1, 1, 1]));
        assert_eq!(h.poly, UniPoly::one());
    }
}
