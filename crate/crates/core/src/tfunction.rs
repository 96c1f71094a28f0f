//! The T-function `T(s) = R_ij(s) / q(s)^(lambda_ij - 1)` built from
//! resultants of the reduced G-polynomials.
//!
//! The construction is generic over the coefficient ring of the `t`
//! polynomials so that it runs both over `Q[s]` (plane curves) and over
//! `Q[s, Z_1, ..]` (space curves after the `Z` substitution).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::limit::LimitPointInfo;
use crate::param::ProjParam;
use crate::poly::{subresultant, MultiPoly, Poly, Rational, Ring, UniPoly};

/// Coefficient ring containing the variable `s`.
pub trait SRing: Ring {
    fn s() -> Self;
    fn from_rational(q: &Rational) -> Self;
}

impl SRing for UniPoly {
    fn s() -> Self {
        UniPoly::x()
    }
    fn from_rational(q: &Rational) -> Self {
        UniPoly::constant(q.clone())
    }
}

impl SRing for MultiPoly {
    fn s() -> Self {
        MultiPoly::var(0)
    }
    fn from_rational(q: &Rational) -> Self {
        MultiPoly::constant(q.clone())
    }
}

/// A component as a polynomial in `t` whose coefficients are free of `s`.
pub type Component<R> = Vec<R>;

pub fn lift_component<R: SRing>(p: &UniPoly) -> Component<R> {
    p.coeffs().iter().map(R::from_rational).collect()
}

/// The component with `t` replaced by `s`.
pub fn in_s<R: SRing>(c: &[R]) -> R {
    let s = R::s();
    c.iter().rev().fold(R::zero(), |acc, k| acc.times(&s).plus(k))
}

/// `a(s) b(t) - b(s) a(t)` as a polynomial in `t`.
pub fn g_poly_t<R: SRing>(a: &[R], b: &[R]) -> Poly<R> {
    let (as_, bs) = (in_s(a), in_s(b));
    let n = a.len().max(b.len());
    let zero = R::zero();
    Poly::new(
        (0..n)
            .map(|k| {
                as_.times(b.get(k).unwrap_or(&zero))
                    .minus(&bs.times(a.get(k).unwrap_or(&zero)))
            })
            .collect(),
    )
}

/// Exact quotient `G / (t - s)`.
pub fn g_star<R: SRing>(g: &Poly<R>) -> Result<Poly<R>> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (q, r) = g.div_linear(&R::s());
    if !r.is_zero() {
        return Err(Error::NotDivisible);
    }
    Ok(q)
}

/// One resultant formula evaluated on components `x`, `y` sharing `q`:
/// `Res_t(G(x,q)*, G(y,q)*) / q(s)^(lambda - 1)`.
#[derive(Clone, Debug)]
pub struct FormulaValue<R> {
    pub resultant: R,
    pub lambda: usize,
    /// `None` when the division is not exact.
    pub quotient: Option<R>,
}

pub fn formula_value<R: SRing>(x: &[R], y: &[R], q: &[R]) -> Result<Option<FormulaValue<R>>> {
    let gx = g_poly_t(x, q);
    let gy = g_poly_t(y, q);
    if gx.is_zero() || gy.is_zero() {
        return Ok(None);
    }
    let lambda = gx.deg().min(gy.deg());
    let resultant = subresultant(&g_star(&gx)?, &g_star(&gy)?);
    if resultant.is_zero() {
        return Err(Error::InternalInconsistency(
            "resultant of reduced G-polynomials vanishes".into(),
        ));
    }
    let quotient = resultant.div_exact(&in_s(q).pow(lambda - 1));
    Ok(Some(FormulaValue {
        resultant,
        lambda,
        quotient,
    }))
}

/// Which resultant produced T, named by the pair of G-polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Formula {
    /// `R_12 / p^(lambda_12 - 1)`
    R12,
    /// `R_13 / p_1^(lambda_13 - 1)`
    R13,
    /// `R_23 / p_2^(lambda_23 - 1)`
    R23,
}

impl Formula {
    pub const ALL: [Formula; 3] = [Formula::R12, Formula::R13, Formula::R23];

    pub fn name(self) -> &'static str {
        match self {
            Formula::R12 => "R12/p",
            Formula::R13 => "R13/p1",
            Formula::R23 => "R23/p2",
        }
    }
}

/// Components `(x, y, shared)` of a formula in a plane parametrization.
fn formula_components(p: &ProjParam, f: Formula) -> [&UniPoly; 3] {
    let c = p.components();
    match f {
        Formula::R12 => [&c[0], &c[1], &c[2]],
        Formula::R13 => [&c[2], &c[1], &c[0]],
        Formula::R23 => [&c[2], &c[0], &c[1]],
    }
}

/// The raw resultant `R_ij(s)` of a plane parametrization.
pub fn plane_resultant(p: &ProjParam, f: Formula) -> Result<Option<UniPoly>> {
    let [x, y, q] = formula_components(p, f);
    Ok(formula_value::<UniPoly>(&lift_component(x), &lift_component(y), &lift_component(q))?
        .map(|v| v.resultant))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheck {
    pub formula: Formula,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TFunction {
    /// Monic T.
    pub poly: UniPoly,
    pub used_formula: Formula,
    /// `lambda_12, lambda_13, lambda_23`.
    pub lambdas: [usize; 3],
    /// `deg_t G_1, deg_t G_2, deg_t G_3`.
    pub deltas: [usize; 3],
    /// The other formulas that could be evaluated and whether they agree.
    pub cross_checks: Vec<CrossCheck>,
}

impl TFunction {
    pub fn all_agree(&self) -> bool {
        self.cross_checks.iter().all(|c| c.agrees)
    }
}

/// Preferred formula: the one whose denominator has degree `d`.
pub fn preferred_formula(p: &ProjParam) -> Formula {
    let lead = p.leading_coefficients();
    if !lead[0].is_zero() {
        Formula::R13
    } else if !lead[1].is_zero() {
        Formula::R23
    } else {
        Formula::R12
    }
}

/// T-function of a plane parametrization. All evaluable formulas are
/// computed and compared after monic normalization.
pub fn t_function(p: &ProjParam) -> Result<TFunction> {
    assert!(p.is_plane(), "t_function needs a plane parametrization");
    let gs = crate::param::g_polys(p);
    let deltas = [gs[0].degree_t(), gs[1].degree_t(), gs[2].degree_t()];
    let lambdas = [
        deltas[0].min(deltas[1]),
        deltas[0].min(deltas[2]),
        deltas[1].min(deltas[2]),
    ];
    let used = preferred_formula(p);
    let mut values = Vec::new();
    for f in Formula::ALL {
        let [x, y, q] = formula_components(p, f);
        let v = formula_value::<UniPoly>(&lift_component(x), &lift_component(y), &lift_component(q))?;
        values.push((f, v));
    }
    let poly = match values.iter().find(|(f, _)| *f == used) {
        Some((_, Some(FormulaValue { quotient: Some(q), .. }))) => q.monic(),
        _ => {
            return Err(Error::InternalInconsistency(format!(
                "formula {} does not divide exactly",
                used.name()
            )))
        }
    };
    let cross_checks = values
        .iter()
        .filter(|(f, _)| *f != used)
        .filter_map(|(f, v)| {
            v.as_ref().map(|v| CrossCheck {
                formula: *f,
                agrees: v.quotient.as_ref().is_some_and(|q| q.monic() == poly),
            })
        })
        .collect();
    Ok(TFunction {
        poly,
        used_formula: used,
        lambdas,
        deltas,
        cross_checks,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeCheck {
    pub expected: i64,
    pub actual: i64,
    pub ok: bool,
}

/// Compares `deg T` with `(d-1)(d-2) - m_H (m_L - 1)`.
pub fn degree_check(t: &UniPoly, limit: &LimitPointInfo, d: usize) -> DegreeCheck {
    let d = d as i64;
    let expected = (d - 1) * (d - 2) - (limit.hidden_mult as i64) * (limit.total_mult as i64 - 1);
    let actual = t.deg() as i64;
    DegreeCheck {
        expected,
        actual,
        ok: expected == actual,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::limit::limit_info;
    use crate::poly::resultant::resultant_t_sylvester;
    use crate::poly::BiPoly;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    fn ellipse() -> ProjParam {
        ProjParam::from_ints(&[&[-1, 0, 1], &[0, -1, 1], &[1, 0, 1]]).unwrap()
    }

    fn nodal_cubic() -> ProjParam {
        ProjParam::from_ints(&[&[-1, 0, 1], &[0, -1, 0, 1], &[1]]).unwrap()
    }

    pub(crate) fn example2() -> ProjParam {
        ProjParam::from_ints(&[
            &[1, 2, 3, 4, 3, 2, 1],
            &[-1, -2, -1, -1, -1],
            &[1, 1, 2, 3, 1, 3, 0, 1],
        ])
        .unwrap()
    }

    #[test]
    fn g_star_divides() {
        // G = (t - s)(t + s) = t^2 - s^2
        let s2 = UniPoly::from_ints(&[0, 0, -1]);
        let g = Poly::new(vec![s2, UniPoly::zero(), UniPoly::one()]);
        let q = g_star(&g).unwrap();
        assert_eq!(q, Poly::new(vec![UniPoly::x(), UniPoly::one()]));
        let bad = Poly::new(vec![UniPoly::one(), UniPoly::one()]);
        assert_eq!(g_star(&bad), Err(Error::NotDivisible));

        let e = example2();
        let g1 = g_poly_t::<UniPoly>(&lift_component(e.component(0)), &lift_component(e.component(2)));
        assert_eq!(g_star(&g1).unwrap().deg(), 6);
    }

    #[test]
    fn g_poly_t_matches_bipoly() {
        let e = example2();
        let g = g_poly_t::<UniPoly>(&lift_component(e.component(1)), &lift_component(e.component(2)));
        assert_eq!(BiPoly::from_t_poly(&g), crate::param::g_polys(&e)[1]);
    }

    #[test]
    fn ellipse_t_is_constant() {
        let t = t_function(&ellipse()).unwrap();
        assert_eq!(t.poly, UniPoly::one());
        assert!(t.all_agree());
        // Sylvester determinant over p(s)^(lambda_12 - 1) is a nonzero constant too
        let gs = crate::param::g_polys(&ellipse());
        let a = BiPoly::from_t_poly(&g_star(&gs[0].to_t_poly()).unwrap());
        let b = BiPoly::from_t_poly(&g_star(&gs[1].to_t_poly()).unwrap());
        let r = resultant_t_sylvester(&a, &b).unwrap();
        let (q, rem) = r.div_rem(&p(&[1, 0, 1]));
        assert!(rem.is_zero());
        assert_eq!(q.deg(), 0);
        assert!(!q.is_zero());
    }

    #[test]
    fn nodal_cubic_t() {
        let t = t_function(&nodal_cubic()).unwrap();
        assert_eq!(t.poly, p(&[-1, 0, 1]));
        assert!(t.all_agree());
    }

    #[test]
    fn worked_example_t() {
        let t = t_function(&example2()).unwrap();
        let expected = [
            p(&[-1, -1, 1]),
            p(&[1, 1, 0, 1]).pow(2),
            p(&[16, 44, 47, 47, 43, 22, 13, 3, 1]),
            p(&[1, 0, 1]).pow(6),
            p(&[1, 1]),
        ]
        .iter()
        .fold(UniPoly::one(), |acc, f| &acc * f);
        assert_eq!(t.poly, expected);
        assert!(t.all_agree());
        let info = limit_info(&example2()).unwrap();
        let dc = degree_check(&t.poly, &info, 7);
        assert_eq!((dc.expected, dc.actual, dc.ok), (29, 29, true));
    }
}
