//! Space curves. The parametrization `(p_1 : ... : p_n : p)` is reduced to
//! the plane curve `(p_1 : p_2 + Z_1 p_3 + ... + Z_{n-2} p_n : p)` over
//! `Q(Z)`; the content in `Z` of its T-function classifies the singularities.

use crate::classify::{classify_with, ext_fibre, Classification};
use crate::error::{Error, Result};
use crate::limit::{limit_info_with_theta, LimitPointInfo};
use crate::param::{assert_proper, ProjParam, ProjPoint};
use crate::poly::{factor_rationals, ExtField, MultiPoly, Rational, Ring, UniPoly};
use crate::tfunction::{formula_value, lift_component};

/// Largest coefficient tried by [`bad_point_adjust`].
pub const LAMBDA_BOUND: usize = 8;

/// Number of distinct points `P(t0)` with `t0` a root of `g`.
fn count_points_over(p: &ProjParam, g: &UniPoly) -> Result<usize> {
    let mut rational: Vec<ProjPoint> = Vec::new();
    let mut count = 0;
    for (f, _) in factor_rationals(&g.squarefree_part(), usize::MAX)?.factors {
        let field = ExtField::new(&f)?;
        let alpha = field.generator();
        let raw: Vec<_> = p.components().iter().map(|c| field.eval(c, &alpha)).collect();
        let Some(lead) = raw.iter().find(|x| !x.is_zero()) else {
            continue;
        };
        let inv = lead.inv()?;
        let x: Vec<_> = raw.iter().map(|v| v.mul(&inv)).collect();
        if let Some(coords) = x.iter().map(|v| v.as_rational()).collect::<Option<Vec<_>>>() {
            let q = ProjPoint::new(coords);
            if !rational.contains(&q) {
                rational.push(q);
                count += 1;
            }
        } else {
            // members whose fibres share roots of f are the same point
            let h = ext_fibre(&field, p, &x)?;
            let shared = field.gcd(&h, &field.lift(&f))?.deg().max(1);
            count += f.deg() / shared;
        }
    }
    Ok(count)
}

/// Replaces `p_1` by `sum lambda_i p_i` when two or more points have both
/// first and last coordinate zero. Returns the parametrization used for the
/// `Z` reduction and the coefficients (`lambda_1 = 1`).
pub fn bad_point_adjust(p: &ProjParam) -> Result<(ProjParam, Vec<Rational>)> {
    let n = p.dim();
    let c = p.components();
    let mut unit = vec![Rational::zero(); n];
    unit[0] = Rational::one();
    let g = c[0].gcd(p.denominator());
    if g.deg() == 0 || count_points_over(p, &g)? <= 1 {
        return Ok((p.clone(), unit));
    }
    let mut lambda = vec![0usize; n];
    lambda[0] = 1;
    loop {
        // next vector in lexicographic order over lambda_2..lambda_n
        let Some(i) = (1..n).rev().find(|&i| lambda[i] < LAMBDA_BOUND) else {
            return Err(Error::SearchExhausted { bound: LAMBDA_BOUND });
        };
        lambda[i] += 1;
        for v in lambda.iter_mut().skip(i + 1) {
            *v = 0;
        }
        let combo = (0..n).fold(UniPoly::zero(), |acc, k| {
            &acc + &c[k].scale(&Rational::from_int(lambda[k] as i64))
        });
        if combo.gcd(p.denominator()).deg() == 0 {
            let mut comps = c.to_vec();
            comps[0] = combo;
            let lam = lambda.iter().map(|&l| Rational::from_int(l as i64)).collect();
            return Ok((ProjParam::from_coprime(comps), lam));
        }
    }
}

/// The `Z`-substituted components `(p_1, p_2 + sum Z_i p_{i+2}, p)` with
/// `s` as variable 0 and `Z_i` as variable `i`.
fn hat_components(p: &ProjParam) -> [Vec<MultiPoly>; 3] {
    let c = p.components();
    let n = p.dim();
    let mut second: Vec<MultiPoly> = lift_component(&c[1]);
    for (i, comp) in c.iter().enumerate().take(n).skip(2) {
        let z = MultiPoly::var(i - 1);
        for (k, coef) in comp.coeffs().iter().enumerate() {
            if second.len() <= k {
                second.resize(k + 1, MultiPoly::zero());
            }
            second[k] = second[k].plus(&z.scale(coef));
        }
    }
    [lift_component(&c[0]), second, lift_component(p.denominator())]
}

/// `R_12 / p^(lambda_12 - 1)` of the `Z`-reduced plane curve.
pub fn hat_t_function(p: &ProjParam) -> Result<MultiPoly> {
    let [x, y, q] = hat_components(p);
    let value = formula_value(&x, &y, &q)?
        .ok_or_else(|| Error::DegenerateInput("reduced plane curve is degenerate".into()))?;
    value.quotient.ok_or_else(|| {
        Error::InternalInconsistency("resultant is not divisible by the denominator power".into())
    })
}

/// Content of the hat T-function with respect to the `Z` variables, monic.
pub fn t_e_function(p: &ProjParam) -> Result<UniPoly> {
    Ok(hat_t_function(p)?.content_except(0)?.monic())
}

#[derive(Clone, Debug)]
pub struct SpaceAnalysis {
    pub t_e: UniPoly,
    pub lambda: Vec<Rational>,
    pub limit: LimitPointInfo,
    pub classification: Classification,
}

/// Full singularity analysis of a space (or plane) parametrization through
/// the `Z` reduction.
pub fn classify_space(p: &ProjParam, theta: Option<Rational>, degree_cap: usize) -> Result<SpaceAnalysis> {
    assert_proper(p)?;
    let (adjusted, lambda) = bad_point_adjust(p)?;
    let t_e = t_e_function(&adjusted)?;
    let limit = limit_info_with_theta(p, theta)?;
    let classification = classify_with(p, &t_e, &limit, degree_cap)?;
    Ok(SpaceAnalysis {
        t_e,
        lambda,
        limit,
        classification,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{reconstruction, SingularPoint};
    use crate::poly::DEFAULT_DEGREE_CAP;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    pub(crate) fn space_example() -> ProjParam {
        ProjParam::from_ints(&[
            &[15, -17, 16, -16, 1, 1],
            &[-3, 1, 3, -4, 4, -1],
            &[-30, 34, 13, -19, 1, 1],
            &[15, 27, 40, 23, 12, -1, 1],
        ])
        .unwrap()
    }

    fn twisted_cubic() -> ProjParam {
        ProjParam::from_ints(&[&[0, 1], &[0, 0, 1], &[0, 0, 0, 1], &[1]]).unwrap()
    }

    #[test]
    fn space_example_triple_point() {
        let a = classify_space(&space_example(), None, DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(a.t_e, &p(&[-1, 1]).pow(2) * &p(&[-3, 1]).pow(2));
        let recs = &a.classification.records;
        assert_eq!(recs.len(), 1);
        assert_eq!(recs[0].point, SingularPoint::Rational(ProjPoint::from_ints(&[0, 0, 0, 1])));
        assert_eq!(recs[0].multiplicity, 3);
        assert_eq!(recs[0].fibre_function, &p(&[-1, 1]) * &p(&[-3, 1]));
        assert!(recs[0].is_limit_point);
        assert_eq!(recs[0].hidden_mult, 1);
        assert_eq!(reconstruction(recs), a.t_e);
    }

    #[test]
    fn twisted_cubic_is_smooth() {
        let a = classify_space(&twisted_cubic(), None, DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(a.t_e, UniPoly::one());
        assert!(a.classification.records.is_empty());
        assert_eq!(bad_point_adjust(&twisted_cubic()).unwrap().0, twisted_cubic());
    }

    #[test]
    fn embedded_plane_curve_keeps_its_t() {
        let nodal = ProjParam::from_ints(&[&[-1, 0, 1], &[0, -1, 0, 1], &[0], &[1]]).unwrap();
        assert_eq!(t_e_function(&nodal).unwrap(), p(&[-1, 0, 1]));
    }

    #[test]
    fn bad_points_trigger_coordinate_change() {
        // p_1 and p share the roots 0 and 1, which map to distinct points
        let param = ProjParam::from_ints(&[&[0, -1, 1], &[1, 0, 0, 1], &[2, 0, 1], &[0, -1, 0, 1]]).unwrap();
        let (adjusted, lambda) = bad_point_adjust(&param).unwrap();
        assert_ne!(lambda[1..], [Rational::zero(), Rational::zero()]);
        assert_eq!(adjusted.component(0).gcd(adjusted.denominator()), UniPoly::one());
    }
}
