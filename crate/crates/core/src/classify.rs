//! Turning the irreducible factors of T into singular points.
//!
//! Each factor `f^e` is attributed by evaluating the parametrization at a
//! root `alpha` of `f` in `Q[s]/(f)`. If the image point is rational its
//! fibre function is computed over `Q`; otherwise the fibre function is
//! computed over the extension, giving a family of conjugate points.

use crate::error::{Error, Result};
use crate::limit::LimitPointInfo;
use crate::param::{fibre_function, ProjParam, ProjPoint};
use crate::poly::{factor_rationals, ExtElem, ExtField, ExtPoly, Factorization, UniPoly};

/// Points whose fibres are the roots of one irreducible polynomial over `Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugateFamily {
    pub minimal_polynomial: UniPoly,
    /// Number of distinct points in the family.
    pub family_size: usize,
    pub member_multiplicity: usize,
    /// Number of distinct parameters in each member's fibre.
    pub member_fibre_degree: usize,
    /// Coordinates of the member at `s = alpha`, as residues modulo the
    /// minimal polynomial.
    pub coordinates: Vec<UniPoly>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SingularPoint {
    Rational(ProjPoint),
    Family(ConjugateFamily),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularityRecord {
    /// Monic fibre function; for a family, the product of the members'
    /// fibre functions over `Q`.
    pub fibre_function: UniPoly,
    pub multiplicity: usize,
    pub point: SingularPoint,
    pub is_limit_point: bool,
    pub hidden_mult: usize,
    pub tangent_multiplicities: Vec<usize>,
    pub ordinary: bool,
    /// The factors of T explained by this record, with their exponents.
    pub t_factors: Vec<(UniPoly, usize)>,
}

impl SingularityRecord {
    /// Number of points this record stands for.
    pub fn point_count(&self) -> usize {
        match &self.point {
            SingularPoint::Rational(_) => 1,
            SingularPoint::Family(f) => f.family_size,
        }
    }

    fn sort_key(&self) -> (usize, Vec<crate::poly::Rational>) {
        self.t_factors
            .iter()
            .map(|(f, _)| f.sort_key())
            .min()
            .unwrap_or((0, Vec::new()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusAudit {
    pub expected: i64,
    pub sum: i64,
    pub residual: i64,
}

impl GenusAudit {
    pub fn ok(&self) -> bool {
        self.residual == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub factorization: Factorization,
    pub records: Vec<SingularityRecord>,
    pub warnings: Vec<String>,
}

impl Classification {
    pub fn non_ordinary(&self) -> bool {
        self.records.iter().any(|r| !r.ordinary)
    }

    pub fn limit_record(&self) -> Option<&SingularityRecord> {
        self.records.iter().find(|r| r.is_limit_point)
    }
}

/// How one irreducible factor of T is explained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Attribution {
    Point {
        point: ProjPoint,
        fibre: UniPoly,
        multiplicity: usize,
        is_limit: bool,
        /// Fibre power `a` of the factor, with `e = a (m - 1)`.
        power: usize,
    },
    Family {
        family: ConjugateFamily,
        /// `a`: multiplicity of `alpha` in a member's fibre function.
        power: usize,
        member_fibre: ExtPoly,
    },
}

/// Cross equations `x_i p_j - x_j p_i` over the extension.
pub(crate) fn ext_fibre(field: &ExtField, p: &ProjParam, x: &[ExtElem]) -> Result<ExtPoly> {
    let c = p.components();
    let mut acc = ExtPoly::new(Vec::new());
    for i in 0..c.len() {
        for j in i + 1..c.len() {
            let pj = field.lift(&c[j]);
            let pi = field.lift(&c[i]);
            let phi = ExtPoly::new(
                (0..pi.coeffs().len().max(pj.coeffs().len()))
                    .map(|k| {
                        let a = pj.coeffs().get(k).map(|v| x[i].mul(v)).unwrap_or_else(|| field.zero());
                        let b = pi.coeffs().get(k).map(|v| x[j].mul(v)).unwrap_or_else(|| field.zero());
                        a.sub(&b)
                    })
                    .collect(),
            );
            acc = field.gcd(&acc, &phi)?;
            if acc.deg() == 0 && !acc.is_zero() {
                return Ok(acc);
            }
        }
    }
    Ok(acc)
}

fn attribution_failure(f: &UniPoly, e: usize) -> Error {
    Error::AttributionFailure {
        factor: f.pretty("s"),
        exponent: e,
    }
}

/// Attributes the factor `f^e` of T to a point or a conjugate family.
pub fn attribute_factor(
    p: &ProjParam,
    f: &UniPoly,
    e: usize,
    limit: &LimitPointInfo,
) -> Result<Attribution> {
    let field = ExtField::new(f)?;
    let alpha = field.generator();
    let raw: Vec<ExtElem> = p.components().iter().map(|c| field.eval(c, &alpha)).collect();
    let lead = raw
        .iter()
        .find(|x| !x.is_zero())
        .ok_or_else(|| attribution_failure(f, e))?;
    let inv = lead.inv()?;
    let x: Vec<ExtElem> = raw.iter().map(|v| v.mul(&inv)).collect();

    let rational: Option<Vec<_>> = x.iter().map(ExtElem::as_rational).collect();
    if let Some(coords) = rational {
        let point = ProjPoint::new(coords);
        let is_limit = point == limit.point;
        let (fibre, m) = if is_limit {
            (limit.h_l.clone(), limit.total_mult)
        } else {
            let h = fibre_function(p, &point).poly;
            let m = h.deg();
            (h, m)
        };
        let a = fibre.div_rem(f).1.is_zero().then(|| {
            let mut a = 0;
            let mut rest = fibre.clone();
            while rest.div_rem(f).1.is_zero() && rest.deg() > 0 {
                rest = rest.div_rem(f).0;
                a += 1;
            }
            a
        });
        return match a {
            Some(a) if m >= 2 && a * (m - 1) == e => Ok(Attribution::Point {
                point,
                fibre,
                multiplicity: m,
                is_limit,
                power: a,
            }),
            _ => Err(attribution_failure(f, e)),
        };
    }

    let h = ext_fibre(&field, p, &x)?;
    let m = h.deg();
    let a = field.root_multiplicity(&h, &alpha)?;
    let parts = field.squarefree_decompose(&h)?;
    let sqfree = parts
        .iter()
        .fold(ExtPoly::new(vec![field.one()]), |acc, (g, _)| field.mul(&acc, g));
    let k = sqfree.deg();
    let consistent = a >= 1
        && m >= 2
        && k >= 1
        && f.deg().is_multiple_of(k)
        && a * (m - 1) == e
        && parts.iter().all(|(_, mult)| *mult == a)
        && field.divides(&sqfree, &field.lift(f))?;
    if !consistent {
        return Err(attribution_failure(f, e));
    }
    Ok(Attribution::Family {
        family: ConjugateFamily {
            minimal_polynomial: f.clone(),
            family_size: f.deg() / k,
            member_multiplicity: m,
            member_fibre_degree: k,
            coordinates: x.iter().map(|v| v.residue().clone()).collect(),
        },
        power: a,
        member_fibre: h,
    })
}

/// Tangent multiplicities from the root multiplicities of a fibre function.
fn tangent_multiplicities(fibre: &UniPoly) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    if fibre.deg() == 0 {
        return Ok(out);
    }
    for (part, k) in fibre.squarefree_decompose()? {
        out.extend(std::iter::repeat_n(k, part.deg()));
    }
    Ok(out)
}

fn limit_tangents(limit: &LimitPointInfo) -> Result<Vec<usize>> {
    let mut t = tangent_multiplicities(&limit.h_l)?;
    t.push(limit.hidden_mult);
    t.sort_unstable();
    Ok(t)
}

fn ordinary(tangents: &[usize]) -> bool {
    tangents.iter().all(|&k| k == 1)
}

/// Classifies the singularities of `p` from its T-function.
pub fn classify_with(
    p: &ProjParam,
    t: &UniPoly,
    limit: &LimitPointInfo,
    degree_cap: usize,
) -> Result<Classification> {
    let factorization = factor_rationals(t, degree_cap)?;
    let factors = &factorization.factors;
    let mut consumed = vec![false; factors.len()];
    let mut records = Vec::new();
    let mut warnings = Vec::new();

    for idx in 0..factors.len() {
        if consumed[idx] {
            continue;
        }
        let (f, e) = &factors[idx];
        match attribute_factor(p, f, *e, limit) {
            Ok(Attribution::Point {
                point,
                fibre,
                multiplicity,
                is_limit,
                ..
            }) => {
                let fz = factor_rationals(&fibre, degree_cap)?;
                let mut t_factors = Vec::new();
                let mut ok = true;
                for (g, a) in &fz.factors {
                    match factors.iter().position(|(h, _)| h == g) {
                        Some(j) if !consumed[j] && factors[j].1 == a * (multiplicity - 1) => {
                            t_factors.push(factors[j].clone());
                        }
                        _ => ok = false,
                    }
                }
                if !ok {
                    warnings.push(attribution_failure(f, *e).to_string());
                    consumed[idx] = true;
                    continue;
                }
                for (g, _) in &t_factors {
                    let j = factors.iter().position(|(h, _)| h == g).unwrap();
                    consumed[j] = true;
                }
                let (hidden, tangents) = if is_limit {
                    (limit.hidden_mult, limit_tangents(limit)?)
                } else {
                    (0, tangent_multiplicities(&fibre)?)
                };
                records.push(SingularityRecord {
                    fibre_function: fibre,
                    multiplicity,
                    point: SingularPoint::Rational(point),
                    is_limit_point: is_limit,
                    hidden_mult: hidden,
                    ordinary: ordinary(&tangents),
                    tangent_multiplicities: tangents,
                    t_factors,
                });
            }
            Ok(Attribution::Family { family, power, .. }) => {
                consumed[idx] = true;
                let tangents = vec![power; family.member_fibre_degree];
                records.push(SingularityRecord {
                    fibre_function: f.pow(power),
                    multiplicity: family.member_multiplicity,
                    point: SingularPoint::Family(family),
                    is_limit_point: false,
                    hidden_mult: 0,
                    ordinary: ordinary(&tangents),
                    tangent_multiplicities: tangents,
                    t_factors: vec![(f.clone(), *e)],
                });
            }
            Err(err @ Error::AttributionFailure { .. }) => {
                consumed[idx] = true;
                warnings.push(err.to_string());
            }
            Err(err) => return Err(err),
        }
    }

    if limit.is_singular() && !records.iter().any(|r| r.is_limit_point) {
        if limit.reachable {
            warnings.push("reachable limit point was not matched by any factor of T".into());
        }
        let tangents = limit_tangents(limit)?;
        records.push(SingularityRecord {
            fibre_function: limit.h_l.clone(),
            multiplicity: limit.total_mult,
            point: SingularPoint::Rational(limit.point.clone()),
            is_limit_point: true,
            hidden_mult: limit.hidden_mult,
            ordinary: ordinary(&tangents),
            tangent_multiplicities: tangents,
            t_factors: Vec::new(),
        });
    }

    records.sort_by_key(|r| r.sort_key());
    Ok(Classification {
        factorization,
        records,
        warnings,
    })
}

/// `sum m (m - 1)` over all singular points against `(d - 1)(d - 2)`.
pub fn genus_audit(records: &[SingularityRecord], d: usize) -> GenusAudit {
    let d = d as i64;
    let expected = (d - 1) * (d - 2);
    let sum = records
        .iter()
        .map(|r| {
            let m = r.multiplicity as i64;
            r.point_count() as i64 * m * (m - 1)
        })
        .sum();
    GenusAudit {
        expected,
        sum,
        residual: expected - sum,
    }
}

/// `prod H^(m - 1)` over the records, which reproduces the monic T.
pub fn reconstruction(records: &[SingularityRecord]) -> UniPoly {
    records.iter().fold(UniPoly::one(), |acc, r| {
        &acc * &r.fibre_function.pow(r.multiplicity - 1)
    })
}

/// The same product with each fibre function moved to the Möbius
/// reparametrization: `(t - 1)^deg H * H(theta t / (t - 1))`. Roots of the
/// transformed fibres are the parameters of the singular points under `Q`,
/// and the hidden part of the limit point reappears as the root `t = 1`.
pub fn reconstruction_moebius(records: &[SingularityRecord], limit: &LimitPointInfo) -> UniPoly {
    records.iter().fold(UniPoly::one(), |acc, r| {
        let fibre = if r.is_limit_point {
            limit.h_q.clone()
        } else {
            r.fibre_function.moebius_transform(&limit.theta, r.fibre_function.deg()).monic()
        };
        &acc * &fibre.pow(r.multiplicity - 1)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::limit::limit_info;
    use crate::poly::DEFAULT_DEGREE_CAP;
    use crate::tfunction::t_function;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    fn classify(param: &ProjParam) -> (Classification, LimitPointInfo, UniPoly) {
        let t = t_function(param).unwrap().poly;
        let limit = limit_info(param).unwrap();
        (classify_with(param, &t, &limit, DEFAULT_DEGREE_CAP).unwrap(), limit, t)
    }

    #[test]
    fn nodal_cubic_has_one_node() {
        let param = ProjParam::from_ints(&[&[-1, 0, 1], &[0, -1, 0, 1], &[1]]).unwrap();
        let (c, _, t) = classify(&param);
        assert_eq!(c.records.len(), 1);
        let r = &c.records[0];
        assert_eq!(r.fibre_function, p(&[-1, 0, 1]));
        assert_eq!(r.multiplicity, 2);
        assert_eq!(r.point, SingularPoint::Rational(ProjPoint::from_ints(&[0, 0, 1])));
        assert_eq!(r.tangent_multiplicities, vec![1, 1]);
        assert_eq!(reconstruction(&c.records), t);
        assert!(genus_audit(&c.records, 3).ok());
    }

    #[test]
    fn ellipse_is_smooth() {
        let param = ProjParam::from_ints(&[&[-1, 0, 1], &[0, -1, 1], &[1, 0, 1]]).unwrap();
        let (c, _, _) = classify(&param);
        assert!(c.records.is_empty());
        assert_eq!(genus_audit(&c.records, 2).residual, 0);
    }

    #[test]
    fn conjugate_point_attribution() {
        // a node whose two branches pass at t = +-i
        let param = ProjParam::from_ints(&[&[1, 0, 1], &[0, 1, 0, 1], &[1]]).unwrap();
        let (c, limit, t) = classify(&param);
        assert_eq!(t, p(&[1, 0, 1]));
        let attr = attribute_factor(&param, &p(&[1, 0, 1]), 1, &limit).unwrap();
        assert!(matches!(attr, Attribution::Point { multiplicity: 2, power: 1, .. }));
        assert_eq!(c.records.len(), 1);
    }

    #[test]
    fn worked_example_records() {
        let param = ProjParam::from_ints(&[
            &[1, 2, 3, 4, 3, 2, 1],
            &[-1, -2, -1, -1, -1],
            &[1, 1, 2, 3, 1, 3, 0, 1],
        ])
        .unwrap();
        let (c, limit, t) = classify(&param);
        assert!(c.warnings.is_empty(), "{:?}", c.warnings);
        let summary: Vec<(usize, usize, bool)> = c
            .records
            .iter()
            .map(|r| (r.multiplicity, r.point_count(), r.is_limit_point))
            .collect();
        assert_eq!(summary, vec![(2, 1, true), (2, 1, false), (4, 1, false), (3, 1, false), (2, 4, false)]);
        assert_eq!(c.records[0].point, SingularPoint::Rational(ProjPoint::from_ints(&[0, 0, 1])));
        assert_eq!(c.records[1].point, SingularPoint::Rational(ProjPoint::new(vec![
            crate::poly::rat(1), crate::poly::ratio(-1, 5), crate::poly::rat(1)
        ])));
        assert_eq!(c.records[2].fibre_function, p(&[1, 0, 1]).pow(2));
        assert_eq!(c.records[3].point, SingularPoint::Rational(ProjPoint::from_ints(&[1, 0, 0])));
        assert_eq!(reconstruction(&c.records), t);
        let audit = genus_audit(&c.records, 7);
        assert_eq!((audit.sum, audit.expected), (30, 30));
        let _ = limit;
    }
}
