//! The limit point of a parametrization and the split of its multiplicity
//! into a visible part (finite parameters) and a hidden part (the parameter
//! at infinity).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::param::{fibre_function, ProjParam, ProjPoint};
use crate::poly::{Rational, Ring, UniPoly};

/// `lim P(t) / t^d`, the vector of degree-`d` coefficients.
pub fn limit_point(p: &ProjParam) -> ProjPoint {
    ProjPoint::new(p.leading_coefficients())
}

/// `U(t) = t^d P(1/t)`.
pub fn invert_reparam(p: &ProjParam) -> ProjParam {
    let d = p.degree();
    ProjParam::from_coprime(p.components().iter().map(|c| c.reversed(d)).collect())
}

/// `Q(t) = (t - 1)^d P(theta t / (t - 1))`. Sends `t = 1` to the limit point
/// of `P` and has `P(theta)` as its own limit point.
pub fn moebius_reparam(p: &ProjParam, theta: &Rational) -> Result<ProjParam> {
    if theta.is_zero() {
        return Err(Error::InvalidTheta);
    }
    let d = p.degree();
    Ok(ProjParam::from_coprime(
        p.components().iter().map(|c| c.moebius_transform(theta, d)).collect(),
    ))
}

/// Whether `theta` is usable for the Möbius reparametrization: every
/// component is nonzero at `theta`, and `P(theta)` is a simple point other
/// than the limit point.
pub fn theta_admissible(p: &ProjParam, theta: &Rational) -> bool {
    if theta.is_zero() || p.components().iter().any(|c| c.eval(theta).is_zero()) {
        return false;
    }
    let q = p.evaluate(theta);
    q != limit_point(p) && fibre_function(p, &q).poly.deg() == 1
}

/// Smallest admissible positive integer `theta`.
pub fn select_theta(p: &ProjParam) -> Rational {
    (1..)
        .map(Rational::from_int)
        .find(|theta| theta_admissible(p, theta))
        .expect("only finitely many integers are inadmissible")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Normality {
    NormalAtInfinity,
    NormalReachableAffine,
    CriticalPoint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitPointInfo {
    pub point: ProjPoint,
    pub reachable: bool,
    pub visible_mult: usize,
    pub hidden_mult: usize,
    pub total_mult: usize,
    pub normality: Normality,
    /// Fibre function of the limit point under `P`.
    pub h_l: UniPoly,
    /// Fibre function of the limit point under `U(t) = P(1/t)`, when usable.
    pub h_u: Option<UniPoly>,
    /// Fibre function of the limit point under the Möbius reparametrization.
    pub h_q: UniPoly,
    pub theta: Rational,
}

impl LimitPointInfo {
    pub fn is_singular(&self) -> bool {
        self.total_mult >= 2
    }
}

/// Computes the limit point data, choosing `theta` automatically.
pub fn limit_info(p: &ProjParam) -> Result<LimitPointInfo> {
    limit_info_with_theta(p, None)
}

pub fn limit_info_with_theta(p: &ProjParam, theta: Option<Rational>) -> Result<LimitPointInfo> {
    let point = limit_point(p);
    let h_l = fibre_function(p, &point).poly;
    let visible = h_l.deg();

    let theta = match theta {
        Some(t) if theta_admissible(p, &t) => t,
        Some(_) => return Err(Error::InvalidTheta),
        None => select_theta(p),
    };
    let q = moebius_reparam(p, &theta)?;
    let h_q = fibre_function(&q, &point).poly;
    let hidden_q = h_q.root_multiplicity(&Rational::one());
    let total_q = h_q.deg();

    // U(t) only sees the whole fibre when t = 0 is not already in it
    let h_u = if h_l.eval(&Rational::zero()).is_zero() {
        None
    } else {
        let u = invert_reparam(p);
        let h_u = fibre_function(&u, &point).poly;
        let hidden_u = h_u.root_multiplicity(&Rational::zero());
        if hidden_u != hidden_q || h_u.deg() != total_q {
            return Err(Error::InternalInconsistency(format!(
                "limit point multiplicities disagree: U gives ({hidden_u}, {}), Q gives ({hidden_q}, {total_q})",
                h_u.deg()
            )));
        }
        Some(h_u)
    };

    if total_q != visible + hidden_q || hidden_q == 0 {
        return Err(Error::InternalInconsistency(format!(
            "limit point multiplicity {total_q} is not {visible} visible + {hidden_q} hidden"
        )));
    }
    let reachable = visible >= 1;
    if reachable && total_q < 2 {
        return Err(Error::InternalInconsistency("reachable limit point is not singular".into()));
    }
    let normality = if point.at_infinity() {
        Normality::NormalAtInfinity
    } else if reachable {
        Normality::NormalReachableAffine
    } else {
        Normality::CriticalPoint
    };
    Ok(LimitPointInfo {
        point,
        reachable,
        visible_mult: visible,
        hidden_mult: hidden_q,
        total_mult: total_q,
        normality,
        h_l,
        h_u,
        h_q,
        theta,
    })
}

/// The fibre function of the limit point for the homogenized
/// parametrization `P(t, h) = h^d P(t/h)`, stored as `h^r * homog(affine)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousFibre {
    pub h_power: usize,
    pub affine: UniPoly,
}

impl HomogeneousFibre {
    pub fn form_degree(&self) -> usize {
        self.h_power + self.affine.deg()
    }

    pub fn pretty(&self) -> String {
        let mut parts = Vec::new();
        match self.h_power {
            0 => {}
            1 => parts.push("h".to_string()),
            r => parts.push(format!("h^{r}")),
        }
        if self.affine.deg() > 0 {
            parts.push(format!("({})", homogenize_pretty(&self.affine)));
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

fn homogenize_pretty(a: &UniPoly) -> String {
    let d = a.deg();
    let mut terms = Vec::new();
    for (k, c) in a.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mono = match (k, d - k) {
            (0, 0) => String::new(),
            (0, 1) => "h".into(),
            (0, j) => format!("h^{j}"),
            (1, 0) => "t".into(),
            (i, 0) => format!("t^{i}"),
            (1, 1) => "t*h".into(),
            (1, j) => format!("t*h^{j}"),
            (i, 1) => format!("t^{i}*h"),
            (i, j) => format!("t^{i}*h^{j}"),
        };
        let coef = crate::poly::ring::fmt_rational(c);
        terms.push(match (coef.as_str(), mono.is_empty()) {
            (_, true) => coef,
            ("1", false) => mono,
            ("-1", false) => format!("-{mono}"),
            _ => format!("{coef}*{mono}"),
        });
    }
    terms.join(" + ").replace("+ -", "- ")
}

/// Gcd of the homogenized fibre equations of the limit point.
pub fn homogeneous_fibre(p: &ProjParam) -> HomogeneousFibre {
    let d = p.degree();
    let a = p.leading_coefficients();
    let c = p.components();
    let mut r = usize::MAX;
    let mut affine = UniPoly::zero();
    for i in 0..c.len() {
        for j in i + 1..c.len() {
            let phi = &c[j].scale(&a[i]) - &c[i].scale(&a[j]);
            if phi.is_zero() {
                continue;
            }
            r = r.min(d - phi.deg());
            affine = affine.gcd(&phi);
        }
    }
    HomogeneousFibre {
        h_power: r,
        affine: affine.monic(),
    }
}
