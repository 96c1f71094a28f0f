//! Implicit equations of plane parametrizations and point multiplicities
//! read off from vanishing orders, used to check the classifier
//! independently.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::param::{tracing_index, ProjParam, ProjPoint};
use crate::poly::{subresultant, ExtElem, ExtField, MultiPoly, Poly, Rational, Ring, UniPoly};

/// Variable indices of the form `F(x, y, w)`.
pub const X: usize = 0;
pub const Y: usize = 1;
pub const W: usize = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImplicitCurve {
    pub form: MultiPoly,
}

impl ImplicitCurve {
    pub fn degree(&self) -> usize {
        self.form.total_degree()
    }

    /// `F(p_1(t), p_2(t), p(t))`
    pub fn eval_param(&self, p: &ProjParam) -> UniPoly {
        let c = p.components();
        self.form.terms().fold(UniPoly::zero(), |acc, (m, coef)| {
            let term = (0..3).fold(UniPoly::constant(coef.clone()), |t, v| {
                &t * &c[v].pow(m.get(v).copied().unwrap_or(0) as usize)
            });
            &acc + &term
        })
    }

    pub fn pretty(&self) -> String {
        self.form.pretty(&["x", "y", "w"])
    }
}

/// `F = Res_t(x p - w p_1, y p - w p_2)` with powers of `w` removed, as a
/// primitive integer form.
pub fn implicitize(p: &ProjParam) -> Result<ImplicitCurve> {
    assert!(p.is_plane(), "implicitize needs a plane parametrization");
    let c = p.components();
    let lin = |var: usize, num: &UniPoly| -> Poly<MultiPoly> {
        let n = num.coeffs().len().max(c[2].coeffs().len());
        Poly::new(
            (0..n)
                .map(|k| {
                    MultiPoly::var(var)
                        .scale(&c[2].coeff(k))
                        .minus(&MultiPoly::var(W).scale(&num.coeff(k)))
                })
                .collect(),
        )
    };
    let res = subresultant(&lin(X, &c[0]), &lin(Y, &c[1]));
    if res.is_zero() {
        return Err(Error::DegenerateResultant);
    }
    let (form, _) = res.strip_var(W);
    Ok(ImplicitCurve {
        form: form.primitive(),
    })
}

fn eval_ext(f: &MultiPoly, field: &ExtField, point: &[ExtElem]) -> ExtElem {
    f.terms().fold(field.zero(), |acc, (m, c)| {
        let mut term = field.from_rational(c.clone());
        for (v, &e) in m.iter().enumerate() {
            for _ in 0..e {
                term = term.mul(&point[v]);
            }
        }
        acc.add(&term)
    })
}

/// Smallest order of a nonvanishing partial derivative of `F` at a point
/// with coordinates in `Q[s]/(f)`, in the affine chart of a nonzero coordinate.
pub fn multiplicity_at_ext(curve: &ImplicitCurve, field: &ExtField, point: &[ExtElem]) -> Result<usize> {
    let chart = (0..3)
        .rev()
        .find(|&i| !point[i].is_zero())
        .expect("projective point with all coordinates zero");
    let inv = point[chart].inv()?;
    let coords: Vec<ExtElem> = point.iter().map(|v| v.mul(&inv)).collect();
    let affine = curve
        .form
        .substitute(chart, &MultiPoly::constant(Rational::one()));
    let vars: Vec<usize> = (0..3).filter(|&v| v != chart).collect();
    let cap = curve.degree();
    let mut layer = vec![affine];
    for k in 0..=cap {
        if layer.iter().any(|d| !eval_ext(d, field, &coords).is_zero()) {
            return Ok(k);
        }
        // derivatives of order k + 1: differentiate each by the first
        // variable, and the last one also by the second
        let mut next: Vec<MultiPoly> = layer.iter().map(|d| d.derivative(vars[0])).collect();
        next.push(layer.last().unwrap().derivative(vars[1]));
        layer = next;
    }
    Err(Error::InternalInconsistency(format!(
        "no nonvanishing derivative up to order {cap}"
    )))
}

/// Multiplicity of a rational point on the curve (0 if not on it).
pub fn multiplicity_at(curve: &ImplicitCurve, q: &ProjPoint) -> usize {
    let field = ExtField::new(&UniPoly::x()).expect("linear modulus");
    let point: Vec<ExtElem> = q.coords().iter().map(|c| field.from_rational(c.clone())).collect();
    multiplicity_at_ext(curve, &field, &point).expect("rational chart is invertible")
}

/// A birational plane projection `(sum a_i p_i : sum b_i p_i : p)` of a space
/// parametrization, with the coefficient rows used.
#[derive(Clone, Debug)]
pub struct PlaneProjection {
    pub param: ProjParam,
    pub rows: [Vec<Rational>; 2],
}

impl PlaneProjection {
    pub fn project(&self, coords: &[ExtElem], field: &ExtField) -> Vec<ExtElem> {
        let n = coords.len() - 1;
        let mut out: Vec<ExtElem> = self
            .rows
            .iter()
            .map(|row| {
                (0..n).fold(field.zero(), |acc, i| {
                    acc.add(&coords[i].mul(&field.from_rational(row[i].clone())))
                })
            })
            .collect();
        out.push(coords[n].clone());
        out
    }
}

/// Deterministic generic projection of a space parametrization to the plane,
/// retried until the projected parametrization stays proper.
pub fn generic_projection(p: &ProjParam) -> Result<PlaneProjection> {
    let n = p.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..32 {
        let rows: [Vec<Rational>; 2] = std::array::from_fn(|_| {
            (0..n).map(|_| Rational::from_int(rng.gen_range(-9..=9))).collect()
        });
        let comb = |row: &[Rational]| {
            (0..n).fold(UniPoly::zero(), |acc, i| &acc + &p.component(i).scale(&row[i]))
        };
        let Ok(param) = p.plane_projection([&comb(&rows[0]), &comb(&rows[1])]) else {
            continue;
        };
        if param.degree() == p.degree() && tracing_index(&param) == 1 {
            return Ok(PlaneProjection { param, rows });
        }
    }
    Err(Error::SearchExhausted { bound: 32 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ring::ratio;

    fn nodal_cubic() -> ProjParam {
        ProjParam::from_ints(&[&[-1, 0, 1], &[0, -1, 0, 1], &[1]]).unwrap()
    }

    fn ellipse() -> ProjParam {
        ProjParam::from_ints(&[&[-1, 0, 1], &[0, -1, 1], &[1, 0, 1]]).unwrap()
    }

    #[test]
    fn implicit_forms_vanish_on_the_curve() {
        for p in [nodal_cubic(), ellipse()] {
            let f = implicitize(&p).unwrap();
            assert_eq!(f.degree(), p.degree());
            assert!(f.eval_param(&p).is_zero());
        }
    }

    #[test]
    fn nodal_cubic_equation() {
        // y^2 w - x^2 (x + w), up to a constant
        let f = implicitize(&nodal_cubic()).unwrap();
        let x = MultiPoly::var(X);
        let y = MultiPoly::var(Y);
        let w = MultiPoly::var(W);
        let expected = y.times(&y).times(&w).minus(&x.times(&x).times(&x.plus(&w)));
        assert_eq!(f.form, expected.primitive());
    }

    #[test]
    fn multiplicities() {
        let f = implicitize(&nodal_cubic()).unwrap();
        assert_eq!(multiplicity_at(&f, &ProjPoint::from_ints(&[0, 0, 1])), 2);
        assert_eq!(multiplicity_at(&f, &ProjPoint::from_ints(&[0, 1, 0])), 1);
        assert_eq!(multiplicity_at(&f, &ProjPoint::from_ints(&[5, 7, 1])), 0);
        let e = implicitize(&ellipse()).unwrap();
        assert_eq!(multiplicity_at(&e, &ProjPoint::from_ints(&[-1, 0, 1])), 1);
    }

    #[test]
    fn worked_example_double_point() {
        let p = ProjParam::from_ints(&[
            &[1, 2, 3, 4, 3, 2, 1],
            &[-1, -2, -1, -1, -1],
            &[1, 1, 2, 3, 1, 3, 0, 1],
        ])
        .unwrap();
        let f = implicitize(&p).unwrap();
        assert_eq!(f.degree(), 7);
        let q = ProjPoint::new(vec![Rational::one(), ratio(-1, 5), Rational::one()]);
        assert_eq!(multiplicity_at(&f, &q), 2);
        assert_eq!(multiplicity_at(&f, &ProjPoint::from_ints(&[0, 0, 1])), 2);
        assert_eq!(multiplicity_at(&f, &ProjPoint::from_ints(&[0, 1, 0])), 4);
    }

    #[test]
    fn line_implicitizes_to_degree_one() {
        let p = ProjParam::from_ints(&[&[0, 1], &[0, 1], &[1]]).unwrap();
        assert_eq!(implicitize(&p).map(|c| c.degree()).ok(), Some(1));
    }
}
