mod common;

use std::sync::OnceLock;

use common::*;
use curvesing::input::{parse_input, parse_poly};
use curvesing::limit::limit_info;
use curvesing::oracle::{implicitize, multiplicity_at, ImplicitCurve};
use curvesing::param::{fibre_function, ProjParam, ProjPoint};
use curvesing::pipeline::{run_pipeline, Options};
use curvesing::poly::{
    factor_rationals, is_irreducible, subresultant, sylvester_resultant, MultiPoly, Rational, Ring, UniPoly,
    DEFAULT_DEGREE_CAP,
};
use curvesing::report::Report;
use proptest::prelude::*;

fn small_poly(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-6i64..=6, 1..=max_deg + 1).prop_map(|c| UniPoly::from_ints(&c))
}

fn nonzero_poly(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    small_poly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

fn eval_form(f: &ImplicitCurve, q: &ProjPoint) -> Rational {
    let value = (0..3).fold(f.form.clone(), |acc, v| {
        acc.substitute(v, &MultiPoly::constant(q.coords()[v].clone()))
    });
    value.terms().map(|(_, c)| c.clone()).fold(Rational::zero(), |a, c| a + c)
}

/// Curves with their implicit forms and limit points.
fn curves() -> &'static [(ProjParam, ImplicitCurve, ProjPoint)] {
    static CURVES: OnceLock<Vec<(ProjParam, ImplicitCurve, ProjPoint)>> = OnceLock::new();
    CURVES.get_or_init(|| {
        let mut ps = vec![nodal_cubic(), cremona_conic(), cremona_cubic(), param("unreachable_limit.txt")];
        ps.extend(random_curves(6, 11));
        ps.into_iter()
            .map(|p| {
                let f = implicitize(&p).unwrap();
                let l = limit_info(&p).unwrap().point;
                (p, f, l)
            })
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn factorization_expands_back(fs in prop::collection::vec((nonzero_poly(4), 1usize..=3), 1..=3)) {
        let product = fs.iter().fold(UniPoly::one(), |acc, (f, e)| &acc * &f.pow(*e));
        let fz = factor_rationals(&product, DEFAULT_DEGREE_CAP).unwrap();
        prop_assert_eq!(fz.expand(), product);
        for (g, _) in &fz.factors {
            prop_assert!(g.is_monic());
            prop_assert!(is_irreducible(g));
        }
    }

    #[test]
    fn subresultant_matches_sylvester(a in nonzero_poly(6), b in nonzero_poly(6)) {
        prop_assert_eq!(subresultant(&a, &b), sylvester_resultant(&a, &b));
    }

    #[test]
    fn pretty_form_parses_back(p in small_poly(8)) {
        prop_assert_eq!(parse_poly(&p.pretty("t")).unwrap(), p);
    }

    #[test]
    fn points_off_the_curve_have_multiplicity_zero(
        idx in 0usize..10,
        q in prop::array::uniform3(-9i64..=9).prop_filter("nonzero", |q| q.iter().any(|&c| c != 0)),
    ) {
        let (_, f, _) = &curves()[idx];
        let q = ProjPoint::from_ints(&q);
        prop_assert_eq!(multiplicity_at(f, &q) == 0, !eval_form(f, &q).is_zero());
    }

    #[test]
    fn fibre_degree_is_multiplicity(idx in 0usize..10, t0 in -12i64..=12) {
        let (p, f, limit) = &curves()[idx];
        let q = p.evaluate(&Rational::from_int(t0));
        prop_assume!(&q != limit);
        prop_assert_eq!(multiplicity_at(f, &q), fibre_function(p, &q).poly.deg());
    }
}

#[test]
fn reports_are_deterministic_and_round_trip() {
    for name in ["nodal_cubic.txt", "unreachable_limit.txt", "space_triple_point.txt"] {
        let doc = parse_input(&data(name)).unwrap();
        let opts = Options {
            verify: true,
            ..Options::default()
        };
        let a = run_pipeline(&doc, &opts).unwrap().to_json();
        let b = run_pipeline(&doc, &opts).unwrap().to_json();
        assert_eq!(a, b, "{name}");
        assert_eq!(Report::from_json(&a).unwrap().to_json(), a);
    }
}

#[test]
fn reparametrized_node_keeps_its_singularity() {
    for m in [[1, 2, 0, 1], [2, -1, 1, 1], [0, 1, 1, 0], [3, 1, -2, 1]] {
        let p = reparametrize(&nodal_cubic(), m);
        let doc = parse_input(&p.components().iter().map(|c| c.pretty("t")).collect::<Vec<_>>().join(";")).unwrap();
        let r = run_pipeline(&doc, &Options::default()).unwrap();
        assert_eq!(r.singularities.len(), 1);
        assert_eq!(r.singularities[0].point.display(), "(0:0:1)");
        assert_eq!(r.singularities[0].multiplicity, 2);
        assert_eq!(r.t_function.monic.coefficients.len(), 3);
    }
}
