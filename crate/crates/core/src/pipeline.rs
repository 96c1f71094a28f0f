//! End-to-end analysis of a parsed input: classification, audits, optional
//! oracle verification and sample points, collected into a [`Report`].

use std::str::FromStr;

use crate::classify::{
    classify_with, genus_audit, reconstruction, reconstruction_moebius, Classification, SingularPoint,
    SingularityRecord,
};
use crate::error::{Error, Result};
use crate::input::InputDoc;
use crate::limit::{limit_info_with_theta, moebius_reparam, LimitPointInfo};
use crate::oracle::{generic_projection, implicitize, multiplicity_at_ext};
use crate::param::{assert_proper, tracing_index, ProjParam};
use crate::poly::ring::{fmt_rational, parse_rational, rational_to_decimal};
use crate::poly::{ExtElem, ExtField, Rational, Ring, UniPoly, DEFAULT_DEGREE_CAP};
use crate::report::*;
use crate::space::classify_space;
use crate::tfunction::{degree_check, t_function};

/// Environment variable overriding the factorization degree cap.
pub const DEGREE_CAP_VAR: &str = "CURVESING_DEGREE_CAP";

/// Process exit codes of the command-line tool.
pub mod exit {
    pub const OK: i32 = 0;
    pub const FAILURE: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const PARSE: i32 = 3;
    pub const NOT_PROPER: i32 = 4;
    pub const DEGENERATE: i32 = 5;
    pub const DEGREE_CAP: i32 = 6;
    pub const VERIFY_MISMATCH: i32 = 7;
    pub const IO: i32 = 8;
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => exit::PARSE,
        Error::NotProper(_) => exit::NOT_PROPER,
        Error::DegenerateInput(_) | Error::DegenerateResultant => exit::DEGENERATE,
        Error::DegreeCapExceeded { .. } => exit::DEGREE_CAP,
        _ => exit::FAILURE,
    }
}

/// `a:b:count` with rational endpoints and `count >= 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleSpec {
    pub start: Rational,
    pub end: Rational,
    pub count: usize,
}

impl FromStr for SampleSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let [a, b, n] = parts[..] else {
            return Err(format!("expected <a>:<b>:<count>, got `{s}`"));
        };
        let start = parse_rational(a).ok_or_else(|| format!("bad start `{a}`"))?;
        let end = parse_rational(b).ok_or_else(|| format!("bad end `{b}`"))?;
        let count: usize = n.trim().parse().map_err(|_| format!("bad count `{n}`"))?;
        if count < 2 {
            return Err("sample count must be at least 2".into());
        }
        Ok(Self { start, end, count })
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    /// Use the `Z` reduction even for plane input.
    pub space: bool,
    pub theta: Option<Rational>,
    pub verify: bool,
    pub sample: Option<SampleSpec>,
    pub digits: usize,
    pub degree_cap: usize,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            space: false,
            theta: None,
            verify: false,
            sample: None,
            digits: 12,
            degree_cap: DEFAULT_DEGREE_CAP,
        }
    }
}

/// Reads the degree cap override, if set.
pub fn degree_cap_from_env() -> Result<usize, String> {
    match std::env::var(DEGREE_CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("{DEGREE_CAP_VAR} must be a nonnegative integer, got `{v}`")),
        Err(_) => Ok(DEFAULT_DEGREE_CAP),
    }
}

/// Exact sample points: `(t, affine coordinates)` rows and the number of
/// parameters skipped because `p(t) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleTable {
    pub dim: usize,
    pub rows: Vec<(Rational, Vec<Rational>)>,
    pub skipped: usize,
}

impl SampleTable {
    pub fn header(&self) -> Vec<String> {
        std::iter::once("t".to_string())
            .chain((1..=self.dim).map(|i| format!("x{i}")))
            .collect()
    }

    pub fn decimal_rows(&self, digits: usize) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|(t, xs)| {
                std::iter::once(t)
                    .chain(xs)
                    .map(|q| rational_to_decimal(q, digits))
                    .collect()
            })
            .collect()
    }

    pub fn to_csv(&self, digits: usize) -> String {
        let mut out = self.header().join(",");
        out.push('\n');
        for row in self.decimal_rows(digits) {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

/// `count` equally spaced parameters from `start` to `end` inclusive.
pub fn sample_points(p: &ProjParam, start: &Rational, end: &Rational, count: usize) -> SampleTable {
    assert!(count >= 2, "sample_points needs at least two points");
    let n = p.dim();
    let step = (end - start) / Rational::from_int(count as i64 - 1);
    let mut rows = Vec::new();
    let mut skipped = 0;
    for i in 0..count {
        let t = start + &step * Rational::from_int(i as i64);
        let w = p.denominator().eval(&t);
        if w.is_zero() {
            skipped += 1;
            continue;
        }
        let xs = (0..n).map(|k| p.component(k).eval(&t) / &w).collect();
        rows.push((t, xs));
    }
    SampleTable { dim: n, rows, skipped }
}

struct Analysis {
    route: &'static str,
    limit: LimitPointInfo,
    classification: Classification,
    t: UniPoly,
    t_block: TBlock,
    genus: Option<GenusOut>,
    moebius: Option<bool>,
}

fn t_block(kind: &str, t: &UniPoly, c: &Classification) -> TBlock {
    TBlock {
        kind: kind.into(),
        monic: PolyOut::new(t, "s"),
        factored: factored_string(&c.factorization, "s"),
        constant: fmt_rational(&c.factorization.constant),
        factors: factors_out(&c.factorization.factors, "s"),
        formula: None,
        cross_checks: Vec::new(),
        degree_check: None,
        lambda: None,
    }
}

fn analyse_plane(p: &ProjParam, opts: &Options) -> Result<Analysis> {
    let tf = t_function(p)?;
    let limit = limit_info_with_theta(p, opts.theta.clone())?;
    let classification = classify_with(p, &tf.poly, &limit, opts.degree_cap)?;
    let mut block = t_block("T", &tf.poly, &classification);
    block.formula = Some(tf.used_formula.name().into());
    block.cross_checks = tf
        .cross_checks
        .iter()
        .map(|c| CrossCheckOut {
            formula: c.formula.name().into(),
            agrees: c.agrees,
        })
        .collect();
    let dc = degree_check(&tf.poly, &limit, p.degree());
    block.degree_check = Some(DegreeCheckOut {
        expected: dc.expected,
        actual: dc.actual,
        ok: dc.ok,
    });
    let audit = genus_audit(&classification.records, p.degree());
    let genus = GenusOut {
        expected: audit.expected,
        sum: audit.sum,
        residual: audit.residual,
        applies: !classification.non_ordinary(),
        ok: audit.ok(),
    };
    let t_q = t_function(&moebius_reparam(p, &limit.theta)?)?.poly;
    let moebius = reconstruction_moebius(&classification.records, &limit) == t_q;
    Ok(Analysis {
        route: "plane",
        limit,
        t: tf.poly,
        t_block: block,
        classification,
        genus: Some(genus),
        moebius: Some(moebius),
    })
}

fn analyse_space(p: &ProjParam, opts: &Options) -> Result<Analysis> {
    let a = classify_space(p, opts.theta.clone(), opts.degree_cap)?;
    let mut block = t_block("T_E", &a.t_e, &a.classification);
    block.lambda = Some(a.lambda.iter().map(fmt_rational).collect());
    Ok(Analysis {
        route: "space",
        limit: a.limit,
        t: a.t_e,
        t_block: block,
        classification: a.classification,
        genus: None,
        moebius: None,
    })
}

fn limit_block(l: &LimitPointInfo) -> LimitBlock {
    LimitBlock {
        coordinates: l.point.canonical().iter().map(fmt_rational).collect(),
        display: l.point.to_string(),
        reachable: l.reachable,
        normality: format!("{:?}", l.normality),
        visible_mult: l.visible_mult,
        hidden_mult: l.hidden_mult,
        total_mult: l.total_mult,
        theta: fmt_rational(&l.theta),
        h_l: PolyOut::new(&l.h_l, "t"),
        h_u: l.h_u.as_ref().map(|h| PolyOut::new(h, "t")),
        h_q: PolyOut::new(&l.h_q, "t"),
    }
}

/// A record's point as coordinates in `Q` or in `Q[s]/(f)`.
fn record_coords(r: &SingularityRecord) -> Result<(ExtField, Vec<ExtElem>)> {
    match &r.point {
        SingularPoint::Rational(q) => {
            let field = ExtField::new(&UniPoly::x())?;
            let coords = q.coords().iter().map(|c| field.from_rational(c.clone())).collect();
            Ok((field, coords))
        }
        SingularPoint::Family(f) => {
            let field = ExtField::new(&f.minimal_polynomial)?;
            let coords = f.coordinates.iter().map(|c| field.elem(c)).collect();
            Ok((field, coords))
        }
    }
}

/// Compares every record's multiplicity with the implicit oracle. Space
/// input is checked on a generic plane projection.
pub fn verify(p: &ProjParam, records: &[SingularityRecord]) -> Result<VerifyBlock> {
    let (plane, projection) = if p.is_plane() {
        (p.clone(), None)
    } else {
        let proj = generic_projection(p)?;
        (proj.param.clone(), Some(proj))
    };
    let curve = implicitize(&plane)?;
    let mut entries = Vec::new();
    for r in records {
        let (field, coords) = record_coords(r)?;
        let coords = match &projection {
            Some(pr) => pr.project(&coords, &field),
            None => coords,
        };
        let oracle = multiplicity_at_ext(&curve, &field, &coords)?;
        entries.push(VerifyEntry {
            point: RecordOut::new(r).point.display().to_string(),
            classifier: r.multiplicity,
            oracle,
            agrees: oracle == r.multiplicity,
        });
    }
    Ok(VerifyBlock {
        implicit_equation: curve.pretty(),
        projection: projection.map(|pr| {
            pr.rows
                .iter()
                .map(|row| row.iter().map(fmt_rational).collect())
                .collect()
        }),
        all_agree: entries.iter().all(|e| e.agrees),
        entries,
    })
}

/// Runs the full analysis of a parsed input.
pub fn run_pipeline(doc: &InputDoc, opts: &Options) -> Result<Report> {
    let p = doc.param()?;
    let index = tracing_index(&p);
    assert_proper(&p)?;
    let a = if p.is_plane() && !opts.space {
        analyse_plane(&p, opts)?
    } else {
        analyse_space(&p, opts)?
    };
    let records = &a.classification.records;
    let verification = if opts.verify { Some(verify(&p, records)?) } else { None };
    let samples = opts.sample.as_ref().map(|s| {
        let table = sample_points(&p, &s.start, &s.end, s.count);
        SampleBlock {
            start: fmt_rational(&s.start),
            end: fmt_rational(&s.end),
            count: s.count,
            skipped: table.skipped,
            header: table.header(),
            rows: table.decimal_rows(opts.digits),
        }
    });
    Ok(Report {
        input: doc.sources(),
        parametrization: p.to_string(),
        ambient_dimension: p.dim(),
        route: a.route.into(),
        degree: p.degree(),
        tracing_index: index,
        proper: index == 1,
        limit_point: limit_block(&a.limit),
        t_function: a.t_block,
        singularities: records.iter().map(RecordOut::new).collect(),
        genus_audit: a.genus,
        reconstruction: ReconstructionOut {
            direct: reconstruction(records) == a.t,
            moebius: a.moebius,
        },
        verification,
        samples,
        warnings: a.classification.warnings.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::input::parse_input;
    use crate::poly::ring::{rat, ratio};

    fn run(text: &str, opts: &Options) -> Result<Report> {
        run_pipeline(&parse_input(text)?, opts)
    }

    #[test]
    fn ellipse_report() {
        let r = run("t^2-1; t^2-t; t^2+1", &Options::default()).unwrap();
        assert!(r.singularities.is_empty());
        assert_eq!(r.limit_point.normality, "CriticalPoint");
        assert_eq!(r.t_function.monic.coefficients, vec!["1"]);
        assert!(r.reconstruction.direct && r.reconstruction.moebius == Some(true));
        assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
    }

    #[test]
    fn exit_codes_are_distinct() {
        let codes = [
            exit_code(&Error::NotProper(2)),
            exit_code(&Error::DegenerateInput(String::new())),
            exit_code(&Error::DegreeCapExceeded { degree: 2, cap: 1 }),
            exit_code(&parse_input("x").unwrap_err().into()),
            exit::VERIFY_MISMATCH,
        ];
        for (i, a) in codes.iter().enumerate() {
            assert_ne!(*a, 0);
            assert!(codes[i + 1..].iter().all(|b| a != b));
        }
        assert_eq!(exit_code(&run("t^2; t^4; 1", &Options::default()).unwrap_err()), exit::NOT_PROPER);
        let cap = Options {
            degree_cap: 1,
            ..Options::default()
        };
        assert_eq!(exit_code(&run("t^2-1; t^3-t; 1", &cap).unwrap_err()), exit::DEGREE_CAP);
        assert_eq!(exit_code(&run("t; 2*t; 1", &Options::default()).unwrap_err()), exit::DEGENERATE);
    }

    #[test]
    fn sample_spec_parsing() {
        assert_eq!(
            "-20:1/2:5".parse::<SampleSpec>().unwrap(),
            SampleSpec {
                start: rat(-20),
                end: ratio(1, 2),
                count: 5
            }
        );
        assert!("0:1:1".parse::<SampleSpec>().is_err());
        assert!("0:1".parse::<SampleSpec>().is_err());
    }

    #[test]
    fn samples() {
        let ellipse = parse_input("t^2-1; t^2-t; t^2+1").unwrap().param().unwrap();
        let s = sample_points(&ellipse, &rat(-20), &rat(20), 5);
        assert_eq!((s.rows.len(), s.skipped), (5, 0));
        assert_eq!(s.header(), vec!["t", "x1", "x2"]);
        assert_eq!(s.rows[2], (rat(0), vec![rat(-1), rat(0)]));

        let ex1 = parse_input("1+t+2*t^2+3*t^3+2*t^4+2*t^5+t^6; t^2+t^3+t^4+2*t^5+t^6; t^2+t^4")
            .unwrap()
            .param()
            .unwrap();
        let s = sample_points(&ex1, &rat(-2), &rat(2), 5);
        assert_eq!((s.rows.len(), s.skipped), (4, 1));
        assert!(s.rows.iter().all(|(t, _)| !t.is_zero()));

        let s = sample_points(&ellipse, &rat(3), &rat(7), 2);
        assert_eq!(s.rows.iter().map(|r| r.0.clone()).collect::<Vec<_>>(), vec![rat(3), rat(7)]);
        assert_eq!(s.to_csv(12).lines().nth(1), Some("3,0.8,0.6"));
    }

    #[test]
    fn nodal_cubic_verified() {
        let opts = Options {
            verify: true,
            ..Options::default()
        };
        let r = run("t^2-1; t^3-t; 1", &opts).unwrap();
        let v = r.verification.unwrap();
        assert!(v.all_agree);
        assert_eq!(v.entries.len(), 1);
        assert_eq!(v.entries[0].oracle, 2);
    }

    #[test]
    fn conjugate_parameters_verified() {
        // t = i and t = -i both map to the origin
        let opts = Options {
            verify: true,
            ..Options::default()
        };
        let r = run("t^2+1; t^3+t; 1", &opts).unwrap();
        assert_eq!(r.singularities.len(), 1);
        assert_eq!(r.singularities[0].point.display(), "(0:0:1)");
        assert!(r.verification.unwrap().all_agree);
    }
}
