//! The structured result of a run: a serde document with exact rational
//! coefficients as `n` or `n/d` strings, plus a sectioned text rendering.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::classify::{SingularPoint, SingularityRecord};
use crate::poly::{Factorization, UniPoly};

/// A polynomial as ascending exact coefficients and a pretty string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyOut {
    pub coefficients: Vec<String>,
    pub pretty: String,
}

impl PolyOut {
    pub fn new(p: &UniPoly, var: &str) -> Self {
        Self {
            coefficients: p.coeff_strings(),
            pretty: p.pretty(var),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorOut {
    pub factor: PolyOut,
    pub exponent: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LimitBlock {
    pub coordinates: Vec<String>,
    pub display: String,
    pub reachable: bool,
    pub normality: String,
    pub visible_mult: usize,
    pub hidden_mult: usize,
    pub total_mult: usize,
    pub theta: String,
    pub h_l: PolyOut,
    pub h_u: Option<PolyOut>,
    pub h_q: PolyOut,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheckOut {
    pub formula: String,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeCheckOut {
    pub expected: i64,
    pub actual: i64,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TBlock {
    /// `T` for the plane route, `T_E` for the `Z` reduction.
    pub kind: String,
    pub monic: PolyOut,
    pub factored: String,
    pub constant: String,
    pub factors: Vec<FactorOut>,
    pub formula: Option<String>,
    pub cross_checks: Vec<CrossCheckOut>,
    pub degree_check: Option<DegreeCheckOut>,
    /// Coefficients of the first coordinate change on the `Z` route.
    pub lambda: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PointOut {
    Rational {
        coordinates: Vec<String>,
        display: String,
    },
    Family {
        minimal_polynomial: PolyOut,
        family_size: usize,
        member_fibre_degree: usize,
        /// Member coordinates as polynomials in a root `s` of the minimal polynomial.
        coordinates: Vec<PolyOut>,
        display: String,
    },
}

impl PointOut {
    pub fn display(&self) -> &str {
        match self {
            PointOut::Rational { display, .. } | PointOut::Family { display, .. } => display,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordOut {
    pub point: PointOut,
    pub multiplicity: usize,
    pub fibre_function: PolyOut,
    pub is_limit_point: bool,
    pub hidden_mult: usize,
    pub tangent_multiplicities: Vec<usize>,
    pub ordinary: bool,
    pub points: usize,
    pub t_factors: Vec<FactorOut>,
}

impl RecordOut {
    pub fn new(r: &SingularityRecord) -> Self {
        let point = match &r.point {
            SingularPoint::Rational(q) => PointOut::Rational {
                coordinates: q.canonical().iter().map(crate::poly::ring::fmt_rational).collect(),
                display: q.to_string(),
            },
            SingularPoint::Family(f) => PointOut::Family {
                minimal_polynomial: PolyOut::new(&f.minimal_polynomial, "s"),
                family_size: f.family_size,
                member_fibre_degree: f.member_fibre_degree,
                coordinates: f.coordinates.iter().map(|c| PolyOut::new(c, "s")).collect(),
                display: format!(
                    "({}) with {} = 0",
                    f.coordinates.iter().map(|c| c.pretty("s")).collect::<Vec<_>>().join(" : "),
                    f.minimal_polynomial.pretty("s")
                ),
            },
        };
        Self {
            point,
            multiplicity: r.multiplicity,
            fibre_function: PolyOut::new(&r.fibre_function, "t"),
            is_limit_point: r.is_limit_point,
            hidden_mult: r.hidden_mult,
            tangent_multiplicities: r.tangent_multiplicities.clone(),
            ordinary: r.ordinary,
            points: r.point_count(),
            t_factors: factors_out(&r.t_factors, "s"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusOut {
    pub expected: i64,
    pub sum: i64,
    pub residual: i64,
    /// The identity is only claimed when every singularity is ordinary.
    pub applies: bool,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReconstructionOut {
    /// `prod H^(m - 1)` equals the monic T (or `T_E`).
    pub direct: bool,
    /// The same identity after the Möbius reparametrization, plane route only.
    pub moebius: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyEntry {
    pub point: String,
    pub classifier: usize,
    pub oracle: usize,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyBlock {
    /// Implicit equation checked against (of the projection for space input).
    pub implicit_equation: String,
    pub projection: Option<Vec<Vec<String>>>,
    pub entries: Vec<VerifyEntry>,
    pub all_agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleBlock {
    pub start: String,
    pub end: String,
    pub count: usize,
    pub skipped: usize,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl SampleBlock {
    pub fn to_csv(&self) -> String {
        let mut out = self.header.join(",");
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub input: Vec<String>,
    pub parametrization: String,
    pub ambient_dimension: usize,
    /// `plane` or `space` (the `Z` reduction).
    pub route: String,
    pub degree: usize,
    pub tracing_index: usize,
    pub proper: bool,
    pub limit_point: LimitBlock,
    pub t_function: TBlock,
    pub singularities: Vec<RecordOut>,
    pub genus_audit: Option<GenusOut>,
    pub reconstruction: ReconstructionOut,
    pub verification: Option<VerifyBlock>,
    pub samples: Option<SampleBlock>,
    pub warnings: Vec<String>,
}

pub fn factors_out(factors: &[(UniPoly, usize)], var: &str) -> Vec<FactorOut> {
    factors
        .iter()
        .map(|(f, e)| FactorOut {
            factor: PolyOut::new(f, var),
            exponent: *e,
        })
        .collect()
}

/// `(f1)^e1*(f2)^e2...`, or `1` for a constant.
pub fn factored_string(fz: &Factorization, var: &str) -> String {
    if fz.factors.is_empty() {
        return "1".into();
    }
    fz.factors
        .iter()
        .map(|(f, e)| match e {
            1 => format!("({})", f.pretty(var)),
            _ => format!("({})^{e}", f.pretty(var)),
        })
        .collect::<Vec<_>>()
        .join("*")
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn render_text(&self) -> String {
        let mut o = String::new();
        let flag = |b: bool| if b { "ok" } else { "MISMATCH" };
        let _ = writeln!(o, "input");
        for (i, c) in self.input.iter().enumerate() {
            let _ = writeln!(o, "  [{}] {c}", i + 1);
        }
        let _ = writeln!(o, "\nparametrization");
        let _ = writeln!(o, "  {}", self.parametrization);
        let _ = writeln!(o, "  ambient dimension  {} ({} route)", self.ambient_dimension, self.route);
        let _ = writeln!(o, "  degree             {}", self.degree);
        let _ = writeln!(
            o,
            "  tracing index      {}{}",
            self.tracing_index,
            if self.proper { " (proper)" } else { "" }
        );

        let l = &self.limit_point;
        let _ = writeln!(o, "\nlimit point");
        let _ = writeln!(o, "  P_L                {}", l.display);
        let _ = writeln!(o, "  reachable          {}", l.reachable);
        let _ = writeln!(o, "  normality          {}", l.normality);
        let _ = writeln!(
            o,
            "  multiplicity       {} (visible {}, hidden {})",
            l.total_mult, l.visible_mult, l.hidden_mult
        );
        let _ = writeln!(o, "  theta              {}", l.theta);
        let _ = writeln!(o, "  H_L                {}", l.h_l.pretty);
        if let Some(h) = &l.h_u {
            let _ = writeln!(o, "  H_L under U        {}", h.pretty);
        }
        let _ = writeln!(o, "  H_L under Q        {}", l.h_q.pretty);

        let t = &self.t_function;
        let _ = writeln!(o, "\n{}-function", t.kind);
        if let Some(f) = &t.formula {
            let _ = writeln!(o, "  formula            {f}");
        }
        if let Some(lam) = &t.lambda {
            let _ = writeln!(o, "  first coordinate   lambda = [{}]", lam.join(", "));
        }
        let _ = writeln!(o, "  monic              {}", t.monic.pretty);
        let _ = writeln!(o, "  coefficients       [{}]", t.monic.coefficients.join(", "));
        let _ = writeln!(o, "  factored           {}", t.factored);
        if let Some(d) = &t.degree_check {
            let _ = writeln!(
                o,
                "  degree             {} against (d-1)(d-2) - m_H(m_L-1) = {}  {}",
                d.actual,
                d.expected,
                flag(d.ok)
            );
        }
        for c in &t.cross_checks {
            let _ = writeln!(o, "  cross check        {}  {}", c.formula, flag(c.agrees));
        }

        let _ = writeln!(o, "\nsingularities ({})", self.singularities.len());
        for (i, r) in self.singularities.iter().enumerate() {
            let what = match &r.point {
                PointOut::Rational { .. } => "point".to_string(),
                PointOut::Family { family_size, .. } => format!("family of {family_size} points"),
            };
            let _ = writeln!(
                o,
                "  {}. {} {}  multiplicity {}{}{}",
                i + 1,
                what,
                r.point.display(),
                r.multiplicity,
                if r.ordinary { ", ordinary" } else { ", non-ordinary" },
                if r.is_limit_point {
                    format!(", limit point (hidden {})", r.hidden_mult)
                } else {
                    String::new()
                }
            );
            let _ = writeln!(o, "     fibre        {}", r.fibre_function.pretty);
            let tangents: Vec<String> = r.tangent_multiplicities.iter().map(|k| k.to_string()).collect();
            let _ = writeln!(o, "     tangents     [{}]", tangents.join(", "));
            let tf: Vec<String> = r
                .t_factors
                .iter()
                .map(|f| format!("({})^{}", f.factor.pretty, f.exponent))
                .collect();
            if !tf.is_empty() {
                let _ = writeln!(o, "     T factors    {}", tf.join("*"));
            }
        }

        if let Some(g) = &self.genus_audit {
            let _ = writeln!(o, "\ngenus audit");
            let _ = writeln!(
                o,
                "  sum m(m-1) = {}, (d-1)(d-2) = {}  {}",
                g.sum,
                g.expected,
                match (g.ok, g.applies) {
                    (true, _) => "ok",
                    (false, false) => "differs (non-ordinary singularities)",
                    (false, true) => "MISMATCH",
                }
            );
        }
        let _ = writeln!(o, "\nreconstruction");
        let _ = writeln!(o, "  prod H^(m-1)       {}", flag(self.reconstruction.direct));
        if let Some(m) = self.reconstruction.moebius {
            let _ = writeln!(o, "  after Moebius map  {}", flag(m));
        }

        if let Some(v) = &self.verification {
            let _ = writeln!(o, "\nverification");
            let _ = writeln!(o, "  implicit equation  {}", v.implicit_equation);
            if let Some(rows) = &v.projection {
                for row in rows {
                    let _ = writeln!(o, "  projection row     [{}]", row.join(", "));
                }
            }
            for e in &v.entries {
                let _ = writeln!(
                    o,
                    "  {}  classifier {}  oracle {}  {}",
                    e.point,
                    e.classifier,
                    e.oracle,
                    flag(e.agrees)
                );
            }
        }

        if let Some(s) = &self.samples {
            let _ = writeln!(
                o,
                "\nsamples ({} rows, {} skipped)",
                s.rows.len(),
                s.skipped
            );
            for line in s.to_csv().lines() {
                let _ = writeln!(o, "  {line}");
            }
        }

        let _ = writeln!(o, "\nwarnings");
        if self.warnings.is_empty() {
            let _ = writeln!(o, "  none");
        }
        for w in &self.warnings {
            let _ = writeln!(o, "  {w}");
        }
        o
    }
}
