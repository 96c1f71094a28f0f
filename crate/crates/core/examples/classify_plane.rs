//! Classifies the degree 7 curve whose limit point hides a second branch.

use curvesing::classify::{classify_with, genus_audit, reconstruction, SingularPoint};
use curvesing::input::parse_input;
use curvesing::limit::limit_info;
use curvesing::poly::DEFAULT_DEGREE_CAP;
use curvesing::tfunction::t_function;

const CURVE: &str = include_str!("../data/reachable_limit.txt");

fn main() -> curvesing::Result<()> {
    let p = parse_input(CURVE)?.param()?;
    let t = t_function(&p)?;
    let limit = limit_info(&p)?;
    let c = classify_with(&p, &t.poly, &limit, DEFAULT_DEGREE_CAP)?;

    println!("P(t) = {p}");
    println!("T(s) via {} has degree {}", t.used_formula.name(), t.poly.deg());
    for r in &c.records {
        let at = match &r.point {
            SingularPoint::Rational(q) => q.to_string(),
            SingularPoint::Family(f) => format!("{} conjugate points over {}", f.family_size, f.minimal_polynomial.pretty("s")),
        };
        println!("  m = {}  H = {}  at {at}{}", r.multiplicity, r.fibre_function.pretty("t"), if r.is_limit_point { "  (limit point)" } else { "" });
    }
    let audit = genus_audit(&c.records, p.degree());
    println!("sum m(m-1) = {} of (d-1)(d-2) = {}", audit.sum, audit.expected);
    println!("prod H^(m-1) == T: {}", reconstruction(&c.records) == t.poly);
    Ok(())
}
