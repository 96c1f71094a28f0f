//! A curve in P^4 whose only singularity is a triple point at the limit point.

use curvesing::classify::SingularPoint;
use curvesing::input::parse_input;
use curvesing::poly::DEFAULT_DEGREE_CAP;
use curvesing::space::classify_space;

fn main() -> curvesing::Result<()> {
    let p = parse_input(include_str!("../data/space_triple_point.txt"))?.param()?;
    let a = classify_space(&p, None, DEFAULT_DEGREE_CAP)?;
    println!("T_E(s) = {}", a.t_e.pretty("s"));
    for r in &a.classification.records {
        if let SingularPoint::Rational(q) = &r.point {
            println!("{q}: m = {}, fibre {}, limit point {}", r.multiplicity, r.fibre_function.pretty("t"), r.is_limit_point);
        }
    }
    Ok(())
}
