//! Implicit equation of the nodal cubic and multiplicities read off from it.

use curvesing::input::parse_input;
use curvesing::oracle::{implicitize, multiplicity_at};
use curvesing::param::ProjPoint;

fn main() -> curvesing::Result<()> {
    let p = parse_input(include_str!("../data/nodal_cubic.txt"))?.param()?;
    let f = implicitize(&p)?;
    println!("F = {}", f.pretty());
    println!("F(P(t)) = {}", f.eval_param(&p));
    for q in [[0, 0, 1], [0, 1, 0], [3, 6, 1], [1, 1, 1]] {
        let q = ProjPoint::from_ints(&q);
        println!("mult at {q} = {}", multiplicity_at(&f, &q));
    }
    Ok(())
}
