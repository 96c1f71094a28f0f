//! Limit point data for a reachable, an unreachable and a smooth case.

use curvesing::input::parse_input;
use curvesing::limit::{homogeneous_fibre, limit_info};

fn main() -> curvesing::Result<()> {
    let inputs = [
        ("reachable", include_str!("../data/reachable_limit.txt")),
        ("unreachable", include_str!("../data/unreachable_limit.txt")),
        ("ellipse", include_str!("../data/ellipse.txt")),
    ];
    for (name, text) in inputs {
        let p = parse_input(text)?.param()?;
        let l = limit_info(&p)?;
        println!("{name}: P_L = {}  reachable = {}  {:?}", l.point, l.reachable, l.normality);
        println!("  m_L = {} (visible {}, hidden {})  theta = {}", l.total_mult, l.visible_mult, l.hidden_mult, l.theta);
        println!("  H_L = {}  homogeneous fibre {}", l.h_l.pretty("t"), homogeneous_fibre(&p).pretty());
        if let Some(h) = &l.h_u {
            println!("  fibre under t -> 1/t: {}", h.pretty("t"));
        }
    }
    Ok(())
}
