//! Factors a polynomial over Q, given as an argument or a default.

use curvesing::input::parse_poly;
use curvesing::poly::{factor_rationals, DEFAULT_DEGREE_CAP};

fn main() -> curvesing::Result<()> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "t^10 + 3*t^9 + 14*t^8 + 25*t^7 + 56*t^6 + 69*t^5 + 90*t^4 + 91*t^3 + 63*t^2 + 44*t + 16".into());
    let f = parse_poly(&text)?;
    let fz = factor_rationals(&f, DEFAULT_DEGREE_CAP)?;
    println!("{} =", f.pretty("t"));
    println!("  {}", fz.constant);
    for (g, e) in &fz.factors {
        println!("  * ({})^{e}", g.pretty("t"));
    }
    assert_eq!(fz.expand(), f);
    Ok(())
}
