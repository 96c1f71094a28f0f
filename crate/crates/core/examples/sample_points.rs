//! CSV points of the unreachable-limit curve; t = 0 is skipped since p(0) = 0.

use curvesing::input::parse_input;
use curvesing::pipeline::sample_points;
use curvesing::poly::ring::rat;

fn main() -> curvesing::Result<()> {
    let p = parse_input(include_str!("../data/unreachable_limit.txt"))?.param()?;
    let table = sample_points(&p, &rat(-2), &rat(2), 9);
    print!("{}", table.to_csv(8));
    eprintln!("{} rows skipped", table.skipped);
    Ok(())
}
