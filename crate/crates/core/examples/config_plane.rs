//! Exact topological complexity of ordered points in the plane.
//!
//! `cargo run --example config_plane -- 5`

use tcarrange::tc_report::report;
use tcarrange::tensor_square::DEFAULT_BUDGET;
use tcarrange::Mode;

fn main() -> tcarrange::Result<()> {
    let max: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    for n in 2..=max {
        let rep = report(&Mode::ConfigPlane(n), DEFAULT_BUDGET)?;
        println!("n = {n}: {}", rep.headline());
    }
    println!();
    print!("{}", report(&Mode::ConfigPlane(max), DEFAULT_BUDGET)?.render_text());
    Ok(())
}
