//! Points in R^m for m ≥ 3. Odd m is settled by the product of squared
//! zero-divisors; even m leaves a gap of one.

use tcarrange::tc_report::report;
use tcarrange::tensor_square::DEFAULT_BUDGET;
use tcarrange::Mode;

fn main() -> tcarrange::Result<()> {
    for m in [3, 4, 5] {
        for n in 2..=5 {
            let rep = report(&Mode::ConfigSpace { n, m }, DEFAULT_BUDGET)?;
            println!("{:<20} {}", rep.mode, rep.headline());
        }
    }
    Ok(())
}
