//! Generic arrangements: exact once there are at least 2r − 1 hyperplanes.

use tcarrange::tc_report::report;
use tcarrange::tensor_square::DEFAULT_BUDGET;
use tcarrange::{Arrangement, Mode};

fn main() -> tcarrange::Result<()> {
    for r in 2..=4 {
        let mut sizes = vec![r, 2 * r - 2, 2 * r - 1, 2 * r + 1];
        sizes.dedup();
        for n in sizes {
            let arr = Arrangement::generic(r, n, 1)?;
            let id = arr.id().to_string();
            let rep = report(&Mode::Arrangement(arr), DEFAULT_BUDGET)?;
            println!("{id:<16} {}", rep.headline());
        }
    }
    Ok(())
}
