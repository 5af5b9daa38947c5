//! Reading an arrangement from JSON. Normals may be integers or fractions.

use tcarrange::tc_report::report;
use tcarrange::tensor_square::DEFAULT_BUDGET;
use tcarrange::{Arrangement, Mode, OsAlgebra, Parity};

const LINES: &str = r#"{
  "ambient_dim": 3,
  "hyperplanes": [
    {"label": "x", "normal": ["1", "0", "0"]},
    {"label": "y", "normal": ["0", "1", "0"]},
    {"label": "z", "normal": ["0", "0", "1"]},
    {"label": "x-y", "normal": ["1", "-1", "0"]},
    {"label": "y+z/2", "normal": ["0", "1", "1/2"]}
  ]
}"#;

fn main() -> tcarrange::Result<()> {
    let arr = Arrangement::parse_json(LINES)?.with_id("custom");
    let alg = OsAlgebra::new(&arr, Parity::Odd)?;
    println!("rank {}, Betti numbers {:?}", arr.rank(), alg.dimensions());
    println!("components: {}", arr.connected_components().len());
    print!("{}", report(&Mode::Arrangement(arr), DEFAULT_BUDGET)?.render_text());
    Ok(())
}
