//! Counting domains met near a probe pair.

use tcarrange::planner::{instability_estimate, Configuration, ThreePointPlanner, TwoPointPlanner};

fn main() -> tcarrange::Result<()> {
    let cfg = |t: &str| Configuration::parse_json(t);
    let two = [(cfg("[[0,0],[1,0]]")?, cfg("[[1,0],[0,0]]")?)];
    let three = [(cfg("[[0,0],[-1,0],[1,0]]")?, cfg("[[0,0],[-2,0],[-1,0]]")?)];
    let generic = [(cfg("[[0,0],[1,0.3],[0.2,1]]")?, cfg("[[0.1,0],[1,0.5],[0.3,1.2]]")?)];

    println!("two points, antipodal: {}", instability_estimate(&TwoPointPlanner::new(), &two, 1e-3, 5000, 0)?);
    println!("three points, witness: {}", instability_estimate(&ThreePointPlanner::new(), &three, 1e-3, 5000, 0)?);
    println!("three points, generic: {}", instability_estimate(&ThreePointPlanner::new(), &generic, 1e-3, 5000, 0)?);
    Ok(())
}
