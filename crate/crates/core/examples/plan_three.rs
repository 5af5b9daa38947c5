//! Plans three points swapping places and writes the motion as SVG.
//!
//! `cargo run --example plan_three -- swap.svg`

use tcarrange::planner::{plan3, render_svg, verify_path, Configuration, DEFAULT_FRAMES};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let start = Configuration::parse_json("[[0,0],[1,0],[2,0]]")?;
    let goal = Configuration::parse_json("[[2,0],[1,0],[0,0]]")?;
    let path = plan3(&start, &goal, DEFAULT_FRAMES)?;
    let report = verify_path(&path, 1e-6, Some((&start, &goal)), None)?;
    println!(
        "domain {} ({}), {} frames, closest approach {:.4}",
        path.domain,
        path.domain_name.as_deref().unwrap_or("-"),
        report.frames,
        report.min_distance
    );

    let out = std::env::args().nth(1).unwrap_or_else(|| "plan_three.svg".into());
    std::fs::write(&out, render_svg(&path))?;
    println!("wrote {out}");
    Ok(())
}
