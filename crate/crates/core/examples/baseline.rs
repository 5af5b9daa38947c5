//! The baseline planner works for any number of points.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tcarrange::planner::{plan_baseline, verify_path, Configuration};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for n in [3, 6, 10] {
        let mut random = || Configuration::new((0..n).map(|_| [rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0)]).collect());
        let (start, goal) = (random()?, random()?);
        let path = plan_baseline(&start, &goal, 128)?;
        let margin = 1e-6 * start.min_distance().min(goal.min_distance());
        let report = verify_path(&path, margin, Some((&start, &goal)), None)?;
        println!("{n} points: {} frames, min distance {:.4}", report.frames, report.min_distance);
    }
    Ok(())
}
