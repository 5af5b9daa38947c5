mod common;

use num_complex::Complex64 as Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tcarrange::planner::{
    plan_baseline, verify_path, ConfigPlanner, Configuration, LocalPlanner, ThreePointCoords, ThreePointPlanner,
    Trajectory, TwoPointPlanner, STEP_FRACTION,
};

use common::pairs;

fn check_partition(planner: &dyn ConfigPlanner, start: &Configuration, goal: &Configuration) {
    let d = planner.classify(start, goal).unwrap();
    assert!((1..=planner.domain_count()).contains(&d));
    let path = planner.plan(start, goal, 8).unwrap();
    assert_eq!(path.domain, d, "{start:?} -> {goal:?}");
    assert_eq!(path.domain_name.as_deref(), Some(planner.domain_name(d).as_str()));
}

#[test]
fn two_point_domains_partition() {
    let planner = TwoPointPlanner::new();
    let table = planner.table();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut seen = [0usize; 2];
    for _ in 0..2000 {
        let (s, g) = pairs::two(&mut rng);
        let (a, b) = (TwoPointPlanner::coordinates(&s), TwoPointPlanner::coordinates(&g));
        let hits: Vec<usize> = (0..table.domain_count()).filter(|&i| table.in_domain(i, &a, &b).unwrap()).collect();
        assert_eq!(hits.len(), 1);
        seen[hits[0]] += 1;
        check_partition(&planner, &s, &g);
    }
    assert!(seen.iter().all(|&c| c > 0), "{seen:?}");
}

#[test]
fn three_point_domains_partition() {
    let planner = ThreePointPlanner::new();
    let table = planner.table();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut seen = [0usize; 4];
    for _ in 0..2000 {
        let (s, g) = pairs::three(&mut rng);
        let state = |c: &Configuration| {
            let k = ThreePointCoords::of(c);
            (k.translation, (k.u, k.v))
        };
        let (a, b) = (state(&s), state(&g));
        let hits: Vec<usize> = (0..table.domain_count()).filter(|&i| table.in_domain(i, &a, &b).unwrap()).collect();
        assert_eq!(hits.len(), 1);
        seen[hits[0]] += 1;
        check_partition(&planner, &s, &g);
    }
    assert!(seen.iter().all(|&c| c > 0), "{seen:?}");
}

#[test]
fn planned_paths_are_safe_and_exact_at_the_ends() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let planners: [&dyn ConfigPlanner; 2] = [&TwoPointPlanner::new(), &ThreePointPlanner::new()];
    for _ in 0..150 {
        for planner in planners {
            let (s, g) = if planner.points() == 2 { pairs::two(&mut rng) } else { pairs::three(&mut rng) };
            let path = planner.plan(&s, &g, 64).unwrap();
            let margin = 1e-6 * s.min_distance().min(g.min_distance());
            let report = verify_path(&path, margin, Some((&s, &g)), None).unwrap();
            assert!(report.max_step < STEP_FRACTION * s.diameter().max(g.diameter()));
        }
    }
}

#[test]
fn baseline_paths_are_safe() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for n in [2, 4, 5, 7] {
        for _ in 0..6 {
            let random = |rng: &mut ChaCha8Rng| {
                Configuration::new((0..n).map(|_| [rng.gen_range(-4.0..4.0), rng.gen_range(-4.0..4.0)]).collect()).unwrap()
            };
            let (s, g) = (random(&mut rng), random(&mut rng));
            let path = plan_baseline(&s, &g, 64).unwrap();
            assert!(path.non_optimal);
            let margin = 1e-6 * s.min_distance().min(g.min_distance());
            verify_path(&path, margin, Some((&s, &g)), None).unwrap();
        }
    }
}

#[test]
fn rules_are_continuous_inside_a_domain() {
    // small moves of the goal that stay in the domain move the whole path by
    // a comparable amount
    let planner = ThreePointPlanner::new();
    let table = planner.table();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut checked = 0;
    for _ in 0..400 {
        let (s, g) = pairs::three(&mut rng);
        let (a, b) = {
            let (p, q) = (ThreePointCoords::of(&s), ThreePointCoords::of(&g));
            ((p.translation, (p.u, p.v)), (q.translation, (q.u, q.v)))
        };
        let d = table.classify(&a, &b).unwrap();
        let delta = 1e-7;
        let mut nudged = b;
        nudged.0 += Complex::new(delta, 0.0);
        nudged.1 .1 += nudged.1 .1 / nudged.1 .1.norm() * delta;
        if table.classify(&a, &nudged).unwrap() != d {
            continue;
        }
        let (_, p) = table.rule(&a, &b).unwrap();
        let (_, q) = table.rule(&a, &nudged).unwrap();
        let worst = (0..=100)
            .map(|k| {
                let t = k as f64 / 100.0;
                let (x, y) = (p.at(t), q.at(t));
                (x.0 - y.0).norm().max((x.1 .0 - y.1 .0).norm()).max((x.1 .1 - y.1 .1).norm())
            })
            .fold(0.0, f64::max);
        assert!(worst < 1e3 * delta, "domain {d}: moved {worst:e}");
        checked += 1;
    }
    assert!(checked > 200);
}

#[test]
fn coordinates_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..1000 {
        let (s, _) = pairs::three(&mut rng);
        let back = ThreePointCoords::of(&s).points();
        for (z, p) in back.iter().zip(s.points()) {
            assert!((z - Complex::new(p[0], p[1])).norm() < 1e-12 * (1.0 + s.diameter()));
        }
    }
}
