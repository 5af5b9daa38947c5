#![allow(dead_code)]

use num_bigint::BigInt;
use tcarrange::{AlgebraElement, Monomial, OsAlgebra};

/// All increasing `k`-subsets of `0..n`, lexicographically.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Sign of the permutation sorting `t` (distinct entries).
pub fn permutation_sign(t: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..t.len() {
        for j in i + 1..t.len() {
            if t[i] > t[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn basis_element(alg: &OsAlgebra, m: Monomial) -> AlgebraElement {
    alg.straighten(&m.indices()).unwrap()
}

pub fn coeff(e: &AlgebraElement, m: Monomial) -> BigInt {
    e.coefficient(m)
}

pub mod pairs {
    use num_complex::Complex64 as Complex;
    use rand::Rng;
    use tcarrange::planner::{Configuration, ThreePointCoords};

    fn point(rng: &mut impl Rng, scale: f64) -> Complex {
        Complex::new(rng.gen_range(-scale..scale), rng.gen_range(-scale..scale))
    }

    fn nonzero(rng: &mut impl Rng, scale: f64) -> Complex {
        loop {
            let z = point(rng, scale);
            if z.norm() > 1e-3 {
                return z;
            }
        }
    }

    /// A state whose segment to `from` passes through `p` with probability
    /// `hit`, and a free random state otherwise.
    fn partner(rng: &mut impl Rng, from: Complex, p: Complex, hit: f64, avoid: &[Complex]) -> Complex {
        loop {
            let z = if rng.gen_bool(hit) { p + (p - from) * rng.gen_range(0.2..3.0) } else { point(rng, 3.0) };
            if avoid.iter().all(|a| (z - a).norm() > 1e-3) {
                return z;
            }
        }
    }

    pub fn two(rng: &mut impl Rng) -> (Configuration, Configuration) {
        let (z, w) = (point(rng, 5.0), point(rng, 5.0));
        let v = nonzero(rng, 3.0);
        let v2 = partner(rng, v, Complex::new(0.0, 0.0), 0.4, &[Complex::new(0.0, 0.0)]);
        let cfg = |z: Complex, v: Complex| Configuration::from_complex(&[z, z + v]).unwrap();
        (cfg(z, v), cfg(w, v2))
    }

    pub fn three(rng: &mut impl Rng) -> (Configuration, Configuration) {
        let punctures = [Complex::new(0.0, 0.0), Complex::new(1.0, 0.0)];
        let u = loop {
            let u = point(rng, 3.0);
            if punctures.iter().all(|p| (u - p).norm() > 1e-3) {
                break u;
            }
        };
        let target = punctures[rng.gen_range(0..2)];
        let (u, u2) = if rng.gen_bool(0.15) {
            // real line through both punctures
            (Complex::new(rng.gen_range(-3.0..-0.1), 0.0), Complex::new(rng.gen_range(1.1..4.0), 0.0))
        } else {
            (u, partner(rng, u, target, 0.4, &punctures))
        };
        let v = nonzero(rng, 3.0);
        let v2 = partner(rng, v, punctures[0], 0.4, &punctures[..1]);
        let cfg = |translation: Complex, u: Complex, v: Complex| {
            Configuration::from_complex(&ThreePointCoords { translation, u, v }.points()).unwrap()
        };
        (cfg(point(rng, 5.0), u, v), cfg(point(rng, 5.0), u2, v2))
    }
}
