mod common;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use tcarrange::os_algebra::oracle::{brute_force_oracle, brute_force_oracle_with, RelationSource};
use tcarrange::{Arrangement, Monomial, OsAlgebra, Parity};

use common::{permutation_sign, subsets};

const ARRANGEMENTS: [&str; 4] = ["braid:3", "braid:4", "braid:5", "generic:3:5:1"];

/// Test arrangements with the algebras defined on them: every arrangement in
/// odd parity, the quadratic ones also in even parity.
fn cases() -> Vec<(String, Arrangement, Parity)> {
    // four lines through the origin in the plane
    let lines = Arrangement::parse_json(
        r#"{"ambient_dim": 2, "hyperplanes": [
            {"label": "x", "normal": ["1", "0"]}, {"label": "y", "normal": ["0", "1"]},
            {"label": "d", "normal": ["1", "-1"]}, {"label": "a", "normal": ["1", "1"]}]}"#,
    )
    .unwrap()
    .with_id("four-lines");
    let sum = Arrangement::braid(3).unwrap().direct_sum(&lines).unwrap();
    let mut extra = vec![lines, sum];
    let mut all: Vec<Arrangement> = ARRANGEMENTS.iter().map(|n| Arrangement::named(n).unwrap()).collect();
    all.append(&mut extra);
    let mut out = Vec::new();
    for arr in all {
        for parity in [Parity::Odd, Parity::Even] {
            if OsAlgebra::new(&arr, parity).is_ok() {
                out.push((arr.id().to_string(), arr.clone(), parity));
            }
        }
    }
    out
}

fn expected(table: &tcarrange::os_algebra::oracle::QuotientTable, m: Monomial) -> BTreeMap<Monomial, BigInt> {
    table.integer_coordinates(m).expect("integral coordinates")
}

#[test]
fn straighten_matches_quotient_on_every_monomial() {
    let cases = cases();
    assert_eq!(cases.len(), 11);
    for (name, arr, parity) in cases {
        {
            let alg = OsAlgebra::new(&arr, parity).unwrap();
            let mut mismatches = 0;
            for p in 0..=arr.rank() + 1 {
                let table = brute_force_oracle(&arr, p, parity).unwrap();
                assert!(table.nbc_is_basis, "{name} {parity} degree {p}");
                assert_eq!(table.dimension, alg.dimension(p), "{name} {parity} degree {p}");
                for t in subsets(arr.len(), p) {
                    let m = Monomial::from_indices(&t);
                    if alg.straighten(&t).unwrap().terms() != &expected(&table, m) {
                        mismatches += 1;
                    }
                }
            }
            assert_eq!(mismatches, 0, "{name} {parity}");
        }
    }
}

#[test]
fn multiply_matches_quotient_on_basis_pairs() {
    for (name, arr, parity) in cases() {
        let r = arr.rank();
        {
            let alg = OsAlgebra::new(&arr, parity).unwrap();
            let tables: Vec<_> = (0..=r).map(|p| brute_force_oracle(&arr, p, parity).unwrap()).collect();
            for p in 0..=r {
                for q in 0..=r - p {
                    for a in alg.basis(p) {
                        for b in alg.basis(q) {
                            let prod = alg.multiply(&alg.straighten(&a.indices()).unwrap(), &alg.straighten(&b.indices()).unwrap()).unwrap();
                            let want = if a.mask() & b.mask() != 0 {
                                BTreeMap::new()
                            } else {
                                let mut concat = a.indices();
                                concat.extend(b.indices());
                                let sign = match parity {
                                    Parity::Odd => permutation_sign(&concat),
                                    Parity::Even => 1,
                                };
                                expected(&tables[p + q], Monomial::from_mask(a.mask() | b.mask()))
                                    .into_iter()
                                    .map(|(k, v)| (k, v * sign))
                                    .collect()
                            };
                            assert_eq!(prod.terms(), &want, "{name} {parity} {a:?}·{b:?}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn anticommutative_braid_relations_are_generated_by_triangles() {
    for n in [4, 5] {
        let arr = Arrangement::braid(n).unwrap();
        for parity in [Parity::Odd] {
            for p in 0..=n - 1 {
                let all = brute_force_oracle_with(&arr, p, parity, RelationSource::AllCircuits).unwrap();
                let tri = brute_force_oracle_with(&arr, p, parity, RelationSource::Triangles).unwrap();
                assert_eq!(all.dimension, tri.dimension, "braid:{n} {parity} degree {p}");
                for t in subsets(arr.len(), p) {
                    let m = Monomial::from_indices(&t);
                    assert_eq!(all.coordinates(m), tri.coordinates(m));
                }
            }
        }
    }
}

#[test]
fn parity_makes_a_difference_beyond_degree_two() {
    let arr = Arrangement::braid(4).unwrap();
    let odd = brute_force_oracle(&arr, 3, Parity::Odd).unwrap();
    let even = brute_force_oracle(&arr, 3, Parity::Even).unwrap();
    // H13·H14·H23
    let m = Monomial::from_indices(&[1, 2, 3]);
    assert_ne!(odd.coordinates(m), even.coordinates(m));
    // degree two agrees up to the sign convention of the ground order
    let odd2 = brute_force_oracle(&arr, 2, Parity::Odd).unwrap();
    let even2 = brute_force_oracle(&arr, 2, Parity::Even).unwrap();
    for t in subsets(6, 2) {
        let m = Monomial::from_indices(&t);
        assert_eq!(odd2.coordinates(m), even2.coordinates(m));
    }
}
