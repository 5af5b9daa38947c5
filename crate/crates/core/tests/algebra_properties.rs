mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use tcarrange::tensor_square::DEFAULT_BUDGET;
use tcarrange::{Arrangement, GroundSubset, Monomial, OsAlgebra, Parity, TensorSquare};

use common::{permutation_sign, subsets};

fn arrangement_from(dim: usize, entries: &[i8]) -> Option<Arrangement> {
    let hyperplanes = entries
        .chunks(dim)
        .enumerate()
        .map(|(i, c)| (format!("A{i}"), c.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()))
        .collect();
    Arrangement::new("random", dim, hyperplanes).ok()
}

fn arrangements() -> impl Strategy<Value = Arrangement> {
    (2usize..=4, 3usize..=7)
        .prop_flat_map(|(dim, n)| (Just(dim), proptest::collection::vec(-3i8..=3, dim * n)))
        .prop_filter_map("degenerate normals", |(dim, entries)| arrangement_from(dim, &entries))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, .. ProptestConfig::default() })]

    #[test]
    fn rank_is_monotone_and_submodular(arr in arrangements(), a in any::<u64>(), b in any::<u64>()) {
        let m = arr.matroid();
        let (a, b) = (a & m.full(), b & m.full());
        prop_assert!(m.rank_of(a & b) <= m.rank_of(a));
        prop_assert!(m.rank_of(a) <= m.rank_of(a | b));
        prop_assert!(m.rank_of(a | b) + m.rank_of(a & b) <= m.rank_of(a) + m.rank_of(b));
        prop_assert!(m.rank_of(a) <= a.count_ones() as usize);
    }

    #[test]
    fn closure_is_a_closure_operator(arr in arrangements(), a in any::<u64>()) {
        let m = arr.matroid();
        let a = a & m.full();
        let c = m.closure(a);
        prop_assert_eq!(c & a, a);
        prop_assert_eq!(m.closure(c), c);
        prop_assert_eq!(m.rank_of(c), m.rank_of(a));
        // exact linear algebra agrees
        let exact = arr.closure(&GroundSubset::from_mask(a));
        prop_assert_eq!(exact.indices.mask(), c);
    }

    #[test]
    fn circuits_are_minimal_dependent(arr in arrangements()) {
        let m = arr.matroid();
        for &c in m.circuits() {
            prop_assert!(!m.is_independent(c));
            for s in 0..arr.len() {
                if c & (1u64 << s) != 0 {
                    prop_assert!(m.is_independent(c & !(1u64 << s)));
                }
            }
        }
    }

    #[test]
    fn circuit_identity_and_section(arr in arrangements()) {
        for parity in [Parity::Odd, Parity::Even] {
            let Ok(alg) = OsAlgebra::new(&arr, parity) else { continue };
            for c in arr.circuits(arr.rank() + 1) {
                let idx = c.indices();
                // only triangles are relations of the commutative algebra
                if parity == Parity::Even && idx.len() != 3 {
                    continue;
                }
                let mut sum = alg.zero(idx.len() - 1);
                for j in 0..idx.len() {
                    let face: Vec<usize> = idx.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect();
                    let sign = BigInt::from(if j % 2 == 0 { 1 } else { -1 });
                    sum = sum.add(&alg.straighten(&face).unwrap().scaled(&sign)).unwrap();
                }
                prop_assert!(sum.is_zero(), "{} {:?}", parity, idx);
            }
            for p in 0..=arr.rank() {
                for m in alg.basis(p) {
                    let e = alg.straighten(&m.indices()).unwrap();
                    prop_assert_eq!(e.terms().len(), 1);
                    prop_assert_eq!(e.coefficient(m), BigInt::from(1));
                }
            }
        }
    }

    #[test]
    fn input_order_sign_law(arr in arrangements(), seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        for parity in [Parity::Odd, Parity::Even] {
            let Ok(alg) = OsAlgebra::new(&arr, parity) else { continue };
            for p in 2..=arr.rank().min(4) {
                for t in subsets(arr.len(), p).into_iter().take(12) {
                    let mut s = t.clone();
                    s.shuffle(&mut rng);
                    let base = alg.straighten(&t).unwrap();
                    let sign = match parity {
                        Parity::Odd => permutation_sign(&s),
                        Parity::Even => 1,
                    };
                    prop_assert_eq!(alg.straighten(&s).unwrap(), base.scaled(&BigInt::from(sign)));
                }
            }
        }
    }

    #[test]
    fn flag_sum_and_rewriting_agree(arr in arrangements()) {
        let alg = OsAlgebra::new(&arr, Parity::Odd).unwrap();
        for p in 0..=arr.rank() {
            for t in subsets(arr.len(), p) {
                prop_assert_eq!(alg.flag_expansion(&t).unwrap(), alg.broken_circuit_reduction(&t).unwrap());
            }
        }
    }

    #[test]
    fn shuffle_equals_direct(arr in arrangements(), pick in any::<u64>()) {
        let sq = TensorSquare::new(OsAlgebra::new(&arr, Parity::Odd).unwrap());
        let s: Vec<usize> = (0..arr.len()).filter(|i| pick & (1 << i) != 0).collect();
        prop_assert_eq!(sq.bar_product_shuffle(&s).unwrap(), sq.bar_product_direct(&s).unwrap());
    }

    #[test]
    fn certificates_are_sound(arr in arrangements()) {
        let sq = TensorSquare::new(OsAlgebra::new(&arr, Parity::Odd).unwrap());
        let cert = sq.find_certificate(DEFAULT_BUDGET).expect("a single hyperplane always certifies");
        prop_assert!(sq.verify_certificate(&cert).unwrap());
        prop_assert!(cert.subset.len() < 2 * arr.rank());
        let cup = sq.zd_cup_length(DEFAULT_BUDGET).unwrap();
        prop_assert!(cup.length >= cert.subset.len());
        prop_assert!(cup.length <= cup.ceiling);
        if cup.length > 0 {
            prop_assert!(!sq.bar_product_direct(&cup.factors).unwrap().is_zero());
        }
    }
}

#[test]
fn multiplication_is_associative_and_graded_commutative() {
    use rand::{Rng, SeedableRng};
    let arr = Arrangement::braid(4).unwrap();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for parity in [Parity::Odd, Parity::Even] {
        let alg = OsAlgebra::new(&arr, parity).unwrap();
        let basis: Vec<Monomial> = (0..=3).flat_map(|p| alg.basis(p)).collect();
        let el = |m: Monomial| alg.straighten(&m.indices()).unwrap();
        for _ in 0..200 {
            let (a, b, c) = (
                el(basis[rng.gen_range(0..basis.len())]),
                el(basis[rng.gen_range(0..basis.len())]),
                el(basis[rng.gen_range(0..basis.len())]),
            );
            let left = alg.multiply(&alg.multiply(&a, &b).unwrap(), &c).unwrap();
            let right = alg.multiply(&a, &alg.multiply(&b, &c).unwrap()).unwrap();
            assert_eq!(left, right);
            let sign = match parity {
                Parity::Odd if a.degree() * b.degree() % 2 == 1 => -1,
                _ => 1,
            };
            assert_eq!(alg.multiply(&a, &b).unwrap(), alg.multiply(&b, &a).unwrap().scaled(&BigInt::from(sign)));
        }
    }
}

#[test]
fn tensor_multiplication_is_associative() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
    for parity in [Parity::Odd, Parity::Even] {
        let sq = TensorSquare::new(OsAlgebra::new(&Arrangement::braid(4).unwrap(), parity).unwrap());
        for _ in 0..50 {
            let mut pick = || {
                let k = rng.gen_range(1..=3);
                let f: Vec<usize> = (0..k).map(|_| rng.gen_range(0..6)).collect();
                sq.bar_product_direct(&f).unwrap()
            };
            let (x, y, z) = (pick(), pick(), pick());
            let left = sq.tensor_multiply(&sq.tensor_multiply(&x, &y).unwrap(), &z).unwrap();
            let right = sq.tensor_multiply(&x, &sq.tensor_multiply(&y, &z).unwrap()).unwrap();
            assert_eq!(left, right);
        }
    }
}

#[test]
fn deleting_a_hyperplane_keeps_certificate_products() {
    // braid:3 sits inside braid:4 as the hyperplanes H12, H13, H23
    let small = TensorSquare::new(OsAlgebra::new(&Arrangement::braid(3).unwrap(), Parity::Odd).unwrap());
    let big = TensorSquare::new(OsAlgebra::new(&Arrangement::braid(4).unwrap(), Parity::Odd).unwrap());
    let cert = small.find_certificate(DEFAULT_BUDGET).unwrap();
    let embed = [0usize, 1, 3];
    let image: Vec<usize> = cert.subset.indices().iter().map(|&i| embed[i]).collect();
    assert!(!big.bar_product_direct(&image).unwrap().is_zero());
    let big_cup = big.zd_cup_length(DEFAULT_BUDGET).unwrap();
    assert!(big_cup.length >= cert.subset.len());
}
