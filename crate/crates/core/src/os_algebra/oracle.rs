//! Brute-force quotient oracle for verification.
//!
//! Builds the degree-`p` component of the algebra directly as the span of all
//! squarefree monomials modulo the relation vectors `∂e_C · e_U`, row reduces
//! over `Q`, and reads off the coordinates of every monomial in the nbc basis.
//! Shares nothing with the straightening code beyond the arrangement's exact
//! circuit enumeration; it exists to check that code.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Monomial, Parity};
use crate::arrangement::{subsets_of_size, Arrangement};
use crate::error::{Error, Result};
use crate::linalg::rref_with_order;

/// Ground sets above this size are rejected.
pub const MAX_ORACLE_GROUND: usize = 16;

/// Which circuits contribute relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationSource {
    AllCircuits,
    /// Three-element circuits only: the quadratic presentation.
    Triangles,
}

#[derive(Debug, Clone)]
pub struct QuotientTable {
    pub degree: usize,
    pub parity: Parity,
    /// Dimension of the quotient over `Q`.
    pub dimension: usize,
    /// nbc monomials of this degree.
    pub nbc: Vec<Monomial>,
    /// Whether the nbc monomials project to a basis of the quotient.
    pub nbc_is_basis: bool,
    coordinates: HashMap<Monomial, BTreeMap<Monomial, BigRational>>,
}

impl QuotientTable {
    /// Coordinates of the increasing monomial `m` in the nbc basis; `None`
    /// if the nbc monomials are not a basis.
    pub fn coordinates(&self, m: Monomial) -> Option<&BTreeMap<Monomial, BigRational>> {
        self.coordinates.get(&m)
    }

    /// Coordinates as integers, when they all are.
    pub fn integer_coordinates(&self, m: Monomial) -> Option<BTreeMap<Monomial, BigInt>> {
        let c = self.coordinates(m)?;
        c.iter().map(|(k, v)| v.is_integer().then(|| (*k, v.to_integer()))).collect()
    }
}

/// Sign produced by concatenating two increasing index lists and sorting.
fn concat_sign(a: &[usize], b: &[usize]) -> i64 {
    let inversions = a.iter().map(|x| b.iter().filter(|y| *y < x).count()).sum::<usize>();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Relations from every circuit in odd parity; in even parity only the
/// three-term relations (plus `e_s² = 0`, implicit in squarefree monomials)
/// present the commutative algebra.
pub fn brute_force_oracle(arr: &Arrangement, p: usize, parity: Parity) -> Result<QuotientTable> {
    let source = match parity {
        Parity::Odd => RelationSource::AllCircuits,
        Parity::Even => RelationSource::Triangles,
    };
    brute_force_oracle_with(arr, p, parity, source)
}

pub fn brute_force_oracle_with(arr: &Arrangement, p: usize, parity: Parity, source: RelationSource) -> Result<QuotientTable> {
    let n = arr.len();
    if n > MAX_ORACLE_GROUND {
        return Err(Error::TooLarge { what: "oracle ground set", limit: MAX_ORACLE_GROUND, found: n });
    }
    let monomials: Vec<Vec<usize>> = subsets_of_size(n, p).collect();
    let column: HashMap<Vec<usize>, usize> = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();

    let all_circuits = arr.circuits(arr.rank() + 1);
    let circuits: Vec<Vec<usize>> = all_circuits
        .iter()
        .map(|c| c.indices().to_vec())
        .filter(|c| source == RelationSource::AllCircuits || c.len() == 3)
        .collect();
    // nbc from the complete circuit list regardless of relation source
    let broken: Vec<Vec<usize>> = all_circuits.iter().map(|c| c.indices()[1..].to_vec()).collect();
    let is_nbc = |m: &[usize]| !broken.iter().any(|b| b.iter().all(|x| m.contains(x)));

    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for c in circuits.iter().filter(|c| c.len() <= p + 1) {
        for u in subsets_of_size(n, p + 1 - c.len()) {
            let mut row = vec![BigRational::zero(); monomials.len()];
            let mut nonzero = false;
            for j in 0..c.len() {
                let face: Vec<usize> = c.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect();
                if face.iter().any(|x| u.contains(x)) {
                    continue;
                }
                let boundary_sign = if j % 2 == 0 { 1 } else { -1 };
                let merge = match parity {
                    Parity::Odd => concat_sign(&face, &u),
                    Parity::Even => 1,
                };
                let mut union = face.clone();
                union.extend_from_slice(&u);
                union.sort_unstable();
                let col = column[&union];
                row[col] += BigRational::from_integer(BigInt::from(boundary_sign * merge));
                nonzero = true;
            }
            if nonzero && row.iter().any(|v| !v.is_zero()) {
                rows.push(row);
            }
        }
    }

    let (non_nbc_cols, nbc_cols): (Vec<usize>, Vec<usize>) = (0..monomials.len()).partition(|&i| !is_nbc(&monomials[i]));
    let order: Vec<usize> = non_nbc_cols.iter().chain(&nbc_cols).copied().collect();
    let pivots = rref_with_order(&mut rows, &order);
    let rank = pivots.len();
    let dimension = monomials.len() - rank;
    let nbc_is_basis = rank == non_nbc_cols.len() && pivots.iter().all(|c| non_nbc_cols.contains(c));

    let mono = |i: usize| Monomial::from_indices(&monomials[i]);
    let mut coordinates = HashMap::new();
    if nbc_is_basis {
        for &c in &nbc_cols {
            coordinates.insert(mono(c), BTreeMap::from([(mono(c), BigRational::one())]));
        }
        for (row, &pc) in rows.iter().zip(&pivots) {
            let coords: BTreeMap<Monomial, BigRational> =
                nbc_cols.iter().filter(|&&c| !row[c].is_zero()).map(|&c| (mono(c), -row[c].clone())).collect();
            coordinates.insert(mono(pc), coords);
        }
    }
    Ok(QuotientTable {
        degree: p,
        parity,
        dimension,
        nbc: nbc_cols.iter().map(|&c| mono(c)).collect(),
        nbc_is_basis,
        coordinates,
    })
}
