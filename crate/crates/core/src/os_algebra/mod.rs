//! The Orlik–Solomon algebra of a matroid with integer coefficients.
//!
//! Elements are stored in the nbc monomial basis. Two multiplicative
//! structures share the same relations `∂e_C = 0` over circuits `C`:
//!
//! - [`Parity::Odd`]: generators of degree one, anticommuting. This is the
//!   cohomology of a complex arrangement complement.
//! - [`Parity::Even`]: generators of degree two, commuting, with `e_s² = 0`.
//!   On the braid matroid this is the cohomology of `C_n(R^m)` for odd `m`.
//!
//! Reduction to the nbc basis uses the flag-sum formula
//! `m(T) = Σ_σ sgn(σ) m(F(σT))` in odd parity, and broken-circuit rewriting in
//! even parity. The rewriting engine also runs in odd parity so the two routes
//! can be checked against each other, and [`oracle`] provides a third,
//! brute-force linear-algebra route.

pub mod oracle;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arrangement::{mask_cmp, mask_indices, mask_of, Arrangement, Flag, Flat, GroundSubset, Matroid};
use crate::error::{Error, Result};

/// Largest ordered set accepted by [`OsAlgebra::straighten`]; the flag sum
/// ranges over the full symmetric group.
pub const MAX_STRAIGHTEN_DEGREE: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    /// Degree-one anticommuting generators.
    Odd,
    /// Degree-two commuting generators with `e² = 0`.
    Even,
}

impl Parity {
    /// Topological degree of a generator `e_s`.
    pub fn generator_degree(self) -> usize {
        match self {
            Parity::Odd => 1,
            Parity::Even => 2,
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        match text {
            "odd" => Ok(Parity::Odd),
            "even" => Ok(Parity::Even),
            other => Err(Error::Unsupported(format!("parity {other:?}"))),
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Odd => "odd",
            Parity::Even => "even",
        })
    }
}

/// Squarefree monomial `e_{t_1} ⋯ e_{t_p}` with `t_1 < ⋯ < t_p`.
///
/// Ordered by degree, then lexicographically by index list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial(u64);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn from_mask(mask: u64) -> Self {
        Monomial(mask)
    }

    /// Indices in any order; duplicates collapse.
    pub fn from_indices(indices: &[usize]) -> Self {
        Monomial(mask_of(indices))
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn indices(self) -> Vec<usize> {
        mask_indices(self.0)
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn subset(self) -> GroundSubset {
        GroundSubset::from_mask(self.0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        mask_cmp(self.0, other.0)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sign of `e_a · e_b = ± e_{a ∪ b}` for disjoint increasing monomials in the
/// anticommutative algebra: `(-1)^{#{(x, y) : x ∈ a, y ∈ b, x > y}}`.
pub(crate) fn odd_merge_sign(a: u64, b: u64) -> i32 {
    let mut inversions = 0u32;
    for y in mask_indices(b) {
        let above = if y >= 63 { 0 } else { !((2u64 << y) - 1) };
        inversions += (a & above).count_ones();
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Sign of the permutation sorting `t` (which has distinct entries).
pub(crate) fn sorting_sign(t: &[usize]) -> i32 {
    let mut inversions = 0usize;
    for i in 0..t.len() {
        for j in i + 1..t.len() {
            if t[i] > t[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub(crate) type Terms = BTreeMap<Monomial, BigInt>;

pub(crate) fn add_scaled(into: &mut Terms, from: &Terms, scale: &BigInt) {
    for (m, c) in from {
        let entry = into.entry(*m).or_insert_with(BigInt::zero);
        *entry += c * scale;
        if entry.is_zero() {
            into.remove(m);
        }
    }
}

/// Homogeneous element of the algebra in the nbc basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    parity: Parity,
    signature: u64,
    degree: usize,
    terms: Terms,
}

impl AlgebraElement {
    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// Number of generators in each monomial (the grading `p` of `A_p`).
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: Monomial) -> BigInt {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    pub fn scaled(&self, factor: &BigInt) -> AlgebraElement {
        let mut out = AlgebraElement { terms: Terms::new(), ..self.clone() };
        add_scaled(&mut out.terms, &self.terms, factor);
        out
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        if self.parity != other.parity || self.signature != other.signature || self.degree != other.degree {
            return Err(Error::AlgebraMismatch);
        }
        let mut out = self.clone();
        add_scaled(&mut out.terms, &other.terms, &BigInt::one());
        Ok(out)
    }
}

/// The Orlik–Solomon algebra of an arrangement in a chosen parity.
#[derive(Debug, Clone)]
pub struct OsAlgebra {
    labels: Arc<Vec<String>>,
    matroid: Arc<Matroid>,
    parity: Parity,
    signature: u64,
}

impl OsAlgebra {
    /// Fails for even parity unless the matroid [is quadratic](Matroid::is_quadratic):
    /// the commutative algebra is presented by `e_s²` and the three-term
    /// relations only, and its nbc monomials form a basis just in that case.
    pub fn new(arr: &Arrangement, parity: Parity) -> Result<Self> {
        OsAlgebra::from_matroid(arr.matroid(), arr.labels().to_vec(), parity)
    }

    pub fn from_matroid(matroid: Matroid, labels: Vec<String>, parity: Parity) -> Result<Self> {
        if parity == Parity::Even && !matroid.is_quadratic() {
            return Err(Error::Unsupported(
                "the commutative algebra needs every broken circuit to contain a broken three-element circuit".into(),
            ));
        }
        let signature = matroid.signature();
        Ok(OsAlgebra { labels: Arc::new(labels), matroid: Arc::new(matroid), parity, signature })
    }

    /// Same matroid, other parity.
    pub fn with_parity(&self, parity: Parity) -> Result<Self> {
        if parity == Parity::Even && !self.matroid.is_quadratic() {
            return OsAlgebra::from_matroid((*self.matroid).clone(), self.labels.to_vec(), parity);
        }
        Ok(OsAlgebra { parity, ..self.clone() })
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn rank(&self) -> usize {
        self.matroid.rank()
    }

    /// Size of the ground set.
    pub fn len(&self) -> usize {
        self.matroid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matroid.is_empty()
    }

    pub(crate) fn signature(&self) -> u64 {
        self.signature
    }

    fn element(&self, degree: usize, terms: Terms) -> AlgebraElement {
        AlgebraElement { parity: self.parity, signature: self.signature, degree, terms }
    }

    pub fn zero(&self, degree: usize) -> AlgebraElement {
        self.element(degree, Terms::new())
    }

    pub fn one(&self) -> AlgebraElement {
        self.basis_element(Monomial::ONE)
    }

    pub fn generator(&self, s: usize) -> AlgebraElement {
        self.basis_element(Monomial::from_indices(&[s]))
    }

    fn basis_element(&self, m: Monomial) -> AlgebraElement {
        self.element(m.degree(), Terms::from([(m, BigInt::one())]))
    }

    /// nbc monomials of degree `p`.
    pub fn basis(&self, p: usize) -> Vec<Monomial> {
        self.matroid.nbc_masks(p).into_iter().map(Monomial).collect()
    }

    /// `dim A_p = |nbc_p|`.
    pub fn dimension(&self, p: usize) -> usize {
        self.matroid.nbc_masks(p).len()
    }

    /// `(dim A_0, …, dim A_r)`.
    pub fn dimensions(&self) -> Vec<usize> {
        (0..=self.rank()).map(|p| self.dimension(p)).collect()
    }

    fn check_indices(&self, t: &[usize]) -> Result<()> {
        let mut seen = 0u64;
        for &i in t {
            if i >= self.len() {
                return Err(Error::IndexOutOfRange { index: i, len: self.len() });
            }
            if seen & (1u64 << i) != 0 {
                return Err(Error::RepeatedIndex(i));
            }
            seen |= 1u64 << i;
        }
        Ok(())
    }

    /// `F(T) = (⟨t_p⟩ ⊂ ⟨t_p, t_{p-1}⟩ ⊂ ⋯ ⊂ ⟨t_p, …, t_1⟩)`.
    pub fn flag_of(&self, t: &[usize]) -> Result<Flag> {
        self.check_indices(t)?;
        if !self.matroid.is_independent(mask_of(t)) {
            return Err(Error::Dependent);
        }
        let mut flats = Vec::with_capacity(t.len());
        let mut span = 0u64;
        for (i, &s) in t.iter().rev().enumerate() {
            span = self.matroid.closure(span | (1u64 << s));
            flats.push(Flat { indices: GroundSubset::from_mask(span), rank: i + 1 });
        }
        Ok(Flag { flats })
    }

    /// The nbc monomial `m(F)` of a flag, or `None` when the flag is not
    /// standard. Picks the minimum of each difference `X_{i+1} − X_i`; the
    /// flag is standard when these minima, read from the largest flat down,
    /// increase.
    pub fn standard_monomial(&self, flag: &Flag) -> Option<Monomial> {
        let mut prev = 0u64;
        let mut prev_min = usize::MAX;
        let mut picked = 0u64;
        for flat in &flag.flats {
            let mask = flat.indices.mask();
            let diff = mask & !prev;
            if diff == 0 {
                return None;
            }
            let min = diff.trailing_zeros() as usize;
            if min >= prev_min {
                return None;
            }
            picked |= 1u64 << min;
            prev_min = min;
            prev = mask;
        }
        Some(Monomial(picked))
    }

    /// Expresses `m(t) = e_{t_1} ⋯ e_{t_p}` (product in the given order) in the
    /// nbc basis. Dependent sets give zero.
    pub fn straighten(&self, t: &[usize]) -> Result<AlgebraElement> {
        self.check_indices(t)?;
        if t.len() > MAX_STRAIGHTEN_DEGREE {
            return Err(Error::TooLarge { what: "straighten degree", limit: MAX_STRAIGHTEN_DEGREE, found: t.len() });
        }
        let mask = mask_of(t);
        let sign = match self.parity {
            Parity::Odd => sorting_sign(t),
            Parity::Even => 1,
        };
        let terms = self.normal_form(mask, &mut HashMap::new());
        let mut out = self.zero(t.len());
        add_scaled(&mut out.terms, &terms, &BigInt::from(sign));
        Ok(out)
    }

    /// Odd parity only: the flag-sum `Σ_σ sgn(σ) m(F(σT))` for `T` taken in
    /// increasing order. Non-standard flags are pruned during the search, so
    /// only permutations that contribute are visited.
    pub fn flag_expansion(&self, t: &[usize]) -> Result<AlgebraElement> {
        if self.parity != Parity::Odd {
            return Err(Error::Unsupported("flag expansion is the anticommutative reduction".into()));
        }
        self.check_indices(t)?;
        if t.len() > MAX_STRAIGHTEN_DEGREE {
            return Err(Error::TooLarge { what: "straighten degree", limit: MAX_STRAIGHTEN_DEGREE, found: t.len() });
        }
        let mut out = self.zero(t.len());
        out.terms = self.flag_sum(mask_of(t));
        Ok(out)
    }

    /// Reduction by rewriting broken circuits, valid in both parities.
    /// Input order is honoured as in [`OsAlgebra::straighten`].
    pub fn broken_circuit_reduction(&self, t: &[usize]) -> Result<AlgebraElement> {
        self.check_indices(t)?;
        let sign = match self.parity {
            Parity::Odd => sorting_sign(t),
            Parity::Even => 1,
        };
        let terms = self.rewrite(mask_of(t), &mut HashMap::new());
        let mut out = self.zero(t.len());
        add_scaled(&mut out.terms, &terms, &BigInt::from(sign));
        Ok(out)
    }

    fn normal_form(&self, mask: u64, memo: &mut HashMap<u64, Terms>) -> Terms {
        match self.parity {
            Parity::Odd => {
                if let Some(hit) = memo.get(&mask) {
                    return hit.clone();
                }
                let terms = self.flag_sum(mask);
                memo.insert(mask, terms.clone());
                terms
            }
            Parity::Even => self.rewrite(mask, memo),
        }
    }

    fn flag_sum(&self, mask: u64) -> Terms {
        let mut terms = Terms::new();
        if !self.matroid.is_independent(mask) {
            return terms;
        }
        let t = mask_indices(mask);
        self.flag_search(&t, 0, 0, usize::MAX, 0, 0, &mut terms);
        terms
    }

    /// Builds `σT` from the back: `placed` marks positions of `t` already used
    /// (the tail of the ordering), `span` is the current flat.
    #[allow(clippy::too_many_arguments)]
    fn flag_search(&self, t: &[usize], placed: u32, span: u64, prev_min: usize, picked: u64, inversions: u32, out: &mut Terms) {
        if placed.count_ones() as usize == t.len() {
            let c = if inversions.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
            let entry = out.entry(Monomial(picked)).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                out.remove(&Monomial(picked));
            }
            return;
        }
        for pos in 0..t.len() {
            if placed & (1 << pos) != 0 {
                continue;
            }
            let next = self.matroid.closure(span | (1u64 << t[pos]));
            let min = (next & !span).trailing_zeros() as usize;
            if min >= prev_min {
                continue;
            }
            // the new element precedes every placed one in σT
            let smaller_placed = (placed & ((1u32 << pos) - 1)).count_ones();
            self.flag_search(t, placed | (1 << pos), next, min, picked | (1u64 << min), inversions + smaller_placed, out);
        }
    }

    /// `e_B = Σ_{j≥2} (−1)^j e_{C − c_j}` for a broken circuit `B = C − c_1`.
    fn rewrite(&self, mask: u64, memo: &mut HashMap<u64, Terms>) -> Terms {
        if let Some(hit) = memo.get(&mask) {
            return hit.clone();
        }
        let m = &self.matroid;
        let result = if !m.is_independent(mask) {
            Terms::new()
        } else if let Some(&circuit) = m.circuits().iter().find(|&&c| {
            let broken = c & (c - 1);
            // the commutative algebra only has the three-term relations
            (self.parity == Parity::Odd || c.count_ones() == 3) && broken & mask == broken
        }) {
            let broken = circuit & (circuit - 1);
            let rest = mask & !broken;
            let base = self.merge_sign(broken, rest);
            let mut acc = Terms::new();
            for (j, cj) in mask_indices(circuit).into_iter().enumerate().skip(1) {
                let replaced = circuit & !(1u64 << cj);
                let sign = base * self.merge_sign(replaced, rest) * if j % 2 == 1 { 1 } else { -1 };
                let sub = self.rewrite(replaced | rest, memo);
                add_scaled(&mut acc, &sub, &BigInt::from(sign));
            }
            acc
        } else {
            Terms::from([(Monomial(mask), BigInt::one())])
        };
        memo.insert(mask, result.clone());
        result
    }

    fn merge_sign(&self, a: u64, b: u64) -> i32 {
        match self.parity {
            Parity::Odd => odd_merge_sign(a, b),
            Parity::Even => 1,
        }
    }

    fn check_same(&self, e: &AlgebraElement) -> Result<()> {
        if e.parity != self.parity || e.signature != self.signature {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    /// Product in the algebra, reduced to the nbc basis.
    pub fn multiply(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_same(a)?;
        self.check_same(b)?;
        let degree = a.degree + b.degree;
        if degree > MAX_STRAIGHTEN_DEGREE {
            return Err(Error::TooLarge { what: "straighten degree", limit: MAX_STRAIGHTEN_DEGREE, found: degree });
        }
        let mut memo = HashMap::new();
        let mut out = self.zero(degree);
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                if ma.0 & mb.0 != 0 {
                    continue;
                }
                let scale = ca * cb * BigInt::from(self.merge_sign(ma.0, mb.0));
                let nf = self.normal_form(ma.0 | mb.0, &mut memo);
                add_scaled(&mut out.terms, &nf, &scale);
            }
        }
        Ok(out)
    }

    /// `m_a · m_b` for basis monomials, reusing a caller-owned memo table.
    pub(crate) fn monomial_product(&self, a: Monomial, b: Monomial, memo: &mut HashMap<u64, Terms>) -> (i32, Terms) {
        if a.0 & b.0 != 0 {
            return (0, Terms::new());
        }
        (self.merge_sign(a.0, b.0), self.normal_form(a.0 | b.0, memo))
    }

    pub fn format_monomial(&self, m: Monomial) -> String {
        if m.0 == 0 {
            return "1".to_string();
        }
        m.indices().iter().map(|&i| self.labels[i].as_str()).collect::<Vec<_>>().join(",")
    }

    /// Canonical text form: signed coefficients times monomials, leading
    /// (largest) monomial first, e.g. `+1·H12,H23 −1·H12,H13`.
    pub fn format_element(&self, e: &AlgebraElement) -> String {
        if e.is_zero() {
            return "0".to_string();
        }
        e.terms
            .iter()
            .rev()
            .map(|(m, c)| format!("{}·{}", format_coefficient(c), self.format_monomial(*m)))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses `H12,H23` into an ordered index list.
    pub fn parse_monomial(&self, text: &str) -> Result<Vec<usize>> {
        text.split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|l| {
                let l = l.trim();
                self.labels.iter().position(|x| x == l).ok_or_else(|| Error::UnknownLabel(l.to_string()))
            })
            .collect()
    }
}

/// `+3` / `−2` with a typographic minus.
pub fn format_coefficient(c: &BigInt) -> String {
    if c.is_negative() {
        format!("\u{2212}{}", c.abs())
    } else {
        format!("+{c}")
    }
}
