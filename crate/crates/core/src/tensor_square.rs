//! The graded tensor square `A ⊗ A` and products of zero-divisors.
//!
//! Multiplication follows the Koszul rule
//! `(u₁ ⊗ v₁)(u₂ ⊗ v₂) = (−1)^{|v₁||u₂|} u₁u₂ ⊗ v₁v₂` with topological degrees,
//! so the sign is always `+1` in even parity. The zero-divisors used
//! throughout are the generator bars `ē_s = 1 ⊗ e_s − e_s ⊗ 1`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::arrangement::{mask_indices, mask_of, subsets_of_size, GroundSubset};
use crate::error::{Error, Result};
use crate::os_algebra::{format_coefficient, Monomial, OsAlgebra, Parity};

/// Default number of subset evaluations for certificate and cup-length
/// searches.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Largest ordered set accepted by the shuffle expansion (`2^|S|` splits).
pub const MAX_SHUFFLE_SET: usize = 24;

type Key = (Monomial, Monomial);

/// Element of `A ⊗ A` in the basis of pairs of nbc monomials. Mixed
/// bidegrees are allowed; [`TensorElement::component`] extracts one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorElement {
    parity: Parity,
    signature: u64,
    terms: BTreeMap<Key, BigInt>,
}

impl TensorElement {
    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn terms(&self) -> &BTreeMap<(Monomial, Monomial), BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, left: Monomial, right: Monomial) -> BigInt {
        self.terms.get(&(left, right)).cloned().unwrap_or_default()
    }

    pub fn bidegrees(&self) -> BTreeSet<(usize, usize)> {
        self.terms.keys().map(|(l, r)| (l.degree(), r.degree())).collect()
    }

    /// Homogeneous component of bidegree `(p, q)`.
    pub fn component(&self, p: usize, q: usize) -> TensorElement {
        let terms = self
            .terms
            .iter()
            .filter(|((l, r), _)| l.degree() == p && r.degree() == q)
            .map(|(k, v)| (*k, v.clone()))
            .collect();
        TensorElement { terms, ..self.clone() }
    }

    pub fn scaled(&self, factor: &BigInt) -> TensorElement {
        let mut out = TensorElement { terms: BTreeMap::new(), ..self.clone() };
        for (k, v) in &self.terms {
            accumulate(&mut out.terms, *k, v * factor);
        }
        out
    }

    /// First nonzero term in canonical order.
    pub fn leading_witness(&self) -> Option<Witness> {
        self.terms.iter().next().map(|((l, r), c)| Witness { left: *l, right: *r, coeff: c.clone() })
    }
}

fn accumulate(terms: &mut BTreeMap<Key, BigInt>, key: Key, value: BigInt) {
    if value.is_zero() {
        return;
    }
    let entry = terms.entry(key).or_insert_with(BigInt::zero);
    *entry += value;
    if entry.is_zero() {
        terms.remove(&key);
    }
}

/// Zero-divisor `ē_s = 1 ⊗ e_s − e_s ⊗ 1` attached to hyperplane `index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ZeroDivisor {
    pub index: usize,
}

/// A nonzero coefficient of a tensor expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub left: Monomial,
    pub right: Monomial,
    pub coeff: BigInt,
}

/// `S = T₁ ⊔ T₂` with `T₁` independent and `T₂ ∪ {s}` independent for every
/// `s ∈ S`, together with a nonzero coefficient of `π = ∏_{s∈S} ē_s` taken in
/// ground-set order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonvanishingCertificate {
    pub subset: GroundSubset,
    pub t1: GroundSubset,
    pub t2: GroundSubset,
    pub witness: Witness,
}

/// One term `(−1)^{|T|} sign(σ) · m(T) ⊗ m(T′)` of the shuffle expansion,
/// before reduction to the nbc basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShuffleTerm {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub sign: i32,
}

/// Result of the zero-divisor cup-length search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CupLength {
    /// Longest nonzero product of generator zero-divisors found.
    pub length: usize,
    /// Factors of that product, in multiplication order.
    pub factors: Vec<usize>,
    pub witness: Option<Witness>,
    pub certificate: Option<NonvanishingCertificate>,
    /// No product longer than this can be nonzero.
    pub ceiling: usize,
    /// `false` when the search budget ran out before the levels above
    /// `length` were cleared; `length` is then only a lower bound.
    pub complete: bool,
}

#[derive(Serialize)]
struct WitnessJson {
    left: String,
    right: String,
    coeff: serde_json::Value,
}

#[derive(Serialize)]
struct CertificateJson {
    subset: Vec<String>,
    #[serde(rename = "T1")]
    t1: Vec<String>,
    #[serde(rename = "T2")]
    t2: Vec<String>,
    witness: WitnessJson,
}

pub(crate) fn bigint_json(c: &BigInt) -> serde_json::Value {
    match i64::try_from(c) {
        Ok(v) => serde_json::Value::from(v),
        Err(_) => serde_json::Value::from(c.to_string()),
    }
}

impl NonvanishingCertificate {
    /// `{"subset": [...], "T1": [...], "T2": [...], "witness": {"left", "right", "coeff"}}`.
    pub fn to_json(&self, alg: &OsAlgebra) -> serde_json::Value {
        let names = |s: &GroundSubset| s.indices().iter().map(|&i| alg.labels()[i].clone()).collect();
        serde_json::to_value(CertificateJson {
            subset: names(&self.subset),
            t1: names(&self.t1),
            t2: names(&self.t2),
            witness: WitnessJson {
                left: alg.format_monomial(self.witness.left),
                right: alg.format_monomial(self.witness.right),
                coeff: bigint_json(&self.witness.coeff),
            },
        })
        .expect("certificate serializes")
    }
}

/// `A ⊗ A` over a fixed algebra.
#[derive(Debug, Clone)]
pub struct TensorSquare {
    alg: OsAlgebra,
}

impl TensorSquare {
    pub fn new(alg: OsAlgebra) -> Self {
        TensorSquare { alg }
    }

    pub fn algebra(&self) -> &OsAlgebra {
        &self.alg
    }

    fn element(&self, terms: BTreeMap<Key, BigInt>) -> TensorElement {
        TensorElement { parity: self.alg.parity(), signature: self.alg.signature(), terms }
    }

    pub fn zero(&self) -> TensorElement {
        self.element(BTreeMap::new())
    }

    /// `1 ⊗ 1`.
    pub fn unit(&self) -> TensorElement {
        self.simple(Monomial::ONE, Monomial::ONE, BigInt::one())
    }

    /// `c · (left ⊗ right)` for nbc monomials.
    pub fn simple(&self, left: Monomial, right: Monomial, coeff: BigInt) -> TensorElement {
        let mut terms = BTreeMap::new();
        accumulate(&mut terms, (left, right), coeff);
        self.element(terms)
    }

    pub fn zero_divisor(&self, z: ZeroDivisor) -> TensorElement {
        let e = Monomial::from_indices(&[z.index]);
        let mut terms = BTreeMap::new();
        accumulate(&mut terms, (Monomial::ONE, e), BigInt::one());
        accumulate(&mut terms, (e, Monomial::ONE), -BigInt::one());
        self.element(terms)
    }

    fn check(&self, x: &TensorElement) -> Result<()> {
        if x.parity != self.alg.parity() || x.signature != self.alg.signature() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    /// Bilinear product with the Koszul sign from topological degrees.
    pub fn tensor_multiply(&self, x: &TensorElement, y: &TensorElement) -> Result<TensorElement> {
        self.check(x)?;
        self.check(y)?;
        let gen_deg = self.alg.parity().generator_degree();
        let mut memo = HashMap::new();
        let mut out = BTreeMap::new();
        for ((u1, v1), c1) in &x.terms {
            for ((u2, v2), c2) in &y.terms {
                if u1.mask() & u2.mask() != 0 || v1.mask() & v2.mask() != 0 {
                    continue;
                }
                let koszul = if (v1.degree() * gen_deg * u2.degree() * gen_deg).is_multiple_of(2) { 1 } else { -1 };
                let (sl, left) = self.alg.monomial_product(*u1, *u2, &mut memo);
                if left.is_empty() {
                    continue;
                }
                let (sr, right) = self.alg.monomial_product(*v1, *v2, &mut memo);
                if right.is_empty() {
                    continue;
                }
                let scale = c1 * c2 * BigInt::from(koszul * sl * sr);
                for (lm, lc) in &left {
                    for (rm, rc) in &right {
                        accumulate(&mut out, (*lm, *rm), &scale * lc * rc);
                    }
                }
            }
        }
        Ok(self.element(out))
    }

    /// `∏ ē_s` evaluated left to right in the given order. Repeats are
    /// allowed (they matter in even parity, where `ē² ≠ 0`).
    pub fn bar_product_direct(&self, factors: &[usize]) -> Result<TensorElement> {
        if let Some(&index) = factors.iter().find(|&&i| i >= self.alg.len()) {
            return Err(Error::IndexOutOfRange { index, len: self.alg.len() });
        }
        let mut acc = self.unit();
        for &s in factors {
            acc = self.tensor_multiply(&acc, &self.zero_divisor(ZeroDivisor { index: s }))?;
            if acc.is_zero() {
                break;
            }
        }
        Ok(acc)
    }

    fn check_shuffle_input(&self, s: &[usize]) -> Result<()> {
        if self.alg.parity() != Parity::Odd {
            return Err(Error::Unsupported("the shuffle expansion holds for anticommuting generators; use the direct product".into()));
        }
        if s.len() > MAX_SHUFFLE_SET {
            return Err(Error::TooLarge { what: "shuffle set", limit: MAX_SHUFFLE_SET, found: s.len() });
        }
        let mut seen = 0u64;
        for &i in s {
            if i >= self.alg.len() {
                return Err(Error::IndexOutOfRange { index: i, len: self.alg.len() });
            }
            if seen & (1u64 << i) != 0 {
                return Err(Error::RepeatedIndex(i));
            }
            seen |= 1u64 << i;
        }
        Ok(())
    }

    fn split_term(&self, s: &[usize], choice: u32) -> Option<ShuffleTerm> {
        let m = self.alg.matroid();
        let (mut left, mut right) = (Vec::new(), Vec::new());
        let mut inversions = 0usize;
        for (pos, &x) in s.iter().enumerate() {
            if choice & (1 << pos) != 0 {
                // elements of T′ already seen must move after x
                inversions += right.len();
                left.push(x);
            } else {
                right.push(x);
            }
        }
        if !m.is_independent(mask_of(&left)) || !m.is_independent(mask_of(&right)) {
            return None;
        }
        let sign = if (left.len() + inversions).is_multiple_of(2) { 1 } else { -1 };
        Some(ShuffleTerm { left, right, sign })
    }

    /// The term stream `(−1)^{|T|} sign(σ) m(T) ⊗ m(T′)` over complementary
    /// independent pairs, with `T`, `T′` in the order induced from `s`.
    pub fn shuffle_terms(&self, s: &[usize]) -> Result<Vec<ShuffleTerm>> {
        self.check_shuffle_input(s)?;
        Ok((0..1u32 << s.len()).filter_map(|c| self.split_term(s, c)).collect())
    }

    /// `π = ∏_{s∈S} ē_s` through the shuffle expansion (odd parity only).
    pub fn bar_product_shuffle(&self, s: &[usize]) -> Result<TensorElement> {
        self.check_shuffle_input(s)?;
        if s.len() > 2 * self.alg.rank() {
            return Ok(self.zero());
        }
        let partials: Vec<BTreeMap<Key, BigInt>> = (0..1u32 << s.len())
            .into_par_iter()
            .filter_map(|c| self.split_term(s, c))
            .map(|term| -> Result<BTreeMap<Key, BigInt>> {
                let left = self.alg.straighten(&term.left)?;
                let right = self.alg.straighten(&term.right)?;
                let mut out = BTreeMap::new();
                for (lm, lc) in left.terms() {
                    for (rm, rc) in right.terms() {
                        accumulate(&mut out, (*lm, *rm), BigInt::from(term.sign) * lc * rc);
                    }
                }
                Ok(out)
            })
            .collect::<Result<_>>()?;
        let mut total = BTreeMap::new();
        for part in partials {
            for (k, v) in part {
                accumulate(&mut total, k, v);
            }
        }
        Ok(self.element(total))
    }

    /// Searches for a [`NonvanishingCertificate`], lexicographically. First
    /// tries `|S| = 2r − 1` with `T₁` a basis and `|T₂| = r − 1`; otherwise
    /// returns the largest smaller split found. `None` if nothing qualifies
    /// within `budget` evaluations.
    pub fn find_certificate(&self, budget: u64) -> Option<NonvanishingCertificate> {
        let m = self.alg.matroid();
        let (n, r) = (m.len(), m.rank());
        if r == 0 {
            return None;
        }
        let mut spent = 0u64;
        for t1 in subsets_of_size(n, r) {
            let t1_mask = mask_of(&t1);
            if !m.is_independent(t1_mask) {
                continue;
            }
            let rest: Vec<usize> = (0..n).filter(|i| t1_mask & (1u64 << i) == 0).collect();
            for pick in subsets_of_size(rest.len(), r - 1) {
                spent += 1;
                if spent > budget {
                    return None;
                }
                let t2_mask = mask_of(&pick.iter().map(|&k| rest[k]).collect::<Vec<_>>());
                if !m.is_independent(t2_mask) || !t1.iter().all(|&s| m.is_independent(t2_mask | (1u64 << s))) {
                    continue;
                }
                if let Some(cert) = self.certify(t1_mask, t2_mask) {
                    return Some(cert);
                }
            }
        }
        // Smaller splits: T₁ ⊆ S \ ⟨T₂⟩, taken greedily.
        let mut best: Option<(u64, u64)> = None;
        for q in (0..r).rev() {
            for t2 in subsets_of_size(n, q) {
                spent += 1;
                if spent > budget {
                    break;
                }
                let t2_mask = mask_of(&t2);
                if !m.is_independent(t2_mask) {
                    continue;
                }
                let outside = m.full() & !m.closure(t2_mask);
                let mut t1_mask = 0u64;
                for s in mask_indices(outside) {
                    if m.is_independent(t1_mask | (1u64 << s)) {
                        t1_mask |= 1u64 << s;
                    }
                }
                let size = (t1_mask | t2_mask).count_ones();
                if best.is_none_or(|(a, b)| (a | b).count_ones() < size) {
                    best = Some((t1_mask, t2_mask));
                }
            }
        }
        best.and_then(|(t1, t2)| self.certify(t1, t2))
    }

    fn certify(&self, t1: u64, t2: u64) -> Option<NonvanishingCertificate> {
        let subset = t1 | t2;
        if subset == 0 {
            return None;
        }
        let pi = self.bar_product_direct(&mask_indices(subset)).ok()?;
        let witness = pi.leading_witness()?;
        Some(NonvanishingCertificate {
            subset: GroundSubset::from_mask(subset),
            t1: GroundSubset::from_mask(t1),
            t2: GroundSubset::from_mask(t2),
            witness,
        })
    }

    /// Re-checks the split hypotheses by independence tests and re-expands
    /// `π` to confirm the witness coefficient.
    pub fn verify_certificate(&self, cert: &NonvanishingCertificate) -> Result<bool> {
        let m = self.alg.matroid();
        let (s, t1, t2) = (cert.subset.mask(), cert.t1.mask(), cert.t2.mask());
        let hypotheses = t1 & t2 == 0
            && t1 | t2 == s
            && m.is_independent(t1)
            && mask_indices(s).iter().all(|&x| m.is_independent(t2 | (1u64 << x)));
        if !hypotheses {
            return Ok(false);
        }
        let pi = self.bar_product_direct(cert.subset.indices())?;
        let c = pi.coefficient(cert.witness.left, cert.witness.right);
        Ok(!c.is_zero() && c == cert.witness.coeff)
    }

    /// Longest nonzero product of generator zero-divisors.
    ///
    /// Odd parity: a product of `2r` bars always vanishes, so the ceiling is
    /// `min(2r − 1, |S|)`. A certificate gives the starting length; levels
    /// above it are searched exhaustively within `budget`.
    ///
    /// Even parity: `(ē_s)² = −2 e_s ⊗ e_s`, so squaring the bars of a basis
    /// `B` gives `(−2)^r m(B) ⊗ m(B) ≠ 0`, which reaches the ceiling `2r`.
    pub fn zd_cup_length(&self, budget: u64) -> Result<CupLength> {
        let m = self.alg.matroid();
        let (n, r) = (m.len(), m.rank());
        match self.alg.parity() {
            Parity::Even => {
                let mut basis = 0u64;
                for s in 0..n {
                    if m.is_independent(basis | (1u64 << s)) {
                        basis |= 1u64 << s;
                    }
                }
                let factors: Vec<usize> = mask_indices(basis).into_iter().flat_map(|s| [s, s]).collect();
                let pi = self.bar_product_direct(&factors)?;
                let witness = pi.leading_witness();
                let length = if witness.is_some() { factors.len() } else { 0 };
                Ok(CupLength { length, factors, witness, certificate: None, ceiling: 2 * r, complete: true })
            }
            Parity::Odd => {
                let ceiling = (2 * r).saturating_sub(1).min(n);
                let certificate = self.find_certificate(budget);
                let mut out = CupLength {
                    length: 0,
                    factors: Vec::new(),
                    witness: None,
                    certificate: certificate.clone(),
                    ceiling,
                    complete: true,
                };
                if let Some(cert) = &certificate {
                    out.length = cert.subset.len();
                    out.factors = cert.subset.indices().to_vec();
                    out.witness = Some(cert.witness.clone());
                }
                let mut spent = 0u64;
                'levels: for k in (out.length + 1..=ceiling).rev() {
                    for subset in subsets_of_size(n, k) {
                        spent += 1;
                        if spent > budget {
                            out.complete = false;
                            break 'levels;
                        }
                        let pi = self.bar_product_direct(&subset)?;
                        if let Some(w) = pi.leading_witness() {
                            out.length = k;
                            out.factors = subset;
                            out.witness = Some(w);
                            break 'levels;
                        }
                    }
                }
                Ok(out)
            }
        }
    }

    pub fn format_monomial(&self, m: Monomial) -> String {
        self.alg.format_monomial(m)
    }

    /// `+4·(H12,H13)⊗(H12,H13)`, leading term first; `0` for zero.
    pub fn format(&self, x: &TensorElement) -> String {
        if x.is_zero() {
            return "0".to_string();
        }
        x.terms
            .iter()
            .rev()
            .map(|((l, r), c)| {
                format!("{}·({})⊗({})", format_coefficient(c), self.alg.format_monomial(*l), self.alg.format_monomial(*r))
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}
