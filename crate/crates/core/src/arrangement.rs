//! Central hyperplane arrangements over the rationals and their matroids.
//!
//! An [`Arrangement`] stores one normal vector per hyperplane with exact
//! rational entries. The order of the hyperplanes is the canonical ground-set
//! order used everywhere downstream (broken circuits and nbc bases depend on
//! it). Linear-algebra questions (rank, independence, closure, circuits) are
//! answered by exact elimination; [`Matroid`] caches the circuits once and then
//! answers the same questions combinatorially on bitmasks.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Ground sets are indexed through `u64` masks.
pub const MAX_HYPERPLANES: usize = 64;

/// Attempts allowed when sampling a generic arrangement.
pub const GENERIC_RETRY_CAP: usize = 10_000;

/// Parses `[+-]digits[/digits]`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::MalformedRational(text.to_string());
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let digits = num.strip_prefix(['+', '-']).unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let numerator: BigInt = num.parse().map_err(|_| bad())?;
    let denominator: BigInt = match den {
        Some(d) if !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()) => d.parse().map_err(|_| bad())?,
        Some(_) => return Err(bad()),
        None => BigInt::from(1),
    };
    if denominator.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(numerator, denominator))
}

fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

// ---------------------------------------------------------------------------
// bitmask helpers

pub(crate) fn mask_indices(mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

pub(crate) fn mask_of(indices: &[usize]) -> u64 {
    indices.iter().fold(0, |m, &i| m | (1u64 << i))
}

/// Lexicographic comparison of the increasing index lists of two masks,
/// shorter lists first.
pub(crate) fn mask_cmp(a: u64, b: u64) -> Ordering {
    a.count_ones().cmp(&b.count_ones()).then_with(|| {
        let diff = a ^ b;
        if diff == 0 {
            Ordering::Equal
        } else if a & (diff & diff.wrapping_neg()) != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    })
}

// ---------------------------------------------------------------------------

/// Strictly increasing list of hyperplane indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroundSubset(Vec<usize>);

impl GroundSubset {
    pub fn new(indices: Vec<usize>, ground_size: usize) -> Result<Self> {
        if let Some(&index) = indices.iter().find(|&&i| i >= ground_size) {
            return Err(Error::IndexOutOfRange { index, len: ground_size });
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotIncreasing);
        }
        Ok(GroundSubset(indices))
    }

    pub fn empty() -> Self {
        GroundSubset(Vec::new())
    }

    pub fn from_mask(mask: u64) -> Self {
        GroundSubset(mask_indices(mask))
    }

    pub fn mask(&self) -> u64 {
        mask_of(&self.0)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.0.binary_search(&index).is_ok()
    }
}

/// A closed subset together with its rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Flat {
    pub indices: GroundSubset,
    pub rank: usize,
}

/// Chain of flats `X_1 ⊂ X_2 ⊂ … ⊂ X_p` with `rank(X_i) = i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Flag {
    pub flats: Vec<Flat>,
}

impl Flag {
    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }
}

#[derive(Deserialize)]
struct HyperplaneDoc {
    label: String,
    normal: Vec<String>,
}

#[derive(Deserialize)]
struct ArrangementDoc {
    ambient_dim: usize,
    hyperplanes: Vec<HyperplaneDoc>,
}

/// A central arrangement of hyperplanes in `C^ℓ` defined over `Q`.
#[derive(Debug, Clone, PartialEq)]
pub struct Arrangement {
    id: String,
    ambient_dim: usize,
    labels: Vec<String>,
    normals: Vec<Vec<Rational>>,
    rank: usize,
}

impl Arrangement {
    /// Validates and builds an arrangement. The hyperplane order given here
    /// is the canonical ground-set order.
    pub fn new(id: impl Into<String>, ambient_dim: usize, hyperplanes: Vec<(String, Vec<Rational>)>) -> Result<Self> {
        if ambient_dim == 0 {
            return Err(Error::ZeroDimension);
        }
        if hyperplanes.is_empty() {
            return Err(Error::EmptyArrangement);
        }
        if hyperplanes.len() > MAX_HYPERPLANES {
            return Err(Error::TooLarge { what: "hyperplane count", limit: MAX_HYPERPLANES, found: hyperplanes.len() });
        }
        let mut seen = HashSet::new();
        for (label, normal) in &hyperplanes {
            if label.is_empty() || label.contains([',', ' ']) {
                return Err(Error::MalformedDocument(format!("invalid label {label:?}")));
            }
            if !seen.insert(label.as_str()) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
            if normal.len() != ambient_dim {
                return Err(Error::DimensionMismatch { label: label.clone(), expected: ambient_dim, found: normal.len() });
            }
            if normal.iter().all(Zero::is_zero) {
                return Err(Error::ZeroNormal { label: label.clone() });
            }
        }
        for i in 0..hyperplanes.len() {
            for j in i + 1..hyperplanes.len() {
                if linalg::rank(&[&hyperplanes[i].1, &hyperplanes[j].1]) < 2 {
                    return Err(Error::ProportionalNormals {
                        first: hyperplanes[i].0.clone(),
                        second: hyperplanes[j].0.clone(),
                    });
                }
            }
        }
        let (labels, normals): (Vec<_>, Vec<_>) = hyperplanes.into_iter().unzip();
        let rows: Vec<&[Rational]> = normals.iter().map(Vec::as_slice).collect();
        let rank = linalg::rank(&rows);
        Ok(Arrangement { id: id.into(), ambient_dim, labels, normals, rank })
    }

    /// Parses the JSON arrangement format
    /// `{"ambient_dim": ℓ, "hyperplanes": [{"label": "H1", "normal": ["1", "-3/7", ...]}, ...]}`.
    pub fn parse_json(text: &str) -> Result<Self> {
        let doc: ArrangementDoc = serde_json::from_str(text).map_err(|e| Error::MalformedDocument(e.to_string()))?;
        let hyperplanes = doc
            .hyperplanes
            .into_iter()
            .map(|h| {
                let normal = h.normal.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?;
                Ok((h.label, normal))
            })
            .collect::<Result<Vec<_>>>()?;
        Arrangement::new("file", doc.ambient_dim, hyperplanes)
    }

    pub fn to_json(&self) -> String {
        let hyperplanes: Vec<serde_json::Value> = self
            .labels
            .iter()
            .zip(&self.normals)
            .map(|(label, normal)| {
                serde_json::json!({
                    "label": label,
                    "normal": normal.iter().map(format_rational).collect::<Vec<_>>(),
                })
            })
            .collect();
        serde_json::to_string_pretty(&serde_json::json!({
            "ambient_dim": self.ambient_dim,
            "hyperplanes": hyperplanes,
        }))
        .expect("arrangement serializes")
    }

    /// `braid:n` or `generic:r:n:seed`.
    pub fn named(spec: &str) -> Result<Self> {
        let unknown = || Error::UnknownArrangement(spec.to_string());
        let parts: Vec<&str> = spec.split(':').collect();
        let num = |s: &str| s.parse::<usize>().map_err(|_| unknown());
        match parts.as_slice() {
            ["braid", n] => Arrangement::braid(num(n)?),
            ["generic", r, n, seed] => {
                let seed = seed.parse::<u64>().map_err(|_| unknown())?;
                Arrangement::generic(num(r)?, num(n)?, seed)
            }
            _ => Err(unknown()),
        }
    }

    /// The reflection arrangement of type `A_{n-1}`: hyperplanes `z_i = z_j`
    /// in `C^n`, ordered lexicographically by `(i, j)`.
    pub fn braid(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::UnknownArrangement(format!("braid:{n}")));
        }
        let zero = Rational::zero();
        let one = Rational::from_integer(1.into());
        let mut hyperplanes = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut normal = vec![zero.clone(); n];
                normal[i] = one.clone();
                normal[j] = -one.clone();
                hyperplanes.push((braid_label(n, i + 1, j + 1), normal));
            }
        }
        Arrangement::new(format!("braid:{n}"), n, hyperplanes)
    }

    /// `n` hyperplanes in `C^r` with every `r`-subset independent, sampled
    /// deterministically from `seed` as small integer vectors.
    pub fn generic(r: usize, n: usize, seed: u64) -> Result<Self> {
        let spec = format!("generic:{r}:{n}:{seed}");
        if r == 0 || n < r {
            return Err(Error::UnknownArrangement(spec));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut accepted: Vec<Vec<Rational>> = Vec::with_capacity(n);
        let mut attempts = 0;
        while accepted.len() < n {
            if attempts == GENERIC_RETRY_CAP {
                return Err(Error::GenerationFailed { spec, attempts });
            }
            attempts += 1;
            let candidate: Vec<Rational> =
                (0..r).map(|_| Rational::from_integer(rng.gen_range(-4i64..=4).into())).collect();
            if candidate.iter().all(Zero::is_zero) {
                continue;
            }
            let k = (r - 1).max(1).min(accepted.len());
            let ok = subsets_of_size(accepted.len(), k).all(|subset| {
                let mut rows: Vec<&[Rational]> = subset.iter().map(|&i| accepted[i].as_slice()).collect();
                rows.push(&candidate);
                linalg::rank(&rows) == rows.len()
            });
            if ok {
                accepted.push(candidate);
            }
        }
        let hyperplanes = accepted.into_iter().enumerate().map(|(i, v)| (format!("H{}", i + 1), v)).collect();
        Arrangement::new(spec, r, hyperplanes)
    }

    /// Product arrangement in `C^{ℓ1} ⊕ C^{ℓ2}`.
    pub fn direct_sum(&self, other: &Arrangement) -> Result<Self> {
        let dim = self.ambient_dim + other.ambient_dim;
        let zero = Rational::zero();
        let mut hyperplanes = Vec::new();
        for (label, normal) in self.labels.iter().zip(&self.normals) {
            let mut v = normal.clone();
            v.resize(dim, zero.clone());
            hyperplanes.push((label.clone(), v));
        }
        for (label, normal) in other.labels.iter().zip(&other.normals) {
            let mut v = vec![zero.clone(); self.ambient_dim];
            v.extend(normal.iter().cloned());
            hyperplanes.push((label.clone(), v));
        }
        Arrangement::new(format!("{}+{}", self.id, other.id), dim, hyperplanes)
    }

    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.id = id.into();
        self
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Number of hyperplanes.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn normal(&self, index: usize) -> &[Rational] {
        &self.normals[index]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels.iter().position(|l| l == label).ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Resolves a comma-separated label list, keeping order and repeats.
    pub fn parse_labels(&self, text: &str) -> Result<Vec<usize>> {
        if text.trim().is_empty() {
            return Ok(Vec::new());
        }
        text.split(',').map(|l| self.index_of(l.trim())).collect()
    }

    pub fn subset(&self, indices: Vec<usize>) -> Result<GroundSubset> {
        GroundSubset::new(indices, self.len())
    }

    pub fn format_subset(&self, indices: &[usize]) -> Vec<String> {
        indices.iter().map(|&i| self.labels[i].clone()).collect()
    }

    /// Exact rank of the normals indexed by `indices`.
    pub fn rank_of(&self, indices: &[usize]) -> usize {
        let rows: Vec<&[Rational]> = indices.iter().map(|&i| self.normals[i].as_slice()).collect();
        linalg::rank(&rows)
    }

    pub fn is_independent(&self, t: &GroundSubset) -> bool {
        self.rank_of(t.indices()) == t.len()
    }

    /// `{s : rank(t ∪ {s}) = rank(t)}`.
    pub fn closure(&self, t: &GroundSubset) -> Flat {
        let rank = self.rank_of(t.indices());
        let mut work = t.indices().to_vec();
        let indices = (0..self.len())
            .filter(|&s| {
                if t.contains(s) {
                    return true;
                }
                work.push(s);
                let same = self.rank_of(&work) == rank;
                work.pop();
                same
            })
            .collect();
        Flat { indices: GroundSubset(indices), rank }
    }

    /// All minimal dependent subsets with at most `max_size` elements, sorted
    /// lexicographically. Enumeration grows independent sets level by level;
    /// a candidate is tested only when all of its facets are independent.
    /// Exhaustive, so practical for ground sets up to about two dozen
    /// hyperplanes.
    pub fn circuits(&self, max_size: usize) -> Vec<GroundSubset> {
        let n = self.len();
        let mut circuits = Vec::new();
        let mut level: Vec<u64> = vec![0];
        let mut size = 0;
        while size < max_size && !level.is_empty() {
            let known: HashSet<u64> = level.iter().copied().collect();
            let mut next = Vec::new();
            for &base in &level {
                let start = if base == 0 { 0 } else { 64 - base.leading_zeros() as usize };
                for s in start..n {
                    let cand = base | (1u64 << s);
                    if !mask_indices(base).iter().all(|&x| known.contains(&(cand & !(1u64 << x)))) {
                        continue;
                    }
                    if self.rank_of(&mask_indices(cand)) == size + 1 {
                        next.push(cand);
                    } else {
                        circuits.push(cand);
                    }
                }
            }
            level = next;
            size += 1;
        }
        let mut out: Vec<GroundSubset> = circuits.into_iter().map(GroundSubset::from_mask).collect();
        out.sort();
        out
    }

    /// The `p`-element nbc sets, sorted lexicographically.
    pub fn nbc_sets(&self, p: usize) -> Vec<GroundSubset> {
        self.matroid().nbc_masks(p).into_iter().map(GroundSubset::from_mask).collect()
    }

    /// Connected components of the matroid: classes of the transitive closure
    /// of "lie on a common circuit". Sorted by smallest element.
    pub fn connected_components(&self) -> Vec<GroundSubset> {
        self.matroid().connected_components()
    }

    /// Builds the combinatorial oracle (enumerates all circuits once).
    pub fn matroid(&self) -> Matroid {
        let circuits = self.circuits(self.rank + 1).iter().map(GroundSubset::mask).collect();
        Matroid::from_circuits(self.len(), circuits)
    }
}

pub(crate) fn braid_label(n: usize, i: usize, j: usize) -> String {
    if n <= 9 {
        format!("H{i}{j}")
    } else {
        format!("H{i}_{j}")
    }
}

/// Iterator over all `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut current: Option<Vec<usize>> = if k <= n { Some((0..k).collect()) } else { None };
    std::iter::from_fn(move || {
        let out = current.clone()?;
        let mut next = out.clone();
        let mut i = k;
        let advanced = loop {
            if i == 0 {
                break false;
            }
            i -= 1;
            if next[i] < n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                break true;
            }
        };
        current = if advanced { Some(next) } else { None };
        Some(out)
    })
}

// ---------------------------------------------------------------------------

/// Combinatorial matroid oracle on at most 64 elements, driven entirely by
/// the list of circuits.
#[derive(Debug, Clone)]
pub struct Matroid {
    n: usize,
    rank: usize,
    circuits: Vec<u64>,
    broken: Vec<u64>,
    /// `through[s]` holds `C \ {s}` for every circuit `C ∋ s`.
    through: Vec<Vec<u64>>,
}

impl Matroid {
    pub fn from_circuits(n: usize, mut circuits: Vec<u64>) -> Self {
        circuits.sort_by(|&a, &b| mask_cmp(a, b));
        circuits.dedup();
        let mut through = vec![Vec::new(); n];
        for &c in &circuits {
            for s in mask_indices(c) {
                through[s].push(c & !(1u64 << s));
            }
        }
        let mut broken: Vec<u64> = circuits.iter().map(|&c| c & (c - 1)).collect();
        broken.sort_by(|&a, &b| mask_cmp(a, b));
        broken.dedup();
        let mut m = Matroid { n, rank: 0, circuits, broken, through };
        m.rank = m.rank_of(m.full());
        m
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn circuits(&self) -> &[u64] {
        &self.circuits
    }

    pub fn broken_circuits(&self) -> &[u64] {
        &self.broken
    }

    pub fn is_independent(&self, mask: u64) -> bool {
        !self.circuits.iter().any(|&c| c & !mask == 0)
    }

    /// Greedy rank.
    pub fn rank_of(&self, mask: u64) -> usize {
        let mut basis = 0u64;
        for s in mask_indices(mask) {
            let cand = basis | (1u64 << s);
            if !self.through[s].iter().any(|&rest| rest & !basis == 0) {
                basis = cand;
            }
        }
        basis.count_ones() as usize
    }

    pub fn closure(&self, mask: u64) -> u64 {
        let mut out = mask;
        for s in 0..self.n {
            if mask & (1u64 << s) == 0 && self.through[s].iter().any(|&rest| rest & !mask == 0) {
                out |= 1u64 << s;
            }
        }
        out
    }

    /// Whether every broken circuit contains a broken three-element circuit.
    /// Then the three-term relations alone reduce any monomial to the nbc
    /// monomials.
    pub fn is_quadratic(&self) -> bool {
        let broken_triangles: Vec<u64> =
            self.circuits.iter().filter(|c| c.count_ones() == 3).map(|&c| c & (c - 1)).collect();
        self.circuits.iter().all(|&c| {
            let broken = c & (c - 1);
            c.count_ones() <= 3 || broken_triangles.iter().any(|&t| t & !broken == 0)
        })
    }

    /// Contains no broken circuit.
    pub fn is_nbc(&self, mask: u64) -> bool {
        !self.broken.iter().any(|&b| b & !mask == 0)
    }

    /// `p`-element nbc sets, sorted lexicographically.
    pub fn nbc_masks(&self, p: usize) -> Vec<u64> {
        let mut level = vec![0u64];
        for _ in 0..p {
            let mut next = Vec::new();
            for &base in &level {
                let start = if base == 0 { 0 } else { 64 - base.leading_zeros() as usize };
                for s in start..self.n {
                    let cand = base | (1u64 << s);
                    if self.is_nbc(cand) {
                        next.push(cand);
                    }
                }
            }
            level = next;
        }
        level.sort_by(|&a, &b| mask_cmp(a, b));
        level
    }

    pub fn connected_components(&self) -> Vec<GroundSubset> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut y = x;
            while parent[y] != r {
                let next = parent[y];
                parent[y] = r;
                y = next;
            }
            r
        }
        for &c in &self.circuits {
            let idx = mask_indices(c);
            for w in idx.windows(2) {
                let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut groups: Vec<u64> = Vec::new();
        let mut root_slot = vec![usize::MAX; self.n];
        for s in 0..self.n {
            let r = find(&mut parent, s);
            if root_slot[r] == usize::MAX {
                root_slot[r] = groups.len();
                groups.push(0);
            }
            groups[root_slot[r]] |= 1u64 << s;
        }
        groups.into_iter().map(GroundSubset::from_mask).collect()
    }

    /// Stable fingerprint of the circuit structure, used to detect elements
    /// of different algebras being mixed.
    pub fn signature(&self) -> u64 {
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.n.hash(&mut h);
        self.circuits.hash(&mut h);
        h.finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    fn arr(dim: usize, normals: &[&[&str]]) -> Result<Arrangement> {
        let hs = normals
            .iter()
            .enumerate()
            .map(|(i, v)| (format!("H{}", i + 1), v.iter().map(|s| q(s)).collect()))
            .collect();
        Arrangement::new("test", dim, hs)
    }

    #[test]
    fn rational_grammar() {
        assert_eq!(q("-3/7"), Rational::new((-3).into(), 7.into()));
        assert_eq!(q("+4/6"), Rational::new(2.into(), 3.into()));
        assert_eq!(q("0"), Rational::zero());
        for bad in ["", "-", "1/", "/2", "1/0", "1.5", "a", "1/-2", " 1", "--1"] {
            assert!(matches!(parse_rational(bad), Err(Error::MalformedRational(_))), "{bad}");
        }
    }

    #[test]
    fn parse_examples() {
        let a = Arrangement::parse_json(
            r#"{"ambient_dim":2,"hyperplanes":[{"label":"x","normal":["1","0"]},{"label":"y","normal":["0","1"]},{"label":"d","normal":["1","-1"]}]}"#,
        )
        .unwrap();
        assert_eq!(a.rank(), 2);
        let braid = Arrangement::parse_json(
            r#"{"ambient_dim":3,"hyperplanes":[{"label":"H12","normal":["1","-1","0"]},{"label":"H13","normal":["1","0","-1"]},{"label":"H23","normal":["0","1","-1"]}]}"#,
        )
        .unwrap();
        assert_eq!(braid.rank(), 2);
        assert!(matches!(arr(2, &[&["1", "0"], &["2", "0"]]), Err(Error::ProportionalNormals { .. })));
    }

    #[test]
    fn parse_errors_are_distinct() {
        assert!(matches!(arr(2, &[&["0", "0"]]), Err(Error::ZeroNormal { .. })));
        assert!(matches!(arr(2, &[&["1", "0", "0"]]), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(
            Arrangement::parse_json(r#"{"ambient_dim":1,"hyperplanes":[{"label":"a","normal":["1/0"]}]}"#),
            Err(Error::MalformedRational(_))
        ));
        assert!(matches!(
            Arrangement::parse_json(
                r#"{"ambient_dim":2,"hyperplanes":[{"label":"a","normal":["1","0"]},{"label":"a","normal":["0","1"]}]}"#
            ),
            Err(Error::DuplicateLabel(_))
        ));
        assert!(matches!(Arrangement::parse_json("{"), Err(Error::MalformedDocument(_))));
    }

    #[test]
    fn json_round_trip() {
        let a = arr(2, &[&["1/2", "-3"], &["0", "7/3"]]).unwrap();
        let b = Arrangement::parse_json(&a.to_json()).unwrap();
        assert_eq!(a.normals, b.normals);
        assert_eq!(a.labels, b.labels);
    }

    #[test]
    fn named_braid() {
        let b3 = Arrangement::named("braid:3").unwrap();
        assert_eq!((b3.len(), b3.rank()), (3, 2));
        assert_eq!(b3.labels(), ["H12", "H13", "H23"]);
        let b4 = Arrangement::named("braid:4").unwrap();
        assert_eq!((b4.len(), b4.rank()), (6, 3));
        assert!(Arrangement::named("braid:1").is_err());
        assert!(Arrangement::named("cube:3").is_err());
    }

    #[test]
    fn named_generic_every_triple_independent() {
        let g = Arrangement::named("generic:3:5:1").unwrap();
        assert_eq!((g.len(), g.rank()), (5, 3));
        for t in subsets_of_size(5, 3) {
            assert_eq!(g.rank_of(&t), 3, "{t:?}");
        }
        assert_eq!(Arrangement::named("generic:3:5:1").unwrap(), g);
        assert!(matches!(Arrangement::generic(1, 2, 0), Err(Error::GenerationFailed { .. })));
    }

    #[test]
    fn independence_examples() {
        let b3 = Arrangement::braid(3).unwrap();
        assert!(b3.is_independent(&b3.subset(vec![0, 1]).unwrap()));
        assert!(!b3.is_independent(&b3.subset(vec![0, 1, 2]).unwrap()));
        assert!(b3.is_independent(&GroundSubset::empty()));
    }

    #[test]
    fn closure_examples() {
        let b3 = Arrangement::braid(3).unwrap();
        let f = b3.closure(&b3.subset(vec![1, 2]).unwrap());
        assert_eq!((f.indices.indices(), f.rank), (&[0, 1, 2][..], 2));
        let f = b3.closure(&b3.subset(vec![2]).unwrap());
        assert_eq!((f.indices.indices(), f.rank), (&[2][..], 1));
        let f = b3.closure(&GroundSubset::empty());
        assert_eq!((f.indices.len(), f.rank), (0, 0));
    }

    #[test]
    fn circuit_examples() {
        let b3 = Arrangement::braid(3).unwrap();
        assert_eq!(b3.circuits(3), vec![GroundSubset(vec![0, 1, 2])]);
        let g = Arrangement::named("generic:3:5:1").unwrap();
        let c: Vec<_> = g.circuits(4);
        let expected: Vec<_> = subsets_of_size(5, 4).map(GroundSubset).collect();
        assert_eq!(c, expected);
        assert!(Arrangement::braid(2).unwrap().circuits(1).is_empty());
        // K4 has 4 triangles and 3 four-cycles.
        let b4 = Arrangement::braid(4).unwrap();
        assert_eq!(b4.circuits(4).len(), 7);
        assert_eq!(b4.circuits(3).len(), 4);
    }

    #[test]
    fn nbc_examples() {
        let b3 = Arrangement::braid(3).unwrap();
        assert_eq!(b3.nbc_sets(2), vec![GroundSubset(vec![0, 1]), GroundSubset(vec![0, 2])]);
        assert_eq!(b3.nbc_sets(1).len(), 3);
        assert_eq!(b3.nbc_sets(0), vec![GroundSubset::empty()]);
        assert_eq!(Arrangement::braid(4).unwrap().nbc_sets(3).len(), 6);
    }

    #[test]
    fn component_examples() {
        let b3 = Arrangement::braid(3).unwrap();
        assert_eq!(b3.connected_components(), vec![GroundSubset(vec![0, 1, 2])]);
        let coords = arr(2, &[&["1", "0"], &["0", "1"]]).unwrap();
        assert_eq!(coords.connected_components(), vec![GroundSubset(vec![0]), GroundSubset(vec![1])]);
        let sum = b3.direct_sum(&Arrangement::new("x", 1, vec![("H4".into(), vec![q("1")])]).unwrap()).unwrap();
        assert_eq!(sum.rank(), 3);
        assert_eq!(sum.connected_components(), vec![GroundSubset(vec![0, 1, 2]), GroundSubset(vec![3])]);
    }

    #[test]
    fn matroid_agrees_with_exact_route() {
        for name in ["braid:3", "braid:4", "braid:5", "generic:3:5:1", "generic:2:4:7"] {
            let a = Arrangement::named(name).unwrap();
            let m = a.matroid();
            assert_eq!(m.rank(), a.rank());
            for mask in 0..(1u64 << a.len()) {
                let idx = mask_indices(mask);
                assert_eq!(m.rank_of(mask), a.rank_of(&idx), "{name} {idx:?}");
                let exact = a.closure(&GroundSubset(idx.clone())).indices.mask();
                assert_eq!(m.closure(mask), exact, "{name} {idx:?}");
            }
        }
    }

    #[test]
    fn mask_order_is_lexicographic() {
        let mut v: Vec<u64> = (0..64u64).collect();
        v.sort_by(|&a, &b| mask_cmp(a, b));
        let mut w: Vec<u64> = (0..64u64).collect();
        w.sort_by_key(|&m| (m.count_ones(), mask_indices(m)));
        assert_eq!(v, w);
    }

    #[test]
    fn subset_iterator() {
        let all: Vec<_> = subsets_of_size(4, 2).collect();
        assert_eq!(all, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(subsets_of_size(3, 0).count(), 1);
        assert_eq!(subsets_of_size(2, 3).count(), 0);
    }
}
