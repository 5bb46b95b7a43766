//! Increasing tuples, the intertwining relation, and the index sets that
//! parameterize indecomposable summands.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{contract, Error, Result};

/// A vertex label. Labels are 1-based, matching `[m] = {1, …, m}`.
pub type Label = u8;

/// Largest label a tuple may carry.
pub const MAX_LABEL: Label = 64;

/// A strictly increasing tuple of 1-based vertex labels.
///
/// Used for simplices (`|A|`), module labels (`M_A`), elements of the index
/// sets and flip supports alike. The derived ordering is lexicographic, which
/// is the canonical order for every tuple collection the crate emits.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct VertexTuple(Vec<Label>);

impl VertexTuple {
    pub fn new(entries: Vec<Label>) -> Result<Self> {
        if let Some(&first) = entries.first() {
            if first == 0 {
                return Err(contract!("vertex labels are 1-based, got 0"));
            }
        }
        if let Some(&last) = entries.last() {
            if last > MAX_LABEL {
                return Err(contract!("vertex label {last} exceeds {MAX_LABEL}"));
            }
        }
        if entries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(contract!("tuple {entries:?} is not strictly increasing"));
        }
        Ok(VertexTuple(entries))
    }

    /// Builds a tuple from entries already known to be strictly increasing.
    pub(crate) fn from_sorted(entries: Vec<Label>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0] < w[1]));
        VertexTuple(entries)
    }

    pub fn entries(&self) -> &[Label] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_label(&self) -> Option<Label> {
        self.0.last().copied()
    }

    pub fn contains(&self, label: Label) -> bool {
        self.0.binary_search(&label).is_ok()
    }

    /// True iff every entry lies in `[m]`.
    pub fn lies_in(&self, m: usize) -> bool {
        self.0.last().is_none_or(|&l| usize::from(l) <= m)
    }

    pub fn is_subset_of(&self, other: &VertexTuple) -> bool {
        let mut rest = other.0.iter();
        self.0.iter().all(|x| rest.any(|y| y == x))
    }

    pub fn is_disjoint_from(&self, other: &VertexTuple) -> bool {
        self.0.iter().all(|&x| !other.contains(x))
    }

    pub fn union(&self, other: &VertexTuple) -> VertexTuple {
        let merged = self
            .0
            .iter()
            .merge(other.0.iter())
            .dedup()
            .copied()
            .collect();
        VertexTuple(merged)
    }

    pub fn with(&self, label: Label) -> VertexTuple {
        let mut entries = self.0.clone();
        if let Err(pos) = entries.binary_search(&label) {
            entries.insert(pos, label);
        }
        VertexTuple(entries)
    }

    /// The sub-tuple at the given (0-based, increasing) positions.
    pub fn pick(&self, positions: &[usize]) -> VertexTuple {
        VertexTuple(positions.iter().map(|&p| self.0[p]).collect())
    }

    /// All sub-tuples of the given size, in lexicographic order.
    pub fn faces(&self, size: usize) -> impl Iterator<Item = VertexTuple> + '_ {
        self.0.iter().copied().combinations(size).map(VertexTuple)
    }

    /// Strict interleaving `a_0 < b_0 < a_1 < b_1 < … < a_d < b_d`.
    pub fn intertwines(&self, other: &VertexTuple) -> Result<bool> {
        if self.len() != other.len() {
            return Err(contract!(
                "intertwining needs equal lengths, got {} and {}",
                self.len(),
                other.len()
            ));
        }
        Ok(interleaves(&self.0, &other.0))
    }
}

/// `a ≀ b` without the length check; false when the lengths differ.
pub(crate) fn interleaves(a: &[Label], b: &[Label]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    for i in 0..a.len() {
        if a[i] >= b[i] {
            return false;
        }
        if i + 1 < a.len() && b[i] >= a[i + 1] {
            return false;
        }
    }
    true
}

impl TryFrom<Vec<u64>> for VertexTuple {
    type Error = Error;

    fn try_from(raw: Vec<u64>) -> Result<Self> {
        let entries = raw
            .into_iter()
            .map(|x| Label::try_from(x).map_err(|_| contract!("vertex label {x} out of range")))
            .collect::<Result<Vec<_>>>()?;
        VertexTuple::new(entries)
    }
}

impl From<VertexTuple> for Vec<u64> {
    fn from(t: VertexTuple) -> Self {
        t.0.into_iter().map(u64::from).collect()
    }
}

impl fmt::Display for VertexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&x| x < 10) {
            for x in &self.0 {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            write!(f, "({})", self.0.iter().join(","))
        }
    }
}

impl fmt::Debug for VertexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Shorthand for tests and fixtures: `tuple![1, 3, 5]`.
#[macro_export]
macro_rules! tuple {
    ($($x:expr),* $(,)?) => {
        $crate::combinat::VertexTuple::new(vec![$($x),*]).expect("valid tuple literal")
    };
}

/// Which of the two separated index sets to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IndexSetKind {
    /// `(d+1)`-tuples in `[m]` with `a_{i+1} ≥ a_i + 2`.
    Separated,
    /// Separated tuples that additionally satisfy `a_d + 2 ≤ a_0 + m`.
    CyclicSeparated,
}

/// The index set of `(d+1)`-tuples in `[m]`, sorted lexicographically.
pub fn enumerate_index_set(m: usize, d: usize, kind: IndexSetKind) -> Vec<VertexTuple> {
    fn extend(
        m: usize,
        len: usize,
        kind: IndexSetKind,
        prefix: &mut Vec<Label>,
        out: &mut Vec<VertexTuple>,
    ) {
        if prefix.len() == len {
            let first = usize::from(prefix[0]);
            let last = usize::from(prefix[len - 1]);
            if kind == IndexSetKind::Separated || last + 2 <= first + m {
                out.push(VertexTuple(prefix.clone()));
            }
            return;
        }
        let start = prefix.last().map_or(1, |&x| usize::from(x) + 2);
        let remaining = len - prefix.len() - 1;
        // room for the remaining entries, each at least 2 apart
        let end = m.saturating_sub(2 * remaining);
        for x in start..=end {
            prefix.push(x as Label);
            extend(m, len, kind, prefix, out);
            prefix.pop();
        }
    }

    let mut out = Vec::new();
    if m == 0 || m > usize::from(MAX_LABEL) {
        return out;
    }
    extend(m, d + 1, kind, &mut Vec::with_capacity(d + 1), &mut out);
    out
}

/// True iff no element intertwines another.
pub fn is_compatible_collection(tuples: &[VertexTuple]) -> Result<bool> {
    if let Some(first) = tuples.first() {
        if let Some(bad) = tuples.iter().find(|t| t.len() != first.len()) {
            return Err(contract!(
                "mixed tuple lengths in collection: {} and {}",
                first.len(),
                bad.len()
            ));
        }
    }
    Ok(compatible(tuples))
}

pub(crate) fn compatible(tuples: &[VertexTuple]) -> bool {
    tuples.iter().enumerate().all(|(i, a)| {
        tuples[i + 1..]
            .iter()
            .all(|b| !interleaves(&a.0, &b.0) && !interleaves(&b.0, &a.0))
    })
}

/// All `k`-subsets of `[m]` in lexicographic order.
pub fn subsets(m: usize, k: usize) -> impl Iterator<Item = VertexTuple> {
    (1..=m.min(usize::from(MAX_LABEL)) as Label)
        .combinations(k)
        .map(VertexTuple)
}

/// Binomial coefficient; saturates instead of overflowing.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return u64::MAX;
        }
    }
    acc as u64
}
