//! Integer partitions and tagged conjugacy classes of S_n.
//!
//! A partition λ ⊢ n is stored as a weakly decreasing list of positive
//! parts. A *tagged class* (λ, i) with i ∈ λ indexes the set
//!
//! ```text
//! C_{λ,i} = { π ∈ S_n : κ(π) = λ, n lies on a cycle of length i }
//! ```
//!
//! whose formal sums K_{λ,i} form the standard basis of the centralizer
//! Z_1(n). Tags are part *values*, not positions: parts of equal size are
//! interchangeable.
//!
//! The enumeration order of [`partitions_of`] is reverse-lexicographic
//! ((n) first, (1^n) last) and `Ord` on [`Partition`] and [`TaggedClass`]
//! matches it (tags descend within a shape), so sorted containers iterate
//! in the same canonical order as the enumerators. Every table the crate
//! emits relies on that single ordering.

use crate::{factorial, int, Int};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// An integer partition λ ⊢ n: weakly decreasing positive parts.
/// The empty partition (n = 0) is valid and arises as μ ∖ j when j is the
/// only part.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Partition {
    parts: Vec<u32>,
    n: u32,
}

impl Partition {
    /// Builds a partition from parts in any order.
    ///
    /// # Panics
    /// Panics if any part is zero.
    pub fn new(mut parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "partition parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let n = parts.iter().sum();
        Partition { parts, n }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new(), n: 0 }
    }

    /// The weakly decreasing parts.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// m(λ), the number of parts.
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// m_i(λ), the multiplicity of i as a part.
    pub fn multiplicity(&self, i: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == i).count() as u32
    }

    /// Whether i ∈ λ, i.e. m_i(λ) > 0.
    pub fn has_part(&self, i: u32) -> bool {
        self.parts.contains(&i)
    }

    /// The distinct part values, in decreasing order.
    pub fn distinct_parts(&self) -> Vec<u32> {
        let mut out = self.parts.clone();
        out.dedup();
        out
    }

    /// μ ∖ j: removes exactly one copy of the part j, leaving a partition
    /// of n − j.
    ///
    /// # Panics
    /// Panics if j ∉ μ.
    pub fn remove_part(&self, j: u32) -> Partition {
        let pos = self
            .parts
            .iter()
            .position(|&p| p == j)
            .unwrap_or_else(|| panic!("{} is not a part of {}", j, self));
        let mut parts = self.parts.clone();
        parts.remove(pos);
        let n = self.n - j;
        Partition { parts, n }
    }

    /// i_−(λ): one copy of the part i replaced by i − 1, re-sorted; the
    /// part vanishes when i = 1. A partition of n − 1.
    ///
    /// # Panics
    /// Panics if i ∉ λ.
    pub fn i_minus(&self, i: u32) -> Partition {
        let removed = self.remove_part(i);
        if i == 1 {
            removed
        } else {
            let mut parts = removed.parts;
            parts.push(i - 1);
            parts.sort_unstable_by(|a, b| b.cmp(a));
            Partition { parts, n: self.n - 1 }
        }
    }

    /// Cellwise containment: ν ⊆ λ as Ferrers diagrams.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.parts.len() <= self.parts.len()
            && inner.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Whether (r, c) (0-based) is a cell of the diagram.
    pub fn has_cell(&self, r: usize, c: usize) -> bool {
        r < self.parts.len() && c < self.parts[r] as usize
    }

    /// The multiset of cell contents c − r (0-based row r, column c),
    /// ordered row by row. Well-defined per shape: every tableau of shape
    /// λ has this content multiset.
    pub fn contents(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.n as usize);
        for (r, &len) in self.parts.iter().enumerate() {
            for c in 0..len as usize {
                out.push(c as i64 - r as i64);
            }
        }
        out
    }

    /// d_λ, the number of standard Young tableaux of shape λ, by the
    /// hook-length formula: n! / ∏ hook lengths. Authoritative at every n
    /// (enumeration cross-checks it for small n).
    pub fn hook_dim(&self) -> Int {
        let mut col_heights = vec![0u32; self.parts.first().copied().unwrap_or(0) as usize];
        for &len in &self.parts {
            for h in col_heights[..len as usize].iter_mut() {
                *h += 1;
            }
        }
        let mut product = int(1);
        for (r, &len) in self.parts.iter().enumerate() {
            for c in 0..len as usize {
                let hook = (len as u64 - c as u64) + (col_heights[c] as u64 - r as u64) - 1;
                product *= int(hook as i64);
            }
        }
        factorial(self.n) / product
    }
}

impl Ord for Partition {
    /// Reverse-lexicographic: (n) sorts first, (1^n) last, matching the
    /// enumeration order of [`partitions_of`].
    fn cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let s = self
            .parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "{}", s)
    }
}

impl FromStr for Partition {
    type Err = String;

    /// Parses the comma-separated form used on the command line, e.g.
    /// `"3,1"`. `"-"` and `""` denote the empty partition.
    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let p: u32 = tok
                .trim()
                .parse()
                .map_err(|_| format!("invalid partition part {:?}", tok))?;
            if p == 0 {
                return Err("partition parts must be positive".into());
            }
            parts.push(p);
        }
        Ok(Partition::new(parts))
    }
}

impl Serialize for Partition {
    /// Partitions serialize as plain JSON arrays of decreasing integers.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        if parts.iter().any(|&p| p == 0) {
            return Err(D::Error::custom("partition parts must be positive"));
        }
        Ok(Partition::new(parts))
    }
}

/// A tagged conjugacy class (λ, i): cycle type λ with the symbol n on a
/// cycle of length i.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct TaggedClass {
    shape: Partition,
    tag: u32,
}

impl TaggedClass {
    /// # Panics
    /// Panics if the tag is not a part of the shape.
    pub fn new(shape: Partition, tag: u32) -> Self {
        assert!(shape.has_part(tag), "tag {} is not a part of {}", tag, shape);
        TaggedClass { shape, tag }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn tag(&self) -> u32 {
        self.tag
    }

    pub fn n(&self) -> u32 {
        self.shape.n()
    }

    /// |C_{λ,i}| = |C_λ| · i · m_i(λ) / n.
    pub fn size(&self) -> Int {
        let n = self.shape.n();
        class_size(&self.shape) * int(i64::from(self.tag)) * int(i64::from(self.shape.multiplicity(self.tag)))
            / int(i64::from(n))
    }

    /// c_{λ,i}, the content of the box occupied by n in any T ∈ SYT_{λ,i}:
    /// i − r where r is the 1-based index of the lowest row of length i.
    pub fn content_of_n(&self) -> i64 {
        let r = self
            .shape
            .parts()
            .iter()
            .rposition(|&p| p == self.tag)
            .expect("tag is a part") as i64
            + 1;
        i64::from(self.tag) - r
    }
}

impl Ord for TaggedClass {
    /// Shape in partition order, then tags descending — the order of
    /// [`tagged_classes`].
    fn cmp(&self, other: &Self) -> Ordering {
        self.shape
            .cmp(&other.shape)
            .then_with(|| other.tag.cmp(&self.tag))
    }
}

impl PartialOrd for TaggedClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TaggedClass {
    /// Compact key form `"3,1:3"` used for JSON map keys and CLI output.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.shape, self.tag)
    }
}

impl FromStr for TaggedClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (shape, tag) = s
            .rsplit_once(':')
            .ok_or_else(|| format!("expected shape:tag, got {:?}", s))?;
        let shape: Partition = shape.parse()?;
        let tag: u32 = tag
            .trim()
            .parse()
            .map_err(|_| format!("invalid tag {:?}", tag))?;
        if !shape.has_part(tag) {
            return Err(format!("tag {} is not a part of {}", tag, shape));
        }
        Ok(TaggedClass::new(shape, tag))
    }
}

/// All partitions of n in reverse-lexicographic order. n = 0 yields the
/// single empty partition.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn descend(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: current.clone(), n: current.iter().sum() });
            return;
        }
        for first in (1..=remaining.min(max_part)).rev() {
            current.push(first);
            descend(remaining - first, first, current, out);
            current.pop();
        }
    }
    descend(n, n, &mut current, &mut out);
    out
}

/// The partitions of n with exactly `num_parts` parts, in the same
/// reverse-lexicographic order. Empty when num_parts > n.
pub fn partitions_with_num_parts(n: u32, num_parts: usize) -> Vec<Partition> {
    partitions_of(n)
        .into_iter()
        .filter(|p| p.num_parts() == num_parts)
        .collect()
}

/// |C_λ| = n! / ∏_i i^{m_i} m_i!, the number of permutations of cycle
/// type λ.
pub fn class_size(shape: &Partition) -> Int {
    let mut denom = int(1);
    for part in shape.distinct_parts() {
        let m = shape.multiplicity(part);
        for _ in 0..m {
            denom *= int(i64::from(part));
        }
        denom *= factorial(m);
    }
    factorial(shape.n()) / denom
}

/// All tagged classes (λ, i) for λ ⊢ n, in canonical order: shapes
/// reverse-lexicographic, tags decreasing within a shape.
pub fn tagged_classes(n: u32) -> Vec<TaggedClass> {
    let mut out = Vec::new();
    for shape in partitions_of(n) {
        for tag in shape.distinct_parts() {
            out.push(TaggedClass::new(shape.clone(), tag));
        }
    }
    out
}
