//! Integer partitions and skew shapes.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Weakly decreasing positive parts. The empty partition is `∅`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition, dropping trailing zeros. Fails if the parts
    /// are not weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Shape(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `λ_i` with 1-based `i`; zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition((1..=width).map(|c| self.0.iter().filter(|&&p| p >= c).count()).collect())
    }

    /// Every row has even length.
    pub fn is_even(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 0)
    }

    /// Every column has even length.
    pub fn has_even_columns(&self) -> bool {
        self.conjugate().is_even()
    }

    /// `self ⊆ other` componentwise.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.0.len() <= other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// 1-based `(row, col)` cells where a box can be added.
    pub fn addable_cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for r in 1..=self.len() + 1 {
            let len = self.part(r);
            if r == 1 || self.part(r - 1) > len {
                out.push((r, len + 1));
            }
        }
        out
    }

    /// 1-based `(row, col)` cells that can be removed.
    pub fn removable_cells(&self) -> Vec<(usize, usize)> {
        (1..=self.len()).filter(|&r| self.part(r) > self.part(r + 1)).map(|r| (r, self.part(r))).collect()
    }

    /// Adds one box to the end of row `row` (1-based). Fails if the result
    /// is not a partition.
    pub fn add_box(&self, row: usize) -> Result<Partition> {
        let mut parts = self.0.clone();
        if row == 0 || row > parts.len() + 1 {
            return Err(Error::Shape(format!("cannot add a box in row {row} of {self}")));
        }
        if row == parts.len() + 1 {
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
        Partition::new(parts)
    }

    pub fn remove_box(&self, row: usize) -> Result<Partition> {
        if row == 0 || row > self.len() || self.part(row) <= self.part(row + 1) {
            return Err(Error::Shape(format!("cannot remove a box from row {row} of {self}")));
        }
        let mut parts = self.0.clone();
        parts[row - 1] -= 1;
        Partition::new(parts)
    }

    /// All partitions of `n`, in reverse lexicographic order (`(n)` first).
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                go(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions `μ ⊆ self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn go(outer: &[usize], row: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition(cur.clone()));
            if row == outer.len() {
                return;
            }
            for p in 1..=outer[row].min(max) {
                cur.push(p);
                go(outer, row + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(&self.0, 0, usize::MAX, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// `outer / inner` with `inner ⊆ outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !inner.is_contained_in(&outer) {
            return Err(Error::Shape(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// 1-based cells of the skew diagram, row-major.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (1..=self.outer.len())
            .flat_map(|r| (self.inner.part(r) + 1..=self.outer.part(r)).map(move |c| (r, c)))
            .collect()
    }
}

impl From<Partition> for SkewShape {
    fn from(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// Shorthand for building partitions in tests and examples.
#[macro_export]
macro_rules! partition {
    () => { $crate::partition::Partition::empty() };
    ($($p:expr),+ $(,)?) => { $crate::partition::Partition::new(vec![$($p),+]).expect("valid partition") };
}
