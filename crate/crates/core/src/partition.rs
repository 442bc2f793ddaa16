use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// An integer partition, parts weakly decreasing and positive.
///
/// Partitions double as cycle types, i.e. conjugacy class labels of `S_n`.
/// `Ord` is the canonical reverse-lexicographic order: `(n)` sorts first and
/// `(1^n)` last. Every table in the crate is indexed in this order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Self { parts })
    }

    /// Sorts the parts and drops zeros, so any composition is accepted.
    pub fn from_composition(parts: &[usize]) -> Self {
        let mut parts: Vec<usize> = parts.iter().copied().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    /// `(n)`
    pub fn row(n: usize) -> Self {
        Self::from_composition(&[n])
    }

    /// `(1^n)`
    pub fn column(n: usize) -> Self {
        Self { parts: vec![1; n] }
    }

    /// The hook `(n - i, 1^i)`.
    pub fn hook(n: usize, i: usize) -> Self {
        assert!(i < n, "hook (n-i,1^i) needs i < n");
        let mut parts = vec![n - i];
        parts.extend(std::iter::repeat_n(1, i));
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The partitioned integer.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts, `l(lambda)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `m_k(lambda)`, the number of parts equal to `k`.
    pub fn multiplicity(&self, k: usize) -> usize {
        self.parts.iter().filter(|&&p| p == k).count()
    }

    /// Non-zero multiplicities `(k, m_k)`, largest part first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((k, m)) if *k == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn conjugate(&self) -> Self {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        Self { parts }
    }

    /// Boxes `(row, col)` of the Young diagram, 0-based.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }

    /// Hook length of the box at `(row, col)`.
    pub fn hook_length(&self, row: usize, col: usize) -> usize {
        let arm = self.parts[row] - col - 1;
        let leg = self.parts[row + 1..].iter().filter(|&&p| p > col).count();
        arm + leg + 1
    }
}

impl Ord for Partition {
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
        write!(f, "(")?;
        for (idx, p) in self.parts.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n` in canonical (reverse-lexicographic) order.
pub fn partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    extend_partitions(n, n, None, &mut current, &mut out);
    out
}

/// Partitions of `n` with exactly `k` parts, canonical order.
pub fn partitions_by_length(n: usize, k: usize) -> Result<Vec<Partition>> {
    crate::error::check_range("k", k as i64, 1, n as i64)?;
    let mut out = Vec::new();
    let mut current = Vec::new();
    extend_partitions(n, n, Some(k), &mut current, &mut out);
    Ok(out)
}

fn extend_partitions(
    remaining: usize,
    max_part: usize,
    parts_left: Option<usize>,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        if parts_left.is_none_or(|k| k == 0) {
            out.push(Partition { parts: current.clone() });
        }
        return;
    }
    if let Some(k) = parts_left {
        // k parts, each at most max_part and at least 1
        if k == 0 || remaining < k || remaining > k * max_part {
            return;
        }
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        extend_partitions(remaining - part, part, parts_left.map(|k| k - 1), current, out);
        current.pop();
    }
}
