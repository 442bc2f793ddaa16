use crate::error::{Error, Result};
use crate::partition::Partition;

/// A permutation of `{1..n}` in one-line notation, stored 0-based.
///
/// Products compose right to left: `(x * y)(t) = x(y(t))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// From 1-based one-line notation, e.g. `[2, 1, 3, 4]`.
    pub fn from_one_line(word: &[usize]) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n];
        for &w in word {
            if w == 0 || w > n || seen[w - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{word:?} is not a permutation of 1..{n}"
                )));
            }
            seen[w - 1] = true;
        }
        Ok(Self { images: word.iter().map(|w| w - 1).collect() })
    }

    pub fn identity(n: usize) -> Self {
        Self { images: (0..n).collect() }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|w| w + 1).collect()
    }

    /// 0-based images.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (t, &w) in self.images.iter().enumerate() {
            images[w] = t;
        }
        Self { images }
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        Self { images: other.images.iter().map(|&t| self.images[t]).collect() }
    }

    /// `des(w) = #{i : w(i) > w(i+1)}`.
    pub fn descents(&self) -> usize {
        self.images.windows(2).filter(|w| w[0] > w[1]).count()
    }

    /// Cycle lengths, largest first.
    pub fn cycle_type(&self) -> Partition {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut t = start;
            while !seen[t] {
                seen[t] = true;
                t = self.images[t];
                len += 1;
            }
            lengths.push(len);
        }
        Partition::from_composition(&lengths)
    }

    /// Number of cycles, fixed points included.
    pub fn cycle_count(&self) -> usize {
        cycle_count_of(&self.images)
    }

    /// All of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        let mut next = Some((0..n).collect::<Vec<usize>>());
        std::iter::from_fn(move || {
            let current = next.take()?;
            next = next_lexicographic(&current);
            Some(Permutation { images: current })
        })
    }

    /// The `n`-cycles of `S_n`.
    pub fn long_cycles(n: usize) -> Vec<Permutation> {
        Self::all(n).filter(|w| w.cycle_count() == 1).collect()
    }
}

/// Cycle count of a 0-based image array.
pub fn cycle_count_of(images: &[usize]) -> usize {
    let n = images.len();
    let mut seen = [false; 64];
    let mut seen_vec;
    let seen: &mut [bool] = if n <= 64 {
        &mut seen[..n]
    } else {
        seen_vec = vec![false; n];
        &mut seen_vec
    };
    let mut cycles = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut t = start;
        while !seen[t] {
            seen[t] = true;
            t = images[t];
        }
    }
    cycles
}

pub(crate) fn next_lexicographic(current: &[usize]) -> Option<Vec<usize>> {
    let n = current.len();
    let pivot = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1])?;
    let mut next = current.to_vec();
    let swap = (pivot + 1..n).rev().find(|&j| next[j] > next[pivot])?;
    next.swap(pivot, swap);
    next[pivot + 1..].reverse();
    Some(next)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_counts() {
        assert_eq!(Permutation::identity(4).cycle_count(), 4);
        assert_eq!(Permutation::from_one_line(&[2, 1, 3, 4]).unwrap().cycle_count(), 3);
        assert_eq!(Permutation::from_one_line(&[2, 3, 4, 1]).unwrap().cycle_count(), 1);
        let w = Permutation::from_one_line(&[3, 1, 2, 5, 4]).unwrap();
        assert_eq!(w.cycle_type(), Partition::new(vec![3, 2]).unwrap());
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Permutation::from_one_line(&[1, 1, 2]).is_err());
        assert!(Permutation::from_one_line(&[0, 1]).is_err());
        assert!(Permutation::from_one_line(&[1, 4, 2]).is_err());
    }

    #[test]
    fn enumeration_and_group_laws() {
        let all: Vec<_> = Permutation::all(4).collect();
        assert_eq!(all.len(), 24);
        assert_eq!(Permutation::long_cycles(5).len(), 24);
        let x = Permutation::from_one_line(&[2, 3, 1, 4]).unwrap();
        let y = Permutation::from_one_line(&[1, 2, 4, 3]).unwrap();
        assert_eq!(x.compose(&x.inverse()), Permutation::identity(4));
        // (xy)(t) = x(y(t)): y sends 3 -> 4, x fixes 4
        assert_eq!(x.compose(&y).one_line(), vec![2, 3, 4, 1]);
        assert_eq!(Permutation::from_one_line(&[3, 1, 2]).unwrap().descents(), 1);
    }
}
