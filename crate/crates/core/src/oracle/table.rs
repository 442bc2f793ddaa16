//! Irreducible characters of `S_n` by the Murnaghan-Nakayama rule.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::combinatorics::factorial;
use crate::error::{Error, Result};
use crate::partition::{partitions, Partition};

/// `|C_mu| = n! / prod_k k^{m_k} m_k!`
pub fn class_size(mu: &Partition) -> BigInt {
    let centralizer = mu
        .multiplicities()
        .iter()
        .fold(BigInt::from(1), |acc, &(k, m)| {
            acc * BigInt::from(k).pow(m as u32) * factorial(m)
        });
    factorial(mu.size()) / centralizer
}

/// `chi_lambda(mu)`.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch { expected: lambda.size(), found: mu.size() });
    }
    let mut memo = HashMap::new();
    Ok(mn_value(lambda.parts(), mu.parts(), &mut memo))
}

type Memo = HashMap<(Vec<usize>, Vec<usize>), i64>;

fn mn_value(shape: &[usize], cycles: &[usize], memo: &mut Memo) -> i64 {
    let Some((&r, rest)) = cycles.split_first() else {
        return i64::from(shape.is_empty());
    };
    let key = (shape.to_vec(), cycles.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    // beta-set: first-column hook lengths, strictly decreasing
    let len = shape.len();
    let beta: Vec<usize> = shape.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    let mut total = 0i64;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        // rim hook height = number of beads jumped over
        let jumped = beta.iter().filter(|&&c| c > target && c < b).count();
        let mut next = beta.clone();
        next[idx] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let reduced: Vec<usize> = next
            .iter()
            .enumerate()
            .map(|(i, &c)| c - (len - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        let value = mn_value(&reduced, rest, memo);
        total += if jumped % 2 == 0 { value } else { -value };
    }
    memo.insert(key, total);
    total
}

/// Character table of `S_n`: rows are irreducibles `chi_lambda`, columns
/// cycle types `mu`, both in canonical partition order.
#[derive(Debug)]
pub struct CharacterTable {
    n: usize,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    class_sizes: Vec<BigInt>,
    group_order: BigInt,
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn new(n: usize) -> Self {
        let partitions = partitions(n);
        let values = partitions
            .par_iter()
            .map(|lambda| {
                let mut memo = HashMap::new();
                partitions
                    .iter()
                    .map(|mu| mn_value(lambda.parts(), mu.parts(), &mut memo))
                    .collect()
            })
            .collect();
        let index = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let class_sizes = partitions.iter().map(class_size).collect();
        Self { n, index, class_sizes, group_order: factorial(n), values, partitions }
    }

    /// Shared, lazily built table for `S_n`.
    pub fn of(n: usize) -> Arc<CharacterTable> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(t) = cache.lock().unwrap().get(&n) {
            return Arc::clone(t);
        }
        let table = Arc::new(CharacterTable::new(n));
        Arc::clone(cache.lock().unwrap().entry(n).or_insert(table))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Row and column labels, canonical order.
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn class_sizes(&self) -> &[BigInt] {
        &self.class_sizes
    }

    pub fn group_order(&self) -> &BigInt {
        &self.group_order
    }

    pub fn index_of(&self, lambda: &Partition) -> Option<usize> {
        self.index.get(lambda).copied()
    }

    pub fn row(&self, lambda_index: usize) -> &[i64] {
        &self.values[lambda_index]
    }

    pub fn value(&self, lambda: &Partition, mu: &Partition) -> Option<i64> {
        Some(self.values[self.index_of(lambda)?][self.index_of(mu)?])
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.values
    }

    /// Degrees `chi_lambda(1^n)`.
    pub fn degrees(&self) -> Vec<i64> {
        let id = self.partitions.len() - 1;
        self.values.iter().map(|row| row[id]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn class_sizes_small() {
        assert_eq!(class_size(&p(&[1, 1, 1])), BigInt::from(1));
        assert_eq!(class_size(&p(&[2, 1])), BigInt::from(3));
        assert_eq!(class_size(&p(&[3])), BigInt::from(2));
        for n in 1..=10 {
            let total: BigInt = partitions(n).iter().map(class_size).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn mn_examples() {
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        for mu in partitions(6) {
            assert_eq!(mn_character(&p(&[6]), &mu).unwrap(), 1);
        }
        assert!(mn_character(&p(&[2, 1]), &p(&[2])).is_err());
    }

    #[test]
    fn s4_table() {
        // rows (4),(3,1),(2,2),(2,1,1),(1^4); columns in the same order
        let t = CharacterTable::new(4);
        assert_eq!(
            t.rows(),
            &[
                vec![1, 1, 1, 1, 1],
                vec![-1, 0, -1, 1, 3],
                vec![0, -1, 2, 0, 2],
                vec![1, 0, -1, -1, 3],
                vec![-1, 1, 1, -1, 1],
            ]
        );
    }

    #[test]
    fn row_and_column_orthogonality() {
        for n in 1..=8 {
            let t = CharacterTable::of(n);
            let k = t.partitions().len();
            for a in 0..k {
                for b in 0..k {
                    let row: BigInt = (0..k)
                        .map(|m| &t.class_sizes()[m] * (t.row(a)[m] * t.row(b)[m]))
                        .sum();
                    let expected = if a == b { t.group_order().clone() } else { BigInt::from(0) };
                    assert_eq!(row, expected, "row orthogonality n={n}");
                    let col: i64 = (0..k).map(|l| t.row(l)[a] * t.row(l)[b]).sum();
                    let expected = if a == b { t.group_order() / &t.class_sizes()[a] } else { BigInt::from(0) };
                    assert_eq!(BigInt::from(col), expected, "column orthogonality n={n}");
                }
            }
            assert!(t.degrees().iter().all(|&d| d > 0));
        }
    }
}
