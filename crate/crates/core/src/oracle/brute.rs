//! Exhaustive oracles for small `n`. These deliberately share no code with
//! the Murnaghan-Nakayama table or the closed forms they check.

use num_bigint::BigInt;

use crate::oracle::class_function::ClassFunction;
use crate::partition::{partitions, Partition};
use crate::permutation::{next_lexicographic, Permutation};
use crate::rational::int;

/// Largest `n` for which the permutation-module (tabloid) oracle runs by default.
pub const DEFAULT_PERMUTATION_ORACLE_CAP: usize = 5;

/// A permutation of the given cycle type, cycles on consecutive points.
pub fn cycle_type_representative(mu: &Partition) -> Permutation {
    let n = mu.size();
    let mut images: Vec<usize> = (0..n).collect();
    let mut start = 0;
    for &len in mu.parts() {
        for t in 0..len {
            images[start + t] = start + (t + 1) % len;
        }
        start += len;
    }
    Permutation::from_one_line(&images.iter().map(|w| w + 1).collect::<Vec<_>>())
        .expect("valid cycle representative")
}

/// All row tabloids of shape `rows` (a composition of n), as point -> row maps.
fn tabloids(rows: &[usize]) -> Vec<Vec<usize>> {
    // distinct arrangements of the multiset word 0^{rows[0]} 1^{rows[1]} ...
    let mut word: Vec<usize> = rows
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| std::iter::repeat_n(r, len))
        .collect();
    word.sort_unstable();
    let mut out = vec![word.clone()];
    while let Some(next) = next_lexicographic(&word) {
        out.push(next.clone());
        word = next;
    }
    out
}

/// Permutation character on row tabloids of the composition `rows`, by
/// literally counting tabloids fixed by a class representative.
pub fn tabloid_character(rows: &[usize]) -> ClassFunction {
    let n: usize = rows.iter().sum();
    let all = tabloids(rows);
    ClassFunction::from_fn(n, |mu| {
        let w = cycle_type_representative(mu);
        let fixed = all
            .iter()
            .filter(|t| (0..n).all(|x| t[w.images()[x]] == t[x]))
            .count();
        int(fixed as i64)
    })
}

/// `chi_lambda = det[h_{lambda_i - i + j}]` (Jacobi-Trudi), with each `h`
/// realized as a tabloid-counting permutation character.
pub fn jacobi_trudi_character(lambda: &Partition) -> ClassFunction {
    let n = lambda.size();
    let len = lambda.len();
    let mut total = ClassFunction::zero(n);
    for sigma in Permutation::all(len) {
        let composition: Option<Vec<usize>> = (0..len)
            .map(|i| {
                let v = lambda.parts()[i] as i64 - i as i64 + sigma.images()[i] as i64;
                usize::try_from(v).ok()
            })
            .collect();
        let Some(composition) = composition else { continue };
        let sign = if (len - sigma.cycle_count()).is_multiple_of(2) { 1 } else { -1 };
        total = &total + &tabloid_character(&composition).scale(&int(sign));
    }
    total
}

/// Standard Young tableaux of size `n`, as row words: entry `t` sits in row `word[t]`.
pub fn standard_tableaux(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, rows: &mut Vec<usize>, word: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if word.len() == n {
            out.push(word.clone());
            return;
        }
        for r in 0..=rows.len() {
            let ok = if r == rows.len() { true } else { r == 0 || rows[r - 1] > rows[r] };
            if !ok {
                continue;
            }
            if r == rows.len() {
                rows.push(0);
            }
            rows[r] += 1;
            word.push(r);
            go(n, rows, word, out);
            word.pop();
            rows[r] -= 1;
            if rows[r] == 0 {
                rows.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}

/// Foulkes character from its definition as a sum over border strips:
/// `phi_i = sum_lambda #{SYT T of shape lambda : des(T) = i} chi_lambda`,
/// where `t` is a descent of `T` when `t + 1` lies in a lower row.
///
/// Returns the irreducible multiplicities in canonical order.
pub fn foulkes_multiplicities_from_tableaux(n: usize, i: usize) -> Vec<(Partition, BigInt)> {
    let shapes = partitions(n);
    let mut counts = vec![BigInt::from(0); shapes.len()];
    for word in standard_tableaux(n) {
        let des = word.windows(2).filter(|w| w[1] > w[0]).count();
        if des != i {
            continue;
        }
        let mut rows = vec![0usize; word.iter().max().map_or(0, |m| m + 1)];
        for &r in &word {
            rows[r] += 1;
        }
        let shape = Partition::new(rows).expect("tableau shape");
        let idx = shapes.iter().position(|s| *s == shape).expect("shape of n");
        counts[idx] += 1;
    }
    shapes.into_iter().zip(counts).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::symmetric::induced_trivial;
    use crate::oracle::table::CharacterTable;

    #[test]
    fn representatives_have_their_cycle_type() {
        for n in 1..=7 {
            for mu in partitions(n) {
                assert_eq!(cycle_type_representative(&mu).cycle_type(), mu);
            }
        }
    }

    #[test]
    fn tabloid_counts_match_combinatorial_formula() {
        for n in 1..=6 {
            for lambda in partitions(n) {
                assert_eq!(tabloid_character(lambda.parts()), induced_trivial(&lambda), "{lambda}");
            }
        }
        let s3 = tabloid_character(&[2, 1]);
        assert_eq!(s3.values(), &[int(0), int(1), int(3)][..]);
    }

    #[test]
    fn mn_agrees_with_permutation_modules() {
        for n in 1..=5 {
            let table = CharacterTable::of(n);
            for lambda in partitions(n) {
                let expected = jacobi_trudi_character(&lambda);
                let row = table.row(table.index_of(&lambda).unwrap());
                let row: Vec<_> = row.iter().map(|&v| int(v)).collect();
                assert_eq!(expected.values(), &row[..], "{lambda}");
            }
        }
    }

    #[test]
    fn tableau_counts() {
        // number of SYT of size n is the number of involutions
        let counts: Vec<usize> = (1..=8).map(|n| standard_tableaux(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 10, 26, 76, 232, 764]);
        let phi1 = foulkes_multiplicities_from_tableaux(3, 1);
        assert_eq!(
            phi1.iter().map(|(_, c)| c.clone()).collect::<Vec<_>>(),
            vec![BigInt::from(0), BigInt::from(2), BigInt::from(0)]
        );
    }
}
