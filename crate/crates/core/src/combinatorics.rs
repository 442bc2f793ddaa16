//! Binomials, multinomials, gcd facts about part multiplicities, and
//! Eulerian numbers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{check_range, Error, Result};
use crate::partition::{partitions_by_length, Partition};

/// `binom(u, v)`, with the convention that it vanishes unless `u >= v >= 0`.
pub fn binom(u: i64, v: i64) -> BigInt {
    if v < 0 || u < v {
        return BigInt::zero();
    }
    let v = v.min(u - v);
    let mut acc = BigInt::one();
    for t in 0..v {
        acc = acc * BigInt::from(u - t) / BigInt::from(t + 1);
    }
    acc
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `M(lambda) = l(lambda)! / prod_k m_k(lambda)!`.
pub fn multinomial_m(lambda: &Partition) -> BigInt {
    lambda
        .multiplicities()
        .iter()
        .fold(factorial(lambda.len()), |acc, &(_, m)| acc / factorial(m))
}

/// `d_k = k / gcd(n, k)` for `1 <= k <= n`.
pub fn part_gcd(n: usize, k: usize) -> Result<u64> {
    check_range("k", k as i64, 1, n as i64)?;
    Ok((k / k.gcd(&n)) as u64)
}

/// `gcd { M(lambda) : lambda |- n, l(lambda) = k }` by enumeration.
pub fn multinomial_gcd_by_enumeration(n: usize, k: usize) -> Result<BigInt> {
    Ok(partitions_by_length(n, k)?
        .iter()
        .fold(BigInt::zero(), |acc, lambda| acc.gcd(&multinomial_m(lambda))))
}

/// Checks `part_gcd` against the enumeration; returns the shared value.
pub fn part_gcd_verified(n: usize, k: usize) -> Result<u64> {
    let closed = part_gcd(n, k)?;
    let enumerated = multinomial_gcd_by_enumeration(n, k)?;
    if enumerated != BigInt::from(closed) {
        return Err(Error::Verification(format!(
            "gcd of M(lambda) over l(lambda)={k}, lambda |- {n} is {enumerated}, expected {closed}"
        )));
    }
    Ok(closed)
}

/// Number of permutations of `S_n` with exactly `i` descents; zero for `i`
/// outside `[0, n-1]`.
pub fn eulerian(n: usize, i: i64) -> BigInt {
    if n == 0 {
        return if i == 0 { BigInt::one() } else { BigInt::zero() };
    }
    if i < 0 || i >= n as i64 {
        return BigInt::zero();
    }
    // A(m, j) = (j + 1) A(m-1, j) + (m - j) A(m-1, j-1)
    let mut row = vec![BigInt::one()];
    for m in 2..=n {
        let mut next = vec![BigInt::zero(); m];
        for (j, slot) in next.iter_mut().enumerate() {
            if j < row.len() {
                *slot += BigInt::from(j + 1) * &row[j];
            }
            if j >= 1 {
                *slot += BigInt::from(m - j) * &row[j - 1];
            }
        }
        row = next;
    }
    row.swap_remove(i as usize)
}

/// `lcm(1, 2, ..., n)`
pub fn lcm_up_to(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc.lcm(&BigInt::from(k)))
}
