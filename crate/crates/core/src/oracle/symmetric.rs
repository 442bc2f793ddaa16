//! The h-basis side of the Frobenius characteristic: permutation characters
//! of Young subgroups, and hook-content evaluations.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{check_range, Error, Result};
use crate::oracle::class_function::ClassFunction;
use crate::partition::Partition;
use crate::rational::{int, is_nonneg_integer, Rational};

/// `<k^l, chi_lambda> = prod_b (k + c(b)) / h(b)` over the boxes of `lambda`.
pub fn power_multiplicity(base: i64, lambda: &Partition) -> Rational {
    lambda.boxes().fold(Rational::one(), |acc, (r, c)| {
        acc * Rational::new(
            BigInt::from(base + c as i64 - r as i64),
            BigInt::from(lambda.hook_length(r, c)),
        )
    })
}

/// `<gamma_i, chi_lambda> = prod_b (i + 1 + c(b)) / h(b)`, `0 <= i <= n-1`.
pub fn hook_content_gamma(i: usize, lambda: &Partition) -> Result<Rational> {
    let n = lambda.size();
    check_range("i", i as i64, 0, n as i64 - 1)?;
    let value = power_multiplicity(i as i64 + 1, lambda);
    if !is_nonneg_integer(&value) {
        return Err(Error::Verification(format!(
            "hook-content product for i={i}, lambda={lambda} is {value}"
        )));
    }
    Ok(value)
}

/// Number of maps from the cycles `cycles` to the rows of `row_sizes` whose
/// fibres fill each row exactly.
fn cycle_fillings(cycles: &[usize], row_sizes: &[usize]) -> BigInt {
    fn go(
        cycles: &[usize],
        remaining: &mut Vec<usize>,
        memo: &mut HashMap<(usize, Vec<usize>), BigInt>,
    ) -> BigInt {
        let Some((&len, rest)) = cycles.split_first() else {
            return if remaining.iter().all(|&r| r == 0) { BigInt::one() } else { BigInt::zero() };
        };
        let key = (cycles.len(), remaining.clone());
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for row in 0..remaining.len() {
            if remaining[row] >= len {
                remaining[row] -= len;
                total += go(rest, remaining, memo);
                remaining[row] += len;
            }
        }
        memo.insert(key, total.clone());
        total
    }
    let mut remaining = row_sizes.to_vec();
    go(cycles, &mut remaining, &mut HashMap::new())
}

/// Character of `S_n` acting on the cosets of the Young subgroup `S_lambda`
/// (equivalently on row tabloids of shape `lambda`); `ch^{-1}(h_lambda)`.
///
/// A permutation fixes a tabloid iff each of its cycles lies in one row, so
/// the value at cycle type `mu` counts cycle-to-row assignments that fill
/// every row exactly.
pub fn induced_trivial(lambda: &Partition) -> ClassFunction {
    ClassFunction::from_fn(lambda.size(), |mu| int(cycle_fillings(mu.parts(), lambda.parts())))
}

/// A formal rational combination of complete homogeneous symmetric
/// functions `h_lambda`, `lambda |- n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HCombination {
    n: usize,
    coefficients: BTreeMap<Partition, Rational>,
}

impl HCombination {
    pub fn new(n: usize) -> Self {
        Self { n, coefficients: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Adds `c * h_lambda`; zero coefficients are dropped.
    pub fn add_term(&mut self, lambda: Partition, c: Rational) -> Result<()> {
        if lambda.size() != self.n {
            return Err(Error::SizeMismatch { expected: self.n, found: lambda.size() });
        }
        let entry = self.coefficients.entry(lambda).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coefficients.retain(|_, v| !v.is_zero());
        }
        Ok(())
    }

    pub fn with_term(mut self, lambda: Partition, c: Rational) -> Result<Self> {
        self.add_term(lambda, c)?;
        Ok(self)
    }

    pub fn coefficient(&self, lambda: &Partition) -> Rational {
        self.coefficients.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    /// Non-zero terms in canonical partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.coefficients.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Every coefficient a non-negative integer.
    pub fn is_nonneg_integral(&self) -> bool {
        self.coefficients.values().all(is_nonneg_integer)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::new(self.n);
        for (lambda, v) in self.terms() {
            out.add_term(lambda.clone(), v * c).expect("same n");
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (lambda, v) in other.terms() {
            out.add_term(lambda.clone(), v.clone())?;
        }
        Ok(out)
    }
}

/// Inverse Frobenius characteristic: `sum_lambda c_lambda induced_trivial(lambda)`.
pub fn h_to_classfunction(c: &HCombination) -> ClassFunction {
    c.terms().fold(ClassFunction::zero(c.n), |acc, (lambda, coeff)| {
        &acc + &induced_trivial(lambda).scale(coeff)
    })
}
