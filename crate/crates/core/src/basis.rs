//! The four bases of the space of class functions depending only on cycle
//! count: Foulkes characters `phi`, power characters `gamma`, the `psi`
//! basis and its divided form `omega`, together with the change-of-basis
//! matrices between them.
//!
//! Basis indices are 0-based (`phi_0 .. phi_{n-1}`); the divisors
//! `d_k = k / gcd(n, k)` are 1-based, so `omega_k = psi_k / d_{k+1}`.

use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use crate::combinatorics::{binom, factorial, multinomial_m, part_gcd};
use crate::error::{check_range, Error, Result};
use crate::matrix::Matrix;
use crate::oracle::{multiplicities, CharacterTable, ClassFunction, HCombination};
use crate::partition::{partitions, Partition};
use crate::rational::{int, Rational};

/// `d_k = k / gcd(n, k)`, `1 <= k <= n`.
pub fn dk(n: usize, k: usize) -> Result<u64> {
    part_gcd(n, k)
}

/// `(d_1, ..., d_n)`
pub fn divisors(n: usize) -> Vec<u64> {
    (1..=n).map(|k| dk(n, k).expect("1 <= k <= n")).collect()
}

/// A class function of `S_n` that depends only on cycle count, stored as
/// its values at `l = 1..=n` (entry `l - 1`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LengthVector {
    values: Vec<Rational>,
}

impl LengthVector {
    pub fn new(values: Vec<Rational>) -> Self {
        assert!(!values.is_empty(), "S_0 is not supported");
        Self { values }
    }

    pub fn from_fn(n: usize, f: impl FnMut(usize) -> Rational) -> Self {
        Self::new((1..=n).map(f).collect())
    }

    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_| Rational::zero())
    }

    /// The regular character: `n!` at the identity (`l = n`), zero elsewhere.
    pub fn regular(n: usize) -> Self {
        Self::from_fn(n, |l| if l == n { int(factorial(n)) } else { Rational::zero() })
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// Values at `l = 1..=n`.
    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// Value on permutations with `l` cycles.
    pub fn at(&self, l: usize) -> &Rational {
        &self.values[l - 1]
    }

    /// Degree, the value at the identity.
    pub fn degree(&self) -> &Rational {
        self.at(self.n())
    }

    pub fn lift(&self) -> ClassFunction {
        ClassFunction::from_length_values(&self.values)
    }

    pub fn from_class_function(f: &ClassFunction) -> Result<Self> {
        Ok(Self::new(f.length_values()?))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.values.iter().map(|v| v * c).collect())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        assert_eq!(self.n(), other.n(), "length vectors of different S_n");
        Self::new(self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect())
    }
}

impl Add for &LengthVector {
    type Output = LengthVector;
    fn add(self, rhs: &LengthVector) -> LengthVector {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &LengthVector {
    type Output = LengthVector;
    fn sub(self, rhs: &LengthVector) -> LengthVector {
        self.zip_with(rhs, |a, b| a - b)
    }
}

/// Pointwise product of class functions.
impl Mul for &LengthVector {
    type Output = LengthVector;
    fn mul(self, rhs: &LengthVector) -> LengthVector {
        self.zip_with(rhs, |a, b| a * b)
    }
}

fn check_index(n: usize, i: usize) -> Result<()> {
    check_range("basis index", i as i64, 0, n as i64 - 1)
}

fn pow(base: usize, exp: usize) -> BigInt {
    Pow::pow(BigInt::from(base), exp)
}

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 { 1 } else { -1 }
}

/// `gamma_k(pi) = (k + 1)^{l(pi)}`.
pub fn gamma_vector(n: usize, k: usize) -> Result<LengthVector> {
    check_index(n, k)?;
    Ok(LengthVector::from_fn(n, |l| int(pow(k + 1, l))))
}

/// `phi_i(pi) = sum_j (-1)^{i-j} binom(n+1, i-j) (j+1)^{l(pi)}`.
pub fn phi_vector(n: usize, i: usize) -> Result<LengthVector> {
    check_index(n, i)?;
    let (n_, i_) = (n as i64, i as i64);
    Ok(LengthVector::from_fn(n, |l| {
        let v: BigInt = (0..n)
            .map(|j| binom(n_ + 1, i_ - j as i64) * sign(i_ - j as i64) * pow(j + 1, l))
            .sum();
        int(v)
    }))
}

/// `psi_i = sum_j (-1)^{i-j} binom(i+1, i-j) (j+1)^l`.
pub fn psi_vector(n: usize, i: usize) -> Result<LengthVector> {
    check_index(n, i)?;
    let i_ = i as i64;
    Ok(LengthVector::from_fn(n, |l| {
        let v: BigInt = (0..n)
            .map(|j| binom(i_ + 1, i_ - j as i64) * sign(i_ - j as i64) * pow(j + 1, l))
            .sum();
        int(v)
    }))
}

/// `omega_k = psi_k / d_{k+1}`.
pub fn omega_vector(n: usize, k: usize) -> Result<LengthVector> {
    let psi = psi_vector(n, k)?;
    Ok(psi.scale(&Rational::new(BigInt::one(), BigInt::from(dk(n, k + 1)?))))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisTag {
    Phi,
    Gamma,
    Psi,
    Omega,
}

impl BasisTag {
    pub const ALL: [BasisTag; 4] = [BasisTag::Phi, BasisTag::Gamma, BasisTag::Psi, BasisTag::Omega];

    pub fn name(self) -> &'static str {
        match self {
            BasisTag::Phi => "phi",
            BasisTag::Gamma => "gamma",
            BasisTag::Psi => "psi",
            BasisTag::Omega => "omega",
        }
    }

    /// The `i`-th basis vector.
    pub fn vector(self, n: usize, i: usize) -> Result<LengthVector> {
        match self {
            BasisTag::Phi => phi_vector(n, i),
            BasisTag::Gamma => gamma_vector(n, i),
            BasisTag::Psi => psi_vector(n, i),
            BasisTag::Omega => omega_vector(n, i),
        }
    }

    pub fn vectors(self, n: usize) -> Vec<LengthVector> {
        (0..n).map(|i| self.vector(n, i).expect("index in range")).collect()
    }
}

impl fmt::Display for BasisTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BasisTag {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        BasisTag::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| format!("unknown basis {s:?}"))
    }
}

/// Coordinates of an element of `CF_l(S_n)` in one of the four bases.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasisCoords {
    pub tag: BasisTag,
    pub coords: Vec<Rational>,
}

impl BasisCoords {
    pub fn new(tag: BasisTag, coords: Vec<Rational>) -> Self {
        assert!(!coords.is_empty(), "S_0 is not supported");
        Self { tag, coords }
    }

    pub fn unit(tag: BasisTag, n: usize, i: usize) -> Self {
        Self::new(tag, (0..n).map(|j| int(i64::from(i == j))).collect())
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    /// `sum_i coords[i] * b_i`.
    pub fn to_length_vector(&self) -> LengthVector {
        let n = self.n();
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(LengthVector::zero(n), |acc, (i, c)| {
                &acc + &self.tag.vector(n, i).expect("index in range").scale(c)
            })
    }

    pub fn convert(&self, to: BasisTag) -> BasisCoords {
        let m = basis_matrix(self.n(), self.tag, to);
        BasisCoords::new(to, m.mul_vec(&self.coords))
    }

    pub fn expect_tag(&self, tag: BasisTag) -> Result<()> {
        if self.tag == tag {
            Ok(())
        } else {
            Err(Error::WrongBasis { expected: tag.name(), found: self.tag.name() })
        }
    }
}

fn square(n: usize, f: impl Fn(i64, i64) -> BigInt) -> Matrix {
    Matrix::from_fn(n, n, |i, j| int(f(i as i64, j as i64)))
}

fn omega_scaling(n: usize, invert: bool) -> Matrix {
    let entries: Vec<Rational> = divisors(n)
        .into_iter()
        .map(|d| if invert { Rational::new(BigInt::one(), BigInt::from(d)) } else { int(d) })
        .collect();
    Matrix::diagonal(&entries)
}

/// Expansion matrix `E` with `from_i = sum_j E[i][j] to_j`.
///
/// The six `phi`/`gamma`/`psi` pairs use their closed binomial forms;
/// `omega` enters through the diagonal `psi_k = d_{k+1} omega_k`.
pub fn expansion_matrix(n: usize, from: BasisTag, to: BasisTag) -> Matrix {
    use BasisTag::*;
    let n_ = n as i64;
    match (from, to) {
        _ if from == to => Matrix::identity(n),
        (Phi, Gamma) => square(n, |i, j| binom(n_ + 1, i - j) * sign(i - j)),
        (Gamma, Phi) => square(n, |i, j| binom(n_ + i - j, i - j)),
        (Psi, Gamma) => square(n, |i, j| binom(i + 1, i - j) * sign(i - j)),
        (Gamma, Psi) => square(n, |i, j| binom(i + 1, i - j)),
        (Phi, Psi) => square(n, |i, j| binom(n_ - j - 1, i - j) * sign(i - j)),
        (Psi, Phi) => square(n, |i, j| binom(n_ - j - 1, i - j)),
        (Omega, Psi) => omega_scaling(n, true),
        (Psi, Omega) => omega_scaling(n, false),
        (Omega, other) => &omega_scaling(n, true) * &expansion_matrix(n, Psi, other),
        (other, Omega) => &expansion_matrix(n, other, Psi) * &omega_scaling(n, false),
        _ => unreachable!("all pairs among phi, gamma, psi are explicit"),
    }
}

/// Coordinate change: `coords_to = basis_matrix(n, from, to) * coords_from`.
pub fn basis_matrix(n: usize, from: BasisTag, to: BasisTag) -> Matrix {
    expansion_matrix(n, from, to).transpose()
}

/// `phi`-coordinates `r_i = <theta, eps_i> / binom(n-1, i)` with
/// `eps_i = chi_{(n-i, 1^i)}`, computed against the character table.
pub fn phi_coords(theta: &LengthVector) -> BasisCoords {
    let n = theta.n();
    let table = CharacterTable::of(n);
    let mults = multiplicities(&theta.lift());
    let coords = (0..n)
        .map(|i| {
            let idx = table.index_of(&Partition::hook(n, i)).expect("hook is a partition of n");
            &mults[idx] / int(binom(n as i64 - 1, i as i64))
        })
        .collect();
    BasisCoords::new(BasisTag::Phi, coords)
}

/// Coordinates of `theta` in any basis.
pub fn coords_in(theta: &LengthVector, tag: BasisTag) -> BasisCoords {
    phi_coords(theta).convert(tag)
}

/// `ch(psi_k) = sum_{l(lambda) = k+1} M(lambda) h_lambda`.
pub fn ch_psi(n: usize, k: usize) -> Result<HCombination> {
    check_index(n, k)?;
    let mut out = HCombination::new(n);
    for lambda in partitions(n).into_iter().filter(|l| l.len() == k + 1) {
        let m = multinomial_m(&lambda);
        out.add_term(lambda, int(m))?;
    }
    Ok(out)
}

/// `ch(gamma_j) = sum_lambda binom(j+1, l(lambda)) M(lambda) h_lambda`.
pub fn ch_gamma(n: usize, j: usize) -> Result<HCombination> {
    check_index(n, j)?;
    let mut out = HCombination::new(n);
    for lambda in partitions(n) {
        let c = binom(j as i64 + 1, lambda.len() as i64) * multinomial_m(&lambda);
        out.add_term(lambda, int(c))?;
    }
    Ok(out)
}

/// `ch(psi_k)` assembled from `ch(gamma_j)` through the defining alternating sum.
pub fn ch_psi_from_gamma(n: usize, k: usize) -> Result<HCombination> {
    check_index(n, k)?;
    let k_ = k as i64;
    (0..n).try_fold(HCombination::new(n), |acc, j| {
        let c = int(binom(k_ + 1, k_ - j as i64) * sign(k_ - j as i64));
        acc.add(&ch_gamma(n, j)?.scale(&c))
    })
}

/// Restriction to `S_{n-1}`. A permutation of `S_{n-1}` with `l` cycles
/// gains the fixed point `n` and has `l + 1` cycles in `S_n`.
pub fn restrict_length(theta: &LengthVector) -> Result<LengthVector> {
    let n = theta.n();
    if n < 2 {
        return Err(Error::OutOfRange { what: "n", value: n as i64, lo: 2, hi: i64::MAX });
    }
    Ok(LengthVector::new(theta.values()[1..].to_vec()))
}

/// `phi_i |_{S_{n-1}} = (n - i) phi_{i-1} + (i + 1) phi_i`, with `phi_{-1} = 0`
/// and `phi_{n-1}` of `S_{n-1}` read as zero.
pub fn branching_rhs(n: usize, i: usize) -> Result<LengthVector> {
    check_index(n, i)?;
    if n < 2 {
        return Err(Error::OutOfRange { what: "n", value: n as i64, lo: 2, hi: i64::MAX });
    }
    let m = n - 1;
    let mut out = LengthVector::zero(m);
    if i >= 1 {
        out = &out + &phi_vector(m, i - 1)?.scale(&int((n - i) as i64));
    }
    if i < m {
        out = &out + &phi_vector(m, i)?.scale(&int((i + 1) as i64));
    }
    Ok(out)
}
