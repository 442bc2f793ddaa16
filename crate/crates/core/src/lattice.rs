//! The lattices `X < Y < Z` of (virtual) characters, the cone `L` of
//! genuine characters depending only on cycle count, and its explicit
//! parametrization by `N^n`.
//!
//! - `Z`: all virtual characters of `S_n`.
//! - `Y`: virtual characters depending only on cycle count; basis `omega`.
//! - `X`: integer span of the Foulkes characters; bases `phi`, `gamma`, `psi`.
//!
//! Membership in `L`, `Y` or `Z` is always decided by the character-table
//! oracle, never by inverting the parametrization.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::basis::{basis_matrix, divisors, expansion_matrix, phi_vector, BasisCoords, BasisTag, LengthVector};
use crate::combinatorics::{binom, factorial, lcm_up_to, multinomial_m};
use crate::error::{Error, Result};
use crate::oracle::{
    h_to_classfunction, hook_content_gamma, is_genuine_character, multiplicities, std_inner,
    CharacterCertificate, ClassFunction, HCombination,
};
use crate::partition::{partitions, Partition};
use crate::rational::{floor, frac, int, is_integral, mod_floor, Rational};

/// A parameter `a in N^n` for the characters `theta_a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParamVector {
    a: Vec<u64>,
}

impl ParamVector {
    pub fn new(a: Vec<u64>) -> Self {
        assert!(!a.is_empty(), "S_0 is not supported");
        Self { a }
    }

    /// Rejects negative entries.
    pub fn from_signed(a: &[i64]) -> Result<Self> {
        let a = a
            .iter()
            .enumerate()
            .map(|(index, &value)| {
                u64::try_from(value).map_err(|_| Error::NegativeParameter { index, value })
            })
            .collect::<Result<Vec<u64>>>()?;
        Ok(Self::new(a))
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn entries(&self) -> &[u64] {
        &self.a
    }

    /// `0 <= a_k < d_{k+1}` for every `k`.
    pub fn is_restricted(&self) -> bool {
        self.a.iter().zip(divisors(self.n())).all(|(&a, d)| a < d)
    }
}

/// The `phi`-coordinates of `theta_a`:
/// `floor(a_k / d_{k+1}) + { sum_j binom(n-k-1, j-k) a_j / d_{j+1} }`.
pub fn theta_from_params(a: &ParamVector) -> BasisCoords {
    let n = a.n();
    let d = divisors(n);
    let scaled: Vec<Rational> = a
        .entries()
        .iter()
        .zip(&d)
        .map(|(&a, &d)| Rational::new(BigInt::from(a), BigInt::from(d)))
        .collect();
    let coords = (0..n)
        .map(|k| {
            let hat: Rational = (k..n)
                .map(|j| int(binom((n - k - 1) as i64, j as i64 - k as i64)) * &scaled[j])
                .sum();
            int(a.entries()[k] / d[k]) + frac(&hat)
        })
        .collect();
    BasisCoords::new(BasisTag::Phi, coords)
}

fn certify(theta: &BasisCoords) -> Result<CharacterCertificate> {
    theta.expect_tag(BasisTag::Phi)?;
    is_genuine_character(&theta.to_length_vector().lift()).into_result()
}

/// The unique `a` with `theta_from_params(a) == theta`.
///
/// With `r` the `phi`-coordinates, `q_k = floor(r_k)` and `c` the (integral)
/// `omega`-coordinates of the fractional part, `a_k = d_{k+1} q_k + (c_k mod d_{k+1})`.
pub fn params_from_theta(theta: &BasisCoords) -> Result<ParamVector> {
    certify(theta)?;
    let n = theta.n();
    let decomposition = cone_decompose(theta)?;
    let omega = decomposition.theta_p.convert(BasisTag::Omega);
    let a = theta
        .coords
        .iter()
        .zip(&omega.coords)
        .zip(divisors(n))
        .map(|((r, c), d)| {
            if !is_integral(c) {
                return Err(Error::Verification(format!(
                    "fractional part has non-integral omega-coordinate {c}"
                )));
            }
            let d = BigInt::from(d);
            let a = &d * floor(r) + mod_floor(c.numer(), &d);
            a.to_u64()
                .ok_or_else(|| Error::Verification(format!("parameter {a} does not fit in u64")))
        })
        .collect::<Result<Vec<u64>>>()?;
    Ok(ParamVector::new(a))
}

/// `theta = theta_F + theta_P` with `theta_F` a non-negative integer
/// combination of Foulkes characters and `theta_P` in the fundamental
/// parallelepiped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeDecomposition {
    pub theta_f: BasisCoords,
    pub theta_p: BasisCoords,
}

pub fn cone_decompose(theta: &BasisCoords) -> Result<ConeDecomposition> {
    certify(theta)?;
    let theta_f = BasisCoords::new(BasisTag::Phi, theta.coords.iter().map(|r| int(floor(r))).collect());
    let theta_p = BasisCoords::new(BasisTag::Phi, theta.coords.iter().map(frac).collect());
    certify(&theta_p)?;
    Ok(ConeDecomposition { theta_f, theta_p })
}

/// A member of the fundamental domain `Z ∩ P`, with its parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomainElement {
    pub params: ParamVector,
    pub theta: BasisCoords,
}

/// Iterates over the box `prod_k [0, bounds[k])` in lexicographic order.
pub fn param_box(bounds: &[u64]) -> impl Iterator<Item = ParamVector> + '_ {
    let total: u64 = bounds.iter().product();
    (0..total).map(move |mut idx| {
        let mut a = vec![0u64; bounds.len()];
        for k in (0..bounds.len()).rev() {
            a[k] = idx % bounds[k];
            idx /= bounds[k];
        }
        ParamVector::new(a)
    })
}

/// `theta_a` for every restricted `a` (`0 <= a_k < d_{k+1}`), lexicographic in `a`.
pub fn fundamental_domain(n: usize) -> Vec<DomainElement> {
    let bounds = divisors(n);
    let params: Vec<ParamVector> = param_box(&bounds).collect();
    params
        .into_par_iter()
        .map(|params| {
            let theta = theta_from_params(&params);
            DomainElement { params, theta }
        })
        .collect()
}

/// `[Y : X] = prod_k d_k`.
pub fn lattice_index(n: usize) -> BigInt {
    divisors(n).into_iter().map(BigInt::from).product()
}

/// `n! / prod_k gcd(k, n)`
pub fn lattice_index_closed(n: usize) -> BigInt {
    let g: BigInt = (1..=n).map(|k| BigInt::from(k.gcd(&n))).product();
    factorial(n) / g
}

/// `sigma_n = lcm(d_1, ..., d_n)`.
pub fn sigma_n(n: usize) -> BigInt {
    divisors(n)
        .into_iter()
        .fold(BigInt::one(), |acc, d| acc.lcm(&BigInt::from(d)))
}

/// `lcm(1, ..., n) / n`
pub fn sigma_closed(n: usize) -> BigInt {
    lcm_up_to(n) / BigInt::from(n)
}

fn clears_denominators(m: &BigInt, theta: &BasisCoords) -> bool {
    theta.coords.iter().all(|c| is_integral(&(c * int(m.clone()))))
}

/// `sigma_n * theta` has integer `phi`-coordinates for every `theta` in the
/// fundamental domain, and every proper divisor of `sigma_n` fails on some
/// element. Returns `sigma_n`.
pub fn verify_sigma_minimality(n: usize) -> Result<BigInt> {
    let sigma = sigma_n(n);
    let domain = fundamental_domain(n);
    if let Some(bad) = domain.iter().find(|e| !clears_denominators(&sigma, &e.theta)) {
        return Err(Error::Verification(format!(
            "sigma_{n} = {sigma} does not clear theta_a for a = {:?}",
            bad.params.entries()
        )));
    }
    let proper = (1..sigma.to_u64().unwrap_or(u64::MAX))
        .map(BigInt::from)
        .filter(|m| sigma.is_multiple_of(m));
    for m in proper {
        if domain.iter().all(|e| clears_denominators(&m, &e.theta)) {
            return Err(Error::Verification(format!(
                "proper divisor {m} of sigma_{n} = {sigma} already clears all denominators"
            )));
        }
    }
    Ok(sigma)
}

/// Whether `theta` is a virtual character (all irreducible multiplicities integral).
pub fn is_in_y(theta: &LengthVector) -> bool {
    is_genuine_character(&theta.lift()).is_virtual_character()
}

/// `K[lambda][i] = <phi_i, chi_lambda>`, an integer matrix.
fn foulkes_multiplicity_matrix(n: usize) -> Vec<Vec<i64>> {
    let per_phi: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            multiplicities(&phi_vector(n, i).expect("index in range").lift())
                .into_iter()
                .map(|m| m.to_integer().to_i64().expect("small multiplicity"))
                .collect()
        })
        .collect();
    let classes = partitions(n).len();
    (0..classes).map(|l| (0..n).map(|i| per_phi[i][l]).collect()).collect()
}

/// `Y ∩ P` found by search, independently of the parametrization: a
/// `phi`-coordinate `r_i` of a virtual character has denominator dividing
/// `binom(n-1, i)`, so every candidate `t_i / binom(n-1, i)`, `0 <= t_i <
/// binom(n-1, i)`, is tested against the character table.
///
/// The candidate count is `prod_i binom(n-1, i)`; practical for `n <= 7`.
pub fn fundamental_domain_by_search(n: usize) -> Vec<BasisCoords> {
    let k = foulkes_multiplicity_matrix(n);
    let b: Vec<i64> = (0..n).map(|i| binom(n as i64 - 1, i as i64).to_i64().unwrap()).collect();
    let l = b.iter().fold(1i64, |acc, x| acc.lcm(x));
    let bounds: Vec<u64> = b.iter().map(|&x| x as u64).collect();
    let params: Vec<ParamVector> = param_box(&bounds).collect();
    params
        .into_par_iter()
        .filter_map(|t| {
            let numer: Vec<i64> = t.entries().iter().zip(&b).map(|(&t, &b)| t as i64 * (l / b)).collect();
            let ok = k
                .iter()
                .all(|row| row.iter().zip(&numer).map(|(a, b)| a * b).sum::<i64>() % l == 0);
            ok.then(|| {
                BasisCoords::new(
                    BasisTag::Phi,
                    numer.iter().map(|&x| Rational::new(BigInt::from(x), BigInt::from(l))).collect(),
                )
            })
        })
        .collect()
}

/// Checks `params_from_theta(theta_from_params(a)) == a` and injectivity over
/// the box `prod_k [0, 2 d_{k+1})`; every image must pass the character
/// oracle. Returns the number of parameters checked.
pub fn verify_roundtrip_box(n: usize) -> Result<usize> {
    let bounds: Vec<u64> = divisors(n).into_iter().map(|d| 2 * d).collect();
    let params: Vec<ParamVector> = param_box(&bounds).collect();
    let images = params
        .par_iter()
        .map(|a| {
            let theta = theta_from_params(a);
            let back = params_from_theta(&theta)?;
            if &back != a {
                return Err(Error::Verification(format!(
                    "roundtrip sent a = {:?} to {:?}",
                    a.entries(),
                    back.entries()
                )));
            }
            Ok(theta.coords)
        })
        .collect::<Result<Vec<_>>>()?;
    let distinct: HashSet<&Vec<Rational>> = images.iter().collect();
    if distinct.len() != images.len() {
        return Err(Error::Verification(format!(
            "{} parameters map to only {} distinct characters",
            images.len(),
            distinct.len()
        )));
    }
    Ok(images.len())
}

/// Every character whose `phi`-coordinates lie in `(1/sigma_n) Z ∩ [0, 2)`
/// is `theta_a` for some `a` in the box `prod_k [0, 2 d_{k+1})`, and
/// conversely. Candidates are tested by the character table alone.
///
/// The sweep visits `(2 sigma_n)^n` points; practical for `n <= 5`.
/// Returns the number of characters found.
pub fn verify_completeness_sweep(n: usize) -> Result<usize> {
    let sigma = sigma_n(n).to_i64().expect("small sigma");
    let k = foulkes_multiplicity_matrix(n);
    let bounds = vec![(2 * sigma) as u64; n];
    let total: u64 = bounds.iter().product();
    let found: HashSet<Vec<i64>> = (0..total)
        .into_par_iter()
        .filter_map(|mut idx| {
            let mut t = vec![0i64; n];
            for slot in t.iter_mut().rev() {
                *slot = (idx % (2 * sigma as u64)) as i64;
                idx /= 2 * sigma as u64;
            }
            let ok = k.iter().all(|row| {
                let m: i64 = row.iter().zip(&t).map(|(a, b)| a * b).sum();
                m >= 0 && m % sigma == 0
            });
            ok.then_some(t)
        })
        .collect();

    let box_bounds: Vec<u64> = divisors(n).into_iter().map(|d| 2 * d).collect();
    let sigma_r = int(sigma);
    let image: HashSet<Vec<i64>> = param_box(&box_bounds)
        .map(|a| {
            theta_from_params(&a)
                .coords
                .iter()
                .map(|c| {
                    let scaled = c * &sigma_r;
                    assert!(is_integral(&scaled), "sigma_n clears every denominator");
                    scaled.to_integer().to_i64().unwrap()
                })
                .collect()
        })
        .collect();

    if let Some(missing) = found.iter().find(|t| !image.contains(*t)) {
        return Err(Error::Verification(format!(
            "character with sigma-scaled phi-coordinates {missing:?} is not parametrized"
        )));
    }
    if let Some(extra) = image.iter().find(|t| !found.contains(*t)) {
        return Err(Error::Verification(format!(
            "theta_a with sigma-scaled phi-coordinates {extra:?} was not found by the sweep"
        )));
    }
    Ok(found.len())
}

/// The character `l -> (n-1)^{l-1}` with its h-expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialCharacter {
    pub values: LengthVector,
    pub expansion: HCombination,
    pub certificate: CharacterCertificate,
}

/// `(n-1)^{l-1}`, whose Frobenius characteristic is
/// `(1/(n-1)) sum_lambda binom(n-1, l(lambda)) M(lambda) h_lambda`.
///
/// Fails unless every h-coefficient is a non-negative integer, the
/// expansion reproduces the class function, and the oracle accepts it.
pub fn special_theta(n: usize) -> Result<SpecialCharacter> {
    if n < 2 {
        return Err(Error::OutOfRange { what: "n", value: n as i64, lo: 2, hi: i64::MAX });
    }
    let base = BigInt::from(n - 1);
    let values = LengthVector::from_fn(n, |l| int(num_traits::pow(base.clone(), l - 1)));
    let mut expansion = HCombination::new(n);
    for lambda in partitions(n) {
        let c = binom(n as i64 - 1, lambda.len() as i64) * multinomial_m(&lambda);
        expansion.add_term(lambda, Rational::new(c, base.clone()))?;
    }
    if !expansion.is_nonneg_integral() {
        let (lambda, c) = expansion
            .terms()
            .find(|(_, c)| !crate::rational::is_nonneg_integer(c))
            .expect("some coefficient fails");
        return Err(Error::Verification(format!("h-coefficient of h_{lambda} is {c}")));
    }
    if h_to_classfunction(&expansion) != values.lift() {
        return Err(Error::Verification("h-expansion does not reproduce (n-1)^(l-1)".into()));
    }
    let certificate = is_genuine_character(&values.lift()).into_result()?;
    Ok(SpecialCharacter { values, expansion, certificate })
}

/// `<gamma_j, chi_nu>` for `nu = (2, 2, 1^{n-4})` in closed form.
pub fn gamma_box(n: usize, j: usize) -> Rational {
    let n_ = n as i64;
    let j_ = j as i64;
    if j_ <= n_ - 4 {
        int(0)
    } else if j_ == n_ - 3 {
        Rational::new(BigInt::from((n_ - 2) * (n_ - 3)), BigInt::from(2))
    } else if j_ == n_ - 2 {
        Rational::new(BigInt::from(n_ * (n_ - 1) * (n_ - 3)), BigInt::from(2))
    } else {
        Rational::new(BigInt::from(n_ * n_ * (n_ + 1) * (n_ - 3)), BigInt::from(4))
    }
}

/// `nu = (2, 2, 1^{n-4})`
pub fn witness_partition(n: usize) -> Partition {
    Partition::from_composition(&[&[2, 2][..], &vec![1; n - 4]].concat())
}

fn check_witness_n(n: usize) -> Result<()> {
    if n < 4 {
        return Err(Error::OutOfRange { what: "n", value: n as i64, lo: 4, hi: i64::MAX });
    }
    Ok(())
}

/// `<c_{n-2} phi_{n-2}, chi_nu>` from the closed forms: `c_j = binom(2n-2-j, n)/(n-1)`
/// and the piecewise values of `<gamma_j, chi_nu>`.
///
/// Only `gamma_{n-3}` and `gamma_{n-2}` pair non-trivially with `chi_nu`, so
/// the value simplifies to `(n-3)/(n-1)`, which is never an integer for
/// `n > 3`. Fails if the value is integral.
pub fn no_better_witness(n: usize) -> Result<Rational> {
    check_witness_n(n)?;
    let n_ = n as i64;
    let i = n_ - 2;
    let c = Rational::new(binom(2 * n_ - 2 - i, n_), BigInt::from(n_ - 1));
    let pairing: Rational = (0..n)
        .map(|j| {
            let e = i - j as i64;
            let s = if e.rem_euclid(2) == 0 { 1 } else { -1 };
            int(binom(n_ + 1, e) * s) * gamma_box(n, j)
        })
        .sum();
    let value = c * pairing;
    if is_integral(&value) {
        return Err(Error::Verification(format!("witness at n={n} is the integer {value}")));
    }
    Ok(value)
}

/// `(n-3)/(n-1)`, the simplified witness value.
pub fn witness_value(n: usize) -> Rational {
    Rational::new(BigInt::from(n as i64 - 3), BigInt::from(n as i64 - 1))
}

/// The same pairing recomputed from the basis matrices and hook-content
/// products: `c` is the `phi`-coordinate vector of `gamma_{n-2}/(n-1)`, and
/// `<phi_{n-2}, chi_nu> = sum_j E[n-2][j] <gamma_j, chi_nu>` with `E` the
/// `phi -> gamma` expansion.
pub fn no_better_witness_recomputed(n: usize) -> Result<Rational> {
    check_witness_n(n)?;
    let theta_gamma: Vec<Rational> = (0..n)
        .map(|j| if j == n - 2 { Rational::new(BigInt::one(), BigInt::from(n - 1)) } else { Rational::zero() })
        .collect();
    let c = basis_matrix(n, BasisTag::Gamma, BasisTag::Phi).mul_vec(&theta_gamma);
    let nu = witness_partition(n);
    let e = expansion_matrix(n, BasisTag::Phi, BasisTag::Gamma);
    let mut pairing = Rational::zero();
    for j in 0..n {
        pairing += &e[(n - 2, j)] * hook_content_gamma(j, &nu)?;
    }
    Ok(&c[n - 2] * pairing)
}

/// Third route, by the character table: `<c_{n-2} phi_{n-2}, chi_nu>` with
/// `c_{n-2}` read from the oracle's `phi`-coordinates of `(n-1)^{l-1}`.
pub fn no_better_witness_by_table(n: usize) -> Result<Rational> {
    check_witness_n(n)?;
    let base = BigInt::from(n - 1);
    let theta = LengthVector::from_fn(n, |l| int(num_traits::pow(base.clone(), l - 1)));
    let c = crate::basis::phi_coords(&theta).coords[n - 2].clone();
    let phi = phi_vector(n, n - 2)?.lift();
    let chi = ClassFunction::irreducible(&witness_partition(n));
    Ok(c * std_inner(&phi, &chi)?)
}

/// `omega`-coordinates of every element of `Y ∩ P` are integers. Since `Y`
/// is `X + (Y ∩ P)` and `phi_i` has integral `omega`-coordinates, this
/// covers all of `Y`.
pub fn verify_omega_integrality(n: usize) -> Result<usize> {
    let to_omega = basis_matrix(n, BasisTag::Phi, BasisTag::Omega);
    for i in 0..n {
        let unit = BasisCoords::unit(BasisTag::Phi, n, i).coords;
        if !to_omega.mul_vec(&unit).iter().all(is_integral) {
            return Err(Error::Verification(format!("phi_{i} has non-integral omega-coordinates")));
        }
    }
    let found = fundamental_domain_by_search(n);
    for theta in &found {
        if !is_in_y(&theta.to_length_vector()) {
            return Err(Error::Verification(format!("search returned a non-member {:?}", theta.coords)));
        }
        let omega = to_omega.mul_vec(&theta.coords);
        if let Some(bad) = omega.iter().find(|c| !is_integral(c)) {
            return Err(Error::Verification(format!(
                "{:?} in Y has omega-coordinate {bad}",
                theta.coords
            )));
        }
    }
    Ok(found.len())
}

/// `true` when all coordinates are non-negative.
pub fn is_nonneg(theta: &BasisCoords) -> bool {
    theta.coords.iter().all(|c| !c.is_negative())
}
