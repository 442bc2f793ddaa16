//! Products of Foulkes characters and the inner product on `CF_l(S_n)`
//! for which the Foulkes characters are orthonormal.
//!
//! The structure constants `c_ijk` of `phi_i phi_j = sum_k c_ijk phi_k` are
//! computed three ways: a closed alternating sum, decomposition of the
//! pointwise product, and direct counting of factorizations `x y = z` by
//! descent numbers.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::basis::{phi_coords, phi_vector, LengthVector};
use crate::combinatorics::{binom, eulerian, factorial};
use crate::error::{check_range, Error, Result};
use crate::matrix::Matrix;
use crate::oracle::CharacterTable;
use crate::partition::Partition;
use crate::permutation::Permutation;
use crate::rational::{int, is_integral, Rational};

/// Largest `n` for which `c_brute` runs by default (`(n!)^2` products).
pub const DEFAULT_PRODUCT_BRUTE_CAP: usize = 7;

/// Largest `n` for the literal n-cycle-pair enumeration of `foulkes_inner_brute`.
pub const DEFAULT_INNER_BRUTE_CAP: usize = 5;

/// `c[i][j][k]`, all indices in `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants {
    n: usize,
    c: Vec<Vec<Vec<BigInt>>>,
}

impl StructureConstants {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &BigInt {
        &self.c[i][j][k]
    }

    /// `(c_ij0, ..., c_ij(n-1))`
    pub fn row(&self, i: usize, j: usize) -> &[BigInt] {
        &self.c[i][j]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.c[i][j] == self.c[j][i]))
    }

    /// `sum_k c_ijk A(n,k) = A(n,i) A(n,j)` for all `i, j`.
    pub fn satisfies_row_sums(&self) -> bool {
        let a: Vec<BigInt> = (0..self.n).map(|k| eulerian(self.n, k as i64)).collect();
        (0..self.n).all(|i| {
            (0..self.n).all(|j| {
                let lhs: BigInt = self.c[i][j].iter().zip(&a).map(|(c, a)| c * a).sum();
                lhs == &a[i] * &a[j]
            })
        })
    }

    fn from_fn(n: usize, f: impl Fn(usize, usize) -> Result<Vec<BigInt>> + Sync) -> Result<Self> {
        let c = (0..n)
            .into_par_iter()
            .map(|i| (0..n).map(|j| f(i, j)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { n, c })
    }
}

fn check_pair(n: usize, i: usize, j: usize) -> Result<()> {
    check_range("i", i as i64, 0, n as i64 - 1)?;
    check_range("j", j as i64, 0, n as i64 - 1)
}

/// Closed form
/// `c_ijk = sum_{u<=i, v<=j} (-1)^{i-u+j-v} binom(n+1, i-u) binom(n+1, j-v) binom(uv+u+v+n-k, n)`.
pub fn c_formula(n: usize, i: usize, j: usize) -> Result<Vec<BigInt>> {
    check_pair(n, i, j)?;
    let n_ = n as i64;
    let (i_, j_) = (i as i64, j as i64);
    (0..n_)
        .map(|k| {
            let mut total = BigInt::zero();
            for u in 0..=i_ {
                for v in 0..=j_ {
                    let term = binom(n_ + 1, i_ - u) * binom(n_ + 1, j_ - v) * binom(u * v + u + v + n_ - k, n_);
                    if (i_ - u + j_ - v) % 2 == 0 {
                        total += term;
                    } else {
                        total -= term;
                    }
                }
            }
            if total < BigInt::zero() {
                return Err(Error::Verification(format!("c_{i}{j}{k} = {total} is negative at n={n}")));
            }
            Ok(total)
        })
        .collect()
}

/// `phi`-coordinates of the pointwise product `phi_i phi_j`.
pub fn c_from_values(n: usize, i: usize, j: usize) -> Result<Vec<BigInt>> {
    check_pair(n, i, j)?;
    let product = &phi_vector(n, i)? * &phi_vector(n, j)?;
    phi_coords(&product)
        .coords
        .into_iter()
        .enumerate()
        .map(|(k, c)| {
            if is_integral(&c) {
                Ok(c.to_integer())
            } else {
                Err(Error::Verification(format!("c_{i}{j}{k} = {c} is not an integer at n={n}")))
            }
        })
        .collect()
}

pub fn c_formula_tensor(n: usize) -> Result<StructureConstants> {
    StructureConstants::from_fn(n, |i, j| c_formula(n, i, j))
}

pub fn c_from_values_tensor(n: usize) -> Result<StructureConstants> {
    StructureConstants::from_fn(n, |i, j| c_from_values(n, i, j))
}

/// Counts `#{(x, y) : des(x) = i, des(y) = j, x y = z}` for every `z` in
/// `S_n` and checks that the counts depend only on `des(z)`. Products
/// compose right to left.
///
/// Costs `(n!)^2` products; no cap is applied here.
pub fn c_brute_tensor(n: usize) -> Result<StructureConstants> {
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let inverses: Vec<Vec<usize>> = perms.iter().map(|x| x.inverse().images().to_vec()).collect();
    let des: Vec<usize> = perms.iter().map(Permutation::descents).collect();

    // one (i, j) count table per z
    let tables: Vec<Vec<u64>> = perms
        .par_iter()
        .map(|z| {
            let z = z.images();
            let mut table = vec![0u64; n * n];
            for (xi, x_inv) in inverses.iter().enumerate() {
                // y = x^{-1} z, so y(t) = x^{-1}(z(t))
                let des_y = (0..n.saturating_sub(1))
                    .filter(|&t| x_inv[z[t]] > x_inv[z[t + 1]])
                    .count();
                table[des[xi] * n + des_y] += 1;
            }
            table
        })
        .collect();

    let mut reference: Vec<Option<(usize, &Vec<u64>)>> = vec![None; n];
    for (zi, table) in tables.iter().enumerate() {
        match reference[des[zi]] {
            None => reference[des[zi]] = Some((zi, table)),
            Some((first, expected)) if expected != table => {
                return Err(Error::Verification(format!(
                    "factorization counts differ between z = {:?} and z = {:?}, both with {} descents",
                    perms[first].one_line(),
                    perms[zi].one_line(),
                    des[zi]
                )))
            }
            Some(_) => {}
        }
    }

    let mut c = vec![vec![vec![BigInt::zero(); n]; n]; n];
    for (k, entry) in reference.iter().enumerate() {
        let (_, table) = entry.expect("every descent count 0..n-1 occurs");
        for i in 0..n {
            for j in 0..n {
                c[i][j][k] = BigInt::from(table[i * n + j]);
            }
        }
    }
    Ok(StructureConstants { n, c })
}

/// Brute-force `(c_ij0, ..., c_ij(n-1))`, limited to `n <= DEFAULT_PRODUCT_BRUTE_CAP`.
pub fn c_brute(n: usize, i: usize, j: usize) -> Result<Vec<BigInt>> {
    check_pair(n, i, j)?;
    check_range("n", n as i64, 1, DEFAULT_PRODUCT_BRUTE_CAP as i64)?;
    Ok(c_brute_tensor(n)?.row(i, j).to_vec())
}

/// Class-algebra structure constants of `Z(Q[S_n])`:
/// `a(mu, nu; kappa) = #{(x, y) in C_mu x C_nu : x y = g}` for fixed `g in C_kappa`,
/// computed as `|C_mu| |C_nu| / n! sum_chi chi(mu) chi(nu) chi(kappa) / chi(1)`.
#[derive(Debug)]
pub struct ClassAlgebra {
    table: std::sync::Arc<CharacterTable>,
    /// `a[mu][nu][kappa]`
    constants: Vec<Vec<Vec<BigInt>>>,
}

impl ClassAlgebra {
    pub fn new(n: usize) -> Result<Self> {
        let table = CharacterTable::of(n);
        let classes = table.partitions().len();
        let degrees = table.degrees();
        let order = int(table.group_order().clone());
        let sizes: Vec<Rational> = table.class_sizes().iter().map(|s| int(s.clone())).collect();
        let constants = (0..classes)
            .into_par_iter()
            .map(|mu| {
                (0..classes)
                    .map(|nu| {
                        (0..classes)
                            .map(|kappa| {
                                let sum: Rational = (0..classes)
                                    .map(|l| {
                                        let row = table.row(l);
                                        Rational::new(
                                            BigInt::from(row[mu] * row[nu]) * row[kappa],
                                            BigInt::from(degrees[l]),
                                        )
                                    })
                                    .sum();
                                let a = &sizes[mu] * &sizes[nu] / &order * sum;
                                if !is_integral(&a) {
                                    return Err(Error::Verification(format!(
                                        "class algebra constant {a} is not an integer"
                                    )));
                                }
                                Ok(a.to_integer())
                            })
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { table, constants })
    }

    pub fn n(&self) -> usize {
        self.table.n()
    }

    pub fn classes(&self) -> &[Partition] {
        self.table.partitions()
    }

    pub fn constant(&self, mu: usize, nu: usize, kappa: usize) -> &BigInt {
        &self.constants[mu][nu][kappa]
    }

    fn classes_of_length(&self, l: usize) -> Vec<usize> {
        (0..self.classes().len()).filter(|&c| self.classes()[c].len() == l).collect()
    }

    /// `N_ij(kappa) = #{(a, b) in C_i x C_j : a b = g}` for `g` of type `kappa`,
    /// where `C_l` is the set of permutations with `l` cycles.
    pub fn length_class_constant(&self, i: usize, j: usize, kappa: usize) -> BigInt {
        let first = self.classes_of_length(i);
        let second = self.classes_of_length(j);
        first
            .iter()
            .flat_map(|&mu| second.iter().map(move |&nu| (mu, nu)))
            .map(|(mu, nu)| &self.constants[mu][nu][kappa])
            .sum()
    }
}

/// Distribution of the conjugacy class of `sigma tau` for independent
/// uniform `sigma` with `l(sigma) = first` and `tau` with `l(tau) = second`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassProductDistribution {
    pub n: usize,
    pub first_length: usize,
    pub second_length: usize,
    pub probabilities: Vec<(Partition, Rational)>,
}

impl ClassProductDistribution {
    pub fn total_mass(&self) -> Rational {
        self.probabilities.iter().map(|(_, p)| p).sum()
    }

    pub fn probability(&self, kappa: &Partition) -> Rational {
        self.probabilities
            .iter()
            .find(|(p, _)| p == kappa)
            .map_or_else(Rational::zero, |(_, p)| p.clone())
    }
}

/// Class distribution of a product of two random elements with given cycle counts.
pub fn class_product_distribution_from(
    algebra: &ClassAlgebra,
    first_length: usize,
    second_length: usize,
) -> ClassProductDistribution {
    let n = algebra.n();
    let table = &algebra.table;
    let size_of = |l: usize| -> BigInt {
        (0..table.partitions().len())
            .filter(|&c| table.partitions()[c].len() == l)
            .map(|c| table.class_sizes()[c].clone())
            .sum()
    };
    let pairs = size_of(first_length) * size_of(second_length);
    let probabilities = table
        .partitions()
        .iter()
        .enumerate()
        .map(|(kappa, p)| {
            let count = &table.class_sizes()[kappa] * algebra.length_class_constant(first_length, second_length, kappa);
            (p.clone(), Rational::new(count, pairs.clone()))
        })
        .collect();
    ClassProductDistribution { n, first_length, second_length, probabilities }
}

/// Class distribution of `sigma tau` for independent uniform `n`-cycles.
pub fn class_product_distribution(n: usize) -> Result<ClassProductDistribution> {
    Ok(class_product_distribution_from(&ClassAlgebra::new(n)?, 1, 1))
}

/// The same distribution by enumerating all pairs of `n`-cycles.
pub fn class_product_distribution_brute(n: usize) -> ClassProductDistribution {
    let cycles = Permutation::long_cycles(n);
    let mut counts: HashMap<Partition, u64> = HashMap::new();
    for s in &cycles {
        for t in &cycles {
            *counts.entry(s.compose(t).cycle_type()).or_default() += 1;
        }
    }
    let total = (cycles.len() * cycles.len()) as u64;
    let probabilities = crate::partition::partitions(n)
        .into_iter()
        .map(|p| {
            let c = counts.get(&p).copied().unwrap_or(0);
            (p, Rational::new(BigInt::from(c), BigInt::from(total)))
        })
        .collect();
    ClassProductDistribution { n, first_length: 1, second_length: 1, probabilities }
}

/// `E[i-1][j-1] = E |sigma C_i ∩ tau C_j|` for independent uniform
/// `n`-cycles `sigma`, `tau`.
///
/// `|sigma C_i ∩ tau C_j| = #{(a, b) in C_i x C_j : sigma a = tau b}` depends
/// only on `g = tau^{-1} sigma`, and counts `b a^{-1} = g`; as `C_i` is closed
/// under inversion this is `N_ij(g)`. The class of `g` is distributed like
/// that of a product of two independent `n`-cycles.
pub fn expected_intersections(algebra: &ClassAlgebra) -> Matrix {
    let n = algebra.n();
    let dist = class_product_distribution_from(algebra, 1, 1);
    Matrix::from_fn(n, n, |i, j| {
        dist.probabilities
            .iter()
            .enumerate()
            .filter(|(_, (_, p))| !p.is_zero())
            .map(|(kappa, (_, p))| p * int(algebra.length_class_constant(j + 1, i + 1, kappa)))
            .sum()
    })
}

/// `E |sigma C_i ∩ tau C_j|` by enumerating every pair of `n`-cycles and
/// every permutation `g`, with `g in sigma C_i` iff `l(sigma^{-1} g) = i`.
pub fn expected_intersections_brute(n: usize) -> Matrix {
    let cycles = Permutation::long_cycles(n);
    let inverses: Vec<Permutation> = cycles.iter().map(Permutation::inverse).collect();
    let all: Vec<Permutation> = Permutation::all(n).collect();
    // lengths[s][g] = l(s^{-1} g)
    let lengths: Vec<Vec<usize>> = inverses
        .par_iter()
        .map(|s_inv| all.iter().map(|g| s_inv.compose(g).cycle_count()).collect())
        .collect();
    let counts: Vec<u64> = lengths
        .par_iter()
        .map(|ls| {
            let mut counts = vec![0u64; n * n];
            for lt in &lengths {
                for (a, b) in ls.iter().zip(lt) {
                    counts[(a - 1) * n + (b - 1)] += 1;
                }
            }
            counts
        })
        .reduce(|| vec![0u64; n * n], |a, b| a.iter().zip(&b).map(|(x, y)| x + y).collect());
    let pairs = BigInt::from((cycles.len() * cycles.len()) as u64);
    Matrix::from_fn(n, n, |i, j| Rational::new(BigInt::from(counts[i * n + j]), pairs.clone()))
}

/// `[theta, psi] = (1/n!) sum_{i,j} theta(C_i) psi(C_j) E[i][j]`; values are
/// rational so there is no conjugation.
pub fn foulkes_inner_with(expected: &Matrix, theta: &LengthVector, psi: &LengthVector) -> Result<Rational> {
    let n = theta.n();
    if psi.n() != n || expected.rows() != n {
        return Err(Error::SizeMismatch { expected: n, found: psi.n() });
    }
    let mut total = Rational::zero();
    for i in 0..n {
        for j in 0..n {
            total += theta.values()[i].clone() * &psi.values()[j] * &expected[(i, j)];
        }
    }
    Ok(total / int(factorial(n)))
}

pub fn foulkes_inner(theta: &LengthVector, psi: &LengthVector) -> Result<Rational> {
    let algebra = ClassAlgebra::new(theta.n())?;
    foulkes_inner_with(&expected_intersections(&algebra), theta, psi)
}

/// Gram matrix `[b_a, b_b]` of a family of length vectors.
pub fn gram_matrix(expected: &Matrix, family: &[LengthVector]) -> Result<Matrix> {
    let m = family.len();
    let mut g = Matrix::zeros(m, m);
    for a in 0..m {
        for b in 0..m {
            g[(a, b)] = foulkes_inner_with(expected, &family[a], &family[b])?;
        }
    }
    Ok(g)
}

/// Gram matrix of `phi_0, ..., phi_{n-1}` via the class algebra.
pub fn foulkes_gram(n: usize) -> Result<Matrix> {
    let algebra = ClassAlgebra::new(n)?;
    let phis: Vec<LengthVector> = (0..n).map(|i| phi_vector(n, i)).collect::<Result<_>>()?;
    gram_matrix(&expected_intersections(&algebra), &phis)
}

/// Gram matrix of `phi_0, ..., phi_{n-1}` via literal enumeration.
pub fn foulkes_gram_brute(n: usize) -> Result<Matrix> {
    let phis: Vec<LengthVector> = (0..n).map(|i| phi_vector(n, i)).collect::<Result<_>>()?;
    gram_matrix(&expected_intersections_brute(n), &phis)
}

/// Convenience for export: the tensor as nested `u64`.
pub fn tensor_as_u64(c: &StructureConstants) -> Vec<Vec<Vec<u64>>> {
    c.c.iter()
        .map(|m| m.iter().map(|r| r.iter().map(|v| v.to_u64().expect("fits")).collect()).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::{expansion_matrix, gamma_vector, BasisTag};

    fn big(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&v| BigInt::from(v)).collect()
    }

    #[test]
    fn constant_examples() {
        assert_eq!(c_formula(3, 1, 1).unwrap(), big(&[4, 2, 4]));
        assert_eq!(c_from_values(3, 1, 1).unwrap(), big(&[4, 2, 4]));
        assert_eq!(c_brute(3, 1, 1).unwrap(), big(&[4, 2, 4]));
        assert_eq!(c_formula(2, 0, 0).unwrap(), big(&[1, 0]));
        assert_eq!(c_brute(3, 1, 2).unwrap(), c_formula(3, 1, 2).unwrap());
        assert_eq!(c_brute_tensor(2).unwrap(), c_formula_tensor(2).unwrap());
        assert!(c_formula(3, 3, 0).is_err());
        assert!(c_brute(8, 0, 0).is_err());
        // phi_1^2 at n = 3 is (16, 0, 4) on l = (3, 2, 1)
        let sq = &phi_vector(3, 1).unwrap() * &phi_vector(3, 1).unwrap();
        assert_eq!(sq.values(), &[int(4), int(0), int(16)][..]);
    }

    #[test]
    fn identity_element() {
        for n in 1..=9 {
            for j in 0..n {
                let unit: Vec<BigInt> = (0..n).map(|k| BigInt::from(u8::from(j == k))).collect();
                assert_eq!(c_formula(n, 0, j).unwrap(), unit);
                assert_eq!(c_from_values(n, 0, j).unwrap(), unit);
            }
        }
    }

    #[test]
    fn three_routes_agree_small() {
        for n in 1..=6 {
            let formula = c_formula_tensor(n).unwrap();
            assert_eq!(formula, c_from_values_tensor(n).unwrap(), "n={n}");
            assert_eq!(formula, c_brute_tensor(n).unwrap(), "n={n}");
            assert!(formula.is_symmetric());
            assert!(formula.satisfies_row_sums());
        }
    }

    #[test]
    fn product_distributions() {
        let d2 = class_product_distribution(2).unwrap();
        assert_eq!(d2.probability(&Partition::column(2)), int(1));
        for n in 1..=6 {
            let d = class_product_distribution(n).unwrap();
            assert_eq!(d.total_mass(), int(1));
            assert_eq!(d, class_product_distribution_brute(n), "n={n}");
        }
        // two 3-cycles: (123)(123) = (132), (123)(132) = id, ...
        let d3 = class_product_distribution_brute(3);
        assert_eq!(d3.probability(&Partition::column(3)), Rational::new(1.into(), 2.into()));
        assert_eq!(d3.probability(&Partition::row(3)), Rational::new(1.into(), 2.into()));
    }

    #[test]
    fn foulkes_characters_are_orthonormal() {
        assert_eq!(foulkes_inner(&phi_vector(2, 0).unwrap(), &phi_vector(2, 0).unwrap()).unwrap(), int(1));
        for n in 1..=6 {
            assert!(foulkes_gram(n).unwrap().is_identity(), "n={n}");
        }
        for n in 1..=5 {
            let algebra = ClassAlgebra::new(n).unwrap();
            assert_eq!(expected_intersections(&algebra), expected_intersections_brute(n), "n={n}");
            assert!(foulkes_gram_brute(n).unwrap().is_identity());
        }
    }

    #[test]
    fn gamma_gram_is_change_of_basis_product() {
        for n in 1..=6 {
            let algebra = ClassAlgebra::new(n).unwrap();
            let e = expected_intersections(&algebra);
            let gammas: Vec<LengthVector> = (0..n).map(|k| gamma_vector(n, k).unwrap()).collect();
            let g = gram_matrix(&e, &gammas).unwrap();
            let to_phi = expansion_matrix(n, BasisTag::Gamma, BasisTag::Phi);
            assert_eq!(g, &to_phi * &to_phi.transpose(), "n={n}");
        }
    }
}
