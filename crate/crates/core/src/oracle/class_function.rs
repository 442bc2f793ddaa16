use std::ops::{Add, Mul, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::oracle::table::CharacterTable;
use crate::partition::{partitions, Partition};
use crate::rational::{int, Rational};

/// A rational-valued class function of `S_n`, one value per cycle type in
/// canonical partition order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    classes: Vec<Partition>,
    values: Vec<Rational>,
}

impl ClassFunction {
    pub fn from_fn(n: usize, mut f: impl FnMut(&Partition) -> Rational) -> Self {
        let classes = partitions(n);
        let values = classes.iter().map(&mut f).collect();
        Self { n, classes, values }
    }

    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_| Rational::zero())
    }

    /// Values listed in canonical class order.
    pub fn from_values(n: usize, values: Vec<Rational>) -> Result<Self> {
        let classes = partitions(n);
        if values.len() != classes.len() {
            return Err(Error::SizeMismatch { expected: classes.len(), found: values.len() });
        }
        Ok(Self { n, classes, values })
    }

    /// Irreducible character `chi_lambda`.
    pub fn irreducible(lambda: &Partition) -> Self {
        let table = CharacterTable::of(lambda.size());
        let row = table.row(table.index_of(lambda).expect("partition of n"));
        Self {
            n: lambda.size(),
            classes: table.partitions().to_vec(),
            values: row.iter().map(|&v| int(v)).collect(),
        }
    }

    /// The lift `mu -> values[l(mu) - 1]` of a function of cycle count.
    pub fn from_length_values(values: &[Rational]) -> Self {
        Self::from_fn(values.len(), |mu| values[mu.len() - 1].clone())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &[Partition] {
        &self.classes
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn value(&self, mu: &Partition) -> Option<&Rational> {
        self.classes.iter().position(|c| c == mu).map(|i| &self.values[i])
    }

    /// Values indexed by cycle count `1..=n`, if the function depends only on it.
    pub fn length_values(&self) -> Result<Vec<Rational>> {
        let mut by_length: Vec<Option<(usize, &Rational)>> = vec![None; self.n];
        for (idx, (mu, v)) in self.classes.iter().zip(&self.values).enumerate() {
            let slot = &mut by_length[mu.len() - 1];
            match slot {
                None => *slot = Some((idx, v)),
                Some((first, w)) if *w != v => {
                    return Err(Error::NotLengthDependent {
                        first: self.classes[*first].clone(),
                        second: mu.clone(),
                    })
                }
                Some(_) => {}
            }
        }
        Ok(by_length
            .into_iter()
            .map(|s| s.expect("every length 1..=n occurs").1.clone())
            .collect())
    }

    pub fn depends_only_on_length(&self) -> bool {
        self.length_values().is_ok()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            n: self.n,
            classes: self.classes.clone(),
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        assert_eq!(self.n, other.n, "class functions of different S_n");
        Self {
            n: self.n,
            classes: self.classes.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect(),
        }
    }
}

impl Add for &ClassFunction {
    type Output = ClassFunction;
    fn add(self, rhs: &ClassFunction) -> ClassFunction {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &ClassFunction {
    type Output = ClassFunction;
    fn sub(self, rhs: &ClassFunction) -> ClassFunction {
        self.zip_with(rhs, |a, b| a - b)
    }
}

/// Pointwise product.
impl Mul for &ClassFunction {
    type Output = ClassFunction;
    fn mul(self, rhs: &ClassFunction) -> ClassFunction {
        self.zip_with(rhs, |a, b| a * b)
    }
}

/// `<f, g> = (1/n!) sum_mu |C_mu| f(mu) g(mu)`. Values are real, so there is
/// no conjugation.
pub fn std_inner(f: &ClassFunction, g: &ClassFunction) -> Result<Rational> {
    if f.n != g.n {
        return Err(Error::SizeMismatch { expected: f.n, found: g.n });
    }
    let table = CharacterTable::of(f.n);
    let sum: Rational = table
        .class_sizes()
        .iter()
        .zip(f.values.iter().zip(&g.values))
        .map(|(size, (a, b))| int(size.clone()) * a * b)
        .sum();
    Ok(sum / int(table.group_order().clone()))
}

/// `<f, chi_lambda>` for every irreducible, canonical order.
pub fn multiplicities(f: &ClassFunction) -> Vec<Rational> {
    let table = CharacterTable::of(f.n);
    let weighted: Vec<Rational> = table
        .class_sizes()
        .iter()
        .zip(&f.values)
        .map(|(size, v)| int(size.clone()) * v)
        .collect();
    let order = int(table.group_order().clone());
    table
        .rows()
        .iter()
        .map(|row| {
            let s: Rational = row.iter().zip(&weighted).map(|(&c, w)| w * int(c)).sum();
            s / &order
        })
        .collect()
}

/// Irreducible multiplicities of a class function, with the verdict on
/// whether it is a genuine character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterCertificate {
    pub multiplicities: Vec<(Partition, Rational)>,
}

impl CharacterCertificate {
    pub fn is_character(&self) -> bool {
        self.first_failure().is_none()
    }

    /// Virtual character: all multiplicities integral, of either sign.
    pub fn is_virtual_character(&self) -> bool {
        self.multiplicities.iter().all(|(_, m)| crate::rational::is_integral(m))
    }

    /// First irreducible whose multiplicity is not a non-negative integer.
    pub fn first_failure(&self) -> Option<&(Partition, Rational)> {
        self.multiplicities
            .iter()
            .find(|(_, m)| !crate::rational::is_nonneg_integer(m))
    }

    pub fn into_result(self) -> Result<Self> {
        match self.first_failure() {
            Some((p, m)) => Err(Error::NotACharacter {
                partition: p.clone(),
                multiplicity: m.to_string(),
            }),
            None => Ok(self),
        }
    }
}

pub fn is_genuine_character(f: &ClassFunction) -> CharacterCertificate {
    let table = CharacterTable::of(f.n);
    CharacterCertificate {
        multiplicities: table.partitions().iter().cloned().zip(multiplicities(f)).collect(),
    }
}
