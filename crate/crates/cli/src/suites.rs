use std::fmt;
use std::str::FromStr;

use clap::ValueEnum;
use num_bigint::BigInt;
use num_integer::Integer;

use foulkes::basis::{basis_matrix, branching_rhs, phi_vector, restrict_length, BasisTag, LengthVector};
use foulkes::combinatorics::{eulerian, lcm_up_to, part_gcd_verified};
use foulkes::lattice::{
    fundamental_domain, fundamental_domain_by_search, lattice_index, lattice_index_closed,
    no_better_witness, no_better_witness_by_table, no_better_witness_recomputed, sigma_closed,
    sigma_n, special_theta, verify_omega_integrality, verify_roundtrip_box,
    verify_sigma_minimality, witness_value,
};
use foulkes::oracle::brute::{
    foulkes_multiplicities_from_tableaux, jacobi_trudi_character, DEFAULT_PERMUTATION_ORACLE_CAP,
};
use foulkes::oracle::{
    hook_content_gamma, is_genuine_character, std_inner, CharacterTable, ClassFunction, HCombination,
};
use foulkes::partition::partitions;
use foulkes::product::{
    c_brute_tensor, c_formula, c_formula_tensor, c_from_values, expected_intersections,
    expected_intersections_brute, foulkes_gram, foulkes_gram_brute, ClassAlgebra,
    DEFAULT_INNER_BRUTE_CAP, DEFAULT_PRODUCT_BRUTE_CAP,
};
use foulkes::rational::{int, is_integral};
use foulkes::Partition;

use crate::report::{Check, VerificationReport};

/// Largest `n` for the independent fundamental-domain search (box of size `prod binom(n-1, i)`).
pub const DEFAULT_SEARCH_CAP: usize = 7;

/// Largest `n` for the sigma minimality sweep over the fundamental domain.
pub const DEFAULT_MINIMALITY_CAP: usize = 9;

/// Upper limits for the exhaustive cross-checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub product: usize,
    pub inner: usize,
    pub permutation: usize,
    pub search: usize,
    pub minimality: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            product: DEFAULT_PRODUCT_BRUTE_CAP,
            inner: DEFAULT_INNER_BRUTE_CAP,
            permutation: DEFAULT_PERMUTATION_ORACLE_CAP,
            search: DEFAULT_SEARCH_CAP,
            minimality: DEFAULT_MINIMALITY_CAP,
        }
    }
}

impl Caps {
    pub fn uniform(cap: usize) -> Self {
        Caps { product: cap, inner: cap, permutation: cap, search: cap, minimality: cap }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Suite {
    #[value(name = "properties-a-h")]
    PropertiesAH,
    #[value(name = "theorem-1")]
    Theorem1,
    #[value(name = "theorem-2")]
    Theorem2,
    #[value(name = "theorem-3")]
    Theorem3,
    #[value(name = "theorem-4")]
    Theorem4,
    #[value(name = "prop-gcd")]
    PropGcd,
    #[value(name = "lemma-special")]
    LemmaSpecial,
    #[value(name = "all")]
    All,
}

impl Suite {
    pub const EACH: [Suite; 7] = [
        Suite::PropertiesAH,
        Suite::Theorem1,
        Suite::Theorem2,
        Suite::Theorem3,
        Suite::Theorem4,
        Suite::PropGcd,
        Suite::LemmaSpecial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::PropertiesAH => "properties-a-h",
            Suite::Theorem1 => "theorem-1",
            Suite::Theorem2 => "theorem-2",
            Suite::Theorem3 => "theorem-3",
            Suite::Theorem4 => "theorem-4",
            Suite::PropGcd => "prop-gcd",
            Suite::LemmaSpecial => "lemma-special",
            Suite::All => "all",
        }
    }

    /// Smallest `n` the suite says anything about.
    pub fn n_min(self) -> usize {
        match self {
            Suite::Theorem1 => 4,
            Suite::LemmaSpecial => 2,
            _ => 1,
        }
    }

    pub fn default_n_max(self) -> usize {
        match self {
            Suite::PropertiesAH => 7,
            Suite::Theorem1 => 10,
            Suite::Theorem2 => 6,
            Suite::Theorem3 => 8,
            Suite::Theorem4 => 12,
            Suite::PropGcd => 20,
            Suite::LemmaSpecial => 8,
            Suite::All => 0,
        }
    }

    /// The concrete suites behind `self`.
    pub fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => Suite::EACH.to_vec(),
            s => vec![s],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        <Suite as ValueEnum>::from_str(s, false)
    }
}

fn ensure(cond: bool, witness: impl FnOnce() -> String) -> Result<(), String> {
    if cond { Ok(()) } else { Err(witness()) }
}

fn err(e: foulkes::Error) -> String {
    e.to_string()
}

fn checks_properties(n: usize, caps: Caps) -> Vec<Check> {
    let mut out = vec![
        Check::new("degree-is-eulerian", n, move || {
            for i in 0..n {
                let phi = phi_vector(n, i).map_err(err)?;
                let a = eulerian(n, i as i64);
                ensure(*phi.degree() == int(a.clone()), || format!("phi_{i}(1) = {}, A(n,{i}) = {a}", phi.degree()))?;
            }
            Ok(None)
        }),
        Check::new("border-strip-definition", n, move || {
            for i in 0..n {
                let phi = phi_vector(n, i).map_err(err)?;
                let cert = is_genuine_character(&phi.lift());
                let expected = foulkes_multiplicities_from_tableaux(n, i);
                for ((lambda, m), (_, count)) in cert.multiplicities.iter().zip(&expected) {
                    ensure(*m == int(count.clone()), || {
                        format!("<phi_{i}, chi_{lambda}> = {m}, tableaux with {i} descents: {count}")
                    })?;
                }
            }
            Ok(None)
        }),
        Check::new("bases-are-characters", n, move || {
            for tag in BasisTag::ALL {
                for (i, v) in tag.vectors(n).iter().enumerate() {
                    let cert = is_genuine_character(&v.lift());
                    if let Some((lambda, m)) = cert.first_failure() {
                        return Err(format!("{tag}_{i}: multiplicity of chi_{lambda} is {m}"));
                    }
                }
            }
            Ok(None)
        }),
        Check::new("sum-is-regular", n, move || {
            let mut total = LengthVector::zero(n);
            for i in 0..n {
                total = &total + &phi_vector(n, i).map_err(err)?;
            }
            ensure(total == LengthVector::regular(n), || format!("sum of phi_i has values {:?}", total.values()))?;
            Ok(None)
        }),
        Check::new("basis-relations-invert", n, move || {
            for a in BasisTag::ALL {
                for b in BasisTag::ALL {
                    let prod = &basis_matrix(n, b, a) * &basis_matrix(n, a, b);
                    ensure(prod.is_identity(), || format!("{a} -> {b} -> {a} is not the identity"))?;
                }
            }
            Ok(None)
        }),
        Check::new("hook-content", n, move || {
            for i in 0..n {
                let gamma = BasisTag::Gamma.vector(n, i).map_err(err)?.lift();
                for lambda in partitions(n) {
                    let closed = hook_content_gamma(i, &lambda).map_err(err)?;
                    let inner = std_inner(&gamma, &ClassFunction::irreducible(&lambda)).map_err(err)?;
                    ensure(closed == inner, || format!("<gamma_{i}, chi_{lambda}>: hook-content {closed}, table {inner}"))?;
                }
            }
            Ok(None)
        }),
        Check::new("omega-integrality", n, move || {
            let size = verify_omega_integrality(n).map_err(err)?;
            Ok(Some(format!("{size} domain elements")))
        }),
        Check::new("product-formula-vs-values", n, move || {
            for i in 0..n {
                for j in 0..n {
                    let f = c_formula(n, i, j).map_err(err)?;
                    let v = c_from_values(n, i, j).map_err(err)?;
                    ensure(f == v, || format!("c_{i}{j}k: formula {f:?}, from values {v:?}"))?;
                }
            }
            Ok(None)
        }),
        Check::new("gram-is-identity", n, move || {
            let g = foulkes_gram(n).map_err(err)?;
            ensure(g.is_identity(), || format!("Gram matrix {g:?}"))?;
            Ok(None)
        }),
    ];
    if n >= 2 {
        out.push(Check::new("branching", n, move || {
            for i in 0..n {
                let lhs = restrict_length(&phi_vector(n, i).map_err(err)?).map_err(err)?;
                let rhs = branching_rhs(n, i).map_err(err)?;
                ensure(lhs == rhs, || format!("phi_{i} restricted: {:?} vs {:?}", lhs.values(), rhs.values()))?;
            }
            Ok(None)
        }));
    }
    if n <= caps.permutation {
        out.push(Check::new("mn-vs-permutation-modules", n, move || {
            let table = CharacterTable::of(n);
            for lambda in partitions(n) {
                let jt = jacobi_trudi_character(&lambda);
                for (mu, v) in jt.classes().iter().zip(jt.values()) {
                    let mn = table.value(&lambda, mu).expect("partition of n");
                    ensure(*v == int(mn), || format!("chi_{lambda}({mu}): MN {mn}, Jacobi-Trudi {v}"))?;
                }
            }
            Ok(None)
        }));
    }
    if n <= caps.product {
        out.push(Check::new("product-brute-force", n, move || {
            let brute = c_brute_tensor(n).map_err(err)?;
            let formula = c_formula_tensor(n).map_err(err)?;
            ensure(brute == formula, || {
                (0..n)
                    .flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
                    .find(|&(i, j, k)| brute.get(i, j, k) != formula.get(i, j, k))
                    .map(|(i, j, k)| {
                        format!("c_{i}{j}{k}: counted {}, formula {}", brute.get(i, j, k), formula.get(i, j, k))
                    })
                    .unwrap_or_default()
            })?;
            Ok(None)
        }));
    }
    if n <= caps.inner {
        out.push(Check::new("inner-product-brute-force", n, move || {
            let algebra = ClassAlgebra::new(n).map_err(err)?;
            ensure(expected_intersections(&algebra) == expected_intersections_brute(n), || {
                "expected intersections differ from n-cycle pair enumeration".into()
            })?;
            let g = foulkes_gram_brute(n).map_err(err)?;
            ensure(g.is_identity(), || format!("brute-force Gram matrix {g:?}"))?;
            Ok(None)
        }));
    }
    out
}

fn checks_theorem_1(n: usize) -> Vec<Check> {
    vec![
        Check::new("witness-routes-agree", n, move || {
            let closed = no_better_witness(n).map_err(err)?;
            let recomputed = no_better_witness_recomputed(n).map_err(err)?;
            let table = no_better_witness_by_table(n).map_err(err)?;
            ensure(closed == recomputed && closed == table, || {
                format!("closed form {closed}, basis matrices {recomputed}, character table {table}")
            })?;
            ensure(closed == witness_value(n), || format!("value {closed}, closed form {}", witness_value(n)))?;
            Ok(Some(closed.to_string()))
        }),
        Check::new("witness-non-integral", n, move || {
            let value = no_better_witness(n).map_err(err)?;
            ensure(!is_integral(&value), || format!("witness {value} is an integer"))?;
            Ok(Some(value.to_string()))
        }),
    ]
}

fn checks_theorem_2(n: usize) -> Vec<Check> {
    vec![Check::new("roundtrip-box", n, move || {
        let count = verify_roundtrip_box(n).map_err(err)?;
        Ok(Some(format!("{count} parameters")))
    })]
}

fn checks_theorem_3(n: usize, caps: Caps) -> Vec<Check> {
    let mut out = vec![
        Check::new("domain-count", n, move || {
            let count = BigInt::from(fundamental_domain(n).len());
            let index = lattice_index(n);
            let closed = lattice_index_closed(n);
            ensure(count == index && index == closed, || {
                format!("enumerated {count}, prod d_k = {index}, n!/prod gcd(k,n) = {closed}")
            })?;
            Ok(Some(count.to_string()))
        }),
        Check::new("domain-is-genuine", n, move || {
            for e in fundamental_domain(n) {
                let cert = is_genuine_character(&e.theta.to_length_vector().lift());
                if let Some((lambda, m)) = cert.first_failure() {
                    return Err(format!("a = {:?}: multiplicity of chi_{lambda} is {m}", e.params.entries()));
                }
            }
            Ok(None)
        }),
    ];
    if n <= caps.search {
        out.push(Check::new("domain-matches-search", n, move || {
            let mut searched: Vec<_> = fundamental_domain_by_search(n).into_iter().map(|t| t.coords).collect();
            let mut enumerated: Vec<_> = fundamental_domain(n).into_iter().map(|e| e.theta.coords).collect();
            searched.sort();
            enumerated.sort();
            ensure(searched == enumerated, || {
                let missing = searched.iter().find(|c| !enumerated.contains(c));
                let extra = enumerated.iter().find(|c| !searched.contains(c));
                format!("search found {}, parametrization gave {}; first missing {missing:?}, first extra {extra:?}", searched.len(), enumerated.len())
            })?;
            Ok(None)
        }));
    }
    out
}

fn checks_theorem_4(n: usize, caps: Caps) -> Vec<Check> {
    let mut out = vec![
        Check::new("sigma-closed-form", n, move || {
            let sigma = sigma_n(n);
            let closed = sigma_closed(n);
            let lcm = lcm_up_to(n) / BigInt::from(n);
            ensure(sigma == closed && sigma == lcm, || format!("lcm d_k = {sigma}, closed {closed}, lcm(1..n)/n = {lcm}"))?;
            Ok(Some(sigma.to_string()))
        }),
    ];
    if n <= caps.minimality {
        out.push(Check::new("sigma-minimal", n, move || {
            let sigma = verify_sigma_minimality(n).map_err(err)?;
            Ok(Some(sigma.to_string()))
        }));
    }
    out
}

fn checks_prop_gcd(n: usize) -> Vec<Check> {
    vec![Check::new("multinomial-gcd", n, move || {
        for k in 1..=n {
            let g = part_gcd_verified(n, k).map_err(err)?;
            ensure(g as usize == k / k.gcd(&n), || format!("k={k}: {g}"))?;
        }
        Ok(None)
    })]
}

fn checks_lemma_special(n: usize) -> Vec<Check> {
    let mut out = vec![Check::new("special-character", n, move || {
        let s = special_theta(n).map_err(err)?;
        ensure(s.expansion.is_nonneg_integral(), || format!("h-expansion {:?}", s.expansion))?;
        if let Some((lambda, m)) = s.certificate.first_failure() {
            return Err(format!("multiplicity of chi_{lambda} is {m}"));
        }
        Ok(None)
    })];
    if n == 3 {
        out.push(Check::new("special-expansion-n3", n, move || {
            let expected = HCombination::new(3)
                .with_term(Partition::row(3), int(1))
                .and_then(|h| h.with_term(Partition::new(vec![2, 1])?, int(1)))
                .map_err(err)?;
            let s = special_theta(3).map_err(err)?;
            ensure(s.expansion == expected, || format!("expansion {:?}", s.expansion))?;
            Ok(None)
        }));
    }
    out
}

/// All checks of a concrete suite for `n_min..=n_max`, ordered by `n`.
pub fn checks(suite: Suite, n_min: usize, n_max: usize, caps: Caps) -> Vec<Check> {
    (n_min..=n_max)
        .flat_map(|n| match suite {
            Suite::PropertiesAH => checks_properties(n, caps),
            Suite::Theorem1 => checks_theorem_1(n),
            Suite::Theorem2 => checks_theorem_2(n),
            Suite::Theorem3 => checks_theorem_3(n, caps),
            Suite::Theorem4 => checks_theorem_4(n, caps),
            Suite::PropGcd => checks_prop_gcd(n),
            Suite::LemmaSpecial => checks_lemma_special(n),
            Suite::All => Vec::new(),
        })
        .collect()
}

/// One report per concrete suite. `n_max = None` uses each suite's default.
pub fn cmd_verify(suite: Suite, n_max: Option<usize>, caps: Caps) -> Vec<VerificationReport> {
    suite
        .expand()
        .into_iter()
        .map(|s| {
            let n_min = s.n_min();
            let n_max = n_max.unwrap_or_else(|| s.default_n_max());
            VerificationReport::run(s.name(), n_min, n_max, checks(s, n_min, n_max, caps))
        })
        .collect()
}
