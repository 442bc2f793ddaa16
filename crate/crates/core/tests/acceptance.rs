//! Acceptance criteria. Every comparison is exact; one line per criterion.
//!
//! Run with `cargo test -p foulkes --test acceptance`.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;

use foulkes::basis::{
    basis_matrix, branching_rhs, phi_coords, phi_vector, restrict_length, BasisTag, LengthVector,
};
use foulkes::combinatorics::{eulerian, factorial, lcm_up_to, multinomial_gcd_by_enumeration};
use foulkes::lattice::{
    fundamental_domain, lattice_index, no_better_witness, no_better_witness_recomputed, sigma_n,
    special_theta, verify_omega_integrality, verify_roundtrip_box, verify_sigma_minimality,
};
use foulkes::oracle::{is_genuine_character, HCombination};
use foulkes::product::{
    c_brute_tensor, c_formula, c_formula_tensor, c_from_values, foulkes_gram, foulkes_gram_brute,
    expected_intersections, expected_intersections_brute, ClassAlgebra,
};
use foulkes::rational::{int, ratio};
use foulkes::Partition;

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond { Ok(()) } else { Err(msg()) }
}

fn criterion_1_fundamental_domain_count() -> Check {
    let spot = [(3, 2u64), (4, 3), (5, 24), (6, 10)];
    for (n, count) in spot {
        ensure(lattice_index(n) == BigInt::from(count), || format!("index at n={n} is {}", lattice_index(n)))?;
    }
    for n in 1..=9usize {
        let gcds: BigInt = (1..=n).map(|k| BigInt::from(k.gcd(&n))).product();
        let expected = factorial(n) / gcds;
        let domain = fundamental_domain(n);
        ensure(BigInt::from(domain.len()) == expected, || {
            format!("n={n}: {} elements, expected {expected}", domain.len())
        })?;
        for e in &domain {
            let cert = is_genuine_character(&e.theta.to_length_vector().lift());
            ensure(cert.is_character(), || {
                format!("n={n}: theta_a for a={:?} fails the oracle: {:?}", e.params.entries(), cert.first_failure())
            })?;
        }
    }
    Ok(())
}

fn criterion_2_parametrization_roundtrip() -> Check {
    for n in 1..=6 {
        verify_roundtrip_box(n).map_err(|e| format!("n={n}: {e}"))?;
    }
    Ok(())
}

fn criterion_3_sigma() -> Check {
    for (n, s) in [(4, 3), (5, 12), (6, 10)] {
        ensure(sigma_n(n) == BigInt::from(s), || format!("sigma_{n} = {}", sigma_n(n)))?;
    }
    for n in 1..=12 {
        let closed = lcm_up_to(n) / BigInt::from(n);
        ensure(sigma_n(n) == closed, || format!("sigma_{n} = {} but lcm(1..n)/n = {closed}", sigma_n(n)))?;
    }
    for n in 1..=9 {
        verify_sigma_minimality(n).map_err(|e| format!("n={n}: {e}"))?;
    }
    Ok(())
}

fn criterion_4_theorem_1_witness() -> Check {
    let mut mismatches = Vec::new();
    for n in 4..=10usize {
        let stated = ratio(n as i64 - 3, n as i64 - 2);
        let closed = no_better_witness(n).map_err(|e| e.to_string())?;
        let recomputed = no_better_witness_recomputed(n).map_err(|e| e.to_string())?;
        ensure(closed == recomputed, || format!("n={n}: routes disagree, {closed} vs {recomputed}"))?;
        if closed != stated {
            mismatches.push(format!("n={n}: computed {closed}, stated {stated}"));
        }
    }
    ensure(mismatches.is_empty(), || mismatches.join("; "))
}

fn criterion_5_part_gcd() -> Check {
    for n in 1..=20usize {
        for k in 1..=n {
            let g = multinomial_gcd_by_enumeration(n, k).map_err(|e| e.to_string())?;
            let expected = BigInt::from(k / k.gcd(&n));
            ensure(g == expected, || format!("n={n} k={k}: gcd {g}, expected {expected}"))?;
        }
    }
    Ok(())
}

fn criterion_6_properties_a_to_f() -> Check {
    for n in 1..=9 {
        let mut total = LengthVector::zero(n);
        for i in 0..n {
            let phi = phi_vector(n, i).map_err(|e| e.to_string())?;
            ensure(*phi.degree() == int(eulerian(n, i as i64)), || format!("degree of phi_{i} at n={n}"))?;
            if n >= 2 {
                let restricted = restrict_length(&phi).map_err(|e| e.to_string())?;
                ensure(restricted == branching_rhs(n, i).map_err(|e| e.to_string())?, || {
                    format!("branching of phi_{i} at n={n}")
                })?;
            }
            total = &total + &phi;
        }
        ensure(total == LengthVector::regular(n), || format!("sum of phi_i is not rho at n={n}"))?;
        for a in BasisTag::ALL {
            for b in BasisTag::ALL {
                let prod = &basis_matrix(n, b, a) * &basis_matrix(n, a, b);
                ensure(prod.is_identity(), || format!("{a}->{b}->{a} is not the identity at n={n}"))?;
            }
        }
    }
    // oracle-backed parts
    for n in 1..=7 {
        for tag in BasisTag::ALL {
            for (i, v) in tag.vectors(n).iter().enumerate() {
                ensure(is_genuine_character(&v.lift()).is_character(), || format!("{tag}_{i} at n={n}"))?;
                if tag == BasisTag::Phi {
                    let coords = phi_coords(v);
                    ensure(coords.to_length_vector() == *v, || format!("phi_{i} reconstruction at n={n}"))?;
                }
            }
        }
        verify_omega_integrality(n).map_err(|e| format!("n={n}: {e}"))?;
    }
    Ok(())
}

fn criterion_7_property_g() -> Check {
    ensure(c_formula(3, 1, 1).unwrap() == vec![BigInt::from(4), BigInt::from(2), BigInt::from(4)], || {
        "c_11k at n=3".into()
    })?;
    for n in 1..=12 {
        for i in 0..n {
            for j in 0..n {
                let f = c_formula(n, i, j).map_err(|e| e.to_string())?;
                let v = c_from_values(n, i, j).map_err(|e| e.to_string())?;
                ensure(f == v, || format!("n={n} i={i} j={j}: formula {f:?} vs values {v:?}"))?;
            }
        }
    }
    for n in 1..=7 {
        let brute = c_brute_tensor(n).map_err(|e| format!("n={n}: {e}"))?;
        ensure(brute == c_formula_tensor(n).map_err(|e| e.to_string())?, || format!("brute force differs at n={n}"))?;
    }
    Ok(())
}

fn criterion_8_property_h() -> Check {
    for n in 1..=6 {
        let g = foulkes_gram(n).map_err(|e| e.to_string())?;
        ensure(g.is_identity(), || format!("Gram matrix at n={n} is {g:?}"))?;
    }
    for n in 1..=5 {
        let algebra = ClassAlgebra::new(n).map_err(|e| e.to_string())?;
        ensure(expected_intersections(&algebra) == expected_intersections_brute(n), || {
            format!("expected intersections differ at n={n}")
        })?;
        ensure(foulkes_gram_brute(n).map_err(|e| e.to_string())?.is_identity(), || format!("brute Gram at n={n}"))?;
    }
    Ok(())
}

fn criterion_9_special_character() -> Check {
    for n in 2..=8 {
        let s = special_theta(n).map_err(|e| format!("n={n}: {e}"))?;
        ensure(s.expansion.is_nonneg_integral() && s.certificate.is_character(), || format!("n={n}"))?;
    }
    let expected = HCombination::new(3)
        .with_term(Partition::row(3), int(1))
        .and_then(|h| h.with_term(Partition::new(vec![2, 1])?, int(1)))
        .map_err(|e| e.to_string())?;
    let s3 = special_theta(3).map_err(|e| e.to_string())?;
    ensure(s3.expansion == expected, || format!("n=3 expansion {:?}", s3.expansion))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 fundamental domain count = n!/prod gcd(k,n), n<=9, all genuine", criterion_1_fundamental_domain_count),
        ("2 theta_a <-> a roundtrip and injectivity on prod [0,2d_(k+1)), n<=6", criterion_2_parametrization_roundtrip),
        ("3 sigma_n = lcm(1..n)/n, n<=12; minimality n<=9", criterion_3_sigma),
        ("4 <c_(n-2) phi_(n-2), chi_nu> = (n-3)/(n-2), n=4..10, two routes", criterion_4_theorem_1_witness),
        ("5 gcd M(lambda) over l(lambda)=k equals k/gcd(n,k), n<=20", criterion_5_part_gcd),
        ("6 properties a)-f), n<=9 (oracle parts n<=7)", criterion_6_properties_a_to_f),
        ("7 c_formula = c_from_values (n<=12) = c_brute (n<=7)", criterion_7_property_g),
        ("8 Foulkes Gram matrix is the identity (n<=6), brute agrees (n<=5)", criterion_8_property_h),
        ("9 (n-1)^(l-1) has non-negative integral h-expansion, n=2..8", criterion_9_special_character),
    ];
    let mut failures = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(()) => println!("PASS  criterion {name}  ({ms} ms)"),
            Err(why) => {
                failures += 1;
                println!("FAIL  criterion {name}  ({ms} ms): {why}");
            }
        }
    }
    println!("{} of {} criteria passed", 9 - failures, 9);
    if failures == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
