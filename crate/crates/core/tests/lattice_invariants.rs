use foulkes::basis::{BasisCoords, BasisTag};
use foulkes::lattice::{
    cone_decompose, fundamental_domain, fundamental_domain_by_search, is_in_y, lattice_index,
    params_from_theta, theta_from_params, verify_completeness_sweep, verify_omega_integrality,
    ParamVector,
};
use foulkes::oracle::is_genuine_character;
use foulkes::rational::{frac, int, is_integral};
use num_bigint::BigInt;

#[test]
fn completeness_sweep_up_to_5() {
    // (2 sigma_n)^n candidates: 2^1, 2^2, 4^3, 6^4, 24^5
    for n in 1..=5 {
        let found = verify_completeness_sweep(n).unwrap();
        assert_eq!(BigInt::from(found), lattice_index(n) * BigInt::from(1u64 << n), "n={n}");
    }
}

#[test]
fn omega_coordinates_of_y_are_integral() {
    for n in 1..=7 {
        let size = verify_omega_integrality(n).unwrap();
        assert_eq!(BigInt::from(size), lattice_index(n), "n={n}");
    }
}

#[test]
fn search_and_parametrization_agree_at_7() {
    let mut searched: Vec<_> = fundamental_domain_by_search(7).into_iter().map(|t| t.coords).collect();
    let mut parametrized: Vec<_> = fundamental_domain(7).into_iter().map(|e| e.theta.coords).collect();
    searched.sort();
    parametrized.sort();
    assert_eq!(searched, parametrized);
}

#[test]
fn cone_is_closed_under_addition() {
    for n in 3..=6 {
        let domain = fundamental_domain(n);
        for x in &domain {
            for y in &domain {
                let sum = BasisCoords::new(
                    BasisTag::Phi,
                    x.theta.coords.iter().zip(&y.theta.coords).map(|(a, b)| a + b).collect(),
                );
                let d = cone_decompose(&sum).unwrap();
                assert!(d.theta_f.coords.iter().all(|c| is_integral(c) && *c >= int(0)));
                assert!(d.theta_f.coords.iter().all(|c| *c <= int(1)));
                assert_eq!(d.theta_p.coords, sum.coords.iter().map(frac).collect::<Vec<_>>());
                assert!(domain.iter().any(|e| e.theta == d.theta_p), "theta_P leaves the domain at n={n}");
                let a = params_from_theta(&sum).unwrap();
                assert_eq!(theta_from_params(&a), sum);
            }
        }
    }
}

#[test]
fn domain_members_lie_in_y_and_are_characters() {
    for n in 1..=8 {
        for e in fundamental_domain(n) {
            let v = e.theta.to_length_vector();
            assert!(is_in_y(&v));
            assert!(is_genuine_character(&v.lift()).is_character());
            assert!(e.params.is_restricted());
        }
    }
}

#[test]
fn restricted_parameters_need_no_floor() {
    let a = ParamVector::new(vec![0, 0, 0, 1, 4, 0]);
    assert!(a.is_restricted());
    let theta = theta_from_params(&a);
    assert!(theta.coords.iter().all(|c| *c >= int(0) && *c < int(1)));
    assert!(!ParamVector::new(vec![0, 0, 0, 2, 0, 0]).is_restricted());
}
