use rsq::affine::{
    at, baxterize, check_intertwine, check_spectral_ybe, rhat_z, scheme_report, verify, EvalPair, Scheme,
};
use rsq::rep::{evaluation, EvalParams, Gen};
use rsq::rmatrix::rhat_explicit;
use rsq::scalar::{A, B, X, Y};
use rsq::{Family, Scalar, SparseMat};

const CASES: &[(Family, usize)] = &[(Family::A, 2), (Family::B, 2), (Family::C, 2), (Family::D, 3)];

#[test]
fn closed_forms_pass_every_affine_check() {
    for &(f, n) in CASES {
        for c in verify(f, n, &[]).unwrap() {
            assert!(c.passed(), "{f}{n}: {c}");
        }
    }
}

#[test]
fn intertwines_every_node_including_zero() {
    for &(f, n) in CASES {
        let pair = EvalPair::new(f, n, EvalParams::Symbolic).unwrap();
        let r = at(&rhat_z(f, n), &(&Scalar::var(X) / &Scalar::var(Y)));
        for i in 0..=n {
            for g in [Gen::E(i), Gen::F(i), Gen::K(i), Gen::Kp(i)] {
                assert!(rsq::affine::check_intertwine_gen(&pair, &r, g).passed(), "{f}{n} {g}");
            }
        }
    }
}

#[test]
fn only_the_documented_scheme_works_for_each_family() {
    for &(f, n) in CASES {
        for o in scheme_report(f, n).unwrap() {
            let expected = o.scheme == Scheme::for_family(f);
            assert_eq!(o.matches_closed_form, expected, "{f}{n} {:?}", o.scheme);
            assert_eq!(o.intertwines, expected, "{f}{n} {:?}", o.scheme);
        }
    }
}

#[test]
fn type_a_is_the_two_eigenvalue_baxterization() {
    assert_eq!(baxterize(Family::A, 3, Scheme::TwoEigen), rhat_z(Family::A, 3));
}

#[test]
fn a_type_zero_limit_is_the_finite_matrix() {
    assert_eq!(at(&rhat_z(Family::A, 3), &Scalar::zero()), rhat_explicit(Family::A, 3));
}

#[test]
fn wrong_central_charge_breaks_the_intertwiner() {
    // ab = (rs)^{-1} instead of (rs)^{-2} in type B.
    let (f, n) = (Family::B, 2);
    let bind = |slot| {
        let rep = evaluation(f, n, EvalParams::Free, slot).unwrap();
        rep.substitute(&[(B, &Scalar::rs(-1, -1) / &Scalar::var(A))]).unwrap()
    };
    let pair = EvalPair { vx: bind(X), vy: bind(Y) };
    assert!(!check_intertwine(&pair, &rhat_z(f, n)).passed());
}

#[test]
fn a_perturbed_spectral_matrix_breaks_ybe() {
    let rz = rhat_z(Family::A, 2);
    let bad = rz.add(&SparseMat::from_triplets(9, 9, [(0, 0, Scalar::z())]));
    assert!(check_spectral_ybe(&rz, 3).passed());
    assert!(!check_spectral_ybe(&bad, 3).passed());
}
