//! One-parameter structures: Drinfeld–Jimbo relations, rescaling constants,
//! root vector embedding, specialization and twists.

mod common;

use common::system;
use rsq::embed::{
    self, b_obstruction, check_kappa, kappa, kappa_recursive, modified_generators, specialize_checks, twist_a,
    verify_dj_relations, verify_root_vector_embedding, verify_twist_a, TwistSign,
};
use rsq::lyndon::lalonde_ram;
use rsq::matrix::pair_index;
use rsq::rep::fundamental;
use rsq::rmatrix::Tables;
use rsq::{Family, Scalar, SparseMat};

const SMALL: &[(Family, usize)] = &[
    (Family::A, 1),
    (Family::A, 2),
    (Family::A, 3),
    (Family::B, 2),
    (Family::B, 3),
    (Family::C, 2),
    (Family::C, 3),
    (Family::D, 3),
];

fn assert_all(checks: &[rsq::report::Check], tag: &str) {
    for c in checks {
        assert!(c.passed(), "{tag}: {c:?}");
    }
}

#[test]
fn drinfeld_jimbo_relations_hold() {
    for &(f, n) in SMALL {
        let checks = verify_dj_relations(&system(f, n), &fundamental(f, n).unwrap()).unwrap();
        assert_eq!(checks.len(), 4);
        assert_all(&checks, &format!("{f}{n}"));
    }
}

#[test]
fn a_type_conjugation_scalar_is_q_squared() {
    let m = modified_generators(&system(Family::A, 3), &fundamental(Family::A, 3).unwrap()).unwrap();
    let q2 = Scalar::rs(1, -1);
    for i in 0..3 {
        let lhs = m.w[i].mul(&m.e[i]).mul(&m.w_inv[i]);
        assert_eq!(lhs, m.e[i].scale(&q2));
        let lhs = m.w[i].mul(&m.f[i]).mul(&m.w_inv[i]);
        assert_eq!(lhs, m.f[i].scale(&q2.inv()));
    }
}

#[test]
fn c2_cubic_serre_relation_by_hand() {
    // a_12 = -2, so the relation is cubic with q-binomials 1, q² + 1 + q⁻², 1.
    let m = modified_generators(&system(Family::C, 2), &fundamental(Family::C, 2).unwrap()).unwrap();
    let q = embed::q();
    let q2 = &q * &q;
    let b = &(&q2 + &Scalar::one()) + &q2.inv();
    for x in [&m.e, &m.f] {
        let (a, c) = (&x[0], &x[1]);
        let t0 = a.pow(3).mul(c);
        let t1 = a.pow(2).mul(c).mul(a).scale(&b);
        let t2 = a.mul(c).mul(&a.pow(2)).scale(&b);
        let t3 = c.mul(&a.pow(3));
        assert!(t0.sub(&t1).add(&t2).sub(&t3).is_zero());
    }
}

#[test]
fn kappa_examples() {
    let rs = system(Family::A, 4);
    let g = rs.root_by_name("gamma_1_4").unwrap();
    // s^{3/2}
    assert_eq!(kappa(&rs, g), Scalar::uv(0, 3));
    for (f, n) in [(Family::B, 3), (Family::C, 3), (Family::D, 4)] {
        let rs = system(f, n);
        for (k, root) in rs.positive_roots().iter().enumerate() {
            if root.is_simple() {
                assert!(kappa(&rs, k).is_one(), "{f}{n} {}", root.name);
            }
        }
    }
    let rs = system(Family::C, 3);
    let b11 = rs.root_by_name("beta_1_1").unwrap();
    // r^{1/2} s^{5/2}
    assert_eq!(kappa(&rs, b11), Scalar::uv(1, 5));
}

#[test]
fn kappa_recursion_matches_the_table() {
    let cases = (1..=4)
        .map(|n| (Family::A, n))
        .chain((2..=4).map(|n| (Family::B, n)))
        .chain((2..=4).map(|n| (Family::C, n)))
        .chain((3..=4).map(|n| (Family::D, n)));
    for (f, n) in cases {
        let rs = system(f, n);
        assert!(check_kappa(&rs).unwrap().passed(), "{f}{n}");
        let rec = kappa_recursive(&rs, &lalonde_ram(&rs)).unwrap();
        assert_eq!(rec.len(), rs.positive_roots().len());
    }
}

#[test]
fn root_vectors_embed_after_rescaling() {
    for (f, n) in [(Family::A, 3), (Family::B, 2), (Family::C, 2), (Family::D, 3)] {
        let c = verify_root_vector_embedding(&system(f, n), &fundamental(f, n).unwrap()).unwrap();
        assert!(c.passed(), "{f}{n}: {c:?}");
    }
}

#[test]
fn a_twist_holds_with_the_negative_sign_only() {
    for n in 1..=3 {
        assert_all(&verify_twist_a(n, TwistSign::Negative).unwrap(), &format!("A{n}"));
        let positive = verify_twist_a(n, TwistSign::Positive).unwrap();
        assert!(positive.iter().all(|c| !c.passed()), "A{n}");
    }
}

#[test]
fn a_twist_entries() {
    let d = 3;
    let f = twist_a(2, TwistSign::Negative);
    for i in 1..=d {
        for j in 1..=d {
            let k = pair_index(d, i, j);
            let x = f.get(k, k);
            let sq = (&x * &x).reduce_quarter();
            let want = match i.cmp(&j) {
                std::cmp::Ordering::Equal => Scalar::one(),
                std::cmp::Ordering::Greater => Scalar::uv(-1, -1),
                std::cmp::Ordering::Less => Scalar::uv(1, 1),
            };
            assert_eq!(sq, want, "({i},{j})");
        }
    }
}

#[test]
fn b_type_twist_is_obstructed() {
    for n in 2..=3 {
        let ob = b_obstruction(n).unwrap();
        assert!(ob.skew_symmetric);
        assert!(ob.first_mismatch.is_some());
        assert!(ob.residual_in_last_family);
        let tb = Tables::new(Family::B, n);
        let d = tb.dim;
        for i in 1..=d {
            for j in 1..=d {
                let phi = &ob.phi[i - 1][j - 1];
                if j == i || j == tb.prime(i) {
                    assert_eq!(phi, "1", "B{n} ({i},{j})");
                } else {
                    let want = tb.a(i, j).inv().sqrt_monomial().unwrap();
                    assert_eq!(*phi, want.to_string(), "B{n} ({i},{j})");
                }
            }
        }
    }
    let ob = b_obstruction(2).unwrap();
    assert!(ob.first_mismatch.as_deref().unwrap().starts_with("E_{21} ⊗ E_{45}"));
    assert_eq!(ob.residual_entries, 6);
}

#[test]
fn specializations_match_the_one_parameter_displays() {
    for (f, n) in [(Family::A, 2), (Family::A, 3), (Family::B, 2), (Family::B, 3)] {
        let checks = specialize_checks(f, n).unwrap();
        assert!(!checks.is_empty());
        assert_all(&checks, &format!("{f}{n}"));
    }
}

#[test]
fn verify_runs_every_check() {
    for (f, n) in [(Family::A, 2), (Family::B, 2)] {
        let checks = embed::verify(f, n, &[]).unwrap();
        assert_all(&checks, &format!("{f}{n}"));
    }
    let only = vec!["kappa".to_string()];
    assert_eq!(embed::verify(Family::C, 2, &only).unwrap().len(), 1);
}

#[test]
fn a_wrong_conjugation_scalar_is_detected() {
    let m = modified_generators(&system(Family::B, 2), &fundamental(Family::B, 2).unwrap()).unwrap();
    let wrong: SparseMat = m.e[0].scale(&Scalar::rs(1, -1));
    assert_ne!(m.w[0].mul(&m.e[0]).mul(&m.w_inv[0]), wrong);
}
