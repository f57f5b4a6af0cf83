use proptest::prelude::*;
use rsq::scalar::{rs_binomial, Scalar, ScalarRing, U, V, Z};

fn term() -> impl Strategy<Value = Scalar> {
    (-3i64..=3, -2i32..=2, -2i32..=2, 0i32..=2).prop_map(|(c, a, b, k)| {
        &(&Scalar::from_int(c) * &Scalar::uv(a, b)) * &Scalar::var_pow(Z, k)
    })
}

fn laurent() -> impl Strategy<Value = Scalar> {
    prop::collection::vec(term(), 1..4).prop_map(|ts| ts.iter().fold(Scalar::zero(), |acc, t| &acc + t))
}

/// A rational function in `r^{1/2}, s^{1/2}, z`.
fn scalar() -> impl Strategy<Value = Scalar> {
    (laurent(), laurent()).prop_map(|(n, d)| if d.is_zero() { n } else { &n / &d })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_and_multiplication_are_associative(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn commutative_and_distributive(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn identities_and_inverses(a in scalar()) {
        prop_assert_eq!(&a + &Scalar::zero(), a.clone());
        prop_assert_eq!(&a * &Scalar::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert!((&a + &(-&a)).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv()).is_one());
            prop_assert_eq!(a.inv().inv(), a.clone());
        } else {
            prop_assert!(a.checked_inv().is_err());
        }
    }

    #[test]
    fn normal_form_is_idempotent(a in scalar()) {
        let again = Scalar::from_parts(a.numer().clone(), a.denom().clone()).unwrap();
        prop_assert_eq!(again, a);
    }

    #[test]
    fn text_form_round_trips(a in scalar()) {
        let ring = ScalarRing::standard();
        prop_assert_eq!(ring.parse(&ring.format(&a)).unwrap(), a);
    }

    #[test]
    fn substitution_is_a_ring_homomorphism(a in scalar(), b in scalar(), w in laurent()) {
        let bind = [(Z, w)];
        let sub = |x: &Scalar| x.substitute(&bind);
        if let (Ok(sa), Ok(sb)) = (sub(&a), sub(&b)) {
            prop_assert_eq!(sub(&(&a * &b)).unwrap(), &sa * &sb);
            prop_assert_eq!(sub(&(&a + &b)).unwrap(), &sa + &sb);
        }
    }

    #[test]
    fn specialization_is_a_ring_homomorphism(a in scalar(), b in scalar()) {
        let bind = [(V, Scalar::var_pow(U, -1))];
        let sub = |x: &Scalar| x.substitute(&bind);
        if let (Ok(sa), Ok(sb), Ok(sab)) = (sub(&a), sub(&b), sub(&(&a * &b))) {
            prop_assert_eq!(sab, &sa * &sb);
        }
    }
}

#[test]
fn binomials_are_laurent() {
    let (r, s) = (Scalar::r(), Scalar::s());
    for m in 0..=6 {
        for k in 0..=m {
            let b = rs_binomial(m, k, &r, &s).unwrap();
            assert!(b.is_laurent(), "[{m} {k}] = {b}");
        }
    }
    assert!(rs_binomial(2, 3, &r, &s).is_err());
}

#[test]
fn binomials_specialize_to_integers() {
    let one = Scalar::one();
    let want = [1, 6, 15, 20, 15, 6, 1];
    for (k, &w) in want.iter().enumerate() {
        assert_eq!(rs_binomial(6, k as u32, &one, &one).unwrap(), Scalar::from_int(w));
    }
}
