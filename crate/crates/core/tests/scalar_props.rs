use num_complex::Complex64;
use proptest::prelude::*;
use qiso_core::scalar::{rad_u, Assignment, PhaseExp, Scalar};

const TOL: f64 = 1e-9;

fn atom() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        (-5i64..=5, 1i64..=4).prop_map(|(a, b)| Scalar::from_ratio(a, b)),
        (-3i32..=3).prop_map(Scalar::mu_pow),
        Just(Scalar::t()),
        Just(Scalar::s()),
        (-3i32..=3).prop_map(|k| Scalar::phase(PhaseExp::theta(k))),
        Just(rad_u()),
    ]
}

fn scalar() -> impl Strategy<Value = Scalar> {
    proptest::collection::vec((atom(), atom()), 1..4)
        .prop_map(|v| v.iter().fold(Scalar::zero(), |acc, (a, b)| &acc + &(a * b)))
}

fn at() -> Assignment {
    Assignment::with_mu(0.37).set("t", 0.81).theta(0.2137)
}

fn ev(x: &Scalar) -> Complex64 {
    x.eval_complex(&at()).unwrap()
}

fn close(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() <= TOL * (1.0 + a.norm().max(b.norm()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn star_is_an_involutive_automorphism(a in scalar(), b in scalar()) {
        prop_assert_eq!(a.star().star(), a.clone());
        prop_assert_eq!((&a * &b).star(), &a.star() * &b.star());
        prop_assert_eq!((&a + &b).star(), &a.star() + &b.star());
    }

    #[test]
    fn inverse(a in scalar()) {
        prop_assume!(!a.is_zero());
        match a.inv() {
            Ok(i) => prop_assert!((&a * &i).is_one()),
            Err(e) => prop_assert!(a.phases().len() > 1, "{} not inverted: {:?}", a, e),
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in scalar(), b in scalar()) {
        prop_assert!(close(ev(&(&a + &b)), ev(&a) + ev(&b)));
        prop_assert!(close(ev(&(&a * &b)), ev(&a) * ev(&b)));
        prop_assert!(close(ev(&a.star()), ev(&a).conj()));
    }
}

#[test]
fn radical_squares_back() {
    let u = rad_u();
    assert_eq!(&u * &u, &Scalar::one() + &Scalar::mu_pow(2));
}
