use proptest::prelude::*;
use qiso_core::ncalg::{random_poly, NCPoly, Word};
use qiso_core::qgroups::su2::{su2, su2_alphabet};
use rand::rngs::StdRng;
use rand::SeedableRng;

fn poly() -> impl Strategy<Value = NCPoly> {
    any::<u64>().prop_map(|seed| {
        let p = su2();
        p.normal_form(&random_poly(&su2_alphabet(), 4, 3, &mut StdRng::seed_from_u64(seed)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn multiplication_is_associative(a in poly(), b in poly(), c in poly()) {
        let p = su2();
        prop_assert_eq!(p.mul(&p.mul(&a, &b), &c), p.mul(&a, &p.mul(&b, &c)));
    }

    #[test]
    fn star_reverses_products(a in poly(), b in poly()) {
        let p = su2();
        let lhs = p.normal_form(&p.mul(&a, &b).star());
        let rhs = p.mul(&p.normal_form(&b.star()), &p.normal_form(&a.star()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn normal_form_is_idempotent_and_normal(a in poly()) {
        let p = su2();
        prop_assert_eq!(p.normal_form(&a), a.clone());
        for (w, _) in a.terms() {
            prop_assert!(p.is_normal_word(w));
        }
    }
}

fn shape_ok(alpha: &qiso_core::ncalg::Alphabet, w: &Word) -> bool {
    let names: Vec<&str> = w.0.iter().map(|&g| alpha.name(g)).collect();
    let lead = names.first().copied().filter(|&n| n == "α" || n == "α*");
    let k = names.iter().take_while(|&&n| Some(n) == lead).count();
    let n = names[k..].iter().take_while(|&&n| n == "γ*").count();
    names[k + n..].iter().all(|&n| n == "γ")
}

#[test]
fn basis_words_have_the_expected_shape() {
    let p = su2();
    let alpha = su2_alphabet();
    let words = p.basis_words(6);
    assert!(words.iter().all(|w| shape_ok(&alpha, w)), "a basis word is outside α^kγ*^nγ^l ∪ α*^kγ*^nγ^l");
    for len in 0..=6usize {
        let count = words.iter().filter(|w| w.len() == len).count();
        let expected = if len == 0 { 1 } else { (len + 1) + 2 * (1..=len).map(|k| len - k + 1).sum::<usize>() };
        assert_eq!(count, expected, "length {len}");
    }
}
