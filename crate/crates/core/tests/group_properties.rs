mod common;

use common::word;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rtorsion::algebra::{Field, LaurentPoly};
use rtorsion::catalog;
use rtorsion::group::{
    artin_automorphism, presentation_from_braid, AbelianizationMap, GroupRingElement, Letter, Presentation, Word,
};
use rtorsion::torsion::classical_alexander;

fn ring_element(rank: usize) -> impl Strategy<Value = GroupRingElement> {
    prop::collection::vec((-3i64..=3, word(rank, 5)), 0..4).prop_map(|terms| {
        let mut e = GroupRingElement::zero();
        for (c, w) in terms {
            e.add_term(c, w);
        }
        e
    })
}

#[test]
fn word_times_inverse_is_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..1000 {
        let len = rng.gen_range(0..30);
        let w = Word::from_letters((0..len).map(|_| Letter::new(rng.gen_range(0..4), rng.gen())));
        assert!((&w * &w.inverse()).is_identity());
        assert!((&w.inverse() * &w).is_identity());
        assert_eq!(w.inverse().inverse(), w);
    }
}

#[test]
fn abelianization_is_consistent_for_catalog() {
    for entry in catalog::catalog() {
        let p = &entry.presentation;
        let alpha = AbelianizationMap::of(p).unwrap();
        assert!(alpha.is_consistent_with(p), "{}", entry.name);
        for rel in p.relations() {
            assert_eq!(alpha.degree(&rel.lhs), alpha.degree(&rel.rhs), "{}", entry.name);
        }
        // generators of a knot group are meridians
        assert!(alpha.exponents().iter().all(|&e| e.abs() == 1), "{}", entry.name);
    }
}

/// Classical Alexander polynomial of a braid closure, normalized to an
/// ordinary polynomial with positive constant term.
fn alexander_of_braid(braid: &[i32], strands: usize) -> LaurentPoly {
    let p = presentation_from_braid(braid, strands).unwrap();
    let r = classical_alexander(&p).unwrap();
    let q = Field::rationals();
    let t_minus_1 = LaurentPoly::from_ints(&q, 0, &[-1, 1]);
    let red = r.reduced();
    assert!(red.denominator().unit_ratio(&t_minus_1).is_some(), "denominator {}", red.denominator());
    red.numerator().clone()
}

fn assert_same_up_to_unit(a: &LaurentPoly, b: &LaurentPoly) {
    let (c, _) = a.unit_ratio(b).unwrap_or_else(|| panic!("{a} vs {b}"));
    assert!(c.is_one() || (-&c).is_one(), "{a} vs {b}");
}

#[test]
fn braid_closures_give_classical_polynomials() {
    let q = Field::rationals();
    assert_same_up_to_unit(&alexander_of_braid(&[1, 1, 1], 2), &LaurentPoly::from_ints(&q, 0, &[1, -1, 1]));
    assert_same_up_to_unit(&alexander_of_braid(&[1, -2, 1, -2], 3), &LaurentPoly::from_ints(&q, 0, &[1, -3, 1]));
    // cinquefoil
    assert_same_up_to_unit(&alexander_of_braid(&[1; 5], 2), &LaurentPoly::from_ints(&q, 0, &[1, -1, 1, -1, 1]));
}

#[test]
fn braid_presentation_agrees_with_catalog() {
    let from_braid = alexander_of_braid(&[1, -2, 1, -2], 3);
    let fig8 = catalog::example("figure-eight").unwrap();
    let r = classical_alexander(&fig8.presentation).unwrap();
    assert_same_up_to_unit(&from_braid, r.reduced().numerator());
}

#[test]
fn artin_action_preserves_the_boundary_word() {
    // x_1 x_2 ... x_s is fixed by every braid generator
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for strands in 2..6 {
        let product = Word::from_letters((0..strands).map(|g| Letter::new(g, false)));
        for _ in 0..20 {
            let braid: Vec<i32> = (0..8)
                .map(|_| {
                    let g = rng.gen_range(1..strands as i32);
                    if rng.gen() {
                        g
                    } else {
                        -g
                    }
                })
                .collect();
            let images = artin_automorphism(&braid, strands).unwrap();
            assert_eq!(product.substitute(&images), product, "{braid:?}");
        }
    }
}

fn parse(text: &str) -> Presentation {
    rtorsion::group::parse_presentation(text).unwrap()
}

#[test]
fn text_round_trip_of_catalog() {
    for entry in catalog::catalog() {
        let text = entry.presentation.to_text().unwrap();
        let again = parse(&text);
        assert_eq!(again.generators(), entry.presentation.generators());
        assert_eq!(again.relations(), entry.presentation.relations());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn substitution_is_a_homomorphism(
        u in word(3, 12),
        v in word(3, 12),
        images in prop::collection::vec(word(2, 5), 3),
    ) {
        prop_assert_eq!((&u * &v).substitute(&images), &u.substitute(&images) * &v.substitute(&images));
        prop_assert_eq!(u.inverse().substitute(&images), u.substitute(&images).inverse());
    }

    #[test]
    fn exponent_sums_are_additive(u in word(4, 15), v in word(4, 15)) {
        let uv = &u * &v;
        for g in 0..4 {
            prop_assert_eq!(uv.exponent_sum(g), u.exponent_sum(g) + v.exponent_sum(g));
        }
    }

    #[test]
    fn group_ring_associative(a in ring_element(3), b in ring_element(3), c in ring_element(3)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn group_ring_distributive(a in ring_element(3), b in ring_element(3), c in ring_element(3)) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn augmentation_is_multiplicative(a in ring_element(3), b in ring_element(3)) {
        prop_assert_eq!((&a * &b).augmentation(), a.augmentation() * b.augmentation());
    }
}
