use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use superhecke::domains::Family;
use superhecke::groupoid::{inverse, is_reduced, length, multiply, word_to_element, Groupoid, Word, DEFAULT_MAX_ELEMENTS};
use superhecke::hecke::{HeckeAlgebra, HeckeElement};
use superhecke::rootsys::build_root_system;
use superhecke::scalar::{format_rational, parse_rational, rat, Ring, Specialize};
use superhecke::{LaurentPoly, Rational};

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i64..=4, -6i64..=6), 0..5)
        .prop_map(|t| LaurentPoly::from_terms(t.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=9).prop_filter("nonzero", |(n, _)| *n != 0).prop_map(|(n, d)| rat(n, d))
}

fn groupoid(f: Family) -> Arc<Groupoid> {
    Arc::new(Groupoid::enumerate(Arc::new(build_root_system(f).unwrap()), DEFAULT_MAX_ELEMENTS).unwrap())
}

fn b12() -> &'static Arc<Groupoid> {
    static G: OnceLock<Arc<Groupoid>> = OnceLock::new();
    G.get_or_init(|| groupoid(Family::OspOdd { m: 1, n: 2 }))
}

fn a11() -> &'static Arc<Groupoid> {
    static G: OnceLock<Arc<Groupoid>> = OnceLock::new();
    G.get_or_init(|| groupoid(Family::Gl { m: 1, n: 1 }))
}

fn element<S: Ring>(terms: &[(usize, i64)], n: usize, lift: impl Fn(i64) -> S) -> HeckeElement<S> {
    let mut x = HeckeElement::new();
    for &(k, c) in terms {
        let e = x.entry(k % n).or_insert_with(S::zero);
        *e += &lift(c);
    }
    x.retain(|_, c| !c.is_zero());
    x
}

proptest! {
    #[test]
    fn laurent_ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(), b in poly(), q0 in nonzero_rational()) {
        let (x, y) = (a.eval_at(&q0).unwrap(), b.eval_at(&q0).unwrap());
        prop_assert_eq!((&a * &b).eval_at(&q0).unwrap(), &x * &y);
        prop_assert_eq!((&a + &b).eval_at(&q0).unwrap(), &x + &y);
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn rational_text_round_trip(n in -1000i64..1000, d in 1i64..1000) {
        let r = rat(n, d);
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn word_lengths(base in 0usize..3, letters in prop::collection::vec(0usize..3, 0..12)) {
        let g = b12();
        let rs = g.root_system();
        let w = Word::new(base, letters);
        let el = word_to_element(rs, &w).unwrap();
        let l = length(rs, &el);
        prop_assert!(l <= w.len());
        prop_assert_eq!(l % 2, w.len() % 2);
        prop_assert_eq!(is_reduced(rs, &w).unwrap(), l == w.len());
        prop_assert_eq!(length(rs, &inverse(&el)), l);
        prop_assert_eq!(inverse(&inverse(&el)), el.clone());
        prop_assert!(g.index_of(&el).is_some());
    }

    #[test]
    fn groupoid_product_associative(x in 0usize..144, y in 0usize..144, z in 0usize..144) {
        let g = b12();
        let (x, y, z) = (g.element(x), g.element(y), g.element(z));
        let left = multiply(x, y).element().and_then(|xy| multiply(&xy, z).element());
        let right = multiply(y, z).element().and_then(|yz| multiply(x, &yz).element());
        prop_assert_eq!(left, right);
    }

    #[test]
    fn specialisation_commutes_with_products(
        u in prop::collection::vec((0usize..144, -3i64..=3), 1..4),
        v in prop::collection::vec((0usize..144, -3i64..=3), 1..4),
    ) {
        let g = a11();
        let q0 = rat(3, 2);
        let hp = HeckeAlgebra::new(g.clone(), LaurentPoly::q());
        let he = HeckeAlgebra::new(g.clone(), q0.clone());
        let n = g.len();
        let lift_p = |c: i64| LaurentPoly::from_i64(c);
        let lift_r = |c: i64| Rational::from_i64(c);
        let p = hp.product(&element(&u, n, lift_p), &element(&v, n, lift_p));
        let e = he.product(&element(&u, n, lift_r), &element(&v, n, lift_r));
        let mut p_eval: HeckeElement<Rational> = p.iter().map(|(k, c)| (*k, c.eval_at(&q0).unwrap())).collect();
        p_eval.retain(|_, c| !c.is_zero());
        prop_assert_eq!(p_eval, e);
    }
}
