use jacquet::cli::parse_expr;
use jacquet::criteria::{casselman, linked, ordering_for_extraction, satisfies_indexing};
use jacquet::format;
use jacquet::hopf::{cuspidal_jacquet, cuspidal_jacquet_iterated, mstar};
use jacquet::structure::decide_pair;
use jacquet::{CuspWord, LineSet, Multisegment, Point, RElem, Rational, Segment};
use proptest::prelude::*;

fn lines() -> LineSet {
    LineSet::standard()
}

fn segment() -> impl Strategy<Value = Segment> {
    (-4i64..=4, 0i64..3).prop_map(|(a, len)| {
        let start = Rational::new(a, 2);
        Segment::new(lines().get("rho").unwrap().clone(), start, start + len).unwrap()
    })
}

fn label() -> impl Strategy<Value = Multisegment> {
    prop::collection::vec(segment(), 0..=3).prop_map(Multisegment::new)
}

fn element() -> impl Strategy<Value = RElem> {
    prop::collection::vec((label(), -3i64..=3), 0..=3).prop_map(|terms| {
        let mut x = RElem::zero();
        for (l, c) in terms {
            x.add_term(l, c);
        }
        x
    })
}

fn word() -> impl Strategy<Value = CuspWord> {
    prop::collection::vec(-4i64..=4, 1..=5).prop_map(|es| {
        let rho = lines().get("rho").unwrap().clone();
        es.into_iter().map(|e| Point::new(rho.clone(), Rational::new(e, 2))).collect()
    })
}

fn unitary_family() -> impl Strategy<Value = Vec<Segment>> {
    prop::sample::subsequence((0i64..=4).collect::<Vec<_>>(), 1..=3).prop_map(|halves| {
        let rho = lines().get("rho").unwrap().clone();
        halves
            .into_iter()
            .map(|h| Segment::new(rho.clone(), Rational::new(-h, 2), Rational::new(h, 2)).unwrap())
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn print_parse_round_trip(x in element()) {
        let text = format::relem_inline(&x);
        prop_assert_eq!(parse_expr(&text, &lines()).unwrap(), x);
    }

    #[test]
    fn product_is_commutative_and_associative(x in element(), y in element(), z in element()) {
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
    }

    #[test]
    fn mstar_is_multiplicative(x in element(), y in element()) {
        prop_assert_eq!(mstar(&(&x * &y)), mstar(&x).product(&mstar(&y)).unwrap());
    }

    #[test]
    fn dual_and_twist(x in element(), t in -2i64..=2) {
        let l = lines();
        let t = Rational::new(t, 2);
        prop_assert_eq!(x.dual(&l).unwrap().dual(&l).unwrap(), x.clone());
        prop_assert_eq!(x.twist(t).twist(-t), x.clone());
        prop_assert_eq!(x.twist(t).dual(&l).unwrap(), x.dual(&l).unwrap().twist(-t));
    }

    #[test]
    fn shuffle_matches_iterated_mstar(l in label()) {
        let x = RElem::basis(l);
        prop_assert_eq!(cuspidal_jacquet(&x), cuspidal_jacquet_iterated(&x));
    }

    #[test]
    fn casselman_invariant_under_dual_reversal(w in word()) {
        let l = lines();
        let dual: CuspWord = w.points().iter().rev().map(|p| p.dual(&l).unwrap()).collect();
        let a = casselman(&w).unwrap();
        let b = casselman(&dual).unwrap();
        prop_assert_eq!(a.sum_zero, b.sum_zero);
        prop_assert_eq!(a.square_integrable, b.square_integrable);
    }

    #[test]
    fn linkage_and_decisions_are_symmetric(a in segment(), b in segment()) {
        prop_assert_eq!(linked(&a, &b), linked(&b, &a));
        let d = decide_pair(&a, &b);
        prop_assert_eq!(&d, &decide_pair(&b, &a));
        prop_assert_eq!(d.is_irreducible(), !linked(&a, &b));
    }

    #[test]
    fn extraction_order_satisfies_indexing(family in unitary_family()) {
        let order = ordering_for_extraction(&family, &lines()).unwrap();
        prop_assert!(satisfies_indexing(&order));
        let mut a = order.clone();
        let mut b = family.clone();
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
    }
}
