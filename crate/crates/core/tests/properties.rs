//! Property tests for the exact arithmetic and the subset combinatorics.

use conormal::combinatorics::{subsets, SubsetIndex};
use conormal::poly::{Monomial, Polynomial, RationalFunction, Universe, Var};
use conormal::Rational;
use proptest::prelude::*;

type P = Polynomial<Rational>;
type R = RationalFunction<Rational>;

fn universe() -> Universe {
    Universe::new(2, 3).unwrap()
}

fn coefficient() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=3).prop_map(|(p, q)| Rational::new(p, q))
}

fn polynomial() -> impl Strategy<Value = P> {
    let u = universe();
    prop::collection::vec(
        (prop::collection::vec(0u16..3, u.num_vars()), coefficient()),
        0..5,
    )
    .prop_map(move |terms| {
        P::from_terms(
            u,
            terms
                .into_iter()
                .map(|(e, c)| (Monomial::from_exponents(&e), c)),
        )
    })
}

fn nonzero_polynomial() -> impl Strategy<Value = P> {
    polynomial().prop_filter("nonzero", |p| !p.is_zero())
}

fn subset() -> impl Strategy<Value = SubsetIndex> {
    (1usize..=7)
        .prop_flat_map(|n| (Just(n), 0..=n))
        .prop_flat_map(|(n, k)| {
            let all = subsets(k, n);
            (0..all.len()).prop_map(move |i| all[i].clone())
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in polynomial(), b in polynomial(), c in polynomial()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &P::one(universe()), a.clone());
    }

    #[test]
    fn exact_division_round_trip(a in polynomial(), b in nonzero_polynomial()) {
        prop_assert_eq!((&a * &b).exact_divide(&b).unwrap(), a.clone());
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
    }

    #[test]
    fn substitution_composes(a in polynomial(), p in polynomial(), q in polynomial()) {
        // Substituting z1 -> p, then z2 -> q, equals substituting z1 -> p[z2 -> q]
        // and z2 -> q simultaneously.
        let first = a.substitute(&[(Var::Z(1), p.clone())]).unwrap();
        let sequential = first.substitute(&[(Var::Z(2), q.clone())]).unwrap();
        let p_q = p.substitute(&[(Var::Z(2), q.clone())]).unwrap();
        let simultaneous = a.substitute(&[(Var::Z(1), p_q), (Var::Z(2), q)]).unwrap();
        prop_assert_eq!(sequential, simultaneous);
    }

    #[test]
    fn substitution_is_a_ring_map(a in polynomial(), b in polynomial(), p in polynomial()) {
        let at = |x: &P| x.substitute(&[(Var::T(1), p.clone())]).unwrap();
        prop_assert_eq!(at(&(&a * &b)), &at(&a) * &at(&b));
        prop_assert_eq!(at(&(&a + &b)), &at(&a) + &at(&b));
    }

    #[test]
    fn z_permutations_compose(a in polynomial()) {
        let swap12 = [2, 1, 3];
        let cycle = [2, 3, 1];
        prop_assert_eq!(a.permute_z(&swap12).permute_z(&swap12), a.clone());
        prop_assert_eq!(a.permute_z(&cycle).permute_z(&cycle).permute_z(&cycle), a);
    }

    #[test]
    fn rational_function_equivalence(a in polynomial(), b in nonzero_polynomial(), c in nonzero_polynomial()) {
        let x = R::new(a.clone(), b.clone()).unwrap();
        // a c / b c = a / b
        prop_assert!(R::new(&a * &c, &b * &c).unwrap().equals(&x));
        // a/b + c/b = (a + c)/b
        let sum = x.checked_add(&R::new(c.clone(), b.clone()).unwrap()).unwrap();
        prop_assert!(sum.equals(&R::new(&a + &c, b.clone()).unwrap()));
        // (a/b) (b/c) = a/c
        let product = x.checked_mul(&R::new(b.clone(), c.clone()).unwrap()).unwrap();
        prop_assert!(product.equals(&R::new(a, c).unwrap()));
    }

    #[test]
    fn normalization_preserves_value(a in polynomial(), b in nonzero_polynomial(), c in nonzero_polynomial()) {
        let x = R::new(&a * &c, &b * &c).unwrap();
        prop_assert!(x.clone().normalized().equals(&x));
    }

    #[test]
    fn subset_invariants(i in subset()) {
        prop_assert_eq!(i.sgn(), i.sgn_from_blocks());
        prop_assert_eq!(i.dual().dual(), i.clone());
        prop_assert_eq!(i.length() + i.codim(), i.k() * (i.n() - i.k()));
        prop_assert_eq!(i.dual().codim(), i.length());
        prop_assert!(SubsetIndex::bottom(i.k(), i.n()).leq(&i));
        prop_assert!(i.leq(&SubsetIndex::top(i.k(), i.n())));
        prop_assert_eq!(SubsetIndex::parse(i.n(), &i.to_string()).unwrap(), i.clone());
        let m: usize = i.blocks().m().iter().sum();
        prop_assert_eq!(m, i.k());
    }
}
