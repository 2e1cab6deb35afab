use std::cmp::Ordering;
use std::collections::BTreeMap;

use proptest::prelude::*;

use hilb_core::exp;
use hilb_core::exponent::Exponent;
use hilb_core::order::TermOrder;
use hilb_core::poly::text::{format_param, parse_param, parse_tpoly};
use hilb_core::poly::{qf, rational_marked, reduce, ParamPolynomial, TMono, TPoly, Var, Q};
use hilb_core::staircase::StandardSet;

fn rational() -> impl Strategy<Value = Q> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| qf(n, d))
}

fn tvar() -> impl Strategy<Value = Var> {
    prop_oneof![
        Just(Var::T(hilb_core::poly::TVar::new(exp![1, 0], exp![0, 0]))),
        Just(Var::T(hilb_core::poly::TVar::new(exp![0, 2], exp![1, 1]))),
        Just(Var::U(hilb_core::poly::TVar::new(exp![2, 0], exp![0, 1]))),
        Just(Var::Time),
    ]
}

fn tpoly() -> impl Strategy<Value = TPoly> {
    let mono = prop::collection::vec((tvar(), 1u32..3), 0..3).prop_map(TMono::from_factors);
    prop::collection::vec((mono, rational()), 0..5).prop_map(TPoly::from_terms)
}

fn exponent(n: usize) -> impl Strategy<Value = Exponent> {
    prop::collection::vec(0u32..5, n).prop_map(Exponent::new)
}

fn orders() -> Vec<TermOrder> {
    vec![
        TermOrder::lex(),
        TermOrder::grlex(),
        TermOrder::grevlex(),
        TermOrder::lex_reversed(3),
        TermOrder::weighted(vec![2, 0, 1], TermOrder::grevlex()).unwrap(),
    ]
}

proptest! {
    #[test]
    fn ring_axioms(a in tpoly(), b in tpoly(), c in tpoly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &TPoly::one(), a.clone());
        prop_assert_eq!(-(-a.clone()), a);
    }

    #[test]
    fn evaluation_is_a_ring_map(a in tpoly(), b in tpoly(), x in rational(), y in rational()) {
        let value = |v: &Var| Some(match v {
            Var::T(_) => x.clone(),
            Var::U(_) => y.clone(),
            Var::Time => x.clone() + y.clone(),
        });
        let ea = a.eval(&value).unwrap();
        let eb = b.eval(&value).unwrap();
        prop_assert_eq!((&a * &b).eval(&value).unwrap(), ea.clone() * eb.clone());
        prop_assert_eq!((&a + &b).eval(&value).unwrap(), ea + eb);
    }

    #[test]
    fn text_round_trip(a in tpoly()) {
        prop_assert_eq!(parse_tpoly(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn param_text_round_trip(terms in prop::collection::vec((exponent(2), tpoly()), 0..4)) {
        let mut f = ParamPolynomial::zero(2);
        for (e, c) in terms {
            f.add_term(e, c);
        }
        prop_assert_eq!(parse_param(&format_param(&f), 2).unwrap(), f);
    }

    #[test]
    fn order_axioms(a in exponent(3), b in exponent(3), c in exponent(3)) {
        let zero = Exponent::zero(3);
        for o in orders() {
            let ab = o.compare(&a, &b);
            prop_assert_eq!(ab, o.compare(&b, &a).reverse());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            prop_assert_ne!(o.compare(&zero, &a), Ordering::Greater);
            prop_assert_eq!(o.compare(&a.add(&c), &b.add(&c)), ab);
            if ab == Ordering::Less && o.compare(&b, &c) == Ordering::Less {
                prop_assert_eq!(o.compare(&a, &c), Ordering::Less);
            }
        }
    }

    #[test]
    fn reduce_is_idempotent(
        tails in prop::collection::vec(prop::collection::vec(rational(), 3), 2),
        f_terms in prop::collection::vec((exponent(2), rational()), 1..6),
    ) {
        // Square δ with corner tails of degree at most 1: every derived
        // member then only needs the two corners, for any coefficients.
        let d = StandardSet::new(2, [exp![0, 0], exp![1, 0], exp![0, 1], exp![1, 1]]).unwrap();
        let below = [exp![0, 0], exp![1, 0], exp![0, 1]];
        let family: BTreeMap<Exponent, ParamPolynomial> = [exp![2, 0], exp![0, 2]]
            .into_iter()
            .zip(tails)
            .map(|(alpha, coeffs)| {
                let tail: Vec<(Exponent, Q)> = below.iter().cloned().zip(coeffs).collect();
                let f = rational_marked(&alpha, tail);
                (alpha, f)
            })
            .collect();
        let mut f = ParamPolynomial::zero(2);
        for (e, c) in f_terms {
            f.add_term(e, TPoly::constant(c));
        }
        let r = reduce(&f, &family, &d).unwrap();
        prop_assert!(r.support().all(|e| d.contains(e)));
        prop_assert_eq!(reduce(&r, &family, &d).unwrap(), r);
    }
}
