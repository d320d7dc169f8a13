//! Randomised invariants across the polynomial, Gröbner and graph layers.

use hedet::graphs::{
    canonical_form, chromatic_number, edge_list_emit, edge_list_parse, find_coloring, graph6_emit, graph6_parse,
    is_k_colorable, join, tensor_product, Graph,
};
use hedet::groebner::{buchberger, is_reduced, Ideal};
use hedet::poly::{parse_polynomial, Monomial, MonomialOrder, Polynomial, Rational, VarSet, Variable};
use proptest::prelude::*;
use std::cmp::Ordering;

fn vars() -> [Variable; 3] {
    [Variable::x(1), Variable::x(2), Variable::e(1, 2)]
}

fn mono(exps: [u32; 3]) -> Monomial {
    Monomial::from_pairs(vars().into_iter().zip(exps).filter(|(_, e)| *e > 0))
}

fn monomial() -> impl Strategy<Value = Monomial> {
    [0u32..4, 0u32..4, 0u32..4].prop_map(mono)
}

fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-4i64..5, [0u32..3, 0u32..3, 0u32..3]), 0..5)
        .prop_map(|ts| Polynomial::from_terms(ts.into_iter().map(|(c, e)| (mono(e), Rational::from_int(c)))))
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut b = bits.into_iter();
            for i in 1..=n {
                for j in i + 1..=n {
                    if b.next().unwrap() {
                        edges.push((i, j));
                    }
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn orders() -> Vec<MonomialOrder> {
    vec![
        MonomialOrder::Lex,
        MonomialOrder::Grevlex,
        MonomialOrder::eliminate_all_but(VarSet::edges()),
    ]
}

proptest! {
    #[test]
    fn rationals_match_bigrational(a in any::<i64>(), b in 1i64.., c in any::<i64>(), d in 1i64..) {
        let (x, y) = (Rational::new(a, b), Rational::new(c, d));
        let (bx, by) = (x.to_big(), y.to_big());
        prop_assert_eq!((&x + &y).to_big(), &bx + &by);
        prop_assert_eq!((&x - &y).to_big(), &bx - &by);
        prop_assert_eq!((&x * &y).to_big(), &bx * &by);
        if !y.is_zero() {
            prop_assert_eq!((&x / &y).to_big(), &bx / &by);
        }
        prop_assert_eq!(Rational::from_big(bx.clone()).to_big(), bx);
    }

    #[test]
    fn polynomial_ring_laws(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p * &Polynomial::one(), p.clone());
    }

    #[test]
    fn polynomial_text_round_trip(p in poly()) {
        prop_assert_eq!(parse_polynomial(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn monomial_orders_are_admissible(a in monomial(), b in monomial(), c in monomial()) {
        for o in orders() {
            let ab = o.compare(&a, &b);
            prop_assert_eq!(ab, o.compare(&b, &a).reverse());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            prop_assert_eq!(o.compare(&a.mul(&c), &b.mul(&c)), ab);
            prop_assert_ne!(o.compare(&a, &Monomial::one()), Ordering::Less);
            if ab == Ordering::Less && o.compare(&b, &c) == Ordering::Less {
                prop_assert_eq!(o.compare(&a, &c), Ordering::Less);
            }
        }
    }

    #[test]
    fn block_order_eliminates(a in monomial(), b in monomial()) {
        let o = MonomialOrder::eliminate_all_but(VarSet::edges());
        let has_x = |m: &Monomial| m.variables().any(|v| !v.is_edge());
        if has_x(&a) && !has_x(&b) {
            prop_assert_eq!(o.compare(&a, &b), Ordering::Greater);
        }
    }

    #[test]
    fn reduced_basis_is_shuffle_invariant(gens in prop::collection::vec(poly(), 1..4), seed in any::<u64>()) {
        let mut shuffled = gens.clone();
        let len = shuffled.len();
        shuffled.rotate_left((seed as usize) % len);
        if seed & 1 == 1 {
            shuffled.reverse();
        }
        let a = buchberger(&Ideal::from_generators(gens.clone()), &MonomialOrder::Grevlex).unwrap();
        let b = buchberger(&Ideal::from_generators(shuffled), &MonomialOrder::Grevlex).unwrap();
        prop_assert_eq!(&a.basis, &b.basis);
        prop_assert!(is_reduced(&a.basis, &a.order));
        for g in &gens {
            prop_assert!(a.contains(g));
        }
    }

    #[test]
    fn graph_text_round_trips(g in graph(12)) {
        prop_assert_eq!(graph6_parse(&graph6_emit(&g)).unwrap(), g.clone());
        prop_assert_eq!(edge_list_parse(&edge_list_emit(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels(g in graph(9), rot in 0usize..9) {
        let n = g.n();
        let perm: Vec<usize> = (0..n).map(|i| (i + rot) % n + 1).collect();
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&g.relabel(&perm)).unwrap());
        prop_assert_eq!(canonical_form(&g).unwrap().graph().edge_count(), g.edge_count());
    }

    #[test]
    fn colourings_are_proper_and_minimal(g in graph(9)) {
        let chi = chromatic_number(&g);
        let c = find_coloring(&g, chi).unwrap();
        prop_assert!(g.edges().iter().all(|&(a, b)| c[a - 1] != c[b - 1]));
        prop_assert!(chi == 0 || !is_k_colorable(&g, chi - 1));
        prop_assert!(chi >= g.clique_number());
    }

    #[test]
    fn product_bound_and_join(g in graph(5), h in graph(5)) {
        let p = tensor_product(&g, &h);
        prop_assert_eq!(p.edge_count(), 2 * g.edge_count() * h.edge_count());
        prop_assert!(chromatic_number(&p) <= chromatic_number(&g).min(chromatic_number(&h)).max(1));
        let j = join(&g, &h);
        prop_assert_eq!(chromatic_number(&j), chromatic_number(&g) + chromatic_number(&h));
    }
}
