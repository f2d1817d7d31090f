mod common;

use common::{lie_poly, lie_sparse, x_poly};
use fmzv::postlie::{
    bracket, gl_antipode, gl_closed_form, grossman_larson, ihara_bracket, is_primitive, postlie_tr, special_derivation,
};
use fmzv::word::{Alphabet, NCPoly, Word};
use proptest::prelude::*;

const X: Alphabet = Alphabet::X;

fn letter(l: u8) -> NCPoly {
    NCPoly::word(X, Word(vec![l]))
}

/// Three sparse Lie elements of weight ≤ 4 with total top weight ≤ `max`.
fn bounded_triple(max: usize) -> impl Strategy<Value = (NCPoly, NCPoly, NCPoly)> {
    (lie_sparse(4), lie_sparse(4), lie_sparse(4)).prop_filter("total weight", move |(a, b, c)| {
        a.max_weight().unwrap_or(0) + b.max_weight().unwrap_or(0) + c.max_weight().unwrap_or(0) <= max
    })
}

proptest! {
    #![proptest_config(common::config())]

    #[test]
    fn first_post_lie_axiom(x in lie_sparse(4), y in lie_sparse(4), z in lie_sparse(4)) {
        let lhs = postlie_tr(&x, &bracket(&y, &z));
        let rhs = &bracket(&postlie_tr(&x, &y), &z) + &bracket(&y, &postlie_tr(&x, &z));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn second_post_lie_axiom((x, y, z) in bounded_triple(10)) {
        let lhs = postlie_tr(&bracket(&x, &y), &z);
        let mut rhs = postlie_tr(&x, &postlie_tr(&y, &z));
        rhs -= &postlie_tr(&postlie_tr(&x, &y), &z);
        rhs -= &postlie_tr(&y, &postlie_tr(&x, &z));
        rhs += &postlie_tr(&postlie_tr(&y, &x), &z);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn lie_element_acts_as_derivation(x in lie_poly(3), t in prop::collection::vec(x_poly(2, 2), 1..=3)) {
        let product = t.iter().fold(NCPoly::one(X), |acc, p| acc.concat(p));
        let mut rhs = NCPoly::zero(X);
        for i in 0..t.len() {
            let mut term = NCPoly::one(X);
            for (j, p) in t.iter().enumerate() {
                term = term.concat(&if i == j { postlie_tr(&x, p) } else { p.clone() });
            }
            rhs += &term;
        }
        prop_assert_eq!(postlie_tr(&x, &product), rhs);
    }

    #[test]
    fn special_derivation_is_the_action_of_lie_elements(f in lie_poly(3), g in x_poly(3, 3)) {
        prop_assert_eq!(postlie_tr(&f, &g), special_derivation(&f, &g));
    }

    #[test]
    fn ihara_jacobi((f, g, h) in bounded_triple(12)) {
        let mut s = ihara_bracket(&f, &ihara_bracket(&g, &h));
        s += &ihara_bracket(&g, &ihara_bracket(&h, &f));
        s += &ihara_bracket(&h, &ihara_bracket(&f, &g));
        prop_assert!(s.is_zero());
        prop_assert!(is_primitive(&ihara_bracket(&f, &g)));
    }

    #[test]
    fn gl_is_associative(a in x_poly(3, 2), b in x_poly(3, 2), c in x_poly(2, 2)) {
        let lhs = grossman_larson(&grossman_larson(&a, &b), &c);
        let rhs = grossman_larson(&a, &grossman_larson(&b, &c));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gl_commutator_is_ihara_bracket(f in lie_poly(3), g in lie_poly(3)) {
        let comm = &grossman_larson(&f, &g) - &grossman_larson(&g, &f);
        prop_assert_eq!(comm, ihara_bracket(&f, &g));
    }

    #[test]
    fn x1_prefix_acts_trivially(a in x_poly(3, 2), b in x_poly(4, 3)) {
        prop_assert!(postlie_tr(&letter(1).concat(&a), &b).is_zero());
    }

    #[test]
    fn gl_antipode_inverts(a in common::x_word(0, 4)) {
        // Σ S(A₁) ⊛ A₂ = ε(A)
        let n = a.len();
        let mut acc = NCPoly::zero(X);
        for (l, r, c) in fmzv::postlie::unshuffle(&a) {
            acc.add_scaled(&grossman_larson(&gl_antipode(&NCPoly::word(X, l), n), &NCPoly::word(X, r)), &c);
        }
        let expect = if n == 0 { NCPoly::one(X) } else { NCPoly::zero(X) };
        prop_assert_eq!(acc, expect);
    }
}

#[test]
fn closed_form_matches_recursion_through_weight_five() {
    for total in 0..=5 {
        for k in 0..=total {
            for a in X.words_of_weight(k) {
                let a = NCPoly::word(X, a);
                for w in X.words_of_weight(total - k) {
                    assert_eq!(gl_closed_form(&a, &w), grossman_larson(&a, &NCPoly::word(X, w.clone())), "{a} ⊛ {w:?}");
                }
            }
        }
    }
}
