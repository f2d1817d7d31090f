mod common;

use common::{tensor_product, x_poly, x_word, y_word};
use fmzv::arith::{qi, Rational};
use fmzv::word::{
    antipode_conc, deconcat, dual_coproduct, hoffman_exp, hoffman_log, lyndon_words, parse_poly, pi_indec, qsh_words,
    quasi_shuffle, quasi_shuffle_right, witt_number, Alphabet, Diamond, NCPoly, Shuffle, Stuffle, Tensor2, Word,
};
use num_traits::Zero;
use proptest::prelude::*;

const Y: Alphabet = Alphabet::Y;

fn yw(w: &Word) -> NCPoly {
    NCPoly::word(Y, w.clone())
}

fn y_poly(max: usize) -> impl Strategy<Value = NCPoly> {
    prop::collection::vec((y_word(max), -3i64..=3), 0..=3)
        .prop_map(|ts| NCPoly::from_terms(Y, ts.into_iter().map(|(w, c)| (w, qi(c)))))
}

fn deconcat_poly(p: &NCPoly) -> Tensor2 {
    common::linear(p, p.alphabet(), p.alphabet(), |w| deconcat(p.alphabet(), w))
}

fn dual_poly<D: Diamond>(p: &NCPoly, d: &D) -> Tensor2 {
    common::linear(p, p.alphabet(), p.alphabet(), |w| dual_coproduct(p.alphabet(), w, d))
}

/// Antipode of the quasi-shuffle Hopf algebra with deconcatenation, from
/// Σ_{w=uv} u ∗ S(v) = 0 for nonempty w.
fn qsh_antipode<D: Diamond>(w: &Word, d: &D) -> NCPoly {
    if w.is_empty() {
        return NCPoly::one(Y);
    }
    let mut out = NCPoly::zero(Y);
    for i in 1..=w.len() {
        let s = qsh_antipode(&w.slice(i, w.len()), d);
        out -= &quasi_shuffle(&yw(&w.slice(0, i)), &s, d).unwrap();
    }
    out
}

/// (−1)^n Σ over coarsenings of the reversed word.
fn qsh_antipode_closed(w: &Word) -> NCPoly {
    if w.is_empty() {
        return NCPoly::one(Y);
    }
    let rev = w.reversed();
    let mut out = NCPoly::zero(Y);
    let n = w.len();
    for mask in 0u32..(1 << n.saturating_sub(1)) {
        let mut letters = vec![rev.letters()[0]];
        for i in 1..n {
            if mask >> (i - 1) & 1 == 1 {
                *letters.last_mut().unwrap() += rev.letters()[i];
            } else {
                letters.push(rev.letters()[i]);
            }
        }
        out.add_term(Word(letters), qi(if n % 2 == 0 { 1 } else { -1 }));
    }
    out
}

proptest! {
    #![proptest_config(common::config())]

    #[test]
    fn shuffle_commutative_associative(a in x_poly(2, 3), b in x_poly(2, 3), c in x_poly(2, 2)) {
        prop_assert_eq!(a.shuffle(&b), b.shuffle(&a));
        prop_assert_eq!(a.shuffle(&b).shuffle(&c), a.shuffle(&b.shuffle(&c)));
    }

    #[test]
    fn stuffle_commutative_associative(a in y_poly(2), b in y_poly(2), c in y_poly(2)) {
        prop_assert_eq!(a.stuffle(&b), b.stuffle(&a));
        prop_assert_eq!(a.stuffle(&b).stuffle(&c), a.stuffle(&b.stuffle(&c)));
    }

    #[test]
    fn left_and_right_recursions_agree(u in y_word(3), v in y_word(2)) {
        prop_assert_eq!(quasi_shuffle(&yw(&u), &yw(&v), &Stuffle).unwrap(), quasi_shuffle_right(&yw(&u), &yw(&v), &Stuffle).unwrap());
    }

    #[test]
    fn dual_coproduct_pairs_with_product(w in y_word(5)) {
        let n = Y.weight(&w);
        let t = dual_coproduct(Y, &w, &Stuffle);
        for k in 0..=n {
            for u in Y.words_of_weight(k) {
                for v in Y.words_of_weight(n - k) {
                    let c = qsh_words(&u, &v, &Stuffle).get(&w).copied().unwrap_or(0);
                    prop_assert_eq!(t.coeff(&u, &v), qi(c as i64));
                }
            }
        }
    }

    #[test]
    fn deconcat_is_multiplicative_for_stuffle(a in y_poly(3), b in y_poly(2)) {
        let lhs = deconcat_poly(&a.stuffle(&b));
        let rhs = tensor_product(&deconcat_poly(&a), &deconcat_poly(&b), |p, q| p.stuffle(q));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn dual_coproduct_is_multiplicative_for_concatenation(a in y_poly(3), b in y_poly(2)) {
        let lhs = dual_poly(&a.concat(&b), &Stuffle);
        let rhs = tensor_product(&dual_poly(&a, &Stuffle), &dual_poly(&b, &Stuffle), |p, q| p.concat(q));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn dual_coproduct_is_coassociative(w in y_word(5)) {
        // (Δ ⊗ id)Δ and (id ⊗ Δ)Δ compared as sums over triples
        let t = dual_coproduct(Y, &w, &Stuffle);
        let mut left: std::collections::BTreeMap<(Word, Word, Word), Rational> = Default::default();
        let mut right = left.clone();
        for ((u, v), c) in t.terms() {
            for ((a, b), d) in dual_coproduct(Y, u, &Stuffle).terms() {
                *left.entry((a.clone(), b.clone(), v.clone())).or_insert_with(Rational::zero) += c * d;
            }
            for ((a, b), d) in dual_coproduct(Y, v, &Stuffle).terms() {
                *right.entry((u.clone(), a.clone(), b.clone())).or_insert_with(Rational::zero) += c * d;
            }
        }
        left.retain(|_, c| !c.is_zero());
        right.retain(|_, c| !c.is_zero());
        prop_assert_eq!(left, right);
    }

    #[test]
    fn quasi_shuffle_antipode(w in y_word(5)) {
        let s = qsh_antipode(&w, &Stuffle);
        prop_assert_eq!(&s, &qsh_antipode_closed(&w));
        if !w.is_empty() {
            // S(u) ∗ v summed over deconcatenations vanishes as well
            let mut acc = NCPoly::zero(Y);
            for i in 0..=w.len() {
                acc += &quasi_shuffle(&qsh_antipode(&w.slice(0, i), &Stuffle), &yw(&w.slice(i, w.len())), &Stuffle).unwrap();
            }
            prop_assert!(acc.is_zero());
        }
    }

    #[test]
    fn concatenation_antipode(w in x_word(1, 6)) {
        let mut acc = NCPoly::zero(Alphabet::X);
        for ((u, v), c) in dual_coproduct(Alphabet::X, &w, &Shuffle).terms() {
            let s = antipode_conc(&NCPoly::word(Alphabet::X, u.clone()));
            acc.add_scaled(&s.concat(&NCPoly::word(Alphabet::X, v.clone())), c);
        }
        prop_assert!(acc.is_zero());
    }

    #[test]
    fn hoffman_exp_is_an_algebra_map(u in y_word(3), v in y_word(2)) {
        let lhs = hoffman_exp(&yw(&u).shuffle(&yw(&v)), &Stuffle);
        let rhs = hoffman_exp(&yw(&u), &Stuffle).stuffle(&hoffman_exp(&yw(&v), &Stuffle));
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(hoffman_log(&hoffman_exp(&yw(&u), &Stuffle), &Stuffle), yw(&u));
    }

    #[test]
    fn products_vanish_in_indecomposables(u in x_word(1, 4), v in x_word(1, 3)) {
        let n = u.len() + v.len();
        let p = NCPoly::word(Alphabet::X, u).shuffle(&NCPoly::word(Alphabet::X, v));
        prop_assert!(pi_indec(&p, n).is_zero());
    }

    #[test]
    fn parse_round_trip(p in x_poly(5, 4)) {
        prop_assert_eq!(parse_poly(Alphabet::X, &p.to_string()).unwrap(), p.clone());
        prop_assert_eq!(NCPoly::from_json(&p.to_json()).unwrap(), p);
    }
}

#[test]
fn lyndon_counts_are_witt_numbers() {
    for n in 1..=8u32 {
        assert_eq!(lyndon_words(Alphabet::X, n as usize).len() as i64, witt_number(2, n), "n={n}");
    }
}

#[test]
fn parse_errors_name_the_position() {
    let err = parse_poly(Alphabet::X, "x0x1 + x2").unwrap_err().to_string();
    assert!(err.contains("position 8") && err.contains("expected"), "{err}");
}
