#![allow(dead_code)]

use fmzv::arith::{qi, Rational};
use fmzv::word::{lyndon_bracket, lyndon_words, Alphabet, NCPoly, Tensor2, Word};
use proptest::prelude::*;

pub const CASES: u32 = 256;

/// CASES cases, unless PROPTEST_CASES asks for another number.
pub fn config() -> ProptestConfig {
    let cases = std::env::var("PROPTEST_CASES").ok().and_then(|v| v.parse().ok()).unwrap_or(CASES);
    ProptestConfig::with_cases(cases)
}

pub fn x_word(min: usize, max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0u8..2, min..=max).prop_map(Word)
}

/// A Y-word of weight at most `max` (letters y1..y_max).
pub fn y_word(max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1u8..=max as u8, 0..=max).prop_filter_map("weight", move |l| {
        (l.iter().map(|&c| c as usize).sum::<usize>() <= max).then_some(Word(l))
    })
}

pub fn x_poly(max_len: usize, max_terms: usize) -> impl Strategy<Value = NCPoly> {
    prop::collection::vec((x_word(0, max_len), -3i64..=3), 0..=max_terms)
        .prop_map(|ts| NCPoly::from_terms(Alphabet::X, ts.into_iter().map(|(w, c)| (w, qi(c)))))
}

/// Homogeneous polynomial over X of the given weight.
pub fn x_homog(n: usize, max_terms: usize) -> impl Strategy<Value = NCPoly> {
    prop::collection::vec((x_word(n, n), -3i64..=3), 1..=max_terms)
        .prop_map(|ts| NCPoly::from_terms(Alphabet::X, ts.into_iter().map(|(w, c)| (w, qi(c)))))
}

/// Random Lie polynomial: combination of Lyndon brackets of weight 1..=max.
pub fn lie_poly(max: usize) -> impl Strategy<Value = NCPoly> {
    let brackets: Vec<NCPoly> =
        (1..=max).flat_map(|n| lyndon_words(Alphabet::X, n)).map(|w| lyndon_bracket(Alphabet::X, &w)).collect();
    prop::collection::vec(-2i64..=2, brackets.len()).prop_map(move |cs| {
        let mut p = NCPoly::zero(Alphabet::X);
        for (b, c) in brackets.iter().zip(cs) {
            p.add_scaled(b, &qi(c));
        }
        p
    })
}

pub fn tensor_from(left: Alphabet, right: Alphabet, f: impl FnOnce(&mut Tensor2)) -> Tensor2 {
    let mut t = Tensor2::zero(left, right);
    f(&mut t);
    t
}

/// Componentwise product of two tensors, given a product of polynomials.
pub fn tensor_product(a: &Tensor2, b: &Tensor2, mul: impl Fn(&NCPoly, &NCPoly) -> NCPoly) -> Tensor2 {
    let (la, ra) = (a.left_alphabet(), a.right_alphabet());
    let mut out = Tensor2::zero(la, ra);
    for ((u1, v1), c1) in a.terms() {
        for ((u2, v2), c2) in b.terms() {
            let l = mul(&NCPoly::word(la, u1.clone()), &NCPoly::word(la, u2.clone()));
            let r = mul(&NCPoly::word(ra, v1.clone()), &NCPoly::word(ra, v2.clone()));
            out.add_product(&l, &r, &(c1 * c2));
        }
    }
    out
}

pub fn tensor_shuffle(a: &Tensor2, b: &Tensor2) -> Tensor2 {
    tensor_product(a, b, |p, q| p.shuffle(q))
}

/// 1⊗p as a tensor.
pub fn one_tensor_poly(p: &NCPoly) -> Tensor2 {
    let mut t = Tensor2::zero(p.alphabet(), p.alphabet());
    for (w, c) in p.terms() {
        t.add_term(Word::empty(), w.clone(), c.clone());
    }
    t
}

/// Apply a linear map to a polynomial word by word.
pub fn linear<F: Fn(&Word) -> Tensor2>(p: &NCPoly, left: Alphabet, right: Alphabet, f: F) -> Tensor2 {
    let mut t = Tensor2::zero(left, right);
    for (w, c) in p.terms() {
        t.add_scaled(&f(w), c);
    }
    t
}

pub fn rat(n: i64, d: i64) -> Rational {
    fmzv::arith::q(n, d)
}

/// Sparse Lie polynomial: one or two Lyndon brackets of weight 1..=max.
pub fn lie_sparse(max: usize) -> impl Strategy<Value = NCPoly> {
    let brackets: Vec<NCPoly> =
        (1..=max).flat_map(|n| lyndon_words(Alphabet::X, n)).map(|w| lyndon_bracket(Alphabet::X, &w)).collect();
    let n = brackets.len();
    prop::collection::vec((0..n, prop::sample::select(vec![-2i64, -1, 1, 2])), 1..=2).prop_map(move |picks| {
        let mut p = NCPoly::zero(Alphabet::X);
        for (i, c) in picks {
            p.add_scaled(&brackets[i], &qi(c));
        }
        p
    })
}
