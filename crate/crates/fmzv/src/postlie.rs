//! Special derivations, the post-Lie product ▷ on ℚ⟨X⟩, the Ihara bracket,
//! the Grossman–Larson product and its antipode, and truncated group-like
//! series.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use num_traits::{One, Zero};

use crate::arith::{qi, Rational};
use crate::error::{invalid, Result};
use crate::word::{antipode_conc, dual_coproduct, Alphabet, NCPoly, Shuffle, Tensor2, Word};

const X0: u8 = 0;
const X1: u8 = 1;

fn x() -> Alphabet {
    Alphabet::X
}

fn letter(l: u8) -> NCPoly {
    NCPoly::word(Alphabet::X, Word::letter(l))
}

thread_local! {
    static UNSHUFFLE: RefCell<HashMap<Word, Rc<Vec<(Word, Word, Rational)>>>> = RefCell::new(HashMap::new());
    static NESTED: RefCell<HashMap<Word, NCPoly>> = RefCell::new(HashMap::new());
}

fn unshuffle_cached(w: &Word) -> Rc<Vec<(Word, Word, Rational)>> {
    if let Some(v) = UNSHUFFLE.with(|c| c.borrow().get(w).cloned()) {
        return v;
    }
    let v: Rc<Vec<_>> =
        Rc::new(dual_coproduct(x(), w, &Shuffle).terms().map(|((u, v), c)| (u.clone(), v.clone(), c.clone())).collect());
    UNSHUFFLE.with(|c| c.borrow_mut().insert(w.clone(), v.clone()));
    v
}

/// Δ⧢ of a word as (left, right, coefficient) triples.
pub fn unshuffle(w: &Word) -> Vec<(Word, Word, Rational)> {
    unshuffle_cached(w).as_ref().clone()
}

/// d_f(g) with d_f(x0) = 0, d_f(x1) = [x1, f], extended to ℚ⟨X⟩ by the
/// Leibniz rule for concatenation.
pub fn special_derivation(f: &NCPoly, g: &NCPoly) -> NCPoly {
    let image = letter(X1).commutator(f);
    let mut out = NCPoly::zero(x());
    for (w, c) in g.terms() {
        for (i, &l) in w.letters().iter().enumerate() {
            if l != X1 {
                continue;
            }
            let left = NCPoly::word(x(), w.slice(0, i));
            let right = NCPoly::word(x(), w.slice(i + 1, w.len()));
            out.add_scaled(&left.concat(&image).concat(&right), c);
        }
    }
    out
}

/// Concatenation commutator of polynomials.
pub fn bracket(f: &NCPoly, g: &NCPoly) -> NCPoly {
    f.commutator(g)
}

thread_local! {
    static TR_CACHE: RefCell<HashMap<(Word, Word), NCPoly>> = RefCell::new(HashMap::new());
}

/// A ▷ y for a word A and a letter y: zero for y = x0 unless A is empty, and
/// the nested commutator [⋯[[x1, a1], a2], …, an] for y = x1.
fn tr_on_letter(a: &Word, y: u8) -> NCPoly {
    if a.is_empty() {
        return letter(y);
    }
    if y == X0 {
        return NCPoly::zero(x());
    }
    if let Some(v) = NESTED.with(|c| c.borrow().get(a).cloned()) {
        return v;
    }
    let v = a.letters().iter().fold(letter(X1), |acc, &l| acc.commutator(&letter(l)));
    NESTED.with(|c| c.borrow_mut().insert(a.clone(), v.clone()));
    v
}

fn tr_words(a: &Word, b: &Word) -> NCPoly {
    if b.is_empty() {
        return if a.is_empty() { NCPoly::one(x()) } else { NCPoly::zero(x()) };
    }
    if a.is_empty() {
        return NCPoly::word(x(), b.clone());
    }
    if b.len() == 1 {
        return tr_on_letter(a, b.letters()[0]);
    }
    let key = (a.clone(), b.clone());
    if let Some(v) = TR_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return v;
    }
    let y = b.letters()[0];
    let rest = b.slice(1, b.len());
    let mut out = NCPoly::zero(x());
    for (a1, a2, c) in unshuffle_cached(a).iter() {
        let head = tr_on_letter(a1, y);
        if head.is_zero() {
            continue;
        }
        let tail = tr_words(a2, &rest);
        if !tail.is_zero() {
            out.add_scaled(&head.concat(&tail), c);
        }
    }
    TR_CACHE.with(|c| c.borrow_mut().insert(key, out.clone()));
    out
}

/// The post-Lie product extended to ℚ⟨X⟩ ⊗ ℚ⟨X⟩ → ℚ⟨X⟩ by Ext0–Ext3.
pub fn postlie_tr(a: &NCPoly, b: &NCPoly) -> NCPoly {
    let mut out = NCPoly::zero(x());
    for (u, c) in a.terms() {
        for (v, d) in b.terms() {
            out.add_scaled(&tr_words(u, v), &(c * d));
        }
    }
    out
}

/// {f, g} = d_f(g) − d_g(f) + [f, g].
pub fn ihara_bracket(f: &NCPoly, g: &NCPoly) -> NCPoly {
    let mut out = special_derivation(f, g);
    out -= &special_derivation(g, f);
    out += &f.commutator(g);
    out
}

fn gl_words(a: &Word, b: &Word) -> NCPoly {
    let mut out = NCPoly::zero(x());
    for (a1, a2, c) in unshuffle_cached(a).iter() {
        let t = tr_words(a2, b);
        if !t.is_zero() {
            out.add_scaled(&NCPoly::word(x(), a1.clone()).concat(&t), c);
        }
    }
    out
}

/// A ⊛ B = Σ A₁ (A₂ ▷ B), computed through the Ext rules.
pub fn grossman_larson(a: &NCPoly, b: &NCPoly) -> NCPoly {
    let mut out = NCPoly::zero(x());
    for (u, c) in a.terms() {
        for (v, d) in b.terms() {
            out.add_scaled(&gl_words(u, v), &(c * d));
        }
    }
    out
}

/// A ⊛ B keeping only terms of weight ≤ n.
pub fn grossman_larson_trunc(a: &NCPoly, b: &NCPoly, n: usize) -> NCPoly {
    let mut out = NCPoly::zero(x());
    for (u, c) in a.terms() {
        for (v, d) in b.terms() {
            if u.len() + v.len() <= n {
                out.add_scaled(&gl_words(u, v), &(c * d));
            }
        }
    }
    out
}

/// Iterated Δ⧢ into `parts` tensor factors, by repeated application to the
/// last factor.
pub fn iterated_unshuffle(w: &Word, parts: usize) -> Vec<(Vec<Word>, Rational)> {
    assert!(parts >= 1);
    let mut acc = vec![(vec![w.clone()], Rational::one())];
    for _ in 1..parts {
        let mut next = Vec::new();
        for (mut factors, c) in acc {
            let last = factors.pop().expect("nonempty");
            for (l, r, d) in unshuffle(&last) {
                let mut f = factors.clone();
                f.push(l);
                f.push(r);
                next.push((f, &c * d));
            }
        }
        acc = next;
    }
    acc
}

/// The insertion formula: for w = x0^{k1} x1 ⋯ x0^{kd} x1 x0^{k_{d+1}},
/// A ⊛ w = A₍₁₎ x0^{k1} S(A₍₂₎) x1 A₍₃₎ x0^{k2} ⋯ S(A₍₂d₎) x1 A₍₂d+1₎ x0^{k_{d+1}}.
pub fn gl_closed_form(a: &NCPoly, w: &Word) -> NCPoly {
    let mut runs = vec![0usize];
    for &l in w.letters() {
        if l == X0 {
            *runs.last_mut().unwrap() += 1;
        } else {
            runs.push(0);
        }
    }
    let d = runs.len() - 1;
    let mut out = NCPoly::zero(x());
    for (u, c) in a.terms() {
        for (factors, e) in iterated_unshuffle(u, 2 * d + 1) {
            let mut coeff = c * e;
            let mut letters = Vec::new();
            for i in 0..d {
                letters.extend_from_slice(factors[2 * i].letters());
                letters.extend(std::iter::repeat(X0).take(runs[i]));
                let s = &factors[2 * i + 1];
                if s.len() % 2 == 1 {
                    coeff = -coeff;
                }
                letters.extend(s.letters().iter().rev());
                letters.push(X1);
            }
            letters.extend_from_slice(factors[2 * d].letters());
            letters.extend(std::iter::repeat(X0).take(runs[d]));
            out.add_term(Word(letters), coeff);
        }
    }
    out
}

thread_local! {
    static GL_ANTIPODE: RefCell<HashMap<Word, NCPoly>> = RefCell::new(HashMap::new());
}

fn gl_antipode_word(w: &Word) -> NCPoly {
    if w.is_empty() {
        return NCPoly::one(x());
    }
    if let Some(v) = GL_ANTIPODE.with(|c| c.borrow().get(w).cloned()) {
        return v;
    }
    let mut out = NCPoly::zero(x());
    for (a1, a2, c) in unshuffle(w) {
        if a2.is_empty() {
            continue;
        }
        let s = gl_antipode_word(&a1);
        out.add_scaled(&grossman_larson(&s, &NCPoly::word(x(), a2)), &-c);
    }
    GL_ANTIPODE.with(|c| c.borrow_mut().insert(w.clone(), out.clone()));
    out
}

/// Antipode of (ℚ⟨X⟩, ⊛, Δ⧢), solved weight by weight from
/// Σ S(A₁) ⊛ A₂ = ε(A). Terms of `a` above `max_weight` are ignored.
pub fn gl_antipode(a: &NCPoly, max_weight: usize) -> NCPoly {
    let mut out = NCPoly::zero(x());
    for (w, c) in a.terms() {
        if w.len() <= max_weight {
            out.add_scaled(&gl_antipode_word(w), c);
        }
    }
    out
}

/// True iff Δ⧢(p) = p⊗1 + 1⊗p.
pub fn is_primitive(p: &NCPoly) -> bool {
    if !p.constant_term().is_zero() {
        return false;
    }
    let mut lhs = Tensor2::zero(x(), x());
    for (w, c) in p.terms() {
        lhs.add_scaled(&dual_coproduct(x(), w, &Shuffle), c);
    }
    let mut rhs = Tensor2::zero(x(), x());
    for (w, c) in p.terms() {
        rhs.add_term(w.clone(), Word::empty(), c.clone());
        rhs.add_term(Word::empty(), w.clone(), c.clone());
    }
    lhs == rhs
}

/// An element of the free Lie algebra on X, checked on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieElement(NCPoly);

impl LieElement {
    pub fn new(p: NCPoly) -> Result<Self> {
        if p.alphabet() != Alphabet::X || !is_primitive(&p) {
            return invalid("not a Lie polynomial over X");
        }
        Ok(LieElement(p))
    }

    pub fn value(&self) -> &NCPoly {
        &self.0
    }

    pub fn into_inner(self) -> NCPoly {
        self.0
    }
}

/// A series over X known up to a fixed weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    value: NCPoly,
    truncation_weight: usize,
}

impl TruncatedSeries {
    pub fn new(value: NCPoly, truncation_weight: usize) -> Self {
        TruncatedSeries { value: value.truncate(truncation_weight), truncation_weight }
    }

    pub fn one(truncation_weight: usize) -> Self {
        Self::new(NCPoly::one(x()), truncation_weight)
    }

    pub fn value(&self) -> &NCPoly {
        &self.value
    }

    pub fn truncation_weight(&self) -> usize {
        self.truncation_weight
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let n = self.truncation_weight.min(other.truncation_weight);
        TruncatedSeries { value: self.value.concat_trunc(&other.value, n), truncation_weight: n }
    }

    /// Δ⧢(G) = G⊗G in every bidegree of total weight ≤ the truncation.
    pub fn is_grouplike(&self) -> bool {
        let n = self.truncation_weight;
        if !self.value.constant_term().is_one() {
            return false;
        }
        let mut lhs = Tensor2::zero(x(), x());
        for (w, c) in self.value.terms() {
            lhs.add_scaled(&dual_coproduct(x(), w, &Shuffle), c);
        }
        let mut rhs = Tensor2::zero(x(), x());
        for (u, a) in self.value.terms() {
            for (v, b) in self.value.terms() {
                if u.len() + v.len() <= n {
                    rhs.add_term(u.clone(), v.clone(), a * b);
                }
            }
        }
        lhs == rhs
    }
}

/// exp(f) = Σ f^k / k! under concatenation, truncated at weight n.
pub fn exp_trunc(f: &NCPoly, n: usize) -> Result<TruncatedSeries> {
    if !f.constant_term().is_zero() {
        return invalid("exp needs a series without constant term");
    }
    let f = f.truncate(n);
    let mut term = NCPoly::one(x());
    let mut sum = NCPoly::one(x());
    for k in 1..=n {
        term = term.concat_trunc(&f, n).scale(&Rational::new(1.into(), (k as i64).into()));
        if term.is_zero() {
            break;
        }
        sum += &term;
    }
    Ok(TruncatedSeries::new(sum, n))
}

/// log(G) = Σ (−1)^{k+1} (G − 1)^k / k, truncated at G's weight.
pub fn log_trunc(g: &TruncatedSeries) -> Result<NCPoly> {
    if !g.value.constant_term().is_one() {
        return invalid("log needs constant term 1");
    }
    let n = g.truncation_weight;
    let h = &g.value - &NCPoly::one(x());
    let mut power = NCPoly::one(x());
    let mut sum = NCPoly::zero(x());
    for k in 1..=n {
        power = power.concat_trunc(&h, n);
        if power.is_zero() {
            break;
        }
        let sign = if k % 2 == 1 { 1 } else { -1 };
        sum.add_scaled(&power, &Rational::new(sign.into(), (k as i64).into()));
    }
    Ok(sum)
}

/// κ_G: x0 ↦ x0, x1 ↦ G⁻¹ x1 G with G⁻¹ = antipode_conc(G), applied to a
/// polynomial and truncated at G's weight.
pub fn kappa_apply_poly(g: &TruncatedSeries, h: &NCPoly) -> Result<NCPoly> {
    if !g.is_grouplike() {
        return invalid("kappa needs a group-like series");
    }
    let n = g.truncation_weight;
    let ginv = antipode_conc(&g.value);
    let image_x1 = ginv.concat_trunc(&letter(X1), n).concat_trunc(&g.value, n);
    let mut out = NCPoly::zero(x());
    for (w, c) in h.terms() {
        let mut acc = NCPoly::one(x());
        for &l in w.letters() {
            let img = if l == X0 { letter(X0) } else { image_x1.clone() };
            acc = acc.concat_trunc(&img, n);
        }
        out.add_scaled(&acc, c);
    }
    Ok(out)
}

pub fn kappa_apply(g: &TruncatedSeries, w: &Word) -> Result<NCPoly> {
    kappa_apply_poly(g, &NCPoly::word(x(), w.clone()))
}

/// ξ(3) = [x0,[x0,x1]] + [[x0,x1],x1].
pub fn xi3() -> NCPoly {
    let (a, b) = (letter(X0), letter(X1));
    let ab = a.commutator(&b);
    &a.commutator(&ab) + &ab.commutator(&b)
}

/// ξ(5) as printed: [x0,[x0,[x0,[x0,x1]]]] + 2[[x0,[x0,[x0,x1]]],x1]
/// + ½[[x0,[x0,x1]],[x0,x1]] + 2[x1,[x1,[x0,[x0,x1]]]]
/// − 3/2[[x0,x1],[[x0,x1],x1]] + [[[[x0,x1],x1],x1],x1].
pub fn xi5() -> NCPoly {
    let (a, b) = (letter(X0), letter(X1));
    let br = |p: &NCPoly, q: &NCPoly| p.commutator(q);
    let ab = br(&a, &b);
    let aab = br(&a, &ab);
    let aaab = br(&a, &aab);
    let abb = br(&ab, &b);
    let mut out = br(&a, &aaab);
    out.add_scaled(&br(&aaab, &b), &qi(2));
    out.add_scaled(&br(&aab, &ab), &Rational::new(1.into(), 2.into()));
    out.add_scaled(&br(&b, &br(&b, &aab)), &qi(2));
    out.add_scaled(&br(&ab, &abb), &Rational::new((-3).into(), 2.into()));
    out += &br(&br(&abb, &b), &b);
    out
}
