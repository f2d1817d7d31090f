use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::{Alphabet, NCPoly, Word};
use crate::arith::{fmt_rational, Rational};

/// A finitely supported linear combination of word pairs u⊗v.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor2 {
    left: Alphabet,
    right: Alphabet,
    terms: BTreeMap<(Word, Word), Rational>,
}

impl Tensor2 {
    pub fn zero(left: Alphabet, right: Alphabet) -> Self {
        Tensor2 { left, right, terms: BTreeMap::new() }
    }

    pub fn left_alphabet(&self) -> Alphabet {
        self.left
    }

    pub fn right_alphabet(&self) -> Alphabet {
        self.right
    }

    pub fn add_term(&mut self, u: Word, v: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        let key = (u, v);
        let e = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Adds c·(p ⊗ q).
    pub fn add_product(&mut self, p: &NCPoly, q: &NCPoly, c: &Rational) {
        for (u, a) in p.terms() {
            for (v, b) in q.terms() {
                self.add_term(u.clone(), v.clone(), a * b * c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Tensor2, c: &Rational) {
        for ((u, v), x) in &other.terms {
            self.add_term(u.clone(), v.clone(), x * c);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, u: &Word, v: &Word) -> Rational {
        self.terms.get(&(u.clone(), v.clone())).cloned().unwrap_or_else(Rational::zero)
    }

    /// Groups the terms by right factor: Σ_v (Σ_u c u) ⊗ v.
    pub fn by_right(&self) -> BTreeMap<Word, NCPoly> {
        let mut out: BTreeMap<Word, NCPoly> = BTreeMap::new();
        for ((u, v), c) in &self.terms {
            out.entry(v.clone()).or_insert_with(|| NCPoly::zero(self.left)).add_term(u.clone(), c.clone());
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    /// Applies a linear map to each left factor.
    pub fn map_left(&self, alphabet: Alphabet, mut f: impl FnMut(&Word) -> NCPoly) -> Tensor2 {
        let mut out = Tensor2::zero(alphabet, self.right);
        for ((u, v), c) in &self.terms {
            for (u2, c2) in f(u).terms() {
                out.add_term(u2.clone(), v.clone(), c * c2);
            }
        }
        out
    }

    /// Applies a linear map to each right factor.
    pub fn map_right(&self, alphabet: Alphabet, mut f: impl FnMut(&Word) -> NCPoly) -> Tensor2 {
        let mut out = Tensor2::zero(self.left, alphabet);
        for ((u, v), c) in &self.terms {
            for (v2, c2) in f(v).terms() {
                out.add_term(u.clone(), v2.clone(), c * c2);
            }
        }
        out
    }

    pub fn sorted_terms(&self) -> Vec<(&(Word, Word), &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        let key = |(u, w): &(Word, Word)| {
            let (a, b) = (self.left.weight(u), self.right.weight(w));
            (std::cmp::Reverse(a), a + b, u.len(), u.clone(), w.len(), w.clone())
        };
        v.sort_by_key(|(k, _)| key(k));
        v
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .sorted_terms()
            .into_iter()
            .map(|((u, v), c)| {
                json!({
                    "left": self.left.format_word(u),
                    "right": self.right.format_word(v),
                    "coeff": fmt_rational(c),
                })
            })
            .collect();
        json!({"left_alphabet": self.left.name(), "right_alphabet": self.right.name(), "terms": terms})
    }
}

impl fmt::Display for Tensor2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, ((u, v), c)) in self.sorted_terms().into_iter().enumerate() {
            let body = format!("{}⊗{}", self.left.format_word(u), self.right.format_word(v));
            super::poly::format_term(&mut out, i == 0, c, &body);
        }
        f.write_str(&out)
    }
}

impl Tensor2 {
    pub fn one_tensor(left: Alphabet, right: Alphabet, v: Word) -> Tensor2 {
        let mut t = Tensor2::zero(left, right);
        t.add_term(Word::empty(), v, Rational::one());
        t
    }
}
