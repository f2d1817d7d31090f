use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::{Alphabet, Word};
use crate::arith::{fmt_rational, Rational};
use crate::error::{Error, Result};

/// A finitely supported linear combination of words with rational
/// coefficients. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NCPoly {
    alphabet: Alphabet,
    terms: BTreeMap<Word, Rational>,
}

impl NCPoly {
    pub fn zero(alphabet: Alphabet) -> Self {
        NCPoly { alphabet, terms: BTreeMap::new() }
    }

    pub fn one(alphabet: Alphabet) -> Self {
        Self::word(alphabet, Word::empty())
    }

    pub fn word(alphabet: Alphabet, w: Word) -> Self {
        Self::monomial(alphabet, w, Rational::one())
    }

    pub fn monomial(alphabet: Alphabet, w: Word, c: Rational) -> Self {
        let mut p = Self::zero(alphabet);
        p.add_term(w, c);
        p
    }

    pub fn from_terms(alphabet: Alphabet, terms: impl IntoIterator<Item = (Word, Rational)>) -> Self {
        let mut p = Self::zero(alphabet);
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &NCPoly, c: &Rational) {
        self.check_alphabet(other);
        if c.is_zero() {
            return;
        }
        for (w, x) in &other.terms {
            self.add_term(w.clone(), x * c);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    /// Terms in canonical order: weight, then length, then lexicographic.
    pub fn sorted_terms(&self) -> Vec<(&Word, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_key(|(w, _)| (self.alphabet.weight(w), w.len(), (*w).clone()));
        v
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Word::empty())
    }

    pub fn scale(&self, c: &Rational) -> NCPoly {
        let mut out = NCPoly::zero(self.alphabet);
        out.add_scaled(self, c);
        out
    }

    pub fn map_terms(&self, alphabet: Alphabet, mut f: impl FnMut(&Word, &Rational) -> Option<(Word, Rational)>) -> NCPoly {
        let mut out = NCPoly::zero(alphabet);
        for (w, c) in &self.terms {
            if let Some((w2, c2)) = f(w, c) {
                out.add_term(w2, c2);
            }
        }
        out
    }

    pub fn weight_of(&self, w: &Word) -> usize {
        self.alphabet.weight(w)
    }

    pub fn max_weight(&self) -> Option<usize> {
        self.terms.keys().map(|w| self.alphabet.weight(w)).max()
    }

    /// The weight homogeneous weights present, if there is exactly one.
    pub fn homogeneous_weight(&self) -> Option<usize> {
        let mut ws = self.terms.keys().map(|w| self.alphabet.weight(w));
        let first = ws.next()?;
        ws.all(|w| w == first).then_some(first)
    }

    pub fn component(&self, n: usize) -> NCPoly {
        let a = self.alphabet;
        self.map_terms(a, |w, c| (a.weight(w) == n).then(|| (w.clone(), c.clone())))
    }

    pub fn truncate(&self, n: usize) -> NCPoly {
        let a = self.alphabet;
        self.map_terms(a, |w, c| (a.weight(w) <= n).then(|| (w.clone(), c.clone())))
    }

    /// Concatenation product.
    pub fn concat(&self, other: &NCPoly) -> NCPoly {
        self.check_alphabet(other);
        let mut out = NCPoly::zero(self.alphabet);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }

    /// Concatenation product dropping every term above weight `n`.
    pub fn concat_trunc(&self, other: &NCPoly, n: usize) -> NCPoly {
        self.check_alphabet(other);
        let a = self.alphabet;
        let mut out = NCPoly::zero(a);
        for (u, x) in &self.terms {
            let wu = a.weight(u);
            if wu > n {
                continue;
            }
            for (v, y) in &other.terms {
                if wu + a.weight(v) <= n {
                    out.add_term(u.concat(v), x * y);
                }
            }
        }
        out
    }

    /// Concatenation commutator [self, other].
    pub fn commutator(&self, other: &NCPoly) -> NCPoly {
        &self.concat(other) - &other.concat(self)
    }

    pub fn pow_concat(&self, n: usize) -> NCPoly {
        (0..n).fold(NCPoly::one(self.alphabet), |acc, _| acc.concat(self))
    }

    pub(crate) fn check_alphabet(&self, other: &NCPoly) {
        assert_eq!(self.alphabet, other.alphabet, "alphabet mismatch");
    }

    pub(crate) fn same_alphabet(&self, other: &NCPoly) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch(self.alphabet.to_string(), other.alphabet.to_string()));
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .sorted_terms()
            .into_iter()
            .map(|(w, c)| json!({"word": self.alphabet.format_word(w), "coeff": fmt_rational(c)}))
            .collect();
        json!({"alphabet": self.alphabet.name(), "terms": terms})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse { pos: 0, expected: what.to_string() };
        let alphabet = Alphabet::from_name(v["alphabet"].as_str().ok_or_else(|| bad("alphabet field"))?)?;
        let mut p = NCPoly::zero(alphabet);
        for t in v["terms"].as_array().ok_or_else(|| bad("terms array"))? {
            let w = super::parse_word(alphabet, t["word"].as_str().ok_or_else(|| bad("word field"))?)?;
            let c = crate::arith::parse_rational(t["coeff"].as_str().ok_or_else(|| bad("coeff field"))?)?;
            p.add_term(w, c);
        }
        Ok(p)
    }
}

pub(crate) fn format_term(out: &mut String, first: bool, c: &Rational, body: &str) {
    let neg = c < &Rational::zero();
    let abs = if neg { -c.clone() } else { c.clone() };
    match (first, neg) {
        (true, true) => out.push('-'),
        (true, false) => {}
        (false, true) => out.push_str(" - "),
        (false, false) => out.push_str(" + "),
    }
    if !abs.is_one() {
        out.push_str(&fmt_rational(&abs));
        out.push('*');
    }
    out.push_str(body);
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, (w, c)) in self.sorted_terms().into_iter().enumerate() {
            format_term(&mut out, i == 0, c, &self.alphabet.format_word(w));
        }
        f.write_str(&out)
    }
}

impl Add for &NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        self.scale(&-Rational::one())
    }
}

impl Mul for &NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: &NCPoly) -> NCPoly {
        self.concat(rhs)
    }
}

impl Mul<&Rational> for &NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: &Rational) -> NCPoly {
        self.scale(rhs)
    }
}

impl AddAssign<&NCPoly> for NCPoly {
    fn add_assign(&mut self, rhs: &NCPoly) {
        self.add_scaled(rhs, &Rational::one());
    }
}

impl SubAssign<&NCPoly> for NCPoly {
    fn sub_assign(&mut self, rhs: &NCPoly) {
        self.add_scaled(rhs, &-Rational::one());
    }
}
