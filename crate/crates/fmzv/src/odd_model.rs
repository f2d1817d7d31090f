//! The model U^f = ℚ⟨s3, s5, …⟩ ⊗ ℚ[s2] with shuffle product and the
//! deconcatenation coaction, and the kernels of its derivations.
//!
//! A basis element u·s2^k (u a word in odd letters) is written as the S-word
//! u followed by k letters s2 whenever it appears in a tensor.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::arith::{b_coeff, QMatrix, Rational};
use crate::error::{invalid, Result};
use crate::word::{parse_poly, pi_indec, Alphabet, NCPoly, Tensor2, Word};

const S2: u8 = 2;

fn s() -> Alphabet {
    Alphabet::S
}

/// Words in s3, s5, … of the given weight, lexicographic.
pub fn odd_words(n: usize) -> Vec<Word> {
    s().words_of_weight(n).into_iter().filter(|w| !w.letters().contains(&S2)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct OddModelElement {
    terms: BTreeMap<(Word, usize), Rational>,
}

impl OddModelElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::basis(Word::empty(), 0)
    }

    /// u·s2^k.
    pub fn basis(u: Word, k: usize) -> Self {
        let mut e = Self::zero();
        e.add_term(u, k, Rational::one());
        e
    }

    /// s_n: the letter for odd n ≥ 3, b_{n/2}·s2^{n/2} for even n ≥ 2.
    pub fn s_n(n: usize) -> Result<Self> {
        if n >= 2 && n % 2 == 0 {
            let mut e = Self::zero();
            e.add_term(Word::empty(), n / 2, b_coeff(n / 2));
            Ok(e)
        } else if n >= 3 && n <= u8::MAX as usize {
            Ok(Self::basis(Word(vec![n as u8]), 0))
        } else {
            invalid(format!("no letter s{n}"))
        }
    }

    /// Reads an S-polynomial; letters s2 anywhere in a word are collected
    /// into the power of s2.
    pub fn from_poly(p: &NCPoly) -> Result<Self> {
        if p.alphabet() != s() {
            return invalid("odd-model elements are polynomials over S");
        }
        let mut e = Self::zero();
        for (w, c) in p.terms() {
            let k = w.letters().iter().filter(|&&l| l == S2).count();
            let u = Word(w.letters().iter().copied().filter(|&l| l != S2).collect());
            e.add_term(u, k, c.clone());
        }
        Ok(e)
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::from_poly(&parse_poly(s(), text)?)
    }

    pub fn add_term(&mut self, u: Word, k: usize, c: Rational) {
        if c.is_zero() {
            return;
        }
        let key = (u, k);
        let entry = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Rational) {
        for ((u, k), x) in &other.terms {
            self.add_term(u.clone(), *k, x * c);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, usize), &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, u: &Word, k: usize) -> Rational {
        self.terms.get(&(u.clone(), k)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The S-polynomial with each u·s2^k written as u s2 ⋯ s2.
    pub fn to_poly(&self) -> NCPoly {
        NCPoly::from_terms(s(), self.terms.iter().map(|((u, k), c)| (encode(u, *k), c.clone())))
    }

    pub fn shuffle(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((u, a), x) in &self.terms {
            for ((v, b), y) in &other.terms {
                let prod = NCPoly::word(s(), u.clone()).shuffle(&NCPoly::word(s(), v.clone()));
                for (w, c) in prod.terms() {
                    out.add_term(w.clone(), a + b, c * x * y);
                }
            }
        }
        out
    }

    pub fn homogeneous_weight(&self) -> Option<usize> {
        self.to_poly().homogeneous_weight()
    }
}

impl fmt::Display for OddModelElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

fn encode(u: &Word, k: usize) -> Word {
    let mut l = u.letters().to_vec();
    l.extend(std::iter::repeat_n(S2, k));
    Word(l)
}

/// Basis of U^f_N: pairs (u, k) with wt(u) + 2k = N, ordered by k and then
/// lexicographically.
pub fn uf_basis(n: usize) -> Vec<(Word, usize)> {
    (0..=n / 2).flat_map(|k| odd_words(n - 2 * k).into_iter().map(move |u| (u, k))).collect()
}

/// Deconcatenation on the odd word; the power of s2 goes to the right.
pub fn dec_coaction(e: &OddModelElement) -> Tensor2 {
    let mut t = Tensor2::zero(s(), s());
    for ((u, k), c) in e.terms() {
        for i in 0..=u.len() {
            t.add_term(u.slice(0, i), encode(&u.slice(i, u.len()), *k), c.clone());
        }
    }
    t
}

/// D_{2r+1} = (π_{2r+1} ⊗ id)(dec − 1⊗id).
pub fn uf_derivation_d(e: &OddModelElement, r: usize) -> Tensor2 {
    let w = 2 * r + 1;
    let mut t = dec_coaction(e);
    for ((u, k), c) in e.terms() {
        t.add_term(Word::empty(), encode(u, *k), -c);
    }
    let mut out = Tensor2::zero(s(), s());
    for (right, left) in t.by_right() {
        for (u, c) in pi_indec(&left, w).terms() {
            out.add_term(u.clone(), right.clone(), c.clone());
        }
    }
    out
}

/// ker(D_{<N}) on U^f_N, one vector per kernel dimension.
pub fn uf_kernel(n: usize) -> Vec<OddModelElement> {
    let basis = uf_basis(n);
    let mut rows: BTreeMap<(usize, Word, Word), Vec<Rational>> = BTreeMap::new();
    for (j, (u, k)) in basis.iter().enumerate() {
        let e = OddModelElement::basis(u.clone(), *k);
        for r in (1..).take_while(|r| 2 * r + 1 < n) {
            for ((a, b), c) in uf_derivation_d(&e, r).terms() {
                rows.entry((r, a.clone(), b.clone())).or_insert_with(|| vec![Rational::zero(); basis.len()])[j] += c;
            }
        }
    }
    let kernel = if rows.is_empty() {
        (0..basis.len())
            .map(|j| (0..basis.len()).map(|i| if i == j { Rational::one() } else { Rational::zero() }).collect())
            .collect()
    } else {
        QMatrix::from_rows(rows.into_values().collect()).expect("rectangular").rank_and_kernel().1
    };
    kernel
        .into_iter()
        .map(|v: Vec<Rational>| {
            let mut e = OddModelElement::zero();
            for (c, (u, k)) in v.iter().zip(&basis) {
                e.add_term(u.clone(), *k, c.clone());
            }
            e
        })
        .collect()
}

/// (N, dim U^f_N) for N ≤ max.
pub fn uf_dimension_table(max: usize) -> Vec<(usize, usize)> {
    (0..=max).map(|n| (n, uf_basis(n).len())).collect()
}
