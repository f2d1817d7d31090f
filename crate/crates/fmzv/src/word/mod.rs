//! Words over the alphabets X, Y and S, noncommutative polynomials, tensors,
//! and the products and coproducts on them.

mod hoffman;
mod indec;
mod lyndon;
mod parse;
mod poly;
mod products;
mod tensor;

pub use hoffman::{compositions, hoffman_exp, hoffman_log};
pub use indec::pi_indec;
pub use lyndon::{is_lyndon, lyndon_bracket, lyndon_words, standard_factorization, witt_number};
pub use parse::{parse_poly, parse_word};
pub use poly::NCPoly;
pub use products::{
    antipode_conc, concat, deconcat, dual_coproduct, dual_coproduct_by_pairing, pairing, qsh_words, quasi_shuffle,
    quasi_shuffle_right, shuffle, Diamond, Shuffle, Stuffle,
};
pub use tensor::Tensor2;

use std::fmt;

use crate::error::{invalid, Result};

/// Letter codes: X uses 0 and 1 for x0 and x1; Y uses k for y_k; S uses k for
/// s_k with k = 2 or k odd ≥ 3.
pub type Letter = u8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Alphabet {
    X,
    Y,
    S,
}

impl Alphabet {
    pub fn name(self) -> &'static str {
        match self {
            Alphabet::X => "X",
            Alphabet::Y => "Y",
            Alphabet::S => "S",
        }
    }

    pub fn from_name(s: &str) -> Result<Self> {
        match s {
            "X" => Ok(Alphabet::X),
            "Y" => Ok(Alphabet::Y),
            "S" => Ok(Alphabet::S),
            _ => invalid(format!("unknown alphabet {s:?}")),
        }
    }

    pub fn is_letter(self, l: Letter) -> bool {
        match self {
            Alphabet::X => l <= 1,
            Alphabet::Y => l >= 1,
            Alphabet::S => l == 2 || (l >= 3 && l % 2 == 1),
        }
    }

    pub fn letter_weight(self, l: Letter) -> usize {
        match self {
            Alphabet::X => 1,
            Alphabet::Y | Alphabet::S => l as usize,
        }
    }

    /// Letters of the given weight in increasing order.
    pub fn letters_of_weight(self, k: usize) -> Vec<Letter> {
        match self {
            Alphabet::X if k == 1 => vec![0, 1],
            Alphabet::X => vec![],
            _ if k == 0 || k > Letter::MAX as usize => vec![],
            _ if self.is_letter(k as Letter) => vec![k as Letter],
            _ => vec![],
        }
    }

    pub fn format_letter(self, l: Letter) -> String {
        match self {
            Alphabet::X => format!("x{l}"),
            Alphabet::Y => format!("y{l}"),
            Alphabet::S => format!("s{l}"),
        }
    }

    /// "1" for the empty word, otherwise "x0x1", "y3 y1" or "s3 s5".
    pub fn format_word(self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        let sep = if self == Alphabet::X { "" } else { " " };
        w.letters().iter().map(|&l| self.format_letter(l)).collect::<Vec<_>>().join(sep)
    }

    pub fn weight(self, w: &Word) -> usize {
        match self {
            Alphabet::X => w.len(),
            _ => w.letters().iter().map(|&l| self.letter_weight(l)).sum(),
        }
    }

    /// All words of total weight `n`, lexicographic in the letter order.
    pub fn words_of_weight(self, n: usize) -> Vec<Word> {
        if self == Alphabet::X {
            return (0..1u64 << n)
                .map(|bits| Word((0..n).map(|i| ((bits >> (n - 1 - i)) & 1) as Letter).collect()))
                .collect();
        }
        let mut out = Vec::new();
        let mut buf = Vec::new();
        self.extend_words(n, &mut buf, &mut out);
        out
    }

    fn extend_words(self, rest: usize, buf: &mut Vec<Letter>, out: &mut Vec<Word>) {
        if rest == 0 {
            out.push(Word(buf.clone()));
            return;
        }
        for k in 1..=rest {
            for l in self.letters_of_weight(k) {
                buf.push(l);
                self.extend_words(rest - k, buf, out);
                buf.pop();
            }
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A finite sequence of letter codes. The alphabet is carried by the
/// enclosing polynomial; words compare lexicographically with prefixes first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word(self.0[from..to].to_vec())
    }

    /// Number of x1 letters of an X-word.
    pub fn depth(&self) -> usize {
        self.0.iter().filter(|&&l| l == 1).count()
    }

    pub fn pow(&self, n: usize) -> Word {
        Word(self.0.repeat(n))
    }
}

/// X-word from "x0x1" or the compact form "01"; "1" is the empty word.
///
/// Panics on malformed input; use [`parse_word`] for fallible parsing.
pub fn xw(s: &str) -> Word {
    parse_word(Alphabet::X, s).unwrap_or_else(|e| panic!("bad X-word {s:?}: {e}"))
}

/// X-polynomial from the text grammar. Panics on malformed input.
pub fn xp(s: &str) -> NCPoly {
    parse_poly(Alphabet::X, s).unwrap_or_else(|e| panic!("bad X-polynomial {s:?}: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration() {
        let w = Alphabet::X.words_of_weight(2);
        let s: Vec<String> = w.iter().map(|w| Alphabet::X.format_word(w)).collect();
        assert_eq!(s, ["x0x0", "x0x1", "x1x0", "x1x1"]);
        let s: Vec<String> = Alphabet::Y.words_of_weight(2).iter().map(|w| Alphabet::Y.format_word(w)).collect();
        assert_eq!(s, ["y1 y1", "y2"]);
        assert_eq!(Alphabet::X.words_of_weight(0), vec![Word::empty()]);
        assert_eq!(Alphabet::Y.words_of_weight(6).len(), 32);
    }

    #[test]
    fn s_letters() {
        assert!(Alphabet::S.is_letter(2));
        assert!(!Alphabet::S.is_letter(4));
        assert_eq!(Alphabet::S.words_of_weight(5).len(), 3);
    }

    #[test]
    fn weights_and_depth() {
        let w = xw("x0x1x1");
        assert_eq!(Alphabet::X.weight(&w), 3);
        assert_eq!(w.depth(), 2);
        assert_eq!(Alphabet::Y.weight(&Word(vec![3, 1, 2])), 6);
    }
}
