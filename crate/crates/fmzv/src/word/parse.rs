//! Text grammar for words and polynomials.
//!
//! A polynomial is a sum of terms `c*word` joined by `+` or `-`, where the
//! coefficient `p/q` is optional. Words are `x0x1`, the compact `01` (two or
//! more binary digits), `y3 y1 y2` or `s3 s5`; `1` is the empty word and a
//! lone `0` is the zero polynomial.

use num_traits::One;

use super::{Alphabet, Letter, NCPoly, Word};
use crate::arith::{parse_rational, Rational};
use crate::error::{Error, Result};

struct Scanner<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(s: &'a str) -> Self {
        Scanner { s: s.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn err<T>(&self, expected: &str) -> Result<T> {
        Err(Error::Parse { pos: self.pos, expected: expected.to_string() })
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos]).expect("ascii")
    }

    fn letter_code(&mut self, alphabet: Alphabet) -> Result<Letter> {
        let at = self.pos;
        let d = self.digits();
        let code: Option<Letter> = d.parse().ok();
        match code {
            Some(l) if alphabet.is_letter(l) => Ok(l),
            _ => {
                self.pos = at;
                self.err(&format!("letter index of alphabet {alphabet}"))
            }
        }
    }

    /// Parses letters until a term separator or the end.
    fn word(&mut self, alphabet: Alphabet) -> Result<Word> {
        let mut letters = Vec::new();
        loop {
            self.skip_ws();
            match (self.peek(), alphabet) {
                (Some(b'x'), Alphabet::X) | (Some(b'y'), Alphabet::Y) | (Some(b's'), Alphabet::S) => {
                    self.pos += 1;
                    letters.push(self.letter_code(alphabet)?);
                }
                (Some(b'0' | b'1'), Alphabet::X) => {
                    let at = self.pos;
                    let d = self.digits();
                    if d.len() < 2 || !d.bytes().all(|c| c == b'0' || c == b'1') {
                        self.pos = at;
                        return self.err("compact binary word of length at least 2");
                    }
                    letters.extend(d.bytes().map(|c| c - b'0'));
                }
                (None | Some(b'+' | b'-'), _) if !letters.is_empty() => return Ok(Word(letters)),
                _ => {
                    let prefix = match alphabet {
                        Alphabet::X => "x0, x1 or binary digits",
                        Alphabet::Y => "a letter yK",
                        Alphabet::S => "a letter sK",
                    };
                    return self.err(prefix);
                }
            }
        }
    }

    /// A numeral token: returns its text and whether a `*` follows.
    fn numeral(&mut self) -> (String, bool) {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit() || c == b'/') {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii").to_string();
        self.skip_ws();
        let star = self.peek() == Some(b'*');
        if star {
            self.pos += 1;
        }
        (text, star)
    }
}

/// Parses a single word; "1" or the empty string is the empty word.
pub fn parse_word(alphabet: Alphabet, s: &str) -> Result<Word> {
    let t = s.trim();
    if t.is_empty() || t == "1" {
        return Ok(Word::empty());
    }
    let mut sc = Scanner::new(s);
    let w = sc.word(alphabet)?;
    sc.skip_ws();
    if sc.peek().is_some() {
        return sc.err("end of word");
    }
    Ok(w)
}

pub fn parse_poly(alphabet: Alphabet, s: &str) -> Result<NCPoly> {
    let mut sc = Scanner::new(s);
    let mut p = NCPoly::zero(alphabet);
    let mut first = true;
    loop {
        sc.skip_ws();
        let mut sign = Rational::one();
        match sc.peek() {
            Some(b'+') if !first => sc.pos += 1,
            Some(b'-') => {
                sc.pos += 1;
                sign = -sign;
            }
            None if first => return sc.err("a term"),
            _ if !first => return sc.err("'+' or '-'"),
            _ => {}
        }
        first = false;
        sc.skip_ws();
        let at = sc.pos;
        let (coeff, word) = if sc.peek().is_some_and(|c| c.is_ascii_digit()) {
            let (text, star) = sc.numeral();
            if star {
                let c = parse_rational(&text).map_err(|_| Error::Parse { pos: at, expected: "coefficient p/q".into() })?;
                sc.skip_ws();
                if sc.peek() == Some(b'1') && !sc.s.get(sc.pos + 1).is_some_and(|c| c.is_ascii_digit()) {
                    sc.pos += 1;
                    (c, Word::empty())
                } else {
                    (c, sc.word(alphabet)?)
                }
            } else if alphabet == Alphabet::X && text.len() >= 2 && text.bytes().all(|c| c == b'0' || c == b'1') {
                (Rational::one(), Word(text.bytes().map(|c| c - b'0').collect()))
            } else {
                let c = parse_rational(&text).map_err(|_| Error::Parse { pos: at, expected: "coefficient p/q".into() })?;
                (c, Word::empty())
            }
        } else {
            (Rational::one(), sc.word(alphabet)?)
        };
        p.add_term(word, sign * coeff);
        sc.skip_ws();
        if sc.peek().is_none() {
            return Ok(p);
        }
    }
}
