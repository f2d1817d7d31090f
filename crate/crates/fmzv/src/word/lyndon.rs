use super::{Alphabet, NCPoly, Word};
use crate::error::{invalid, Result};

/// True iff w is strictly smaller than each of its proper suffixes, with
/// letters ordered by code (x0 < x1).
pub fn is_lyndon(w: &Word) -> Result<bool> {
    if w.is_empty() {
        return invalid("the empty word is not a Lyndon candidate");
    }
    let l = w.letters();
    Ok((1..l.len()).all(|i| l < &l[i..]))
}

pub fn lyndon_words(alphabet: Alphabet, n: usize) -> Vec<Word> {
    if n == 0 {
        return Vec::new();
    }
    alphabet.words_of_weight(n).into_iter().filter(|w| is_lyndon(w).unwrap_or(false)).collect()
}

/// Splits a Lyndon word of length ≥ 2 as uv with v its longest proper Lyndon
/// suffix.
pub fn standard_factorization(w: &Word) -> Option<(Word, Word)> {
    (1..w.len())
        .find(|&i| is_lyndon(&w.slice(i, w.len())).unwrap_or(false))
        .map(|i| (w.slice(0, i), w.slice(i, w.len())))
}

/// The standard bracketing P(w): P(a) = a and P(uv) = [P(u), P(v)].
pub fn lyndon_bracket(alphabet: Alphabet, w: &Word) -> NCPoly {
    match standard_factorization(w) {
        None => NCPoly::word(alphabet, w.clone()),
        Some((u, v)) => lyndon_bracket(alphabet, &u).commutator(&lyndon_bracket(alphabet, &v)),
    }
}

/// (1/n) Σ_{d | n} μ(d) k^{n/d}: the number of Lyndon words of length n over
/// k letters.
pub fn witt_number(k: i64, n: u32) -> i64 {
    fn mobius(mut n: u32) -> i64 {
        let mut m = 1;
        let mut p = 2;
        while p * p <= n {
            if n % p == 0 {
                n /= p;
                if n % p == 0 {
                    return 0;
                }
                m = -m;
            }
            p += 1;
        }
        if n > 1 {
            m = -m;
        }
        m
    }
    let s: i64 = (1..=n).filter(|d| n % d == 0).map(|d| mobius(d) * k.pow(n / d)).sum();
    s / n as i64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{xp, xw};

    #[test]
    fn lyndon_examples() {
        assert!(is_lyndon(&xw("x0")).unwrap());
        assert!(is_lyndon(&xw("x0x1")).unwrap());
        assert!(!is_lyndon(&xw("x1x0")).unwrap());
        assert!(!is_lyndon(&xw("x0x1x0x1")).unwrap());
        assert!(is_lyndon(&Word::empty()).is_err());
    }

    #[test]
    fn witt_counts() {
        let w: Vec<i64> = (1..=8).map(|n| witt_number(2, n)).collect();
        assert_eq!(w, [2, 1, 2, 3, 6, 9, 18, 30]);
    }

    #[test]
    fn brackets() {
        assert_eq!(lyndon_bracket(Alphabet::X, &xw("x0x0x1")), xp("x0x0x1 - 2*x0x1x0 + x1x0x0"));
        assert_eq!(standard_factorization(&xw("x0x0x1x1")), Some((xw("x0"), xw("x0x1x1"))));
    }
}
