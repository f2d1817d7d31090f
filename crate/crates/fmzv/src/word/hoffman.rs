use num_bigint::BigInt;

use super::{Diamond, Letter, NCPoly, Word};
use crate::arith::{factorial, Rational};

/// All compositions of n in lexicographic order.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// I[w]: merge consecutive blocks of w of sizes i_1, …, i_r with the diamond.
fn apply_composition<D: Diamond + ?Sized>(parts: &[usize], w: &Word, d: &D) -> Option<Word> {
    let mut out: Vec<Letter> = Vec::with_capacity(parts.len());
    let mut pos = 0;
    for &k in parts {
        let block = &w.letters()[pos..pos + k];
        let mut acc = block[0];
        for &b in &block[1..] {
            acc = d.merge(acc, b)?;
        }
        out.push(acc);
        pos += k;
    }
    Some(Word(out))
}

fn transform<D: Diamond + ?Sized>(p: &NCPoly, d: &D, coeff: impl Fn(&[usize]) -> Rational) -> NCPoly {
    let mut out = NCPoly::zero(p.alphabet());
    for (w, c) in p.terms() {
        for parts in compositions(w.len()) {
            if let Some(v) = apply_composition(&parts, w, d) {
                out.add_term(v, c * coeff(&parts));
            }
        }
    }
    out
}

/// exp(w) = Σ_I I[w] / (i_1! ⋯ i_r!).
pub fn hoffman_exp<D: Diamond + ?Sized>(p: &NCPoly, d: &D) -> NCPoly {
    transform(p, d, |parts| {
        let den: BigInt = parts.iter().map(|&i| factorial(i as u64)).product();
        Rational::new(1.into(), den)
    })
}

/// log(w) = Σ_I (−1)^{n−r} I[w] / (i_1 ⋯ i_r).
pub fn hoffman_log<D: Diamond + ?Sized>(p: &NCPoly, d: &D) -> NCPoly {
    transform(p, d, |parts| {
        let n: usize = parts.iter().sum();
        let den: BigInt = parts.iter().map(|&i| BigInt::from(i)).product();
        let sign: i64 = if (n - parts.len()) % 2 == 0 { 1 } else { -1 };
        Rational::new(sign.into(), den)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{parse_poly, xp, Alphabet, Shuffle, Stuffle};

    #[test]
    fn exp_examples() {
        let p = parse_poly(Alphabet::Y, "y1 y1").unwrap();
        assert_eq!(hoffman_exp(&p, &Stuffle), parse_poly(Alphabet::Y, "y1 y1 + 1/2*y2").unwrap());
        assert_eq!(hoffman_exp(&xp("x0x1x1"), &Shuffle), xp("x0x1x1"));
    }

    #[test]
    fn log_inverts_exp() {
        for n in 0..=6 {
            for w in Alphabet::Y.words_of_weight(n) {
                let p = NCPoly::word(Alphabet::Y, w);
                assert_eq!(hoffman_log(&hoffman_exp(&p, &Stuffle), &Stuffle), p);
            }
        }
    }

    #[test]
    fn composition_count() {
        assert_eq!(compositions(4).len(), 8);
        assert_eq!(compositions(3), vec![vec![1, 1, 1], vec![1, 2], vec![2, 1], vec![3]]);
    }
}
