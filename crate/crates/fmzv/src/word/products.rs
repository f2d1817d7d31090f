use std::collections::HashMap;

use num_traits::{One, Zero};

use super::{Alphabet, Letter, NCPoly, Tensor2, Word};
use crate::arith::{qi, Rational};
use crate::error::Result;

/// A commutative, associative product of letters used by the quasi-shuffle.
pub trait Diamond {
    /// a◇b, or `None` when it vanishes.
    fn merge(&self, a: Letter, b: Letter) -> Option<Letter>;

    /// All ordered pairs (b, c) with b◇c = a.
    fn splits(&self, alphabet: Alphabet, a: Letter) -> Vec<(Letter, Letter)>;
}

/// The zero diamond; the quasi-shuffle becomes the shuffle.
#[derive(Debug, Clone, Copy, Default)]
pub struct Shuffle;

/// y_i ◇ y_j = y_{i+j}.
#[derive(Debug, Clone, Copy, Default)]
pub struct Stuffle;

impl Diamond for Shuffle {
    fn merge(&self, _: Letter, _: Letter) -> Option<Letter> {
        None
    }

    fn splits(&self, _: Alphabet, _: Letter) -> Vec<(Letter, Letter)> {
        Vec::new()
    }
}

impl Diamond for Stuffle {
    fn merge(&self, a: Letter, b: Letter) -> Option<Letter> {
        a.checked_add(b)
    }

    fn splits(&self, _: Alphabet, a: Letter) -> Vec<(Letter, Letter)> {
        (1..a).map(|j| (j, a - j)).collect()
    }
}

fn qsh_rec<D: Diamond + ?Sized>(u: &[Letter], v: &[Letter], d: &D, buf: &mut Vec<Letter>, out: &mut HashMap<Word, u64>) {
    if u.is_empty() || v.is_empty() {
        let mut w = buf.clone();
        w.extend_from_slice(u);
        w.extend_from_slice(v);
        *out.entry(Word(w)).or_insert(0) += 1;
        return;
    }
    buf.push(u[0]);
    qsh_rec(&u[1..], v, d, buf, out);
    buf.pop();
    buf.push(v[0]);
    qsh_rec(u, &v[1..], d, buf, out);
    buf.pop();
    if let Some(c) = d.merge(u[0], v[0]) {
        buf.push(c);
        qsh_rec(&u[1..], &v[1..], d, buf, out);
        buf.pop();
    }
}

/// Quasi-shuffle of two words via the left recursion
/// au ∗ bv = a(u ∗ bv) + b(au ∗ v) + (a◇b)(u ∗ v).
pub fn qsh_words<D: Diamond + ?Sized>(u: &Word, v: &Word, d: &D) -> HashMap<Word, u64> {
    let mut out = HashMap::new();
    qsh_rec(u.letters(), v.letters(), d, &mut Vec::new(), &mut out);
    out
}

fn qsh_right_rec<D: Diamond + ?Sized>(u: &[Letter], v: &[Letter], d: &D) -> HashMap<Word, Rational> {
    let mut out: HashMap<Word, Rational> = HashMap::new();
    if u.is_empty() || v.is_empty() {
        let mut w = u.to_vec();
        w.extend_from_slice(v);
        out.insert(Word(w), Rational::one());
        return out;
    }
    let (a, u0) = (u[u.len() - 1], &u[..u.len() - 1]);
    let (b, v0) = (v[v.len() - 1], &v[..v.len() - 1]);
    let mut push = |m: HashMap<Word, Rational>, last: Letter| {
        for (mut w, c) in m {
            w.0.push(last);
            *out.entry(w).or_insert_with(Rational::zero) += c;
        }
    };
    push(qsh_right_rec(u0, v, d), a);
    push(qsh_right_rec(u, v0, d), b);
    if let Some(c) = d.merge(a, b) {
        push(qsh_right_rec(u0, v0, d), c);
    }
    out
}

fn bilinear(u: &NCPoly, v: &NCPoly, mut f: impl FnMut(&Word, &Word, &Rational, &mut NCPoly)) -> NCPoly {
    let mut out = NCPoly::zero(u.alphabet());
    for (a, x) in u.terms() {
        for (b, y) in v.terms() {
            f(a, b, &(x * y), &mut out);
        }
    }
    out
}

pub fn quasi_shuffle<D: Diamond + ?Sized>(u: &NCPoly, v: &NCPoly, d: &D) -> Result<NCPoly> {
    u.same_alphabet(v)?;
    Ok(bilinear(u, v, |a, b, c, out| {
        for (w, n) in qsh_words(a, b, d) {
            out.add_term(w, c * qi(n as i64));
        }
    }))
}

/// The quasi-shuffle computed through the right recursion
/// ua ∗ vb = (u ∗ vb)a + (ua ∗ v)b + (u ∗ v)(a◇b).
pub fn quasi_shuffle_right<D: Diamond + ?Sized>(u: &NCPoly, v: &NCPoly, d: &D) -> Result<NCPoly> {
    u.same_alphabet(v)?;
    Ok(bilinear(u, v, |a, b, c, out| {
        for (w, n) in qsh_right_rec(a.letters(), b.letters(), d) {
            out.add_term(w, c * n);
        }
    }))
}

pub fn shuffle(u: &NCPoly, v: &NCPoly) -> Result<NCPoly> {
    quasi_shuffle(u, v, &Shuffle)
}

impl NCPoly {
    /// Shuffle product; panics on alphabet mismatch.
    pub fn shuffle(&self, other: &NCPoly) -> NCPoly {
        shuffle(self, other).expect("alphabet mismatch")
    }

    /// Stuffle product; panics on alphabet mismatch.
    pub fn stuffle(&self, other: &NCPoly) -> NCPoly {
        quasi_shuffle(self, other, &Stuffle).expect("alphabet mismatch")
    }

    pub fn shuffle_pow(&self, n: usize) -> NCPoly {
        (0..n).fold(NCPoly::one(self.alphabet()), |acc, _| acc.shuffle(self))
    }
}

pub fn concat(u: &NCPoly, v: &NCPoly) -> Result<NCPoly> {
    u.same_alphabet(v)?;
    Ok(u.concat(v))
}

pub fn deconcat(alphabet: Alphabet, w: &Word) -> Tensor2 {
    let mut t = Tensor2::zero(alphabet, alphabet);
    for i in (0..=w.len()).rev() {
        t.add_term(w.slice(0, i), w.slice(i, w.len()), Rational::one());
    }
    t
}

/// Δ_∗(w) = Σ (w | u ∗ v) u⊗v, computed letter by letter since Δ_∗ is a
/// morphism for concatenation: Δ_∗(a) = a⊗1 + 1⊗a + Σ_{b◇c=a} b⊗c.
pub fn dual_coproduct<D: Diamond + ?Sized>(alphabet: Alphabet, w: &Word, d: &D) -> Tensor2 {
    let mut acc: HashMap<(Word, Word), Rational> = HashMap::new();
    acc.insert((Word::empty(), Word::empty()), Rational::one());
    for &a in w.letters() {
        let mut pieces: Vec<(Vec<Letter>, Vec<Letter>)> = vec![(vec![a], vec![]), (vec![], vec![a])];
        pieces.extend(d.splits(alphabet, a).into_iter().map(|(b, c)| (vec![b], vec![c])));
        let mut next: HashMap<(Word, Word), Rational> = HashMap::new();
        for ((u, v), c) in &acc {
            for (l, r) in &pieces {
                let mut u2 = u.clone();
                u2.0.extend_from_slice(l);
                let mut v2 = v.clone();
                v2.0.extend_from_slice(r);
                *next.entry((u2, v2)).or_insert_with(Rational::zero) += c;
            }
        }
        acc = next;
    }
    let mut t = Tensor2::zero(alphabet, alphabet);
    for ((u, v), c) in acc {
        t.add_term(u, v, c);
    }
    t
}

/// Δ_∗(w) by brute force over all (u, v) with weight(u) + weight(v) =
/// weight(w), pairing w against u ∗ v. Used as an independent check.
pub fn dual_coproduct_by_pairing<D: Diamond + ?Sized>(alphabet: Alphabet, w: &Word, d: &D) -> Tensor2 {
    let n = alphabet.weight(w);
    let mut t = Tensor2::zero(alphabet, alphabet);
    for k in 0..=n {
        for u in alphabet.words_of_weight(k) {
            for v in alphabet.words_of_weight(n - k) {
                let c = qsh_words(&u, &v, d).get(w).copied().unwrap_or(0);
                t.add_term(u.clone(), v, qi(c as i64));
            }
        }
    }
    t
}

/// Linear extension of w ↦ (−1)^{len w} reverse(w).
pub fn antipode_conc(p: &NCPoly) -> NCPoly {
    p.map_terms(p.alphabet(), |w, c| {
        let c = if w.len() % 2 == 1 { -c.clone() } else { c.clone() };
        Some((w.reversed(), c))
    })
}

pub fn pairing(p: &NCPoly, w: &Word) -> Rational {
    p.coeff(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{xp, xw};

    fn yp(s: &str) -> NCPoly {
        crate::word::parse_poly(Alphabet::Y, s).unwrap()
    }

    #[test]
    fn shuffle_examples() {
        assert_eq!(xp("x0").shuffle(&xp("x1")), xp("x0x1 + x1x0"));
        assert_eq!(NCPoly::one(Alphabet::X).shuffle(&xp("x0x1")), xp("x0x1"));
        assert_eq!(xp("x0x1").shuffle(&xp("x0x1")), xp("2*x0x1x0x1 + 4*x0x0x1x1"));
    }

    #[test]
    fn stuffle_examples() {
        assert_eq!(yp("y1").stuffle(&yp("y2")), yp("y1 y2 + y2 y1 + y3"));
        assert_eq!(yp("y2").stuffle(&yp("y2")), yp("2*y2 y2 + y4"));
        let l = quasi_shuffle(&yp("y1 y2"), &yp("y3"), &Stuffle).unwrap();
        let r = quasi_shuffle_right(&yp("y1 y2"), &yp("y3"), &Stuffle).unwrap();
        assert_eq!(l, r);
    }

    #[test]
    fn mismatch_is_an_error() {
        assert!(shuffle(&xp("x0"), &yp("y1")).is_err());
    }

    #[test]
    fn coproducts() {
        assert_eq!(deconcat(Alphabet::X, &xw("x0x1")).to_string(), "x0x1⊗1 + x0⊗x1 + 1⊗x0x1");
        let s = Word(vec![3, 5, 7]);
        assert_eq!(deconcat(Alphabet::S, &s).num_terms(), 4);
        assert_eq!(dual_coproduct(Alphabet::Y, &Word(vec![2]), &Stuffle).to_string(), "y2⊗1 + y1⊗y1 + 1⊗y2");
        assert_eq!(dual_coproduct(Alphabet::X, &xw("x0"), &Shuffle).to_string(), "x0⊗1 + 1⊗x0");
        assert_eq!(
            dual_coproduct(Alphabet::X, &xw("x0x1"), &Shuffle).to_string(),
            "x0x1⊗1 + x0⊗x1 + x1⊗x0 + 1⊗x0x1"
        );
    }

    #[test]
    fn antipode() {
        assert_eq!(antipode_conc(&NCPoly::one(Alphabet::X)), NCPoly::one(Alphabet::X));
        assert_eq!(antipode_conc(&xp("x0x1")), xp("x1x0"));
        assert_eq!(antipode_conc(&xp("x0x1x0")), xp("-x0x1x0"));
    }

    #[test]
    fn pairing_extracts() {
        assert_eq!(pairing(&xp("2*x0x1 - x1x0"), &xw("x0x1")), qi(2));
        assert_eq!(pairing(&xp("x0").shuffle(&xp("x1")), &xw("x1x0")), qi(1));
    }
}
