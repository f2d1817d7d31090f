//! The Goncharov coproduct on (ℚ⟨X⟩, ⧢), the derivations D_{2r+1}, the
//! level-lowering pieces ∂_{2r+1}, and the duality with ⊛.

use num_traits::{One, Zero};

use crate::arith::Rational;
use crate::postlie::{grossman_larson_trunc, TruncatedSeries};
use crate::word::{antipode_conc, pi_indec, Alphabet, NCPoly, Tensor2, Word};

const X0: u8 = 0;
const X1: u8 = 1;

fn x() -> Alphabet {
    Alphabet::X
}

/// The factor I(a; f; b): f for (x1, x0), S(f) for (x0, x1), and (f|1)·1
/// when the bounds agree.
pub fn iformal(a: u8, f: &NCPoly, b: u8) -> NCPoly {
    match (a, b) {
        (X1, X0) => f.clone(),
        (X0, X1) => antipode_conc(f),
        _ => NCPoly::monomial(x(), Word::empty(), f.constant_term()),
    }
}

/// I(a; body; b) for a single word, as (word, sign), or `None` if it
/// vanishes.
fn iformal_word(a: u8, body: &[u8], b: u8) -> Option<(Word, bool)> {
    if body.is_empty() {
        return Some((Word::empty(), false));
    }
    match (a, b) {
        (X1, X0) => Some((Word(body.to_vec()), false)),
        (X0, X1) => Some((Word(body.iter().rev().copied().collect()), body.len() % 2 == 1)),
        _ => None,
    }
}

fn extended(w: &Word, i: usize) -> u8 {
    if i == 0 {
        X1
    } else if i == w.len() + 1 {
        X0
    } else {
        w.letters()[i - 1]
    }
}

/// Δ_Gon(w): subsets {i_1 < ⋯ < i_k} of positions, left factor the shuffle
/// of the I-factors between consecutive chosen positions (with virtual
/// bounds ε_0 = x1 and ε_{n+1} = x0), right factor the chosen subword.
/// Subsets are abandoned as soon as one factor vanishes.
pub fn gon_coproduct(w: &Word) -> Tensor2 {
    let mut out = Tensor2::zero(x(), x());
    let mut chosen = Vec::new();
    let mut factors = Vec::new();
    gon_rec(w, 0, &mut chosen, &mut factors, &mut out);
    out
}

fn gon_rec(w: &Word, prev: usize, chosen: &mut Vec<u8>, factors: &mut Vec<(Word, bool)>, out: &mut Tensor2) {
    let n = w.len();
    for next in prev + 1..=n + 1 {
        let body = &w.letters()[prev..next - 1];
        let Some(f) = iformal_word(extended(w, prev), body, extended(w, next)) else {
            continue;
        };
        factors.push(f);
        if next == n + 1 {
            let mut left = NCPoly::one(x());
            let mut negative = false;
            for (word, neg) in factors.iter() {
                negative ^= neg;
                if !word.is_empty() {
                    left = left.shuffle(&NCPoly::word(x(), word.clone()));
                }
            }
            let sign = if negative { -Rational::one() } else { Rational::one() };
            let right = Word(chosen.clone());
            for (u, c) in left.terms() {
                out.add_term(u.clone(), right.clone(), c * &sign);
            }
        } else {
            chosen.push(w.letters()[next - 1]);
            gon_rec(w, next, chosen, factors, out);
            chosen.pop();
        }
        factors.pop();
    }
}

pub fn gon_coproduct_poly(p: &NCPoly) -> Tensor2 {
    let mut out = Tensor2::zero(x(), x());
    for (w, c) in p.terms() {
        out.add_scaled(&gon_coproduct(w), c);
    }
    out
}

/// Δ' = Δ_Gon − 1⊗id.
pub fn gon_prime(w: &Word) -> Tensor2 {
    let mut t = gon_coproduct(w);
    t.add_term(Word::empty(), w.clone(), -Rational::one());
    t
}

/// ∂_{2r+1}(w) = Σ_j I(ε_j; ε_{j+1}⋯ε_{j+2r+1}; ε_{j+2r+2}) ⊗ (w without that
/// block), for 0 ≤ j ≤ N − 2r − 1. Left factors are not reduced.
pub fn partial_2r1(w: &Word, r: usize) -> Tensor2 {
    let n = w.len();
    let len = 2 * r + 1;
    let mut out = Tensor2::zero(x(), x());
    if len > n {
        return out;
    }
    for j in 0..=n - len {
        let body = &w.letters()[j..j + len];
        if let Some((u, neg)) = iformal_word(extended(w, j), body, extended(w, j + len + 1)) {
            let rest = Word([&w.letters()[..j], &w.letters()[j + len..]].concat());
            out.add_term(u, rest, if neg { -Rational::one() } else { Rational::one() });
        }
    }
    out
}

pub fn partial_2r1_poly(p: &NCPoly, r: usize) -> Tensor2 {
    let mut out = Tensor2::zero(x(), x());
    for (w, c) in p.terms() {
        out.add_scaled(&partial_2r1(w, r), c);
    }
    out
}

fn project_left(t: &Tensor2, weight: usize) -> Tensor2 {
    let mut out = Tensor2::zero(x(), x());
    for (v, left) in t.by_right() {
        let reduced = pi_indec(&left, weight);
        for (u, c) in reduced.terms() {
            out.add_term(u.clone(), v.clone(), c.clone());
        }
    }
    out
}

/// D_{2r+1} = (π_{2r+1} ⊗ id) ∘ Δ', read off from the Goncharov coproduct.
/// Left factors are combinations of Lyndon words.
pub fn derivation_d(p: &NCPoly, r: usize) -> Tensor2 {
    let mut t = Tensor2::zero(x(), x());
    for (w, c) in p.terms() {
        t.add_scaled(&gon_prime(w), c);
    }
    project_left(&t, 2 * r + 1)
}

/// (π_{2r+1} ⊗ id) ∘ ∂_{2r+1}; agrees with [`derivation_d`].
pub fn derivation_d_via_partial(p: &NCPoly, r: usize) -> Tensor2 {
    project_left(&partial_2r1_poly(p, r), 2 * r + 1)
}

/// D_{<N}(p): the components D_{2r+1}(p) for 3 ≤ 2r+1 < N.
pub fn d_less_n(p: &NCPoly, n: usize) -> Vec<(usize, Tensor2)> {
    (1..).take_while(|r| 2 * r + 1 < n).map(|r| (r, derivation_d(p, r))).collect()
}

/// Checks (G ⊛ H | w) = (G ⊗ H | Δ_Gon(w)).
pub fn duality_check(g: &TruncatedSeries, h: &TruncatedSeries, w: &Word) -> bool {
    let n = w.len();
    let lhs = grossman_larson_trunc(g.value(), h.value(), n).coeff(w);
    let mut rhs = Rational::zero();
    for ((u, v), c) in gon_coproduct(w).terms() {
        let a = g.value().coeff(u);
        if a.is_zero() {
            continue;
        }
        rhs += c * a * h.value().coeff(v);
    }
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{xp, xw};

    #[test]
    fn iformal_cases() {
        assert_eq!(iformal(X1, &xp("x0x0x1"), X0), xp("x0x0x1"));
        assert_eq!(iformal(X0, &xp("x0x1x0"), X1), xp("-x0x1x0"));
        assert!(iformal(X0, &xp("x0x1"), X0).is_zero());
        assert_eq!(iformal(X1, &xp("2 + x0"), X1), xp("2"));
    }

    #[test]
    fn printed_coproducts() {
        let cases = [
            ("x1", "x1⊗1 + 1⊗x1"),
            ("x0x1", "x0x1⊗1 + 1⊗x0x1"),
            ("x0x0x1", "x0x0x1⊗1 + 1⊗x0x0x1"),
            ("x1x0", "x1x0⊗1 + x0⊗x1 + x1⊗x0 + 1⊗x1x0"),
        ];
        for (w, expected) in cases {
            assert_eq!(gon_coproduct(&xw(w)).to_string(), expected, "{w}");
        }
    }

    #[test]
    fn x0_cubed_x1() {
        // the three cuts giving x0x0⊗x0x1 contribute +1, +1 and −2
        let d = gon_coproduct(&xw("x0x0x0x1"));
        assert_eq!(d.to_string(), "x0x0x0x1⊗1 + 1⊗x0x0x0x1");
        let gl = grossman_larson_trunc(&xp("x0x0"), &xp("x0x1"), 4);
        assert_eq!(gl.coeff(&xw("x0x0x0x1")), d.coeff(&xw("x0x0"), &xw("x0x1")));
    }

    #[test]
    fn prime_part() {
        assert_eq!(gon_prime(&xw("x0x1")).to_string(), "x0x1⊗1");
        assert!(gon_prime(&Word::empty()).is_zero());
        assert_eq!(gon_prime(&xw("x0x0x1")).to_string(), "x0x0x1⊗1");
    }

    #[test]
    fn partial_examples() {
        let w = xw("x0x0x1x0x1x0x1x0x1");
        assert_eq!(partial_2r1(&w, 1).to_string(), "x0x0x1⊗x0x1x0x1x0x1 - x0x1x0⊗x0x1x0x1x0x1");
        assert_eq!(partial_2r1(&xw("x0x0x1"), 1).to_string(), "x0x0x1⊗1");
        assert_eq!(partial_2r1(&w, 4).to_string(), "x0x0x1x0x1x0x1x0x1⊗1");
        assert!(partial_2r1(&xw("x0x1"), 1).is_zero());
    }

    #[test]
    fn d_less_small() {
        assert!(d_less_n(&xp("x0x0x1"), 3).is_empty());
        for n in 1..=3 {
            let p = xp("x0x1").pow_concat(n);
            assert!(d_less_n(&p, 2 * n).iter().all(|(_, t)| t.is_zero()));
        }
        let d = derivation_d(&xp("x0x0x0x0x1"), 2);
        assert_eq!(d.to_string(), "x0x0x0x0x1⊗1");
    }
}
