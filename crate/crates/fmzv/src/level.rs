//! Words in {2, 3}, the level filtration, and the matrices of the
//! level-lowering operator ∂φ.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{binomial, nu_2, QMatrix, Rational, Valuation};
use crate::error::{invalid, Error, Result};
use crate::goncharov::partial_2r1;
use crate::word::{NCPoly, Word};

/// A word in the letters 2 and 3, standing for x0x1 and x0x0x1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word23(Vec<u8>);

impl Word23 {
    pub fn new(entries: Vec<u8>) -> Result<Self> {
        if let Some(e) = entries.iter().find(|&&e| e != 2 && e != 3) {
            return invalid(format!("entry {e} is not 2 or 3"));
        }
        Ok(Word23(entries))
    }

    pub fn empty() -> Self {
        Word23(Vec::new())
    }

    pub fn entries(&self) -> &[u8] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn level(&self) -> usize {
        self.0.iter().filter(|&&e| e == 3).count()
    }

    /// Inverse of [`bzd`]; `None` if w is not a concatenation of x0x1 and x0x0x1.
    pub fn from_bzd(w: &Word) -> Option<Self> {
        let l = w.letters();
        let mut out = Vec::new();
        let mut i = 0;
        while i < l.len() {
            match l[i..] {
                [0, 1, ..] => {
                    out.push(2);
                    i += 2;
                }
                [0, 0, 1, ..] => {
                    out.push(3);
                    i += 3;
                }
                _ => return None,
            }
        }
        Some(Word23(out))
    }
}

impl fmt::Display for Word23 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Accepts "(3,2,2)", "3,2,2", "322" and "()".
impl FromStr for Word23 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let digits: Vec<u8> = t
            .chars()
            .filter(|c| !c.is_whitespace() && *c != ',')
            .map(|c| c.to_digit(10).map(|d| d as u8).unwrap_or(0))
            .collect();
        Word23::new(digits).map_err(|_| Error::InvalidArgument(format!("not a word in {{2,3}}: {s}")))
    }
}

pub fn bzd(u: &Word23) -> Word {
    let mut out = Vec::with_capacity(u.weight());
    for &e in &u.0 {
        if e == 3 {
            out.push(0);
        }
        out.extend([0, 1]);
    }
    Word(out)
}

/// Number of x0x0x1 blocks of a word in the image of bzd.
pub fn level(w: &Word) -> Result<usize> {
    match Word23::from_bzd(w) {
        Some(u) => Ok(u.level()),
        None => invalid(format!("{} is not a word in x0x1 and x0x0x1", crate::word::Alphabet::X.format_word(w))),
    }
}

/// Order of the bases: lexicographic on the words bzd(u), x0 < x1.
fn bzd_order(a: &Word23, b: &Word23) -> std::cmp::Ordering {
    bzd(a).cmp(&bzd(b))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelBasis {
    pub n: usize,
    pub ell: usize,
    pub elements: Vec<Word23>,
}

fn words_with(twos: usize, threes: usize) -> Vec<Word23> {
    fn rec(twos: usize, threes: usize, cur: &mut Vec<u8>, out: &mut Vec<Word23>) {
        if twos == 0 && threes == 0 {
            out.push(Word23(cur.clone()));
            return;
        }
        for (e, left) in [(2u8, twos), (3u8, threes)] {
            if left > 0 {
                cur.push(e);
                if e == 2 {
                    rec(twos - 1, threes, cur, out);
                } else {
                    rec(twos, threes - 1, cur, out);
                }
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(twos, threes, &mut Vec::new(), &mut out);
    out
}

/// All words of weight N and level ℓ. The printed bases list (3,2,2,2)
/// before (2,2,2,3), i.e. they are sorted by their bzd images.
pub fn enumerate_basis(n: usize, ell: usize) -> LevelBasis {
    let mut elements = Vec::new();
    if n >= 3 * ell && (n - 3 * ell) % 2 == 0 {
        elements = words_with((n - 3 * ell) / 2, ell);
        elements.sort_by(bzd_order);
    }
    LevelBasis { n, ell, elements }
}

/// Level-(ℓ−1) words u with N − 1 − wt(u) a positive even number, ordered
/// so that ψ is increasing.
pub fn enumerate_codomain(n: usize, ell: usize) -> Vec<Word23> {
    if ell == 0 || n < 1 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut r = 1;
    while 2 * r + 3 * (ell - 1) <= n - 1 {
        let wt = n - 1 - 2 * r;
        if (wt - 3 * (ell - 1)) % 2 == 0 {
            out.extend(words_with((wt - 3 * (ell - 1)) / 2, ell - 1));
        }
        r += 1;
    }
    out.sort_by(|a, b| bzd_order(&psi(a, n).expect("valid"), &psi(b, n).expect("valid")));
    out
}

/// ψ(v) = 2^{r−1} 3 v with 2r = N − 1 − wt(v).
pub fn psi(v: &Word23, n: usize) -> Result<Word23> {
    let wt = v.weight();
    if wt + 1 >= n || (n - 1 - wt) % 2 != 0 {
        return invalid(format!("no r ≥ 1 with 2r = {n} − 1 − {wt}"));
    }
    let r = (n - 1 - wt) / 2;
    let mut e = vec![2; r - 1];
    e.push(3);
    e.extend_from_slice(&v.0);
    Ok(Word23(e))
}

/// c_{a,b}^r = 2(−1)^r (binom(2r, 2b+2) − (1 − 2^{−2r}) binom(2r, 2a+1)).
pub fn c_coeff(a: usize, b: usize, r: usize) -> Rational {
    let two_r = 2 * r as u64;
    let bb = Rational::from_integer(binomial(two_r, 2 * b as u64 + 2));
    let four_r = BigInt::one() << (2 * r);
    let factor = Rational::new(&four_r - BigInt::one(), four_r);
    let aa = factor * Rational::from_integer(binomial(two_r, 2 * a as u64 + 1));
    let v = (bb - aa) * Rational::from_integer(BigInt::from(2));
    if r % 2 == 1 {
        -v
    } else {
        v
    }
}

/// c_{a,b} = c_{a,b}^{a+b+1}.
pub fn c_ab(a: usize, b: usize) -> Rational {
    c_coeff(a, b, a + b + 1)
}

/// Recognises (x0x1)^a x0x0x1 (x0x1)^b → (a, b) and (x0x1)^n x0 → n.
enum FactorShape {
    Level1(usize, usize),
    Odd(usize),
}

fn factor_shape(w: &Word) -> Option<FactorShape> {
    let l = w.letters();
    if l.len() % 2 == 1 && l.chunks(2).take(l.len() / 2).all(|c| c == [0, 1]) && l[l.len() - 1] == 0 {
        return Some(FactorShape::Odd(l.len() / 2));
    }
    let u = Word23::from_bzd(w)?;
    if u.level() != 1 {
        return None;
    }
    let a = u.0.iter().position(|&e| e == 3)?;
    Some(FactorShape::Level1(a, u.0.len() - 1 - a))
}

/// φ on left factors: c_{a,b} on (x0x1)^a x0x0x1 (x0x1)^b and 2(−1)^n on
/// (x0x1)^n x0.
pub fn phi_of_factor(p: &NCPoly) -> Result<Rational> {
    let mut total = Rational::zero();
    for (w, c) in p.terms() {
        let v = match factor_shape(w) {
            Some(FactorShape::Level1(a, b)) => c_ab(a, b),
            Some(FactorShape::Odd(n)) => Rational::from_integer(BigInt::from(if n % 2 == 0 { 2 } else { -2 })),
            None => return invalid(format!("φ is not defined on {}", p.alphabet().format_word(w))),
        };
        total += c * v;
    }
    Ok(total)
}

/// ∂φ(w) = Σ_{3 ≤ 2r+1 ≤ N} (φ ⊗ id) of the level-(ℓ−1) part of ∂_{2r+1}(bzd w).
pub fn partial_phi(w: &Word23, n: usize, ell: usize) -> Result<BTreeMap<Word23, Rational>> {
    if w.weight() != n || w.level() != ell || ell == 0 {
        return invalid(format!("{w} does not have weight {n} and level {ell} ≥ 1"));
    }
    let word = bzd(w);
    let mut out: BTreeMap<Word23, Rational> = BTreeMap::new();
    for r in (1..).take_while(|r| 2 * r + 1 <= n) {
        for (right, left) in partial_2r1(&word, r).by_right() {
            let Some(v) = Word23::from_bzd(&right) else {
                return invalid(format!("right factor of ∂ outside B for {w}"));
            };
            if v.level() + 1 != ell {
                continue;
            }
            let c = phi_of_factor(&left)?;
            if !c.is_zero() {
                *out.entry(v).or_insert_with(Rational::zero) += c;
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// M_N^ℓ with its row and column labels.
#[derive(Clone, Debug)]
pub struct LevelMatrix {
    pub rows: Vec<Word23>,
    pub cols: Vec<Word23>,
    pub matrix: QMatrix,
}

pub fn level_matrix(n: usize, ell: usize) -> Result<LevelMatrix> {
    if ell == 0 {
        return invalid("∂φ needs level at least 1");
    }
    let rows = enumerate_basis(n, ell).elements;
    let cols = enumerate_codomain(n, ell);
    let mut m = QMatrix::zeros(rows.len(), cols.len());
    for (i, w) in rows.iter().enumerate() {
        let image = partial_phi(w, n, ell)?;
        for (j, v) in cols.iter().enumerate() {
            if let Some(c) = image.get(v) {
                m.set(i, j, c.clone());
            }
        }
    }
    Ok(LevelMatrix { rows, cols, matrix: m })
}

pub fn build_matrix(n: usize, ell: usize) -> Result<QMatrix> {
    Ok(level_matrix(n, ell)?.matrix)
}

fn is_two_power_denominator(x: &Rational) -> bool {
    let d = x.denom();
    (d >> d.trailing_zeros().unwrap_or(0) as usize).is_one()
}

/// Checks for 0 ≤ a, b ≤ max: c_{a,b} ∈ ℤ[1/2], c_{a,b} − c_{b,a} ∈ 2ℤ and
/// ν₂(c_{a+b,0}) = ν₂(c_{0,a+b}) ≤ ν₂(c_{a,b}) ≤ 0.
pub fn verify_c_lemma(max: usize) -> bool {
    for a in 0..=max {
        for b in 0..=max {
            let c = c_ab(a, b);
            if !is_two_power_denominator(&c) {
                return false;
            }
            let diff = &c - c_ab(b, a);
            if !diff.is_integer() || diff.numer().is_odd() {
                return false;
            }
            let lo = nu_2(&c_ab(a + b, 0));
            if lo != nu_2(&c_ab(0, a + b)) || lo > nu_2(&c) || nu_2(&c) > Valuation::Finite(0) {
                return false;
            }
        }
    }
    true
}

/// Right-hand side of the recursion for c_{a,b}^r in terms of the c_{α,β}^r
/// with α + β + 1 = r.
pub fn binomial_identity_rhs(a: usize, b: usize, r: usize) -> Rational {
    let mut total = Rational::zero();
    for alpha in 0..=a {
        if alpha + 1 > r || r - 1 - alpha > b {
            continue;
        }
        let beta = r - 1 - alpha;
        total += c_coeff(alpha, beta, r);
        if alpha < a {
            total -= c_coeff(beta, alpha, r);
        }
    }
    let ind = (a >= r) as i64 - (b >= r) as i64;
    let sign = if r % 2 == 0 { 2 } else { -2 };
    total + Rational::from_integer(BigInt::from(sign * ind))
}

pub fn verify_binomial_identity(max: usize) -> bool {
    (0..=max).all(|a| (0..=max).all(|b| (1..=a + b + 1).all(|r| c_coeff(a, b, r) == binomial_identity_rhs(a, b, r))))
}

/// Entries strictly below the diagonal lie in 2ℤ.
pub fn below_diagonal_even(m: &QMatrix) -> bool {
    (0..m.rows()).all(|i| {
        (0..i.min(m.cols())).all(|j| {
            let x = m.get(i, j);
            x.is_integer() && x.numer().is_even()
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, qi};
    use crate::word::{xp, xw};

    fn w(s: &str) -> Word23 {
        s.parse().unwrap()
    }

    fn ws(list: &[&str]) -> Vec<Word23> {
        list.iter().map(|s| w(s)).collect()
    }

    #[test]
    fn bzd_and_level() {
        assert_eq!(bzd(&w("2")), xw("x0x1"));
        assert_eq!(bzd(&Word23::empty()), Word::empty());
        assert_eq!(bzd(&w("3,2")), xw("x0x0x1x0x1"));
        assert_eq!(level(&bzd(&w("2,2,2"))).unwrap(), 0);
        assert_eq!(level(&bzd(&w("3,2,2,3"))).unwrap(), 2);
        assert_eq!(level(&bzd(&w("3"))).unwrap(), 1);
        assert!(level(&xw("x1x0")).is_err());
        assert_eq!(w("(3,2,2,2)").to_string(), "(3,2,2,2)");
        assert_eq!(w("()"), Word23::empty());
        assert!("(4,2)".parse::<Word23>().is_err());
    }

    #[test]
    fn printed_bases() {
        assert_eq!(enumerate_basis(9, 1).elements, ws(&["3222", "2322", "2232", "2223"]));
        assert_eq!(enumerate_basis(10, 2).elements, ws(&["3322", "3232", "3223", "2332", "2323", "2233"]));
        assert!(enumerate_basis(8, 1).elements.is_empty());
        assert_eq!(enumerate_codomain(9, 1), ws(&["222", "22", "2", "()"]));
        assert_eq!(enumerate_codomain(10, 2), ws(&["322", "232", "223", "32", "23", "3"]));
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(&w("222"), 9).unwrap(), w("3222"));
        assert_eq!(psi(&Word23::empty(), 9).unwrap(), w("2223"));
        assert_eq!(psi(&w("22"), 9).unwrap(), w("2322"));
        assert!(psi(&w("22"), 8).is_err());
        assert!(psi(&w("2222"), 9).is_err());
    }

    #[test]
    fn c_examples() {
        assert_eq!(c_coeff(0, 0, 1), qi(1));
        assert_eq!(c_coeff(0, 1, 2), q(-11, 2));
        assert_eq!(c_coeff(0, 3, 4), q(-223, 16));
        assert_eq!(c_ab(3, 0), q(641, 16));
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi_of_factor(&xp("x0x0x1")).unwrap(), qi(1));
        assert_eq!(phi_of_factor(&xp("x0x1x0")).unwrap(), qi(-2));
        assert_eq!(phi_of_factor(&xp("x0x0x1 - x0x1x0")).unwrap(), qi(3));
        assert!(phi_of_factor(&xp("x1x0x0")).is_err());
    }

    #[test]
    fn printed_images() {
        let img = partial_phi(&w("3222"), 9, 1).unwrap();
        let expect: BTreeMap<Word23, Rational> =
            [("222", qi(3)), ("22", q(-15, 2)), ("2", q(189, 16)), ("()", q(-223, 16))].into_iter().map(|(s, c)| (w(s), c)).collect();
        assert_eq!(img, expect);
        let img = partial_phi(&w("3223"), 10, 2).unwrap();
        let expect: BTreeMap<Word23, Rational> =
            [("322", qi(-2)), ("223", qi(3)), ("32", qi(12)), ("23", q(-15, 2)), ("3", q(-291, 16))]
                .into_iter()
                .map(|(s, c)| (w(s), c))
                .collect();
        assert_eq!(img, expect);
    }

    #[test]
    fn smallest_matrix() {
        // only j = 0 is in range for ∂_3 on a word of weight 3
        assert_eq!(build_matrix(3, 1).unwrap(), QMatrix::from_i64(&[&[1]]).unwrap());
        assert!(build_matrix(9, 0).is_err());
        assert_eq!(build_matrix(8, 1).unwrap().rows(), 0);
    }

    #[test]
    fn lemmas() {
        assert!(verify_c_lemma(6));
        assert!(verify_binomial_identity(8));
        assert_eq!(binomial_identity_rhs(0, 0, 1), c_coeff(0, 0, 1));
    }
}
