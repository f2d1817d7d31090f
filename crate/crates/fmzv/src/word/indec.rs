use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Zero;

use super::{is_lyndon, Alphabet, NCPoly, Word};
use crate::arith::{qi, Rational, Subspace};

/// The span of shuffle products u⧢v (u, v nonempty) in one weight, with
/// columns ordered so that non-Lyndon words come first. The free columns of
/// its echelon form are then exactly the Lyndon words.
struct ProductSpace {
    columns: Vec<Word>,
    index: HashMap<Word, usize>,
    space: Subspace,
}

impl ProductSpace {
    fn build(alphabet: Alphabet, n: usize) -> Self {
        let words = alphabet.words_of_weight(n);
        let (lyn, non): (Vec<Word>, Vec<Word>) = words.into_iter().partition(|w| is_lyndon(w).unwrap_or(false));
        let columns: Vec<Word> = non.into_iter().chain(lyn).collect();
        let index: HashMap<Word, usize> = columns.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let mut rows = Vec::new();
        for k in 1..n {
            if 2 * k > n {
                break;
            }
            let left = alphabet.words_of_weight(k);
            let right = alphabet.words_of_weight(n - k);
            for u in &left {
                for v in &right {
                    if k == n - k && v < u {
                        continue;
                    }
                    let mut row = vec![Rational::zero(); columns.len()];
                    for (w, c) in super::products::qsh_words(u, v, &super::Shuffle) {
                        row[index[&w]] += qi(c as i64);
                    }
                    rows.push(row);
                }
            }
        }
        let space = Subspace::from_rows(columns.len(), &rows);
        ProductSpace { columns, index, space }
    }
}

static CACHE: OnceLock<Mutex<HashMap<(Alphabet, usize), Arc<ProductSpace>>>> = OnceLock::new();

fn product_space(alphabet: Alphabet, n: usize) -> Arc<ProductSpace> {
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(s) = cache.lock().unwrap().get(&(alphabet, n)) {
        return Arc::clone(s);
    }
    let built = Arc::new(ProductSpace::build(alphabet, n));
    Arc::clone(cache.lock().unwrap().entry((alphabet, n)).or_insert(built))
}

/// Projection of the weight-`n` part of `p` to the indecomposables: the
/// unique combination of Lyndon words congruent to it modulo shuffle
/// products.
pub fn pi_indec(p: &NCPoly, n: usize) -> NCPoly {
    let part = p.component(n);
    if part.is_zero() || n == 0 {
        return NCPoly::zero(p.alphabet());
    }
    let ps = product_space(p.alphabet(), n);
    let mut v = vec![Rational::zero(); ps.columns.len()];
    for (w, c) in part.terms() {
        v[ps.index[w]] = c.clone();
    }
    let reduced = ps.space.reduce(&v);
    NCPoly::from_terms(p.alphabet(), ps.columns.iter().cloned().zip(reduced))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{lyndon_words, xp};

    #[test]
    fn products_vanish() {
        assert!(pi_indec(&xp("x0").shuffle(&xp("x1")), 2).is_zero());
        assert!(pi_indec(&xp("x0x1 + x1x0"), 2).is_zero());
        let s3 = NCPoly::word(Alphabet::S, Word(vec![3]));
        assert_eq!(pi_indec(&s3, 3), s3);
    }

    #[test]
    fn free_columns_are_lyndon() {
        for n in 1..=6 {
            let ps = product_space(Alphabet::X, n);
            let free: Vec<Word> = ps.space.free_columns().into_iter().map(|c| ps.columns[c].clone()).collect();
            assert_eq!(free, lyndon_words(Alphabet::X, n));
        }
    }

    #[test]
    fn non_lyndon_word_reduces() {
        // x1x0 = x0⧢x1 − x0x1
        assert_eq!(pi_indec(&xp("x1x0"), 2), xp("-x0x1"));
    }
}
