//! Shuffle and stuffle products, their dual coproducts and Lyndon words.

use fmzv::word::{dual_coproduct, lyndon_words, parse_poly, parse_word, Alphabet, Stuffle};

fn main() -> fmzv::Result<()> {
    let a = parse_poly(Alphabet::X, "x0x1")?;
    let b = parse_poly(Alphabet::X, "x1")?;
    println!("x0x1 ⧢ x1 = {}", a.shuffle(&b));

    let u = parse_poly(Alphabet::Y, "y2")?;
    let v = parse_poly(Alphabet::Y, "y1 y1")?;
    println!("y2 ∗ y1 y1 = {}", u.stuffle(&v));

    let w = parse_word(Alphabet::Y, "y3 y1")?;
    println!("Δ_∗(y3 y1) = {}", dual_coproduct(Alphabet::Y, &w, &Stuffle));

    for n in 1..=5 {
        let words: Vec<String> = lyndon_words(Alphabet::X, n).iter().map(|w| Alphabet::X.format_word(w)).collect();
        println!("Lyndon words of weight {n}: {}", words.join(" "));
    }
    Ok(())
}
