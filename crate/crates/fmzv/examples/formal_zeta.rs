//! Reduction modulo the extended double shuffle relations and a few
//! identities between formal multiple zeta values.

use fmzv::double_shuffle::{eds_weight_space, expected_dim, verify_formal_zagier, zf_reduce};
use fmzv::word::{xp, Alphabet};

fn main() -> fmzv::Result<()> {
    for n in 0..=7 {
        let space = eds_weight_space(n);
        let section: Vec<String> = space.canonical_section().iter().map(|w| Alphabet::X.format_word(w)).collect();
        println!("weight {n}: dim {} (expected {}), basis {}", space.quotient_dim(), expected_dim(n), section.join(" "));
    }
    println!("ζ(2,1) ↦ {}", zf_reduce(&xp("x0x1x1"), 3)?);
    println!("ζ(4) ↦ {}", zf_reduce(&xp("x0x0x0x1"), 4)?);
    println!("ζ(3,2) ↦ {}", zf_reduce(&xp("x0x0x1x0x1"), 5)?);
    println!("Zagier (1,1) holds: {}", verify_formal_zagier(1, 1)?);
    Ok(())
}
