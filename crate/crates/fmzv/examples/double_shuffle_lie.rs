//! Solutions of the linearised double shuffle equations in low weight.

use fmzv::double_shuffle::{dm_basis, dm_conditions};

fn main() {
    for w in 1..=7 {
        let basis = dm_basis(w);
        println!("weight {w}: dim {}", basis.len());
        for p in &basis {
            println!("  {} terms, conditions {:?}", p.num_terms(), dm_conditions(p));
        }
    }
}
