//! The Goncharov coproduct and the derivations D_{2r+1}.

use fmzv::goncharov::{derivation_d, gon_coproduct, partial_2r1};
use fmzv::word::{xp, xw};

fn main() {
    for w in ["x1", "x0x1", "x1x0", "x0x0x0x1", "x0x1x1"] {
        println!("Δ({w}) = {}", gon_coproduct(&xw(w)));
    }
    let w = xw("x0x0x1x0x1x0x1x0x1");
    println!("∂_3(bzd(3,2,2,2)) = {}", partial_2r1(&w, 1));
    println!("D_3(x0x0x1x0x1) = {}", derivation_d(&xp("x0x0x1x0x1"), 1));
}
