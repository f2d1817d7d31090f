//! The post-Lie product, the Ihara bracket and the Grossman–Larson product.

use fmzv::postlie::{gl_closed_form, grossman_larson, ihara_bracket, postlie_tr, xi3, xi5};
use fmzv::word::{xp, xw};

fn main() {
    println!("x0x0 ▷ x1 = {}", postlie_tr(&xp("x0x0"), &xp("x1")));
    println!("x0x0 ⊛ x0x1 = {}", grossman_larson(&xp("x0x0"), &xp("x0x1")));
    println!("closed form:  {}", gl_closed_form(&xp("x0x0"), &xw("x0x1")));
    let b = ihara_bracket(&xi3(), &xi5());
    println!("{{ξ(3), ξ(5)}} has {} terms of weight {:?}", b.num_terms(), b.homogeneous_weight());
}
