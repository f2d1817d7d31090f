//! The model U^f: dimensions and kernels of the derivations D_{<N}.

use fmzv::odd_model::{uf_derivation_d, uf_dimension_table, uf_kernel, OddModelElement};

fn main() -> fmzv::Result<()> {
    for (n, d) in uf_dimension_table(12) {
        let k = uf_kernel(n);
        let span: Vec<String> = k.iter().map(|e| e.to_string()).collect();
        println!("N = {n:>2}: dim {d:>2}, kernel {}", span.join(", "));
    }
    let e = OddModelElement::parse("s3 s5 s7")?;
    println!("D_3(s3 s5 s7) = {}", uf_derivation_d(&e, 1));
    Ok(())
}
