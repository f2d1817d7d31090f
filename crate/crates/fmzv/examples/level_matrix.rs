//! The matrices of ∂φ on a level-graded piece, with determinant and 2-adic
//! certificate. Usage: level_matrix [N] [level]

use fmzv::arith::fmt_rational;
use fmzv::level::level_matrix;

fn main() -> fmzv::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (n, ell) = match args[..] {
        [n, ell, ..] => (n, ell),
        _ => (10, 2),
    };
    let lm = level_matrix(n, ell)?;
    let rows: Vec<String> = lm.rows.iter().map(|w| w.to_string()).collect();
    let cols: Vec<String> = lm.cols.iter().map(|w| w.to_string()).collect();
    println!("rows {}", rows.join(" "));
    println!("cols {}", cols.join(" "));
    print!("{}", lm.matrix.to_csv());
    if lm.matrix.rows() > 0 {
        println!("det = {}", fmt_rational(&lm.matrix.det_exact()?));
        println!("2-adic certificate: {}", lm.matrix.two_adic_certificate()?);
    }
    Ok(())
}
