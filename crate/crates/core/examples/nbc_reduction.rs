//! Straightening monomials of the braid arrangement into the nbc basis.

use tcarrange::{Arrangement, OsAlgebra, Parity};

fn main() -> tcarrange::Result<()> {
    let arr = Arrangement::braid(4)?;
    for parity in [Parity::Odd, Parity::Even] {
        let alg = OsAlgebra::new(&arr, parity)?;
        println!("{parity} parity, dimensions {:?}", alg.dimensions());
        for text in ["H13,H23", "H23,H13", "H13,H14,H23", "H12,H13,H23"] {
            let t = alg.parse_monomial(text)?;
            println!("  {text:<12} = {}", alg.format_element(&alg.straighten(&t)?));
        }
    }

    let alg = OsAlgebra::new(&arr, Parity::Odd)?;
    let basis: Vec<String> = alg.basis(2).into_iter().map(|m| alg.format_monomial(m)).collect();
    println!("degree 2 basis: {}", basis.join(" "));
    Ok(())
}
