//! Products of the zero-divisors 1⊗e − e⊗1, computed by repeated tensor
//! multiplication and by the shuffle expansion.

use tcarrange::{Arrangement, OsAlgebra, Parity, TensorSquare};

fn main() -> tcarrange::Result<()> {
    let arr = Arrangement::braid(3)?;
    let sq = TensorSquare::new(OsAlgebra::new(&arr, Parity::Odd)?);
    for subset in ["H12", "H12,H13", "H12,H13,H23", "H13,H12,H23"] {
        let s = arr.parse_labels(subset)?;
        let direct = sq.bar_product_direct(&s)?;
        assert_eq!(direct, sq.bar_product_shuffle(&s)?);
        println!("π[{subset}] = {}", sq.format(&direct));
    }
    let four = arr.parse_labels("H12,H13,H23,H12")?;
    println!("four factors: {}", sq.format(&sq.bar_product_direct(&four)?));

    let even = TensorSquare::new(OsAlgebra::new(&arr, Parity::Even)?);
    let squares = arr.parse_labels("H12,H12,H13,H13")?;
    println!("even squares: {}", even.format(&even.bar_product_direct(&squares)?));
    Ok(())
}
