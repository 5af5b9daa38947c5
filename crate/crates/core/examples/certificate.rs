//! Nonvanishing certificates and the zero-divisor cup-length.

use tcarrange::tensor_square::DEFAULT_BUDGET;
use tcarrange::{Arrangement, OsAlgebra, Parity, TensorSquare};

fn main() -> tcarrange::Result<()> {
    for name in ["braid:3", "braid:4", "braid:5", "generic:3:6:2"] {
        let arr = Arrangement::named(name)?;
        let sq = TensorSquare::new(OsAlgebra::new(&arr, Parity::Odd)?);
        let Some(cert) = sq.find_certificate(DEFAULT_BUDGET) else {
            println!("{name}: no certificate within budget");
            continue;
        };
        assert!(sq.verify_certificate(&cert)?);
        let cup = sq.zd_cup_length(DEFAULT_BUDGET)?;
        println!("{name}: rank {}, zcl {}, certificate {}", arr.rank(), cup.length, cert.to_json(sq.algebra()));
    }
    Ok(())
}
