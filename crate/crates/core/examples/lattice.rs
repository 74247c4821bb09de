//! Lattice-sum identities, evaluated by brute shell summation.

use mahler::lattice::{lattice_identity_residual, LATTICE_IDENTITIES};
use mahler::PrecisionContext;

fn main() -> mahler::Result<()> {
    let ctx = PrecisionContext::new(20);
    for id in LATTICE_IDENTITIES {
        let r = lattice_identity_residual(id, &ctx)?;
        println!("{id:<8} lhs {:>16.12} rhs {:>16.12} residual {:.1e} (sum error {:.1e})", r.lhs, r.rhs, r.residual, r.brute_error);
    }
    Ok(())
}
