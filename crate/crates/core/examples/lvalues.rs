//! L-values of the built-in newforms and of odd quadratic characters.

use mahler::lfunc::{builtin_forms, d_k, fricke_detect, lprime0};
use mahler::numerics::fmt_float;
use mahler::PrecisionContext;

fn main() -> mahler::Result<()> {
    let ctx = PrecisionContext::new(25);
    for f in builtin_forms() {
        let eps = fricke_detect(&f, &ctx)?;
        println!("L'({},0) = {}  (weight {}, sign {eps:+})", f.label, fmt_float(&lprime0(&f, &ctx)?, 25), f.weight);
    }
    for k in [3, 4, 7, 8, 20, 24] {
        println!("d_{k} = {}", fmt_float(&d_k(k, &ctx)?, 25));
    }
    Ok(())
}
