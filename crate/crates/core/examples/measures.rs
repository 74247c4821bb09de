//! Evaluate each normalised measure on every route that applies.
//!
//!     cargo run --example measures -- [digits]

use mahler::mahler::{evaluate, Measure, QuadratureConfig, Route};
use mahler::numerics::fmt_float;
use mahler::{ExactValue, PrecisionContext};

fn main() -> mahler::Result<()> {
    let digits = std::env::args().nth(1).and_then(|d| d.parse().ok()).unwrap_or(20);
    let ctx = PrecisionContext::new(digits);
    let cases = [
        (Measure::M2, "8 + 6*sqrt(2)"),
        (Measure::M2, "8 - 6*sqrt(2)"),
        (Measure::M3, "216"),
        (Measure::N2, "256"),
        (Measure::N3, "1458"),
        (Measure::N4, "-144"),
    ];
    for (m, p) in cases {
        let x = ExactValue::parse(p)?.render(&ctx);
        for route in [Route::Series, Route::Quadrature] {
            match evaluate(m, &x, None, &[route], &ctx, &QuadratureConfig::default()) {
                Ok(v) => println!("{m}({p}) = {}  [{route}, ~{} digits]", fmt_float(&v.value, digits as usize), v.expected_digits),
                Err(e) => println!("{m}({p}): {route} not available ({e})"),
            }
        }
    }
    Ok(())
}
