//! Functional equations between measures at seeded random points.

use mahler::verify::functional::{run_all, DEFAULT_SEED};
use mahler::PrecisionContext;

fn main() -> mahler::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_SEED);
    for c in run_all(seed, &PrecisionContext::new(30))? {
        let mark = if c.passed { "ok  " } else { "FAIL" };
        println!("{mark} {:<24} {:<28} {:>3} digits", c.name, c.point, c.digits_agreed);
    }
    Ok(())
}
