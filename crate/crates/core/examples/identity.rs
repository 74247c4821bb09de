//! Check one registry identity, e.g.
//!
//!     cargo run --example identity -- thm2.2a

use mahler::verify::{evaluate_record, find, VerifyOptions};
use mahler::PrecisionContext;

fn main() -> mahler::Result<()> {
    let id = std::env::args().nth(1).unwrap_or_else(|| "thm2.2a".into());
    let rec = find(&id)?;
    println!("{}: {} = {}  ({})", rec.id, rec.lhs, rec.rhs, rec.status);
    let r = evaluate_record(rec, &VerifyOptions::new(PrecisionContext::new(30)));
    println!("lhs {}\nrhs {}", r.lhs_value, r.rhs_value);
    println!("{}", r.text_line());
    Ok(())
}
