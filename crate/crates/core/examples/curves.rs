//! Write weight 2 coefficient files from elliptic curves and use them to
//! check the identities that depend on them.
//!
//!     cargo run --release --example curves

use mahler::lfunc::{self, curves};
use mahler::verify::{evaluate_record, registry, VerifyOptions};

fn main() -> mahler::Result<()> {
    let dir = std::env::temp_dir().join("mahler-curves");
    std::fs::create_dir_all(&dir).map_err(|e| mahler::Error::MissingData(e.to_string()))?;
    for c in curves::CURVES {
        let a = curves::curve_coeffs(c, 12);
        println!("{} {:?}: {:?}", c.label, c.ainvs, &a[1..]);
    }
    curves::write_curve_files(&dir, 5000)?;
    lfunc::set_coeff_dir(Some(dir.clone()));
    println!("files in {}", dir.display());
    let opts = VerifyOptions::default();
    for r in registry().iter().filter(|r| r.is_gated()) {
        let rep = evaluate_record(r, &opts);
        if !rep.skipped() {
            println!("{}", rep.text_line());
        }
    }
    Ok(())
}
