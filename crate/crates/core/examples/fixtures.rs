//! Exact j-invariant fixtures: each listed parameter reproduces its j.

use mahler::verify::fixtures::{check_je, check_jg};

fn main() -> mahler::Result<()> {
    for (name, rows) in [("j(E_s)", check_je()?), ("j(G_s)", check_jg()?)] {
        let good = rows.iter().filter(|r| r.ok()).count();
        println!("{name}: {good}/{} exact", rows.len());
        for r in rows.iter().filter(|r| !r.ok()) {
            println!("  s = {} does not give j = {}", r.s, r.j);
        }
    }
    Ok(())
}
