//! Arbitrary-precision scaffolding shared by every evaluator.

pub mod bernoulli;
pub mod complex;
pub mod constants;
pub mod context;
pub mod gamma;
pub mod hurwitz;
pub mod series;

pub use complex::{fmt_float, BigComplex};
pub use context::PrecisionContext;
pub use gamma::{inc_gamma_int, inc_gamma_small, inc_gamma_zero};
pub use hurwitz::hurwitz_zeta;
pub use series::{sum_series, DecayModel, SeriesResult, SeriesValue};

use rug::Float;

/// Number of agreeing decimal digits, `floor(-log10(|a-b| / max(1,|b|)))`,
/// capped at `cap` when the difference is exactly zero.
pub fn digits_agreed(a: &Float, b: &Float, cap: i64) -> i64 {
    let p = a.prec().max(b.prec());
    let d = Float::with_val(p, a - b).abs();
    if d.is_zero() {
        return cap;
    }
    let scale = Float::with_val(p, b.abs_ref()).max(&Float::with_val(p, 1));
    let r = d / scale;
    let l = r.log10().to_f64();
    (-l).floor().min(cap as f64) as i64
}
