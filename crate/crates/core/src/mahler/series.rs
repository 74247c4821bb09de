//! Large-parameter series for `m2`, `m3` and `n2`.

use crate::error::{Error, Result};
use crate::hypergeom::{pfq, HyperParams};
use crate::numerics::{sum_series, BigComplex, DecayModel, PrecisionContext};
use rug::{Float, Integer};

fn check_nonzero(t: &BigComplex) -> Result<()> {
    if t.is_zero() || !t.is_finite() {
        return Err(Error::Precondition("parameter must be finite and nonzero".into()));
    }
    Ok(())
}

/// `m2(t) = Re(log t - 4/t 4F3(3/2,3/2,1,1; 2,2,2; 16/t))` for `|t| > 16`.
pub fn m2_series(t: &BigComplex, ctx: &PrecisionContext) -> Result<Float> {
    check_nonzero(t)?;
    let w = ctx.with_extra_bits(24);
    let t = t.with_prec(w.prec());
    let z = &BigComplex::from_i64(w.prec(), 16) / &t;
    let f = pfq(&HyperParams::new(&[(3, 2), (3, 2), (1, 1), (1, 1)], &[(2, 1), (2, 1), (2, 1)], z), &w)?;
    let v = &t.ln() - &(&f.mul_i64(4) / &t);
    Ok(Float::with_val(ctx.prec(), v.re))
}

/// `m3(t) = Re(log t - 6/t 4F3(4/3,5/3,1,1; 2,2,2; 27/t))` for `|t| > 27`.
pub fn m3_series(t: &BigComplex, ctx: &PrecisionContext) -> Result<Float> {
    check_nonzero(t)?;
    let w = ctx.with_extra_bits(24);
    let t = t.with_prec(w.prec());
    let z = &BigComplex::from_i64(w.prec(), 27) / &t;
    let f = pfq(&HyperParams::new(&[(4, 3), (5, 3), (1, 1), (1, 1)], &[(2, 1), (2, 1), (2, 1)], z), &w)?;
    let v = &t.ln() - &(&f.mul_i64(6) / &t);
    Ok(Float::with_val(ctx.prec(), v.re))
}

/// `n2(s) = Re(log s - sum_{n>=1} binom(2n,n)^3 s^-n / n)` for `|s| > 64`.
///
/// The constant-term expansion of `log|A_s|` on the torus gives this sum;
/// its derivative is `(1/s) 3F2(1/2,1/2,1/2; 1,1; 64/s)`.
pub fn n2_series(s: &BigComplex, ctx: &PrecisionContext) -> Result<Float> {
    check_nonzero(s)?;
    let w = ctx.with_extra_bits(24);
    let p = w.prec();
    let s = s.with_prec(p);
    let ratio = 64.0 / s.abs().to_f64();
    if ratio >= 1.0 {
        return Err(Error::Divergent(ratio));
    }
    let inv = s.recip();
    let mut pw = BigComplex::one(p);
    let mut b = Integer::from(1);
    let tail = sum_series(
        |k| {
            // term for n = k + 1
            let n = k as u64 + 1;
            b = Integer::from(&b * (2 * (2 * n - 1))) / n;
            pw = &pw * &inv;
            let c = Float::with_val(p, Integer::from(b.clone().pow(3))) / n;
            pw.scale(&c)
        },
        DecayModel::Geometric(ratio),
        &w,
    )?;
    let v = &s.ln() - &tail.value;
    Ok(Float::with_val(ctx.prec(), v.re))
}

use rug::ops::Pow;
