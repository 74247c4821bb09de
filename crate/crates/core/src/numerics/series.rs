use super::{BigComplex, PrecisionContext};
use crate::error::{Error, Result};
use rug::Float;

/// Maximum number of terms any guarded summation will take.
pub const TERM_CAP: usize = 10_000_000;
/// Consecutive out-of-model ratios tolerated before reporting a violation.
pub const VIOLATION_RUN: usize = 50;

/// How the caller promises the terms decay.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DecayModel {
    /// `|t_{n+1}| <= r |t_n|` for every `n`.
    Geometric(f64),
    /// `|t_{n+1}| <= r |t_n|` once `n >= from`.
    EventuallyGeometric { ratio: f64, from: usize },
    /// Alternating signs with non-increasing magnitudes.
    AlternatingMonotone,
}

#[derive(Debug, Clone)]
pub struct SeriesResult<T> {
    pub value: T,
    /// Upper bound on the truncation error under the declared model.
    pub tail_bound: Float,
    pub terms_used: usize,
}

/// Values a guarded series can sum.
pub trait SeriesValue: Clone {
    fn zero_like(prec: u32) -> Self;
    fn add_to(&mut self, other: &Self);
    fn magnitude(&self) -> Float;
}

impl SeriesValue for Float {
    fn zero_like(prec: u32) -> Self {
        Float::new(prec)
    }
    fn add_to(&mut self, other: &Self) {
        *self += other;
    }
    fn magnitude(&self) -> Float {
        Float::with_val(64, self.abs_ref())
    }
}

impl SeriesValue for BigComplex {
    fn zero_like(prec: u32) -> Self {
        BigComplex::zero(prec)
    }
    fn add_to(&mut self, other: &Self) {
        *self += other;
    }
    fn magnitude(&self) -> Float {
        Float::with_val(64, self.abs())
    }
}

/// Sums `term(0) + term(1) + ...` until the model's tail bound drops below
/// `2^{4-bits} |S|` or `10^{-(target+guard)}`.
///
/// `term` is called with strictly increasing indices starting at 0, so it
/// may carry a recurrence in its captured state.
pub fn sum_series<T, F>(mut term: F, model: DecayModel, ctx: &PrecisionContext) -> Result<SeriesResult<T>>
where
    T: SeriesValue,
    F: FnMut(usize) -> T,
{
    let prec = ctx.prec();
    let mut sum = T::zero_like(prec);
    let rel = Float::with_val(64, Float::i_exp(1, 4 - prec as i32));
    let abs_eps = Float::with_val(64, ctx.abs_eps());
    let (ratio, from) = match model {
        DecayModel::Geometric(r) => (r, 0),
        DecayModel::EventuallyGeometric { ratio, from } => (ratio, from),
        DecayModel::AlternatingMonotone => (1.0, 0),
    };
    if matches!(model, DecayModel::Geometric(_) | DecayModel::EventuallyGeometric { .. }) && !(ratio < 1.0 && ratio >= 0.0) {
        return Err(Error::Precondition(format!("geometric ratio {ratio} not in [0,1)")));
    }
    let r_tol = ratio * (1.0 + 1e-12);
    let factor = if ratio < 1.0 { ratio / (1.0 - ratio) } else { 1.0 };
    let mut prev: Option<Float> = None;
    let mut run = 0usize;
    let mut last_nonzero = Float::with_val(64, 0);
    let mut since_nonzero = 0i32;
    for n in 0..TERM_CAP {
        let t = term(n);
        let mag = t.magnitude();
        sum.add_to(&t);
        if let Some(p) = &prev {
            if !p.is_zero() && !mag.is_zero() {
                let q = Float::with_val(64, &mag / p).to_f64();
                let bad = match model {
                    DecayModel::AlternatingMonotone => q > 1.0 + 1e-12,
                    _ => n > from && q > r_tol,
                };
                run = if bad { run + 1 } else { 0 };
                if run >= VIOLATION_RUN {
                    return Err(Error::DecayViolation(n));
                }
            }
        }
        if mag.is_zero() {
            since_nonzero += 1;
        } else {
            last_nonzero = mag.clone();
            since_nonzero = 0;
        }
        prev = Some(mag);
        if n < from.max(1) {
            continue;
        }
        let tail = match model {
            DecayModel::AlternatingMonotone => last_nonzero.clone(),
            _ => {
                let decay = Float::with_val(64, ratio).pow(since_nonzero);
                Float::with_val(64, &last_nonzero * factor) * decay
            }
        };
        let smag = sum.magnitude();
        if tail <= Float::with_val(64, &smag * &rel) || tail <= abs_eps {
            return Ok(SeriesResult { value: sum, tail_bound: tail, terms_used: n + 1 });
        }
    }
    Err(Error::NonConvergence(TERM_CAP))
}

use rug::ops::Pow;

#[cfg(test)]
mod tests {
    use super::*;
    use rug::Integer;

    #[test]
    fn geometric_half_sums_to_one() {
        let ctx = PrecisionContext::new(30);
        let p = ctx.prec();
        let mut t = Float::with_val(p, 0.5);
        let r = sum_series(
            |n| {
                if n > 0 {
                    t /= 2u32;
                }
                t.clone()
            },
            DecayModel::Geometric(0.5),
            &ctx,
        )
        .unwrap();
        let err = Float::with_val(p, &r.value - 1u32).abs();
        assert!(err <= r.tail_bound);
        assert!(err.to_f64() < 1e-39);
    }

    #[test]
    fn central_binomial_cubes_match_hypergeometric_terms() {
        // (1/2)_n / n! = binom(2n,n)/4^n, so the two summations coincide term by term.
        for n in 0..=50u32 {
            let b = Integer::from(Integer::binomial_u(2 * n, n));
            let mut poch = rug::Rational::from(1);
            for k in 0..n {
                poch *= rug::Rational::from((2 * k as i64 + 1, 2 * (k as i64 + 1)));
            }
            assert_eq!(poch, rug::Rational::from((b, Integer::from(4u32).pow(n))));
        }
        let ctx = PrecisionContext::new(30);
        let p = ctx.prec();
        let direct = sum_series(
            |n| {
                let b = Integer::from(Integer::binomial_u(2 * n as u32, n as u32));
                Float::with_val(p, b.pow(3u32)) / Float::with_val(p, Float::u_pow_u(256, n as u32))
            },
            DecayModel::EventuallyGeometric { ratio: 0.25, from: 0 },
            &ctx,
        )
        .unwrap();
        let mut t = Float::with_val(p, 1);
        let hyper = sum_series(
            |n| {
                if n > 0 {
                    let k = (n - 1) as u32;
                    let a = Float::with_val(p, 2 * k + 1) / (2 * (k + 1));
                    t *= Float::with_val(p, a.pow(3u32));
                    t /= 4u32;
                }
                t.clone()
            },
            DecayModel::EventuallyGeometric { ratio: 0.25, from: 0 },
            &ctx,
        )
        .unwrap();
        let d = Float::with_val(p, &direct.value - &hyper.value).abs().to_f64();
        assert!(d < 1e-38, "{d}");
    }

    #[test]
    fn violation_is_reported() {
        let ctx = PrecisionContext::new(20);
        let p = ctx.prec();
        let r = sum_series(|n| Float::with_val(p, 0.9f64.powi(n as i32)), DecayModel::Geometric(0.5), &ctx);
        assert!(matches!(r, Err(Error::DecayViolation(_))));
    }

    #[test]
    fn alternating_model_bounds_error() {
        let ctx = PrecisionContext::new(12);
        let p = ctx.prec();
        // sum (-1)^n / 2^n (n+1) = 2 ln(3/2)
        let r = sum_series(
            |n| {
                let v = Float::with_val(p, 1) / Float::with_val(p, Float::u_pow_u(2, n as u32)) / (n as u32 + 1);
                if n % 2 == 0 { v } else { -v }
            },
            DecayModel::AlternatingMonotone,
            &ctx,
        )
        .unwrap();
        let exact = Float::with_val(p, 1.5).ln() * 2u32;
        assert!(Float::with_val(p, &r.value - &exact).abs() <= r.tail_bound);
    }

    #[test]
    fn deterministic() {
        let ctx = PrecisionContext::new(25);
        let run = || {
            let p = ctx.prec();
            sum_series(|n| Float::with_val(p, 1) / Float::with_val(p, (n + 1) as u64 * (n + 2) as u64) / Float::with_val(p, Float::u_pow_u(3, n as u32)), DecayModel::Geometric(1.0 / 3.0), &ctx).unwrap()
        };
        let (a, b) = (run(), run());
        assert_eq!(a.value, b.value);
        assert_eq!(a.terms_used, b.terms_used);
    }
}
