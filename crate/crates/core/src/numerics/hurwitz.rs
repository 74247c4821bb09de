use super::bernoulli::bernoulli;
use super::PrecisionContext;
use rug::{Float, Rational};

/// Euler-Maclaurin shift used by [`hurwitz_zeta`].
pub fn default_shift(s: u32, ctx: &PrecisionContext) -> usize {
    // The asymptotic tail reaches its smallest term near e^{-2 pi M}.
    (0.4 * ctx.work_digits() as f64).ceil() as usize + s as usize + 8
}

/// Hurwitz zeta `zeta(s, a) = sum_{n>=0} (n+a)^{-s}` for integer `s >= 2`
/// and rational `0 < a <= 1`.
pub fn hurwitz_zeta(s: u32, a: &Rational, ctx: &PrecisionContext) -> Float {
    hurwitz_zeta_shift(s, a, default_shift(s, ctx), ctx)
}

/// Euler-Maclaurin evaluation with explicit shift `m`.
pub fn hurwitz_zeta_shift(s: u32, a: &Rational, m: usize, ctx: &PrecisionContext) -> Float {
    assert!(s >= 2, "hurwitz_zeta needs s >= 2");
    assert!(*a > 0 && *a <= 1, "hurwitz_zeta needs 0 < a <= 1");
    let p = ctx.prec() + 16;
    let af = Float::with_val(p, a);
    let mut sum = Float::new(p);
    for n in 0..m {
        let x = Float::with_val(p, &af + n as u32);
        sum += Float::with_val(p, x.pow(-(s as i32)));
    }
    let x = Float::with_val(p, &af + m as u32);
    let xs = Float::with_val(p, (&x).pow(-(s as i32)));
    // integral tail and half endpoint
    sum += Float::with_val(p, &xs * &x) / (s - 1);
    sum += Float::with_val(p, &xs / 2u32);
    let eps = Float::with_val(p, Float::i_exp(1, -(p as i32)));
    let inv_x2 = Float::with_val(p, x.square_ref()).recip();
    // running: (s)_{2j-1} x^{-s-2j+1} / (2j)!
    let mut run = Float::with_val(p, &xs / &x) * s; // j = 1: s * x^{-s-1} / 2!
    run /= 2u32;
    let mut j = 1usize;
    loop {
        let term = Float::with_val(p, &run * &bernoulli(2 * j));
        let small = Float::with_val(p, term.abs_ref()) < eps;
        sum += &term;
        if small || j > 4 * m + 50 {
            break;
        }
        // advance to j+1: multiply by (s+2j-1)(s+2j) / ((2j+1)(2j+2)) / x^2
        let k = 2 * j as u64;
        run *= (s as u64 + k - 1) * (s as u64 + k);
        run /= (k + 1) * (k + 2);
        run *= &inv_x2;
        j += 1;
    }
    Float::with_val(ctx.prec(), sum)
}

use rug::ops::Pow;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::constants::pi;

    fn close(a: &Float, b: &Float, digits: i32) -> bool {
        let d = Float::with_val(a.prec(), a - b).abs();
        d.to_f64() < 10f64.powi(-digits) * (1.0 + b.to_f64().abs())
    }

    #[test]
    fn zeta_two() {
        let ctx = PrecisionContext::new(30);
        let z = hurwitz_zeta(2, &Rational::from(1), &ctx);
        let pi2 = Float::with_val(ctx.prec(), pi(ctx.prec()).square_ref()) / 6u32;
        assert!(close(&z, &pi2, 38));
    }

    #[test]
    fn zeta_two_half_is_pi_squared_over_two() {
        let ctx = PrecisionContext::new(30);
        let z = hurwitz_zeta(2, &Rational::from((1, 2)), &ctx);
        // Independent oracle: brute sum of 1/(n+1/2)^2 to 10^6 plus integral tail.
        let mut brute = 0f64;
        let n_max = 1_000_000u64;
        for n in (0..n_max).rev() {
            let x = n as f64 + 0.5;
            brute += 1.0 / (x * x);
        }
        let tail = 1.0 / (n_max as f64) - 0.5 / (n_max as f64).powi(2);
        assert!((z.to_f64() - (brute + tail)).abs() < 1e-11);
        let exact = Float::with_val(ctx.prec(), pi(ctx.prec()).square_ref()) / 2u32;
        assert!(close(&z, &exact, 38));
    }

    #[test]
    fn apery_constant() {
        let ctx = PrecisionContext::new(30);
        let z = hurwitz_zeta(3, &Rational::from(1), &ctx);
        let n_max = 200_000u64;
        let mut brute = 0f64;
        for n in (1..=n_max).rev() {
            brute += 1.0 / (n as f64).powi(3);
        }
        brute += 0.5 / (n_max as f64).powi(2);
        assert!((z.to_f64() - brute).abs() < 1e-14);
        assert!((z.to_f64() - 1.202_056_903_159_594_3).abs() < 1e-15);
    }

    #[test]
    fn shift_doubling_is_stable() {
        let ctx = PrecisionContext::new(30);
        for (s, a) in [(2u32, (1i64, 3i64)), (3, (2, 7)), (4, (5, 8)), (2, (3, 4))] {
            let a = Rational::from(a);
            let m = default_shift(s, &ctx);
            let z1 = hurwitz_zeta_shift(s, &a, m, &ctx);
            let z2 = hurwitz_zeta_shift(s, &a, 2 * m, &ctx);
            assert!(close(&z1, &z2, 35), "s={s} a={a}");
        }
    }
}
