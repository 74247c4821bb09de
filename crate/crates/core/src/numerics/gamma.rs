use super::PrecisionContext;
use rug::Float;

/// Upper incomplete gamma `Gamma(s, x)` for `s` in {1, 2, 3} in closed form.
pub fn inc_gamma_int(s: u32, x: &Float, ctx: &PrecisionContext) -> Float {
    let p = ctx.prec();
    let e = Float::with_val(p, -x).exp();
    match s {
        1 => e,
        2 => e * Float::with_val(p, x + 1u32),
        3 => {
            let poly = Float::with_val(p, x.square_ref()) + Float::with_val(p, x * 2u32) + 2u32;
            e * poly
        }
        _ => panic!("inc_gamma_int supports s in {{1,2,3}}, got {s}"),
    }
}

/// `Gamma(0, x) = E_1(x)` for `x > 0`, through MPFR's exponential integral
/// (`eint(-x) = -E_1(x)`).
pub fn inc_gamma_zero(x: &Float, ctx: &PrecisionContext) -> Float {
    assert!(*x > 0, "inc_gamma_zero needs x > 0");
    let p = ctx.prec() + 16;
    let v = Float::with_val(p, -x).eint();
    Float::with_val(ctx.prec(), -v)
}

/// `Gamma(s, x)` for integer `s` in {0, 1, 2, 3}.
pub fn inc_gamma_small(s: u32, x: &Float, ctx: &PrecisionContext) -> Float {
    if s == 0 {
        inc_gamma_zero(x, ctx)
    } else {
        inc_gamma_int(s, x, ctx)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::constants::euler_gamma;

    #[test]
    fn closed_forms() {
        let ctx = PrecisionContext::new(30);
        let p = ctx.prec();
        let one = Float::with_val(p, 1);
        let e1 = Float::with_val(p, -&one).exp();
        let g2 = inc_gamma_int(2, &one, &ctx);
        assert!(Float::with_val(p, &g2 - Float::with_val(p, &e1 * 2u32)).abs().to_f64() < 1e-40);
        let two = Float::with_val(p, 2);
        let g3 = inc_gamma_int(3, &two, &ctx);
        let want = Float::with_val(p, -&two).exp() * 10u32;
        assert!(Float::with_val(p, &g3 - &want).abs().to_f64() < 1e-40);
        let tiny = Float::with_val(p, 1e-30);
        assert!((inc_gamma_int(1, &tiny, &ctx).to_f64() - 1.0).abs() < 1e-29);
    }

    #[test]
    fn exponential_integral_matches_power_series() {
        let ctx = PrecisionContext::new(30);
        let p = ctx.prec() + 64;
        for xv in [0.1f64, 0.5, 1.0, 2.0, 3.5] {
            let x = Float::with_val(p, xv);
            // E1(x) = -gamma - ln x - sum_{k>=1} (-x)^k / (k k!)
            let mut s = Float::new(p);
            let mut t = Float::with_val(p, 1);
            for k in 1..200u32 {
                t *= Float::with_val(p, -&x);
                t /= k;
                s += Float::with_val(p, &t / k);
            }
            let want = -(euler_gamma(p) + x.clone().ln() + s);
            let got = inc_gamma_zero(&Float::with_val(ctx.prec(), xv), &ctx);
            let d = Float::with_val(p, &got - &want).abs().to_f64();
            assert!(d < 1e-38, "x={xv}: {d}");
        }
    }
}
