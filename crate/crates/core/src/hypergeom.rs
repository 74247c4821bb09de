//! Generalized hypergeometric series, the elliptic nome `q_j(alpha)` and the
//! Picard-Fuchs recurrence check for `3F2(1/2,1/2,1/2; 1,1; 64 mu)`.

use crate::error::{Error, Result};
use crate::numerics::{constants, sum_series, BigComplex, DecayModel, PrecisionContext};
use rug::{Float, Integer, Rational};

/// Parameters of `pFq(a_1..a_p; b_1..b_q; z)`; rationals are `(num, den)` pairs.
#[derive(Clone, Debug)]
pub struct HyperParams {
    pub upper: Vec<(i64, i64)>,
    pub lower: Vec<(i64, i64)>,
    pub argument: BigComplex,
}

impl HyperParams {
    pub fn new(upper: &[(i64, i64)], lower: &[(i64, i64)], argument: BigComplex) -> Self {
        HyperParams { upper: upper.to_vec(), lower: lower.to_vec(), argument }
    }

    fn validate(&self) -> Result<()> {
        if self.upper.len() != self.lower.len() + 1 {
            return Err(Error::Precondition(format!("p = q + 1 required, got p={} q={}", self.upper.len(), self.lower.len())));
        }
        for &(n, d) in self.upper.iter().chain(&self.lower) {
            if d <= 0 {
                return Err(Error::Precondition(format!("parameter {n}/{d} needs a positive denominator")));
            }
        }
        for &(n, d) in &self.lower {
            if n <= 0 && n % d == 0 {
                return Err(Error::Precondition(format!("lower parameter {n}/{d} is a non-positive integer")));
            }
        }
        Ok(())
    }
}

fn param_sum(ps: &[(i64, i64)]) -> f64 {
    ps.iter().map(|&(n, d)| n as f64 / d as f64).sum()
}

/// Coefficient ratio `prod(a+n) / (prod(b+n) (n+1))` in floating point.
fn coeff_ratio(h: &HyperParams, n: usize) -> f64 {
    let n = n as f64;
    let num: f64 = h.upper.iter().map(|&(a, d)| a as f64 / d as f64 + n).product();
    let den: f64 = h.lower.iter().map(|&(b, d)| b as f64 / d as f64 + n).product::<f64>() * (n + 1.0);
    (num / den).abs()
}

/// `pFq` for `p = q + 1` and `|z| < 1`, summed term by term.
pub fn pfq(h: &HyperParams, ctx: &PrecisionContext) -> Result<BigComplex> {
    Ok(pfq_series(h, ctx)?.value)
}

/// As [`pfq`], exposing the tail bound and the number of terms.
pub fn pfq_series(h: &HyperParams, ctx: &PrecisionContext) -> Result<crate::numerics::SeriesResult<BigComplex>> {
    h.validate()?;
    let p = ctx.prec() + 24;
    let z = h.argument.with_prec(p);
    let zabs = z.abs().to_f64();
    if zabs >= 1.0 {
        return Err(Error::Divergent(zabs));
    }
    if z.is_zero() {
        return Ok(crate::numerics::SeriesResult { value: BigComplex::one(ctx.prec()), tail_bound: Float::new(64), terms_used: 1 });
    }
    // Term ratios tend to |z| (1 + (sum a - sum b - 1)/n); pick a ratio that
    // is eventually respected.
    let excess = param_sum(&h.upper) - param_sum(&h.lower) - 1.0;
    let ratio = if excess < 0.0 { zabs } else { zabs.sqrt() };
    let mut from = 0usize;
    while coeff_ratio(h, from) * zabs > ratio * (1.0 + 1e-12) {
        from += 1;
        if from > 1_000_000 {
            return Err(Error::Precondition("parameters too large for the term cap".into()));
        }
    }
    let den_prod: i64 = h.upper.iter().map(|x| x.1).product();
    let num_prod: i64 = h.lower.iter().map(|x| x.1).product();
    let mut t = BigComplex::one(p);
    let res = sum_series(
        |n| {
            if n > 0 {
                let k = (n - 1) as i64;
                let mut num = Integer::from(num_prod);
                for &(a, d) in &h.upper {
                    num *= a + k * d;
                }
                let mut den = Integer::from(den_prod) * (k + 1);
                for &(b, d) in &h.lower {
                    den *= b + k * d;
                }
                let f = Float::with_val(p, &num) / Float::with_val(p, &den);
                t = (&t * &z).scale(&f);
            }
            t.clone()
        },
        DecayModel::EventuallyGeometric { ratio, from },
        ctx,
    )?;
    Ok(crate::numerics::SeriesResult { value: res.value.with_prec(ctx.prec()), tail_bound: res.tail_bound, terms_used: res.terms_used })
}

/// `2F1(1/j, (j-1)/j; 1; x)`.
pub fn f21_signature(j: u32, x: &BigComplex, ctx: &PrecisionContext) -> Result<BigComplex> {
    let j = j as i64;
    pfq(&HyperParams::new(&[(1, j), (j - 1, j)], &[(1, 1)], x.clone()), ctx)
}

/// Elliptic nome of signature `j`:
/// `q_j(a) = exp(-pi / sin(pi/j) * F(1-a) / F(a))`.
pub fn nome(j: u32, alpha: &BigComplex, ctx: &PrecisionContext) -> Result<BigComplex> {
    if !(2..=4).contains(&j) {
        return Err(Error::Precondition(format!("signature {j} not in {{2,3,4}}")));
    }
    let p = ctx.prec() + 16;
    let one = BigComplex::one(p);
    let a = alpha.with_prec(p);
    if a.is_zero() || (&a - &one).is_zero() {
        return Err(Error::Precondition("alpha must avoid 0 and 1".into()));
    }
    let wctx = ctx.with_extra_bits(16);
    let f_a = f21_signature(j, &a, &wctx)?;
    let f_b = f21_signature(j, &(&one - &a), &wctx)?;
    let pi = constants::pi(p);
    let sin = Float::with_val(p, &pi / j).sin();
    let y = (&f_b / &f_a).scale(&Float::with_val(p, &pi / &sin));
    Ok((-y).exp().with_prec(ctx.prec()))
}

/// The numerator constant `c` with `s_j(q_j(a)) = c / (a (1-a))`.
pub fn nome_constant(j: u32) -> i64 {
    match j {
        2 => 16,
        3 => 27,
        4 => 64,
        _ => panic!("signature {j} not in {{2,3,4}}"),
    }
}

/// Principal small root of `a (1 - a) = c / s`, i.e. the one with `|a| <= |1-a|`.
pub fn alpha_for_s(j: u32, s: &BigComplex) -> BigComplex {
    let p = s.prec();
    let c = nome_constant(j);
    let one = BigComplex::one(p);
    let disc = &one - &(BigComplex::from_i64(p, 4 * c) / s.clone());
    let r = disc.sqrt();
    let a1 = (&one - &r).div_i64(2);
    let a2 = (&one + &r).div_i64(2);
    if a1.abs() <= a2.abs() { a1 } else { a2 }
}

/// Coefficients `c_n` of `3F2(1/2,1/2,1/2; 1,1; 64 mu) = sum c_n mu^n`,
/// from the Pochhammer ratio in exact arithmetic.
pub fn period_coefficients(n_max: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(n_max + 1);
    let mut c = Rational::from(1);
    out.push(c.clone());
    for n in 0..n_max as i64 {
        // c_{n+1} = c_n (n+1/2)^3 / (n+1)^3 * 64
        c *= Rational::from((2 * n + 1, 2 * (n + 1))).pow(3u32) * 64u32;
        out.push(c.clone());
    }
    out
}

/// Residuals of the Picard-Fuchs operator
/// `mu^2(64mu-1)u''' + mu(288mu-3)u'' + (208mu-1)u' + 8u`
/// applied to the period series, coefficient of `mu^n` for `n <= n_max`.
pub fn picard_fuchs_residuals(n_max: usize) -> Vec<Rational> {
    // operator as (derivative order k, power of mu j, integer coefficient)
    const OP: [(usize, usize, i64); 7] = [(3, 3, 64), (3, 2, -1), (2, 2, 288), (2, 1, -3), (1, 1, 208), (1, 0, -1), (0, 0, 8)];
    let c = period_coefficients(n_max + 3);
    (0..=n_max)
        .map(|n| {
            let mut r = Rational::new();
            for &(k, j, p) in &OP {
                // mu^j D^k sum c_m mu^m contributes c_m m(m-1)...(m-k+1) at m = n + k - j
                if n + k < j {
                    continue;
                }
                let m = n + k - j;
                let falling: i64 = (0..k).map(|i| m as i64 - i as i64).product();
                r += Rational::from(&c[m] * Integer::from(p * falling));
            }
            r
        })
        .collect()
}

/// `true` iff every residual up to `n_max` is exactly zero.
pub fn picard_fuchs_check(n_max: usize) -> bool {
    picard_fuchs_residuals(n_max).iter().all(|r| *r == 0)
}

use rug::ops::Pow;

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(30)
    }

    #[test]
    fn zero_argument_gives_one() {
        let h = HyperParams::new(&[(3, 2), (3, 2), (1, 1), (1, 1)], &[(2, 1), (2, 1), (2, 1)], BigComplex::zero(160));
        let v = pfq(&h, &ctx()).unwrap();
        assert_eq!(v.re, 1);
        assert!(v.im.is_zero());
    }

    #[test]
    fn gauss_first_terms() {
        // 2F1(1/2,1/2;1;z) = 1 + z/4 + 9z^2/64 + 25 z^3/256 + ...
        let c = ctx();
        let z = 1e-4;
        let h = HyperParams::new(&[(1, 2), (1, 2)], &[(1, 1)], BigComplex::from_f64(c.prec(), z, 0.0));
        let v = pfq(&h, &c).unwrap().re.to_f64();
        let approx = 1.0 + z / 4.0 + 9.0 * z * z / 64.0 + 25.0 * z.powi(3) / 256.0;
        assert!((v - approx).abs() < 1e-17);
    }

    #[test]
    fn divergent_argument_is_rejected() {
        let h = HyperParams::new(&[(1, 2), (1, 2)], &[(1, 1)], BigComplex::from_f64(128, 1.2, 0.0));
        assert!(matches!(pfq(&h, &ctx()), Err(Error::Divergent(_))));
    }

    #[test]
    fn nome_at_half_is_exp_minus_pi() {
        let c = ctx();
        let q = nome(2, &BigComplex::from_f64(c.prec(), 0.5, 0.0), &c).unwrap();
        let want = Float::with_val(c.prec(), -constants::pi(c.prec())).exp();
        assert!(Float::with_val(c.prec(), &q.re - &want).abs().to_f64() < 1e-39);
    }

    #[test]
    fn period_coefficients_are_central_binomial_cubes() {
        let c = period_coefficients(50);
        assert_eq!(c[0], 1);
        assert_eq!(c[1], 8);
        for (n, v) in c.iter().enumerate() {
            let b = Integer::from(Integer::binomial_u(2 * n as u32, n as u32));
            assert_eq!(*v, Rational::from(b.pow(3u32)));
        }
    }

    #[test]
    fn picard_fuchs_exact() {
        assert!(picard_fuchs_check(200));
        // A perturbed series must leave a residual.
        let r = picard_fuchs_residuals(3);
        assert!(r.iter().all(|x| *x == 0));
    }
}
