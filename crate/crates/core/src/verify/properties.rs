//! Deterministic property checks at seeded points: the chi product
//! identities and their duplications, nome round-trips, the eta
//! transformation, Hecke multiplicativity and agreement between routes.

use crate::error::Result;
use crate::hypergeom;
use crate::lfunc::{self, coeffs::hecke_multiplicative};
use crate::mahler::{self, Measure, QuadratureConfig, Route};
use crate::modular::{self, Tau};
use crate::numerics::{digits_agreed, BigComplex, PrecisionContext};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::Float;
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct PropertyCheck {
    pub suite: &'static str,
    pub name: String,
    pub digits_agreed: i64,
    pub min_digits: i64,
    pub passed: bool,
}

fn record(suite: &'static str, name: String, a: &Float, b: &Float, min_digits: i64, ctx: &PrecisionContext) -> PropertyCheck {
    let d = digits_agreed(a, b, ctx.work_digits() as i64);
    PropertyCheck { suite, name, digits_agreed: d, min_digits, passed: d >= min_digits }
}

fn exact(suite: &'static str, name: String, ok: bool) -> PropertyCheck {
    PropertyCheck { suite, name, digits_agreed: if ok { i64::MAX } else { 0 }, min_digits: 0, passed: ok }
}

fn root(x: &Float, n: u32) -> Float {
    (Float::with_val(x.prec(), x.ln_ref()) / n).exp()
}

/// The three chi product identities and the three duplication formulas at
/// `t` in `(0, 1)`, each compared after raising both sides to the 24th power.
pub fn chi_identities(t: f64, ctx: &PrecisionContext) -> Result<Vec<PropertyCheck>> {
    let p = ctx.prec();
    let min = ctx.target_digits as i64;
    let tb = BigComplex::from_f64(p, t, 0.0);
    let q = hypergeom::nome(2, &tb, ctx)?.re;
    let t = Float::with_val(p, t);
    let omt = Float::with_val(p, 1 - &t);
    let s = Float::with_val(p, omt.sqrt_ref());
    let s4 = root(&omt, 4);
    let chi24 = |x: Float| -> Result<Float> { Ok(modular::chi_q(&BigComplex::from_real(x), ctx)?.re.pow(24u32)) };
    use rug::ops::Pow;
    let q2 = Float::with_val(p, q.square_ref());
    let q4 = Float::with_val(p, q2.square_ref());
    let two = Float::with_val(p, 2);
    let checks = [
        ("chi(q2)", chi24(q.clone())?, Float::with_val(p, two.clone().pow(4u32) * (Float::with_val(p, &q / &t) / &omt))),
        ("chi(-q2)", chi24(-q.clone())?, Float::with_val(p, 16u32 * omt.clone().square() * (Float::with_val(p, &q / &t)))),
        ("chi(-q2^2)", chi24(-q2.clone())?, Float::with_val(p, 256u32 * omt.clone() * Float::with_val(p, &q / &t).square())),
        (
            "chi^24(q2^2)",
            chi24(q2.clone())?,
            Float::with_val(p, 4u32 * Float::with_val(p, 1 + &s).pow(6u32) / (t.clone().square() * &s) * &q2),
        ),
        (
            "chi^24(q2^4)",
            chi24(q4.clone())?,
            Float::with_val(p, 2u32 * Float::with_val(p, 1 + &s4).pow(12u32) / (t.clone() * Float::with_val(p, 1 - &s).pow(3u32) * &s4) * &q4),
        ),
        (
            "chi^24(-q2^4)",
            chi24(-q4.clone())?,
            Float::with_val(p, 1024u32 * Float::with_val(p, 1 + &s).pow(6u32) * &s / t.clone().pow(4u32) * &q4),
        ),
    ];
    Ok(checks
        .into_iter()
        .map(|(n, a, b)| record("chi", format!("{n} at t = {}", t.to_f64()), &a, &b, min, ctx))
        .collect())
}

/// `s_j(nome(j, alpha)) alpha (1 - alpha) = 16, 27, 64` for `j = 2, 3, 4`.
pub fn nome_round_trip(j: u32, alpha: f64, ctx: &PrecisionContext) -> Result<PropertyCheck> {
    let p = ctx.prec();
    let a = BigComplex::from_f64(p, alpha, 0.0);
    let q = hypergeom::nome(j, &a, ctx)?;
    let s = match j {
        2 => modular::s2(&q, ctx),
        3 => modular::s3(&q, ctx),
        _ => modular::s4(&q, ctx),
    };
    let one = BigComplex::one(p);
    let got = (&s * &(&a * &(&one - &a))).re;
    let want = Float::with_val(p, [16, 27, 64][(j - 2) as usize]);
    Ok(record("nome", format!("j = {j}, alpha = {alpha}"), &got, &want, ctx.target_digits as i64, ctx))
}

/// `eta(-1/tau) = sqrt(-i tau) eta(tau)`, compared on real and imaginary parts.
pub fn eta_transformation(re: f64, im: f64, ctx: &PrecisionContext) -> Result<Vec<PropertyCheck>> {
    let p = ctx.prec();
    let t = Tau::from_f64(p, re, im)?;
    let inv = Tau::new(-t.value().recip())?;
    let lhs = modular::eta(&inv, ctx);
    let rhs = &(-t.value().mul_i()).sqrt() * &modular::eta(&t, ctx);
    let min = ctx.target_digits as i64;
    let scale = rhs.abs();
    let name = format!("tau = {re} + {im}i");
    let d = |a: &Float, b: &Float| {
        let diff = Float::with_val(p, a - b).abs();
        if diff.is_zero() {
            ctx.work_digits() as i64
        } else {
            (Float::with_val(p, &scale / diff).log10().to_f64().floor() as i64).min(ctx.work_digits() as i64)
        }
    };
    let dr = d(&lhs.re, &rhs.re).min(d(&lhs.im, &rhs.im));
    Ok(vec![PropertyCheck { suite: "eta", name, digits_agreed: dr, min_digits: min, passed: dr >= min }])
}

/// `a_m a_n = a_mn` for coprime `m, n` on every built-in form.
pub fn hecke(bound: usize) -> Result<Vec<PropertyCheck>> {
    lfunc::builtin_forms()
        .iter()
        .map(|s| {
            let c = lfunc::coeffs(s, bound)?;
            Ok(exact("hecke", s.label.clone(), hecke_multiplicative(&c.a, bound).is_ok()))
        })
        .collect()
}

fn via(m: Measure, x: &BigComplex, route: Route, ctx: &PrecisionContext) -> Result<(Float, i64)> {
    let v = mahler::evaluate(m, x, None, &[route], ctx, &QuadratureConfig::default())?;
    Ok((v.value, v.expected_digits as i64))
}

/// Series or G-matrix against quadrature at a few parameters, to the
/// smaller of 20 digits and what the quadrature claims.
pub fn route_agreement(ctx: &PrecisionContext) -> Result<Vec<PropertyCheck>> {
    let p = ctx.prec();
    let min = 20.min(ctx.target_digits as i64);
    let mut out = vec![];
    for (m, x, a, b) in [
        (Measure::M2, 50.0, Route::Series, Route::Quadrature),
        (Measure::M2, -40.0, Route::Series, Route::Quadrature),
        (Measure::M3, 60.0, Route::Series, Route::Quadrature),
        (Measure::N2, 200.0, Route::Series, Route::Quadrature),
    ] {
        let v = BigComplex::from_f64(p, x, 0.0);
        let (va, _) = via(m, &v, a, ctx)?;
        let (vb, claimed) = via(m, &v, b, ctx)?;
        out.push(record("routes", format!("{m}({x}): {a} vs {b}"), &va, &vb, min.min(claimed), ctx));
    }
    // the G-matrix route at a nome inside the domain against the series
    let q = BigComplex::from_f64(p, 0.01, 0.0);
    let s = modular::s2(&q, ctx);
    let g = mahler::n_via_g(mahler::GFamily::N2, &q, ctx)?;
    out.push(record("routes", "n2(s2(0.01)): g-matrix vs series".into(), &g, &mahler::n2_series(&s, ctx)?, min, ctx));
    Ok(out)
}

/// Every property check at points drawn from `seed`.
pub fn run_all(seed: u64, ctx: &PrecisionContext) -> Result<Vec<PropertyCheck>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![];
    for _ in 0..10 {
        out.extend(chi_identities(rng.gen_range(0.05..0.95), ctx)?);
    }
    for _ in 0..20 {
        let a = rng.gen_range(0.01..0.5);
        for j in 2..=4 {
            out.push(nome_round_trip(j, a, ctx)?);
        }
    }
    for _ in 0..5 {
        out.extend(eta_transformation(rng.gen_range(-0.5..0.5), rng.gen_range(0.3..1.5), ctx)?);
    }
    out.extend(hecke(2000)?);
    out.extend(route_agreement(ctx)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chi_at_half() {
        let c = PrecisionContext::new(30);
        for r in chi_identities(0.5, &c).unwrap() {
            assert!(r.passed, "{r:?}");
        }
    }

    #[test]
    fn round_trips() {
        let c = PrecisionContext::new(30);
        for j in 2..=4 {
            assert!(nome_round_trip(j, 0.2, &c).unwrap().passed);
        }
    }
}
