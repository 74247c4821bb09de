//! Functional equations between measure values at related parameters, and
//! the precision audit of the five-term relation.

use super::engine::{evaluate_record, VerifyOptions};
use super::registry::find;
use crate::error::{Error, Result};
use crate::mahler::{self, in_mahler_domain, n_via_g, GFamily, Measure, MeasureValue, QuadratureConfig, Route};
use crate::modular;
use crate::numerics::{digits_agreed, fmt_float, sum_series, BigComplex, DecayModel, PrecisionContext};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::{Float, Integer};
use serde::Serialize;

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

#[derive(Clone, Debug, Serialize)]
pub struct FunctionalCheck {
    pub name: String,
    pub point: String,
    pub lhs: String,
    pub rhs: String,
    pub digits_agreed: i64,
    pub min_digits: u32,
    pub passed: bool,
    pub routes: Vec<String>,
}

fn check(name: &str, point: String, lhs: &Float, rhs: &Float, min_digits: u32, routes: Vec<String>, ctx: &PrecisionContext) -> FunctionalCheck {
    let d = digits_agreed(lhs, rhs, ctx.work_digits() as i64);
    FunctionalCheck {
        name: name.into(),
        point,
        lhs: fmt_float(lhs, 20),
        rhs: fmt_float(rhs, 20),
        digits_agreed: d,
        min_digits,
        passed: d >= min_digits as i64,
        routes,
    }
}

fn m2_at(t: &BigComplex, ctx: &PrecisionContext, routes: &mut Vec<String>) -> Result<Float> {
    let MeasureValue { value, route, .. } = mahler::evaluate(Measure::M2, t, None, &Route::PREFERENCE, ctx, &QuadratureConfig::default())?;
    routes.push(format!("m2({}): {route}", t.to_string_digits(8)));
    Ok(value)
}

/// `2 m2(4(k+1/k)^2) = m2(16k^4) + m2(16/k^4)` for real `k > 1`.
pub fn eq_2_5(k: f64, ctx: &PrecisionContext) -> Result<FunctionalCheck> {
    let p = ctx.prec();
    let kk = Float::with_val(p, k);
    let a = Float::with_val(p, &kk + Float::with_val(p, kk.recip_ref()));
    let k4 = Float::with_val(p, kk.clone().square().square());
    let mut routes = vec![];
    let lhs = m2_at(&BigComplex::from_real(a.square() * 4u32), ctx, &mut routes)? * 2u32;
    let r1 = m2_at(&BigComplex::from_real(Float::with_val(p, &k4 * 16u32)), ctx, &mut routes)?;
    let r2 = m2_at(&BigComplex::from_real(Float::with_val(p, 16u32 / &k4)), ctx, &mut routes)?;
    Ok(check("2.5", format!("k = {k}"), &lhs, &(r1 + r2), 12, routes, ctx))
}

/// `m2(4(k+1/k)^2) + m2(-4(k-1/k)^2) = m2(16/k^4)` for `0 < k < 1`.
pub fn eq_2_6(k: f64, ctx: &PrecisionContext) -> Result<FunctionalCheck> {
    let p = ctx.prec();
    let kk = Float::with_val(p, k);
    let inv = Float::with_val(p, kk.recip_ref());
    let plus = Float::with_val(p, &kk + &inv);
    let minus = Float::with_val(p, &kk - &inv);
    let k4 = Float::with_val(p, kk.clone().square().square());
    let mut routes = vec![];
    let l1 = m2_at(&BigComplex::from_real(plus.square() * 4u32), ctx, &mut routes)?;
    let l2 = m2_at(&BigComplex::from_real(minus.square() * -4i32), ctx, &mut routes)?;
    let rhs = m2_at(&BigComplex::from_real(Float::with_val(p, 16u32 / &k4)), ctx, &mut routes)?;
    Ok(check("2.6", format!("k = {k}"), &(l1 + l2), &rhs, 10, routes, ctx))
}

/// `n4(s) = Re log s - sum (4n)!/(n!^4 n s^n)`, the constant-term expansion
/// for `|s| > 256`. Only used as an independent oracle.
pub fn n4_ct_series(s: &BigComplex, ctx: &PrecisionContext) -> Result<Float> {
    let w = ctx.with_extra_bits(24);
    let p = w.prec();
    let s = s.with_prec(p);
    let ratio = 256.0 / s.abs().to_f64();
    if ratio >= 1.0 {
        return Err(crate::error::Error::Divergent(ratio));
    }
    let inv = s.recip();
    let mut pw = BigComplex::one(p);
    let mut c = Integer::from(1);
    let tail = sum_series(
        |k| {
            let n = k as u64 + 1;
            c *= (4 * n) * (4 * n - 1) * (4 * n - 2) * (4 * n - 3);
            c /= n * n * n * n;
            pw = &pw * &inv;
            pw.scale(&(Float::with_val(p, &c) / n))
        },
        DecayModel::Geometric(ratio),
        &w,
    )?;
    Ok(Float::with_val(ctx.prec(), (&s.ln() - &tail.value).re))
}

/// `n2(s2(q))` for real `q` inside the measure's domain: the series when
/// `|s2(q)| > 64`, else the G relations.
fn n2_at_nome(q: &BigComplex, ctx: &PrecisionContext, routes: &mut Vec<String>) -> Result<Float> {
    let s = modular::s2(q, ctx);
    if mahler::series_applicable(Measure::N2, &s) {
        routes.push(format!("q = {}: series", q.to_string_digits(6)));
        mahler::n2_series(&s, ctx)
    } else if in_mahler_domain(GFamily::N2, q.abs().to_f64()) {
        routes.push(format!("q = {}: g-matrix", q.to_string_digits(6)));
        n_via_g(GFamily::N2, q, ctx)
    } else {
        Err(Error::Route(format!("q = {} is beyond the n2 domain", q.to_string_digits(6))))
    }
}

/// `n4(s4(q))` as a torus integral: the constant-term expansion when
/// `|s4(q)| > 256` and `q` is inside the domain, else the G relations.
fn n4_at_nome(q: &BigComplex, ctx: &PrecisionContext, routes: &mut Vec<String>) -> Result<Float> {
    if !in_mahler_domain(GFamily::N4, q.abs().to_f64()) {
        return Err(Error::Route(format!("q = {} is beyond the n4 domain", q.to_string_digits(6))));
    }
    let s = modular::s4(q, ctx);
    if 256.0 / s.abs().to_f64() < mahler::SERIES_RATIO_MAX {
        routes.push(format!("q = {}: series", q.to_string_digits(6)));
        n4_ct_series(&s, ctx)
    } else {
        routes.push(format!("q = {}: g-matrix", q.to_string_digits(6)));
        n_via_g(GFamily::N4, q, ctx)
    }
}

/// The modular side: `n4(s4(q))` continued by the G relations, which is the
/// function the relation is an identity for at every `|q| < 0.05`.
fn n4_modular(q: &BigComplex, ctx: &PrecisionContext, routes: &mut Vec<String>) -> Result<Float> {
    routes.push(format!("q = {}: g-matrix (modular)", q.to_string_digits(6)));
    n_via_g(GFamily::N4, q, ctx)
}

/// `n2(s2(q)) = 9 n2(s2(q^2)) + 4 n2(s2(-q^4)) - n2(s2(-q)) - 8 n2(s2(q^4))`.
pub fn eq_5_2(q: f64, ctx: &PrecisionContext) -> Result<FunctionalCheck> {
    let p = ctx.prec();
    let q = BigComplex::from_f64(p, q, 0.0);
    let q2 = q.square();
    let q4 = q2.square();
    let mut r = vec![];
    let lhs = n2_at_nome(&q, ctx, &mut r)?;
    let rhs = n2_at_nome(&q2, ctx, &mut r)? * 9u32 + n2_at_nome(&-q4.clone(), ctx, &mut r)? * 4u32
        - n2_at_nome(&-q.clone(), ctx, &mut r)?
        - n2_at_nome(&q4, ctx, &mut r)? * 8u32;
    Ok(check("5.2", format!("q = {}", q.re.to_f64()), &lhs, &rhs, 12, r, ctx))
}

/// `n4(s4(q)) = 7 n4(s4(q^2)) + 2 n4(s4(-q^2)) - n4(s4(-q)) - 4 n4(s4(q^4))`.
///
/// With `modular` set every term comes from the G relations; otherwise each
/// term is a torus integral, which needs `|q| <= e^{-pi sqrt 2}`.
pub fn n4_relation(q: f64, modular: bool, ctx: &PrecisionContext) -> Result<FunctionalCheck> {
    let p = ctx.prec();
    let q = BigComplex::from_f64(p, q, 0.0);
    let q2 = q.square();
    let q4 = q2.square();
    let f = if modular { n4_modular } else { n4_at_nome };
    let mut r = vec![];
    let lhs = f(&q, ctx, &mut r)?;
    let rhs = f(&q2, ctx, &mut r)? * 7u32 + f(&-q2.clone(), ctx, &mut r)? * 2u32 - f(&-q.clone(), ctx, &mut r)? - f(&q4, ctx, &mut r)? * 4u32;
    let name = if modular { "n4-relation (modular)" } else { "n4-relation" };
    Ok(check(name, format!("q = {}", q.re.to_f64()), &lhs, &rhs, 12, r, ctx))
}

/// Sample points: 10 values of `k` in `[1.2, 3]` and 5 in `(0.1, 0.9)`.
pub fn sample_points(seed: u64) -> (Vec<f64>, Vec<f64>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = (0..10).map(|_| rng.gen_range(1.2..3.0)).collect();
    let b = (0..5).map(|_| rng.gen_range(0.1..0.9)).collect();
    (a, b)
}

/// Every functional-equation check at the seeded sample points.
pub fn run_all(seed: u64, ctx: &PrecisionContext) -> Result<Vec<FunctionalCheck>> {
    let (ka, kb) = sample_points(seed);
    let mut out = Vec::new();
    for k in ka {
        out.push(eq_2_5(k, ctx)?);
    }
    for k in kb {
        out.push(eq_2_6(k, ctx)?);
    }
    for q in [0.02, 0.03] {
        out.push(eq_5_2(q, ctx)?);
    }
    out.push(n4_relation(0.02, true, ctx)?);
    out.push(n4_relation(0.01, false, ctx)?);
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct ConvergenceAudit {
    pub id: String,
    pub digits_low: i64,
    pub digits_high: i64,
    pub passed: bool,
}

/// Raises the target by 5 digits and requires the agreement of `id` to
/// improve by at least 4.
pub fn convergence_audit(id: &str, ctx: &PrecisionContext) -> Result<ConvergenceAudit> {
    let rec = find(id)?;
    let hi = PrecisionContext::with_guard(ctx.target_digits + 5, ctx.guard_digits);
    let lo = evaluate_record(rec, &VerifyOptions::new(*ctx)).digits_agreed;
    let hi = evaluate_record(rec, &VerifyOptions::new(hi)).digits_agreed;
    Ok(ConvergenceAudit { id: id.into(), digits_low: lo, digits_high: hi, passed: hi - lo >= 4 })
}
