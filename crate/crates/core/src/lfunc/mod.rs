//! Dirichlet characters, newform coefficient tables, and L-values of
//! weight 2 and 3 newforms through the smoothed functional equation.

pub mod coeffs;
pub mod curves;
pub mod dirichlet;

pub use coeffs::{grossencharacter_coeffs, load_coeff_file, set_coeff_dir, FrickeSign, ThetaSpec};
pub use dirichlet::{d_k, dirichlet_l, dirichlet_lprime_minus1, kronecker, DirichletChar};

use crate::error::{Error, Result};
use crate::modular::EtaQuotientSpec;
use crate::numerics::{constants, inc_gamma_small, PrecisionContext};
use rug::Float;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Where the coefficients of a form come from.
#[derive(Clone, Debug, PartialEq)]
pub enum Source {
    EtaQuotient(EtaQuotientSpec),
    Theta(ThetaSpec),
    Grossencharacter,
    Twist { base: String, d: i64 },
    File,
}

#[derive(Clone, Debug, PartialEq)]
pub struct NewformSpec {
    pub label: String,
    /// `None` asks for detection (twists of forms whose level is not declared).
    pub level: Option<u64>,
    pub weight: u32,
    pub source: Source,
    pub fricke: FrickeSign,
}

/// A coefficient table `a_1..a_Q` (`a[0]` is zero).
#[derive(Clone, Debug)]
pub struct CoeffTable {
    pub label: String,
    pub level: u64,
    pub weight: u32,
    pub fricke: FrickeSign,
    pub a: Arc<Vec<i64>>,
}

impl CoeffTable {
    pub fn len(&self) -> usize {
        self.a.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, n: usize) -> i64 {
        self.a[n]
    }
}

fn eta(f: &[(u32, i32)]) -> Source {
    Source::EtaQuotient(EtaQuotientSpec::new(f))
}

fn spec(label: &str, level: Option<u64>, weight: u32, source: Source, fricke: FrickeSign) -> NewformSpec {
    NewformSpec { label: label.into(), level, weight, source, fricke }
}

/// Forms whose coefficients are generated in-crate.
pub fn builtin_forms() -> Vec<NewformSpec> {
    use FrickeSign::*;
    vec![
        spec("f20", Some(20), 2, eta(&[(2, 2), (10, 2)]), Unknown),
        spec("f27", Some(27), 2, eta(&[(3, 2), (9, 2)]), Plus),
        spec("f32", Some(32), 2, eta(&[(4, 2), (8, 2)]), Unknown),
        spec("f36", Some(36), 2, eta(&[(6, 4)]), Plus),
        spec("f64", Some(64), 2, eta(&[(8, 8), (4, -2), (16, -2)]), Unknown),
        spec("f108", Some(108), 2, Source::Grossencharacter, Plus),
        spec("f108theta", Some(108), 2, Source::Theta(ThetaSpec::f108()), Plus),
        spec("f27theta", Some(27), 2, Source::Theta(ThetaSpec::f27()), Plus),
        spec("g7", Some(7), 3, eta(&[(1, 3), (7, 3)]), Unknown),
        spec("g8", Some(8), 3, eta(&[(1, 2), (2, 1), (4, 1), (8, 2)]), Unknown),
        spec("g12", Some(12), 3, eta(&[(2, 3), (6, 3)]), Unknown),
        spec("g16", Some(16), 3, eta(&[(4, 6)]), Unknown),
        spec("g48", Some(48), 3, Source::Twist { base: "g12".into(), d: -4 }, Unknown),
        spec("g64", Some(64), 3, Source::Twist { base: "g16".into(), d: 8 }, Unknown),
    ]
}

/// Labels that are only available through coefficient files.
pub const FILE_FORMS: &[&str] = &["f448", "f56", "f289", "f17", "f100", "f15"];

/// Split `"<base>x<D>"` into base label and twisting discriminant.
fn parse_twist(label: &str) -> Option<(&str, i64)> {
    let (base, d) = label.rsplit_once('x')?;
    let d: i64 = d.parse().ok()?;
    (!base.is_empty()).then_some((base, d))
}

/// Resolve a label: built-ins, `<base>x<D>` twists, then coefficient files.
pub fn newform(label: &str) -> Result<NewformSpec> {
    if let Some(s) = builtin_forms().into_iter().find(|s| s.label == label) {
        return Ok(s);
    }
    if let Some((base, d)) = parse_twist(label) {
        let b = newform(base)?;
        DirichletChar::new(d)?;
        return Ok(spec(label, None, b.weight, Source::Twist { base: base.into(), d }, FrickeSign::Unknown));
    }
    let path = coeffs::coeff_path(label).ok_or_else(|| Error::MissingData(format!("{label}: no coefficient directory configured")))?;
    if !path.exists() {
        return Err(Error::MissingData(format!("{label}: {} not found", path.display())));
    }
    let (flabel, level, weight, fricke) = coeffs::read_header(&path)?;
    if flabel != label {
        return Err(Error::MalformedFile { path: path.display().to_string(), reason: format!("header label '{flabel}' does not match '{label}'") });
    }
    Ok(spec(label, Some(level), weight, Source::File, fricke))
}

/// Whether a label's coefficients can be produced without external files.
pub fn is_builtin(label: &str) -> bool {
    if builtin_forms().iter().any(|s| s.label == label) {
        return true;
    }
    parse_twist(label).is_some_and(|(b, _)| is_builtin(b))
}

type TableCache = Mutex<HashMap<String, Arc<Vec<i64>>>>;

fn table_cache() -> &'static TableCache {
    static C: OnceLock<TableCache> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Drop cached coefficient tables (after changing the coefficient directory).
pub fn clear_caches() {
    table_cache().lock().unwrap().clear();
    resolved_cache().lock().unwrap().clear();
}

fn raw_coeffs(s: &NewformSpec, q: usize) -> Result<Arc<Vec<i64>>> {
    if let Some(a) = table_cache().lock().unwrap().get(&s.label) {
        if a.len() > q {
            return Ok(a.clone());
        }
    }
    let a: Vec<i64> = match &s.source {
        Source::EtaQuotient(e) => {
            if q > crate::modular::MAX_QEXP_ORDER {
                return Err(Error::OrderOverflow(q));
            }
            coeffs::eta_coeffs(e, q)?
        }
        Source::Theta(t) => t.expand(q)?,
        Source::Grossencharacter => grossencharacter_coeffs(q)?,
        Source::Twist { base, d } => {
            let b = raw_coeffs(&newform(base)?, q)?;
            (0..=q).map(|n| b[n] * kronecker(*d, n as i64) as i64).collect()
        }
        Source::File => {
            let path = coeffs::coeff_path(&s.label).ok_or_else(|| Error::MissingData(s.label.clone()))?;
            let f = coeffs::load_coeff_file(&path)?;
            if f.a.len() <= q {
                return Err(Error::InsufficientCoefficients { label: s.label.clone(), need: q, have: f.a.len() - 1 });
            }
            f.a
        }
    };
    let a = Arc::new(a);
    table_cache().lock().unwrap().insert(s.label.clone(), a.clone());
    Ok(a)
}

/// Coefficient table `a_1..a_Q` (possibly longer if cached).
pub fn coeffs(s: &NewformSpec, q: usize) -> Result<CoeffTable> {
    let a = raw_coeffs(s, q)?;
    Ok(CoeffTable { label: s.label.clone(), level: s.level.unwrap_or(0), weight: s.weight, fricke: s.fricke, a })
}

/// A form with its level and Fricke sign settled.
#[derive(Clone, Debug)]
pub struct ResolvedForm {
    pub spec: NewformSpec,
    pub level: u64,
    pub fricke: i32,
    /// The sign came from [`fricke_detect`] rather than from the spec.
    pub fricke_detected: bool,
    pub level_detected: bool,
}

type ResolvedCache = Mutex<HashMap<(String, u32), Arc<ResolvedForm>>>;

fn resolved_cache() -> &'static ResolvedCache {
    static C: OnceLock<ResolvedCache> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Number of terms needed by the two-sum at this level and precision.
pub fn cutoff(level: u64, ctx: &PrecisionContext) -> usize {
    let digits = (ctx.target_digits + ctx.guard_digits) as f64;
    ((level as f64).sqrt() * digits * std::f64::consts::LN_10 / (2.0 * std::f64::consts::PI)).ceil() as usize + 50
}

/// The two halves of the smoothed sum at `s0 = k`:
/// `A = sum a_n (sqrt N/(2 pi n))^k Gamma(k, 2 pi n t / sqrt N)`,
/// `B = sum a_n Gamma(0, 2 pi n / (t sqrt N))`, so `Lambda(k) = A + eps B`.
fn two_sum(a: &[i64], level: u64, weight: u32, t: &Float, ctx: &PrecisionContext) -> Result<(Float, Float)> {
    let p = ctx.prec() + 32;
    let w = ctx.with_extra_bits(32);
    let tf = Float::with_val(p, t);
    let n_need = (cutoff(level, ctx) as f64 * tf.to_f64().max(1.0 / tf.to_f64())).ceil() as usize;
    if a.len() <= n_need {
        return Err(Error::InsufficientCoefficients { label: String::new(), need: n_need, have: a.len().saturating_sub(1) });
    }
    let sqrt_n = Float::with_val(p, level).sqrt();
    let x = Float::with_val(p, constants::two_pi(p) / &sqrt_n);
    let mut sa = Float::new(p);
    let mut sb = Float::new(p);
    for (n, &an) in a.iter().enumerate().take(n_need + 1).skip(1) {
        if an == 0 {
            continue;
        }
        let xn = Float::with_val(p, &x * n as u64);
        let xa = Float::with_val(p, &xn * &tf);
        let xb = Float::with_val(p, &xn / &tf);
        let ga = inc_gamma_small(weight, &xa, &w);
        let pw = Float::with_val(p, xn.pow(weight));
        sa += ga / pw * an;
        sb += inc_gamma_small(0, &xb, &w) * an;
    }
    Ok((sa, sb))
}

use rug::ops::Pow;

/// Fricke sign of the table at `level`, by comparing the two-sum at
/// `t = 1.1` and `t = 1/1.1`.
pub fn fricke_detect_table(a: &[i64], level: u64, weight: u32, ctx: &PrecisionContext) -> Option<i32> {
    let p = ctx.prec() + 32;
    let t = Float::with_val(p, 11) / 10u32;
    let ti = Float::with_val(p, 10) / 11u32;
    let (a1, b1) = two_sum(a, level, weight, &t, ctx).ok()?;
    let (a2, b2) = two_sum(a, level, weight, &ti, ctx).ok()?;
    let tol = 10f64.powi(-(ctx.target_digits as i32) / 2);
    let mut hits = vec![];
    for eps in [1i32, -1] {
        let l1 = Float::with_val(p, &b1 * eps) + &a1;
        let l2 = Float::with_val(p, &b2 * eps) + &a2;
        let scale = l1.to_f64().abs().max(l2.to_f64().abs()).max(1e-300);
        let d = Float::with_val(p, &l1 - &l2).abs().to_f64();
        if d <= tol * scale.max(1e-3) {
            hits.push(eps);
        }
    }
    (hits.len() == 1).then(|| hits[0])
}

/// Fricke sign detected from the coefficients, ignoring any declared sign.
pub fn fricke_detect(s: &NewformSpec, ctx: &PrecisionContext) -> Result<i32> {
    let level = resolve(s, ctx)?.level;
    let a = raw_coeffs(s, (cutoff(level, ctx) as f64 * 1.1) as usize + 2)?;
    fricke_detect_table(&a, level, s.weight, ctx).ok_or_else(|| Error::FrickeDetection(s.label.clone()))
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

fn lcm(a: u64, b: u64) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 { a } else { gcd(b, a % b) }
    }
    a / gcd(a, b) * b
}

/// Settle level and Fricke sign. Twists with no declared level try every
/// divisor of `lcm(N, D^2)` and keep the first that satisfies the
/// functional equation.
pub fn resolve(s: &NewformSpec, ctx: &PrecisionContext) -> Result<Arc<ResolvedForm>> {
    let key = (s.label.clone(), ctx.target_digits);
    if let Some(r) = resolved_cache().lock().unwrap().get(&key) {
        return Ok(r.clone());
    }
    let det_ctx = PrecisionContext::new(ctx.target_digits.min(30));
    let (level, level_detected) = match s.level {
        Some(l) => (l, false),
        None => {
            let Source::Twist { base, d } = &s.source else {
                return Err(Error::Precondition(format!("{}: level required", s.label)));
            };
            let b = resolve(&newform(base)?, ctx)?;
            let bound = lcm(b.level, (d * d) as u64);
            let mut found = None;
            for m in divisors(bound) {
                let a = raw_coeffs(s, (cutoff(m, &det_ctx) as f64 * 1.1) as usize + 2)?;
                if fricke_detect_table(&a, m, s.weight, &det_ctx).is_some() {
                    found = Some(m);
                    break;
                }
            }
            (found.ok_or_else(|| Error::FrickeDetection(format!("{}: no level", s.label)))?, true)
        }
    };
    let (fricke, fricke_detected) = match s.fricke.value() {
        Some(e) => (e, false),
        None => {
            let a = raw_coeffs(s, (cutoff(level, &det_ctx) as f64 * 1.1) as usize + 2)?;
            let e = fricke_detect_table(&a, level, s.weight, &det_ctx).ok_or_else(|| Error::FrickeDetection(s.label.clone()))?;
            (e, true)
        }
    };
    let r = Arc::new(ResolvedForm { spec: s.clone(), level, fricke, fricke_detected, level_detected });
    resolved_cache().lock().unwrap().insert(key, r.clone());
    Ok(r)
}

/// `L(f, k)` at the weight.
pub fn l_at_weight(s: &NewformSpec, ctx: &PrecisionContext) -> Result<Float> {
    let r = resolve(s, ctx)?;
    let a = raw_coeffs(s, cutoff(r.level, ctx) + 1).map_err(|e| match e {
        Error::InsufficientCoefficients { need, have, .. } => Error::InsufficientCoefficients { label: s.label.clone(), need, have },
        e => e,
    })?;
    let p = ctx.prec() + 32;
    let one = Float::with_val(p, 1);
    let (sa, sb) = two_sum(&a, r.level, s.weight, &one, ctx).map_err(|e| match e {
        Error::InsufficientCoefficients { need, have, .. } => Error::InsufficientCoefficients { label: s.label.clone(), need, have },
        e => e,
    })?;
    let lambda = sa + sb * r.fricke;
    // L(f,k) = Lambda(k) (2 pi / sqrt N)^k / Gamma(k)
    let scale = Float::with_val(p, constants::two_pi(p) / Float::with_val(p, r.level).sqrt()).pow(s.weight);
    let gk = if s.weight == 3 { 2u32 } else { 1u32 };
    Ok(Float::with_val(ctx.prec(), lambda * scale / gk))
}

/// `L'(f, 0)`: `eps N/(4 pi^2) L(f,2)` in weight 2 and
/// `eps N^{3/2}/(4 pi^3) L(f,3)` in weight 3.
pub fn lprime0(s: &NewformSpec, ctx: &PrecisionContext) -> Result<Float> {
    let r = resolve(s, ctx)?;
    let w = ctx.with_extra_bits(16);
    let p = w.prec();
    let l = l_at_weight(s, &w)?;
    let n = Float::with_val(p, r.level);
    let pi = constants::pi(p);
    let factor = match s.weight {
        2 => n / (pi.square() * 4u32),
        3 => Float::with_val(p, n.sqrt_ref()) * &n / (pi.pow(3u32) * 4u32),
        k => return Err(Error::Precondition(format!("weight {k} not supported"))),
    };
    Ok(Float::with_val(ctx.prec(), l * factor * r.fricke))
}

/// `L'(f, 0)` by label.
pub fn lprime0_label(label: &str, ctx: &PrecisionContext) -> Result<Float> {
    lprime0(&newform(label)?, ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::digits_agreed;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(30)
    }

    #[test]
    fn builtin_signs() {
        let c = ctx();
        for l in ["f27", "f36", "f108", "f32", "f64", "f20", "g12", "g16", "g8", "g48", "g64"] {
            let s = newform(l).unwrap();
            let r = resolve(&s, &c).unwrap();
            assert_eq!(r.fricke, 1, "{l}");
            let a = raw_coeffs(&s, cutoff(r.level, &c) * 2).unwrap();
            assert_eq!(fricke_detect_table(&a, r.level, s.weight, &c), Some(1), "{l}");
        }
    }

    #[test]
    fn twist_levels_detected() {
        let c = ctx();
        assert_eq!(resolve(&newform("g8x8").unwrap(), &c).unwrap().level, 32);
        assert_eq!(resolve(&newform("g8x-3").unwrap(), &c).unwrap().level, 72);
        assert_eq!(resolve(&newform("g12x-4").unwrap(), &c).unwrap().level, 48);
    }

    #[test]
    fn cutoff_doubling_is_stable() {
        let c = ctx();
        let s = newform("f36").unwrap();
        let a = raw_coeffs(&s, 2000).unwrap();
        let p = c.prec() + 32;
        let one = Float::with_val(p, 1);
        let (x1, y1) = two_sum(&a, 36, 2, &one, &c).unwrap();
        let big = PrecisionContext::with_guard(c.target_digits * 2, c.guard_digits);
        let (x2, y2) = two_sum(&a, 36, 2, &one, &big).unwrap();
        let l1 = x1 + y1;
        let l2 = x2 + y2;
        assert!(digits_agreed(&l1, &l2, 80) >= 38);
    }

    #[test]
    fn weight_three_constant() {
        let c = ctx();
        let s = newform("g12").unwrap();
        let d = lprime0(&s, &c).unwrap();
        let l3 = l_at_weight(&s, &c).unwrap();
        let p = c.prec();
        let want = Float::with_val(p, 3).sqrt() * 6u32 / constants::pi(p).pow(3u32);
        assert!(digits_agreed(&(d / l3), &want, 60) >= 35);
    }

    #[test]
    fn missing_file_form() {
        set_coeff_dir(Some(std::env::temp_dir().join("mahler-no-such-dir")));
        assert!(matches!(newform("f448"), Err(Error::MissingData(_))));
        set_coeff_dir(None);
    }
}
