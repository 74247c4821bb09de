//! Evaluates registry identities and reports digits of agreement.

use super::registry::{registry, find, Atom, Expr, HyperFamily, IdentityRecord, Status};
use crate::error::{Error, Result};
use crate::hypergeom::{pfq, HyperParams};
use crate::lfunc;
use crate::mahler::{self, QuadratureConfig, Route};
use crate::modular::Tau;
use crate::numerics::{digits_agreed, fmt_float, BigComplex, PrecisionContext};
use rayon::prelude::*;
use rug::Float;
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};
use std::time::Instant;

/// How an identity is evaluated.
#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub ctx: PrecisionContext,
    pub quad: QuadratureConfig,
    /// Replaces the route order for every measure atom.
    pub routes: Option<Vec<Route>>,
    pub min_digits: Option<u32>,
}

impl VerifyOptions {
    pub fn new(ctx: PrecisionContext) -> Self {
        VerifyOptions { ctx, quad: QuadratureConfig::default(), routes: None, min_digits: None }
    }
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self::new(PrecisionContext::new(PrecisionContext::DEFAULT_TARGET))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub status: Status,
    /// "verified", "consistent to N digits", "FAILED", "skipped: missing data" or "error".
    pub outcome: String,
    /// `None` when skipped.
    pub passed: Option<bool>,
    pub lhs_value: String,
    pub rhs_value: String,
    pub abs_diff: String,
    pub digits_agreed: i64,
    pub min_digits: u32,
    pub routes_used: Vec<String>,
    pub warnings: Vec<String>,
    /// Seconds.
    pub elapsed: f64,
}

impl VerificationReport {
    pub fn skipped(&self) -> bool {
        self.passed.is_none()
    }

    pub fn text_line(&self) -> String {
        let mark = match self.passed {
            Some(true) => "PASS",
            Some(false) => "FAIL",
            None => "SKIP",
        };
        let mut s = format!(
            "{mark} {:<18} {:<18} digits {:>3}/{:<3} {:>7.2}s  {}",
            self.id,
            self.status.name(),
            self.digits_agreed,
            self.min_digits,
            self.elapsed,
            self.outcome
        );
        if !self.routes_used.is_empty() {
            s.push_str(&format!("  [{}]", self.routes_used.join(", ")));
        }
        for w in &self.warnings {
            s.push_str(&format!("\n       warning: {w}"));
        }
        s
    }
}

// ------------------------------------------------------------ L-value cache

type LCache = Mutex<HashMap<(String, PrecisionContext), Float>>;

fn l_cache() -> &'static LCache {
    static C: OnceLock<LCache> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

fn lprime0_cached(label: &str, ctx: &PrecisionContext) -> Result<Float> {
    let key = (label.to_string(), *ctx);
    if let Some(v) = l_cache().lock().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let v = lfunc::lprime0_label(label, ctx)?;
    l_cache().lock().unwrap().insert(key, v.clone());
    Ok(v)
}

/// Drop cached L-values (after the coefficient directory changes).
pub fn clear_cache() {
    l_cache().lock().unwrap().clear();
}

// ------------------------------------------------------------ evaluation

struct SideLog {
    routes: Vec<String>,
    warnings: Vec<String>,
}

fn route_order(rec: &IdentityRecord, opts: &VerifyOptions) -> Vec<Route> {
    if let Some(r) = &opts.routes {
        return r.clone();
    }
    let mut v = rec.route_hint.clone();
    for r in Route::PREFERENCE {
        if !v.contains(&r) {
            v.push(r);
        }
    }
    v
}

fn eval_atom(atom: &Atom, routes: &[Route], opts: &VerifyOptions, log: &mut SideLog) -> Result<Float> {
    let ctx = &opts.ctx;
    let p = ctx.prec();
    match atom {
        Atom::Measure { measure, param, tau } => {
            let x = param.render(ctx);
            let t = match tau {
                Some(t) => Some(Tau::parse(t, ctx)?),
                None => None,
            };
            if let Some(w) = mahler::torus_vanishing_warning(*measure, &x) {
                log.warnings.push(w);
            }
            let v = mahler::evaluate(*measure, &x, t.as_ref(), routes, ctx, &opts.quad)?;
            log.routes.push(format!("{atom}: {}", v.route));
            for n in v.notes {
                if !log.warnings.contains(&n) {
                    log.warnings.push(n);
                }
            }
            Ok(v.value)
        }
        Atom::Hyper { family, arg } => {
            let upper: &[(i64, i64)] = match family {
                HyperFamily::M2 => &[(3, 2), (3, 2), (1, 1), (1, 1)],
                HyperFamily::M3 => &[(4, 3), (5, 3), (1, 1), (1, 1)],
            };
            let h = HyperParams::new(upper, &[(2, 1), (2, 1), (2, 1)], arg.render(ctx));
            log.routes.push(format!("{atom}: series"));
            Ok(pfq(&h, ctx)?.re)
        }
        Atom::Log(x) => Ok(x.render(ctx).abs().ln()),
        Atom::LPrime0(l) => lprime0_cached(l, ctx),
        Atom::Dk(k) => {
            let key = format!("d{k}");
            if let Some(v) = l_cache().lock().unwrap().get(&(key.clone(), *ctx)) {
                return Ok(v.clone());
            }
            let v = lfunc::d_k(*k, ctx)?;
            l_cache().lock().unwrap().insert((key, *ctx), v.clone());
            Ok(Float::with_val(p, v))
        }
    }
}

fn eval_expr(e: &Expr, routes: &[Route], opts: &VerifyOptions, log: &mut SideLog) -> Result<Float> {
    let p = opts.ctx.prec();
    let mut acc = BigComplex::zero(p);
    for t in &e.0 {
        let v = BigComplex::from_real(eval_atom(&t.atom, routes, opts, log)?);
        acc = &acc + &(&t.coef.render(&opts.ctx) * &v);
    }
    Ok(acc.re)
}

/// The rhs with every `L'(f,0)` replaced by `|L'(f,0)| = N L(f,2)/(4 pi^2)`,
/// and the labels whose sign changed. `None` when no sign changes.
fn rhs_with_abs_lprime(e: &Expr, routes: &[Route], opts: &VerifyOptions) -> Result<Option<(Float, Vec<String>)>> {
    let p = opts.ctx.prec();
    let mut log = SideLog { routes: vec![], warnings: vec![] };
    let mut acc = BigComplex::zero(p);
    let mut flipped = vec![];
    for t in &e.0 {
        let mut v = eval_atom(&t.atom, routes, opts, &mut log)?;
        if let Atom::LPrime0(l) = &t.atom {
            if v.is_sign_negative() {
                v = -v;
                flipped.push(l.clone());
            }
        }
        acc = &acc + &(&t.coef.render(&opts.ctx) * &BigComplex::from_real(v));
    }
    Ok((!flipped.is_empty()).then_some((acc.re, flipped)))
}

/// Superscripted labels `gN_i` (possibly twisted) grouped by level.
fn superscript_groups(e: &Expr) -> BTreeMap<String, Vec<String>> {
    let mut g: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for l in e.labels() {
        let base = l.split('x').next().unwrap_or(l);
        if let Some((lvl, idx)) = base.split_once('_') {
            let v = g.entry(lvl.to_string()).or_default();
            if !v.iter().any(|x| x == idx) {
                v.push(idx.to_string());
            }
        }
    }
    g.retain(|_, v| v.len() > 1);
    for v in g.values_mut() {
        v.sort();
    }
    g
}

fn permutations(v: &[String]) -> Vec<Vec<String>> {
    if v.len() <= 1 {
        return vec![v.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..v.len() {
        let mut rest = v.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x.clone());
            out.push(p);
        }
    }
    out
}

/// All relabellings of `e` that permute superscripts within each level.
fn relabellings(e: &Expr) -> Vec<(Expr, Vec<String>)> {
    let groups: Vec<(String, Vec<String>)> = superscript_groups(e).into_iter().collect();
    let mut maps: Vec<HashMap<String, String>> = vec![HashMap::new()];
    for (lvl, idx) in &groups {
        let mut next = Vec::new();
        for m in &maps {
            for perm in permutations(idx) {
                let mut m = m.clone();
                for (a, b) in idx.iter().zip(&perm) {
                    m.insert(format!("{lvl}_{a}"), format!("{lvl}_{b}"));
                }
                next.push(m);
            }
        }
        maps = next;
    }
    maps.into_iter()
        .filter(|m| m.iter().any(|(a, b)| a != b))
        .map(|m| {
            let mut desc: Vec<String> = m.iter().filter(|(a, b)| a != b).map(|(a, b)| format!("{a}->{b}")).collect();
            desc.sort();
            let terms = e
                .0
                .iter()
                .map(|t| {
                    let mut t = t.clone();
                    if let Atom::LPrime0(l) = &t.atom {
                        let (base, tw) = match l.split_once('x') {
                            Some((b, d)) => (b, Some(d)),
                            None => (l.as_str(), None),
                        };
                        if let Some(nb) = m.get(base) {
                            t.atom = Atom::LPrime0(match tw {
                                Some(d) => format!("{nb}x{d}"),
                                None => nb.clone(),
                            });
                        }
                    }
                    t
                })
                .collect();
            (Expr(terms), desc)
        })
        .collect()
}

fn missing_labels(rec: &IdentityRecord) -> Vec<String> {
    rec.external_labels()
        .into_iter()
        .filter(|l| matches!(lfunc::newform(l), Err(Error::MissingData(_))))
        .collect()
}

/// Evaluates one record.
pub fn evaluate_record(rec: &IdentityRecord, opts: &VerifyOptions) -> VerificationReport {
    let start = Instant::now();
    let digits = opts.ctx.target_digits as usize;
    let min_digits = opts.min_digits.unwrap_or(rec.min_digits);
    let mut report = VerificationReport {
        id: rec.id.clone(),
        status: rec.status,
        outcome: String::new(),
        passed: None,
        lhs_value: String::new(),
        rhs_value: String::new(),
        abs_diff: String::new(),
        digits_agreed: 0,
        min_digits,
        routes_used: vec![],
        warnings: vec![],
        elapsed: 0.0,
    };
    let missing = missing_labels(rec);
    if !missing.is_empty() {
        report.outcome = "skipped: missing data".into();
        report.warnings.push(format!("missing coefficient files for {}", missing.join(", ")));
        report.elapsed = start.elapsed().as_secs_f64();
        return report;
    }
    let routes = route_order(rec, opts);
    let mut log = SideLog { routes: vec![], warnings: vec![] };
    let res = (|| -> Result<(Float, Float, Option<Vec<String>>)> {
        let lhs = eval_expr(&rec.lhs, &routes, opts, &mut log)?;
        let rhs = eval_expr(&rec.rhs, &routes, opts, &mut log)?;
        let cap = opts.ctx.work_digits() as i64;
        if digits_agreed(&lhs, &rhs, cap) >= min_digits as i64 {
            return Ok((lhs, rhs, None));
        }
        for (alt, desc) in relabellings(&rec.rhs) {
            let mut scratch = SideLog { routes: vec![], warnings: vec![] };
            let r = eval_expr(&alt, &routes, opts, &mut scratch)?;
            if digits_agreed(&lhs, &r, cap) >= min_digits as i64 {
                return Ok((lhs, r, Some(desc)));
            }
        }
        Ok((lhs, rhs, None))
    })();
    report.routes_used = log.routes;
    report.warnings = log.warnings;
    if !superscript_groups(&rec.rhs).is_empty() || rec.rhs.labels().iter().any(|l| l.contains('_')) {
        report.warnings.push("label-assignment: empirical".into());
    }
    match res {
        Ok((lhs, rhs, relabel)) => {
            if let Some(d) = relabel {
                report.warnings.push(format!("label-assignment: empirical, superscripts permuted ({})", d.join(", ")));
            }
            let p = opts.ctx.prec();
            let diff = Float::with_val(p, &lhs - &rhs).abs();
            let da = digits_agreed(&lhs, &rhs, opts.ctx.work_digits() as i64);
            report.lhs_value = fmt_float(&lhs, digits);
            report.rhs_value = fmt_float(&rhs, digits);
            report.abs_diff = fmt_float(&diff, 6);
            report.digits_agreed = da;
            let pass = da >= min_digits as i64;
            report.passed = Some(pass);
            report.outcome = match (pass, rec.status) {
                (true, Status::Proved) => "verified".into(),
                (true, _) => format!("consistent to {da} digits"),
                (false, _) => format!("FAILED: {da} digits < {min_digits}"),
            };
            if !pass {
                if let Ok(Some((alt, labels))) = rhs_with_abs_lprime(&rec.rhs, &routes, opts) {
                    let d = digits_agreed(&lhs, &alt, opts.ctx.work_digits() as i64);
                    if d >= min_digits as i64 {
                        report.warnings.push(format!(
                            "root number -1 for {}: agrees to {d} digits with L'(f,0) read as N L(f,2)/(4 pi^2)",
                            labels.join(", ")
                        ));
                    }
                }
                for f in &rec.flags {
                    report.warnings.push(f.clone());
                }
            }
        }
        Err(Error::MissingData(m)) => {
            report.outcome = "skipped: missing data".into();
            report.warnings.push(m);
        }
        Err(e) => {
            report.passed = Some(false);
            report.outcome = format!("error: {e}");
        }
    }
    report.elapsed = start.elapsed().as_secs_f64();
    report
}

/// Evaluates the identity `id` at `ctx` with the default routes.
pub fn evaluate_identity(id: &str, ctx: &PrecisionContext) -> Result<VerificationReport> {
    Ok(evaluate_record(find(id)?, &VerifyOptions::new(*ctx)))
}

#[derive(Clone, Debug, Default)]
pub struct SuiteFilter {
    pub status: Option<Status>,
    pub table: Option<u8>,
    pub id_prefix: Option<String>,
}

impl SuiteFilter {
    pub fn matches(&self, r: &IdentityRecord) -> bool {
        self.status.is_none_or(|s| r.status == s)
            && self.table.is_none_or(|t| r.table == Some(t))
            && self.id_prefix.as_deref().is_none_or(|p| r.id.starts_with(p))
    }
}

pub fn select(filter: &SuiteFilter) -> Vec<&'static IdentityRecord> {
    registry().iter().filter(|r| filter.matches(r)).collect()
}

/// Runs every matching identity in parallel; the output keeps registry order.
pub fn run_suite(filter: &SuiteFilter, opts: &VerifyOptions) -> Vec<VerificationReport> {
    select(filter).par_iter().map(|r| evaluate_record(r, opts)).collect()
}

/// True iff every proved, non-skipped report passed.
pub fn proved_all_pass(reports: &[VerificationReport]) -> bool {
    reports.iter().filter(|r| r.status == Status::Proved).all(|r| r.passed != Some(false))
}

pub fn to_json(reports: &[VerificationReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}
