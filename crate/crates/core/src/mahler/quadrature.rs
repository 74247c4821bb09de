//! Torus quadrature for the five families through Jensen's formula.
//!
//! The innermost variable is integrated exactly: at a fixed torus point the
//! fiber polynomial's roots give `log|lead| + sum log max(1,|r|)`. What is
//! left is integrated by adaptive Gauss-Legendre panels, split where a root
//! crosses the unit circle. Each panel is pulled back through the smoothstep
//! map `3u^2 - 2u^3`, which turns the square-root behaviour at a crossing
//! endpoint into an analytic integrand.
//!
//! Two-variable families run in arbitrary precision; the double integrals
//! of the three-variable families run in `f64`.

use super::roots::{jensen_c64, outside_count_c64, roots_big, roots_c64, vieta_defect_c64, RootSet};
use super::{FamilyTag, MahlerFamily};
use crate::error::{Error, Result};
use crate::numerics::{constants, BigComplex, PrecisionContext};
use num_complex::Complex64;
use rayon::prelude::*;
use rug::Float;
use std::collections::HashMap;
use std::f64::consts::TAU;
use std::sync::{Arc, Mutex, OnceLock};

/// Knobs for [`mahler_quadrature`].
#[derive(Clone, Debug)]
pub struct QuadratureConfig {
    /// Gauss-Legendre points per panel in arbitrary precision.
    pub order: usize,
    /// Gauss-Legendre points per panel for the `f64` double integrals.
    pub order_2d: usize,
    /// Maximum bisection depth of a panel.
    pub max_depth: u32,
    /// Roots closer than this to the unit circle at a scan point trigger a
    /// crossing search on the neighbouring interval.
    pub crossing_tol: f64,
    /// Absolute error target for the double integrals.
    pub tol_2d: f64,
    /// Samples used to locate crossings numerically.
    pub scan_points: usize,
    pub scan_points_2d: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            order: 40,
            order_2d: 20,
            max_depth: 40,
            crossing_tol: 1e-3,
            tol_2d: 1e-12,
            scan_points: 1024,
            scan_points_2d: 128,
        }
    }
}

#[derive(Clone, Debug)]
pub struct QuadratureResult {
    /// The (unnormalised) Mahler measure `m(P)`.
    pub value: Float,
    /// Sum over accepted panels of the two-level difference.
    pub error_estimate: f64,
    pub panels: usize,
    pub breakpoints: usize,
}

// ---------------------------------------------------------------- nodes

type Rule = Arc<(Vec<Float>, Vec<Float>)>;

/// Gauss-Legendre nodes and weights on `[0, 1]`, cached per `(n, prec)`.
pub fn gauss_legendre(n: usize, prec: u32) -> Rule {
    static CACHE: OnceLock<Mutex<HashMap<(usize, u32), Rule>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(r) = cache.lock().unwrap().get(&(n, prec)) {
        return r.clone();
    }
    let w = prec + 32;
    let mut xs = Vec::with_capacity(n);
    let mut ws = Vec::with_capacity(n);
    let eps = Float::with_val(w, Float::i_exp(1, -(w as i32) + 8));
    for i in 0..n {
        let guess = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut x = Float::with_val(w, guess);
        let mut dp = Float::new(w);
        for _ in 0..200 {
            let (p, d) = legendre(n, &x);
            let dx = Float::with_val(w, &p / &d);
            x -= &dx;
            dp = d;
            if dx.abs() < eps {
                let (_, d) = legendre(n, &x);
                dp = d;
                break;
            }
        }
        let one_m = Float::with_val(w, 1) - Float::with_val(w, x.square_ref());
        let wt = Float::with_val(w, 2) / (one_m * Float::with_val(w, dp.square_ref()));
        // map [-1,1] -> [0,1]
        xs.push(Float::with_val(prec, (x + 1u32) / 2u32));
        ws.push(Float::with_val(prec, wt / 2u32));
    }
    let rule = Arc::new((xs, ws));
    cache.lock().unwrap().insert((n, prec), rule.clone());
    rule
}

fn legendre(n: usize, x: &Float) -> (Float, Float) {
    let w = x.prec();
    let mut p0 = Float::with_val(w, 1);
    let mut p1 = x.clone();
    for k in 2..=n {
        let a = Float::with_val(w, x * &p1) * (2 * k - 1) as u32;
        let p2 = (a - Float::with_val(w, &p0 * (k - 1) as u32)) / k as u32;
        p0 = p1;
        p1 = p2;
    }
    // P'_n = n (x P_n - P_{n-1}) / (x^2 - 1)
    let num = (Float::with_val(w, x * &p1) - &p0) * n as u32;
    let den = Float::with_val(w, x.square_ref()) - 1u32;
    (p1, num / den)
}

fn gauss_legendre_f64(n: usize) -> Arc<(Vec<f64>, Vec<f64>)> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<(Vec<f64>, Vec<f64>)>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(r) = cache.lock().unwrap().get(&n) {
        return r.clone();
    }
    let r = gauss_legendre(n, 128);
    let out = Arc::new((r.0.iter().map(|x| x.to_f64()).collect(), r.1.iter().map(|x| x.to_f64()).collect()));
    cache.lock().unwrap().insert(n, out.clone());
    out
}

// ----------------------------------------------------- 1-D (P and Q)

#[derive(Clone, Debug)]
enum Fiber1 {
    /// `y^2 + (x + 1/x + k) y + 1`
    P(BigComplex),
    /// `y^3 - k x y + (x^3 + 1)`
    Q(BigComplex),
}

impl Fiber1 {
    fn coeffs(&self, theta: &Float, prec: u32) -> Vec<BigComplex> {
        let ang = Float::with_val(prec, theta * constants::two_pi(prec));
        match self {
            Fiber1::P(k) => {
                let b = &BigComplex::from_real(Float::with_val(prec, ang.cos_ref()) * 2u32) + k;
                vec![BigComplex::one(prec), b, BigComplex::one(prec)]
            }
            Fiber1::Q(k) => {
                let x = BigComplex::cis(&ang);
                let c0 = &x.powi(3) + &BigComplex::one(prec);
                vec![c0, -(k * &x), BigComplex::zero(prec), BigComplex::one(prec)]
            }
        }
    }

    fn roots(&self, theta: &Float, prec: u32) -> Result<(RootSet<BigComplex>, BigComplex)> {
        let c = self.coeffs(theta, prec);
        let rs = roots_big(&c, prec).map_err(|e| Error::RootFinder(format!("theta = {}: {e}", theta.to_f64())))?;
        Ok((rs, c[0].clone()))
    }

    fn value(&self, theta: &Float, prec: u32) -> Result<Float> {
        let (rs, c0) = self.roots(theta, prec)?;
        // Jensen-Vieta consistency at the node
        let c0a = c0.abs();
        if c0a > Float::with_val(64, Float::i_exp(1, -(prec as i32) / 2)) {
            let d = rs.vieta_defect(&c0);
            if d > Float::with_val(64, Float::i_exp(1, -(prec as i32) / 2)) {
                return Err(Error::RootFinder(format!("Vieta check failed at theta = {} (defect {})", theta.to_f64(), d.to_f64())));
            }
        }
        Ok(rs.jensen())
    }

    fn outside_f64(&self, theta: f64) -> Result<usize> {
        let c: Vec<Complex64> = self.coeffs(&Float::with_val(64, theta), 64).iter().map(|z| z.to_c64()).collect();
        Ok(outside_count_c64(&roots_c64(&c)?, 0.0))
    }

    fn min_dist_f64(&self, theta: f64) -> Result<f64> {
        let c: Vec<Complex64> = self.coeffs(&Float::with_val(64, theta), 64).iter().map(|z| z.to_c64()).collect();
        Ok(roots_c64(&c)?.iter().map(|r| (r.norm() - 1.0).abs()).fold(f64::INFINITY, f64::min))
    }
}

/// Domain `[0, end]` and multiplicity `mult` covering the full period.
fn domain_1d(f: &Fiber1, p: u32) -> (Float, u32) {
    match f {
        Fiber1::P(_) => (Float::with_val(p, 0.5), 2),
        Fiber1::Q(k) if k.im.is_zero() => (Float::with_val(p, 1) / 6u32, 6),
        Fiber1::Q(_) => (Float::with_val(p, 1) / 3u32, 3),
    }
}

fn breakpoints_1d(f: &Fiber1, end: &Float, cfg: &QuadratureConfig, prec: u32) -> Result<Vec<Float>> {
    let mut out = Vec::new();
    match f {
        Fiber1::P(k) if k.im.is_zero() => {
            // |2 cos(2 pi theta) + k| = 2
            for s in [2i32, -2] {
                let c = Float::with_val(prec, (Float::with_val(prec, s) - &k.re) / 2u32);
                if c.clone().abs() <= 1 {
                    let th = c.acos() / constants::two_pi(prec);
                    if th > 0 && th < *end {
                        out.push(th);
                    }
                }
            }
        }
        Fiber1::P(_) => {}
        Fiber1::Q(_) => {
            let n = cfg.scan_points;
            let e = end.to_f64();
            let ts: Vec<f64> = (0..=n).map(|i| e * (i as f64 + 0.5) / (n as f64 + 1.0)).collect();
            let counts: Vec<Result<usize>> = ts.par_iter().map(|&t| f.outside_f64(t)).collect();
            let counts: Vec<usize> = counts.into_iter().collect::<Result<_>>()?;
            for i in 0..n {
                let near = counts[i] != counts[i + 1]
                    || (f.min_dist_f64(ts[i])? < cfg.crossing_tol && f.min_dist_f64(ts[i + 1])? < cfg.crossing_tol);
                if !near {
                    continue;
                }
                if let Some(x) = bisect_crossing(f, ts[i], ts[i + 1], prec)? {
                    out.push(x);
                }
            }
        }
    }
    out.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(out)
}

/// Refines a change in the number of roots outside the unit circle to full
/// precision; `None` when both ends agree at high precision.
fn bisect_crossing(f: &Fiber1, a: f64, b: f64, prec: u32) -> Result<Option<Float>> {
    let mut lo = Float::with_val(prec, a);
    let mut hi = Float::with_val(prec, b);
    let c_lo = f.roots(&lo, prec)?.0.outside_count();
    let c_hi = f.roots(&hi, prec)?.0.outside_count();
    if c_lo == c_hi {
        return Ok(None);
    }
    for _ in 0..prec + 8 {
        let mid = Float::with_val(prec, &lo + &hi) / 2u32;
        if mid == lo || mid == hi {
            break;
        }
        if f.roots(&mid, prec)?.0.outside_count() == c_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(Some(hi))
}

fn smooth(u: &Float) -> (Float, Float) {
    let p = u.prec();
    let u2 = Float::with_val(p, u.square_ref());
    let s = Float::with_val(p, &u2 * 3u32) - Float::with_val(p, &u2 * u) * 2u32;
    let ds = Float::with_val(p, u * 6u32) * (Float::with_val(p, 1) - u);
    (s, ds)
}

fn panel_1d(f: &Fiber1, a: &Float, b: &Float, rule: &Rule, prec: u32) -> Result<Float> {
    let len = Float::with_val(prec, b - a);
    let vals: Vec<Result<Float>> = (0..rule.0.len())
        .into_par_iter()
        .map(|i| {
            let (s, ds) = smooth(&rule.0[i]);
            let x = Float::with_val(prec, &len * &s) + a;
            let v = f.value(&x, prec)?;
            Ok(v * ds * &rule.1[i])
        })
        .collect();
    let mut acc = Float::new(prec);
    for v in vals {
        acc += v?;
    }
    Ok(acc * len)
}

struct Adapt1<'a> {
    f: &'a Fiber1,
    rule: Rule,
    prec: u32,
    tol_per_len: Float,
    max_depth: u32,
    panels: usize,
    err: f64,
}

impl Adapt1<'_> {
    fn run(&mut self, a: &Float, b: &Float, whole: Float, depth: u32) -> Result<Float> {
        let m = Float::with_val(self.prec, a + b) / 2u32;
        let l = panel_1d(self.f, a, &m, &self.rule, self.prec)?;
        let r = panel_1d(self.f, &m, b, &self.rule, self.prec)?;
        let both = Float::with_val(self.prec, &l + &r);
        let diff = Float::with_val(self.prec, &both - &whole).abs();
        let tol = Float::with_val(self.prec, b - a) * &self.tol_per_len;
        if diff <= tol {
            self.panels += 2;
            self.err += diff.to_f64();
            return Ok(both);
        }
        if depth >= self.max_depth {
            return Err(Error::Quadrature(format!("depth {} reached on [{}, {}]", depth, a.to_f64(), b.to_f64())));
        }
        let x = self.run(a, &m, l, depth + 1)?;
        let y = self.run(&m, b, r, depth + 1)?;
        Ok(x + y)
    }
}

fn quad_1d(f: &Fiber1, ctx: &PrecisionContext, cfg: &QuadratureConfig) -> Result<QuadratureResult> {
    let prec = ctx.prec() + 24;
    let (end, mult) = domain_1d(f, prec);
    let mut pts = vec![Float::new(prec)];
    let bps = breakpoints_1d(f, &end, cfg, prec)?;
    let nbp = bps.len();
    pts.extend(bps);
    pts.push(end.clone());
    let ten = Float::with_val(prec, 10);
    let tol = rug::ops::Pow::pow(ten, -(ctx.target_digits as i32 + 4));
    let mut ad = Adapt1 {
        f,
        rule: gauss_legendre(cfg.order, prec),
        prec,
        tol_per_len: Float::with_val(prec, tol / &end),
        max_depth: cfg.max_depth,
        panels: 0,
        err: 0.0,
    };
    let mut total = Float::new(prec);
    for w in pts.windows(2) {
        if w[1] <= w[0] {
            continue;
        }
        let whole = panel_1d(f, &w[0], &w[1], &ad.rule, prec)?;
        total += ad.run(&w[0], &w[1], whole, 0)?;
    }
    Ok(QuadratureResult {
        value: Float::with_val(ctx.prec(), total * mult),
        error_estimate: ad.err * mult as f64,
        panels: ad.panels,
        breakpoints: nbp,
    })
}

// ------------------------------------------------ 2-D (A, B and C)

#[derive(Clone, Copy, Debug)]
enum Fiber2 {
    /// `c z^2 + r z + c`, `c = 4 cos cos`, `r = s^{1/2}`
    A(Complex64),
    /// `c (1+z)^3 - s z^2`, `c = 16 cos^2 cos^2`
    B(Complex64),
    /// `z^4 + k x y z + (x^4 + y^4 + 1)`, `k = s^{1/4}`
    C(Complex64),
}

impl Fiber2 {
    fn coeffs(&self, t1: f64, t2: f64) -> Vec<Complex64> {
        let z = |v: f64| Complex64::new(v, 0.0);
        match *self {
            Fiber2::A(r) => {
                let c = 4.0 * (TAU * t1).cos() * (TAU * t2).cos();
                vec![z(c), r, z(c)]
            }
            Fiber2::B(s) => {
                let c = 16.0 * ((TAU * t1).cos() * (TAU * t2).cos()).powi(2);
                vec![z(c), z(3.0 * c), z(3.0 * c) - s, z(c)]
            }
            Fiber2::C(k) => {
                let x = Complex64::from_polar(1.0, TAU * t1);
                let y = Complex64::from_polar(1.0, TAU * t2);
                vec![x.powi(4) + y.powi(4) + 1.0, k * x * y, z(0.0), z(0.0), z(1.0)]
            }
        }
    }

    fn value(&self, t1: f64, t2: f64) -> Result<f64> {
        let c = self.coeffs(t1, t2);
        let r = roots_c64(&c).map_err(|e| Error::RootFinder(format!("torus point ({t1}, {t2}): {e}")))?;
        if c[0].norm() > 1e-12 && vieta_defect_c64(&c, &r) > 1e-8 {
            return Err(Error::RootFinder(format!("Vieta check failed at torus point ({t1}, {t2})")));
        }
        Ok(jensen_c64(c[c.len() - 1], &r))
    }

    fn outside(&self, t1: f64, t2: f64) -> Result<usize> {
        Ok(outside_count_c64(&roots_c64(&self.coeffs(t1, t2))?, 0.0))
    }

    fn min_dist(&self, t1: f64, t2: f64) -> Result<f64> {
        Ok(roots_c64(&self.coeffs(t1, t2))?.iter().map(|r| (r.norm() - 1.0).abs()).fold(f64::INFINITY, f64::min))
    }

    fn real_param(&self) -> Option<f64> {
        let v = match *self {
            Fiber2::A(r) => r,
            Fiber2::B(s) => s,
            Fiber2::C(_) => return None,
        };
        (v.im == 0.0 && v.re > 0.0).then_some(v.re)
    }

    /// Closed-form crossing abscissae in the inner variable.
    fn inner_breaks(&self, t1: f64, cfg: &QuadratureConfig) -> Result<Vec<f64>> {
        let mut out = Vec::new();
        let c1 = (TAU * t1).cos();
        match (self, self.real_param()) {
            (Fiber2::A(_), Some(r)) => {
                let v = r / (8.0 * c1);
                if v.abs() <= 1.0 {
                    out.push(v.acos() / TAU);
                }
            }
            (Fiber2::B(_), Some(s)) => {
                let v = s / (128.0 * c1 * c1);
                if v <= 1.0 {
                    out.push(v.sqrt().acos() / TAU);
                }
            }
            _ => {
                let n = cfg.scan_points_2d;
                let ts: Vec<f64> = (0..=n).map(|i| 0.25 * (i as f64 + 0.5) / (n as f64 + 1.0)).collect();
                let mut prev = self.outside(t1, ts[0])?;
                for i in 0..n {
                    let cur = self.outside(t1, ts[i + 1])?;
                    if cur != prev {
                        out.push(self.bisect(t1, ts[i], ts[i + 1], prev)?);
                    } else if self.min_dist(t1, ts[i])? < cfg.crossing_tol && self.min_dist(t1, ts[i + 1])? < cfg.crossing_tol {
                        // near-tangent pass: split at the closest approach
                        out.push(self.closest(t1, ts[i], ts[i + 1])?);
                    }
                    prev = cur;
                }
            }
        }
        out.retain(|&x| x > 0.0 && x < 0.25);
        out.sort_by(|a, b| a.partial_cmp(b).unwrap());
        Ok(out)
    }

    fn outer_breaks(&self) -> Vec<f64> {
        let v = match (self, self.real_param()) {
            (Fiber2::A(_), Some(r)) => r / 8.0,
            (Fiber2::B(_), Some(s)) => (s / 128.0).sqrt(),
            _ => return vec![],
        };
        if v < 1.0 {
            vec![v.acos() / TAU]
        } else {
            vec![]
        }
    }

    fn bisect(&self, t1: f64, mut lo: f64, mut hi: f64, c_lo: usize) -> Result<f64> {
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if self.outside(t1, mid)? == c_lo {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok(0.5 * (lo + hi))
    }

    fn closest(&self, t1: f64, mut lo: f64, mut hi: f64) -> Result<f64> {
        let g = 0.5 * (5f64.sqrt() - 1.0);
        for _ in 0..60 {
            let a = hi - g * (hi - lo);
            let b = lo + g * (hi - lo);
            if self.min_dist(t1, a)? < self.min_dist(t1, b)? {
                hi = b;
            } else {
                lo = a;
            }
        }
        Ok(0.5 * (lo + hi))
    }
}

fn panel_f64<F: Fn(f64) -> Result<f64> + Sync>(f: &F, a: f64, b: f64, rule: &(Vec<f64>, Vec<f64>), par: bool) -> Result<f64> {
    let eval = |i: usize| -> Result<f64> {
        let u = rule.0[i];
        let s = u * u * (3.0 - 2.0 * u);
        let ds = 6.0 * u * (1.0 - u);
        Ok(f(a + (b - a) * s)? * ds * rule.1[i])
    };
    let vals: Vec<Result<f64>> =
        if par { (0..rule.0.len()).into_par_iter().map(eval).collect() } else { (0..rule.0.len()).map(eval).collect() };
    let mut acc = 0.0;
    for v in vals {
        acc += v?;
    }
    Ok(acc * (b - a))
}

#[allow(clippy::too_many_arguments)]
fn adapt_f64<F: Fn(f64) -> Result<f64> + Sync>(
    f: &F,
    a: f64,
    b: f64,
    whole: f64,
    tol_per_len: f64,
    depth: u32,
    max_depth: u32,
    rule: &(Vec<f64>, Vec<f64>),
    par: bool,
    stats: &mut (usize, f64),
) -> Result<f64> {
    let m = 0.5 * (a + b);
    let l = panel_f64(f, a, m, rule, par)?;
    let r = panel_f64(f, m, b, rule, par)?;
    let diff = (l + r - whole).abs();
    // below ~1e-15 relative the difference is rounding noise
    if diff <= tol_per_len * (b - a) || diff <= 1e-15 * (l.abs() + r.abs()) {
        stats.0 += 2;
        stats.1 += diff;
        return Ok(l + r);
    }
    if depth >= max_depth || b - a < 1e-13 {
        return Err(Error::Quadrature(format!("depth {depth} reached on [{a}, {b}]")));
    }
    Ok(adapt_f64(f, a, m, l, tol_per_len, depth + 1, max_depth, rule, par, stats)?
        + adapt_f64(f, m, b, r, tol_per_len, depth + 1, max_depth, rule, par, stats)?)
}

fn integrate_f64<F: Fn(f64) -> Result<f64> + Sync>(
    f: &F,
    breaks: &[f64],
    end: f64,
    tol: f64,
    cfg: &QuadratureConfig,
    par: bool,
    stats: &mut (usize, f64),
) -> Result<f64> {
    let rule = gauss_legendre_f64(cfg.order_2d);
    let mut pts = vec![0.0];
    pts.extend(breaks.iter().copied().filter(|&x| x > 0.0 && x < end));
    pts.push(end);
    let mut total = 0.0;
    for w in pts.windows(2) {
        if w[1] <= w[0] {
            continue;
        }
        let whole = panel_f64(f, w[0], w[1], &rule, par)?;
        total += adapt_f64(f, w[0], w[1], whole, tol / end, 0, cfg.max_depth, &rule, par, stats)?;
    }
    Ok(total)
}

fn quad_2d(f: Fiber2, ctx: &PrecisionContext, cfg: &QuadratureConfig) -> Result<QuadratureResult> {
    let inner_tol = cfg.tol_2d * 0.1;
    let inner = |t1: f64| -> Result<f64> {
        let br = f.inner_breaks(t1, cfg)?;
        let mut st = (0, 0.0);
        integrate_f64(&|t2| f.value(t1, t2), &br, 0.25, inner_tol, cfg, false, &mut st)
    };
    let mut stats = (0usize, 0.0f64);
    let v = integrate_f64(&inner, &f.outer_breaks(), 0.25, cfg.tol_2d, cfg, true, &mut stats)?;
    Ok(QuadratureResult {
        value: Float::with_val(ctx.prec(), v * 16.0),
        error_estimate: (stats.1 + cfg.tol_2d) * 16.0,
        panels: stats.0,
        breakpoints: f.outer_breaks().len(),
    })
}

// ------------------------------------------------------------ entry

/// `m(P)` for a family member by Jensen reduction and adaptive quadrature.
pub fn mahler_quadrature(fam: &MahlerFamily, ctx: &PrecisionContext, cfg: &QuadratureConfig) -> Result<QuadratureResult> {
    let prec = ctx.prec() + 24;
    let par = fam.parameter.with_prec(prec);
    if !par.is_finite() {
        return Err(Error::Precondition("parameter is not finite".into()));
    }
    let c64 = |z: &BigComplex| z.to_c64();
    match fam.tag {
        FamilyTag::P => quad_1d(&Fiber1::P(par), ctx, cfg),
        FamilyTag::Q => quad_1d(&Fiber1::Q(par), ctx, cfg),
        FamilyTag::A => quad_2d(Fiber2::A(c64(&par.sqrt())), ctx, cfg),
        FamilyTag::B => quad_2d(Fiber2::B(c64(&par)), ctx, cfg),
        FamilyTag::C => {
            let k = par.sqrt().sqrt();
            quad_2d(Fiber2::C(c64(&k)), ctx, cfg)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_rule_integrates_polynomials() {
        let r = gauss_legendre(10, 128);
        // int_0^1 x^19 = 1/20
        let mut acc = Float::new(128);
        for (x, w) in r.0.iter().zip(&r.1) {
            acc += Float::with_val(128, x.clone().pow(19u32)) * w;
        }
        let d = (acc - Float::with_val(128, 1) / 20u32).abs();
        assert!(d < 1e-35, "{d}");
    }

    use rug::ops::Pow;
}
