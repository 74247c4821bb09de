//! Brute-force lattice sums `sum' F(m,n)` over square shells with Richardson
//! extrapolation in `1/R`, the Eisenstein-Kronecker series for `m3` and
//! `n4`, and exact congruence-class theta identities.

use crate::error::{Error, Result};
use crate::lfunc::{self, dirichlet_l, kronecker, DirichletChar, ThetaSpec};
use crate::modular::{gamma0_3_domain, DomainMembership, Tau};
use crate::numerics::{PrecisionContext, SeriesResult};
use rayon::prelude::*;
use rug::Float;
use std::f64::consts::PI;

/// Default radius for sums whose terms decay like `r^-3` or `r^-4`.
pub const RADIUS_EXP2: usize = 4000;
/// Default radius for sums with cubed denominators.
pub const RADIUS_EXP3: usize = 600;
/// Number of partial sums fed to the extrapolation.
pub const EXTRAPOLATION_POINTS: usize = 8;

#[derive(Clone, Debug, PartialEq)]
pub enum Numerator {
    /// `m chi_D(m)`
    MChi(i64),
    /// `a m + b n`
    Linear(i64, i64),
    /// `a m^2 + b n^2`
    Quadratic(i64, i64),
    One,
}

/// `sum F(m,n) / (a m^2 + b n^2)^e` over the given residue classes.
#[derive(Clone, Debug, PartialEq)]
pub struct EKSumSpec {
    pub numerator: Numerator,
    pub form: (i64, i64),
    pub exponent: u32,
    /// `(modulus, classes)`; `None` sums over all of `Z^2`.
    pub classes: Option<(i64, Vec<(i64, i64)>)>,
    pub exclude_origin: bool,
}

impl EKSumSpec {
    pub fn new(numerator: Numerator, form: (i64, i64), exponent: u32) -> Self {
        EKSumSpec { numerator, form, exponent, classes: None, exclude_origin: true }
    }

    pub fn with_classes(mut self, modulus: i64, classes: &[(i64, i64)]) -> Self {
        self.classes = Some((modulus, classes.to_vec()));
        self
    }

    fn period(&self) -> usize {
        let mut p = self.classes.as_ref().map_or(1, |c| c.0 as usize);
        if let Numerator::MChi(d) = self.numerator {
            p = lcm(p, d.unsigned_abs() as usize);
        }
        p
    }

    fn term(&self, m: i64, n: i64) -> f64 {
        if let Some((md, cl)) = &self.classes {
            if !cl.iter().any(|&(a, b)| (m - a).rem_euclid(*md) == 0 && (n - b).rem_euclid(*md) == 0) {
                return 0.0;
            }
        }
        let num = match self.numerator {
            Numerator::MChi(d) => (m * kronecker(d, m) as i64) as f64,
            Numerator::Linear(a, b) => (a * m + b * n) as f64,
            Numerator::Quadratic(a, b) => (a * m * m + b * n * n) as f64,
            Numerator::One => 1.0,
        };
        if num == 0.0 {
            return 0.0;
        }
        let q = (self.form.0 * m * m + self.form.1 * n * n) as f64;
        num / q.powi(self.exponent as i32)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 { a } else { gcd(b, a % b) }
    }
    a / gcd(a, b) * b
}

/// Neumaier-compensated accumulator.
#[derive(Clone, Copy, Default)]
struct Kahan {
    sum: f64,
    c: f64,
}

impl Kahan {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.c += (self.sum - t) + x;
        } else {
            self.c += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.c
    }
}

/// Sum of `f` over the shell `max(|m|,|n|) = r`.
fn shell<F: Fn(i64, i64) -> f64>(f: &F, r: i64) -> f64 {
    let mut k = Kahan::default();
    if r == 0 {
        k.add(f(0, 0));
        return k.value();
    }
    for i in -r..=r {
        k.add(f(i, r));
        k.add(f(i, -r));
    }
    for i in -r + 1..r {
        k.add(f(r, i));
        k.add(f(-r, i));
    }
    k.value()
}

/// Result of a shell sum with extrapolation.
#[derive(Clone, Debug)]
pub struct ShellSum {
    pub value: f64,
    pub error: f64,
    /// Partial sums at the extrapolation radii.
    pub partials: Vec<(usize, f64)>,
}

/// Radii `(j+1) R / 8` rounded down to multiples of `period`.
fn radii(radius: usize, period: usize) -> Result<Vec<usize>> {
    let rs: Vec<usize> = (1..=EXTRAPOLATION_POINTS).map(|j| (j * radius / EXTRAPOLATION_POINTS) / period * period).collect();
    if rs[0] == 0 || rs.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::RadiusTooSmall(radius));
    }
    Ok(rs)
}

/// Neville extrapolation of `(h_i, y_i)` to `h = 0`.
fn neville_at_zero(h: &[f64], y: &[f64]) -> f64 {
    let mut p = y.to_vec();
    let n = p.len();
    for k in 1..n {
        for i in (k..n).rev() {
            p[i] = (h[i] * p[i - 1] - h[i - k] * p[i]) / (h[i] - h[i - k]);
        }
    }
    p[n - 1]
}

/// Shell-ordered sum of `f` (origin skipped when `exclude_origin`), partial
/// sums recorded at eight radii and extrapolated polynomially in `1/R`.
pub fn shell_sum<F>(f: F, radius: usize, period: usize, exclude_origin: bool) -> Result<ShellSum>
where
    F: Fn(i64, i64) -> f64 + Sync,
{
    if radius < 32 {
        return Err(Error::RadiusTooSmall(radius));
    }
    let rs = radii(radius, period.max(1))?;
    let rmax = *rs.last().unwrap();
    let start = if exclude_origin { 1 } else { 0 };
    let shells: Vec<f64> = (start..=rmax as i64).into_par_iter().map(|r| shell(&f, r)).collect();
    let mut acc = Kahan::default();
    let mut partials = Vec::with_capacity(rs.len());
    let mut next = 0;
    for (i, s) in shells.iter().enumerate() {
        acc.add(*s);
        let r = i + start as usize;
        if next < rs.len() && r == rs[next] {
            partials.push((r, acc.value()));
            next += 1;
        }
    }
    let h: Vec<f64> = partials.iter().map(|p| 1.0 / p.0 as f64).collect();
    let y: Vec<f64> = partials.iter().map(|p| p.1).collect();
    let full = neville_at_zero(&h, &y);
    let fewer = neville_at_zero(&h[1..], &y[1..]);
    Ok(ShellSum { value: full, error: (full - fewer).abs(), partials })
}

/// Brute evaluation of an [`EKSumSpec`].
pub fn ek_sum_brute(spec: &EKSumSpec, radius: usize, ctx: &PrecisionContext) -> Result<SeriesResult<Float>> {
    let s = shell_sum(|m, n| spec.term(m, n), radius, spec.period(), spec.exclude_origin)?;
    Ok(SeriesResult {
        value: Float::with_val(ctx.prec(), s.value),
        tail_bound: Float::with_val(64, s.error),
        terms_used: (2 * radius + 1).pow(2),
    })
}

/// `m3(t3(tau)) = 81 sqrt3 Im(tau)/(4 pi^2) sum' chi_{-3}(m)(m + 3n Re tau) / |m + 3n tau|^4`.
pub fn m3_ek(tau: &Tau, radius: usize) -> Result<(ShellSum, DomainMembership)> {
    let z = tau.value().to_c64();
    let (x, y) = (z.re, z.im);
    let dom = gamma0_3_domain(tau);
    let s = shell_sum(
        |m, n| {
            let c = kronecker(-3, m);
            if c == 0 {
                return 0.0;
            }
            let (m, n) = (m as f64, n as f64);
            let re = m + 3.0 * n * x;
            let im = 3.0 * n * y;
            let d = re * re + im * im;
            c as f64 * re / (d * d)
        },
        radius,
        3,
        true,
    )?;
    let pref = 81.0 * 3f64.sqrt() * y / (4.0 * PI * PI);
    Ok((scaled(s, pref), dom))
}

fn scaled(s: ShellSum, c: f64) -> ShellSum {
    ShellSum { value: s.value * c, error: s.error * c.abs(), partials: s.partials.into_iter().map(|(r, v)| (r, v * c)).collect() }
}

/// `n4(s4(tau))` by its Eisenstein-Kronecker series, for `tau = i y` with
/// `y >= 1/sqrt 2`.
pub fn n4_ek(tau: &Tau, radius: usize) -> Result<ShellSum> {
    let z = tau.value().to_c64();
    if z.re.abs() > 1e-12 || z.im < std::f64::consts::FRAC_1_SQRT_2 - 1e-12 {
        return Err(Error::Precondition("n4_ek needs tau = i y with y >= 1/sqrt(2)".into()));
    }
    let t2 = z.im * z.im;
    let s = shell_sum(
        |m, n| {
            let (m, n) = (m as f64, n as f64);
            let a = m * m * t2 + n * n;
            let b = 4.0 * m * m * t2 + n * n;
            -(4.0 * n * n / (a * a * a) - 1.0 / (a * a)) + 4.0 * (4.0 * n * n / (b * b * b) - 1.0 / (b * b))
        },
        radius,
        1,
        true,
    )?;
    Ok(scaled(s, 10.0 * z.im / PI.powi(3)))
}

/// Identifiers accepted by [`lattice_identity_residual`].
pub const LATTICE_IDENTITIES: &[&str] = &["3.4", "3.5", "3.6a", "3.6b", "lem2.6", "lem2.11", "lem2.12", "lem2.14", "lem2.17", "eq2.18"];

/// Both sides of a lattice identity and the extrapolation error of the brute side.
#[derive(Clone, Debug)]
pub struct LatticeResidual {
    pub id: String,
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
    pub brute_error: f64,
}

fn sum2<F: Fn(i64, i64) -> f64 + Sync>(f: F, radius: usize, period: usize) -> Result<ShellSum> {
    shell_sum(f, radius, period, true)
}

fn lval(label: &str, ctx: &PrecisionContext) -> Result<f64> {
    Ok(lfunc::l_at_weight(&lfunc::newform(label)?, ctx)?.to_f64())
}

fn dl(d: i64, s: u32, ctx: &PrecisionContext) -> Result<f64> {
    Ok(dirichlet_l(&DirichletChar::new(d)?, s, ctx)?.to_f64())
}

fn in_classes(m: i64, n: i64, md: i64, cl: &[(i64, i64)]) -> bool {
    cl.iter().any(|&(a, b)| (m - a).rem_euclid(md) == 0 && (n - b).rem_euclid(md) == 0)
}

const SET_A: [(i64, i64); 4] = [(-1, -2), (2, 1), (1, 0), (-2, 3)];
const SET_B: [(i64, i64); 6] = [(1, 0), (-2, 3), (1, -1), (-2, 2), (2, -1), (-1, 2)];

/// `|LHS - RHS|` of a lattice identity, brute sums against L-values (or
/// against other brute sums when both sides are lattice sums).
pub fn lattice_identity_residual(id: &str, ctx: &PrecisionContext) -> Result<LatticeResidual> {
    lattice_identity_residual_at(id, None, ctx)
}

pub fn lattice_identity_residual_at(id: &str, radius: Option<usize>, ctx: &PrecisionContext) -> Result<LatticeResidual> {
    let r2 = radius.unwrap_or(RADIUS_EXP2);
    let r3 = radius.unwrap_or(RADIUS_EXP3);
    let pi2 = PI * PI;
    let q = |a: i64, b: i64, m: i64, n: i64| (a * m * m + b * n * n) as f64;
    let (lhs, rhs, err) = match id {
        "3.4" => {
            let l = sum2(|m, n| 9.0 / 8.0 * (m * m - 3 * n * n) as f64 / q(1, 3, m, n).powi(3), r3, 1)?;
            let r = sum2(|m, n| (m * m - 12 * n * n) as f64 / q(1, 12, m, n).powi(3) + (4 * n * n - 3 * m * m) as f64 / q(3, 4, m, n).powi(3), r3, 1)?;
            (l.value, r.value, l.error + r.error)
        }
        "3.5" => {
            let l = sum2(|m, n| 2.0 * (3 * n * n - m * m) as f64 / q(1, 3, m, n).powi(3) + 8.0 * (m * m - 12 * n * n) as f64 / q(1, 12, m, n).powi(3), r3, 1)?;
            (l.value, 5.0 * lval("g12", ctx)? + 8.0 * lval("g48", ctx)?, l.error)
        }
        "3.6a" => {
            let l = sum2(|m, n| 1.0 / q(1, 3, m, n).powi(2), r2, 1)?;
            (l.value, 3.0 * pi2 / 8.0 * dl(-3, 2, ctx)?, l.error)
        }
        "3.6b" => {
            let l = sum2(|m, n| 1.0 / q(1, 12, m, n).powi(2), r2, 1)?;
            (l.value, 23.0 * pi2 / 128.0 * dl(-3, 2, ctx)? + pi2 / (6.0 * 3f64.sqrt()) * dl(-4, 2, ctx)?, l.error)
        }
        "lem2.6" => {
            let l = sum2(|m, n| 1.0 / q(1, 12, m, n).powi(2) - 1.0 / q(3, 4, m, n).powi(2), r2, 1)?;
            (l.value, 2.0 * dl(12, 2, ctx)? * dl(-4, 2, ctx)?, l.error)
        }
        "lem2.11" => {
            let l = sum2(|m, n| 0.5 * (m * kronecker(-3, m) as i64) as f64 / q(1, 3, m, n).powi(2), r2, 3)?;
            (l.value, lval("f36", ctx)?, l.error)
        }
        "lem2.12" => {
            let l = sum2(|m, n| if in_classes(m, n, 6, &SET_A) { (m + 3 * n) as f64 / q(1, 3, m, n).powi(2) } else { 0.0 }, r2, 6)?;
            (l.value, lval("f108", ctx)?, l.error)
        }
        "lem2.14" => {
            let l = sum2(|m, n| if in_classes(m, n, 6, &SET_B) { (m + 3 * n) as f64 / q(1, 3, m, n).powi(2) } else { 0.0 }, r2, 6)?;
            (l.value, lval("f27", ctx)?, l.error)
        }
        "eq2.18" => {
            let l = sum2(|m, n| if in_classes(m, n, 6, &[(1, 1), (-2, -2)]) { 4.0 * (m + 3 * n) as f64 / q(3, 1, m, n).powi(2) } else { 0.0 }, r2, 6)?;
            (l.value, lval("f27", ctx)?, l.error)
        }
        "lem2.17" => {
            let l = sum2(|m, n| if n % 3 != 0 { 1.5 * (m * kronecker(-3, m) as i64) as f64 / q(3, 1, m, n).powi(2) } else { 0.0 }, r2, 3)?;
            (l.value, lval("f108", ctx)? - 0.75 * lval("f27", ctx)?, l.error)
        }
        other => return Err(Error::Unknown(format!("lattice identity '{other}'"))),
    };
    Ok(LatticeResidual { id: id.into(), lhs, rhs, residual: (lhs - rhs).abs(), brute_error: err })
}

/// Exact coefficient identities between congruence-class theta series used
/// for the level 27 form, each compared to `order`; returns `(name, holds)`.
pub fn theta_claims(order: usize) -> Result<Vec<(&'static str, bool)>> {
    // All series scaled by 4 so that every weight is integral.
    let quarter = |cl: &[(i64, i64)]| ThetaSpec { modulus: 6, classes: cl.to_vec(), weight: (1, 3, 1), form: (1, 3, 4) };
    let full = |cl: &[(i64, i64)], w: i64| ThetaSpec { modulus: 6, classes: cl.to_vec(), weight: (w, 3 * w, 1), form: (1, 3, 1) };
    let add = |a: Vec<i64>, b: Vec<i64>| a.into_iter().zip(b).map(|(x, y)| x + y).collect::<Vec<_>>();
    let claim1 = quarter(&[(1, 1)]).expand(order)? == add(full(&[(1, 0), (-2, 3)], 4).expand(order)?, full(&[(2, -1), (-1, 2)], 2).expand(order)?);
    let claim2 = quarter(&[(-2, -2)]).expand(order)? == add(full(&[(1, -1), (-2, 2)], 4).expand(order)?, full(&[(2, -1), (-1, 2)], 2).expand(order)?);
    let doubling = full(&[(-1, -1), (2, 2)], 1).expand(order)? == full(&[(1, -1), (-2, 2)], 2).expand(order)?;
    let b_set = ThetaSpec { modulus: 6, classes: SET_B.to_vec(), weight: (1, 3, 1), form: (1, 3, 1) }.expand(order)? == ThetaSpec::f27().expand(order)?;
    Ok(vec![("claim1", claim1), ("claim2", claim2), ("doubling", doubling), ("b-set", b_set)])
}
