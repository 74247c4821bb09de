//! Simultaneous polynomial root finding (Aberth-Ehrlich) in `f64` and in
//! arbitrary precision, plus the Jensen sum over a fiber's roots.

use crate::error::{Error, Result};
use crate::numerics::BigComplex;
use num_complex::Complex64;
use rug::Float;

const MAX_ITER_F64: usize = 600;
const MAX_ITER_BIG: usize = 80;

/// Roots of a fiber polynomial together with its leading coefficient.
#[derive(Clone, Debug)]
pub struct RootSet<T> {
    pub roots: Vec<T>,
    pub leading: T,
}

fn horner_c64(c: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

/// Stable quadratic formula; avoids cancellation between `-b` and the root.
fn quadratic_c64(c: &[Complex64]) -> Vec<Complex64> {
    let (c0, b, a) = (c[0], c[1], c[2]);
    let d = (b * b - 4.0 * a * c0).sqrt();
    let s = if (b.conj() * d).re >= 0.0 { b + d } else { b - d };
    if s.norm() == 0.0 {
        return vec![Complex64::new(0.0, 0.0); 2];
    }
    let q = -0.5 * s;
    vec![q / a, c0 / q]
}

/// All roots of `c[0] + c[1] z + ... + c[n] z^n` (`c[n] != 0`).
///
/// Degrees one and two use closed forms; higher degrees run Aberth's
/// iteration from points on a circle of the Cauchy-bound radius.
pub fn roots_c64(c: &[Complex64]) -> Result<Vec<Complex64>> {
    let n = c.len() - 1;
    let lead = c[n];
    if lead.norm() == 0.0 {
        return Err(Error::RootFinder("vanishing leading coefficient".into()));
    }
    match n {
        0 => return Ok(vec![]),
        1 => return Ok(vec![-c[0] / c[1]]),
        2 => return Ok(quadratic_c64(c)),
        _ => {}
    }
    let mut rad = 0f64;
    for a in &c[..n] {
        rad = rad.max((a / lead).norm());
    }
    // geometric mean of the roots is a better starting radius than the bound
    let gm = (c[0] / lead).norm().powf(1.0 / n as f64).max(1e-12);
    let r0 = gm.min(1.0 + rad);
    let mut z: Vec<Complex64> =
        (0..n).map(|k| Complex64::from_polar(r0, 0.4 + std::f64::consts::TAU * k as f64 / n as f64)).collect();
    for _ in 0..MAX_ITER_F64 {
        let mut worst = 0f64;
        for i in 0..n {
            let (p, dp) = horner_c64(c, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let w = p / dp;
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if j != i {
                    s += 1.0 / (z[i] - z[j]);
                }
            }
            let step = w / (Complex64::new(1.0, 0.0) - w * s);
            if step.is_finite() {
                z[i] -= step;
                worst = worst.max(step.norm() / z[i].norm().max(1e-300));
            }
        }
        if worst < 4.0 * f64::EPSILON {
            return Ok(z);
        }
    }
    // slow convergence near a multiple root still leaves a usable answer if
    // the residual is small
    let scale: f64 = c.iter().map(|a| a.norm()).sum();
    if z.iter().all(|&r| horner_c64(c, r).0.norm() <= 1e-9 * scale * (1.0 + r.norm()).powi(n as i32)) {
        return Ok(z);
    }
    Err(Error::RootFinder(format!("Aberth iteration did not settle for {c:?}")))
}

/// Relative Vieta defect `| |lead| prod|r| - |c0| | / max(|c0|, tiny)`.
pub fn vieta_defect_c64(c: &[Complex64], roots: &[Complex64]) -> f64 {
    let lead = c[c.len() - 1].norm();
    let prod: f64 = roots.iter().map(|r| r.norm()).product::<f64>() * lead;
    let c0 = c[0].norm();
    (prod - c0).abs() / c0.max(1e-300)
}

/// `log|lead| + sum log max(1, |r|)`.
pub fn jensen_c64(lead: Complex64, roots: &[Complex64]) -> f64 {
    lead.norm().ln() + roots.iter().map(|r| r.norm().ln().max(0.0)).sum::<f64>()
}

/// Number of roots strictly outside the circle `|z| = 1 + tol`.
pub fn outside_count_c64(roots: &[Complex64], tol: f64) -> usize {
    roots.iter().filter(|r| r.norm() > 1.0 + tol).count()
}

fn horner_big(c: &[BigComplex], z: &BigComplex) -> (BigComplex, BigComplex) {
    let p = z.prec();
    let mut v = BigComplex::zero(p);
    let mut dv = BigComplex::zero(p);
    for a in c.iter().rev() {
        dv = &(&dv * z) + &v;
        v = &(&v * z) + a;
    }
    (v, dv)
}

/// Roots of a polynomial with big-float coefficients: `f64` Aberth for the
/// starting points, then Aberth refinement at full precision.
pub fn roots_big(c: &[BigComplex], prec: u32) -> Result<RootSet<BigComplex>> {
    let n = c.len() - 1;
    let lead = c[n].with_prec(prec);
    if lead.is_zero() {
        return Err(Error::RootFinder("vanishing leading coefficient".into()));
    }
    let cf: Vec<Complex64> = c.iter().map(|a| a.to_c64()).collect();
    let start = roots_c64(&cf)?;
    let cw: Vec<BigComplex> = c.iter().map(|a| a.with_prec(prec)).collect();
    let mut z: Vec<BigComplex> = start.iter().map(|r| BigComplex::from_c64(prec, *r)).collect();
    let tol = Float::with_val(64, Float::i_exp(1, 12 - prec as i32));
    let one = BigComplex::one(prec);
    for _ in 0..MAX_ITER_BIG {
        let mut done = true;
        for i in 0..n {
            let (p, dp) = horner_big(&cw, &z[i]);
            if p.is_zero() {
                continue;
            }
            let w = &p / &dp;
            let mut s = BigComplex::zero(prec);
            for j in 0..n {
                if j != i {
                    s += &(&z[i] - &z[j]).recip();
                }
            }
            let step = &w / &(&one - &(&w * &s));
            if !step.is_finite() {
                continue;
            }
            z[i] -= &step;
            let rel = Float::with_val(64, step.abs() / z[i].abs().max(&Float::with_val(64, 1e-300)));
            if rel > tol {
                done = false;
            }
        }
        if done {
            return Ok(RootSet { roots: z, leading: lead });
        }
    }
    Err(Error::RootFinder("high-precision refinement did not converge".into()))
}

impl RootSet<BigComplex> {
    /// `log|lead| + sum log max(1,|r|)`.
    pub fn jensen(&self) -> Float {
        let p = self.leading.prec();
        let mut acc = self.leading.abs().ln();
        for r in &self.roots {
            let l = r.abs().ln();
            if l.is_sign_positive() {
                acc += l;
            }
        }
        Float::with_val(p, acc)
    }

    /// Relative Vieta defect against the constant term `c0`.
    pub fn vieta_defect(&self, c0: &BigComplex) -> Float {
        let p = self.leading.prec();
        let mut prod = self.leading.abs();
        for r in &self.roots {
            prod *= r.abs();
        }
        let c = c0.abs();
        Float::with_val(p, (prod - &c).abs() / c)
    }

    pub fn outside_count(&self) -> usize {
        self.roots.iter().filter(|r| r.norm_sqr() > 1).count()
    }
}
