//! Three-variable measures from `G(q)` through the 3x3 modular relations.
//!
//! For small `|q|`,
//! `(G(q), G(-q), G(q^2))^T = M (x1, x2, x3)^T` with
//! `x = (n2(s2(q)), n2(s2(-q)), 2 n2(s2(q^2)) - n2(s2(-q^2)))` for `n2` and
//! `x = (n4(s4(q)), n4(s4(-q)), n4(s4(q^2)))` for `n4`.

use crate::error::{Error, Result};
use crate::modular::big_g;
use crate::numerics::{BigComplex, PrecisionContext};
use rug::{Float, Integer, Rational};
use serde::Serialize;

/// Radius inside which `G` is summed and the matrix relations are solved.
pub const G_ROUTE_RADIUS: f64 = 0.05;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum GFamily {
    N2,
    N4,
}

/// Largest real `|q|` at which the solved unknowns are still torus integrals.
///
/// On real `q`, `|s_j(q)|` decreases to its minimum (64 for `n2` at
/// `q = e^{-pi}`, 256 for `n4` at `q = e^{-pi sqrt 2}`) and grows again
/// beyond it; past that point the relations continue the modular function,
/// which no longer equals the measure.
pub fn mahler_radius(f: GFamily) -> f64 {
    match f {
        GFamily::N2 => (-std::f64::consts::PI).exp(),
        GFamily::N4 => (-std::f64::consts::PI * std::f64::consts::SQRT_2).exp(),
    }
}

/// Whether `|q|` lies inside [`mahler_radius`], with slack for nomes that
/// sit exactly on it.
pub fn in_mahler_domain(f: GFamily, q_abs: f64) -> bool {
    q_abs <= mahler_radius(f) * (1.0 + 1e-9)
}

pub fn g_matrix(f: GFamily) -> [[i64; 3]; 3] {
    match f {
        GFamily::N2 => [[-19, -4, 12], [-4, -19, 12], [-3, -3, 4]],
        GFamily::N4 => [[-5, -2, 4], [-2, -5, 4], [-1, -1, 2]],
    }
}

pub fn determinant(m: &[[i64; 3]; 3]) -> Integer {
    let m = |i: usize, j: usize| Integer::from(m[i][j]);
    m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
        + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
}

/// Exact inverse by the adjugate.
pub fn g_matrix_inverse(f: GFamily) -> Result<[[Rational; 3]; 3]> {
    let m = g_matrix(f);
    let det = determinant(&m);
    if det == 0 {
        return Err(Error::Precondition("singular relation matrix".into()));
    }
    let cof = |i: usize, j: usize| -> Integer {
        let r: Vec<usize> = (0..3).filter(|&x| x != i).collect();
        let c: Vec<usize> = (0..3).filter(|&x| x != j).collect();
        let v = Integer::from(m[r[0]][c[0]]) * m[r[1]][c[1]] - Integer::from(m[r[0]][c[1]]) * m[r[1]][c[0]];
        if (i + j) % 2 == 0 { v } else { -v }
    };
    let mut inv: [[Rational; 3]; 3] = Default::default();
    for (i, row) in inv.iter_mut().enumerate() {
        for (j, e) in row.iter_mut().enumerate() {
            // adj = cofactor^T
            *e = Rational::from((cof(j, i), det.clone()));
        }
    }
    Ok(inv)
}

/// The three unknowns of the relation, solved from `G(q), G(-q), G(q^2)`.
pub fn n_via_g_all(f: GFamily, q: &BigComplex, ctx: &PrecisionContext) -> Result<[Float; 3]> {
    let qa = q.abs().to_f64();
    if q.is_zero() || qa >= G_ROUTE_RADIUS {
        return Err(Error::Precondition(format!("G-route needs 0 < |q| < {G_ROUTE_RADIUS}, got |q| = {qa:.4}")));
    }
    let w = ctx.with_extra_bits(24);
    let p = w.prec();
    let q = q.with_prec(p);
    let g = [big_g(&q, &w)?, big_g(&-q.clone(), &w)?, big_g(&q.square(), &w)?];
    let inv = g_matrix_inverse(f)?;
    let mut out: [Float; 3] = [Float::new(ctx.prec()), Float::new(ctx.prec()), Float::new(ctx.prec())];
    for i in 0..3 {
        let mut acc = Float::new(p);
        for j in 0..3 {
            acc += Float::with_val(p, &g[j] * &inv[i][j]);
        }
        out[i] = Float::with_val(ctx.prec(), acc);
    }
    Ok(out)
}

/// `n2(s2(q))` or `n4(s4(q))` by the G-matrix relation.
pub fn n_via_g(f: GFamily, q: &BigComplex, ctx: &PrecisionContext) -> Result<Float> {
    let [x, _, _] = n_via_g_all(f, q, ctx)?;
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinants_are_300_and_18() {
        assert_eq!(determinant(&g_matrix(GFamily::N2)), 300);
        assert_eq!(determinant(&g_matrix(GFamily::N4)), 18);
    }

    #[test]
    fn inverse_is_exact() {
        for f in [GFamily::N2, GFamily::N4] {
            let m = g_matrix(f);
            let inv = g_matrix_inverse(f).unwrap();
            for i in 0..3 {
                for j in 0..3 {
                    let mut s = Rational::new();
                    for k in 0..3 {
                        s += Rational::from(&inv[i][k] * m[k][j]);
                    }
                    assert_eq!(s, if i == j { 1 } else { 0 });
                }
            }
        }
    }

    #[test]
    fn mahler_radius_is_where_s_is_smallest() {
        let ctx = PrecisionContext::new(20);
        let at = |f: fn(&BigComplex, &PrecisionContext) -> BigComplex, q: f64| f(&BigComplex::from_f64(ctx.prec(), q, 0.0), &ctx).re.to_f64();
        let r2 = mahler_radius(GFamily::N2);
        assert!((at(crate::modular::s2, r2) - 64.0).abs() < 1e-9);
        let r4 = mahler_radius(GFamily::N4);
        assert!((at(crate::modular::s4, r4) - 256.0).abs() < 1e-9);
        assert!(at(crate::modular::s4, r4 * 1.1) > 256.0);
    }

    #[test]
    fn rejects_large_q() {
        let ctx = PrecisionContext::new(20);
        assert!(n_via_g(GFamily::N2, &BigComplex::from_f64(ctx.prec(), 0.2, 0.0), &ctx).is_err());
    }
}
