//! `j`-invariant maps of the elliptic fibrations attached to `A_s` and `C_s`,
//! and membership in the finite CM sets over `Q` and `Q(sqrt 2)`.

use crate::error::{Error, Result};
use crate::exactnum::{ev, ExactValue};
use crate::numerics::BigComplex;
use serde::Serialize;

fn pole(what: &str) -> Error {
    Error::Pole(what.to_string())
}

/// `j(E_s) = (s - 16)^3 / s`.
pub fn je(s: &BigComplex) -> Result<BigComplex> {
    if s.is_zero() {
        return Err(pole("s = 0"));
    }
    let p = s.prec();
    Ok(&(s - &BigComplex::from_i64(p, 16)).powi(3) / s)
}

pub fn je_exact(s: &ExactValue) -> Result<ExactValue> {
    if s.is_zero() {
        return Err(pole("s = 0"));
    }
    (s - &ExactValue::from(16)).pow(3)?.div(s)
}

/// `s(u) = -2^10 u^4 / (u^4 - 1)^2`.
pub fn s_of_u(u: &BigComplex) -> Result<BigComplex> {
    let p = u.prec();
    let u4 = u.powi(4);
    let d = (&u4 - &BigComplex::one(p)).square();
    if d.is_zero() {
        return Err(pole("u^4 = 1"));
    }
    Ok(-(&u4.mul_i64(1024) / &d))
}

pub fn s_of_u_exact(u: &ExactValue) -> Result<ExactValue> {
    let u4 = u.pow(4)?;
    let d = (&u4 - &ExactValue::one()).pow(2)?;
    if d.is_zero() {
        return Err(pole("u^4 = 1"));
    }
    Ok(-(u4.scale(&1024.into()).div(&d)?))
}

/// `j(G_{s(u)}) = 64 (3u^2+1)^3 (u^2+3)^3 / ((u^4-1)^2 (u^2-1)^2)`.
pub fn jg_of_u(u: &BigComplex) -> Result<BigComplex> {
    let p = u.prec();
    let one = BigComplex::one(p);
    let u2 = u.square();
    let num = (&u2.mul_i64(3) + &one).powi(3) * (&u2 + &BigComplex::from_i64(p, 3)).powi(3);
    let den = (&u2.square() - &one).square() * (&u2 - &one).square();
    if den.is_zero() {
        return Err(pole("u^2 = +-1"));
    }
    Ok((&num / &den).mul_i64(64))
}

pub fn jg_of_u_exact(u: &ExactValue) -> Result<ExactValue> {
    let one = ExactValue::one();
    let u2 = u.pow(2)?;
    let num = (&u2.scale(&3.into()) + &one).pow(3)? * (&u2 + &ExactValue::from(3)).pow(3)?;
    let den = (&u2.pow(2)? - &one).pow(2)? * (&u2 - &one).pow(2)?;
    if den.is_zero() {
        return Err(pole("u^2 = +-1"));
    }
    Ok(num.div(&den)?.scale(&64.into()))
}

// ----------------------------------------------- polynomials over the basis

/// Polynomial with exact coefficients, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactPoly(pub Vec<ExactValue>);

impl ExactPoly {
    pub fn new(mut c: Vec<ExactValue>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        ExactPoly(c)
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| ExactValue::from(x)).collect())
    }

    /// Degree, `-1` for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.0.len() as i64 - 1
    }

    pub fn mul(&self, o: &ExactPoly) -> ExactPoly {
        if self.0.is_empty() || o.0.is_empty() {
            return ExactPoly(vec![]);
        }
        let mut c = vec![ExactValue::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                c[i + j] = &c[i + j] + &(a * b);
            }
        }
        ExactPoly::new(c)
    }

    pub fn pow(&self, e: u32) -> ExactPoly {
        let mut acc = ExactPoly::from_ints(&[1]);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn scale(&self, k: &ExactValue) -> ExactPoly {
        ExactPoly::new(self.0.iter().map(|a| a * k).collect())
    }

    pub fn sub(&self, o: &ExactPoly) -> ExactPoly {
        let n = self.0.len().max(o.0.len());
        let z = ExactValue::zero();
        ExactPoly::new((0..n).map(|i| self.0.get(i).unwrap_or(&z) - o.0.get(i).unwrap_or(&z)).collect())
    }

    pub fn add(&self, o: &ExactPoly) -> ExactPoly {
        let n = self.0.len().max(o.0.len());
        let z = ExactValue::zero();
        ExactPoly::new((0..n).map(|i| self.0.get(i).unwrap_or(&z) + o.0.get(i).unwrap_or(&z)).collect())
    }

    /// Remainder of division by a nonzero `d`.
    pub fn rem(&self, d: &ExactPoly) -> Result<ExactPoly> {
        let dl = d.0.last().ok_or(Error::DivisionByZero)?.inverse()?;
        let mut r = self.clone();
        while r.degree() >= d.degree() {
            let k = r.degree() - d.degree();
            let f = r.0.last().unwrap() * &dl;
            let mut shifted = vec![ExactValue::zero(); k as usize];
            shifted.extend(d.0.iter().map(|a| a * &f));
            r = r.sub(&ExactPoly::new(shifted));
        }
        Ok(r)
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, o: &ExactPoly) -> Result<ExactPoly> {
        let (mut a, mut b) = (self.clone(), o.clone());
        while b.degree() >= 0 {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        if let Some(l) = a.0.last() {
            let li = l.inverse()?;
            a = a.scale(&li);
        }
        Ok(a)
    }
}

/// `s (v^2 - 1)^2 + 1024 v^2`, whose roots are `v = u^2` with `s(u) = s`.
pub fn s_poly_in_v(s: &ExactValue) -> ExactPoly {
    let a = ExactPoly::from_ints(&[-1, 0, 1]).pow(2).scale(s);
    a.add(&ExactPoly::from_ints(&[0, 0, 1024]))
}

/// `j (v^2-1)^2 (v-1)^2 - 64 (3v+1)^3 (v+3)^3`.
pub fn jg_poly_in_v(j: &ExactValue) -> ExactPoly {
    let den = ExactPoly::from_ints(&[-1, 0, 1]).pow(2).mul(&ExactPoly::from_ints(&[-1, 1]).pow(2));
    let num = ExactPoly::from_ints(&[1, 3]).pow(3).mul(&ExactPoly::from_ints(&[3, 1]).pow(3));
    den.scale(j).sub(&num.scale(&64.into()))
}

/// True iff some `u` with `s(u) = s` has `j(G_{s(u)}) = j`, decided by a
/// nontrivial gcd of the two polynomials in `v = u^2`.
pub fn jg_matches(s: &ExactValue, j: &ExactValue) -> Result<bool> {
    Ok(s_poly_in_v(s).gcd(&jg_poly_in_v(j))?.degree() >= 1)
}

// ------------------------------------------------------------ CM sets

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CmClass {
    InC1,
    InC2Only,
    NotMember,
}

/// The thirteen rational CM `j`-invariants.
pub fn cm_set_c1() -> Vec<ExactValue> {
    let cube = |n: i64| ExactValue::from(n).pow(3).unwrap();
    vec![
        -cube(640320),
        -cube(5280),
        -cube(960),
        cube(160).scale(&(-3).into()),
        -cube(96),
        -cube(32),
        -cube(15),
        ExactValue::zero(),
        cube(12),
        cube(20),
        cube(30).scale(&2.into()),
        cube(66),
        cube(255),
    ]
}

/// The extra CM `j`-invariants in `Q(sqrt 2)`.
pub fn cm_set_c2_extra() -> Vec<ExactValue> {
    let pairs = [
        ("41113158120", "29071392966"),
        ("26125000", "18473000"),
        ("2417472", "1707264"),
        ("3147421320000", "2225561184000"),
    ];
    let mut out = Vec::new();
    for (a, b) in pairs {
        out.push(ev(&format!("{a} + {b}*sqrt(2)")));
        out.push(ev(&format!("{a} - {b}*sqrt(2)")));
    }
    out
}

pub fn cm_membership(j: &ExactValue) -> CmClass {
    if cm_set_c1().contains(j) {
        CmClass::InC1
    } else if cm_set_c2_extra().contains(j) {
        CmClass::InC2Only
    } else {
        CmClass::NotMember
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn je_small_values() {
        assert_eq!(je_exact(&ev("16")).unwrap(), ExactValue::zero());
        assert_eq!(je_exact(&ev("-8")).unwrap(), ExactValue::from(1728));
        assert_eq!(je_exact(&ev("256")).unwrap(), ExactValue::from(2 * 27000));
        assert!(je_exact(&ExactValue::zero()).is_err());
    }

    #[test]
    fn membership() {
        assert_eq!(cm_membership(&ExactValue::zero()), CmClass::InC1);
        assert_eq!(cm_membership(&ev("2417472 + 1707264*sqrt(2)")), CmClass::InC2Only);
        assert_eq!(cm_membership(&ExactValue::from(1729)), CmClass::NotMember);
    }

    #[test]
    fn s_and_j_of_u_numeric_match_exact() {
        let u = ev("2");
        let p = 128;
        let s = s_of_u(&u.render_prec(p)).unwrap();
        let se = s_of_u_exact(&u).unwrap().render_prec(p);
        assert!((s - se).abs().to_f64() < 1e-30);
        let j = jg_of_u(&u.render_prec(p)).unwrap();
        let je_ = jg_of_u_exact(&u).unwrap().render_prec(p);
        assert!((&j - &je_).abs().to_f64() < 1e-25 * je_.abs().to_f64());
    }

    #[test]
    fn gcd_detects_shared_root() {
        // u = 2 gives a consistent (s, j) pair; perturbing j breaks it
        let u = ev("2");
        let s = s_of_u_exact(&u).unwrap();
        let j = jg_of_u_exact(&u).unwrap();
        assert!(jg_matches(&s, &j).unwrap());
        assert!(!jg_matches(&s, &(&j + &ExactValue::one())).unwrap());
    }
}
