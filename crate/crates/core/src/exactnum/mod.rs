//! Exact algebraic parameters: rational combinations of a fixed radical basis.
//!
//! Every value is a finite sum `sum c_r * r` with rational `c_r` and monomials
//! `r = i^b * prod p^(e/12)` over the primes in [`radical::PRIMES`]. The
//! basis covers square, cube, fourth, sixth and twelfth roots, which is closed
//! under multiplication, so arithmetic never rounds.

mod parse;
pub mod radical;

pub use radical::{Radical, RadicalDesc, PRIMES};

use crate::error::{Error, Result};
use crate::numerics::{BigComplex, PrecisionContext};
use rug::{Float, Integer, Rational};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ExactValue {
    terms: BTreeMap<Radical, Rational>,
}

impl ExactValue {
    pub fn zero() -> Self {
        ExactValue::default()
    }

    pub fn one() -> Self {
        Self::rational(1)
    }

    pub fn rational(r: impl Into<Rational>) -> Self {
        let r = r.into();
        let mut terms = BTreeMap::new();
        if r != 0 {
            terms.insert(Radical::ONE, r);
        }
        ExactValue { terms }
    }

    pub fn i() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Radical::I, Rational::from(1));
        ExactValue { terms }
    }

    /// `rt_k(n)`, the principal real `k`-th root (or `i*sqrt(|n|)` for `k = 2, n < 0`).
    pub fn rt(k: u32, n: impl Into<Rational>) -> Result<Self> {
        Self::make(vec![(Rational::from(1), RadicalDesc::root(k, n))])
    }

    /// Canonical value of `sum c * radical`; like radicals merge, zeros drop.
    pub fn make(terms: Vec<(Rational, RadicalDesc)>) -> Result<Self> {
        let mut out = ExactValue::zero();
        for (c, d) in terms {
            let (k, r) = d.normalize()?;
            out.add_term(r, c * k);
        }
        Ok(out)
    }

    fn add_term(&mut self, r: Radical, c: Rational) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(r).or_insert_with(Rational::new);
        *e += c;
        if *e == 0 {
            self.terms.remove(&r);
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        parse::parse(s)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Radical, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.terms.keys().all(|r| r.is_one())
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::new());
        }
        if self.is_rational() {
            return self.terms.get(&Radical::ONE).cloned();
        }
        None
    }

    pub fn is_real(&self) -> bool {
        self.terms.keys().all(|r| !r.is_imaginary())
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let mut base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = ExactValue::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = ExactValue::zero();
        for (r, v) in &self.terms {
            out.add_term(*r, Rational::from(v * c));
        }
        out
    }

    /// Complex conjugation (negates every term carrying `i`).
    pub fn complex_conj(&self) -> Self {
        let mut out = self.clone();
        for (r, v) in out.terms.iter_mut() {
            if r.is_imaginary() {
                *v = -v.clone();
            }
        }
        out
    }

    /// The Galois automorphism `sqrt(p) -> -sqrt(p)` on the quadratic basis.
    pub fn conj_sqrt(&self, p: u32) -> Self {
        let mut out = self.clone();
        for (r, v) in out.terms.iter_mut() {
            if r.twelfths(p) == 6 {
                *v = -v.clone();
            }
        }
        out
    }

    /// Multiplicative inverse by solving `self * z = 1` over the closure of
    /// the monomials that occur in `self`.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(ExactValue::rational(Rational::from(1) / r));
        }
        let gens: Vec<Radical> = self.terms.keys().copied().collect();
        let mut group: BTreeSet<Radical> = BTreeSet::new();
        group.insert(Radical::ONE);
        let mut frontier = vec![Radical::ONE];
        while let Some(h) = frontier.pop() {
            for g in &gens {
                let (_, r) = h.mul(g);
                if group.insert(r) {
                    frontier.push(r);
                }
            }
            if group.len() > 512 {
                return Err(Error::UnsupportedRadical("inverse: monomial closure too large".into()));
            }
        }
        let basis: Vec<Radical> = group.into_iter().collect();
        let index: BTreeMap<Radical, usize> = basis.iter().enumerate().map(|(i, r)| (*r, i)).collect();
        let n = basis.len();
        // column j = basis[j] as an unknown; row = coefficient of basis[row] in self * basis[j]
        let mut a = vec![vec![Rational::new(); n + 1]; n];
        for (j, h) in basis.iter().enumerate() {
            for (g, c) in &self.terms {
                let (k, r) = g.mul(h);
                let row = index[&r];
                a[row][j] += Rational::from(c * &k);
            }
        }
        a[index[&Radical::ONE]][n] = Rational::from(1);
        let sol = solve_rational(a).ok_or(Error::DivisionByZero)?;
        let mut out = ExactValue::zero();
        for (j, v) in sol.into_iter().enumerate() {
            out.add_term(basis[j], v);
        }
        Ok(out)
    }

    pub fn div(&self, o: &ExactValue) -> Result<Self> {
        Ok(self * &o.inverse()?)
    }

    /// Numerical value at the context's precision.
    pub fn render(&self, ctx: &PrecisionContext) -> BigComplex {
        self.render_prec(ctx.prec())
    }

    pub fn render_prec(&self, prec: u32) -> BigComplex {
        let wp = prec + 16;
        let mut re = Float::new(wp);
        let mut im = Float::new(wp);
        for (r, c) in &self.terms {
            let mut v = Float::with_val(wp, c);
            for (idx, &e) in r.exps.iter().enumerate() {
                if e > 0 {
                    v *= prime_power(radical::PRIMES[idx], e as u32, wp);
                }
            }
            if r.is_imaginary() {
                im += v;
            } else {
                re += v;
            }
        }
        BigComplex::new(Float::with_val(prec, re), Float::with_val(prec, im))
    }

    /// Real value; `None` if the value has an imaginary part.
    pub fn render_real(&self, ctx: &PrecisionContext) -> Option<Float> {
        if self.is_real() {
            Some(self.render(ctx).re)
        } else {
            None
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.render_prec(64).re.to_f64()
    }
}

/// `p^(e/12)` by Newton iteration on `x^k = p^a` with `a/k = e/12` reduced.
fn prime_power(p: u32, e: u32, prec: u32) -> Float {
    let g = gcd(e, 12);
    let (a, k) = (e / g, 12 / g);
    nth_root(&Integer::from(p).pow(a), k, prec)
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// Positive real `k`-th root of a positive integer: bit-doubling Newton
/// iteration from an integer seed.
pub fn nth_root(n: &Integer, k: u32, prec: u32) -> Float {
    assert!(*n > 0 && k >= 1);
    if k == 1 {
        return Float::with_val(prec, n);
    }
    // integer seed: floor(n^(1/k)) scaled so that it carries ~32 bits
    let shift = 32 * k;
    let scaled = Integer::from(n << shift);
    let seed_int = scaled.root(k);
    let mut x = Float::with_val(40, seed_int) >> 32u32;
    if x.is_zero() {
        x = Float::with_val(40, 1);
    }
    let mut schedule = vec![prec + 8];
    while *schedule.last().unwrap() > 40 {
        let next = schedule.last().unwrap() / 2 + 4;
        schedule.push(next.max(40));
        if next <= 40 {
            break;
        }
    }
    schedule.reverse();
    for &p in &schedule {
        x.set_prec(p);
        for _ in 0..2 {
            // x <- x - (x^k - n) / (k x^(k-1))
            let xk1 = Float::with_val(p, (&x).pow(k - 1));
            let xk = Float::with_val(p, &xk1 * &x);
            let num = Float::with_val(p, &xk - n);
            let den = xk1 * k;
            x -= num / den;
        }
    }
    Float::with_val(prec, x)
}

use rug::ops::Pow;

/// Gaussian elimination over Q on an augmented matrix.
pub(crate) fn solve_rational(mut a: Vec<Vec<Rational>>) -> Option<Vec<Rational>> {
    let n = a.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| a[r][col] != 0)?;
        a.swap(col, piv);
        let inv = Rational::from(1) / a[col][col].clone();
        for v in a[col].iter_mut() {
            *v *= &inv;
        }
        for r in 0..n {
            if r != col && a[r][col] != 0 {
                let f = a[r][col].clone();
                for c in col..=n {
                    let t = Rational::from(&f * &a[col][c]);
                    a[r][c] -= t;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n].clone()).collect())
}

impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (r, c)) in self.terms.iter().enumerate() {
            let neg = *c < 0;
            let mag = Rational::from(c.abs_ref());
            let body = if r.is_one() {
                mag.to_string()
            } else if mag == 1 {
                r.to_string()
            } else {
                format!("{mag}*{r}")
            };
            match (idx, neg) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a ExactValue> for &'a ExactValue {
    type Output = ExactValue;
    fn add(self, o: &ExactValue) -> ExactValue {
        let mut out = self.clone();
        for (r, c) in &o.terms {
            out.add_term(*r, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a ExactValue> for &'a ExactValue {
    type Output = ExactValue;
    fn sub(self, o: &ExactValue) -> ExactValue {
        self + &(-o)
    }
}

impl Neg for &ExactValue {
    type Output = ExactValue;
    fn neg(self) -> ExactValue {
        self.scale(&Rational::from(-1))
    }
}

impl Neg for ExactValue {
    type Output = ExactValue;
    fn neg(self) -> ExactValue {
        -&self
    }
}

impl<'a> Mul<&'a ExactValue> for &'a ExactValue {
    type Output = ExactValue;
    fn mul(self, o: &ExactValue) -> ExactValue {
        let mut out = ExactValue::zero();
        for (r1, c1) in &self.terms {
            for (r2, c2) in &o.terms {
                let (k, r) = r1.mul(r2);
                out.add_term(r, Rational::from(c1 * c2) * k);
            }
        }
        out
    }
}

macro_rules! owned {
    ($tr:ident, $m:ident) => {
        impl $tr<ExactValue> for ExactValue {
            type Output = ExactValue;
            fn $m(self, o: ExactValue) -> ExactValue {
                (&self).$m(&o)
            }
        }
    };
}
owned!(Add, add);
owned!(Sub, sub);
owned!(Mul, mul);

impl From<i64> for ExactValue {
    fn from(v: i64) -> Self {
        ExactValue::rational(v)
    }
}

impl From<Rational> for ExactValue {
    fn from(v: Rational) -> Self {
        ExactValue::rational(v)
    }
}

impl std::str::FromStr for ExactValue {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ExactValue::parse(s)
    }
}

impl serde::Serialize for ExactValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Shorthand for parsing a literal known to be valid.
pub fn ev(s: &str) -> ExactValue {
    ExactValue::parse(s).unwrap_or_else(|e| panic!("bad exact literal {s:?}: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn isqrt_scaled(n: u64, digits: u32) -> Integer {
        // integer-bisection square root of n * 10^(2 digits)
        let target = Integer::from(n) * Integer::from(10).pow(2 * digits);
        let (mut lo, mut hi) = (Integer::from(0), Integer::from(&target + 1));
        while Integer::from(&hi - &lo) > 1 {
            let mid = Integer::from(&lo + &hi) >> 1u32;
            if Integer::from(mid.square_ref()) <= target {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }

    #[test]
    fn make_and_render() {
        let x = ExactValue::make(vec![(8.into(), RadicalDesc::One), (6.into(), RadicalDesc::root(2, 2))]).unwrap();
        assert_eq!(x.to_string(), "8 + 6*rt2(2)");
        let ctx = PrecisionContext::new(50);
        let v = x.render(&ctx).re;
        let s = isqrt_scaled(2, 60);
        let oracle = Float::with_val(400, 8) + Float::with_val(400, s * 6u32) / Float::with_val(400, Integer::from(10).pow(60));
        let d = Float::with_val(400, &v - &oracle).abs().to_f64();
        assert!(d < 1e-55, "{d}");
        assert!((v.to_f64() - 16.485_281_374_238_57).abs() < 1e-13);
    }

    #[test]
    fn zero_and_one() {
        let z = ExactValue::make(vec![(0.into(), RadicalDesc::One)]).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.to_string(), "0");
        assert!(z.render_prec(128).is_zero());
        assert_eq!(ExactValue::one().render_prec(200).re, 1);
    }

    #[test]
    fn conjugate_norm_is_rational() {
        let x = ev("8 + 6*rt2(2)");
        let n = &x * &x.conj_sqrt(2);
        assert_eq!(n, ExactValue::rational(-8));
        assert_eq!(n.render_prec(100).re, -8);
    }

    #[test]
    fn table_style_parameters() {
        let t = ev("6 - 6*rt3(2) + 18*rt3(4)");
        assert!((t.to_f64() - 27.013_692_636_058_35).abs() < 1e-12);
        let beta = ev("27*rt2(3)*(261*rt3(2) - 207*rt3(4))");
        assert!(beta.is_real());
        let s = ev("71704 + 50688*rt2(2) + 60282*rt4(2) + 42633*rt4(8)");
        assert_eq!(s.to_string(), "71704 + 60282*rt4(2) + 50688*rt2(2) + 42633*rt4(8)");
    }

    #[test]
    fn inverse_in_cubic_field() {
        let t = ev("6 - 6*rt3(2) + 18*rt3(4)");
        let inv = t.inverse().unwrap();
        assert_eq!(&t * &inv, ExactValue::one());
        // 27/t is the quoted hypergeometric argument
        let z = ExactValue::rational(27).div(&t).unwrap();
        assert_eq!(z, ev("63/250 + 171/250*rt3(2) - 9/125*rt3(4)"));
    }

    #[test]
    fn inverse_in_biquadratic_field() {
        let x = ev("568 + 384*rt2(2) + 336*rt2(3) + 216*rt2(6)");
        assert_eq!(&x * &x.inverse().unwrap(), ExactValue::one());
        let y = ev("47/2 + 45/2*rt2(-7)");
        assert_eq!(&y * &y.inverse().unwrap(), ExactValue::one());
    }

    #[test]
    fn nth_root_precision_doubling() {
        for (n, k) in [(2u32, 2u32), (2, 3), (8, 4), (17, 2), (3, 12)] {
            let a = nth_root(&Integer::from(n), k, 300);
            let b = nth_root(&Integer::from(n), k, 600);
            let d = Float::with_val(600, &a - &b).abs();
            assert!(d < Float::with_val(64, Float::i_exp(1, 8 - 300)), "{n} {k}");
            let back = Float::with_val(600, b.pow(k)) - n;
            assert!(back.abs().to_f64() < 1e-170);
        }
    }
}
