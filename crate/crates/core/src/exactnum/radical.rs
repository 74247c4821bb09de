use crate::error::{Error, Result};
use rug::ops::Pow;
use rug::{Integer, Rational};
use std::fmt;

/// Primes allowed under a radical sign.
pub const PRIMES: [u32; 7] = [2, 3, 5, 7, 11, 13, 17];

/// A monomial `i^b * prod p^(e_p/12)` with `b` in {0,1} and `0 <= e_p < 12`.
///
/// Ordering puts the rational unit first, so canonical sums print with
/// their rational part leading.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Radical {
    pub(crate) imag: bool,
    pub(crate) exps: [u8; 7],
}

impl Radical {
    pub const ONE: Radical = Radical { imag: false, exps: [0; 7] };
    pub const I: Radical = Radical { imag: true, exps: [0; 7] };

    pub fn is_one(&self) -> bool {
        *self == Self::ONE
    }

    pub fn is_imaginary(&self) -> bool {
        self.imag
    }

    /// Exponent of `p` in twelfths.
    pub fn twelfths(&self, p: u32) -> u8 {
        PRIMES.iter().position(|&q| q == p).map(|k| self.exps[k]).unwrap_or(0)
    }

    /// Product of two monomials as `sign * rational * monomial`.
    pub fn mul(&self, o: &Radical) -> (Rational, Radical) {
        let mut coef = Integer::from(1);
        let mut exps = [0u8; 7];
        for k in 0..7 {
            let e = self.exps[k] + o.exps[k];
            if e >= 12 {
                coef *= PRIMES[k];
            }
            exps[k] = e % 12;
        }
        if self.imag && o.imag {
            coef = -coef;
        }
        (Rational::from(coef), Radical { imag: self.imag ^ o.imag, exps })
    }

    /// Smallest `k` with every exponent a multiple of `12/k`, and the
    /// integer `n` with this monomial's real part equal to `n^(1/k)`.
    pub fn as_root(&self) -> (u32, Integer) {
        let g = self.exps.iter().fold(12u32, |g, &e| gcd(g, e as u32));
        let k = 12 / g;
        let mut n = Integer::from(1);
        for (idx, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                n *= Integer::from(PRIMES[idx]).pow(e as u32 / g);
            }
        }
        (k, n)
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 { a } else { gcd(b, a % b) }
}

impl fmt::Display for Radical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (k, n) = self.as_root();
        match (self.imag, k) {
            (false, 1) => write!(f, "1"),
            (true, 1) => write!(f, "i"),
            (true, 2) => write!(f, "rt2(-{n})"),
            (true, _) => write!(f, "i*rt{k}({n})"),
            (false, _) => write!(f, "rt{k}({n})"),
        }
    }
}

/// User-facing description of a radical: `rt_k(n)` or the imaginary unit.
#[derive(Clone, Debug, PartialEq)]
pub enum RadicalDesc {
    One,
    I,
    Root { k: u32, n: Rational },
}

impl RadicalDesc {
    pub fn root(k: u32, n: impl Into<Rational>) -> Self {
        RadicalDesc::Root { k, n: n.into() }
    }

    /// Normalises to `coefficient * monomial`.
    ///
    /// Odd roots of negative numbers are real (`rt3(-2) = -rt3(2)`); square
    /// roots of negatives carry `i`.
    pub fn normalize(&self) -> Result<(Rational, Radical)> {
        match self {
            RadicalDesc::One => Ok((Rational::from(1), Radical::ONE)),
            RadicalDesc::I => Ok((Rational::from(1), Radical::I)),
            RadicalDesc::Root { k, n } => root_monomial(*k, n),
        }
    }
}

fn root_monomial(k: u32, n: &Rational) -> Result<(Rational, Radical)> {
    let bad = || Error::UnsupportedRadical(format!("rt{k}({n})"));
    if k == 0 || 12 % k != 0 || *n == 0 {
        return Err(bad());
    }
    let negative = *n < 0;
    let mut sign = Rational::from(1);
    let mut imag = false;
    if negative {
        if k == 1 || k % 2 == 1 {
            sign = Rational::from(-1);
        } else if k == 2 {
            imag = true;
        } else {
            return Err(bad());
        }
    }
    let step = 12 / k;
    let mut coef = Rational::from(1);
    let mut exps = [0u8; 7];
    // numerator contributes positive exponents, denominator negative ones
    let mut twelfths = [0i64; 7];
    let mut rest = [Integer::from(n.numer().clone().abs()), n.denom().clone()];
    for (side, r) in rest.iter_mut().enumerate() {
        for (idx, &p) in PRIMES.iter().enumerate() {
            while r.is_divisible_u(p) {
                *r /= p;
                twelfths[idx] += if side == 0 { step as i64 } else { -(step as i64) };
            }
        }
    }
    for (side, r) in rest.iter().enumerate() {
        if *r == 1 {
            continue;
        }
        let (root, rem) = r.clone().root_rem(Integer::new(), k);
        if rem != 0 {
            return Err(bad());
        }
        if side == 0 {
            coef *= Rational::from(root);
        } else {
            coef /= Rational::from(root);
        }
    }
    for idx in 0..7 {
        let t = twelfths[idx];
        let whole = t.div_euclid(12);
        exps[idx] = t.rem_euclid(12) as u8;
        let pw = Rational::from(Integer::from(PRIMES[idx]).pow(whole.unsigned_abs() as u32));
        if whole >= 0 {
            coef *= pw;
        } else {
            coef /= pw;
        }
    }
    Ok((coef * sign, Radical { imag, exps }))
}
