use num_complex::Complex64;
use rug::float::Constant;
use rug::Float;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// Arbitrary-precision complex number as a pair of MPFR floats.
#[derive(Clone, Debug, PartialEq)]
pub struct BigComplex {
    pub re: Float,
    pub im: Float,
}

impl BigComplex {
    pub fn zero(prec: u32) -> Self {
        BigComplex { re: Float::new(prec), im: Float::new(prec) }
    }

    pub fn one(prec: u32) -> Self {
        BigComplex { re: Float::with_val(prec, 1), im: Float::new(prec) }
    }

    pub fn i(prec: u32) -> Self {
        BigComplex { re: Float::new(prec), im: Float::with_val(prec, 1) }
    }

    pub fn new(re: Float, im: Float) -> Self {
        BigComplex { re, im }
    }

    pub fn from_real(re: Float) -> Self {
        let prec = re.prec();
        BigComplex { re, im: Float::new(prec) }
    }

    pub fn from_f64(prec: u32, re: f64, im: f64) -> Self {
        BigComplex { re: Float::with_val(prec, re), im: Float::with_val(prec, im) }
    }

    pub fn from_i64(prec: u32, re: i64) -> Self {
        BigComplex { re: Float::with_val(prec, re), im: Float::new(prec) }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn with_prec(&self, prec: u32) -> Self {
        BigComplex { re: Float::with_val(prec, &self.re), im: Float::with_val(prec, &self.im) }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn conj(&self) -> Self {
        BigComplex { re: self.re.clone(), im: -self.im.clone() }
    }

    /// `|z|^2`
    pub fn norm_sqr(&self) -> Float {
        let p = self.prec();
        Float::with_val(p, self.re.square_ref()) + Float::with_val(p, self.im.square_ref())
    }

    pub fn abs(&self) -> Float {
        Float::with_val(self.prec(), self.re.hypot_ref(&self.im))
    }

    pub fn arg(&self) -> Float {
        Float::with_val(self.prec(), self.im.atan2_ref(&self.re))
    }

    pub fn scale(&self, r: &Float) -> Self {
        let p = self.prec();
        BigComplex { re: Float::with_val(p, &self.re * r), im: Float::with_val(p, &self.im * r) }
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        BigComplex { re: self.re.clone() * k, im: self.im.clone() * k }
    }

    pub fn div_i64(&self, k: i64) -> Self {
        BigComplex { re: self.re.clone() / k, im: self.im.clone() / k }
    }

    /// Multiplication by `i`.
    pub fn mul_i(&self) -> Self {
        BigComplex { re: -self.im.clone(), im: self.re.clone() }
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn recip(&self) -> Self {
        let n = self.norm_sqr();
        BigComplex { re: Float::with_val(self.prec(), &self.re / &n), im: -Float::with_val(self.prec(), &self.im / &n) }
    }

    /// Principal logarithm.
    pub fn ln(&self) -> Self {
        BigComplex { re: self.abs().ln(), im: self.arg() }
    }

    pub fn exp(&self) -> Self {
        let p = self.prec();
        let r = Float::with_val(p, self.re.exp_ref());
        let (s, c) = Float::with_val(p, &self.im).sin_cos(Float::new(p));
        BigComplex { re: Float::with_val(p, &r * &c), im: r * s }
    }

    /// Principal square root (branch cut on the negative real axis).
    pub fn sqrt(&self) -> Self {
        let p = self.prec();
        if self.is_zero() {
            return BigComplex::zero(p);
        }
        let m = self.abs();
        // t = sqrt((|z| + |re|)/2)
        let t = (Float::with_val(p, &m + self.re.clone().abs()) / 2u32).sqrt();
        let half_im_over_t = Float::with_val(p, &self.im / &t) / 2u32;
        if self.re.is_sign_positive() {
            BigComplex { re: t, im: half_im_over_t }
        } else {
            let im = if self.im.is_sign_negative() { -t } else { t };
            BigComplex { re: half_im_over_t.abs(), im }
        }
    }

    /// Integer power by binary exponentiation; negative exponents invert.
    pub fn powi(&self, e: i64) -> Self {
        let p = self.prec();
        let mut base = if e < 0 { self.recip() } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = BigComplex::one(p);
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = base.square();
            }
        }
        acc
    }

    /// Principal power `exp(w * ln z)`.
    pub fn powc(&self, w: &BigComplex) -> Self {
        (w * &self.ln()).exp()
    }

    /// `e^{i x}` for real `x`.
    pub fn cis(x: &Float) -> Self {
        let p = x.prec();
        let (s, c) = x.clone().sin_cos(Float::new(p));
        BigComplex { re: c, im: s }
    }

    /// `e^{2 pi i tau}`
    pub fn q_of_tau(tau: &BigComplex) -> Self {
        let p = tau.prec();
        let two_pi = Float::with_val(p, Constant::Pi) * 2u32;
        tau.scale(&two_pi).mul_i().exp()
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn from_c64(prec: u32, z: Complex64) -> Self {
        Self::from_f64(prec, z.re, z.im)
    }

    /// Decimal rendering with `digits` significant digits per component.
    pub fn to_string_digits(&self, digits: usize) -> String {
        let re = fmt_float(&self.re, digits);
        if self.im.is_zero() {
            return re;
        }
        let im = fmt_float(&self.im.clone().abs(), digits);
        let sign = if self.im.is_sign_negative() { '-' } else { '+' };
        format!("{re} {sign} {im}*i")
    }
}

/// Scientific-notation decimal rendering of a float.
pub fn fmt_float(x: &Float, digits: usize) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    x.to_string_radix(10, Some(digits.max(1)))
}

impl fmt::Display for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(20);
        write!(f, "{}", self.to_string_digits(digits))
    }
}

impl<'a> Add<&'a BigComplex> for &'a BigComplex {
    type Output = BigComplex;
    fn add(self, o: &BigComplex) -> BigComplex {
        let p = self.prec();
        BigComplex { re: Float::with_val(p, &self.re + &o.re), im: Float::with_val(p, &self.im + &o.im) }
    }
}

impl<'a> Sub<&'a BigComplex> for &'a BigComplex {
    type Output = BigComplex;
    fn sub(self, o: &BigComplex) -> BigComplex {
        let p = self.prec();
        BigComplex { re: Float::with_val(p, &self.re - &o.re), im: Float::with_val(p, &self.im - &o.im) }
    }
}

impl<'a> Mul<&'a BigComplex> for &'a BigComplex {
    type Output = BigComplex;
    fn mul(self, o: &BigComplex) -> BigComplex {
        let p = self.prec();
        let ac = Float::with_val(p, &self.re * &o.re);
        let bd = Float::with_val(p, &self.im * &o.im);
        let ad = Float::with_val(p, &self.re * &o.im);
        let bc = Float::with_val(p, &self.im * &o.re);
        BigComplex { re: ac - bd, im: ad + bc }
    }
}

impl<'a> Div<&'a BigComplex> for &'a BigComplex {
    type Output = BigComplex;
    fn div(self, o: &BigComplex) -> BigComplex {
        self * &o.recip()
    }
}

impl Neg for BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        BigComplex { re: -self.re, im: -self.im }
    }
}

impl Neg for &BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        BigComplex { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl AddAssign<&BigComplex> for BigComplex {
    fn add_assign(&mut self, o: &BigComplex) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl SubAssign<&BigComplex> for BigComplex {
    fn sub_assign(&mut self, o: &BigComplex) {
        self.re -= &o.re;
        self.im -= &o.im;
    }
}

impl MulAssign<&BigComplex> for BigComplex {
    fn mul_assign(&mut self, o: &BigComplex) {
        *self = &*self * o;
    }
}

impl MulAssign<&Float> for BigComplex {
    fn mul_assign(&mut self, o: &Float) {
        self.re *= o;
        self.im *= o;
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<BigComplex> for BigComplex {
            type Output = BigComplex;
            fn $m(self, o: BigComplex) -> BigComplex {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a BigComplex> for BigComplex {
            type Output = BigComplex;
            fn $m(self, o: &BigComplex) -> BigComplex {
                (&self).$m(o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);
owned_ops!(Div, div);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_principal_branch() {
        let p = 128;
        for &(a, b) in &[(-4.0, 0.0), (-4.0, -1e-30), (3.0, 4.0), (0.0, -2.0), (-1.0, 1.0)] {
            let z = BigComplex::from_f64(p, a, b);
            let r = z.sqrt();
            assert!(r.re.is_sign_positive() || r.re.is_zero());
            let back = r.square();
            assert!((back - z).abs().to_f64() < 1e-30);
        }
    }

    #[test]
    fn powi_matches_repeated_product() {
        let z = BigComplex::from_f64(100, 0.3, -0.7);
        let mut acc = BigComplex::one(100);
        for _ in 0..7 {
            acc = &acc * &z;
        }
        assert!((z.powi(7) - acc).abs().to_f64() < 1e-28);
        let inv = z.powi(-3) * z.powi(3);
        assert!((inv - BigComplex::one(100)).abs().to_f64() < 1e-28);
    }

    #[test]
    fn exp_ln_roundtrip() {
        let z = BigComplex::from_f64(120, -1.25, 2.5);
        let w = z.ln().exp();
        assert!((w - z).abs().to_f64() < 1e-32);
    }
}
