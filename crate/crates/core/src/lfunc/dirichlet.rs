use crate::error::{Error, Result};
use crate::numerics::{constants, hurwitz_zeta, PrecisionContext};
use rug::{Float, Rational};

/// Kronecker symbol `(a/n)`.
pub fn kronecker(a: i64, n: i64) -> i32 {
    if n == 0 {
        return if a.abs() == 1 { 1 } else { 0 };
    }
    let mut res = 1;
    let mut n = n;
    if n < 0 {
        n = -n;
        if a < 0 {
            res = -res;
        }
    }
    let v = n.trailing_zeros();
    if v > 0 {
        if a % 2 == 0 {
            return 0;
        }
        if v % 2 == 1 && matches!(a.rem_euclid(8), 3 | 5) {
            res = -res;
        }
        n >>= v;
    }
    res * jacobi(a.rem_euclid(n), n)
}

/// Jacobi symbol for odd positive `n` and `0 <= a < n`.
fn jacobi(mut a: i64, mut n: i64) -> i32 {
    let mut res = 1;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                res = -res;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            res = -res;
        }
        a %= n;
    }
    if n == 1 { res } else { 0 }
}

/// The quadratic character `chi_D(n) = (D/n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DirichletChar {
    d: i64,
}

impl DirichletChar {
    pub fn new(d: i64) -> Result<Self> {
        if d == 0 || !matches!(d.rem_euclid(4), 0 | 1) {
            return Err(Error::Precondition(format!("{d} is not a discriminant (must be 0 or 1 mod 4)")));
        }
        Ok(DirichletChar { d })
    }

    pub fn discriminant(&self) -> i64 {
        self.d
    }

    pub fn modulus(&self) -> i64 {
        self.d.abs()
    }

    pub fn value(&self, n: i64) -> i32 {
        kronecker(self.d, n)
    }

    pub fn is_odd(&self) -> bool {
        self.d < 0
    }

    /// Fundamental discriminants give primitive characters.
    pub fn is_primitive(&self) -> bool {
        is_fundamental(self.d)
    }
}

fn squarefree(n: i64) -> bool {
    let mut n = n.abs();
    let mut p = 2;
    while p * p <= n {
        if n % (p * p) == 0 {
            return false;
        }
        if n % p == 0 {
            n /= p;
        }
        p += 1;
    }
    true
}

pub fn is_fundamental(d: i64) -> bool {
    if d == 1 {
        return true;
    }
    match d.rem_euclid(4) {
        1 => squarefree(d),
        0 => {
            let m = d / 4;
            matches!(m.rem_euclid(4), 2 | 3) && squarefree(m)
        }
        _ => false,
    }
}

/// `L(chi_D, s) = |D|^{-s} sum_{a=1}^{|D|} chi(a) zeta(s, a/|D|)`.
pub fn dirichlet_l(chi: &DirichletChar, s: u32, ctx: &PrecisionContext) -> Result<Float> {
    if s < 2 {
        return Err(Error::Precondition("dirichlet_l needs s >= 2".into()));
    }
    let m = chi.modulus();
    let w = ctx.with_extra_bits(16);
    let mut acc = Float::new(w.prec());
    for a in 1..=m {
        let c = chi.value(a);
        if c != 0 {
            let z = hurwitz_zeta(s, &Rational::from((a, m)), &w);
            if c > 0 {
                acc += z;
            } else {
                acc -= z;
            }
        }
    }
    let scale = Float::with_val(w.prec(), m).pow(s);
    Ok(Float::with_val(ctx.prec(), acc / scale))
}

/// `L'(chi, -1) = |D|^{3/2} / (4 pi) * L(chi, 2)` for odd primitive `chi`.
pub fn dirichlet_lprime_minus1(chi: &DirichletChar, ctx: &PrecisionContext) -> Result<Float> {
    if !chi.is_odd() {
        return Err(Error::Precondition(format!("chi_{} is even", chi.discriminant())));
    }
    if !chi.is_primitive() {
        return Err(Error::Precondition(format!("chi_{} is not primitive", chi.discriminant())));
    }
    let w = ctx.with_extra_bits(16);
    let p = w.prec();
    let l2 = dirichlet_l(chi, 2, &w)?;
    let m = Float::with_val(p, chi.modulus());
    let m32 = Float::with_val(p, m.sqrt_ref()) * &m;
    let v = l2 * m32 / (constants::pi(p) * 4u32);
    Ok(Float::with_val(ctx.prec(), v))
}

/// `d_k = L'(chi_{-k}, -1)`.
pub fn d_k(k: i64, ctx: &PrecisionContext) -> Result<Float> {
    dirichlet_lprime_minus1(&DirichletChar::new(-k)?, ctx)
}

use rug::ops::Pow;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::digits_agreed;

    #[test]
    fn kronecker_small() {
        assert_eq!(kronecker(-4, 3), -1);
        assert_eq!(kronecker(12, 5), -1);
        let v: Vec<i32> = (0..7).map(|n| kronecker(-3, n)).collect();
        assert_eq!(v, vec![0, 1, -1, 0, 1, -1, 0]);
        // chi_8: +1 at 1,7 and -1 at 3,5 mod 8
        assert_eq!([1, 3, 5, 7].map(|n| kronecker(8, n)), [1, -1, -1, 1]);
        assert_eq!(kronecker(5, 2), -1);
        assert_eq!(kronecker(-3, -1), -1);
    }

    #[test]
    fn kronecker_matches_euler_criterion() {
        for p in [3i64, 5, 7, 11, 13, 101] {
            for a in -30i64..30 {
                let e = Integer::from(a).pow_mod(&Integer::from((p - 1) / 2), &Integer::from(p)).unwrap();
                let want = if a.rem_euclid(p) == 0 { 0 } else if e == 1 { 1 } else { -1 };
                assert_eq!(kronecker(a, p), want, "({a}/{p})");
            }
        }
    }

    #[test]
    fn catalan_and_chi3() {
        let c = PrecisionContext::new(30);
        let l4 = dirichlet_l(&DirichletChar::new(-4).unwrap(), 2, &c).unwrap();
        assert!(digits_agreed(&l4, &constants::catalan(c.prec()), 60) >= 38);
        let l3 = dirichlet_l(&DirichletChar::new(-3).unwrap(), 2, &c).unwrap();
        assert!((l3.to_f64() - 0.781_302_412_896_486_3).abs() < 1e-15);
        let z = dirichlet_l(&DirichletChar::new(1).unwrap(), 2, &c).unwrap();
        let pi2 = constants::pi(c.prec()).square() / 6u32;
        assert!(digits_agreed(&z, &pi2, 60) >= 38);
    }

    #[test]
    fn d4_is_two_catalan_over_pi() {
        let c = PrecisionContext::new(30);
        let d4 = d_k(4, &c).unwrap();
        let want = constants::catalan(c.prec()) * 2u32 / constants::pi(c.prec());
        assert!(digits_agreed(&d4, &want, 60) >= 38);
        assert!(d_k(3, &c).is_ok());
        assert!(dirichlet_lprime_minus1(&DirichletChar::new(5).unwrap(), &c).is_err());
    }

    #[test]
    fn fundamental_discriminants() {
        let fund: Vec<i64> = (-30..0).filter(|&d| is_fundamental(d)).collect();
        assert_eq!(fund, vec![-24, -23, -20, -19, -15, -11, -8, -7, -4, -3]);
    }

    use rug::Integer;
}
