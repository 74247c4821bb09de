//! Per-precision cache for elementary constants.
//!
//! Values come from MPFR's correctly rounded routines; the test suite
//! checks pi against an independent Gauss-Legendre AGM iteration.

use rug::float::Constant;
use rug::Float;
use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Which {
    Pi,
    Log2,
    Euler,
    Catalan,
}

fn cache() -> &'static RwLock<HashMap<(Which, u32), Float>> {
    static C: OnceLock<RwLock<HashMap<(Which, u32), Float>>> = OnceLock::new();
    C.get_or_init(|| RwLock::new(HashMap::new()))
}

fn get(w: Which, prec: u32) -> Float {
    if let Some(v) = cache().read().expect("constant cache poisoned").get(&(w, prec)) {
        return v.clone();
    }
    let v = match w {
        Which::Pi => Float::with_val(prec, Constant::Pi),
        Which::Log2 => Float::with_val(prec, Constant::Log2),
        Which::Euler => Float::with_val(prec, Constant::Euler),
        Which::Catalan => Float::with_val(prec, Constant::Catalan),
    };
    let mut w_lock = cache().write().expect("constant cache poisoned");
    w_lock.entry((w, prec)).or_insert(v).clone()
}

pub fn pi(prec: u32) -> Float {
    get(Which::Pi, prec)
}

pub fn two_pi(prec: u32) -> Float {
    pi(prec) * 2u32
}

pub fn log2(prec: u32) -> Float {
    get(Which::Log2, prec)
}

pub fn euler_gamma(prec: u32) -> Float {
    get(Which::Euler, prec)
}

pub fn catalan(prec: u32) -> Float {
    get(Which::Catalan, prec)
}

/// `sqrt(n)` at the given precision.
pub fn sqrt_u(n: u32, prec: u32) -> Float {
    Float::with_val(prec, n).sqrt()
}

/// Gauss-Legendre arithmetic-geometric-mean iteration for pi.
pub fn pi_agm(prec: u32) -> Float {
    let p = prec + 32;
    let mut a = Float::with_val(p, 1);
    let mut b = Float::with_val(p, 0.5).sqrt();
    let mut t = Float::with_val(p, 0.25);
    let mut x = Float::with_val(p, 1);
    let eps = Float::with_val(p, Float::i_exp(1, -(prec as i32)));
    loop {
        let y = a.clone();
        a = Float::with_val(p, &a + &b) / 2u32;
        b = Float::with_val(p, &b * &y).sqrt();
        let d = Float::with_val(p, &a - &y);
        t -= Float::with_val(p, &x * Float::with_val(p, d.square_ref()));
        x *= 2u32;
        if Float::with_val(p, &a - &b).abs() < eps {
            break;
        }
    }
    let s = Float::with_val(p, &a + &b);
    Float::with_val(prec, Float::with_val(p, s.square_ref()) / (t * 4u32))
}
