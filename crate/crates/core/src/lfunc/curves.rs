//! Weight 2 coefficient tables from elliptic curves over `Q` by point
//! counting, used to produce coefficient files for the forms that have no
//! eta-quotient or theta construction in-crate.

use super::coeffs::{write_coeff_file, FrickeSign};
use super::dirichlet::kronecker;
use crate::error::Result;
use std::path::{Path, PathBuf};

/// A curve `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6` of conductor `level`.
#[derive(Clone, Copy, Debug)]
pub struct Curve {
    pub label: &'static str,
    pub level: u64,
    pub ainvs: [i64; 5],
}

/// Curves (minimal models) whose L-functions are the file-only weight 2 forms.
pub const CURVES: &[Curve] = &[
    Curve { label: "f15", level: 15, ainvs: [1, 1, 1, -10, -10] },
    Curve { label: "f17", level: 17, ainvs: [1, -1, 1, -1, -14] },
    Curve { label: "f56", level: 56, ainvs: [0, 0, 0, 1, 2] },
    Curve { label: "f100", level: 100, ainvs: [0, -1, 0, -33, 62] },
];

/// Forms obtained as quadratic twists: `(label, level, base, D)`.
pub const TWISTS: &[(&str, u64, &str, i64)] = &[("f289", 289, "f17", 17), ("f448", 448, "f56", 8)];

fn primes_upto(n: usize) -> Vec<usize> {
    let mut sieve = vec![true; n + 1];
    let mut out = vec![];
    for p in 2..=n {
        if sieve[p] {
            out.push(p);
            for m in (p * p..=n).step_by(p) {
                sieve[m] = false;
            }
        }
    }
    out
}

/// `a_p = p - #{affine points mod p}`, valid at good and bad primes for a
/// minimal model.
pub fn ap(c: &Curve, p: u64) -> i64 {
    let [a1, a2, a3, a4, a6] = c.ainvs.map(|v| v.rem_euclid(p as i64) as u64);
    let f = |x: u64| (x * x % p * x + a2 * x % p * x + a4 * x + a6) % p;
    let count = if p == 2 {
        let mut n = 0;
        for x in 0..2 {
            for y in 0..2 {
                if (y * y + a1 * x * y + a3 * y) % 2 == f(x) {
                    n += 1;
                }
            }
        }
        n
    } else {
        let mut square = vec![0i64; p as usize];
        for y in 0..p {
            square[(y * y % p) as usize] += 1;
        }
        // (2y + a1 x + a3)^2 = 4 f(x) + (a1 x + a3)^2
        (0..p)
            .map(|x| {
                let b = (a1 * x + a3) % p;
                square[((4 * f(x) + b * b) % p) as usize]
            })
            .sum::<i64>()
    };
    p as i64 - count
}

/// `a_1..a_order` (index 0 is zero).
pub fn curve_coeffs(c: &Curve, order: usize) -> Vec<i64> {
    let mut a = vec![0i64; order + 1];
    if order == 0 {
        return a;
    }
    a[1] = 1;
    // prime-power values first, then multiplicativity via smallest factor
    let mut pp = vec![0i64; order + 1];
    for p in primes_upto(order) {
        let t = ap(c, p as u64);
        let bad = c.level % p as u64 == 0;
        let (mut prev, mut cur) = (1i64, t);
        let mut q = p;
        loop {
            pp[q] = cur;
            if q > order / p {
                break;
            }
            q *= p;
            let next = if bad { cur * t } else { t * cur - p as i64 * prev };
            prev = cur;
            cur = next;
        }
    }
    for n in 2..=order {
        let mut p = 2;
        while n % p != 0 {
            p += 1;
        }
        let mut q = p;
        while (n / q) % p == 0 {
            q *= p;
        }
        a[n] = if q == n { pp[n] } else { pp[q] * a[n / q] };
    }
    a
}

/// `a_n chi_D(n)`.
pub fn twist(a: &[i64], d: i64) -> Vec<i64> {
    a.iter().enumerate().map(|(n, &v)| v * kronecker(d, n as i64) as i64).collect()
}

/// Write every curve and twist table with `order` coefficients into `dir`.
pub fn write_curve_files(dir: &Path, order: usize) -> Result<Vec<PathBuf>> {
    let mut out = vec![];
    for c in CURVES {
        let path = dir.join(format!("{}.txt", c.label));
        write_coeff_file(&path, c.label, c.level, 2, FrickeSign::Unknown, &curve_coeffs(c, order))?;
        out.push(path);
    }
    for &(label, level, base, d) in TWISTS {
        let c = CURVES.iter().find(|c| c.label == base).expect("twist base is a listed curve");
        let path = dir.join(format!("{label}.txt"));
        write_coeff_file(&path, label, level, 2, FrickeSign::Unknown, &twist(&curve_coeffs(c, order), d))?;
        out.push(path);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lfunc::coeffs::{eta_coeffs, hecke_multiplicative, known_prefix};
    use crate::modular::EtaQuotientSpec;

    fn by_label(l: &str) -> Vec<i64> {
        let q = 200;
        match CURVES.iter().find(|c| c.label == l) {
            Some(c) => curve_coeffs(c, q),
            None => {
                let &(_, _, base, d) = TWISTS.iter().find(|t| t.0 == l).unwrap();
                twist(&by_label(base), d)
            }
        }
    }

    #[test]
    fn prefixes_match_published() {
        for l in ["f17", "f56", "f100", "f289", "f448"] {
            let a = by_label(l);
            let p = known_prefix(l).unwrap();
            assert_eq!(&a[..p.len()], &p[..], "{l}");
        }
    }

    #[test]
    fn f15_is_the_eta_product() {
        let c = curve_coeffs(&CURVES[0], 500);
        let e = eta_coeffs(&EtaQuotientSpec::new(&[(1, 1), (3, 1), (5, 1), (15, 1)]), 500).unwrap();
        assert_eq!(c, e);
    }

    #[test]
    fn multiplicative() {
        for c in CURVES {
            assert!(hecke_multiplicative(&curve_coeffs(c, 400), 400).is_ok(), "{}", c.label);
        }
    }
}
