//! Newform coefficient sources: eta quotients, congruence theta series,
//! the Grössencharacter of conductor `(3 + 3 sqrt(-3))`, quadratic twists
//! and plain-text coefficient files.

use super::dirichlet::kronecker;
use crate::error::{Error, Result};
use crate::modular::{eta_quotient_qexp, EtaQuotientSpec};
use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::RwLock;

/// Largest order served for theta-type sources.
pub const MAX_THETA_ORDER: usize = 100_000;

/// Sign of the Fricke involution, `Lambda(s) = eps Lambda(k - s)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum FrickeSign {
    Plus,
    Minus,
    Unknown,
}

impl FrickeSign {
    pub fn value(self) -> Option<i32> {
        match self {
            FrickeSign::Plus => Some(1),
            FrickeSign::Minus => Some(-1),
            FrickeSign::Unknown => None,
        }
    }

    pub fn from_i32(e: i32) -> Self {
        if e > 0 { FrickeSign::Plus } else { FrickeSign::Minus }
    }
}

/// `sum_{(m,n) in classes mod M} w(m,n) q^{F(m,n)}` with
/// `w = (wm m + wn n) / wden` and `F = (A m^2 + B n^2) / fden`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ThetaSpec {
    pub modulus: i64,
    pub classes: Vec<(i64, i64)>,
    pub weight: (i64, i64, i64),
    pub form: (i64, i64, i64),
}

impl ThetaSpec {
    /// The 4-class set defining the level 108 form:
    /// `(m,n) = (-1,-2), (2,1), (1,0), (-2,3) mod 6`, weight `m + 3n`, form `m^2 + 3n^2`.
    pub fn f108() -> Self {
        ThetaSpec { modulus: 6, classes: vec![(-1, -2), (2, 1), (1, 0), (-2, 3)], weight: (1, 3, 1), form: (1, 3, 1) }
    }

    /// `sum_{(1,1),(-2,-2) mod 6} (m+3n)/4 q^{(m^2+3n^2)/4}`.
    pub fn f27() -> Self {
        ThetaSpec { modulus: 6, classes: vec![(1, 1), (-2, -2)], weight: (1, 3, 4), form: (1, 3, 4) }
    }

    /// The six-class set giving the level 27 form with weight `m + 3n` over `m^2 + 3n^2`.
    pub fn f27_b() -> Self {
        ThetaSpec { modulus: 6, classes: vec![(1, 0), (-2, 3), (1, -1), (-2, 2), (2, -1), (-1, 2)], weight: (1, 3, 1), form: (1, 3, 1) }
    }

    pub fn with_classes(&self, classes: &[(i64, i64)]) -> Self {
        ThetaSpec { classes: classes.to_vec(), ..self.clone() }
    }

    pub fn with_weight(&self, weight: (i64, i64, i64)) -> Self {
        ThetaSpec { weight, ..self.clone() }
    }

    fn in_class(&self, m: i64, n: i64) -> bool {
        let md = self.modulus;
        self.classes.iter().any(|&(a, b)| (m - a).rem_euclid(md) == 0 && (n - b).rem_euclid(md) == 0)
    }

    /// Exact expansion `c_0..c_order` of the series in integral powers of q.
    /// Fails if an exponent or an accumulated coefficient is not integral.
    pub fn expand(&self, order: usize) -> Result<Vec<i64>> {
        if order > MAX_THETA_ORDER {
            return Err(Error::OrderOverflow(order));
        }
        let (a, b, fd) = self.form;
        let (wm, wn, wd) = self.weight;
        if a <= 0 || b <= 0 || fd <= 0 || wd <= 0 {
            return Err(Error::Precondition("theta form must be positive definite with positive denominators".into()));
        }
        let lim = order as i64 * fd;
        let mm = ((lim / a) as f64).sqrt() as i64 + 1;
        let nm = ((lim / b) as f64).sqrt() as i64 + 1;
        let mut acc = vec![0i64; order + 1];
        for m in -mm..=mm {
            for n in -nm..=nm {
                let f = a * m * m + b * n * n;
                if f > lim || !self.in_class(m, n) {
                    continue;
                }
                if f % fd != 0 {
                    return Err(Error::Precondition(format!("non-integral exponent at ({m},{n})")));
                }
                acc[(f / fd) as usize] += wm * m + wn * n;
            }
        }
        acc.iter()
            .enumerate()
            .map(|(k, &v)| {
                if v % wd != 0 {
                    Err(Error::Precondition(format!("non-integral coefficient at q^{k}")))
                } else {
                    Ok(v / wd)
                }
            })
            .collect()
    }
}

/// An element `(x + y sqrt(-3)) / 2` of the Eisenstein integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EisensteinHalf {
    pub x: i64,
    pub y: i64,
}

impl EisensteinHalf {
    pub fn from_mn(m: i64, n: i64) -> Self {
        EisensteinHalf { x: 2 * m, y: 2 * n }
    }

    pub fn mul(self, o: Self) -> Self {
        // ((x1 x2 - 3 y1 y2) + (x1 y2 + x2 y1) sqrt(-3)) / 4
        let x = self.x * o.x - 3 * self.y * o.y;
        let y = self.x * o.y + o.x * self.y;
        debug_assert!(x % 2 == 0 && y % 2 == 0);
        EisensteinHalf { x: x / 2, y: y / 2 }
    }

    pub fn norm(self) -> i64 {
        (self.x * self.x + 3 * self.y * self.y) / 4
    }

    /// Integer coordinates `(m, n)` with value `m + n sqrt(-3)`, if any.
    pub fn as_mn(self) -> Option<(i64, i64)> {
        (self.x % 2 == 0 && self.y % 2 == 0).then_some((self.x / 2, self.y / 2))
    }

    /// The six associates `u * self`.
    pub fn associates(self) -> [Self; 6] {
        let w = EisensteinHalf { x: 1, y: 1 };
        let mut out = [self; 6];
        for i in 1..6 {
            out[i] = out[i - 1].mul(w);
        }
        out
    }
}

/// Representative `m + n sqrt(-3)` of an ideal prime to `(3+3sqrt(-3))`:
/// `m > 0`, `3 !| m`, `m != n mod 2`.
pub fn ideal_representative(a: EisensteinHalf) -> Option<(i64, i64)> {
    a.associates().into_iter().filter_map(|u| u.as_mn()).find(|&(m, n)| m > 0 && m % 3 != 0 && (m - n).rem_euclid(2) == 1)
}

/// The Grössencharacter on representatives, as an [`EisensteinHalf`].
pub fn phi(m: i64, n: i64) -> EisensteinHalf {
    let cm = kronecker(-3, m) as i64;
    let cn = kronecker(-3, n) as i64;
    if n % 3 != 0 {
        EisensteinHalf { x: -cm * m + cn * 3 * n, y: -(cn * m + cm * n) }
    } else {
        EisensteinHalf { x: 2 * cm * m, y: 2 * cm * n }
    }
}

/// `m + n sqrt(-3) = 1 mod (3 + 3 sqrt(-3))`.
pub fn is_one_mod_conductor(m: i64, n: i64) -> bool {
    // (a + b sqrt(-3)) / (3 + 3 sqrt(-3)) = ((a+3b) + (b-a) sqrt(-3)) / 12
    let (a, b) = (m - 1, n);
    let (u, v) = (a + 3 * b, b - a);
    u % 6 == 0 && v % 6 == 0 && ((u / 6) - (v / 6)).rem_euclid(2) == 0
}

/// Coefficients `a_0..a_Q` of `sum phi(a) q^{N(a)}` over ideals prime to
/// the conductor.
pub fn grossencharacter_coeffs(order: usize) -> Result<Vec<i64>> {
    if order > MAX_THETA_ORDER {
        return Err(Error::OrderOverflow(order));
    }
    let lim = order as i64;
    let mut twice = vec![0i64; order + 1];
    let mm = (lim as f64).sqrt() as i64 + 1;
    let nm = ((lim / 3) as f64).sqrt() as i64 + 1;
    for m in 1..=mm {
        if m % 3 == 0 {
            continue;
        }
        for n in -nm..=nm {
            let norm = m * m + 3 * n * n;
            if norm > lim || (m - n).rem_euclid(2) == 0 {
                continue;
            }
            twice[norm as usize] += phi(m, n).x;
        }
    }
    twice
        .iter()
        .enumerate()
        .map(|(k, &v)| if v % 2 == 0 { Ok(v / 2) } else { Err(Error::Precondition(format!("odd real part at q^{k}"))) })
        .collect()
}

/// Exact eta-quotient coefficients as machine integers, `a_0..a_order`
/// (index shifted by the integral leading power).
pub fn eta_coeffs(spec: &EtaQuotientSpec, order: usize) -> Result<Vec<i64>> {
    let lead = spec.q_power();
    if *lead.denom() != 1 || *lead.numer() < 0 {
        return Err(Error::Precondition(format!("eta quotient has non-integral leading power {lead}")));
    }
    let shift = lead.numer().to_usize().unwrap_or(0);
    let mut out = vec![0i64; order + 1];
    if shift <= order {
        let e = eta_quotient_qexp(spec, order - shift)?;
        for (i, c) in e.coeffs.iter().enumerate() {
            out[i + shift] = c.to_i64().ok_or_else(|| Error::Precondition("coefficient exceeds i64".into()))?;
        }
    }
    Ok(out)
}

static COEFF_DIR: RwLock<Option<PathBuf>> = RwLock::new(None);

/// Override `MAHLER_COEFF_DIR` for this process.
pub fn set_coeff_dir(dir: Option<PathBuf>) {
    *COEFF_DIR.write().unwrap() = dir;
}

pub fn coeff_dir() -> Option<PathBuf> {
    if let Some(d) = COEFF_DIR.read().unwrap().clone() {
        return Some(d);
    }
    std::env::var_os("MAHLER_COEFF_DIR").map(PathBuf::from)
}

/// Path of the coefficient file for `label` in the active directory.
pub fn coeff_path(label: &str) -> Option<PathBuf> {
    coeff_dir().map(|d| d.join(format!("{label}.txt")))
}

/// Parsed contents of a coefficient file.
#[derive(Clone, Debug, PartialEq)]
pub struct CoeffFile {
    pub label: String,
    pub level: u64,
    pub weight: u32,
    pub fricke: FrickeSign,
    /// `a[0]` is unused and zero.
    pub a: Vec<i64>,
}

fn malformed(path: &Path, reason: impl Into<String>) -> Error {
    Error::MalformedFile { path: path.display().to_string(), reason: reason.into() }
}

pub fn parse_header(path: &Path, line: &str) -> Result<(String, u64, u32, FrickeSign)> {
    let body = line.strip_prefix('#').ok_or_else(|| malformed(path, "missing '#' header"))?;
    let mut fields = BTreeMap::new();
    for tok in body.split_whitespace() {
        let (k, v) = tok.split_once('=').ok_or_else(|| malformed(path, format!("bad header field '{tok}'")))?;
        fields.insert(k.to_string(), v.to_string());
    }
    let get = |k: &str| fields.get(k).cloned().ok_or_else(|| malformed(path, format!("header lacks '{k}'")));
    let label = get("label")?;
    let level = get("level")?.parse::<u64>().map_err(|_| malformed(path, "level is not an integer"))?;
    let weight = get("weight")?.parse::<u32>().map_err(|_| malformed(path, "weight is not an integer"))?;
    let fricke = match get("fricke")?.as_str() {
        "+1" | "1" => FrickeSign::Plus,
        "-1" => FrickeSign::Minus,
        "?" => FrickeSign::Unknown,
        other => return Err(malformed(path, format!("bad fricke sign '{other}'"))),
    };
    if level == 0 || !(2..=3).contains(&weight) {
        return Err(malformed(path, "level must be positive and weight 2 or 3"));
    }
    Ok((label, level, weight, fricke))
}

/// Read only the header line.
pub fn read_header(path: &Path) -> Result<(String, u64, u32, FrickeSign)> {
    let text = fs::read_to_string(path).map_err(|e| Error::MissingData(format!("{}: {e}", path.display())))?;
    let first = text.lines().next().ok_or_else(|| malformed(path, "empty file"))?;
    parse_header(path, first)
}

/// Number of divisors.
pub fn divisor_count(n: u64) -> u64 {
    let mut n = n;
    let mut d = 1;
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        d *= e + 1;
        p += 1;
    }
    if n > 1 {
        d *= 2;
    }
    d
}

/// `|a_n| <= d(n) n^{(k-1)/2}` for every `n`.
pub fn deligne_ok(a: &[i64], weight: u32) -> std::result::Result<(), usize> {
    for (n, &v) in a.iter().enumerate().skip(1) {
        let bound = divisor_count(n as u64) as f64 * (n as f64).powf((weight as f64 - 1.0) / 2.0);
        if (v.abs() as f64) > bound * (1.0 + 1e-12) {
            return Err(n);
        }
    }
    Ok(())
}

pub fn parse_coeff_file(path: &Path, text: &str) -> Result<CoeffFile> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let first = lines.next().ok_or_else(|| malformed(path, "empty file"))?;
    let (label, level, weight, fricke) = parse_header(path, first)?;
    let mut a = vec![0i64];
    for (i, line) in lines.enumerate() {
        let mut it = line.split_whitespace();
        let n: usize = it.next().and_then(|s| s.parse().ok()).ok_or_else(|| malformed(path, format!("bad index on data line {}", i + 1)))?;
        let v: i64 = it.next().and_then(|s| s.parse().ok()).ok_or_else(|| malformed(path, format!("bad coefficient on data line {}", i + 1)))?;
        if it.next().is_some() {
            return Err(malformed(path, format!("trailing data on line {}", i + 1)));
        }
        if n != a.len() {
            return Err(malformed(path, format!("expected n = {}, found {n}", a.len())));
        }
        a.push(v);
    }
    if a.len() < 2 || a[1] != 1 {
        return Err(malformed(path, "a_1 must be 1"));
    }
    if let Err(n) = deligne_ok(&a, weight) {
        return Err(malformed(path, format!("a_{n} violates the Deligne bound")));
    }
    if let Some(prefix) = known_prefix(&label) {
        for (n, &want) in prefix.iter().enumerate().skip(1) {
            match a.get(n) {
                Some(&got) if got == want => {}
                Some(&got) => return Err(malformed(path, format!("a_{n} = {got} contradicts the published expansion ({want})"))),
                None => return Err(malformed(path, format!("file shorter than the published prefix ({n})"))),
            }
        }
    }
    Ok(CoeffFile { label, level, weight, fricke, a })
}

pub fn load_coeff_file(path: &Path) -> Result<CoeffFile> {
    let text = fs::read_to_string(path).map_err(|e| Error::MissingData(format!("{}: {e}", path.display())))?;
    parse_coeff_file(path, &text)
}

/// Write a coefficient table in the file format.
pub fn write_coeff_file(path: &Path, label: &str, level: u64, weight: u32, fricke: FrickeSign, a: &[i64]) -> Result<()> {
    let sign = match fricke {
        FrickeSign::Plus => "+1",
        FrickeSign::Minus => "-1",
        FrickeSign::Unknown => "?",
    };
    let mut s = format!("# label={label} level={level} weight={weight} fricke={sign}\n");
    for (n, v) in a.iter().enumerate().skip(1) {
        s.push_str(&format!("{n} {v}\n"));
    }
    fs::write(path, s).map_err(|e| Error::MissingData(format!("{}: {e}", path.display())))
}

fn dense(terms: &[(usize, i64)]) -> Vec<i64> {
    let len = terms.iter().map(|t| t.0).max().unwrap_or(0) + 1;
    let mut v = vec![0; len];
    for &(n, c) in terms {
        v[n] = c;
    }
    v
}

/// Published leading coefficients used to validate ingested files.
pub fn known_prefix(label: &str) -> Option<Vec<i64>> {
    let t: &[(usize, i64)] = match label {
        "f448" => &[(1, 1), (5, -2), (7, -1), (9, -3), (11, 4), (13, -2), (17, -6)],
        "f56" => &[(1, 1), (5, 2), (7, -1), (9, -3), (11, -4), (13, 2), (17, -6)],
        "f289" => &[(1, 1), (2, -1), (4, -1), (5, 2), (7, -4), (8, 3), (9, -3)],
        "f17" => &[(1, 1), (2, -1), (4, -1), (5, -2), (7, 4), (8, 3), (9, -3)],
        "f100" => &[(1, 1), (3, 2), (7, -2), (9, 1), (13, -2), (17, 6), (19, -4)],
        "f108" => &[(1, 1), (7, 5), (13, -7), (19, -1), (25, -5), (31, -4), (37, -1)],
        _ => return None,
    };
    Some(dense(t))
}

/// `a_m a_n = a_{mn}` for coprime `m, n` with `mn <= bound`; returns the
/// first failing pair.
pub fn hecke_multiplicative(a: &[i64], bound: usize) -> std::result::Result<(), (usize, usize)> {
    let bound = bound.min(a.len() - 1);
    for m in 2..=bound {
        for n in m + 1..=bound / m {
            if gcd(m, n) == 1 && a[m] * a[n] != a[m * n] {
                return Err((m, n));
            }
        }
    }
    Ok(())
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f108_two_ways() {
        let g = grossencharacter_coeffs(3000).unwrap();
        let t = ThetaSpec::f108().expand(3000).unwrap();
        assert_eq!(g, t);
        assert_eq!(&g[..38], &known_prefix("f108").unwrap()[..]);
    }

    #[test]
    fn phi_is_identity_on_one_mod_conductor() {
        let mut seen = 0;
        for m in 1..60 {
            for n in -30..30 {
                if m % 3 != 0 && (m - n) % 2 != 0 && is_one_mod_conductor(m, n) {
                    assert_eq!(phi(m, n), EisensteinHalf::from_mn(m, n), "({m},{n})");
                    seen += 1;
                }
            }
        }
        assert!(seen >= 50);
    }

    #[test]
    fn phi_multiplicative() {
        let reps: Vec<(i64, i64)> = (1..20).flat_map(|m| (-8..8).map(move |n| (m, n))).filter(|&(m, n)| m % 3 != 0 && (m - n) % 2 != 0).collect();
        let mut checked = 0;
        for (i, &(m1, n1)) in reps.iter().enumerate() {
            for &(m2, n2) in reps.iter().skip(i).step_by(7) {
                let a = EisensteinHalf::from_mn(m1, n1);
                let b = EisensteinHalf::from_mn(m2, n2);
                if gcd(a.norm() as usize, b.norm() as usize) != 1 {
                    continue;
                }
                let (m, n) = ideal_representative(a.mul(b)).expect("product is prime to the conductor");
                assert_eq!(phi(m, n), phi(m1, n1).mul(phi(m2, n2)));
                checked += 1;
            }
        }
        assert!(checked >= 50);
    }

    #[test]
    fn f27_theta_equals_eta() {
        let t = ThetaSpec::f27().expand(2000).unwrap();
        let e = eta_coeffs(&EtaQuotientSpec::new(&[(3, 2), (9, 2)]), 2000).unwrap();
        assert_eq!(t, e);
        assert_eq!(ThetaSpec::f27_b().expand(2000).unwrap(), e);
    }

    #[test]
    fn file_round_trip_and_validation() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("f108.txt");
        let a = grossencharacter_coeffs(100).unwrap();
        write_coeff_file(&p, "f108", 108, 2, FrickeSign::Plus, &a).unwrap();
        let f = load_coeff_file(&p).unwrap();
        assert_eq!(f.a, a);
        assert_eq!(f.level, 108);
        let mut bad = a.clone();
        bad[7] = 4;
        write_coeff_file(&p, "f108", 108, 2, FrickeSign::Plus, &bad).unwrap();
        assert!(matches!(load_coeff_file(&p), Err(Error::MalformedFile { .. })));
        std::fs::write(&p, "# label=x level=5 weight=2 fricke=+1\n1 1\n3 0\n").unwrap();
        assert!(matches!(load_coeff_file(&p), Err(Error::MalformedFile { .. })));
        assert!(matches!(load_coeff_file(&dir.path().join("none.txt")), Err(Error::MissingData(_))));
    }

    #[test]
    fn hecke_check_detects_errors() {
        let mut a = eta_coeffs(&EtaQuotientSpec::new(&[(6, 4)]), 500).unwrap();
        assert!(hecke_multiplicative(&a, 500).is_ok());
        a[35] += 1;
        assert!(hecke_multiplicative(&a, 500).is_err());
    }
}
