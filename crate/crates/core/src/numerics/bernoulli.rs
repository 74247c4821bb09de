use rug::Rational;
use std::sync::{OnceLock, RwLock};

fn table() -> &'static RwLock<Vec<Rational>> {
    static T: OnceLock<RwLock<Vec<Rational>>> = OnceLock::new();
    T.get_or_init(|| RwLock::new(Vec::new()))
}

/// Bernoulli numbers `B_0..B_n` (with `B_1 = -1/2`) by the standard recurrence
/// `sum_{k<=m} binom(m+1,k) B_k = 0`.
fn extend(v: &mut Vec<Rational>, n: usize) {
    if v.is_empty() {
        v.push(Rational::from(1));
    }
    while v.len() <= n {
        let m = v.len();
        let mut acc = Rational::new();
        let mut binom = rug::Integer::from(1); // binom(m+1, 0)
        for (k, b) in v.iter().enumerate() {
            acc += Rational::from(&binom * b.numer()) / b.denom();
            binom *= (m + 1 - k) as u64;
            binom /= (k + 1) as u64;
        }
        // binom now equals binom(m+1, m) = m+1
        v.push(-acc / Rational::from(m as u64 + 1));
    }
}

/// `B_n` as an exact rational.
pub fn bernoulli(n: usize) -> Rational {
    if let Some(b) = table().read().expect("bernoulli cache poisoned").get(n) {
        return b.clone();
    }
    let mut w = table().write().expect("bernoulli cache poisoned");
    extend(&mut w, n);
    w[n].clone()
}
