use mahler::hypergeom;
use mahler::modular::{self, Tau};
use mahler::numerics::{constants, digits_agreed, BigComplex, PrecisionContext};
use mahler::verify::properties;
use proptest::prelude::*;
use rug::Float;

fn ctx() -> PrecisionContext {
    PrecisionContext::new(30)
}

fn close(a: &BigComplex, b: &BigComplex, digits: i64) -> bool {
    let p = a.prec();
    let scale = b.abs().max(&Float::with_val(p, 1));
    let diff = (a - b).abs();
    diff.is_zero() || Float::with_val(p, &scale / diff).log10().to_f64() >= digits as f64
}

#[test]
fn eta_at_i() {
    // eta(i) = Gamma(1/4) / (2 pi^(3/4))
    let c = ctx();
    let p = c.prec();
    let g = Float::with_val(p, Float::with_val(p, 0.25).gamma_ref());
    let pi34 = Float::with_val(p, constants::pi(p).ln() * 3u32 / 4u32).exp();
    let want = Float::with_val(p, g / pi34) / 2u32;
    let e = modular::eta(&Tau::from_f64(p, 0.0, 1.0).unwrap(), &c);
    assert!(digits_agreed(&e.re, &want, 40) >= 30);
    assert!(e.im.is_zero() || e.im.clone().abs() < 1e-35);
}

#[test]
fn j_at_elliptic_points() {
    let c = ctx();
    let p = c.prec();
    let j = modular::j_invariant(&Tau::from_f64(p, 0.0, 1.0).unwrap(), &c);
    assert!(close(&j, &BigComplex::from_i64(p, 1728), 25));
    let rho = Tau::parse("(-1+sqrt(-3))/2", &c).unwrap();
    assert!(modular::j_invariant(&rho, &c).abs() < 1e-20);
    // class number one: j((1+sqrt(-163))/2) = -640320^3
    let y = Float::with_val(p, 163).sqrt() / 2u32;
    let t = Tau::new(BigComplex::new(Float::with_val(p, 0.5), Float::with_val(p, y))).unwrap();
    assert!(close(&modular::j_invariant(&t, &c), &BigComplex::from_i64(p, -640320i64.pow(3)), 25));
}

#[test]
fn upper_half_plane_is_enforced() {
    assert!(Tau::from_f64(64, 0.3, 0.0).is_err());
    assert!(Tau::from_f64(64, 0.3, -1.0).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn eta_transformation(re in -0.5f64..0.5, im in 0.2f64..2.0) {
        for c in properties::eta_transformation(re, im, &ctx()).unwrap() {
            prop_assert!(c.passed, "{c:?}");
        }
    }

    #[test]
    fn eta_is_periodic_up_to_a_root_of_unity(re in -0.5f64..0.5, im in 0.3f64..2.0) {
        // eta(tau + 1) = e^(pi i / 12) eta(tau)
        let c = ctx();
        let p = c.prec();
        let t = Tau::from_f64(p, re, im).unwrap();
        let lhs = modular::eta(&t.affine(1, 1), &c);
        let z = BigComplex::cis(&Float::with_val(p, constants::pi(p) / 12u32));
        prop_assert!(close(&lhs, &(&z * &modular::eta(&t, &c)), 28));
    }

    #[test]
    fn s_maps_agree_in_tau_and_q(re in -0.5f64..0.5, im in 0.6f64..2.0) {
        let c = ctx();
        let t = Tau::from_f64(c.prec(), re, im).unwrap();
        let q = t.q();
        prop_assert!(close(&modular::s2_tau(&t, &c), &modular::s2(&q, &c), 25));
        prop_assert!(close(&modular::s3_tau(&t, &c), &modular::s3(&q, &c), 25));
        prop_assert!(close(&modular::s4_tau(&t, &c), &modular::s4(&q, &c), 25));
    }

    #[test]
    fn nome_round_trip(alpha in 0.01f64..0.5, j in 2u32..=4) {
        prop_assert!(properties::nome_round_trip(j, alpha, &ctx()).unwrap().passed);
    }

    #[test]
    fn chi_identities(t in 0.05f64..0.95) {
        for c in properties::chi_identities(t, &ctx()).unwrap() {
            prop_assert!(c.passed, "{c:?}");
        }
    }

    #[test]
    fn nome_is_inverted_by_alpha_for_s(alpha in 0.02f64..0.45, j in 2u32..=4) {
        let c = ctx();
        let p = c.prec();
        let a = BigComplex::from_f64(p, alpha, 0.0);
        let q = hypergeom::nome(j, &a, &c).unwrap();
        let s = match j { 2 => modular::s2(&q, &c), 3 => modular::s3(&q, &c), _ => modular::s4(&q, &c) };
        // the smaller root of alpha (1 - alpha) = c_j / s
        let back = hypergeom::alpha_for_s(j, &s);
        prop_assert!(close(&back, &a, 20), "{} vs {alpha}", back.to_string_digits(20));
    }
}
