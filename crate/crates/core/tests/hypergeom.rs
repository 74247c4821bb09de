use mahler::hypergeom::{self, HyperParams};
use mahler::numerics::{constants, digits_agreed, BigComplex, PrecisionContext};
use proptest::prelude::*;
use rug::Float;

fn ctx() -> PrecisionContext {
    PrecisionContext::new(30)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn gauss_series_is_the_agm(x in 0.0f64..0.95) {
        // 2F1(1/2, 1/2; 1; x) = 1 / agm(1, sqrt(1 - x))
        let c = ctx();
        let p = c.prec();
        let h = HyperParams::new(&[(1, 2), (1, 2)], &[(1, 1)], BigComplex::from_f64(p, x, 0.0));
        let f = hypergeom::pfq(&h, &c).unwrap().re;
        let one = Float::with_val(p, 1);
        let s = Float::with_val(p, 1 - Float::with_val(p, x)).sqrt();
        let agm = Float::with_val(p, one.agm_ref(&s));
        prop_assert!(digits_agreed(&f, &agm.recip(), 40) >= 30);
    }

    #[test]
    fn elementary_case(x in -0.9f64..0.9) {
        // 2F1(1, 1; 2; x) = -log(1 - x) / x
        let c = ctx();
        let p = c.prec();
        prop_assume!(x.abs() > 1e-3);
        let h = HyperParams::new(&[(1, 1), (1, 1)], &[(2, 1)], BigComplex::from_f64(p, x, 0.0));
        let f = hypergeom::pfq(&h, &c).unwrap().re;
        let xf = Float::with_val(p, x);
        let want = Float::with_val(p, -Float::with_val(p, 1 - &xf).ln() / &xf);
        prop_assert!(digits_agreed(&f, &want, 40) >= 28);
    }
}

#[test]
fn rejects_bad_parameters() {
    let c = ctx();
    let z = BigComplex::from_f64(c.prec(), 0.5, 0.0);
    assert!(hypergeom::pfq(&HyperParams::new(&[(1, 2)], &[(1, 1)], z.clone()), &c).is_err());
    assert!(hypergeom::pfq(&HyperParams::new(&[(1, 2), (1, 2)], &[(-2, 1)], z), &c).is_err());
}

#[test]
fn picard_fuchs_recurrence_is_exact() {
    assert!(hypergeom::picard_fuchs_check(120));
    assert!(hypergeom::picard_fuchs_residuals(60).iter().all(|r| *r == 0));
}

#[test]
fn pi_by_agm_matches_mpfr() {
    let p = ctx().prec();
    assert!(digits_agreed(&constants::pi_agm(p), &constants::pi(p), 40) >= 38);
}
