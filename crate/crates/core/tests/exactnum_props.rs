use mahler::numerics::BigComplex;
use mahler::{ExactValue, PrecisionContext};
use proptest::prelude::*;

fn radicand() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec!["sqrt(2)", "sqrt(3)", "sqrt(6)", "cbrt(2)", "cbrt(4)", "rt4(2)", "sqrt(-7)", "sqrt(5)"])
}

fn value() -> impl Strategy<Value = ExactValue> {
    (-50i64..50, 1i64..9, prop::collection::vec((-30i64..30, radicand()), 0..3)).prop_map(|(a, d, terms)| {
        let mut s = format!("{a}/{d}");
        for (c, r) in terms {
            s.push_str(&format!(" + ({c})*{r}"));
        }
        ExactValue::parse(&s).unwrap()
    })
}

fn close(a: &BigComplex, b: &BigComplex, digits: i32) -> bool {
    let d = (a - b).abs().to_f64();
    d <= 10f64.powi(-digits) * (1.0 + b.abs().to_f64())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn print_parse_round_trip(x in value()) {
        prop_assert_eq!(ExactValue::parse(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn ring_operations_match_rendering(x in value(), y in value()) {
        let c = PrecisionContext::new(30);
        prop_assert!(close(&(&x * &y).render(&c), &(&x.render(&c) * &y.render(&c)), 30));
        prop_assert!(close(&(&x + &y).render(&c), &(&x.render(&c) + &y.render(&c)), 30));
        prop_assert_eq!(&(&x + &y) - &y, x);
    }

    #[test]
    fn inverse_is_exact(x in value()) {
        prop_assume!(!x.is_zero());
        let inv = x.inverse().unwrap();
        prop_assert_eq!(&x * &inv, ExactValue::one());
    }

    #[test]
    fn conjugation_is_an_involution(x in value()) {
        prop_assert_eq!(x.complex_conj().complex_conj(), x.clone());
        let c = PrecisionContext::new(25);
        prop_assert!(close(&x.complex_conj().render(&c), &x.render(&c).conj(), 25));
    }
}

#[test]
fn table_style_parameters_parse() {
    let c = PrecisionContext::new(30);
    for (s, approx) in [
        ("8+6*sqrt(2)", 16.485281374238571),
        ("6-6*cbrt(2)+18*cbrt(4)", 27.01369263605835),
        ("(47+45*sqrt(-7))/2", 23.5),
        ("26856-15300*sqrt(3)", 355.62264419617713),
    ] {
        let v = ExactValue::parse(s).unwrap().render(&c);
        assert!((v.re.to_f64() - approx).abs() < 1e-6 * approx.abs().max(1.0), "{s}: {}", v.re.to_f64());
    }
}

#[test]
fn malformed_input_is_rejected() {
    for s in ["", "sqrt(", "2**3", "rt0(2)", "1/0"] {
        assert!(ExactValue::parse(s).is_err(), "{s}");
    }
}
