use mahler::lfunc::coeffs::{hecke_multiplicative, write_coeff_file};
use mahler::lfunc::curves::{curve_coeffs, write_curve_files, CURVES};
use mahler::lfunc::{self, d_k, dirichlet_l, DirichletChar, FrickeSign, NewformSpec, Source};
use mahler::modular::EtaQuotientSpec;
use mahler::numerics::{constants, digits_agreed};
use mahler::{Error, PrecisionContext};
use proptest::prelude::*;
use rug::Float;

fn ctx() -> PrecisionContext {
    PrecisionContext::new(30)
}

fn lit(s: &str) -> Float {
    Float::with_val(ctx().prec(), Float::parse(s).unwrap())
}

#[test]
fn level_11_form_against_independent_sum() {
    // computed separately with mpmath from the same functional equation
    let f11 = NewformSpec {
        label: "f11".into(),
        level: Some(11),
        weight: 2,
        source: Source::EtaQuotient(EtaQuotientSpec::new(&[(1, 2), (11, 2)])),
        fricke: FrickeSign::Unknown,
    };
    assert_eq!(lfunc::fricke_detect(&f11, &ctx()).unwrap(), 1);
    let v = lfunc::l_at_weight(&f11, &ctx()).unwrap();
    assert!(digits_agreed(&v, &lit("0.546048036215013518334126660433444338590653662"), 40) >= 30);
}

#[test]
fn dirichlet_values() {
    let c = ctx();
    let l3 = dirichlet_l(&DirichletChar::new(-3).unwrap(), 2, &c).unwrap();
    assert!(digits_agreed(&l3, &lit("0.781302412896486296867187429624092356365134337"), 40) >= 30);
    let l4 = dirichlet_l(&DirichletChar::new(-4).unwrap(), 2, &c).unwrap();
    assert!(digits_agreed(&l4, &constants::catalan(c.prec()), 40) >= 30);
    // d_4 = 2 G / pi
    let d4 = d_k(4, &c).unwrap();
    let want = Float::with_val(c.prec(), constants::catalan(c.prec()) * 2u32 / constants::pi(c.prec()));
    assert!(digits_agreed(&d4, &want, 40) >= 30);
}

#[test]
fn weight_3_constant() {
    // (5/12) 20 L'(g12,0) = 50 sqrt 3 / pi^3 L(g12,3)
    let c = ctx();
    let p = c.prec();
    let g12 = lfunc::newform("g12").unwrap();
    let lhs = Float::with_val(p, lfunc::lprime0(&g12, &c).unwrap() * 25u32) / 3u32;
    let rhs = Float::with_val(p, Float::with_val(p, 3).sqrt() * 50u32) / constants::pi(p).square() / constants::pi(p) * lfunc::l_at_weight(&g12, &c).unwrap();
    assert!(digits_agreed(&lhs, &rhs, 40) >= 30);
}

#[test]
fn unknown_label_without_directory_is_missing_data() {
    // no directory configured in this process
    assert!(matches!(lfunc::newform("f9999"), Err(Error::MissingData(_))));
}

#[test]
fn coefficient_files_end_to_end() {
    let dir = tempfile::tempdir().unwrap();
    let c = PrecisionContext::new(20);
    write_curve_files(dir.path(), 1500).unwrap();
    // a table violating the Deligne bound is rejected
    let mut bad = vec![0i64; 200];
    bad[1] = 1;
    bad[7] = 100;
    write_coeff_file(&dir.path().join("fbad.txt"), "fbad", 30, 2, FrickeSign::Unknown, &bad).unwrap();
    // a table that contradicts a published prefix is rejected
    let mut wrong = curve_coeffs(&CURVES[1], 500);
    wrong[5] = 2;
    write_coeff_file(&dir.path().join("f17.txt"), "f17", 17, 2, FrickeSign::Unknown, &wrong).unwrap();
    lfunc::set_coeff_dir(Some(dir.path().to_path_buf()));
    lfunc::clear_caches();

    assert!(matches!(lfunc::coeffs(&lfunc::newform("fbad").unwrap(), 100), Err(Error::MalformedFile { .. })));
    assert!(matches!(lfunc::coeffs(&lfunc::newform("f17").unwrap(), 100), Err(Error::MalformedFile { .. })));

    // f15 from the file and the eta product give the same L-value
    let file = lfunc::lprime0_label("f15", &c).unwrap();
    let eta = NewformSpec {
        label: "f15eta".into(),
        level: Some(15),
        weight: 2,
        source: Source::EtaQuotient(EtaQuotientSpec::new(&[(1, 1), (3, 1), (5, 1), (15, 1)])),
        fricke: FrickeSign::Unknown,
    };
    assert!(digits_agreed(&file, &lfunc::lprime0(&eta, &c).unwrap(), 30) >= 20);

    // twist with undeclared level: the conductor is found by the functional equation
    let t = lfunc::resolve(&lfunc::newform("f56x8").unwrap(), &c).unwrap();
    assert_eq!((t.level, t.fricke), (448, -1));

    // too few coefficients for the cutoff
    write_coeff_file(&dir.path().join("f100.txt"), "f100", 100, 2, FrickeSign::Plus, &curve_coeffs(&CURVES[3], 40)).unwrap();
    lfunc::clear_caches();
    assert!(matches!(lfunc::lprime0_label("f100", &c), Err(Error::InsufficientCoefficients { .. })));

    lfunc::set_coeff_dir(None);
    lfunc::clear_caches();
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn builtin_forms_are_multiplicative(i in 0usize..64) {
        let forms = lfunc::builtin_forms();
        let s = &forms[i % forms.len()];
        let a = lfunc::coeffs(s, 1500).unwrap();
        prop_assert!(hecke_multiplicative(&a.a, 1500).is_ok(), "{}", s.label);
    }

    #[test]
    fn curve_tables_satisfy_hasse(ci in 0usize..4, p in prop::sample::select(vec![2u64, 3, 5, 7, 11, 13, 101, 211, 997])) {
        let c = &CURVES[ci];
        let ap = mahler::lfunc::curves::ap(c, p);
        prop_assert!((ap * ap) as u64 <= 4 * p);
    }
}
