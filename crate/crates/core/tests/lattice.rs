use mahler::lattice::{lattice_identity_residual, shell_sum, theta_claims, LATTICE_IDENTITIES};
use mahler::numerics::constants;
use mahler::PrecisionContext;

#[test]
fn epstein_zeta_of_the_square_lattice() {
    // sum' 1/(m^2 + n^2)^2 = 4 zeta(2) L(chi_-4, 2) = 2 pi^2 G / 3
    let s = shell_sum(|m, n| ((m * m + n * n) as f64).powi(-2), 400, 1, true).unwrap();
    let g = constants::catalan(64).to_f64();
    let want = 2.0 * std::f64::consts::PI.powi(2) * g / 3.0;
    assert!((s.value - want).abs() < 1e-9, "{} vs {want}", s.value);
    assert!(s.error < 1e-6);
}

#[test]
fn too_small_a_radius_is_refused() {
    assert!(shell_sum(|_, _| 1.0, 8, 1, true).is_err());
}

#[test]
fn every_lattice_identity_holds() {
    let c = PrecisionContext::new(20);
    for id in LATTICE_IDENTITIES {
        let r = lattice_identity_residual(id, &c).unwrap();
        assert!(r.residual <= 1e-6 * r.rhs.abs().max(1.0), "{id}: {r:?}");
    }
}

#[test]
fn theta_claims_hold() {
    for (name, ok) in theta_claims(1500).unwrap() {
        assert!(ok, "{name}");
    }
}
