//! Evaluators for the normalised measures
//! `m2(t) = 2m(P_{t^{1/2}})`, `m3(t) = 3m(Q_{t^{1/3}})`,
//! `n2(s) = 2m(A_s)`, `n3(s) = m(B_s)` and `n4(s) = 4m(C_s)`, where
//!
//! * `P_k = x + 1/x + y + 1/y + k`
//! * `Q_k = x^3 + y^3 + 1 - k x y`
//! * `A_s = (x + 1/x)(y + 1/y)(z + 1/z) + s^{1/2}`
//! * `B_s = (x + 1/x)^2 (y + 1/y)^2 (1 + z)^3 / z^2 - s`
//! * `C_s = x^4 + y^4 + z^4 + 1 + s^{1/4} x y z`
//!
//! Four routes are available: hypergeometric series for large parameters,
//! the `G`-matrix relations at small real nomes, Eisenstein-Kronecker lattice
//! sums, and direct torus quadrature.

pub mod groute;
pub mod jmaps;
pub mod quadrature;
pub mod roots;
pub mod series;

pub use groute::{g_matrix, g_matrix_inverse, n_via_g, n_via_g_all, in_mahler_domain, mahler_radius, GFamily, G_ROUTE_RADIUS};
pub use jmaps::{cm_membership, je, je_exact, jg_matches, jg_of_u, jg_of_u_exact, s_of_u, s_of_u_exact, CmClass};
pub use quadrature::{mahler_quadrature, QuadratureConfig, QuadratureResult};
pub use roots::RootSet;
pub use series::{m2_series, m3_series, n2_series};

use crate::error::{Error, Result};
use crate::lattice;
use crate::modular::{self, DomainMembership, Tau};
use crate::numerics::{BigComplex, PrecisionContext};
use rug::Float;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FamilyTag {
    P,
    Q,
    A,
    B,
    C,
}

/// A member of one of the five families. `parameter` is `k` for `P` and `Q`
/// and `s` for `A`, `B`, `C`.
#[derive(Clone, Debug)]
pub struct MahlerFamily {
    pub tag: FamilyTag,
    pub parameter: BigComplex,
}

impl MahlerFamily {
    pub fn new(tag: FamilyTag, parameter: BigComplex) -> Self {
        MahlerFamily { tag, parameter }
    }

    /// The family member whose measure, times the normalisation, is the
    /// measure `m` at `param` (principal roots for `k`).
    pub fn for_measure(m: Measure, param: &BigComplex) -> Self {
        let parameter = match m {
            Measure::M2 => param.sqrt(),
            Measure::M3 => {
                let third = BigComplex::one(param.prec()).div_i64(3);
                if param.is_zero() { param.clone() } else { param.powc(&third) }
            }
            _ => param.clone(),
        };
        MahlerFamily { tag: m.family(), parameter }
    }
}

/// The five normalised measures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Measure {
    M2,
    M3,
    N2,
    N3,
    N4,
}

impl Measure {
    pub const ALL: [Measure; 5] = [Measure::M2, Measure::M3, Measure::N2, Measure::N3, Measure::N4];

    pub fn family(self) -> FamilyTag {
        match self {
            Measure::M2 => FamilyTag::P,
            Measure::M3 => FamilyTag::Q,
            Measure::N2 => FamilyTag::A,
            Measure::N3 => FamilyTag::B,
            Measure::N4 => FamilyTag::C,
        }
    }

    /// Multiplier in front of `m(.)`.
    pub fn normalization(self) -> u32 {
        match self {
            Measure::M2 | Measure::N2 => 2,
            Measure::M3 => 3,
            Measure::N3 => 1,
            Measure::N4 => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Measure::M2 => "m2",
            Measure::M3 => "m3",
            Measure::N2 => "n2",
            Measure::N3 => "n3",
            Measure::N4 => "n4",
        }
    }

    /// Signature `j` of the parameter map `s_j` (three-variable measures).
    pub fn signature(self) -> Option<u32> {
        match self {
            Measure::N2 => Some(2),
            Measure::N3 => Some(3),
            Measure::N4 => Some(4),
            _ => None,
        }
    }

    pub fn g_family(self) -> Option<GFamily> {
        match self {
            Measure::N2 => Some(GFamily::N2),
            Measure::N4 => Some(GFamily::N4),
            _ => None,
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Measure {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Measure::ALL.into_iter().find(|m| m.name() == s).ok_or_else(|| Error::Unknown(format!("measure {s}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Route {
    Series,
    GMatrix,
    Quadrature,
    EkBrute,
}

impl Route {
    pub const PREFERENCE: [Route; 4] = [Route::Series, Route::GMatrix, Route::Quadrature, Route::EkBrute];

    pub fn name(self) -> &'static str {
        match self {
            Route::Series => "series",
            Route::GMatrix => "g-matrix",
            Route::Quadrature => "quadrature",
            Route::EkBrute => "ek-brute",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Route {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Route::PREFERENCE.into_iter().find(|r| r.name() == s).ok_or_else(|| Error::Unknown(format!("route {s}")))
    }
}

/// Largest `|c/param|` for which the series route is taken; closer to the
/// boundary the term count explodes.
pub const SERIES_RATIO_MAX: f64 = 0.9999;

/// A measure value together with how it was obtained.
#[derive(Clone, Debug)]
pub struct MeasureValue {
    pub value: Float,
    pub route: Route,
    /// Digits the route is expected to deliver.
    pub expected_digits: u32,
    pub notes: Vec<String>,
}

fn series_constant(m: Measure) -> Option<i64> {
    match m {
        Measure::M2 => Some(16),
        Measure::M3 => Some(27),
        Measure::N2 => Some(64),
        _ => None,
    }
}

/// Whether the series route converges at `param`.
pub fn series_applicable(m: Measure, param: &BigComplex) -> bool {
    match series_constant(m) {
        Some(c) => !param.is_zero() && (c as f64) / param.abs().to_f64() < SERIES_RATIO_MAX,
        None => false,
    }
}

pub fn measure_series(m: Measure, param: &BigComplex, ctx: &PrecisionContext) -> Result<Float> {
    match m {
        Measure::M2 => m2_series(param, ctx),
        Measure::M3 => m3_series(param, ctx),
        Measure::N2 => n2_series(param, ctx),
        _ => Err(Error::Route(format!("no series route for {m}"))),
    }
}

/// Normalised measure by torus quadrature.
pub fn measure_quadrature(m: Measure, param: &BigComplex, ctx: &PrecisionContext, cfg: &QuadratureConfig) -> Result<QuadratureResult> {
    let fam = MahlerFamily::for_measure(m, param);
    let mut r = mahler_quadrature(&fam, ctx, cfg)?;
    let k = m.normalization();
    r.value *= k;
    r.error_estimate *= k as f64;
    Ok(r)
}

/// Nome of `tau` when it is real, which is where the `G` relations are used.
pub fn real_nome(tau: &Tau) -> Option<BigComplex> {
    let q = tau.q();
    let tiny = Float::with_val(64, Float::i_exp(1, -(q.prec() as i32) / 2));
    if Float::with_val(64, q.im.abs_ref()) <= Float::with_val(64, &tiny * q.abs()) {
        let mut q = q;
        q.im = Float::new(q.prec());
        Some(q)
    } else {
        None
    }
}

/// `s_j(tau)` for the signature of `m`.
pub fn parameter_at(m: Measure, tau: &Tau, ctx: &PrecisionContext) -> Result<BigComplex> {
    match m {
        Measure::N2 => Ok(modular::s2_tau(tau, ctx)),
        Measure::N3 => Ok(modular::s3_tau(tau, ctx)),
        Measure::N4 => Ok(modular::s4_tau(tau, ctx)),
        Measure::M3 => Ok(modular::t3(tau, ctx)),
        Measure::M2 => Err(Error::Route("m2 has no modular parameter map here".into())),
    }
}

/// `n2(s2(tau))` or `n4(s4(tau))` by the `G` relations, after checking that
/// `s_j(tau)` reproduces `param`.
pub fn measure_g(m: Measure, param: &BigComplex, tau: &Tau, ctx: &PrecisionContext) -> Result<Float> {
    let g = m.g_family().ok_or_else(|| Error::Route(format!("no G relation for {m}")))?;
    let q = real_nome(tau).ok_or_else(|| Error::Route("G-route at complex q avoided".into()))?;
    if !in_mahler_domain(g, q.abs().to_f64()) {
        return Err(Error::Route(format!("|q| = {:.5} is beyond the measure's domain {:.5}", q.abs().to_f64(), mahler_radius(g))));
    }
    check_parameter(m, param, tau, ctx)?;
    n_via_g(g, &q, ctx)
}

fn check_parameter(m: Measure, param: &BigComplex, tau: &Tau, ctx: &PrecisionContext) -> Result<()> {
    let s = parameter_at(m, tau, ctx)?;
    let d = (&s - param).abs().to_f64();
    let scale = param.abs().to_f64().max(1.0);
    if !(d <= scale * 1e-20_f64.max(10f64.powi(-(ctx.target_digits as i32) + 5))) {
        return Err(Error::Route(format!("s_j(tau) = {} does not match the parameter {}", s.to_string_digits(20), param.to_string_digits(20))));
    }
    Ok(())
}

/// Lattice-sum value of `m3(t3(tau))` or `n4(s4(tau))` (double precision).
pub fn measure_ek(m: Measure, param: &BigComplex, tau: &Tau, ctx: &PrecisionContext) -> Result<(f64, f64)> {
    check_parameter(m, param, tau, ctx)?;
    match m {
        Measure::M3 => {
            let (s, dom) = lattice::m3_ek(tau, lattice::RADIUS_EXP2)?;
            if dom == DomainMembership::Exterior {
                return Err(Error::Route("tau outside the fundamental domain of Gamma0(3)".into()));
            }
            Ok((s.value, s.error))
        }
        Measure::N4 => {
            let s = lattice::n4_ek(tau, lattice::RADIUS_EXP3)?;
            Ok((s.value, s.error))
        }
        _ => Err(Error::Route(format!("no lattice route for {m}"))),
    }
}

/// Warning for parameters where the polynomial vanishes on the torus and the
/// torus integral is known to leave the modular parameterisation: real
/// `0 < s < 128` for `n3` and real `0 < s < 256` for `n4`.
pub fn torus_vanishing_warning(m: Measure, param: &BigComplex) -> Option<String> {
    let bound = match m {
        Measure::N3 => 128.0,
        Measure::N4 => 256.0,
        _ => return None,
    };
    let (re, im) = (param.re.to_f64(), param.im.to_f64());
    (im.abs() <= 1e-12 * re.abs().max(1.0) && re > 0.0 && re < bound).then(|| {
        format!("{m}({re}): the polynomial vanishes on the torus for 0 < s < {bound}; the torus integral need not match modular formulas here")
    })
}

/// Evaluates `m` at `param` by the first route in `routes` that applies.
///
/// `tau`, when given, must satisfy `s_j(tau) = param`; it enables the
/// `G`-matrix and lattice routes. Routes are never averaged.
pub fn evaluate(
    m: Measure,
    param: &BigComplex,
    tau: Option<&Tau>,
    routes: &[Route],
    ctx: &PrecisionContext,
    cfg: &QuadratureConfig,
) -> Result<MeasureValue> {
    let mut notes = Vec::new();
    let mut last_err = None;
    for &r in routes {
        let got = match r {
            Route::Series => {
                if !series_applicable(m, param) {
                    continue;
                }
                measure_series(m, param, ctx).map(|v| (v, ctx.target_digits))
            }
            Route::GMatrix => {
                let Some(t) = tau else { continue };
                if m.g_family().is_none() {
                    continue;
                }
                match real_nome(t) {
                    None => {
                        notes.push("G-route at complex q avoided".to_string());
                        continue;
                    }
                    Some(q) if !in_mahler_domain(m.g_family().unwrap(), q.abs().to_f64()) => {
                        notes.push("G-route skipped: nome beyond the measure's domain".to_string());
                        continue;
                    }
                    Some(_) => {}
                }
                measure_g(m, param, t, ctx).map(|v| (v, ctx.target_digits))
            }
            Route::Quadrature => {
                let digits = if matches!(m, Measure::M2 | Measure::M3) { ctx.target_digits } else { 10 };
                measure_quadrature(m, param, ctx, cfg).map(|q| (q.value, digits))
            }
            Route::EkBrute => {
                let Some(t) = tau else { continue };
                if !matches!(m, Measure::M3 | Measure::N4) {
                    continue;
                }
                measure_ek(m, param, t, ctx).map(|(v, _)| (Float::with_val(ctx.prec(), v), 10))
            }
        };
        match got {
            Ok((value, expected_digits)) => return Ok(MeasureValue { value, route: r, expected_digits, notes }),
            Err(e) => {
                notes.push(format!("{r} failed: {e}"));
                last_err = Some(e);
            }
        }
    }
    Err(last_err.unwrap_or_else(|| Error::Route(format!("no applicable route for {m}({})", param.to_string_digits(12)))))
}

/// Default route order: series, G-matrix, quadrature, lattice.
pub fn evaluate_best(m: Measure, param: &BigComplex, tau: Option<&Tau>, ctx: &PrecisionContext) -> Result<MeasureValue> {
    evaluate(m, param, tau, &Route::PREFERENCE, ctx, &QuadratureConfig::default())
}
