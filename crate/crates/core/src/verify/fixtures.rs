//! `j`-invariant fixtures: parameters `s` whose attached elliptic curve is CM,
//! with the listed `j`, for both the `A_s` fibration (`j(E_s)`) and the
//! `C_s` fibration (`j(G_s)`).

use crate::error::Result;
use crate::exactnum::{ExactValue, PRIMES};
use crate::mahler::{cm_membership, je_exact, jg_matches, CmClass};
use serde::Serialize;

/// One fixture row, already expanded over its `±` signs.
#[derive(Clone, Debug, Serialize)]
pub struct JFixture {
    pub s: &'static str,
    pub j: &'static str,
    pub disc: i64,
    pub conductor: u32,
    /// The value as printed, when it differs from the exact `j`.
    pub printed_j: Option<&'static str>,
}

const fn fx(s: &'static str, j: &'static str, disc: i64, conductor: u32) -> JFixture {
    JFixture { s, j, disc, conductor, printed_j: None }
}

const fn fx_corrected(s: &'static str, j: &'static str, printed: &'static str, disc: i64, conductor: u32) -> JFixture {
    JFixture { s, j, disc, conductor, printed_j: Some(printed) }
}

/// `j(E_s) = (s-16)^3/s` fixtures.
///
/// The printed rows for `568 ± 384√2 ± 336√3 ± 216√6` overlap in their sign
/// patterns; the assignment below is the one exact arithmetic confirms.
/// The conductor-2 rows for `D = -7` print `-15^3`, but `(s-16)^3/s` is
/// `255^3` there (the CM invariant of the order of discriminant `-28`).
pub fn je_fixtures() -> Vec<JFixture> {
    vec![
        fx("16", "0", -3, 1),
        fx("256", "2*30^3", -3, 2),
        fx("-104+60*sqrt(3)", "2*30^3", -3, 2),
        fx("-104-60*sqrt(3)", "2*30^3", -3, 2),
        fx("-8", "12^3", -4, 1),
        fx("64", "12^3", -4, 1),
        fx("-512", "66^3", -4, 2),
        fx("280+198*sqrt(2)", "66^3", -4, 2),
        fx("280-198*sqrt(2)", "66^3", -4, 2),
        fx("1", "-15^3", -7, 1),
        fx("(47+45*sqrt(-7))/2", "-15^3", -7, 1),
        fx("(47-45*sqrt(-7))/2", "-15^3", -7, 1),
        fx_corrected("4096", "255^3", "-15^3", -7, 2),
        fx_corrected("-2024+765*sqrt(7)", "255^3", "-15^3", -7, 2),
        fx_corrected("-2024-765*sqrt(7)", "255^3", "-15^3", -7, 2),
        fx("-64", "20^3", -8, 1),
        fx("56+40*sqrt(2)", "20^3", -8, 1),
        fx("56-40*sqrt(2)", "20^3", -8, 1),
        fx("-1088+768*sqrt(2)", "2417472-1707264*sqrt(2)", -24, 1),
        fx("-1088-768*sqrt(2)", "2417472+1707264*sqrt(2)", -24, 1),
        fx("568+384*sqrt(2)+336*sqrt(3)+216*sqrt(6)", "2417472+1707264*sqrt(2)", -24, 1),
        fx("568+384*sqrt(2)-336*sqrt(3)-216*sqrt(6)", "2417472+1707264*sqrt(2)", -24, 1),
        fx("568-384*sqrt(2)+336*sqrt(3)-216*sqrt(6)", "2417472-1707264*sqrt(2)", -24, 1),
        fx("568-384*sqrt(2)-336*sqrt(3)+216*sqrt(6)", "2417472-1707264*sqrt(2)", -24, 1),
    ]
}

/// `j(G_s)` fixtures for the quartic family.
pub fn jg_fixtures() -> Vec<JFixture> {
    vec![
        fx("-144", "2*30^3", -3, 2),
        fx("26856-15300*sqrt(3)", "2*30^3", -3, 2),
        fx("26856+15300*sqrt(3)", "1417905000+818626500*sqrt(3)", -3, 4),
        fx("648", "66^3", -4, 2),
        fx("143208-101574*sqrt(2)", "66^3", -4, 2),
        fx("-12288", "76771008+44330496*sqrt(3)", -4, 3),
        fx("143208+101574*sqrt(2)", "41113158120+29071392966*sqrt(2)", -4, 4),
        fx("81", "-15^3", -7, 1),
        fx("-3969", "255^3", -7, 2),
        fx("8292456-3132675*sqrt(7)", "255^3", -7, 2),
        fx("8292456+3132675*sqrt(7)", "137458661985000+51954490735875*sqrt(7)", -7, 4),
        fx("256", "20^3", -8, 1),
        fx("3656-2600*sqrt(2)", "20^3", -8, 1),
        fx("3656+2600*sqrt(2)", "26125000+18473000*sqrt(2)", -8, 2),
        fx("614656", "188837384000+77092288000*sqrt(6)", -8, 3),
        fx("(-192303+85995*sqrt(5))/2", "(37018076625-16554983445*sqrt(5))/2", -15, 2),
        fx("(-192303-85995*sqrt(5))/2", "(37018076625+16554983445*sqrt(5))/2", -15, 2),
        fx("-1024", "632000+282880*sqrt(5)", -20, 1),
        fx("2304", "2417472+1707264*sqrt(2)", -24, 1),
        fx("1207368+853632*sqrt(2)-697680*sqrt(3)-493272*sqrt(6)", "2417472+1707264*sqrt(2)", -24, 1),
        fx("1207368-853632*sqrt(2)-697680*sqrt(3)+493272*sqrt(6)", "2417472-1707264*sqrt(2)", -24, 1),
        fx(
            "1207368+853632*sqrt(2)+697680*sqrt(3)+493272*sqrt(6)",
            "5835036074184+4125993565824*sqrt(2)+3368859648336*sqrt(3)+2382143496408*sqrt(6)",
            -24,
            2,
        ),
        fx(
            "1207368-853632*sqrt(2)+697680*sqrt(3)-493272*sqrt(6)",
            "5835036074184-4125993565824*sqrt(2)+3368859648336*sqrt(3)-2382143496408*sqrt(6)",
            -24,
            2,
        ),
        fx("20736", "212846400+95178240*sqrt(5)", -40, 1),
        fx("-82944", "3448440000+956448000*sqrt(13)", -52, 1),
        fx(
            "-893952+516096*sqrt(3)",
            "799200236736-461418467328*sqrt(3)+302069634048*sqrt(7)-174399982848*sqrt(21)",
            -84,
            1,
        ),
        fx(
            "-893952-516096*sqrt(3)",
            "799200236736+461418467328*sqrt(3)+302069634048*sqrt(7)+174399982848*sqrt(21)",
            -84,
            1,
        ),
        fx(
            "347648256+141926400*sqrt(6)",
            "120858928019208000+49340450750976000*sqrt(6)+32300907105600000*sqrt(14)+26373580212672000*sqrt(21)",
            -168,
            1,
        ),
        fx(
            "347648256-141926400*sqrt(6)",
            "120858928019208000-49340450750976000*sqrt(6)-32300907105600000*sqrt(14)+26373580212672000*sqrt(21)",
            -168,
            1,
        ),
    ]
}

#[derive(Clone, Debug, Serialize)]
pub struct JCheck {
    pub s: String,
    pub j: String,
    pub matches: bool,
    pub membership: Option<CmClass>,
    pub expected_membership: Option<CmClass>,
}

impl JCheck {
    pub fn ok(&self) -> bool {
        self.matches && self.membership == self.expected_membership
    }
}

/// Expected CM-set class of a listed `j` (only meaningful when `j` lies in
/// `Q(sqrt 2)`).
fn expected_class(j: &ExactValue) -> Option<CmClass> {
    let in_q_sqrt2 = j
        .terms()
        .all(|(r, _)| !r.is_imaginary() && PRIMES.iter().all(|&p| r.twelfths(p) == if p == 2 { r.twelfths(2) } else { 0 }) && r.twelfths(2) % 6 == 0);
    if !in_q_sqrt2 {
        return None;
    }
    Some(if j.is_rational() { CmClass::InC1 } else { CmClass::InC2Only })
}

/// Exact check of every `j(E_s)` fixture, with CM-set classification.
pub fn check_je() -> Result<Vec<JCheck>> {
    je_fixtures()
        .iter()
        .map(|f| {
            let s = ExactValue::parse(f.s)?;
            let j = ExactValue::parse(f.j)?;
            let got = je_exact(&s)?;
            let exp = expected_class(&j);
            Ok(JCheck { s: f.s.into(), j: f.j.into(), matches: got == j, membership: Some(cm_membership(&got)), expected_membership: exp })
        })
        .collect()
}

/// Exact check of every `j(G_s)` fixture: some `u` with `s(u) = s` has
/// `j(G_{s(u)}) = j`.
pub fn check_jg() -> Result<Vec<JCheck>> {
    jg_fixtures()
        .iter()
        .map(|f| {
            let s = ExactValue::parse(f.s)?;
            let j = ExactValue::parse(f.j)?;
            let exp = expected_class(&j);
            let mem = exp.map(|_| cm_membership(&j));
            Ok(JCheck { s: f.s.into(), j: f.j.into(), matches: jg_matches(&s, &j)?, membership: mem, expected_membership: exp })
        })
        .collect()
}
