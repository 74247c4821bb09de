//! The identity registry: every Mahler-measure formula the crate checks,
//! each side a rational (or algebraic) linear combination of atoms.

use crate::error::{Error, Result};
use crate::exactnum::ExactValue;
use crate::lfunc;
use crate::mahler::{self, Measure, Route};
use crate::modular::Tau;
use crate::numerics::PrecisionContext;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Proved,
    Conjectural,
    NumericDiscovery,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Proved => "proved",
            Status::Conjectural => "conjectural",
            Status::NumericDiscovery => "numeric-discovery",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Status {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "proved" => Ok(Status::Proved),
            "conjectural" => Ok(Status::Conjectural),
            "numeric-discovery" => Ok(Status::NumericDiscovery),
            _ => Err(Error::Unknown(format!("status {s}"))),
        }
    }
}

/// The two `4F3` families of the large-parameter series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum HyperFamily {
    /// `4F3(3/2,3/2,1,1; 2,2,2; z)`
    M2,
    /// `4F3(4/3,5/3,1,1; 2,2,2; z)`
    M3,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Atom {
    Measure { measure: Measure, param: ExactValue, tau: Option<&'static str> },
    Hyper { family: HyperFamily, arg: ExactValue },
    /// `Re log(x)`.
    Log(ExactValue),
    /// `L'(f, 0)` for a newform label.
    LPrime0(String),
    /// `d_k = L'(chi_{-k}, -1)`.
    Dk(i64),
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Measure { measure, param, .. } => write!(f, "{measure}({param})"),
            Atom::Hyper { family: HyperFamily::M2, arg } => write!(f, "4F3(3/2,3/2,1,1;2,2,2;{arg})"),
            Atom::Hyper { family: HyperFamily::M3, arg } => write!(f, "4F3(4/3,5/3,1,1;2,2,2;{arg})"),
            Atom::Log(x) => write!(f, "log({x})"),
            Atom::LPrime0(l) => write!(f, "L'({l},0)"),
            Atom::Dk(k) => write!(f, "d{k}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Term {
    pub coef: ExactValue,
    pub atom: Atom,
}

/// A linear combination of atoms.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Expr(pub Vec<Term>);

impl Expr {
    pub fn atoms(&self) -> impl Iterator<Item = &Atom> {
        self.0.iter().map(|t| &t.atom)
    }

    pub fn labels(&self) -> Vec<&str> {
        self.atoms()
            .filter_map(|a| match a {
                Atom::LPrime0(l) => Some(l.as_str()),
                _ => None,
            })
            .collect()
    }

    fn plus(mut self, o: Expr) -> Expr {
        self.0.extend(o.0);
        self
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.0.iter().enumerate() {
            let c = t.coef.to_string();
            let (neg, mag) = match c.strip_prefix('-') {
                Some(m) if t.coef.is_rational() => (true, m.to_string()),
                _ => (false, c),
            };
            if i > 0 {
                f.write_str(if neg { " - " } else { " + " })?;
            } else if neg {
                f.write_str("-")?;
            }
            if mag == "1" {
                write!(f, "{}", t.atom)?;
            } else if t.coef.is_rational() {
                write!(f, "{mag}*{}", t.atom)?;
            } else {
                write!(f, "({mag})*{}", t.atom)?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct IdentityRecord {
    pub id: String,
    pub lhs: Expr,
    pub rhs: Expr,
    pub status: Status,
    pub min_digits: u32,
    /// Route order for the measure atoms; empty means the default order.
    pub route_hint: Vec<Route>,
    pub citation: String,
    pub table: Option<u8>,
    /// Known irregularities carried into every report.
    pub flags: Vec<String>,
}

impl IdentityRecord {
    /// Labels that need external coefficient files.
    pub fn external_labels(&self) -> Vec<String> {
        let mut v: Vec<String> =
            self.lhs.labels().into_iter().chain(self.rhs.labels()).filter(|l| !lfunc::is_builtin(l)).map(String::from).collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn is_gated(&self) -> bool {
        !self.external_labels().is_empty()
    }
}

#[derive(Serialize)]
struct RecordView<'a> {
    id: &'a str,
    lhs: String,
    rhs: String,
    status: Status,
    min_digits: u32,
    route_hint: Vec<&'static str>,
    citation: &'a str,
    table: Option<u8>,
    external_labels: Vec<String>,
    flags: &'a [String],
}

impl Serialize for IdentityRecord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RecordView {
            id: &self.id,
            lhs: self.lhs.to_string(),
            rhs: self.rhs.to_string(),
            status: self.status,
            min_digits: self.min_digits,
            route_hint: self.route_hint.iter().map(|r| r.name()).collect(),
            citation: &self.citation,
            table: self.table,
            external_labels: self.external_labels(),
            flags: &self.flags,
        }
        .serialize(s)
    }
}

// ------------------------------------------------------------ builders

fn ex(s: &str) -> ExactValue {
    ExactValue::parse(s).unwrap_or_else(|e| panic!("registry literal {s:?}: {e}"))
}

fn meas(m: Measure, param: &str, tau: Option<&'static str>) -> Atom {
    Atom::Measure { measure: m, param: ex(param), tau }
}

fn term(coef: &str, atom: Atom) -> Expr {
    Expr(vec![Term { coef: ex(coef), atom }])
}

/// `scale * sum c_i * atom_i`, where an atom name `dK` is `d_K` and anything
/// else is a newform label.
fn lc(scale: &str, items: &[(i64, &str)]) -> Expr {
    let s = ex(scale);
    Expr(
        items
            .iter()
            .map(|&(c, name)| {
                let atom = match name.strip_prefix('d').and_then(|k| k.parse::<i64>().ok()) {
                    Some(k) => Atom::Dk(k),
                    None => Atom::LPrime0(name.to_string()),
                };
                Term { coef: s.scale(&c.into()), atom }
            })
            .collect(),
    )
}

/// Digits the default route is expected to support for a table row.
fn table_min_digits(m: Measure, s: &str, tau: Option<&str>, gated: bool) -> u32 {
    if gated {
        return 10;
    }
    let ctx = PrecisionContext::with_guard(10, 5);
    let param = ex(s).render(&ctx);
    if mahler::series_applicable(m, &param) {
        return 20;
    }
    if let Some(g) = m.g_family() {
        if let Some(t) = tau.and_then(|t| Tau::parse(t, &ctx).ok()) {
            if mahler::real_nome(&t).is_some_and(|q| mahler::in_mahler_domain(g, q.abs().to_f64())) {
                return 20;
            }
        }
    }
    8
}

struct Row {
    tau: &'static str,
    s: &'static str,
    scale: &'static str,
    items: &'static [(i64, &'static str)],
    reference: Option<&'static str>,
}

const fn row(tau: &'static str, s: &'static str, scale: &'static str, items: &'static [(i64, &'static str)], reference: Option<&'static str>) -> Row {
    Row { tau, s, scale, items, reference }
}

const TABLE4: &[Row] = &[
    row("sqrt(-1)/2", "64", "8", &[(1, "g16")], Some("[25]")),
    row("(1+sqrt(-1))/2", "-8", "1", &[(4, "g16"), (1, "d4")], None),
    row("sqrt(-4)/2", "280+198*sqrt(2)", "1/8", &[(36, "g16"), (4, "g16x8"), (13, "d4"), (4, "d8")], None),
    row("(2+sqrt(-1))/4", "280-198*sqrt(2)", "1/2", &[(36, "g16"), (-4, "g16x8"), (-13, "d4"), (4, "d8")], None),
    row("(1+sqrt(-4))/2", "-512", "1", &[(1, "g64"), (1, "d8")], None),
    row("sqrt(-2)/2", "56+40*sqrt(2)", "1/4", &[(60, "g8"), (4, "g8x8"), (4, "d4"), (1, "d8")], None),
    row("(2+sqrt(-2))/4", "56-40*sqrt(2)", "1/2", &[(60, "g8"), (-4, "g8x8"), (4, "d4"), (-1, "d8")], None),
    row("(1+sqrt(-2))/2", "-64", "2", &[(1, "g8x8"), (1, "d4")], None),
    row("sqrt(-3)/2", "256", "4/3", &[(1, "g48"), (2, "d4")], Some("[25]")),
    row("(1+sqrt(-3))/4", "16", "8", &[(1, "g12")], None),
    row("(3+sqrt(-3))/6", "-104+60*sqrt(3)", "1/2", &[(4, "g48"), (-36, "g12"), (15, "d3"), (-8, "d4")], None),
    row("(1+sqrt(-3))/2", "-104-60*sqrt(3)", "1/6", &[(4, "g48"), (36, "g12"), (15, "d3"), (8, "d4")], None),
    row(
        "sqrt(-6)/2",
        "568+384*sqrt(2)+336*sqrt(3)+216*sqrt(6)",
        "1/24",
        &[(60, "g24_1"), (12, "g24_2"), (4, "g24_1x-8"), (4, "g24_2x-8"), (60, "d3"), (24, "d4"), (8, "d8"), (1, "d24")],
        None,
    ),
    row(
        "(6+sqrt(-6))/12",
        "568+384*sqrt(2)-336*sqrt(3)-216*sqrt(6)",
        "1/4",
        &[(60, "g24_1"), (12, "g24_2"), (-4, "g24_1x-8"), (-4, "g24_2x-8"), (-60, "d3"), (24, "d4"), (8, "d8"), (-1, "d24")],
        None,
    ),
    row(
        "sqrt(-6)/6",
        "568-384*sqrt(2)+336*sqrt(3)-216*sqrt(6)",
        "1/12",
        &[(60, "g24_1"), (-12, "g24_2"), (4, "g24_1x-8"), (-4, "g24_2x-8"), (60, "d3"), (24, "d4"), (-8, "d8"), (-1, "d24")],
        None,
    ),
    row(
        "(-2+sqrt(-6))/10",
        "568-384*sqrt(2)-336*sqrt(3)+216*sqrt(6)",
        "1/12",
        &[(60, "g24_1"), (-12, "g24_2"), (-4, "g24_1x-8"), (4, "g24_2x-8"), (60, "d3"), (-24, "d4"), (8, "d8"), (-1, "d24")],
        None,
    ),
    row("(3+sqrt(-6))/6", "-1088+768*sqrt(2)", "1", &[(1, "g24_1x-8"), (-1, "g24_2x-8"), (-6, "d4"), (2, "d8")], None),
    row("(1+sqrt(-6))/2", "-1088-768*sqrt(2)", "1/3", &[(1, "g24_1x-8"), (1, "g24_2x-8"), (6, "d4"), (2, "d8")], None),
    row("sqrt(-7)/2", "4096", "4/7", &[(1, "g7x-4"), (8, "d4")], None),
    row("(3+sqrt(-7))/8", "1", "8", &[(1, "g7")], None),
    // one record for the conjugate pair (47 ± 45 sqrt(-7))/2
    row("(1+sqrt(-7))/8", "(47+45*sqrt(-7))/2", "4/7", &[(54, "g7"), (1, "d7")], None),
    row("(7+sqrt(-7))/14", "-2024+765*sqrt(7)", "1/2", &[(4, "g7x-4"), (-384, "g7"), (-32, "d4"), (11, "d7")], None),
    row("(1+sqrt(-7))/2", "-2024-765*sqrt(7)", "1/14", &[(4, "g7x-4"), (384, "g7"), (32, "d4"), (11, "d7")], None),
];

const TABLE5: &[Row] = &[
    row("(1+sqrt(-2))/3", "8", "15", &[(1, "g8")], None),
    row("sqrt(-3)/3", "108", "15", &[(1, "g12")], Some("[21]")),
    row("sqrt(-6)/3", "216", "15/4", &[(1, "g24_2"), (1, "d3")], Some("[25]")),
    row("sqrt(-9)/3", "288+168*sqrt(3)", "5/12", &[(3, "g36_2"), (3, "g36_1"), (6, "d3"), (4, "d4")], None),
    row("(1+sqrt(-1))/2", "288-168*sqrt(3)", "5/6", &[(3, "g36_2"), (-3, "g36_1"), (-6, "d3"), (4, "d4")], None),
    row("sqrt(-12)/3", "1458", "15/8", &[(9, "g12"), (2, "d4")], Some("[25]")),
    row("sqrt(-15)/3", "3375", "3/5", &[(20, "g15_2"), (13, "d3")], None),
    row("sqrt(-18)/3", "3704+1456*sqrt(6)", "5/24", &[(3, "g8x-3"), (72, "g8"), (18, "d3"), (4, "d8")], None),
    row("sqrt(-2)/2", "3704-1456*sqrt(6)", "5/12", &[(3, "g8x-3"), (-72, "g8"), (-18, "d3"), (4, "d8")], None),
    row("sqrt(-21)/3", "7344+2808*sqrt(7)", "15/28", &[(1, "g84_2"), (1, "g84_4"), (4, "d4"), (2, "d7")], None),
    row("(3+sqrt(-21))/6", "7344-2808*sqrt(7)", "15/14", &[(1, "g84_2"), (-1, "g84_4"), (-4, "d4"), (2, "d7")], None),
    row("sqrt(-24)/3", "14310+8262*sqrt(3)", "15/32", &[(7, "g24_2"), (1, "g24_2x-8"), (11, "d3"), (6, "d4")], None),
    row("(-3+sqrt(-6))/2", "14310-8262*sqrt(3)", "15/8", &[(7, "g24_2"), (-1, "g24_2x-8"), (11, "d3"), (-6, "d4")], None),
    row("sqrt(-30)/3", "48168+15120*sqrt(10)", "3/40", &[(5, "g120_2"), (5, "g120_4"), (5, "d15"), (2, "d24")], None),
    row("(6+sqrt(-30))/6", "48168-15120*sqrt(10)", "3/20", &[(5, "g120_2"), (-5, "g120_4"), (5, "d15"), (-2, "d24")], None),
];

const TABLE6: &[Row] = &[
    row("sqrt(-2)/2", "256", "40", &[(1, "g8")], Some("[21]")),
    row("sqrt(-8)/2", "3656+2600*sqrt(2)", "5/8", &[(4, "g8x8"), (28, "g8"), (4, "d4"), (1, "d8")], None),
    row("(1+sqrt(-2))/2", "3656-2600*sqrt(2)", "5/4", &[(4, "g8x8"), (-28, "g8"), (4, "d4"), (-1, "d8")], None),
    row("sqrt(-12)/2", "26856+15300*sqrt(3)", "5/12", &[(4, "g48"), (20, "g12"), (11, "d3"), (8, "d4")], Some("Thm. 3.1")),
    row("sqrt(-3)/2", "26856-15300*sqrt(3)", "5/6", &[(4, "g48"), (-20, "g12"), (-11, "d3"), (8, "d4")], Some("Thm. 3.1")),
    row("(1+sqrt(-3))/2", "-144", "10/3", &[(4, "g12"), (1, "d3")], None),
    row("sqrt(-4)/2", "648", "5/2", &[(4, "g16"), (1, "d4")], Some("[25]")),
    row("sqrt(-16)/2", "143208+101574*sqrt(2)", "5/16", &[(4, "g64"), (20, "g16"), (9, "d4"), (4, "d8")], None),
    row("(1+sqrt(-4))/2", "143208-101574*sqrt(2)", "5/8", &[(4, "g64"), (-20, "g16"), (-9, "d4"), (4, "d8")], None),
    row("(1+sqrt(-5))/2", "-1024", "8/5", &[(5, "g20_1"), (2, "d4")], None),
    row("sqrt(-6)/2", "2304", "20/3", &[(1, "g24_1"), (1, "d3")], Some("[25]")),
    row(
        "sqrt(-24)/2",
        "1207368+853632*sqrt(2)+697680*sqrt(3)+493272*sqrt(6)",
        "5/48",
        &[(4, "g24_1x-8"), (4, "g24_2x-8"), (28, "g24_1"), (12, "g24_2"), (28, "d3"), (24, "d4"), (8, "d8"), (1, "d24")],
        None,
    ),
    row(
        "(1+sqrt(-6))/2",
        "1207368+853632*sqrt(2)-697680*sqrt(3)-493272*sqrt(6)",
        "5/24",
        &[(4, "g24_1x-8"), (4, "g24_2x-8"), (-28, "g24_1"), (-12, "g24_2"), (-28, "d3"), (24, "d4"), (8, "d8"), (-1, "d24")],
        None,
    ),
    row(
        "sqrt(-6)/4",
        "1207368-853632*sqrt(2)+697680*sqrt(3)-493272*sqrt(6)",
        "5/16",
        &[(4, "g24_1x-8"), (-4, "g24_2x-8"), (28, "g24_1"), (-12, "g24_2"), (-28, "d3"), (-24, "d4"), (8, "d8"), (1, "d24")],
        None,
    ),
    row(
        "(2+sqrt(-6))/4",
        "1207368-853632*sqrt(2)-697680*sqrt(3)+493272*sqrt(6)",
        "5/12",
        &[(-4, "g24_1x-8"), (4, "g24_2x-8"), (28, "g24_1"), (-12, "g24_2"), (28, "d3"), (-24, "d4"), (8, "d8"), (-1, "d24")],
        None,
    ),
    row("sqrt(-28)/2", "8292456+3132675*sqrt(7)", "5/28", &[(4, "g7x-4"), (224, "g7"), (32, "d4"), (7, "d7")], None),
    row("sqrt(-7)/2", "8292456-3132675*sqrt(7)", "5/14", &[(4, "g7x-4"), (-224, "g7"), (32, "d4"), (-7, "d7")], None),
    // tau = sqrt(14 + sqrt(-28))/8 is a nested radical outside the exact basis
    row("", "81", "40", &[(1, "g7")], None),
    row("(1+sqrt(-7))/2", "-3969", "10/7", &[(40, "g7"), (1, "d7")], None),
    row("(1+sqrt(-9))/2", "-12288", "40/9", &[(1, "g36_1"), (2, "d3")], None),
    row("sqrt(-10)/2", "20736", "4/5", &[(5, "g40_1"), (2, "d8")], Some("[25]")),
    row("(1+sqrt(-13))/2", "-82944", "40/13", &[(1, "g52_1"), (2, "d4")], None),
    row("(3+sqrt(-15))/6", "(-192303+85995*sqrt(5))/2", "1/5", &[(160, "g15_1"), (-120, "g15_2"), (-88, "d3"), (5, "d15")], None),
    row("(1+sqrt(-15))/2", "(-192303-85995*sqrt(5))/2", "1/15", &[(160, "g15_1"), (120, "g15_2"), (88, "d3"), (5, "d15")], None),
    row("sqrt(-18)/2", "614656", "40/3", &[(5, "g8"), (1, "d3")], Some("[25]")),
    row("(3+sqrt(-21))/6", "-893952+516096*sqrt(3)", "20/7", &[(1, "g84_3"), (-1, "g84_4"), (8, "d3"), (-4, "d4")], None),
    row("(1+sqrt(-21))/2", "-893952-516096*sqrt(3)", "20/21", &[(1, "g84_3"), (1, "g84_4"), (8, "d3"), (4, "d4")], None),
    row("sqrt(-42)/42", "347648256+141926400*sqrt(6)", "10/21", &[(1, "g168_3"), (1, "g168_4"), (20, "d3"), (4, "d8")], None),
    row("sqrt(-42)/14", "347648256-141926400*sqrt(6)", "10/7", &[(1, "g168_3"), (-1, "g168_4"), (-20, "d3"), (4, "d8")], None),
];

fn table_records(table: u8, m: Measure, rows: &[Row]) -> Vec<IdentityRecord> {
    rows.iter()
        .enumerate()
        .map(|(i, r)| {
            let tau = (!r.tau.is_empty()).then_some(r.tau);
            let rhs = lc(r.scale, r.items);
            let mut rec = IdentityRecord {
                id: format!("tab{table}.r{:02}", i + 1),
                lhs: term("1", meas(m, r.s, tau)),
                rhs,
                status: if r.reference.is_some() { Status::Proved } else { Status::Conjectural },
                min_digits: 0,
                route_hint: vec![],
                citation: match r.reference {
                    Some(c) => format!("Table {table}, {c}"),
                    None => format!("Table {table}"),
                },
                table: Some(table),
                flags: vec![],
            };
            rec.min_digits = table_min_digits(m, r.s, tau, rec.is_gated());
            rec
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn rec(id: &str, lhs: Expr, rhs: Expr, status: Status, min_digits: u32, route_hint: &[Route], citation: &str, table: Option<u8>) -> IdentityRecord {
    IdentityRecord {
        id: id.into(),
        lhs,
        rhs,
        status,
        min_digits,
        route_hint: route_hint.to_vec(),
        citation: citation.into(),
        table,
        flags: vec![],
    }
}

fn build() -> Vec<IdentityRecord> {
    use Measure::*;
    use Status::*;
    let q = Route::Quadrature;
    let ser = Route::Series;
    let mut v = vec![
        rec("eq1.2", term("1", meas(M2, "32", None)), lc("2", &[(1, "f64")]), Proved, 25, &[], "Eq. (1.2)", Some(1)),
        rec("eq1.3", term("1", meas(M2, "8", None)), lc("2", &[(1, "f32")]), Proved, 25, &[], "Eq. (1.3)", Some(1)),
        rec("eq1.4a", term("1/2", meas(M2, "8+6*sqrt(2)", None)), lc("1/2", &[(1, "f64"), (1, "f32")]), Proved, 25, &[], "Eq. (1.4)", None),
        rec("eq1.4b", term("1/2", meas(M2, "8-6*sqrt(2)", None)), lc("1/2", &[(1, "f64"), (-1, "f32")]), Proved, 15, &[], "Eq. (1.4)", None),
        rec("thm2.2a", term("1", meas(M2, "8+6*sqrt(2)", None)), lc("1", &[(1, "f64"), (1, "f32")]), Proved, 25, &[ser], "Thm. 2.2, Eq. (2.3)", None),
        rec("thm2.2b", term("1", meas(M2, "8-6*sqrt(2)", None)), lc("1", &[(1, "f64"), (-1, "f32")]), Proved, 15, &[q], "Thm. 2.2, Eq. (2.4)", None),
        // Table 1: values of k^2 with m(P_k) known in closed form
        rec("tab1.k2_1", term("1/2", meas(M2, "1", None)), lc("1", &[(1, "f15")]), Proved, 10, &[], "Table 1, k^2 = 1", Some(1)),
        rec("tab1.k2_2", term("1", meas(M2, "2", None)), lc("1/2", &[(1, "f56")]), Proved, 10, &[], "Table 1, k^2 = 2", Some(1)),
        rec("tab1.k2_8", term("1", meas(M2, "8", None)), lc("2", &[(1, "f32")]), Proved, 20, &[], "Table 1, k^2 = 8", Some(1)),
        rec("tab1.k2_16", term("1", meas(M2, "16", None)), lc("4", &[(1, "d4")]), Proved, 20, &[], "Table 1, k^2 = 16", Some(1)),
        rec("tab1.k2_32", term("1", meas(M2, "32", None)), lc("2", &[(1, "f64")]), Proved, 20, &[], "Table 1, k^2 = 32", Some(1)),
        rec("m2.128", term("1", meas(M2, "128", None)), lc("1/2", &[(1, "f448")]), Conjectural, 10, &[], "Sec. 2, [19, Tab. 4]", None),
        rec("conj2.7a", term("1", meas(M2, "8+9*sqrt(2)", None)), lc("1/4", &[(1, "f448"), (1, "f56")]), Conjectural, 10, &[], "Conj. 2.7", None),
        rec("conj2.7b", term("1", meas(M2, "8-9*sqrt(2)", None)), lc("1/4", &[(1, "f448"), (-1, "f56")]), Conjectural, 10, &[], "Conj. 2.7", None),
        rec("f289a", term("1", meas(M2, "(49+9*sqrt(17))/2", None)), lc("1/2", &[(1, "f289"), (8, "f17")]), Conjectural, 10, &[], "Sec. 2", None),
        rec("f289b", term("1", meas(M2, "(49-9*sqrt(17))/2", None)), lc("1/2", &[(1, "f289"), (-8, "f17")]), Conjectural, 10, &[], "Sec. 2", None),
        rec("m2.17", term("2", meas(M2, "17", None)), lc("1", &[(1, "f289")]), Conjectural, 10, &[], "Sec. 2", None),
        rec(
            "m2.17weak",
            term("1", meas(M2, "(49+9*sqrt(17))/2", None)).plus(term("-1", meas(M2, "17", None))),
            lc("4", &[(1, "f17")]),
            Conjectural,
            10,
            &[],
            "Sec. 2, [22, Sec. 4]",
            None,
        ),
        rec(
            "thm2.9",
            term("1", meas(M3, "6-6*cbrt(2)+18*cbrt(4)", None)),
            lc("3/2", &[(1, "f108"), (1, "f36"), (-3, "f27")]),
            Proved,
            15,
            &[ser],
            "Thm. 2.9",
            None,
        ),
        rec(
            "cor2.10a",
            term("1", Atom::Hyper { family: HyperFamily::M2, arg: ex("-16+12*sqrt(2)") }),
            term("(4+3*sqrt(2))/2", Atom::Log(ex("8+6*sqrt(2)"))).plus(lc("-(4+3*sqrt(2))/2", &[(1, "f64"), (1, "f32")])),
            Proved,
            15,
            &[],
            "Cor. 2.10",
            None,
        ),
        rec(
            "cor2.10b",
            term("1", Atom::Hyper { family: HyperFamily::M3, arg: ex("(63+171*cbrt(2)-18*cbrt(4))/250") }),
            term("1-cbrt(2)+3*cbrt(4)", Atom::Log(ex("6-6*cbrt(2)+18*cbrt(4)")))
                .plus(lc("-3/2*(1-cbrt(2)+3*cbrt(4))", &[(1, "f108"), (1, "f36"), (-3, "f27")])),
            Proved,
            15,
            &[],
            "Cor. 2.10",
            None,
        ),
        rec(
            "m3.c1",
            term("1", meas(M3, "17766+14094*cbrt(2)+11178*cbrt(4)", None)),
            lc("3/2", &[(1, "f108"), (3, "f36"), (3, "f27")]),
            Conjectural,
            20,
            &[],
            "Sec. 2",
            None,
        ),
        rec(
            "m3.c2",
            term("1", meas(M3, "17766-7047*cbrt(2)-5589*cbrt(4)+27*sqrt(-3)*(261*cbrt(2)-207*cbrt(4))", None)),
            lc("3/2", &[(1, "f108"), (3, "f36"), (-6, "f27")]),
            Conjectural,
            15,
            &[],
            "Sec. 2",
            None,
        ),
        rec("m3.c3", term("1", meas(M3, "(7+sqrt(5))^3/4", None)), lc("1/8", &[(9, "f100"), (38, "f20")]), Conjectural, 10, &[], "Sec. 2", None),
        rec("m3.c4", term("1", meas(M3, "(7-sqrt(5))^3/4", None)), lc("1/4", &[(9, "f100"), (-38, "f20")]), Conjectural, 10, &[], "Sec. 2", None),
        rec(
            "eq2.20",
            term("19", meas(M3, "32", None)),
            term("16", meas(M3, "(7+sqrt(5))^3/4", None)).plus(term("-8", meas(M3, "(7-sqrt(5))^3/4", None))),
            Proved,
            10,
            &[ser],
            "Eq. (2.20)",
            None,
        ),
        rec("eq2.21", term("1", meas(M3, "32", None)), lc("8", &[(1, "f20")]), Proved, 20, &[], "Eq. (2.21)", None),
        rec(
            "thm3.1a",
            term("1", meas(N4, "26856+15300*sqrt(3)", Some("sqrt(-12)/2"))),
            lc("5/12", &[(20, "g12"), (4, "g48"), (11, "d3"), (8, "d4")]),
            Proved,
            25,
            &[Route::GMatrix],
            "Thm. 3.1",
            None,
        ),
        rec(
            "thm3.1b",
            term("1", meas(N4, "26856-15300*sqrt(3)", Some("sqrt(-3)/2"))),
            lc("5/6", &[(-20, "g12"), (4, "g48"), (-11, "d3"), (8, "d4")]),
            Proved,
            25,
            &[Route::GMatrix],
            "Thm. 3.1",
            None,
        ),
        rec(
            "fiveterm",
            term("1", meas(N2, "64", Some("sqrt(-1)/2"))),
            term("9", meas(N2, "280+198*sqrt(2)", Some("sqrt(-4)/2")))
                .plus(term("4", meas(N2, "-143360-101376*sqrt(2)", None)))
                .plus(term("-1", meas(N2, "-8", Some("(1+sqrt(-1))/2"))))
                .plus(term("-8", meas(N2, "71704+50688*sqrt(2)+60282*rt4(2)+42633*rt4(8)", None))),
            Proved,
            10,
            &[],
            "Sec. 5, Thm. 5.1 at t = 1/2",
            None,
        ),
        rec("fiveterm.n2m8", term("1", meas(N2, "-8", Some("(1+sqrt(-1))/2"))), lc("1", &[(4, "g16"), (1, "d4")]), Conjectural, 20, &[], "Sec. 5", None),
        rec(
            "fiveterm.n2_280",
            term("1", meas(N2, "280+198*sqrt(2)", Some("sqrt(-4)/2"))),
            lc("1/8", &[(36, "g16"), (4, "g64"), (13, "d4"), (4, "d8")]),
            Conjectural,
            20,
            &[],
            "Sec. 5",
            None,
        ),
    ];
    v.extend(table_records(4, N2, TABLE4));
    v.extend(table_records(5, N3, TABLE5));
    v.extend(table_records(6, N4, TABLE6));
    if let Some(r) = v.iter_mut().find(|r| r.id == "tab4.r04") {
        r.flags.push("table-transcription: scale printed as 1/2 while the conjugate row prints 1/8".into());
    }
    v
}

/// The full registry (built once).
pub fn registry() -> &'static [IdentityRecord] {
    static R: OnceLock<Vec<IdentityRecord>> = OnceLock::new();
    R.get_or_init(build)
}

pub fn find(id: &str) -> Result<&'static IdentityRecord> {
    registry().iter().find(|r| r.id == id).ok_or_else(|| Error::Unknown(format!("identity {id}")))
}

/// Every label the registry can ask for, for gating checks.
pub fn all_labels() -> Vec<String> {
    let mut v: Vec<String> = registry().iter().flat_map(|r| r.lhs.labels().into_iter().chain(r.rhs.labels())).map(String::from).collect();
    v.sort();
    v.dedup();
    v
}
