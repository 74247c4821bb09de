use clap::{Args, Parser, Subcommand, ValueEnum};
use mahler::exactnum::ExactValue;
use mahler::lfunc;
use mahler::mahler::{self as measures, Measure, QuadratureConfig, Route};
use mahler::modular::{self, Tau};
use mahler::numerics::{fmt_float, BigComplex, PrecisionContext};
use mahler::verify::{self, functional, SuiteFilter, VerificationReport, VerifyOptions};
use mahler::{Error, Result};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "mahler", version, about = "Evaluate Mahler measures and check their L-value identities")]
struct Cli {
    /// Directory of `<label>.txt` coefficient files (overrides MAHLER_COEFF_DIR).
    #[arg(long, global = true)]
    coeff_dir: Option<PathBuf>,
    /// Worker threads for parallel work.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(flatten)]
    prec: Prec,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone, Copy)]
struct Prec {
    /// Target decimal digits.
    #[arg(long, global = true, default_value_t = PrecisionContext::DEFAULT_TARGET)]
    prec_digits: u32,
}

impl Prec {
    fn ctx(self) -> Result<PrecisionContext> {
        if !(5..=2000).contains(&self.prec_digits) {
            return Err(Error::Precondition(format!("--prec-digits {} outside 5..=2000", self.prec_digits)));
        }
        Ok(PrecisionContext::new(self.prec_digits))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate a single quantity.
    Eval {
        #[command(subcommand)]
        q: Quantity,
    },
    /// List or run registry identities.
    Identity {
        #[command(subcommand)]
        cmd: IdentityCmd,
    },
    /// Run a filtered set of identities.
    Suite {
        #[arg(long)]
        status: Option<String>,
        #[arg(long)]
        table: Option<u8>,
        /// Only ids starting with this prefix.
        #[arg(long)]
        id: Option<String>,
        /// Override every record's required digits.
        #[arg(long)]
        digits: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Quadrature-only evaluation of a measure.
    Oracle {
        family: Measure,
        #[arg(allow_hyphen_values = true)]
        param: String,
        #[arg(long, default_value_t = 20)]
        digits: u32,
    },
    /// Functional equations at seeded random points.
    Functional {
        #[arg(long, default_value_t = functional::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Exact checks of the j-invariant fixtures.
    Fixtures,
    /// Write weight 2 coefficient files computed from elliptic curves.
    Curves {
        dir: std::path::PathBuf,
        #[arg(long, default_value_t = 5000)]
        order: usize,
    },
}

#[derive(Subcommand)]
enum Quantity {
    M2 { #[arg(allow_hyphen_values = true)] t: String, #[command(flatten)] r: RouteArgs },
    M3 { #[arg(allow_hyphen_values = true)] t: String, #[command(flatten)] r: RouteArgs },
    N2 { #[arg(allow_hyphen_values = true)] s: String, #[command(flatten)] r: RouteArgs },
    N3 { #[arg(allow_hyphen_values = true)] s: String, #[command(flatten)] r: RouteArgs },
    N4 { #[arg(allow_hyphen_values = true)] s: String, #[command(flatten)] r: RouteArgs },
    /// Dedekind eta at tau.
    Eta { tau: String },
    /// L'(f, 0) for a newform label.
    #[command(name = "Lprime0", alias = "lprime0")]
    Lprime0 { label: String },
    /// d_k = L'(chi_{-k}, -1).
    Dk { k: i64 },
    /// G(q) for real or complex q.
    #[command(name = "G", alias = "g")]
    G {
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// s_j(tau) for j = 2, 3, 4.
    Sj { j: u32, tau: String },
}

#[derive(Args)]
struct RouteArgs {
    /// tau with s_j(tau) equal to the parameter (enables the G-matrix route).
    #[arg(long)]
    tau: Option<String>,
    /// Force a single route.
    #[arg(long)]
    route: Option<Route>,
}

#[derive(Subcommand)]
enum IdentityCmd {
    List {
        #[arg(long)]
        status: Option<String>,
        #[arg(long)]
        table: Option<u8>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    Run {
        id: String,
        #[arg(long)]
        route: Option<Route>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn parse_param(s: &str, ctx: &PrecisionContext) -> Result<BigComplex> {
    Ok(ExactValue::parse(s)?.render(ctx))
}

fn eval_measure(m: Measure, param: &str, r: &RouteArgs, ctx: &PrecisionContext) -> Result<()> {
    let x = parse_param(param, ctx)?;
    let tau = r.tau.as_deref().map(|t| Tau::parse(t, ctx)).transpose()?;
    let routes: Vec<Route> = match r.route {
        Some(rt) => vec![rt],
        None => Route::PREFERENCE.to_vec(),
    };
    let v = measures::evaluate(m, &x, tau.as_ref(), &routes, ctx, &QuadratureConfig::default())?;
    println!("{m}({param}) = {}", fmt_float(&v.value, ctx.target_digits as usize));
    println!("route: {} (about {} digits)", v.route, v.expected_digits);
    for n in v.notes {
        println!("note: {n}");
    }
    Ok(())
}

fn eval(q: &Quantity, ctx: &PrecisionContext) -> Result<()> {
    let d = ctx.target_digits as usize;
    match q {
        Quantity::M2 { t, r } => eval_measure(Measure::M2, t, r, ctx),
        Quantity::M3 { t, r } => eval_measure(Measure::M3, t, r, ctx),
        Quantity::N2 { s, r } => eval_measure(Measure::N2, s, r, ctx),
        Quantity::N3 { s, r } => eval_measure(Measure::N3, s, r, ctx),
        Quantity::N4 { s, r } => eval_measure(Measure::N4, s, r, ctx),
        Quantity::Eta { tau } => {
            println!("{}", modular::eta(&Tau::parse(tau, ctx)?, ctx).to_string_digits(d));
            Ok(())
        }
        Quantity::Lprime0 { label } => {
            println!("{}", fmt_float(&lfunc::lprime0_label(label, ctx)?, d));
            Ok(())
        }
        Quantity::Dk { k } => {
            println!("{}", fmt_float(&lfunc::d_k(*k, ctx)?, d));
            Ok(())
        }
        Quantity::G { q } => {
            println!("{}", fmt_float(&modular::big_g(&parse_param(q, ctx)?, ctx)?, d));
            Ok(())
        }
        Quantity::Sj { j, tau } => {
            let t = Tau::parse(tau, ctx)?;
            let v = match j {
                2 => modular::s2_tau(&t, ctx),
                3 => modular::s3_tau(&t, ctx),
                4 => modular::s4_tau(&t, ctx),
                _ => return Err(Error::Precondition(format!("s_j needs j in {{2, 3, 4}}, got {j}"))),
            };
            println!("{}", v.to_string_digits(d));
            Ok(())
        }
    }
}

fn print_reports(reports: &[VerificationReport], format: Format) {
    match format {
        Format::Json => println!("{}", verify::to_json(reports)),
        Format::Text => {
            for r in reports {
                println!("{}", r.text_line());
            }
            let pass = reports.iter().filter(|r| r.passed == Some(true)).count();
            let fail = reports.iter().filter(|r| r.passed == Some(false)).count();
            let skip = reports.iter().filter(|r| r.skipped()).count();
            println!("{} identities: {pass} passed, {fail} failed, {skip} skipped", reports.len());
        }
    }
}

fn filter(status: Option<&str>, table: Option<u8>, id: Option<String>) -> Result<SuiteFilter> {
    Ok(SuiteFilter { status: status.map(str::parse).transpose()?, table, id_prefix: id })
}

/// Exit code 1 is a verification failure; configuration errors are returned.
fn run(cli: Cli) -> Result<bool> {
    let prec = cli.prec;
    match cli.cmd {
        Cmd::Eval { q } => {
            eval(&q, &prec.ctx()?)?;
            Ok(true)
        }
        Cmd::Identity { cmd: IdentityCmd::List { status, table, format } } => {
            let recs = verify::engine::select(&filter(status.as_deref(), table, None)?);
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&recs).expect("records serialize")),
                Format::Text => {
                    for r in recs {
                        let gate = r.external_labels();
                        let gate = if gate.is_empty() { String::new() } else { format!("  [needs {}]", gate.join(", ")) };
                        println!("{:<18} {:<18} {} = {}{gate}", r.id, r.status.name(), r.lhs, r.rhs);
                    }
                }
            }
            Ok(true)
        }
        Cmd::Identity { cmd: IdentityCmd::Run { id, route, format } } => {
            let rec = verify::find(&id)?;
            let mut opts = VerifyOptions::new(prec.ctx()?);
            opts.routes = route.map(|r| vec![r]);
            let rep = verify::evaluate_record(rec, &opts);
            print_reports(std::slice::from_ref(&rep), format);
            Ok(rep.passed != Some(false))
        }
        Cmd::Suite { status, table, id, digits, format } => {
            let mut opts = VerifyOptions::new(prec.ctx()?);
            opts.min_digits = digits;
            let reports = verify::run_suite(&filter(status.as_deref(), table, id)?, &opts);
            print_reports(&reports, format);
            Ok(verify::proved_all_pass(&reports))
        }
        Cmd::Oracle { family, param, digits } => {
            let ctx = PrecisionContext::new(digits);
            let x = parse_param(&param, &ctx)?;
            let r = measures::measure_quadrature(family, &x, &ctx, &QuadratureConfig::default())?;
            println!("{family}({param}) = {}", fmt_float(&r.value, digits as usize));
            println!("error estimate {:.2e}, {} panels, {} breakpoints", r.error_estimate, r.panels, r.breakpoints);
            Ok(true)
        }
        Cmd::Functional { seed, format } => {
            let ctx = prec.ctx()?;
            let mut checks = functional::run_all(seed, &ctx)?;
            let audit = functional::convergence_audit("fiveterm", &ctx)?;
            let ok = checks.iter().all(|c| c.passed) && audit.passed;
            match format {
                Format::Json => {
                    let v = serde_json::json!({ "checks": checks, "convergence_audit": audit });
                    println!("{}", serde_json::to_string_pretty(&v).expect("checks serialize"));
                }
                Format::Text => {
                    for c in checks.drain(..) {
                        let mark = if c.passed { "PASS" } else { "FAIL" };
                        println!("{mark} {:<22} {:<26} digits {:>3}/{}", c.name, c.point, c.digits_agreed, c.min_digits);
                    }
                    let mark = if audit.passed { "PASS" } else { "FAIL" };
                    println!("{mark} convergence audit ({}): {} -> {} digits", audit.id, audit.digits_low, audit.digits_high);
                }
            }
            Ok(ok)
        }
        Cmd::Fixtures => {
            let mut ok = true;
            for (name, rows) in [("j(E_s)", verify::fixtures::check_je()?), ("j(G_s)", verify::fixtures::check_jg()?)] {
                let bad: Vec<_> = rows.iter().filter(|r| !r.ok()).collect();
                println!("{name}: {} of {} rows reproduce exactly", rows.len() - bad.len(), rows.len());
                for r in bad {
                    println!("  mismatch at s = {}: listed j = {}", r.s, r.j);
                }
                ok &= rows.iter().all(|r| r.ok());
            }
            Ok(ok)
        }
        Cmd::Curves { dir, order } => {
            std::fs::create_dir_all(&dir).map_err(|e| mahler::Error::MissingData(format!("{}: {e}", dir.display())))?;
            for p in lfunc::curves::write_curve_files(&dir, order)? {
                println!("{}", p.display());
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: --jobs: {e}");
            return ExitCode::from(2);
        }
    }
    if let Some(d) = &cli.coeff_dir {
        if !d.is_dir() {
            eprintln!("error: --coeff-dir {} is not a directory", d.display());
            return ExitCode::from(2);
        }
        lfunc::set_coeff_dir(Some(d.clone()));
    }
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
