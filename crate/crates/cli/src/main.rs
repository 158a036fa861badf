//! `heckekit`: compute Hecke algebra objects and run verification suites.
//!
//! Exit codes: 0 success, 1 failed check, 2 usage or parse error,
//! 3 refusal because of the resource budget.

use std::io::Write as _;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use heckekit::affine_weyl::AffineWeylElement;
use heckekit::budget::BUDGET_ENV;
use heckekit::verify::{run_suite, Suite};
use heckekit::whittaker::{kl_cross_check, lambda_length, lusztig_q_analogue, whittaker_table, whittaker_trace};
use heckekit::{
    build_root_datum, AffineWeylGroup, AntisphericalModule, Budget, Error, HeckeAlgebra, HeckeElement, LatticeKind,
    LaurentPoly, Weight,
};
use serde_json::json;

/// `writeln!` into a `String`, which cannot fail.
macro_rules! outln {
    ($out:expr, $($arg:tt)*) => {{
        use std::fmt::Write as _;
        writeln!($out, $($arg)*).expect("writing to a String");
    }};
}

#[derive(Parser, Debug)]
#[command(name = "heckekit", version, about = "Exact computations in affine Hecke algebras")]
struct Cli {
    /// Cartan type, e.g. A2, B3, G2.
    #[arg(long = "type", global = true, default_value = "A1")]
    cartan_type: String,

    /// `weight`, `root`, or `intermediate:[a,b];[c,d]` (Dynkin labels).
    #[arg(long, global = true, default_value = "weight")]
    lattice: String,

    /// Size parameter for `verify`.
    #[arg(long, global = true, default_value_t = 4)]
    bound: u32,

    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Longest element for Kazhdan-Lusztig computations.
    #[arg(long, global = true, env = BUDGET_ENV)]
    budget: Option<u32>,

    /// Include wall-clock duration in verification reports.
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Kazhdan-Lusztig polynomial P_{x,w}(q).
    Kl { x: String, w: String },
    /// Bernstein element theta_lambda in the standard basis.
    Theta { weight: String },
    /// Central element z_lambda for dominant lambda.
    Center { weight: String },
    /// Act on m_e in the anti-spherical module.
    #[command(name = "masp-act")]
    MaspAct {
        /// Act by T_w (or C'_w with --kl).
        element: Option<String>,
        /// Act by theta_lambda instead.
        #[arg(long, conflicts_with_all = ["element", "kl"])]
        theta: Option<String>,
        #[arg(long)]
        kl: bool,
    },
    /// P_{lambda,mu}(q) and Q_{lambda,mu}(t).
    Qweight {
        lambda: String,
        mu: String,
        /// Compare P with the KL polynomial P_{x,w}; needs --w too.
        #[arg(long, requires = "w")]
        x: Option<String>,
        #[arg(long, requires = "x")]
        w: Option<String>,
    },
    /// Q_{lambda,mu} for all weights mu of V_lambda.
    #[command(name = "whittaker-table")]
    WhittakerTable { lambda: String },
    /// Run a verification suite.
    Verify {
        #[arg(value_parser = Suite::NAMES)]
        suite: String,
    },
}

enum Failure {
    Lib(Error),
    Csv(csv::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Csv(e)
    }
}

struct Ctx {
    group: Arc<AffineWeylGroup>,
    hecke: Arc<HeckeAlgebra>,
}

impl Ctx {
    fn weight(&self, s: &str) -> Result<Weight, Error> {
        let coords = Weight::parse(s)?;
        self.group.datum().from_lattice_coords(coords.coords())
    }

    fn element(&self, s: &str) -> Result<AffineWeylElement, Error> {
        self.group.parse_element(s)
    }

    fn coords(&self, w: &Weight) -> String {
        Weight::new(&self.group.datum().to_lattice_coords(w).expect("lattice weight")).to_string()
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(&cli, &mut out);
    // A closed pipe (`heckekit ... | head`) is not an error worth reporting.
    if let Err(e) = std::io::stdout().lock().write_all(out.as_bytes()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("heckekit: {e}");
            return ExitCode::from(2);
        }
    }
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Lib(e)) => {
            eprintln!("heckekit: {e}");
            match e {
                Error::Budget { .. } | Error::WeylGroupTooLarge(..) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
        Err(Failure::Csv(e)) => {
            eprintln!("heckekit: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli, out: &mut String) -> Result<bool, Failure> {
    let lattice = LatticeKind::parse(&cli.lattice)?;
    let datum = build_root_datum(&cli.cartan_type, lattice)?;
    let mut budget = Budget::default();
    if let Some(b) = cli.budget {
        budget.max_kl_length = b;
    }
    let group = AffineWeylGroup::with_budget(datum, budget)?;
    let hecke = HeckeAlgebra::new(group.clone());
    let ctx = Ctx { group, hecke };
    let fmt = cli.format;

    match &cli.command {
        Command::Kl { x, w } => {
            let (x, w) = (ctx.element(x)?, ctx.element(w)?);
            let p = ctx.hecke.kl_polynomial(&x, &w)?;
            let mu = ctx.hecke.kl_mu(&x, &w)?;
            let (x, w) = (ctx.group.format_element(&x), ctx.group.format_element(&w));
            let p = p.to_string_var("q");
            match fmt {
                Format::Text => outln!(out, "{p}"),
                Format::Json => print_json(out, &json!({ "x": x, "w": w, "P_q": p, "mu": mu.to_string() })),
                Format::Csv => write_csv(out, &["x", "w", "P_q", "mu"], [[x, w, p, mu.to_string()]])?,
            }
        }
        Command::Theta { weight } => {
            let h = ctx.hecke.theta(&ctx.weight(weight)?)?;
            print_hecke(out, &ctx, &h, fmt)?;
        }
        Command::Center { weight } => {
            let h = ctx.hecke.center_element(&ctx.weight(weight)?)?;
            print_hecke(out, &ctx, &h, fmt)?;
        }
        Command::MaspAct { element, theta, kl } => {
            let module = AntisphericalModule::new(ctx.hecke.clone());
            let m = match (element, theta) {
                (_, Some(lambda)) => module.theta_basis(&ctx.weight(lambda)?)?,
                (Some(e), None) => {
                    let w = ctx.element(e)?;
                    let h = if *kl { ctx.hecke.kl_basis(&w)? } else { ctx.hecke.t(&w) };
                    module.act(&module.m_e(), &h)?
                }
                (None, None) => return Err(Error::Parse("masp-act needs an element or --theta".into()).into()),
            };
            match fmt {
                Format::Text => outln!(out, "{}", module.format_text(&m)?),
                Format::Json => outln!(out, "{}", module.to_json(&m)?),
                Format::Csv => write_csv(
                    out,
                    &["basis", "element", "coeff"],
                    m.terms()
                        .into_iter()
                        .map(|(w, c)| ["m".to_string(), ctx.group.format_element(w), c.to_string()]),
                )?,
            }
        }
        Command::Qweight { lambda, mu, x, w } => {
            let datum = ctx.group.datum();
            let (lambda, mu) = (ctx.weight(lambda)?, ctx.weight(mu)?);
            let (mu_plus, _) = datum.dominant_representative(&mu);
            let p = lusztig_q_analogue(datum, &lambda, &mu_plus)?;
            let q = whittaker_trace(datum, &lambda, &mu)?;
            let cross = match (x, w) {
                (Some(x), Some(w)) => Some(kl_cross_check(&ctx.hecke, &lambda, &mu, &ctx.element(x)?, &ctx.element(w)?)?),
                _ => None,
            };
            let row = [
                ctx.coords(&lambda),
                ctx.coords(&mu),
                p.to_string_var("q"),
                q.to_string_var("t"),
                q.eval_one().to_string(),
                lambda_length(datum, &lambda).to_string(),
            ];
            match fmt {
                Format::Text => {
                    outln!(out, "P_q = {}", row[2]);
                    outln!(out, "Q_t = {}", row[3]);
                    if let Some(c) = cross {
                        outln!(out, "kl_match = {c}");
                    }
                }
                Format::Json => {
                    let mut v = json!({
                        "lambda": row[0], "mu": row[1], "P_q": row[2], "Q_t": row[3],
                        "Q_at_1": q.eval_one().to_string(), "lambda_length": lambda_length(datum, &lambda),
                    });
                    if let Some(c) = cross {
                        v["kl_match"] = json!(c);
                    }
                    print_json(out, &v);
                }
                Format::Csv => write_csv(out, &["lambda", "mu", "P_q", "Q_t", "Q_at_1", "lambda_length"], [row])?,
            }
        }
        Command::WhittakerTable { lambda } => {
            let table = whittaker_table(&ctx.group, &ctx.weight(lambda)?)?;
            let rows = table.rows(&ctx.group);
            match fmt {
                Format::Csv => {
                    let mut wtr = csv::Writer::from_writer(Vec::new());
                    for r in &rows {
                        wtr.serialize(r)?;
                    }
                    push_csv(out, wtr)?;
                }
                Format::Json => print_json(out, &serde_json::to_value(&rows).expect("rows serialize")),
                Format::Text => {
                    for r in &rows {
                        outln!(out, 
                            "mu={} kappa={} P={} Q={} Q(1)={} mult={}{}",
                            r.mu,
                            r.kappa_mu,
                            r.p_q,
                            r.q_t,
                            r.q_at_1,
                            r.freudenthal_mult,
                            if r.matches { "" } else { " MISMATCH" }
                        );
                    }
                }
            }
            return Ok(rows.iter().all(|r| r.matches));
        }
        Command::Verify { suite } => {
            let suite: Suite = suite.parse()?;
            let start = Instant::now();
            let mut report = run_suite(suite, &ctx.group, cli.bound, cli.seed)?;
            if cli.timing {
                report.duration_ms = Some(start.elapsed().as_millis() as u64);
            }
            match fmt {
                Format::Json => outln!(out, "{}", report.to_json()),
                Format::Text => out.push_str(&report.to_text()),
                Format::Csv => write_csv(
                    out,
                    &["suite", "check", "passed", "instances", "counterexample"],
                    report.checks.iter().map(|c| {
                        [
                            c.suite.clone(),
                            c.check.name.clone(),
                            c.check.passed.to_string(),
                            c.check.instances.to_string(),
                            c.check.counterexample.clone().unwrap_or_default(),
                        ]
                    }),
                )?,
            }
            return Ok(report.passed);
        }
    }
    Ok(true)
}

fn print_hecke(out: &mut String, ctx: &Ctx, h: &HeckeElement, fmt: Format) -> Result<(), Failure> {
    match fmt {
        Format::Text => outln!(out, "{}", ctx.hecke.format_text(h)?),
        Format::Json => outln!(out, "{}", ctx.hecke.to_json(h)?),
        Format::Csv => write_csv(
            out,
            &["element", "coeff"],
            h.terms()
                .into_iter()
                .map(|(w, c): (&AffineWeylElement, &LaurentPoly)| [ctx.group.format_element(w), c.to_string()]),
        )?,
    }
    Ok(())
}

fn print_json(out: &mut String, v: &serde_json::Value) {
    outln!(out, "{}", serde_json::to_string_pretty(v).expect("json values serialize"));
}

fn write_csv<const N: usize>(
    out: &mut String,
    header: &[&str], rows: impl IntoIterator<Item = [String; N]>) -> Result<(), Failure> {
    let mut wtr = csv::Writer::from_writer(Vec::new());
    wtr.write_record(header)?;
    for r in rows {
        wtr.write_record(&r)?;
    }
    push_csv(out, wtr)
}

fn push_csv(out: &mut String, wtr: csv::Writer<Vec<u8>>) -> Result<(), Failure> {
    let bytes = wtr.into_inner().map_err(|e| csv::Error::from(e.into_error()))?;
    out.push_str(&String::from_utf8(bytes).expect("csv of utf-8 fields"));
    Ok(())
}
