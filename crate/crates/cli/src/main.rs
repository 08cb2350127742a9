use clap::{Parser, Subcommand, ValueEnum};
use qgal::coaction::gamma;
use qgal::freealg::NcPoly;
use qgal::homspace::BAction;
use qgal::pol::{antipode_pol, delta_pol, PolVariant};
use qgal::suite::{default_workers, parse_grid, run_verify, Suite, VerifyOptions};
use qgal::text::{parse_expression, parse_label, parse_params, parse_param, Context};
use qgal::uq::{antipode_uq, delta_uq, make_uq};
use qgal::QgalError;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "qgal", version, about = "Exact computations in the U_q(mu,nu) family and its quantum homogeneous spaces")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse an element and print its normal form.
    Eval {
        #[arg(long)]
        ctx: String,
        expr: String,
    },
    /// Print the normal form one monomial per line.
    Nf {
        #[arg(long)]
        ctx: String,
        expr: String,
    },
    /// Coproduct: `Delta^ups` on `Uq(mu,nu)`, or `Delta` on `Pol(..)`.
    Delta {
        #[arg(long)]
        ctx: String,
        /// Intermediate label for `Uq` contexts (defaults to nu).
        #[arg(long)]
        via: Option<String>,
        expr: String,
    },
    /// Antipode on `Uq(mu,nu)` or `Pol(..)`.
    Antipode {
        #[arg(long)]
        ctx: String,
        expr: String,
    },
    /// Action of an element of `Uq(mu,mu)` on `B(mu,nu;tau)`.
    Act {
        #[arg(long)]
        params: String,
        u: String,
        b: String,
    },
    /// Pairing of an element of `Uq(mu,mu)` with one of `Pol(mu)`.
    Pair {
        #[arg(long)]
        mu: String,
        u: String,
        p: String,
    },
    /// Coaction of `Pol(mu)` on an element of `B(mu,nu;tau)`.
    Gamma {
        #[arg(long)]
        params: String,
        expr: String,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 3)]
        degree: usize,
        #[arg(long)]
        ergodic_degree: Option<u32>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "default")]
        grid: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// List suites and algebra contexts.
    List,
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<QgalError> for Failure {
    fn from(e: QgalError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn ctx_expr(ctx: &str, expr: &str) -> Result<(Context, NcPoly), Failure> {
    let c = Context::parse(ctx)?;
    let e = parse_expression(&c.presentation(), expr)?;
    Ok((c, e))
}

fn run(cmd: Cmd) -> Result<(), Failure> {
    match cmd {
        Cmd::Eval { ctx, expr } => println!("{}", ctx_expr(&ctx, &expr)?.1.render()),
        Cmd::Nf { ctx, expr } => {
            let (c, e) = ctx_expr(&ctx, &expr)?;
            let pres = c.presentation();
            let mut terms: Vec<_> = e.terms().iter().collect();
            terms.sort_by_key(|(w, _)| pres.order_key(w));
            for (w, k) in terms {
                println!("{}\t{}", pres.render_word(w), k.render());
            }
        }
        Cmd::Delta { ctx, via, expr } => {
            let (c, e) = ctx_expr(&ctx, &expr)?;
            let t = match c {
                Context::Uq(mu, nu) => {
                    let ups = via.as_deref().map(parse_param).transpose()?.unwrap_or_else(|| nu.clone());
                    parse_label(&format!("{},{}", qgal::uq::param_text(&mu), qgal::uq::param_text(&ups)))?;
                    delta_uq(&mu, &nu, &ups, &e)?
                }
                Context::Pol(v) => delta_pol(v, &e)?,
                other => return Err(Failure::Usage(format!("no coproduct on {other}"))),
            };
            println!("{}", t.render());
        }
        Cmd::Antipode { ctx, expr } => {
            let (c, e) = ctx_expr(&ctx, &expr)?;
            let s = match c {
                Context::Uq(mu, nu) => antipode_uq(&mu, &nu, &e)?,
                Context::Pol(v) => antipode_pol(v, &e)?,
                other => return Err(Failure::Usage(format!("no antipode on {other}"))),
            };
            println!("{}", s.render());
        }
        Cmd::Act { params, u, b } => {
            let p = parse_params(&params)?;
            let x = parse_expression(&make_uq(&p.mu, &p.mu), &u)?;
            let y = parse_expression(&qgal::homspace::make_b(&p), &b)?;
            println!("{}", BAction::new(&p).act(&x, &y)?.render());
        }
        Cmd::Pair { mu, u, p } => {
            let v = PolVariant::parse(&mu).filter(|v| *v != PolVariant::Sl2c).ok_or_else(|| {
                Failure::Usage(format!("mu must be one of +, -, 0, got '{mu}'"))
            })?;
            let m = v.mu().expect("real variant");
            let x = parse_expression(&make_uq(&m, &m), &u)?;
            let y = parse_expression(&qgal::pol::make_pol(v), &p)?;
            println!("{}", qgal::pairing::pair(v, &x, &y)?.render());
        }
        Cmd::Gamma { params, expr } => {
            let p = parse_params(&params)?;
            let y = parse_expression(&qgal::homspace::make_b(&p), &expr)?;
            println!("{}", gamma(&p, &y)?.render());
        }
        Cmd::Verify { suite, degree, ergodic_degree, samples, seed, grid, format, workers } => {
            let suite: Suite = suite.parse()?;
            let o = VerifyOptions {
                suite,
                degree,
                ergodic_degree: ergodic_degree.unwrap_or(if suite == Suite::Ergodic && degree != 3 { degree as u32 } else { 6 }),
                samples,
                seed,
                grid: parse_grid(&grid)?,
                workers: workers.unwrap_or_else(default_workers),
            };
            let doc = run_verify(&o)?;
            match format {
                Format::Json => println!("{}", doc.to_json()),
                Format::Text => print!("{}", doc.to_text()),
            }
            if !doc.all_passed() {
                return Err(Failure::Verification);
            }
        }
        Cmd::List => {
            println!("suites:");
            for s in Suite::EACH {
                println!("  {s}");
            }
            println!("  all");
            println!("contexts:");
            for c in ["Uq(mu,nu)", "A(mu,nu;tau)", "B(mu,nu;tau)", "D(mu,nu;tau)", "Pol(+) Pol(-) Pol(0) Pol(sl2c)"] {
                println!("  {c}");
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
