//! `pmx`: construct ideals of minors, run Groebner computations on them,
//! sample finite-field points, and execute the named verification checks.
//!
//! Exit codes: 0 success (including budget skips, which are reported in the
//! output), 1 computation or verification failure, 2 usage errors.

use std::path::{Path, PathBuf};

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use pmx_core::groebner::{
    codim, colon_ideal, colon_poly, ideal_member, intersect, normal_form, saturate,
};
use pmx_core::minors::{determinantal_ideal, principal_minor_ideal, q_ideal};
use pmx_core::parse::{parse_poly, print_poly};
use pmx_core::strata::{estimate_codim, exhaustive_count, SampleConfig};
use pmx_core::verify::{default_suite, run_check, run_suite, summarize, CheckSpec, Status};
use pmx_core::{Budget, Error, Field, Ideal, TermOrder};

#[derive(Parser)]
#[command(name = "pmx", version, about = "principal minor ideal toolkit", max_term_width = 100)]
struct Cli {
    #[command(flatten)]
    global: Global,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Coefficient field: Q or Fp:<prime>
    #[arg(long, global = true, default_value = "Fp:32003")]
    field: String,

    /// Term order for basis computations and printing
    #[arg(long, global = true, value_enum, default_value_t = OrderArg::Grevlex)]
    order: OrderArg,

    /// RNG seed for sampling subcommands
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Maximum S-pairs per basis computation (default 1000000; the
    /// exploratory conj-explore check defaults to 500)
    #[arg(long, global = true, env = "PMX_BUDGET_PAIRS")]
    budget_pairs: Option<u64>,

    /// Maximum terms per intermediate polynomial (default 1000000; the
    /// exploratory conj-explore check defaults to 20000)
    #[arg(long, global = true)]
    budget_terms: Option<usize>,

    /// Write machine-readable JSON to this path
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,

    /// Include wall-clock timings in JSON output (breaks byte-for-byte
    /// reproducibility)
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Grevlex,
    Lex,
}

impl From<OrderArg> for TermOrder {
    fn from(o: OrderArg) -> TermOrder {
        match o {
            OrderArg::Grevlex => TermOrder::Grevlex,
            OrderArg::Lex => TermOrder::Lex,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum IdealKind {
    Principal,
    Determinantal,
    Q,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a minor ideal and print its generators
    Ideal {
        #[arg(long, value_enum)]
        kind: IdealKind,
        #[arg(long)]
        n: usize,
        /// Minor size (unused for kind=q, which fixes t = n-1)
        #[arg(long)]
        t: Option<usize>,
        /// Write the ideal file here instead of stdout
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Reduced Groebner basis of an ideal file
    Gb {
        #[arg(long, value_name = "PATH")]
        ideal: PathBuf,
    },
    /// Normal form of a polynomial against an ideal
    Nf {
        #[arg(long, value_name = "PATH")]
        ideal: PathBuf,
        #[arg(long, value_name = "POLY")]
        poly: String,
    },
    /// Ideal membership test
    Member {
        #[arg(long, value_name = "PATH")]
        ideal: PathBuf,
        #[arg(long, value_name = "POLY")]
        poly: String,
    },
    /// Intersection of two ideals
    Intersect {
        #[arg(long, value_name = "PATH")]
        a: PathBuf,
        #[arg(long, value_name = "PATH")]
        b: PathBuf,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Colon ideal by a polynomial or by another ideal
    Colon {
        #[arg(long, value_name = "PATH")]
        ideal: PathBuf,
        #[arg(long, value_name = "POLY", conflicts_with = "other")]
        poly: Option<String>,
        #[arg(long, value_name = "PATH")]
        other: Option<PathBuf>,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Saturation by a polynomial
    Saturate {
        #[arg(long, value_name = "PATH")]
        ideal: PathBuf,
        #[arg(long, value_name = "POLY")]
        poly: String,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Codimension (height) of a proper ideal
    Codim {
        #[arg(long, value_name = "PATH")]
        ideal: PathBuf,
    },
    /// Exhaustive census of V(P_t) over a small finite field
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        t: usize,
        /// Write CSV here instead of stdout
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
    },
    /// Monte Carlo codimension estimate from point sampling
    Estimate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        /// Count only matrices with nonzero determinant as hits
        #[arg(long)]
        invertible: bool,
        /// Sample from the rank-r locus instead of uniformly
        #[arg(long)]
        rank: Option<usize>,
    },
    /// Run one named verification check
    Verify {
        /// Check name (see `pmx verify --help` for the registry)
        #[arg(value_parser = check_name_parser())]
        check: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        samples: Option<u64>,
        /// Extra witness matrix ("a b; c d" grid) for the witnesses check
        #[arg(long, value_name = "GRID")]
        matrix: Option<String>,
    },
    /// Run a battery of checks (the full default battery if none named)
    Suite {
        /// Comma-separated check names
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
    },
}

fn check_name_parser() -> clap::builder::PossibleValuesParser {
    clap::builder::PossibleValuesParser::new(pmx_core::verify::CHECK_NAMES)
}

fn write_or_print(path: &Option<PathBuf>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_json(global: &Global, value: &serde_json::Value) -> anyhow::Result<()> {
    if let Some(path) = &global.json {
        let text = serde_json::to_string_pretty(value).expect("serializable");
        std::fs::write(path, text + "\n")
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn load_ideal(path: &Path) -> anyhow::Result<Ideal> {
    Ideal::read_file(path).with_context(|| format!("reading ideal file {}", path.display()))
}

/// Budget overruns exit 0 with the skip noted; other errors propagate.
fn budget_note(e: Error) -> anyhow::Result<i32> {
    if e.is_budget() {
        println!("status: skip(budget) [{e}]");
        Ok(0)
    } else {
        Err(e.into())
    }
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    let global = &cli.global;
    let field = Field::parse(&global.field)?;
    let order: TermOrder = global.order.into();
    let explore = matches!(&cli.command, Command::Verify { check, .. } if check == "conj-explore");
    let defaults = if explore { Budget::new(500, 20_000) } else { Budget::default() };
    let budget = Budget::new(
        global.budget_pairs.unwrap_or(defaults.max_pairs),
        global.budget_terms.unwrap_or(defaults.max_terms),
    );

    match cli.command {
        Command::Ideal { kind, n, t, out } => {
            let ideal = match kind {
                IdealKind::Principal => {
                    let t = t.ok_or_else(|| anyhow!("--kind principal needs --t"))?;
                    principal_minor_ideal(n, t, field)?
                }
                IdealKind::Determinantal => {
                    let t = t.ok_or_else(|| anyhow!("--kind determinantal needs --t"))?;
                    determinantal_ideal(n, t, field)?
                }
                IdealKind::Q => match q_ideal(n, field, &budget) {
                    Ok(i) => i,
                    Err(e) => return budget_note(e),
                },
            };
            write_or_print(&out, &ideal.to_file_string())?;
            emit_json(
                global,
                &json!({
                    "n": n,
                    "generators": ideal.gens().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                }),
            )?;
            Ok(0)
        }
        Command::Gb { ideal } => {
            let i = load_ideal(&ideal)?;
            let gb = match i.groebner(&order, &budget) {
                Ok(gb) => gb,
                Err(e) => return budget_note(e),
            };
            for p in gb.polys() {
                println!("{}", print_poly(p, &order));
            }
            emit_json(
                global,
                &json!({
                    "order": order.to_string(),
                    "basis": gb.polys().iter().map(|p| print_poly(p, &order)).collect::<Vec<_>>(),
                }),
            )?;
            Ok(0)
        }
        Command::Nf { ideal, poly } => {
            let i = load_ideal(&ideal)?;
            let f = parse_poly(i.ring(), &poly)?;
            let gb = match i.groebner(&order, &budget) {
                Ok(gb) => gb,
                Err(e) => return budget_note(e),
            };
            let nf = normal_form(&f, &gb);
            println!("{}", print_poly(&nf, &order));
            emit_json(global, &json!({"normal_form": print_poly(&nf, &order)}))?;
            Ok(0)
        }
        Command::Member { ideal, poly } => {
            let i = load_ideal(&ideal)?;
            let f = parse_poly(i.ring(), &poly)?;
            let result = match ideal_member(&f, &i, &budget) {
                Ok(r) => r,
                Err(e) => return budget_note(e),
            };
            println!("{result}");
            emit_json(global, &json!({"member": result}))?;
            Ok(0)
        }
        Command::Intersect { a, b, out } => {
            let ia = load_ideal(&a)?;
            let ib = load_ideal(&b)?;
            let meet = match intersect(&ia, &ib, &budget) {
                Ok(i) => i,
                Err(e) => return budget_note(e),
            };
            write_or_print(&out, &meet.to_file_string())?;
            Ok(0)
        }
        Command::Colon { ideal, poly, other, out } => {
            let i = load_ideal(&ideal)?;
            let result = match (poly, other) {
                (Some(text), None) => {
                    let f = parse_poly(i.ring(), &text)?;
                    colon_poly(&i, &f, &budget)
                }
                (None, Some(path)) => {
                    let j = load_ideal(&path)?;
                    colon_ideal(&i, &j, &budget)
                }
                _ => return Err(anyhow!("colon needs exactly one of --poly or --other")),
            };
            let c = match result {
                Ok(c) => c,
                Err(e) => return budget_note(e),
            };
            write_or_print(&out, &c.to_file_string())?;
            Ok(0)
        }
        Command::Saturate { ideal, poly, out } => {
            let i = load_ideal(&ideal)?;
            let f = parse_poly(i.ring(), &poly)?;
            let s = match saturate(&i, &f, &budget) {
                Ok(s) => s,
                Err(e) => return budget_note(e),
            };
            write_or_print(&out, &s.to_file_string())?;
            Ok(0)
        }
        Command::Codim { ideal } => {
            let i = load_ideal(&ideal)?;
            let c = match codim(&i, &budget) {
                Ok(c) => c,
                Err(e) => return budget_note(e),
            };
            println!("{c}");
            emit_json(global, &json!({"codim": c}))?;
            Ok(0)
        }
        Command::Count { n, q, t, csv } => {
            let census = exhaustive_count(n, q, t)?;
            match &csv {
                Some(p) => std::fs::write(p, census.to_csv())?,
                None => print!("{}", census.to_csv()),
            }
            emit_json(global, &serde_json::to_value(&census)?)?;
            Ok(0)
        }
        Command::Estimate { n, t, q, samples, invertible, rank } => {
            let mut cfg = SampleConfig::new(n, t, q, samples, global.seed)?;
            if invertible {
                cfg = cfg.invertible_only();
            }
            if let Some(r) = rank {
                cfg = cfg.with_rank(r)?;
            }
            let ideal = principal_minor_ideal(n, t, Field::prime(q)?)?;
            let est = estimate_codim(&cfg, &ideal)?;
            match est.c_hat {
                Some(c) => println!(
                    "c_hat = {c:.4} (hits {} / {}, 95% CI [{}, {}])",
                    est.hits,
                    est.samples,
                    est.c_lo.map_or("-inf".into(), |v| format!("{v:.4}")),
                    est.c_hi.map_or("+inf".into(), |v| format!("{v:.4}")),
                ),
                None => println!("insufficient samples: 0 hits in {}", est.samples),
            }
            emit_json(global, &json!({"seed": global.seed, "estimate": est}))?;
            Ok(0)
        }
        Command::Verify { check, n, t, q, samples, matrix } => {
            let mut spec = CheckSpec::new(&check);
            spec.field = field;
            spec.seed = global.seed;
            spec.budget = budget;
            spec.n = n;
            spec.t = t;
            spec.q = q;
            spec.samples = samples;
            spec.matrix = matrix;
            let report = run_check(&spec)?;
            println!(
                "{:<14} {:<28} {}",
                report.check,
                params_line(&report.params),
                report.status
            );
            emit_json(global, &report.to_json(global.timings))?;
            Ok(if report.status == Status::Fail { 1 } else { 0 })
        }
        Command::Suite { checks } => {
            let specs: Vec<CheckSpec> = if checks.is_empty() {
                default_suite(field, global.seed)
            } else {
                checks
                    .iter()
                    .map(|name| {
                        let mut s = CheckSpec::new(name);
                        s.field = field;
                        s.seed = global.seed;
                        s.budget = budget;
                        s
                    })
                    .collect()
            };
            let (reports, code) = run_suite(&specs)?;
            for r in &reports {
                println!("{:<14} {:<28} {}", r.check, params_line(&r.params), r.status);
            }
            let summary = summarize(&reports);
            println!("summary: {summary}");
            emit_json(
                global,
                &json!({
                    "reports": reports
                        .iter()
                        .map(|r| r.to_json(global.timings))
                        .collect::<Vec<_>>(),
                    "summary": summary,
                }),
            )?;
            Ok(code)
        }
    }
}

fn params_line(params: &std::collections::BTreeMap<String, serde_json::Value>) -> String {
    let mut parts = Vec::new();
    for key in ["n", "t", "q", "samples"] {
        if let Some(v) = params.get(key) {
            parts.push(format!("{key}={v}"));
        }
    }
    parts.join(" ")
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(1);
        }
    }
}
