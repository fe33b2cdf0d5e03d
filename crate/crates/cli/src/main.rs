mod commands;
mod config;
mod parse;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Context;
use clap::{Parser, Subcommand};
use negcat_core::error::NegcatError;
use serde_json::json;

use commands::{Outcome, Setup};
use config::{AmbientKind, Overrides, RunConfig};

/// Bad flags, bad input values, or unreadable files: exit code 1.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

#[derive(Parser, Debug)]
#[command(
    name = "negcat",
    version,
    about = "Proper abelian subcategories in D^b(kA_n) and negative cluster categories"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// TOML file with any of the keys below
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    ambient: Option<AmbientKind>,
    /// orbit ambient: the category is C_{-w}(A_n)
    #[arg(long, global = true)]
    w: Option<usize>,
    #[arg(long, global = true)]
    n: Option<usize>,
    #[arg(long, global = true)]
    prime: Option<u32>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// derived ambient: shift window radius
    #[arg(long, global = true)]
    radius: Option<i32>,
    /// monoid ball degree
    #[arg(long, global = true)]
    bound: Option<u32>,
    /// simples: diagonals `a,b` (orbit) or intervals `lo,hi[@shift]` (derived)
    #[arg(long, global = true, num_args = 1..)]
    sms: Option<Vec<String>>,
    /// torsion-free class, same notation as --sms
    #[arg(long, global = true, num_args = 1..)]
    fclass: Option<Vec<String>>,
    /// directory for report.json and drawings
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// record wall-clock time in the report
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Subcommand, Debug, Clone)]
enum Command {
    /// List the indecomposables of the orbit category
    Indecs {
        #[arg(long)]
        count_only: bool,
    },
    /// Auslander-Reiten quiver of the orbit category
    Arquiver,
    /// Check that --sms is a simple-minded system
    SmsCheck,
    /// Extension closure of the simples
    Closure,
    /// Check the vanishing condition E_m for m up to --max
    ECheck {
        #[arg(long, default_value_t = 2)]
        max: usize,
    },
    /// The three conditions equivalent to ΣA∗A = A∗ΣA
    StarReport,
    /// F and G on indecomposables of ΣA∗A
    Fg {
        /// objects to decompose (default: all of ΣA∗A)
        #[arg(long, num_args = 1..)]
        objects: Option<Vec<String>>,
    },
    /// Seven-term exact sequences on random triangles
    SnakeSuite {
        #[arg(long, default_value_t = 200)]
        count: usize,
    },
    /// Enumerate torsion-free classes of A
    TorfEnum,
    /// Intermediate category induced by --fclass
    Intermediate,
    /// Torsion-free classes versus intermediate categories
    Bijection,
    /// Localization of M(A) versus M(ΣF∗A) on a bounded ball
    Monoid,
    /// SVG drawings of the polygon and the AR quiver
    Draw,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Indecs { .. } => "indecs",
            Command::Arquiver => "arquiver",
            Command::SmsCheck => "sms-check",
            Command::Closure => "closure",
            Command::ECheck { .. } => "e-check",
            Command::StarReport => "star-report",
            Command::Fg { .. } => "fg",
            Command::SnakeSuite { .. } => "snake-suite",
            Command::TorfEnum => "torf-enum",
            Command::Intermediate => "intermediate",
            Command::Bijection => "bijection",
            Command::Monoid => "monoid",
            Command::Draw => "draw",
        }
    }
}

fn configure_threads() -> anyhow::Result<Option<usize>> {
    let Ok(v) = std::env::var("NEGCAT_THREADS") else {
        return Ok(None);
    };
    let n: usize = v.parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        UsageError(format!(
            "NEGCAT_THREADS must be a positive integer, got `{v}`"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .context("configuring the thread pool")?;
    Ok(Some(n))
}

fn generic<A: negcat_core::ambient::Ambient>(
    cmd: &Command,
    cfg: &RunConfig,
    s: &Setup<A>,
    parse_key: impl Fn(&str) -> anyhow::Result<A::Key>,
) -> anyhow::Result<Outcome>
where
    A::Key: std::fmt::Display,
{
    Ok(match cmd {
        Command::Closure => commands::closure(s),
        Command::ECheck { max } => commands::e_check(s, *max),
        Command::StarReport => commands::star_report(s),
        Command::Fg { objects } => {
            let objs = objects
                .as_ref()
                .map(|v| {
                    v.iter()
                        .flat_map(|t| t.split_whitespace())
                        .map(&parse_key)
                        .collect::<anyhow::Result<Vec<_>>>()
                })
                .transpose()?;
            commands::fg(s, objs)
        }
        Command::SnakeSuite { count } => commands::snake(s, cfg.seed, *count)?,
        Command::TorfEnum => commands::torf_enum(s),
        Command::Intermediate => commands::intermediate(s)?,
        Command::Bijection => commands::bijection(s),
        Command::Monoid => commands::monoid(s, cfg.bound)?,
        other => anyhow::bail!(UsageError(format!(
            "`{}` needs the orbit ambient",
            other.name()
        ))),
    })
}

fn execute(cmd: &Command, cfg: &RunConfig) -> anyhow::Result<Outcome> {
    match (cfg.ambient, cmd) {
        (AmbientKind::Orbit, Command::Indecs { count_only }) => commands::indecs(cfg, *count_only),
        (AmbientKind::Orbit, Command::Arquiver) => commands::arquiver(cfg),
        (AmbientKind::Orbit, Command::SmsCheck) => {
            let (amb, simples, _) = commands::orbit_inputs(cfg)?;
            Ok(commands::sms_check(&amb, &simples))
        }
        (AmbientKind::Orbit, _) => {
            let s = commands::orbit_setup(cfg)?;
            match cmd {
                Command::Draw => Ok(commands::draw(&s)),
                _ => generic(cmd, cfg, &s, |t| parse::diagonal(s.amb.ctx(), t)),
            }
        }
        (AmbientKind::Derived, _) => {
            let s = commands::derived_setup(cfg)?;
            generic(cmd, cfg, &s, |t| {
                let x = parse::derived_object(cfg.n, t)?;
                Ok(negcat_core::ambient::Ambient::key(&s.amb, &x))
            })
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    let threads = configure_threads()?;
    let cfg = RunConfig::load(
        cli.config.as_deref(),
        Overrides {
            ambient: cli.ambient,
            w: cli.w,
            n: cli.n,
            prime: cli.prime,
            seed: cli.seed,
            radius: cli.radius,
            bound: cli.bound,
            sms: cli.sms,
            fclass: cli.fclass,
            out: cli.out,
        },
    )?;
    let start = Instant::now();
    let outcome = execute(&cli.command, &cfg)?;
    let mut report = json!({
        "command": cli.command.name(),
        "inputs": cfg,
        "results": outcome.results,
        "passed": outcome.passed,
        "version": env!("CARGO_PKG_VERSION"),
    });
    if cli.timings {
        report["timings"] = json!({
            "wall_ms": start.elapsed().as_millis() as u64,
            "threads": threads.unwrap_or_else(rayon::current_num_threads),
        });
    }
    std::fs::create_dir_all(&cfg.out).with_context(|| format!("creating {}", cfg.out.display()))?;
    let path = cfg.out.join("report.json");
    std::fs::write(&path, serde_json::to_string_pretty(&report)? + "\n")
        .with_context(|| format!("writing {}", path.display()))?;
    for (name, body) in &outcome.files {
        let p = cfg.out.join(name);
        std::fs::write(&p, body).with_context(|| format!("writing {}", p.display()))?;
    }
    match outcome.stdout {
        Some(line) => println!("{line}"),
        None => println!(
            "{}: {} ({})",
            cli.command.name(),
            if outcome.passed { "ok" } else { "FAILED" },
            path.display()
        ),
    }
    Ok(outcome.passed)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            let verification = matches!(
                e.downcast_ref::<NegcatError>(),
                Some(NegcatError::Verification(_) | NegcatError::NotInSubcategory(_))
            );
            ExitCode::from(if verification { 2 } else { 1 })
        }
    }
}
