use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rsq::affine::{self, Scheme};
use rsq::certify::certify_all;
use rsq::export::{lyndon_json, matrix_to_string, pairing_json, rep_json, rootdata_json};
use rsq::lyndon::{lalonde_ram, minimal_pair};
use rsq::pairing::pairing_table;
use rsq::rep::{evaluation, fundamental, EvalParams};
use rsq::report::Check;
use rsq::scalar::X;
use rsq::{embed, rmatrix, Family, RootSystem, SparseMat};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "rsq", version, about = "Exact two-parameter R-matrices of classical types")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Root data as JSON.
    Rootdata {
        #[command(subcommand)]
        cmd: RootdataCmd,
    },
    /// Lalonde–Ram order with standard Lyndon words and minimal pairs.
    Lyndon {
        #[command(subcommand)]
        cmd: LyndonCmd,
    },
    /// Generator matrices on the first fundamental or evaluation module.
    Rep {
        #[command(subcommand)]
        cmd: RepCmd,
    },
    /// Hopf pairing constants.
    Pairing {
        #[command(subcommand)]
        cmd: PairingCmd,
    },
    /// The finite R-matrix.
    Rmatrix {
        #[command(subcommand)]
        cmd: BuildVerify<RmatrixBuild>,
    },
    /// The affine R-matrix.
    Affine {
        #[command(subcommand)]
        cmd: BuildVerify<AffineBuild>,
    },
    /// One-parameter structures.
    Embed {
        #[command(subcommand)]
        cmd: EmbedCmd,
    },
    /// Every check for every family up to a rank.
    CertifyAll {
        #[arg(long, default_value_t = 2)]
        max_rank: usize,
        /// Write the report as JSON (without timings).
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Args, Clone, Copy)]
struct Case {
    #[arg(long, value_parser = parse_family)]
    family: Family,
    #[arg(long)]
    rank: usize,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: rsq::rootdata::RootError| e.to_string())
}

#[derive(Subcommand)]
enum RootdataCmd {
    Dump {
        #[command(flatten)]
        case: Case,
    },
}

#[derive(Subcommand)]
enum LyndonCmd {
    Table {
        #[command(flatten)]
        case: Case,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum RepCmd {
    Dump {
        #[command(flatten)]
        case: Case,
        /// Evaluation module `V(x)` with symbolic `a` and `b = (rs)^{-κ} a^{-1}`.
        #[arg(long)]
        affine: bool,
    },
}

#[derive(Subcommand)]
enum PairingCmd {
    Constants {
        #[command(flatten)]
        case: Case,
        #[arg(long, default_value_t = 2)]
        max_m: u32,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum BuildVerify<B: Args> {
    Build {
        #[command(flatten)]
        build: B,
    },
    Verify {
        #[command(flatten)]
        case: Case,
        /// Comma-separated check names; all checks when omitted.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Route {
    Explicit,
    Factorized,
}

#[derive(Args)]
struct RmatrixBuild {
    #[command(flatten)]
    case: Case,
    #[arg(long, value_enum, default_value = "explicit")]
    route: Route,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum AffineRoute {
    Closed,
    TwoEigen,
    A,
    B,
}

#[derive(Args)]
struct AffineBuild {
    #[command(flatten)]
    case: Case,
    /// Closed form, or a Baxterization scheme.
    #[arg(long, value_enum, default_value = "closed")]
    route: AffineRoute,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum EmbedCmd {
    Verify {
        #[command(flatten)]
        case: Case,
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
    },
}

/// A failed check, as opposed to a usage error.
#[derive(Debug)]
struct ChecksFailed;

impl std::fmt::Display for ChecksFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("some checks failed")
    }
}

impl std::error::Error for ChecksFailed {}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn report(checks: &[Check]) -> Result<()> {
    for c in checks {
        println!("{c}");
    }
    if checks.iter().all(Check::passed) {
        Ok(())
    } else {
        Err(ChecksFailed.into())
    }
}

fn validate(checks: &[String], known: &[&str]) -> Result<Vec<String>> {
    checks
        .iter()
        .map(|c| {
            let c = if c == "baxterize-match" { "baxterize" } else { c.as_str() };
            if known.contains(&c) {
                Ok(c.to_string())
            } else {
                bail!(Usage(format!("unknown check `{c}`; expected one of {}", known.join(", "))))
            }
        })
        .collect()
}

/// Bad arguments detected after parsing.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn system(c: Case) -> Result<RootSystem> {
    RootSystem::new(c.family, c.rank).map_err(|e| Usage(e.to_string()).into())
}

fn write_matrix(m: &SparseMat, out: Option<&PathBuf>) -> Result<()> {
    emit(&matrix_to_string(m), out)
}

fn run(cli: Cli) -> Result<()> {
    match cli.cmd {
        Cmd::Rootdata { cmd: RootdataCmd::Dump { case } } => emit(&pretty(&rootdata_json(&system(case)?)), None),
        Cmd::Lyndon { cmd: LyndonCmd::Table { case, json } } => {
            let rs = system(case)?;
            if json {
                return emit(&pretty(&lyndon_json(&rs)), None);
            }
            let co = lalonde_ram(&rs);
            let roots = rs.positive_roots();
            println!("{:<12} {:<16} {:<12} minimal pair", "root", "alpha", "word");
            for &g in &co.order {
                let word: String = co.words[g].iter().map(|l| l.to_string()).collect();
                let pair = match minimal_pair(&rs, &co, g) {
                    Ok((a, b)) => format!("({}, {})", roots[a].name, roots[b].name),
                    Err(_) => "simple".to_string(),
                };
                println!("{:<12} {:<16} {:<12} {}", roots[g].name, format!("{:?}", roots[g].alpha), word, pair);
            }
            Ok(())
        }
        Cmd::Rep { cmd: RepCmd::Dump { case, affine } } => {
            system(case)?;
            let rep = if affine {
                evaluation(case.family, case.rank, EvalParams::Symbolic, X)
            } else {
                fundamental(case.family, case.rank)
            }
            .map_err(|e| Usage(e.to_string()))?;
            emit(&pretty(&rep_json(&rep)), None)
        }
        Cmd::Pairing { cmd: PairingCmd::Constants { case, max_m, json } } => {
            let rows = pairing_table(&system(case)?, max_m);
            if json {
                emit(&pretty(&pairing_json(&rows)), None)?;
            } else {
                for r in &rows {
                    let tag = if r.agrees() { "ok" } else { "MISMATCH" };
                    println!("{:<12} m={}  closed: {}  oracle: {}  [{tag}]", r.root, r.m, r.closed, r.direct);
                }
            }
            if rows.iter().all(|r| r.agrees()) {
                Ok(())
            } else {
                Err(ChecksFailed.into())
            }
        }
        Cmd::Rmatrix { cmd } => match cmd {
            BuildVerify::Build { build } => {
                system(build.case)?;
                let (f, n) = (build.case.family, build.case.rank);
                let m = match build.route {
                    Route::Explicit => rmatrix::rhat_explicit(f, n),
                    Route::Factorized => rmatrix::rhat_factorized(f, n)?,
                };
                write_matrix(&m, build.out.as_ref())
            }
            BuildVerify::Verify { case, checks } => {
                system(case)?;
                let only = validate(&checks, rmatrix::CHECKS)?;
                report(&rmatrix::verify(case.family, case.rank, &only)?)
            }
        },
        Cmd::Affine { cmd } => match cmd {
            BuildVerify::Build { build } => {
                let (f, n) = (build.case.family, build.case.rank);
                system(build.case)?;
                let m = match build.route {
                    AffineRoute::Closed => affine::rhat_z(f, n),
                    AffineRoute::TwoEigen | AffineRoute::A | AffineRoute::B => {
                        let scheme = match build.route {
                            AffineRoute::TwoEigen => Scheme::TwoEigen,
                            AffineRoute::A => Scheme::A,
                            _ => Scheme::B,
                        };
                        if !Scheme::applicable(f).contains(&scheme) {
                            bail!(Usage(format!("scheme {} does not apply to type {f}", scheme.name())));
                        }
                        affine::baxterize(f, n, scheme)
                    }
                };
                write_matrix(&m, build.out.as_ref())
            }
            BuildVerify::Verify { case, checks } => {
                system(case)?;
                let only = validate(&checks, affine::CHECKS)?;
                let rs = affine::verify(case.family, case.rank, &only).map_err(|e| Usage(e.to_string()))?;
                report(&rs)
            }
        },
        Cmd::Embed { cmd: EmbedCmd::Verify { case, checks } } => {
            system(case)?;
            let only = validate(&checks, embed::CHECKS)?;
            report(&embed::verify(case.family, case.rank, &only)?)
        }
        Cmd::CertifyAll { max_rank, json } => {
            let rep = certify_all(max_rank);
            print!("{rep}");
            if let Some(p) = json {
                emit(&pretty(&rep.to_json_deterministic()), Some(&p))?;
            }
            let n_fail = rep.failures().count();
            println!("{} checks, {} failed", rep.entries.len(), n_fail);
            if n_fail == 0 {
                Ok(())
            } else {
                Err(ChecksFailed.into())
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.is::<ChecksFailed>() => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(e) if e.is::<Usage>() => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
