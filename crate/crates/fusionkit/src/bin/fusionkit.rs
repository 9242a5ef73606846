//! Thin command-line front end over the `fusionkit::verify` checks.
//!
//! Exit codes: 0 all checks passed, 1 some check failed, 2 operational error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use fusionkit::pcgroup::SylowKind;
use fusionkit::verify::{self, CheckReport, WreathBase};

#[derive(Parser)]
#[command(
    name = "fusionkit",
    about = "structure checks for 2-local group data",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one structure-lemma check (3.1, 3.2 or 3.3).
    Check {
        /// which lemma: 3.1, 3.2 or 3.3
        #[arg(long)]
        lemma: String,
        /// Sylow kind for 3.3: L34, L34_f, L34_u or L34_fu
        #[arg(long)]
        kind: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the wreath-product model check.
    Wreath {
        /// base group: a6 or l32
        #[arg(long)]
        base: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the fusion-system invariant suite on a group file
    /// (JSON: {"degree": n, "generators": [[1-based images]], "name": "..."});
    /// the builtin names S4, D8, A6 and L3(2) are also accepted.
    Fusion {
        #[arg(long)]
        group: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every check including the negative controls.
    RunAll {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        /// keep only the check with this exact id
        #[arg(long)]
        only: Option<String>,
    },
}

fn emit(reports: Vec<CheckReport>, out: Option<PathBuf>) -> ExitCode {
    let code = verify::exit_code(&reports);
    for r in &reports {
        let status = match r.status {
            verify::CheckStatus::Pass => "pass",
            verify::CheckStatus::Fail => "FAIL",
            verify::CheckStatus::Error => "ERROR",
        };
        eprintln!("{status:>5}  {} ({} ms)", r.check_id, r.elapsed_ms);
    }
    match out {
        Some(path) => {
            if let Err(e) = verify::write_reports(&path, &reports) {
                eprintln!("cannot write report: {e}");
                return ExitCode::from(2);
            }
        }
        None => println!("{}", verify::reports_to_json(&reports)),
    }
    ExitCode::from(code as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Check {
            lemma,
            kind,
            seed,
            out,
        } => {
            let reports = match lemma.as_str() {
                "3.1" => vec![verify::check_lemma31(seed)],
                "3.2" => vec![verify::check_lemma32_scenarios(seed)],
                "3.3" => match kind {
                    None => SylowKind::ALL
                        .iter()
                        .map(|&k| verify::check_lemma33(k))
                        .collect(),
                    Some(k) => match SylowKind::parse(&k) {
                        Ok(k) => vec![verify::check_lemma33(k)],
                        Err(e) => {
                            eprintln!("{e}");
                            return ExitCode::from(2);
                        }
                    },
                },
                other => {
                    eprintln!("unknown lemma {other:?}; expected 3.1, 3.2 or 3.3");
                    return ExitCode::from(2);
                }
            };
            emit(reports, out)
        }
        Command::Wreath { base, out } => match WreathBase::parse(&base) {
            Ok(base) => emit(vec![verify::check_wreath_model(base)], out),
            Err(e) => {
                eprintln!("{e}");
                ExitCode::from(2)
            }
        },
        Command::Fusion { group, out } => {
            let path = PathBuf::from(&group);
            let report = if path.is_file() {
                verify::check_fusion_axioms_from_file(&path)
            } else {
                match verify::builtin_group(&group) {
                    Ok(g) => verify::check_fusion_axioms(g),
                    Err(e) => {
                        eprintln!("{e}");
                        return ExitCode::from(2);
                    }
                }
            };
            emit(vec![report], out)
        }
        Command::RunAll { seed, out, only } => {
            let reports = verify::run_all(seed, only.as_deref());
            if reports.is_empty() {
                eprintln!("no check matches the --only filter");
                return ExitCode::from(2);
            }
            emit(reports, out)
        }
    }
}
