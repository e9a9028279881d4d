use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use sncorona::experiments::{cospectral_demo, default_cospectral_pair, distinct_count, paper_example, ExperimentError};
use sncorona::graph::{read_graph, write_graph};
use sncorona::linalg::spectra_equal;
use sncorona::spectra::{characteristic_polynomial, closed_form, numeric_spectrum_with_tol, realize_with_tol};
use sncorona::verify::{run_theorem, TheoremId, VerifyConfig};
use sncorona::{s_neighbourhood_corona, MatrixKind, SignedGraph};

/// Spectra of s-neighbourhood coronas of signed graphs.
#[derive(Parser)]
#[command(name = "sncorona", version)]
struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct KindArg {
    /// Matrix: adj, lap or netlap.
    #[arg(long, default_value = "adj")]
    kind: MatrixKind,
}

#[derive(Subcommand)]
enum Command {
    /// Write the corona of A with B to OUT.
    Corona {
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Numeric spectrum of G, or of the corona of A with B when two files are
    /// given.
    Spectrum {
        #[arg(num_args = 1..=2, required = true)]
        graphs: Vec<PathBuf>,
        #[command(flatten)]
        kind: KindArg,
        /// Also print the closed form and compare (needs two files).
        #[arg(long)]
        closed_form: bool,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
    /// Exact characteristic polynomial.
    Charpoly {
        graph: PathBuf,
        #[command(flatten)]
        kind: KindArg,
    },
    /// Randomized property suite for one result.
    Verify {
        #[arg(long)]
        theorem: TheoremId,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
    /// Count distinct eigenvalues.
    Distinct {
        graph: PathBuf,
        #[command(flatten)]
        kind: KindArg,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
    /// Certify a cospectral, non-isomorphic pair of coronas.
    CospectralDemo {
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        pair: Option<Vec<PathBuf>>,
        #[arg(long)]
        companion: Option<PathBuf>,
        #[command(flatten)]
        kind: KindArg,
    },
    /// Worked example: C4- with (K2,+).
    PaperExample,
}

enum Failure {
    Usage(String),
    Verification(String),
}

fn load(path: &Path) -> Result<SignedGraph, Failure> {
    read_graph(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn emit(json: bool, value: serde_json::Value, text: String) {
    if json {
        println!("{}", serde_json::to_string_pretty(&value).unwrap());
    } else {
        println!("{text}");
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let json = cli.json;
    match cli.command {
        Command::Corona { a, b, output } => {
            let (s1, s2) = (load(&a)?, load(&b)?);
            let corona = s_neighbourhood_corona(&s1, &s2);
            write_graph(&corona, &output).map_err(|e| Failure::Usage(format!("{}: {e}", output.display())))?;
            emit(
                json,
                json!({ "output": output, "order": corona.order(), "edges": corona.edge_count() }),
                format!("wrote {} ({} vertices, {} edges)", output.display(), corona.order(), corona.edge_count()),
            );
        }
        Command::Spectrum { graphs, kind: KindArg { kind }, closed_form: want_closed, tol } => {
            let factors: Vec<SignedGraph> = graphs.iter().map(|p| load(p)).collect::<Result<_, _>>()?;
            let g = match factors.as_slice() {
                [g] => g.clone(),
                [a, b] => s_neighbourhood_corona(a, b),
                _ => unreachable!(),
            };
            if want_closed && factors.len() != 2 {
                return Err(Failure::Usage("--closed-form needs the two corona factors A B".into()));
            }
            let numeric = numeric_spectrum_with_tol(&g, kind, tol).map_err(|e| Failure::Usage(e.to_string()))?;
            if !want_closed {
                emit(json, json!({ "kind": kind, "spectrum": numeric }), numeric.to_string());
                return Ok(());
            }
            match closed_form(&factors[0], &factors[1], kind) {
                Err(e) => emit(
                    json,
                    json!({ "kind": kind, "spectrum": numeric, "closed_form": null, "reason": e.to_string() }),
                    format!("{numeric}\nclosed form not applicable: {e}"),
                ),
                Ok(cf) => {
                    let realized = realize_with_tol(&cf, tol).map_err(|e| Failure::Verification(e.to_string()))?;
                    let agrees = spectra_equal(&realized, &numeric, tol);
                    emit(
                        json,
                        json!({ "kind": kind, "spectrum": numeric, "closed_form": cf, "realized": realized, "agrees": agrees }),
                        format!(
                            "{numeric}\n{cf}realized: {realized}\nagreement: {}",
                            if agrees { "yes" } else { "NO" }
                        ),
                    );
                    if !agrees {
                        return Err(Failure::Verification("closed form disagrees with the numeric spectrum".into()));
                    }
                }
            }
        }
        Command::Charpoly { graph, kind: KindArg { kind } } => {
            let p = characteristic_polynomial(&load(&graph)?, kind);
            emit(json, json!({ "kind": kind, "char_poly": p }), p.to_string());
        }
        Command::Verify { theorem, trials, seed, max_n, tol } => {
            let outcome = run_theorem(theorem, VerifyConfig { trials, seed, max_n, tol });
            emit(json, serde_json::to_value(&outcome).unwrap(), outcome.to_string());
            if !outcome.all_passed() {
                return Err(Failure::Verification(format!("{} of {} trials failed", trials - outcome.passed, trials)));
            }
        }
        Command::Distinct { graph, kind: KindArg { kind }, tol } => {
            if tol <= 0.0 {
                return Err(Failure::Usage("--tol must be positive".into()));
            }
            let report = distinct_count(&load(&graph)?, kind, tol).map_err(|e| Failure::Usage(e.to_string()))?;
            emit(json, serde_json::to_value(&report).unwrap(), report.to_string());
        }
        Command::CospectralDemo { pair, companion, kind: KindArg { kind } } => {
            let (d1, d2, dc) = default_cospectral_pair();
            let (s1, s2) = match pair {
                Some(p) => (load(&p[0])?, load(&p[1])?),
                None => (d1, d2),
            };
            let companion = companion.map(|c| load(&c)).transpose()?.unwrap_or(dc);
            match cospectral_demo(&s1, &s2, &companion, kind) {
                Ok(cert) => emit(json, serde_json::to_value(&cert).unwrap(), cert.to_string()),
                Err(e @ (ExperimentError::CoronasNotCospectral { .. } | ExperimentError::CoronasIsomorphic)) => {
                    return Err(Failure::Verification(e.to_string()))
                }
                Err(e) => return Err(Failure::Usage(e.to_string())),
            }
        }
        Command::PaperExample => {
            let report = paper_example().map_err(|e| Failure::Verification(e.to_string()))?;
            emit(json, serde_json::to_value(&report).unwrap(), report.to_string());
            if !report.consistent() {
                return Err(Failure::Verification("closed form, polynomial and numeric spectrum disagree".into()));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
