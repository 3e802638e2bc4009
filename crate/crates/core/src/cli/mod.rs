//! Command-line front end.
//!
//! Exit code `1` means the input itself is unusable, such as a malformed file
//! or a bad flag. Exit code `2` means the input is well formed but outside what
//! the command can certify; some of these still print a partial report.
//! Reports go to standard output as JSON.

mod gamefile;
mod render;
mod report;
mod sample;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

pub use gamefile::GameFile;
pub use render::{decimal, svg};
pub use report::SCHEMA_VERSION;
pub use sample::{random_game, SamplerConfig};

use crate::classify::{self, Classification, RejectReason};
use crate::indifference::{
    completely_mixed_equilibrium, difference_matrix, half_space_cover, necessary_condition,
    positive_indifference, solve_indifference, DifferenceMatrix,
};
use crate::model::{parse_rational, GameMatrix, Rational};
use crate::oracle;
use crate::Error;
use report::*;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Input(String),
    Domain(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Domain(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Domain(m) => m,
        }
    }
}

fn domain(e: Error) -> CliError {
    CliError::Domain(e.to_string())
}

#[derive(Parser, Debug)]
#[command(
    name = "indiff",
    version,
    about = "Indifference, half-space cover and equilibrium analysis for two-player games"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Indifference and half-space cover for one or both players.
    Analyze {
        file: PathBuf,
        /// Only this player (1 or 2).
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        player: Option<u8>,
    },
    /// Place a symmetric 3x3 game in one of the classes A1 to A6.
    Classify { file: PathBuf },
    /// Enumerate equilibria with the support-enumeration oracle.
    Equilibria { file: PathBuf },
    /// Cross-check the cover test and classifier against the oracle on seeded games.
    Sample {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        denominator: u64,
        /// All n x n games with entries in {0, 1, 2}; --count is ignored.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Draw the difference columns and their half planes as SVG.
    Render {
        file: PathBuf,
        /// Write here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Search for adjacent classes on a parameter grid.
    Adjacency {
        #[arg(long, default_value = "1/8")]
        resolution: String,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invocation {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Invocation {
    fn ok(stdout: String) -> Self {
        Invocation {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn failed(e: &CliError) -> Self {
        Invocation {
            code: e.code(),
            stdout: String::new(),
            stderr: format!("error: {}\n", e.message()),
        }
    }

    /// A report that is still printed alongside a domain failure.
    fn partial(stdout: String, why: String) -> Self {
        Invocation {
            code: 2,
            stdout,
            stderr: format!("error: {why}\n"),
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Invocation::ok(text),
                _ => Invocation {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let result = match cli.command {
        Command::Analyze { file, player } => cmd_analyze(&file, player),
        Command::Classify { file } => cmd_classify(&file),
        Command::Equilibria { file } => cmd_equilibria(&file),
        Command::Sample {
            n,
            count,
            seed,
            denominator,
            exhaustive,
        } => cmd_sample(&SamplerConfig {
            n,
            count,
            seed,
            denominator,
            exhaustive,
        }),
        Command::Render { file, output } => cmd_render(&file, output.as_deref()),
        Command::Adjacency { resolution } => cmd_adjacency(&resolution),
    };
    result.unwrap_or_else(|e| Invocation::failed(&e))
}

fn differences(a: &GameMatrix) -> DifferenceMatrix {
    if a.rows() < 2 {
        DifferenceMatrix::empty(a.cols()).expect("matrix has columns")
    } else {
        difference_matrix(a).expect("matrix has two rows")
    }
}

fn player_json(player: u8, a: &GameMatrix) -> Value {
    let d = differences(a);
    json!({
        "player": player,
        "difference_matrix": difference_json(&d),
        "indifference": indifference_json(&solve_indifference(a)),
        "cover": cover_json(&half_space_cover(&d)),
        "positivity": positivity_json(positive_indifference(a).as_ref()),
    })
}

pub fn cmd_analyze(file: &Path, player: Option<u8>) -> Result<Invocation, CliError> {
    let game = GameFile::read(file)?;
    let players: Vec<u8> = match player {
        Some(p) => vec![p],
        None if game.player(2).is_some() => vec![1, 2],
        None => vec![1],
    };
    let mut sections = Vec::new();
    for p in players {
        let a = game.player(p).ok_or_else(|| {
            CliError::Domain(format!("player {p} needs \"B\" or \"symmetric\": true"))
        })?;
        sections.push(player_json(p, a));
    }
    let mut result = json!({ "players": sections });
    if let Some((a1, a2)) = game.bimatrix() {
        let necessary = necessary_condition(a1, a2).map_err(domain)?;
        let profile = completely_mixed_equilibrium(a1, a2).map_err(domain)?;
        result["necessary_condition"] = json!({
            "covered": necessary_json(&necessary),
            "completely_mixed_equilibrium": profile.map_or(Value::Null, |(x, y)| json!({
                "x": strategy_json(&x),
                "y": strategy_json(&y),
            })),
        });
    }
    Ok(Invocation::ok(render(&envelope(
        "analyze",
        game.to_json(),
        result,
    ))))
}

pub fn cmd_classify(file: &Path) -> Result<Invocation, CliError> {
    let game = GameFile::read(file)?;
    let report = classify::classify(&game.a).map_err(domain)?;
    let out = render(&envelope(
        "classify",
        game.to_json(),
        classification_json(&report),
    ));
    if let Classification::Rejected(RejectReason::NonGeneric { columns }) = &report.outcome {
        let cols: Vec<String> = columns.iter().map(|c| (c + 1).to_string()).collect();
        return Ok(Invocation::partial(
            out,
            format!(
                "non-generic game: repeated entries in column(s) {}",
                cols.join(", ")
            ),
        ));
    }
    Ok(Invocation::ok(out))
}

pub fn cmd_equilibria(file: &Path) -> Result<Invocation, CliError> {
    let game = GameFile::read(file)?;
    let (kind, set) = if game.symmetric {
        (
            "symmetric",
            oracle::symmetric_equilibria(&game.a).map_err(domain)?,
        )
    } else if let Some(b) = &game.b {
        (
            "bimatrix",
            oracle::bimatrix_equilibria(&game.a, b).map_err(domain)?,
        )
    } else {
        return Err(CliError::Domain(
            "equilibria need \"B\" or \"symmetric\": true".into(),
        ));
    };
    let mut result = equilibria_json(&set);
    result["kind"] = json!(kind);
    let out = render(&envelope("equilibria", game.to_json(), result));
    if set.degenerate {
        return Ok(Invocation::partial(
            out,
            "degenerate game: the listed equilibria may be incomplete".into(),
        ));
    }
    Ok(Invocation::ok(out))
}

pub fn cmd_sample(config: &SamplerConfig) -> Result<Invocation, CliError> {
    config.validate().map_err(CliError::Input)?;
    let summary = sample::run(config);
    let out = render(&envelope("sample", Value::Null, summary.result));
    if summary.mismatches > 0 {
        return Ok(Invocation::partial(
            out,
            format!("{} mismatches", summary.mismatches),
        ));
    }
    Ok(Invocation::ok(out))
}

pub fn cmd_render(file: &Path, output: Option<&Path>) -> Result<Invocation, CliError> {
    let game = GameFile::read(file)?;
    let doc = svg(&game.a).map_err(domain)?;
    match output {
        None => Ok(Invocation::ok(doc)),
        Some(path) => {
            std::fs::write(path, doc)
                .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))?;
            Ok(Invocation::ok(String::new()))
        }
    }
}

pub fn cmd_adjacency(resolution: &str) -> Result<Invocation, CliError> {
    let r: Rational =
        parse_rational(resolution).map_err(|e| CliError::Input(format!("--resolution: {e}")))?;
    let graph =
        classify::adjacency(&r).map_err(|e| CliError::Input(format!("--resolution: {e}")))?;
    let input = json!({ "resolution": rational_json(&r) });
    Ok(Invocation::ok(render(&envelope(
        "adjacency",
        input,
        adjacency_json(&graph),
    ))))
}
