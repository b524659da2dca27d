//! The `sgtrade` command line.
//!
//! Exit codes: 0 yes/success, 1 no, 2 usage or parse error, 3 resource
//! budget exceeded. Machine output is one JSON document on stdout (or the
//! `-o` file); diagnostics go to stderr.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::coalition::Coalition;
use crate::convert::convert;
use crate::error::{Error, Result};
use crate::game::{validate_game, Classification, GameRep, RepKind};
use crate::io::{parse_coalitions, parse_game, GameFile};
use crate::oracle::{
    brute_force_trade, random_game, DEFAULT_ORACLE_BUDGET, RANDOM_GAME_MAX_PLAYERS,
};
use crate::reductions::{game_from_cnf_j, parse_dimacs, solve_set_splitting, SetSplittingInstance};
use crate::trade::{decide_j_trade, dispatch, Limits, TradeAnswer, TradeQuery, DEFAULT_BUDGET};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

/// Environment variable overriding the default search budget.
pub const BUDGET_ENV: &str = "SG_BUDGET";

#[derive(Parser, Debug)]
#[command(name = "sgtrade", version, about = "Coalition trades in simple games")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the simple-game axioms of a game file.
    Validate { game: PathBuf },
    /// Rewrite a game in another representation.
    Convert {
        #[arg(long, value_parser = parse_kind)]
        to: RepKind,
        game: PathBuf,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Decide whether the given coalitions can be traded.
    Decide {
        #[arg(long, value_parser = parse_beta)]
        beta: Option<Classification>,
        /// JSON list of coalitions, e.g. "[[0,1],[2,3]]".
        #[arg(long)]
        given: Option<String>,
        /// Number of coalitions per side; with no --given, decide whether
        /// the game is j-trade at all.
        #[arg(long)]
        j: Option<usize>,
        #[arg(long)]
        budget: Option<u64>,
        game: PathBuf,
    },
    /// Exhaustive ground-truth search.
    Oracle {
        #[arg(long)]
        given: Option<String>,
        #[arg(long)]
        j: Option<usize>,
        #[arg(long)]
        budget: Option<u64>,
        game: PathBuf,
    },
    /// Build a hard trade instance from a DIMACS CNF formula.
    GenSat {
        #[arg(long)]
        cnf: PathBuf,
        #[arg(long, default_value_t = 2)]
        j: usize,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Solve a set splitting instance by exhaustive search.
    SolveSplit {
        #[arg(long)]
        instance: PathBuf,
    },
    /// Sample a random game as minimal winning coalitions.
    RandomGame {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
}

fn parse_kind(s: &str) -> std::result::Result<RepKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_beta(s: &str) -> std::result::Result<Classification, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Runs one command and returns its exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_YES };
            let out: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(out, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            if e.is_resource() {
                EXIT_RESOURCE
            } else {
                EXIT_USAGE
            }
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn load_game(path: &Path) -> Result<GameRep> {
    parse_game(&read(path)?)
}

fn load_valid_game(path: &Path) -> Result<GameRep> {
    let rep = load_game(path)?;
    let report = validate_game(&rep);
    match report.violations.first() {
        None => Ok(rep),
        Some(v) => Err(Error::InvalidGame(v.to_string())),
    }
}

fn budget(flag: Option<u64>, default: u64) -> Result<u64> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("{BUDGET_ENV}={v:?} is not an integer"))),
        Err(_) => Ok(default),
    }
}

fn emit<T: Serialize>(value: &T, output: Option<&Path>, stdout: &mut dyn Write) -> Result<()> {
    let mut text = serde_json::to_string(value).expect("output serializes");
    text.push('\n');
    match output {
        Some(path) => {
            fs::write(path, text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
        }
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| Error::Parse(format!("stdout: {e}"))),
    }
}

#[derive(Serialize)]
struct DecideOutput<'a> {
    decision: bool,
    j: usize,
    witness: &'a Option<Vec<Coalition>>,
    application: &'a Option<crate::trade::TradeApplication>,
}

fn answer_code(answer: &TradeAnswer) -> i32 {
    if answer.is_yes() {
        EXIT_YES
    } else {
        EXIT_NO
    }
}

fn execute(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Validate { game } => {
            let rep = load_game(&game)?;
            let report = validate_game(&rep);
            emit(
                &json!({ "valid": report.is_valid(), "violations": report.violations }),
                None,
                stdout,
            )?;
            for v in &report.violations {
                let _ = writeln!(stderr, "violation: {v}");
            }
            Ok(if report.is_valid() {
                EXIT_YES
            } else {
                EXIT_USAGE
            })
        }
        Command::Convert { to, game, output } => {
            let rep = load_valid_game(&game)?;
            let out = convert(&rep, to, Limits::default().oracle_cap)?;
            emit(&GameFile::from(&out), output.as_deref(), stdout)?;
            Ok(EXIT_YES)
        }
        Command::Decide {
            beta,
            given,
            j,
            budget: flag,
            game,
        } => {
            let rep = load_valid_game(&game)?;
            let limits = Limits::with_budget(budget(flag, DEFAULT_BUDGET)?);
            let (answer, j) = match given {
                Some(text) => {
                    let given = parse_coalitions(&text)?;
                    if given.is_empty() {
                        return Err(Error::InvalidArgument("--given is empty".into()));
                    }
                    if let Some(j) = j.filter(|&j| j != given.len()) {
                        return Err(Error::InvalidArgument(format!(
                            "--j {j} but {} given coalitions",
                            given.len()
                        )));
                    }
                    rep.check_coalition(given[0])?;
                    let beta = beta.unwrap_or_else(|| rep.classification(given[0]));
                    let j = given.len();
                    let query = TradeQuery { rep, beta, given };
                    (dispatch(&query, &limits)?, j)
                }
                None => {
                    let j = j.ok_or_else(|| {
                        Error::InvalidArgument("either --given or --j is required".into())
                    })?;
                    (decide_j_trade(&rep, j, None, &limits)?, j)
                }
            };
            emit(
                &DecideOutput {
                    decision: answer.is_yes(),
                    j,
                    witness: &answer.witness,
                    application: &answer.application,
                },
                None,
                stdout,
            )?;
            Ok(answer_code(&answer))
        }
        Command::Oracle {
            given,
            j,
            budget: flag,
            game,
        } => {
            let rep = load_valid_game(&game)?;
            let budget = budget(flag, DEFAULT_ORACLE_BUDGET)?;
            let given = given.map(|t| parse_coalitions(&t)).transpose()?;
            let j = match (&given, j) {
                (Some(g), Some(j)) if g.len() != j => {
                    return Err(Error::InvalidArgument(format!(
                        "--j {j} but {} given coalitions",
                        g.len()
                    )))
                }
                (Some(g), _) => g.len(),
                (None, Some(j)) => j,
                (None, None) => {
                    return Err(Error::InvalidArgument(
                        "either --given or --j is required".into(),
                    ))
                }
            };
            let found = brute_force_trade(&rep, j, given.as_deref(), budget)?;
            emit(
                &json!({ "found": found.is_some(), "j": j, "application": found }),
                None,
                stdout,
            )?;
            Ok(if found.is_some() { EXIT_YES } else { EXIT_NO })
        }
        Command::GenSat { cnf, j, output } => {
            let formula = parse_dimacs(&read(&cnf)?)?;
            let instance = game_from_cnf_j(&formula, j)?;
            emit(&instance.document(), output.as_deref(), stdout)?;
            Ok(EXIT_YES)
        }
        Command::SolveSplit { instance } => {
            let inst: SetSplittingInstance =
                serde_json::from_str(&read(&instance)?).map_err(|e| Error::Parse(e.to_string()))?;
            let found = solve_set_splitting(&inst, Limits::default().brute_force_cap)?;
            let value = match found {
                Some((u1, u2)) => json!({ "split": true, "u1": u1, "u2": u2 }),
                None => json!({ "split": false, "u1": null, "u2": null }),
            };
            emit(&value, None, stdout)?;
            Ok(if found.is_some() { EXIT_YES } else { EXIT_NO })
        }
        Command::RandomGame {
            n,
            seed,
            density,
            output,
        } => {
            if !(1..=RANDOM_GAME_MAX_PLAYERS).contains(&n) {
                return Err(Error::InvalidArgument(format!(
                    "--n must be in 1..={RANDOM_GAME_MAX_PLAYERS}"
                )));
            }
            let rep = random_game(n, seed, density);
            emit(&GameFile::from(&rep), output.as_deref(), stdout)?;
            Ok(EXIT_YES)
        }
    }
}
