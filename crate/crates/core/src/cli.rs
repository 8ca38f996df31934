//! The `vknot` command line. Every verb prints one JSON document on stdout.
//!
//! Exit codes: 0 on success, 1 on bad input (with an `{"error": ...}`
//! object), 2 when an internal consistency check fails.

use std::ffi::OsString;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::classify::{classify_2k_xi, normal_form_diagram};
use crate::distance::{lower_bound_2k, witness_construction, Budget, DistanceBound, LowerBound};
use crate::gauss::GaussDiagram;
use crate::invariants::{affine_index_from_writhes, InvariantReport};
use crate::moves::{apply_move, Move, MoveScript};

#[derive(Parser, Debug)]
#[command(name = "vknot", version, about = "Gauss diagrams of virtual knots: invariants, moves, classification, 2k-move distance")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// A Gauss code given inline, or read from a file (`-` for stdin).
#[derive(Args, Debug)]
struct CodeInput {
    /// Gauss code such as "O1+ O2+ U1+ U2+"
    code: Option<String>,
    /// Read the Gauss code from a file instead; `-` reads stdin
    #[arg(long, value_name = "FILE", conflicts_with = "code")]
    code_file: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// n-writhes, odd writhe and affine index polynomial
    Invariants {
        #[command(flatten)]
        input: CodeInput,
    },
    /// Class modulo 2k-moves and Xi-moves
    Classify {
        #[arg(long)]
        k: u32,
        #[command(flatten)]
        input: CodeInput,
    },
    /// Apply one move, given in script syntax
    Move {
        #[arg(long, value_name = "MOVE", allow_hyphen_values = true)]
        apply: String,
        #[command(flatten)]
        input: CodeInput,
    },
    /// Replay a move script file
    ScriptReplay {
        #[arg(long, value_name = "FILE")]
        file: PathBuf,
        #[command(flatten)]
        input: CodeInput,
    },
    /// Lower and certified upper bounds on the 2k-move distance
    Distance {
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = Budget::default().max_moves)]
        budget_moves: u32,
        /// Chord cap for intermediate diagrams [default: max(|A|,|B|) + 2k + 2]
        #[arg(long)]
        budget_chords: Option<usize>,
        #[arg(long, default_value_t = Budget::default().max_states)]
        budget_states: usize,
        /// R1/R2 insertions allowed in a certificate
        #[arg(long, default_value_t = Budget::default().max_free_insertions)]
        budget_insertions: u32,
        /// Treat Xi-moves as free moves
        #[arg(long)]
        allow_xi: bool,
        code_a: String,
        code_b: String,
    },
    /// Diagram at 2k-move distance exactly `a` from the input
    Witness {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        k: u32,
        #[command(flatten)]
        input: CodeInput,
    },
    /// The normal form G(a)
    NormalForm {
        #[arg(long, allow_negative_numbers = true)]
        a: i64,
    },
    /// Seeded random diagram
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
    },
}

enum Failure {
    Input { kind: &'static str, message: String },
    Internal(String),
}

impl Failure {
    fn input(kind: &'static str, e: impl std::fmt::Display) -> Failure {
        Failure::Input { kind, message: e.to_string() }
    }
}

fn check(ok: bool, what: &str) -> Result<(), Failure> {
    if ok {
        Ok(())
    } else {
        Err(Failure::Internal(what.to_string()))
    }
}

/// Runs the CLI on `argv` (program name first), printing to stdout/stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let (code, out) = execute(argv);
    if !out.is_empty() {
        println!("{out}");
    }
    code
}

/// Like [`run`] but returns the text instead of printing it.
pub fn execute<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return (0, e.to_string().trim_end().to_string());
            }
            let v = json!({"error": {"kind": "usage", "message": e.to_string().trim_end()}});
            return (1, v.to_string());
        }
    };
    match dispatch(cli.command) {
        Ok(v) => (0, v.to_string()),
        Err(Failure::Input { kind, message }) => (1, json!({"error": {"kind": kind, "message": message}}).to_string()),
        Err(Failure::Internal(message)) => {
            (2, json!({"error": {"kind": "internal", "message": message}}).to_string())
        }
    }
}

fn read_text(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::input("io", e))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::input("io", format!("{}: {e}", path.display())))
    }
}

fn parse_code(text: &str) -> Result<GaussDiagram, Failure> {
    GaussDiagram::parse(text).map_err(|e| Failure::input("gauss_code", e))
}

fn load(input: &CodeInput) -> Result<GaussDiagram, Failure> {
    match (&input.code, &input.code_file) {
        (Some(c), _) => parse_code(c),
        (None, Some(p)) => parse_code(&read_text(p)?),
        (None, None) => Err(Failure::input("usage", "a Gauss code or --code-file is required")),
    }
}

fn dispatch(cmd: Command) -> Result<Value, Failure> {
    match cmd {
        Command::Invariants { input } => {
            let g = load(&input)?;
            let report = InvariantReport::of(&g);
            check(report.odd_writhe % 2 == 0, "odd writhe is not even")?;
            check(
                affine_index_from_writhes(&report.writhes) == report.polynomial,
                "polynomial routes disagree",
            )?;
            serde_json::to_value(&report).map_err(|e| Failure::Internal(e.to_string()))
        }
        Command::Classify { k, input } => {
            let g = load(&input)?;
            let nf = classify_2k_xi(&g, k).map_err(|e| Failure::input("parameter", e))?;
            let rep = nf.diagram();
            let j = crate::invariants::odd_writhe(&g);
            check((j - 2 * nf.a).rem_euclid(2 * k as i64) == 0, "class does not match odd writhe")?;
            Ok(json!({"k": k, "a": nf.a, "odd_writhe": j, "representative": rep.to_string()}))
        }
        Command::Move { apply, input } => {
            let g = load(&input)?;
            let m: Move = apply.parse().map_err(|e| Failure::input("move", e))?;
            let out = apply_move(&g, &m).map_err(|e| Failure::input("move", e))?;
            let inv = m.inverse(&g).map_err(|e| Failure::Internal(e.to_string()))?;
            let back = apply_move(&out, &inv).map_err(|e| Failure::Internal(e.to_string()))?;
            check(back == g, "inverse move does not restore the input")?;
            Ok(json!({
                "move": m.to_string(),
                "diagram": out.to_string(),
                "canonical": out.canonical_key(),
                "inverse": inv.to_string(),
            }))
        }
        Command::ScriptReplay { file, input } => {
            let g = load(&input)?;
            let text = read_text(&file)?;
            let script = MoveScript::parse(&text).map_err(|e| Failure::input("script", e))?;
            let out = script.replay(&g).map_err(|e| Failure::input("script", e))?;
            let report = InvariantReport::of(&out);
            Ok(json!({
                "moves": script.len(),
                "twok_moves": script.twok_count(),
                "diagram": out.to_string(),
                "canonical": out.canonical_key(),
                "odd_writhe": report.odd_writhe,
            }))
        }
        Command::Distance {
            k,
            budget_moves,
            budget_chords,
            budget_states,
            budget_insertions,
            allow_xi,
            code_a,
            code_b,
        } => {
            let (g, h) = (parse_code(&code_a)?, parse_code(&code_b)?);
            let budget = Budget {
                max_moves: budget_moves,
                max_chords: budget_chords,
                max_states: budget_states,
                max_free_insertions: budget_insertions,
                allow_xi,
            };
            let bound = DistanceBound::compute(&g, &h, k, &budget).map_err(|e| Failure::input("parameter", e))?;
            if let Some(script) = &bound.certificate {
                let end = script.replay(&g).map_err(|e| Failure::Internal(e.to_string()))?;
                check(end.canonical_key() == h.canonical_key(), "certificate does not reach the target")?;
                if let (LowerBound::Feasible(l), Some(u)) = (bound.lower, bound.upper) {
                    check(l <= u as u64, "lower bound exceeds certificate")?;
                }
            }
            serde_json::to_value(&bound).map_err(|e| Failure::Internal(e.to_string()))
        }
        Command::Witness { a, k, input } => {
            let g = load(&input)?;
            let w = witness_construction(&g, a, k).map_err(|e| Failure::input("parameter", e))?;
            let lb = lower_bound_2k(&w, &g, k).map_err(|e| Failure::input("parameter", e))?;
            check(lb == LowerBound::Feasible(a as u64), "witness lower bound differs from a")?;
            Ok(json!({"a": a, "k": k, "diagram": w.to_string(), "lower_bound": a}))
        }
        Command::NormalForm { a } => {
            let g = normal_form_diagram(a);
            check(crate::invariants::odd_writhe(&g) == 2 * a, "odd writhe of G(a) is not 2a")?;
            Ok(json!({"a": a, "diagram": g.to_string(), "odd_writhe": 2 * a}))
        }
        Command::Random { n, seed } => {
            let g = GaussDiagram::random(n, seed);
            Ok(json!({"n": n, "seed": seed, "diagram": g.to_string()}))
        }
    }
}
