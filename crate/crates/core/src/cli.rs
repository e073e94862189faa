//! The `hedonic` command line. Every subcommand prints one JSON document on
//! stdout and reports through its exit code: 0 when the property holds or a
//! partition exists, 1 when it fails or none exists, 2 on bad input and 3
//! when a capacity or step budget is exceeded.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::deciders::{
    construct_is_ir_robust, decide_cis_robust_k1_detailed, decide_ns_robust, friendship_pairs,
    potential,
};
use crate::error::{Error, Result};
use crate::game::{Coalition, Game, Partition};
use crate::instances::{self, X3cInstance};
use crate::io;
use crate::limits::Limits;
use crate::oracle::oracle_find_robust;
use crate::robustness::is_robust;
use crate::stability::{satisfies, Concept, Violation};

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "hedonic",
    version,
    about = "Robust stability checks for hedonic games"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a partition for a concept, or for k-robustness with --k.
    Check {
        #[arg(long)]
        game: PathBuf,
        #[arg(long)]
        partition: PathBuf,
        #[arg(long)]
        concept: Concept,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Run a polynomial decider.
    Decide {
        #[arg(value_enum)]
        algorithm: Algorithm,
        #[arg(long)]
        game: PathBuf,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Build an IS and IR-robust partition of a symmetric game.
    Construct {
        #[arg(long)]
        game: PathBuf,
    },
    /// Brute-force search for robust partitions (at most 12 players).
    Oracle {
        #[arg(long)]
        game: PathBuf,
        #[arg(long)]
        concept: Concept,
        #[arg(long)]
        k: usize,
        /// List every robust partition instead of the first.
        #[arg(long)]
        all: bool,
    },
    /// Write a generated game file.
    Gen(GenArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Ns,
    Cis1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Star,
    Path,
    Cycle,
    Clique,
    Random,
    RandomAdditive,
    Fig1,
    Fig2Left,
    Fig2Right,
    Example2,
    X3cCis,
    X3cIs,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(value_enum)]
    pub family: Family,
    /// Player count (leaf count for `star`).
    #[arg(long)]
    pub size: Option<usize>,
    /// Edge probability for `random`.
    #[arg(long, default_value_t = 0.3)]
    pub p: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Weight range for `random-additive`.
    #[arg(long, default_value_t = -3, allow_hyphen_values = true)]
    pub lo: i64,
    #[arg(long, default_value_t = 3, allow_hyphen_values = true)]
    pub hi: i64,
    /// Universe size for the X3C gadgets.
    #[arg(long)]
    pub elements: Option<usize>,
    /// One X3C set as `a,b,c`; repeat for more.
    #[arg(long = "set", value_parser = parse_triple)]
    pub sets: Vec<[usize; 3]>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_triple(s: &str) -> std::result::Result<[usize; 3], String> {
    let parts: Vec<usize> = s
        .split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|e| format!("{p:?}: {e}")))
        .collect::<std::result::Result<_, _>>()?;
    <[usize; 3]>::try_from(parts).map_err(|_| format!("{s:?} is not a triple"))
}

/// What a subcommand printed and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn json(value: &Value, success: bool) -> Result<Self> {
        Ok(Outcome {
            code: if success { EXIT_HOLDS } else { EXIT_FAILS },
            stdout: io::to_canonical_json(value)?,
            stderr: String::new(),
        })
    }
}

pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::Capacity(_) | Error::StepBudget(_) => EXIT_CAPACITY,
        _ => EXIT_INPUT,
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Check {
            game,
            partition,
            concept,
            k,
        } => cmd_check(game, partition, *concept, *k),
        Command::Decide { algorithm, game, k } => cmd_decide(*algorithm, game, *k),
        Command::Construct { game } => cmd_construct(game),
        Command::Oracle {
            game,
            concept,
            k,
            all,
        } => cmd_oracle(game, *concept, *k, *all),
        Command::Gen(args) => cmd_gen(args),
    };
    result.unwrap_or_else(|err| Outcome {
        code: exit_code_for(&err),
        stdout: String::new(),
        stderr: format!("error: {err}\n"),
    })
}

fn coalition_json(c: &Coalition) -> Value {
    json!(c.to_vec())
}

fn partition_json(p: &Partition) -> Value {
    json!(p.to_vecs())
}

/// `{kind, player, origin, target, coalition}`; a move to stand alone has
/// `target: []`.
pub fn violation_json(v: &Violation) -> Value {
    match v {
        Violation::NotIndividuallyRational { player } => json!({
            "kind": "ir", "player": player, "origin": null, "target": null, "coalition": null,
        }),
        Violation::Deviation(d) => json!({
            "kind": d.kind.concept().name(),
            "player": d.player,
            "origin": coalition_json(&d.origin),
            "target": d.target.as_ref().map_or(json!([]), coalition_json),
            "coalition": null,
        }),
        Violation::Blocking(b) => json!({
            "kind": "cr", "player": null, "origin": null, "target": null,
            "coalition": coalition_json(&b.coalition),
        }),
    }
}

fn load(game: &Path) -> Result<Game> {
    io::load_game(game)
}

pub fn cmd_check(
    game: &Path,
    partition: &Path,
    concept: Concept,
    k: Option<usize>,
) -> Result<Outcome> {
    let g = load(game)?;
    let pi = io::load_partition(partition, g.n())?;
    let (deleted, violation) = match k {
        Some(k) => match is_robust(&g, &pi, concept, k)?.counterexample {
            Some(c) => (Some(c.deleted), Some(c.violation)),
            None => (None, None),
        },
        None => (None, satisfies(&g, &pi, concept)?),
    };
    let holds = violation.is_none();
    let value = json!({
        "concept": concept.name(),
        "k": k,
        "holds": holds,
        "deleted": deleted,
        "violation": violation.as_ref().map(violation_json),
    });
    Outcome::json(&value, holds)
}

pub fn cmd_decide(algorithm: Algorithm, game: &Path, k: Option<usize>) -> Result<Outcome> {
    let g = load(game)?;
    let value = match algorithm {
        Algorithm::Ns => {
            let k = k.ok_or_else(|| Error::Precondition("decide ns needs --k".into()))?;
            decide_ns_robust(&g, k)?.map(|p| json!({"algorithm": "ns", "exists": true, "k": k, "partition": partition_json(&p)}))
        }
        Algorithm::Cis1 => {
            if k.is_some_and(|k| k != 1) {
                return Err(Error::Precondition("decide cis1 only handles k = 1".into()));
            }
            let d = decide_cis_robust_k1_detailed(&g, &Limits::default())?;
            d.partition().map(|p| {
                let pairs: Vec<Value> = d
                    .sequence
                    .pairs
                    .iter()
                    .map(|e| json!({"leaf": e.leaf, "partner": e.partner, "rule": format!("{:?}", e.rule)}))
                    .collect();
                json!({"algorithm": "cis1", "exists": true, "k": 1, "partition": partition_json(p), "elimination": pairs})
            })
        }
    };
    match value {
        Some(v) => Outcome::json(&v, true),
        None => Ok(Outcome {
            code: EXIT_FAILS,
            stdout: "{\"exists\": false}\n".into(),
            stderr: String::new(),
        }),
    }
}

pub fn cmd_construct(game: &Path) -> Result<Outcome> {
    let g = load(game)?;
    let (p, trace) = construct_is_ir_robust(&g)?;
    let value = json!({
        "partition": partition_json(&p),
        "steps": trace.steps.len(),
        "final_potential": potential(&g, &p),
        "friendship_pairs": friendship_pairs(&g, &p),
    });
    Outcome::json(&value, true)
}

pub fn cmd_oracle(game: &Path, concept: Concept, k: usize, all: bool) -> Result<Outcome> {
    let g = load(game)?;
    let found = oracle_find_robust(&g, concept, k, all)?;
    let value = json!({
        "concept": concept.name(),
        "k": k,
        "partitions": found.iter().map(partition_json).collect::<Vec<_>>(),
    });
    Outcome::json(&value, !found.is_empty())
}

fn size(args: &GenArgs) -> Result<usize> {
    args.size
        .ok_or_else(|| Error::Precondition(format!("{:?} needs --size", args.family)))
}

pub fn cmd_gen(args: &GenArgs) -> Result<Outcome> {
    let mut gadget = None;
    let game = match args.family {
        Family::Star => instances::make_star(size(args)?),
        Family::Path => instances::make_path(size(args)?),
        Family::Cycle => instances::make_cycle(size(args)?),
        Family::Clique => instances::make_clique(size(args)?),
        Family::Random => instances::gen_random_friend_oriented(size(args)?, args.p, args.seed)?,
        Family::RandomAdditive => {
            instances::gen_random_additive(size(args)?, args.lo, args.hi, args.seed)?
        }
        Family::Fig1 => instances::fig1(),
        Family::Fig2Left => instances::fig2_left(),
        Family::Fig2Right => instances::fig2_right(),
        Family::Example2 => instances::example2(),
        Family::X3cCis | Family::X3cIs => {
            let x3c = match args.elements {
                Some(e) => X3cInstance::new(e, args.sets.clone())?,
                None if args.sets.is_empty() => X3cInstance::single_set(),
                None => return Err(Error::Precondition("--set needs --elements".into())),
            };
            let g = if args.family == Family::X3cCis {
                instances::gen_x3c_cis_gadget(&x3c)?
            } else {
                instances::gen_x3c_is_gadget(&x3c)?
            };
            let game = g.game.clone();
            gadget = Some(g);
            game
        }
    };
    let Some(out) = &args.out else {
        return Ok(Outcome {
            code: EXIT_HOLDS,
            stdout: io::game_to_json(&game)?,
            stderr: String::new(),
        });
    };
    io::save_game(out, &game)?;
    let labels = match &gadget {
        Some(g) => {
            let path = labels_path(out);
            io::save_labels(&path, g)?;
            Some(path.display().to_string())
        }
        None => None,
    };
    let value = json!({"n": game.n(), "out": out.display().to_string(), "labels": labels});
    Outcome::json(&value, true)
}

/// `dir/name.json` becomes `dir/name.labels.json`.
pub fn labels_path(out: &Path) -> PathBuf {
    let stem = out
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    out.with_file_name(format!("{stem}.labels.json"))
}
