//! Command-line front end.
//!
//! ```text
//! stealbound phi --cbt 4 --n 2            worst-case steal count
//! stealbound multi --config trees.json    optimal multi-processor total
//! stealbound gen cbt --h 3                materialize tree families
//! stealbound transform --tree "(. . .)"   left-child right-sibling form
//! stealbound verify --suite all           run the self-check suites
//! ```
//!
//! Exit codes: 0 success, 1 malformed input, 2 steal-count overflow,
//! 3 a verification property failed. Results go to stdout, diagnostics to
//! stderr. `STEALBOUND_STATE_BUDGET` caps the exhaustive oracle's memoized
//! states during `verify`.

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use crate::multi::{configuration_potential, Configuration, MultiError};
use crate::oracle::STATE_BUDGET_ENV;
use crate::potential::{
    act_potential_closed, cbt_potential_closed, potential_vector, Overflow, StealCount,
};
use crate::tree::{ActSpec, Tree, TreeError};
use crate::verify::{closed_forms_suite, multi_suite, small_oracle_suite, SuiteOptions};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_OVERFLOW: u8 = 2;
pub const EXIT_VERIFY_FAILED: u8 = 3;

/// Refuse to materialize trees beyond this many nodes; closed forms handle
/// the large families without building them.
const MAX_MATERIALIZED_NODES: u64 = 100_000_000;
const MAX_RANDOM_LEAVES: u64 = 1_000_000;

#[derive(Parser, Debug)]
#[command(
    name = "stealbound",
    version,
    about = "Worst-case steal counts for work-stealing executions over rooted computation trees"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Worst-case steal count of one tree with n idle processors
    Phi(PhiArgs),
    /// Optimal total steal count of a multi-tree configuration
    Multi(MultiArgs),
    /// Generate a tree from the built-in families
    Gen(GenArgs),
    /// Print the left-child right-sibling binarization of a tree
    Transform(TransformArgs),
    /// Run the self-check suites
    Verify(VerifyArgs),
}

/// Exactly one way of naming a tree.
#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct TreeSource {
    /// Tree in text form ("(. (. .) .)") or JSON form ([0,[0,0],0])
    #[arg(long, value_name = "TREE")]
    tree: Option<String>,
    /// File containing a tree in text or JSON form
    #[arg(long, value_name = "PATH")]
    tree_file: Option<PathBuf>,
    /// Complete binary tree of height H
    #[arg(long, value_name = "H")]
    cbt: Option<u32>,
    /// Almost-complete k-ary tree with parameters b,k,h
    #[arg(long, value_name = "B,K,H")]
    act: Option<ActSpec>,
}

#[derive(Args, Debug)]
pub struct PhiArgs {
    #[command(flatten)]
    source: TreeSource,
    /// Number of initially idle processors
    #[arg(long)]
    n: usize,
    /// Also print the values for every idle count 0..=n
    #[arg(long)]
    vector: bool,
    /// Emit a JSON object instead of plain text
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
pub struct MultiArgs {
    /// JSON file of the form { "trees": [tree, ...] }
    #[arg(long, value_name = "PATH")]
    config: PathBuf,
    /// Emit a JSON object instead of plain text
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[command(subcommand)]
    family: GenFamily,
    /// Write the tree to a file instead of stdout
    #[arg(long, value_name = "PATH", global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum GenFamily {
    /// Complete binary tree of height h
    Cbt {
        #[arg(long)]
        h: u32,
    },
    /// Almost-complete k-ary tree (b complete k-ary subtrees of height h)
    Act {
        #[arg(long)]
        b: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        h: u32,
    },
    /// Deterministic pseudo-random tree
    Random {
        /// Exact number of leaves
        #[arg(long)]
        leaves: u64,
        /// Largest child count of any node
        #[arg(long)]
        arity: usize,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Args, Debug)]
pub struct TransformArgs {
    #[command(flatten)]
    source: TreeSource,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Which suite to run
    #[arg(long, value_enum)]
    suite: SuiteName,
    /// Largest tree size for the oracle suite
    #[arg(long, value_name = "NODES")]
    max_nodes: Option<usize>,
    /// Largest idle-processor count for the oracle suite
    #[arg(long, value_name = "N")]
    max_n: Option<usize>,
    /// Largest processor count for random configurations
    #[arg(long, value_name = "P")]
    max_p: Option<usize>,
    /// Number of random configurations in the assignment suite
    #[arg(long, value_name = "COUNT")]
    cases: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum SuiteName {
    SmallOracle,
    ClosedForms,
    Multi,
    All,
}

#[derive(Debug)]
pub enum CliError {
    /// Malformed tree text, configuration, parameters, or I/O trouble.
    Input(String),
    /// A requested value exceeds the 64-bit steal-count range.
    Overflow,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(message) => f.write_str(message),
            CliError::Overflow => f.write_str("value exceeds the 64-bit steal-count range"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Overflow> for CliError {
    fn from(_: Overflow) -> Self {
        CliError::Overflow
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Overflow => EXIT_OVERFLOW,
        }
    }
}

/// What a command wants printed to stdout and the process exit code (0, or 3
/// for failed verification; errors carry their code on the `Err` side).
#[derive(Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome { stdout, code: EXIT_OK }
    }
}

/// Process entry point: parse, run, print.
pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // --help and --version are not failures.
            let code = if err.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            ExitCode::from(outcome.code)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Phi(args) => cmd_phi(args),
        Command::Multi(args) => cmd_multi(args),
        Command::Gen(args) => cmd_gen(args),
        Command::Transform(args) => cmd_transform(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

enum Source {
    Tree(Tree),
    Cbt(u32),
    Act(ActSpec),
}

impl TreeSource {
    fn resolve(&self) -> Result<Source, CliError> {
        if let Some(text) = &self.tree {
            return Ok(Source::Tree(parse_tree_input(text)?));
        }
        if let Some(path) = &self.tree_file {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
            return Ok(Source::Tree(parse_tree_input(&text)?));
        }
        if let Some(h) = self.cbt {
            return Ok(Source::Cbt(h));
        }
        if let Some(spec) = self.act {
            return Ok(Source::Act(spec));
        }
        unreachable!("clap enforces exactly one tree source")
    }

    /// Resolve and build the actual tree, refusing family parameters whose
    /// trees would not reasonably fit in memory.
    fn materialize(&self) -> Result<Tree, CliError> {
        match self.resolve()? {
            Source::Tree(tree) => Ok(tree),
            Source::Cbt(h) => {
                guard_size(cbt_size(h), &format!("complete binary tree of height {h}"))?;
                Ok(Tree::cbt(h))
            }
            Source::Act(spec) => {
                guard_size(act_size(spec), &spec.to_string())?;
                Ok(Tree::act(spec))
            }
        }
    }
}

fn cbt_size(h: u32) -> Option<u64> {
    if h >= 63 {
        None
    } else {
        Some((1u64 << (h + 1)) - 1)
    }
}

fn act_size(spec: ActSpec) -> Option<u64> {
    // Size of a complete k-ary tree of height h: (k^(h+1) - 1) / (k - 1).
    let k = spec.k() as u64;
    let subtree = k
        .checked_pow(spec.h().checked_add(1)?)?
        .checked_sub(1)?
        / (k - 1);
    if spec.b() == 1 {
        Some(subtree)
    } else {
        (spec.b() as u64).checked_mul(subtree)?.checked_add(1)
    }
}

fn guard_size(size: Option<u64>, what: &str) -> Result<(), CliError> {
    match size {
        Some(size) if size <= MAX_MATERIALIZED_NODES => Ok(()),
        _ => Err(CliError::Input(format!(
            "refusing to materialize {what}: more than {MAX_MATERIALIZED_NODES} nodes"
        ))),
    }
}

/// Accepts the text grammar or, when the input starts like JSON, the JSON
/// encoding (0, [..], null).
fn parse_tree_input(text: &str) -> Result<Tree, CliError> {
    let head = text.trim_start();
    let looks_like_json =
        head.starts_with('[') || head.starts_with('0') || head.starts_with("null");
    if looks_like_json {
        let value: Value = serde_json::from_str(text)
            .map_err(|e| CliError::Input(format!("invalid JSON tree: {e}")))?;
        Tree::from_json(&value).map_err(|e| CliError::Input(e.to_string()))
    } else {
        Tree::parse(text).map_err(|e| CliError::Input(e.to_string()))
    }
}

fn cmd_phi(args: PhiArgs) -> Result<Outcome, CliError> {
    let n = args.n;
    let (value, vector): (StealCount, Option<Vec<StealCount>>) = match args.source.resolve()? {
        // Family parameters use the closed forms: exact, and no tree to build.
        Source::Cbt(h) => {
            let value = cbt_potential_closed(h, n)?;
            let vector = args
                .vector
                .then(|| (0..=n).map(|i| cbt_potential_closed(h, i)).collect::<Result<_, _>>())
                .transpose()?;
            (value, vector)
        }
        Source::Act(spec) => {
            let value = act_potential_closed(spec, n)?;
            let vector = args
                .vector
                .then(|| (0..=n).map(|i| act_potential_closed(spec, i)).collect::<Result<_, _>>())
                .transpose()?;
            (value, vector)
        }
        Source::Tree(tree) => {
            let v = potential_vector(&tree, n);
            (v.at(n), args.vector.then(|| v.into_vec()))
        }
    };
    let stdout = if args.json {
        let mut object = serde_json::json!({ "n": n, "phi": value });
        if let Some(vector) = &vector {
            object["vector"] = serde_json::json!(vector);
        }
        format!("{object}\n")
    } else {
        let mut out = format!("{value}\n");
        if let Some(vector) = &vector {
            out.push_str(&join(vector));
            out.push('\n');
        }
        out
    };
    Ok(Outcome::ok(stdout))
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn cmd_multi(args: MultiArgs) -> Result<Outcome, CliError> {
    let text = std::fs::read_to_string(&args.config)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", args.config.display())))?;
    let cfg = Configuration::from_json_str(&text).map_err(|e| CliError::Input(e.to_string()))?;
    let result = configuration_potential(&cfg).map_err(|e| match e {
        MultiError::Overflow(_) => CliError::Overflow,
        other => CliError::Input(other.to_string()),
    })?;
    let stdout = if args.json {
        format!("{}\n", serde_json::json!({ "total": result.total, "order": result.order }))
    } else {
        format!("total: {}\norder: {}\n", result.total, join(&result.order))
    };
    Ok(Outcome::ok(stdout))
}

fn cmd_gen(args: GenArgs) -> Result<Outcome, CliError> {
    let tree = match args.family {
        GenFamily::Cbt { h } => {
            guard_size(cbt_size(h), &format!("complete binary tree of height {h}"))?;
            Tree::cbt(h)
        }
        GenFamily::Act { b, k, h } => {
            let spec = ActSpec::new(b, k, h).map_err(|e| CliError::Input(e.to_string()))?;
            guard_size(act_size(spec), &spec.to_string())?;
            Tree::act(spec)
        }
        GenFamily::Random { leaves, arity, seed } => {
            if leaves > MAX_RANDOM_LEAVES {
                return Err(CliError::Input(format!(
                    "refusing to generate more than {MAX_RANDOM_LEAVES} leaves"
                )));
            }
            Tree::random(leaves, arity, seed).map_err(|e| CliError::Input(e.to_string()))?
        }
    };
    let text = format!("{tree}\n");
    match &args.out {
        Some(path) => {
            std::fs::write(path, &text)
                .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))?;
            Ok(Outcome::ok(String::new()))
        }
        None => Ok(Outcome::ok(text)),
    }
}

fn cmd_transform(args: TransformArgs) -> Result<Outcome, CliError> {
    let tree = args.source.materialize()?;
    let binary = tree.to_lcrs_binary().map_err(|e: TreeError| CliError::Input(e.to_string()))?;
    Ok(Outcome::ok(format!("{binary}\n")))
}

fn cmd_verify(args: VerifyArgs) -> Result<Outcome, CliError> {
    let mut options = SuiteOptions::default();
    if let Some(v) = args.max_nodes {
        options.max_nodes = v;
    }
    if let Some(v) = args.max_n {
        options.max_n = v;
    }
    if let Some(v) = args.max_p {
        options.max_p = v;
    }
    if let Some(v) = args.cases {
        options.cases = v;
    }
    if let Some(raw) = std::env::var_os(STATE_BUDGET_ENV) {
        let text = raw.to_string_lossy();
        options.state_budget = text.parse().map_err(|_| {
            CliError::Input(format!("{STATE_BUDGET_ENV} must be a positive integer, got {text:?}"))
        })?;
    }

    let outcomes = match args.suite {
        SuiteName::SmallOracle => small_oracle_suite(&options),
        SuiteName::ClosedForms => closed_forms_suite(),
        SuiteName::Multi => multi_suite(&options),
        SuiteName::All => {
            let mut all = small_oracle_suite(&options);
            all.extend(closed_forms_suite());
            all.extend(multi_suite(&options));
            all
        }
    };

    let mut stdout = String::new();
    let mut failed = 0usize;
    for outcome in &outcomes {
        if outcome.passed() {
            stdout.push_str(&format!("{}: pass ({} checks)\n", outcome.name, outcome.checks));
        } else {
            failed += 1;
            stdout.push_str(&format!(
                "{}: FAIL ({} checks)\n  {}\n",
                outcome.name,
                outcome.checks,
                outcome.failure.as_deref().unwrap_or("unknown failure")
            ));
        }
    }
    if failed == 0 {
        stdout.push_str(&format!("ok: {} properties passed\n", outcomes.len()));
        Ok(Outcome::ok(stdout))
    } else {
        stdout.push_str(&format!("FAILED: {failed} of {} properties\n", outcomes.len()));
        Ok(Outcome { stdout, code: EXIT_VERIFY_FAILED })
    }
}
