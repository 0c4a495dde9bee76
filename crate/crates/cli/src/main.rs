mod render;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use gruler_core::oracle::{Oracle, DEFAULT_SUPPORT_CAP};
use gruler_core::{
    build_rep, classify, parse_graph, AnalysisError, BlockKind, GradedMatricialRep, Graph,
    GraphFormat, OracleError, ShiftBlock,
};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

const SUPPORT_CAP_VAR: &str = "GRULER_MAX_SUPPORT";

#[derive(Parser, Debug)]
#[command(
    name = "gruler",
    version,
    about = "Graded cancellation properties of Leavitt path algebras"
)]
struct Cli {
    /// Render a human-readable report instead of JSON
    #[arg(long, global = true)]
    text: bool,
    /// Emit JSON (the default)
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify L_K(E) for a graph file
    Analyze(GraphInput),
    /// Print the graded matricial representation of a no-exit graph
    Rep(GraphInput),
    /// Apply the closed-form graded unit-regularity criterion to one block
    CheckShifts(BlockArgs),
    /// Run the exhaustive prime-field oracle on one block
    Oracle {
        #[command(flatten)]
        block: BlockArgs,
        /// Field order (2, 3, 5 or 7)
        #[arg(long, default_value_t = 2)]
        q: u8,
    },
    /// Decide whether two representation files are graded isomorphic
    Compare { a: PathBuf, b: PathBuf },
}

#[derive(Args, Debug)]
struct GraphInput {
    file: PathBuf,
    /// Input format; detected from the first character when omitted
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum FormatArg {
    Json,
    Edgelist,
}

#[derive(Args, Debug)]
struct BlockArgs {
    /// K for the ground field, L for Laurent polynomials K[x^m, x^-m]
    #[arg(long, value_enum)]
    kind: KindArg,
    /// Period of a Laurent block
    #[arg(long)]
    m: Option<u32>,
    #[arg(required = true, allow_negative_numbers = true)]
    shifts: Vec<i64>,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum KindArg {
    #[value(name = "K", alias = "k")]
    K,
    #[value(name = "L", alias = "l")]
    L,
}

/// A failure mapped onto the exit-code contract.
#[derive(Debug)]
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl Failure {
    fn input(error: impl Into<anyhow::Error>) -> Self {
        Failure {
            code: 2,
            error: error.into(),
        }
    }
}

impl From<AnalysisError> for Failure {
    fn from(e: AnalysisError) -> Self {
        let code = match e {
            AnalysisError::NotNoExit { .. } => 4,
            AnalysisError::Graph(_) => 2,
            _ => 3,
        };
        Failure {
            code,
            error: e.into(),
        }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        let code = match e {
            OracleError::ComponentTooLarge { .. } => 5,
            _ => 2,
        };
        Failure {
            code,
            error: e.into(),
        }
    }
}

struct Output {
    command: &'static str,
    normalized_input: String,
    result: Value,
    text: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(out) => {
            if cli.text {
                print!("{}", out.text);
            } else {
                println!("{}", document(&out));
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}

fn document(out: &Output) -> String {
    let digest = hex(&Sha256::digest(out.normalized_input.as_bytes()));
    let doc = json!({
        "tool": "gruler",
        "version": env!("CARGO_PKG_VERSION"),
        "command": out.command,
        "input_digest": format!("sha256:{digest}"),
        "result": out.result,
    });
    serde_json::to_string_pretty(&doc).expect("documents serialize")
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn run(command: &Command) -> Result<Output, Failure> {
    match command {
        Command::Analyze(input) => {
            let g = read_graph(input)?;
            let report = classify(&g);
            Ok(Output {
                command: "analyze",
                normalized_input: g.to_json(),
                text: render::report_text(&report),
                result: report.to_json_value(),
            })
        }
        Command::Rep(input) => {
            let g = read_graph(input)?;
            let rep = build_rep(&g)?;
            Ok(Output {
                command: "rep",
                normalized_input: g.to_json(),
                text: render::rep_text(&rep),
                result: render::rep_json(&rep),
            })
        }
        Command::CheckShifts(args) => {
            let block = to_block(args)?;
            let (result, text) = render::check_shifts(&block);
            Ok(Output {
                command: "check-shifts",
                normalized_input: serde_json::to_string(&block).expect("block serializes"),
                result,
                text,
            })
        }
        Command::Oracle { block, q } => {
            let block = to_block(block)?;
            let oracle = Oracle::new(*q)?.with_cap(support_cap()?);
            let (result, text) = render::oracle(&oracle, &block)?;
            Ok(Output {
                command: "oracle",
                normalized_input: json!({ "block": block, "q": q }).to_string(),
                result,
                text,
            })
        }
        Command::Compare { a, b } => {
            let ra = read_rep(a)?;
            let rb = read_rep(b)?;
            let (result, text) = render::compare(&ra, &rb);
            Ok(Output {
                command: "compare",
                normalized_input: json!([ra.to_json_value(), rb.to_json_value()]).to_string(),
                result,
                text,
            })
        }
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))
        .map_err(Failure::input)
}

fn read_graph(input: &GraphInput) -> Result<Graph, Failure> {
    let text = read_file(&input.file)?;
    let format = match input.format {
        Some(FormatArg::Json) => GraphFormat::Json,
        Some(FormatArg::Edgelist) => GraphFormat::Edgelist,
        None if text.trim_start().starts_with('{') => GraphFormat::Json,
        None => GraphFormat::Edgelist,
    };
    parse_graph(&text, format)
        .with_context(|| format!("cannot parse {}", input.file.display()))
        .map_err(Failure::input)
}

fn read_rep(path: &Path) -> Result<GradedMatricialRep, Failure> {
    let text = read_file(path)?;
    GradedMatricialRep::from_json(&text)
        .with_context(|| format!("cannot parse representation {}", path.display()))
        .map_err(Failure::input)
}

fn to_block(args: &BlockArgs) -> Result<ShiftBlock, Failure> {
    let kind = match (args.kind, args.m) {
        (KindArg::K, None) => BlockKind::GroundField,
        (KindArg::L, Some(m)) => BlockKind::Laurent(m),
        (KindArg::K, Some(_)) => {
            return Err(Failure::input(anyhow::anyhow!(
                "--m only applies to --kind L"
            )))
        }
        (KindArg::L, None) => return Err(Failure::input(anyhow::anyhow!("--kind L needs --m"))),
    };
    ShiftBlock::new(kind, args.shifts.clone()).map_err(Failure::input)
}

fn support_cap() -> Result<usize, Failure> {
    match std::env::var(SUPPORT_CAP_VAR) {
        Err(_) => Ok(DEFAULT_SUPPORT_CAP),
        Ok(v) => v
            .trim()
            .parse()
            .with_context(|| format!("{SUPPORT_CAP_VAR}={v:?} is not a nonnegative integer"))
            .map_err(Failure::input),
    }
}
