use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperspectral::claims::{self, Claim, ClaimError, ClaimParams};
use hyperspectral::format::{self, Format, FormatError};
use hyperspectral::table;
use hyperspectral_core::canon::CanonError;
use hyperspectral_core::constructions::{self as cons, ConstructionError, SimpleGraph};
use hyperspectral_core::enumerate::{
    conjecture_report, dominating_vertex, enumerate_class_with, ClassFilter, EnumError, EnumOptions,
};
use hyperspectral_core::spectral::{spectral_radius_any, SpectralError, DEFAULT_TOLERANCE};
use hyperspectral_core::transforms::{move_edges, TransformError};
use hyperspectral_core::{canonical_form, Girth};
use serde::Serialize;

const EX_USAGE: u8 = 64;
const EX_BUDGET: u8 = 65;
const EX_SOFTWARE: u8 = 70;
const EX_IOERR: u8 = 74;

const BUDGET_VAR: &str = "HYPERSPECTRAL_BUDGET";

#[derive(Debug, Parser)]
#[command(
    name = "hyperspectral",
    version,
    about = "Uniform hypergraphs and their spectral radius"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a named construction.
    Make(MakeArgs),
    /// Spectral radius with its Collatz-Wielandt bracket.
    Rho(RhoArgs),
    /// Structural properties as JSON.
    Props(PropsArgs),
    /// Apply edge moves toward a common vertex.
    Move(MoveArgs),
    /// One representative per isomorphism class.
    Enumerate(EnumerateArgs),
    /// Check one extremal statement; exit 0 pass, 1 refuted, 2 undecided.
    Verify(VerifyArgs),
    /// CSV comparing the three bicyclic families.
    Conjecture(ConjectureArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    Hyperstar,
    LoosePath,
    Power,
    SPower,
    UnicyclicMax,
    G5,
    #[value(name = "b-l1")]
    BL1,
    #[value(name = "b-l2")]
    BL2,
    #[value(name = "b-p")]
    BP,
}

#[derive(Debug, Args)]
struct Output {
    /// Write here instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct MakeArgs {
    kind: Kind,
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long)]
    m: Option<usize>,
    /// Cycle length for s-power.
    #[arg(long)]
    g: Option<usize>,
    /// Simple graph file (k = 2) for power.
    #[arg(long)]
    base: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    #[command(flatten)]
    out: Output,
}

#[derive(Debug, Args)]
struct RhoArgs {
    file: PathBuf,
    #[arg(long, alias = "tol", default_value_t = DEFAULT_TOLERANCE, value_parser = positive)]
    tolerance: f64,
    /// Include the Perron vector.
    #[arg(long)]
    vector: bool,
    #[command(flatten)]
    out: Output,
}

#[derive(Debug, Args)]
struct PropsArgs {
    file: PathBuf,
    #[command(flatten)]
    out: Output,
}

#[derive(Debug, Args)]
struct MoveArgs {
    file: PathBuf,
    /// JSON array of {edge_index, from_vertex, to_vertex}.
    moves: PathBuf,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    #[command(flatten)]
    out: Output,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ClassName {
    Connected,
    Hypertree,
    Unicyclic,
    Bicyclic,
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long)]
    m: usize,
    #[arg(long, value_enum, default_value_t = ClassName::Connected, conflicts_with = "cyclomatic")]
    class: ClassName,
    #[arg(long)]
    cyclomatic: Option<usize>,
    #[arg(long)]
    linear: Option<bool>,
    #[arg(long)]
    power: Option<bool>,
    /// Exact girth, or `inf` for acyclic.
    #[arg(long, value_parser = girth)]
    girth: Option<Girth>,
    /// Shuffle generation order; the output does not depend on it.
    #[arg(long)]
    seed: Option<u64>,
    /// Write one file per class here instead of a JSON array.
    #[arg(long)]
    out_dir: Option<PathBuf>,
    /// File format used with --out-dir.
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    #[command(flatten)]
    out: Output,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    claim: Claim,
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long)]
    m: Option<usize>,
    /// Girth for cor-3.5; all girths 3..=m when absent.
    #[arg(long)]
    g: Option<usize>,
    #[arg(long, alias = "tol", default_value_t = DEFAULT_TOLERANCE, value_parser = positive)]
    tolerance: f64,
    #[arg(long)]
    seed: Option<u64>,
    #[command(flatten)]
    out: Output,
}

#[derive(Debug, Args)]
struct ConjectureArgs {
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long)]
    m_from: usize,
    #[arg(long)]
    m_to: usize,
    #[arg(long, alias = "tol", default_value_t = 1e-12, value_parser = positive)]
    tolerance: f64,
    #[command(flatten)]
    out: Output,
}

fn positive(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(t) if t > 0.0 && t.is_finite() => Ok(t),
        _ => Err(format!("`{s}` is not a positive number")),
    }
}

fn girth(s: &str) -> Result<Girth, String> {
    if s == "inf" {
        return Ok(Girth::Infinite);
    }
    match s.parse::<usize>() {
        Ok(g) if g >= 2 => Ok(Girth::Finite(g)),
        _ => Err(format!("`{s}` is neither `inf` nor an integer >= 2")),
    }
}

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EX_USAGE,
            message: message.into(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Self {
            code: EX_IOERR,
            message: e.to_string(),
        }
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        match e {
            FormatError::Io(e) => e.into(),
            e => Failure::usage(e.to_string()),
        }
    }
}

impl From<SpectralError> for Failure {
    fn from(e: SpectralError) -> Self {
        let code = match e {
            SpectralError::IterationCap { .. } => EX_SOFTWARE,
            _ => EX_USAGE,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<EnumError> for Failure {
    fn from(e: EnumError) -> Self {
        match e {
            EnumError::Spectral(e) => e.into(),
            EnumError::BudgetExceeded { .. } => Self {
                code: EX_BUDGET,
                message: format!("{e} (raise {BUDGET_VAR})"),
            },
            e => Failure::usage(e.to_string()),
        }
    }
}

impl From<ClaimError> for Failure {
    fn from(e: ClaimError) -> Self {
        match e {
            ClaimError::Enum(e) => e.into(),
            e => Failure::usage(e.to_string()),
        }
    }
}

macro_rules! usage_errors {
    ($($t:ty),*) => {$(
        impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Failure::usage(e.to_string())
            }
        }
    )*};
}

usage_errors!(ConstructionError, TransformError, CanonError);

fn emit(out: &Output, text: &str) -> Result<(), Failure> {
    match &out.output {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data");
    s.push('\n');
    s
}

fn enum_options(seed: Option<u64>) -> Result<EnumOptions, Failure> {
    let mut opts = EnumOptions {
        shuffle_seed: seed,
        ..EnumOptions::default()
    };
    if let Ok(v) = std::env::var(BUDGET_VAR) {
        opts.budget.max_nodes = v
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("{BUDGET_VAR}=`{v}` is not a node count")))?;
    }
    Ok(opts)
}

fn require(value: Option<usize>, flag: &str, kind: Kind) -> Result<usize, Failure> {
    value.ok_or_else(|| Failure::usage(format!("{kind:?} needs --{flag}")))
}

fn make(args: &MakeArgs) -> Result<(), Failure> {
    let k = args.k;
    let m = || require(args.m, "m", args.kind);
    let g = match args.kind {
        Kind::Hyperstar => cons::hyperstar(k, m()?)?,
        Kind::LoosePath => cons::loose_path(k, m()?)?,
        Kind::Power => {
            let path = args
                .base
                .as_deref()
                .ok_or_else(|| Failure::usage("power needs --base"))?;
            let base = format::read(path)?;
            cons::power(&SimpleGraph::from_hypergraph(&base)?, k)?
        }
        Kind::SPower => cons::s_power(m()?, require(args.g, "g", args.kind)?, k)?,
        Kind::UnicyclicMax => cons::unicyclic_max(m()?, k)?,
        Kind::G5 => cons::g5(k)?,
        Kind::BL1 => cons::b_l1(m()?, k)?,
        Kind::BL2 => cons::b_l2(m()?, k)?,
        Kind::BP => cons::b_p(m()?, k)?,
    };
    emit(&args.out, &format::serialize(&g, args.format))
}

#[derive(Serialize)]
struct RhoOut {
    rho: f64,
    lower: f64,
    upper: f64,
    iterations: usize,
    residual: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    vector: Option<Vec<f64>>,
}

fn rho(args: &RhoArgs) -> Result<(), Failure> {
    let g = format::read(&args.file)?;
    let r = spectral_radius_any(&g, args.tolerance)?;
    let out = RhoOut {
        rho: r.rho,
        lower: r.lower,
        upper: r.upper,
        iterations: r.iterations,
        residual: r.residual,
        vector: args.vector.then_some(r.vector),
    };
    emit(&args.out, &json(&out))
}

#[derive(Serialize)]
struct Props {
    k: usize,
    n: usize,
    m: usize,
    components: usize,
    connected: bool,
    cyclomatic: usize,
    hypertree: bool,
    unicyclic: bool,
    bicyclic: bool,
    linear: bool,
    power: bool,
    /// A number, or `"inf"` when acyclic.
    girth: serde_json::Value,
    max_pair_intersection: usize,
    degrees: Vec<usize>,
    dominating_vertex: Option<usize>,
    power_base: Option<Vec<[usize; 2]>>,
    canonical_form: Option<String>,
}

fn props(args: &PropsArgs) -> Result<(), Failure> {
    let g = format::read(&args.file)?;
    let c = g.classify();
    let out = Props {
        k: g.k(),
        n: g.n(),
        m: g.m(),
        components: g.components().len(),
        connected: c.connected,
        cyclomatic: c.cyclomatic,
        hypertree: c.hypertree,
        unicyclic: c.unicyclic,
        bicyclic: c.bicyclic,
        linear: c.linear,
        power: c.power,
        girth: match c.girth {
            Girth::Finite(l) => l.into(),
            Girth::Infinite => "inf".into(),
        },
        max_pair_intersection: g.max_pair_intersection(),
        degrees: g.degrees(),
        dominating_vertex: dominating_vertex(&g),
        power_base: g
            .power_base()
            .map(|b| b.edges().iter().map(|&(a, b)| [a, b]).collect()),
        // absent past the canonical labeling vertex limit
        canonical_form: canonical_form(&g).ok().map(|f| f.to_string()),
    };
    emit(&args.out, &json(&out))
}

fn mv(args: &MoveArgs) -> Result<(), Failure> {
    let g = format::read(&args.file)?;
    let moves = format::parse_moves(&fs::read_to_string(&args.moves)?)?;
    let h = move_edges(&g, &moves)?;
    emit(&args.out, &format::serialize(&h, args.format))
}

fn enumerate(args: &EnumerateArgs) -> Result<(), Failure> {
    let mut filter = match args.cyclomatic {
        Some(c) => ClassFilter::cyclic(c),
        None => match args.class {
            ClassName::Connected => ClassFilter::connected(),
            ClassName::Hypertree => ClassFilter::hypertrees(),
            ClassName::Unicyclic => ClassFilter::unicyclic(),
            ClassName::Bicyclic => ClassFilter::bicyclic(),
        },
    };
    filter.linear = args.linear;
    filter.power = args.power;
    filter.girth = args.girth;
    let class = enumerate_class_with(args.k, args.m, &filter, &enum_options(args.seed)?)?;
    match &args.out_dir {
        None => emit(&args.out, &format::to_json_array(&class)),
        Some(dir) => {
            fs::create_dir_all(dir)?;
            let ext = match args.format {
                Format::Text => "txt",
                Format::Json => "json",
            };
            for (i, g) in class.iter().enumerate() {
                let path = dir.join(format!("class-{:04}.{ext}", i + 1));
                fs::write(path, format::serialize(g, args.format))?;
            }
            emit(&args.out, &format!("{}\n", class.len()))
        }
    }
}

fn verify(args: &VerifyArgs) -> Result<u8, Failure> {
    let params = ClaimParams {
        k: args.k,
        m: args.m,
        g: args.g,
        tolerance: args.tolerance,
        options: enum_options(args.seed)?,
    };
    let report = claims::verify(args.claim, &params)?;
    emit(&args.out, &report.to_json())?;
    Ok(report.verdict.exit_code())
}

fn conjecture(args: &ConjectureArgs) -> Result<(), Failure> {
    if args.m_from > args.m_to {
        return Err(Failure::usage("--m-from exceeds --m-to"));
    }
    let rows = conjecture_report(args.k, args.m_from..=args.m_to, args.tolerance)?;
    let mut buf = Vec::new();
    table::write_conjecture_csv(&rows, &mut buf).map_err(|e| Failure {
        code: EX_IOERR,
        message: e.to_string(),
    })?;
    emit(&args.out, &String::from_utf8(buf).expect("ASCII"))
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    match &cli.command {
        Command::Make(a) => make(a).map(|()| 0),
        Command::Rho(a) => rho(a).map(|()| 0),
        Command::Props(a) => props(a).map(|()| 0),
        Command::Move(a) => mv(a).map(|()| 0),
        Command::Enumerate(a) => enumerate(a).map(|()| 0),
        Command::Verify(a) => verify(a),
        Command::Conjecture(a) => conjecture(a).map(|()| 0),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EX_USAGE } else { 0 });
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("hyperspectral: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
