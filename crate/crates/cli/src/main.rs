//! `framekit`: JSON reports and DOT diagrams for finite frames, spectra and
//! tensor-triangular presentations.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails (the JSON carries a witness),
//! 2 on unreadable or invalid input and on usage errors.

mod load;
mod order;
mod report;
mod search;
mod ttg;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use framekit::corpus::DEFAULT_SEED;
use framekit::frame::Arity;

use report::{InputError, Report};

fn parse_arity(s: &str) -> Result<Arity, String> {
    s.parse().map_err(|e: framekit::frame::FrameError| e.to_string())
}

#[derive(Parser)]
#[command(name = "framekit", version, about = "Finite frames, spectra and tensor-triangular supports")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lattice and distributivity report for a poset, with a witness on failure.
    Check { poset: PathBuf },
    /// The k-ideals of a poset with a least element.
    Idl {
        poset: PathBuf,
        /// An integer >= 2 or `omega`.
        #[arg(long, value_parser = parse_arity)]
        arity: Arity,
    },
    /// Points (prime elements) of a frame.
    Points { poset: PathBuf },
    /// The point space of a frame with its topology.
    Space { poset: PathBuf },
    /// Hochster dual of a frame.
    Dual { poset: PathBuf },
    /// Heights of points and dimensions of elements.
    Dim { poset: PathBuf },
    /// Checks a chain of frame morphisms given as `.frmmap` files, in order.
    Refine {
        #[arg(required = true)]
        maps: Vec<PathBuf>,
    },
    /// Computations on a `.ttg` presentation.
    Ttg {
        file: PathBuf,
        #[arg(long, global = true, default_value = "omega", value_parser = parse_arity)]
        arity: Arity,
        #[command(subcommand)]
        verb: TtgVerb,
    },
    /// DOT output for a `.poset`, `.space` or `.ttg` file.
    Render {
        file: PathBuf,
        #[arg(long, required = true)]
        dot: bool,
        /// Render the specialization order of the points instead.
        #[arg(long)]
        spectrum: bool,
        /// Arity for `.ttg` files.
        #[arg(long, default_value = "omega", value_parser = parse_arity)]
        arity: Arity,
    },
    /// Seeded randomized searches.
    Search {
        kind: SearchKind,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum TtgVerb {
    /// Radical ideals and the lemmas about them.
    Rad,
    /// The Rad frame as an order.
    Frame,
    /// The spectrum: points of the Rad frame with their topology.
    Spc,
    /// Validates a support datum and builds its factorization through Rad.
    Support { datum: PathBuf },
    /// Quotient by the radical ideal generated by the given objects.
    Quotient {
        #[arg(required = true)]
        generators: Vec<String>,
    },
    /// Extension and restriction between a sub-object set at `--arity` and all objects at `--to`.
    Extres {
        #[arg(long, value_delimiter = ',', required = true)]
        sub: Vec<String>,
        #[arg(long, default_value = "omega", value_parser = parse_arity)]
        to: Arity,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SearchKind {
    Tensor,
    Bijpoints,
}

enum Output {
    Json(Report),
    Text(String),
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Check { .. } => "check",
        Command::Idl { .. } => "idl",
        Command::Points { .. } => "points",
        Command::Space { .. } => "space",
        Command::Dual { .. } => "dual",
        Command::Dim { .. } => "dim",
        Command::Refine { .. } => "refine",
        Command::Ttg { .. } => "ttg",
        Command::Render { .. } => "render",
        Command::Search { .. } => "search",
    }
}

fn run(command: &Command) -> Result<Output, InputError> {
    use Output::Json;
    Ok(match command {
        Command::Check { poset } => Json(order::check(poset)?),
        Command::Idl { poset, arity } => Json(order::idl(poset, *arity)?),
        Command::Points { poset } => Json(order::points_cmd(poset)?),
        Command::Space { poset } => Json(order::space(poset)?),
        Command::Dual { poset } => Json(order::dual(poset)?),
        Command::Dim { poset } => Json(order::dim(poset)?),
        Command::Refine { maps } => Json(order::refine(maps)?),
        Command::Ttg { file, arity, verb } => Json(match verb {
            TtgVerb::Rad => ttg::rad(file, *arity)?,
            TtgVerb::Frame => ttg::frame(file, *arity)?,
            TtgVerb::Spc => ttg::spectrum(file, *arity)?,
            TtgVerb::Support { datum } => ttg::support(file, datum, *arity)?,
            TtgVerb::Quotient { generators } => ttg::quotient(file, generators, *arity)?,
            TtgVerb::Extres { sub, to } => ttg::extres(file, sub, *arity, *to)?,
        }),
        Command::Render { file, spectrum, arity, .. } => Output::Text(order::render(file, *spectrum, *arity)?),
        Command::Search { kind, count, seed } => Json(match kind {
            SearchKind::Tensor => search::tensor(*count, *seed)?,
            SearchKind::Bijpoints => search::bijpoints(*count, *seed)?,
        }),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(Output::Json(report)) => {
            print!("{}", report.to_json());
            ExitCode::from(if report.failed() { 1 } else { 0 })
        }
        Ok(Output::Text(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            print!("{}", e.to_json(command_name(&cli.command)));
            ExitCode::from(2)
        }
    }
}
