//! The `zonoracle` command-line tool.
//!
//! [`run`] does all the work and returns what would be printed, so the
//! binary is a thin wrapper and tests can drive commands in-process.

pub mod document;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use zonoracle::polygraph::{graph_of, small_faces_capped, DEFAULT_MAX_FACE_SIZE};
use zonoracle::summand::{decide_zonotope, greatest_zonotopal_summand};
use zonoracle::zonotope::enumerate_vertices;
use zonoracle::{GeneratorSet, PointSet, RationalPoint, ZonotopeDecision};

pub use document::{Document, Kind, ParseError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_NEGATIVE: i32 = 2;

/// Zonotope vertex enumeration, recognition and decomposition in exact
/// rational arithmetic.
#[derive(Debug, Parser)]
#[command(name = "zonoracle", version)]
pub struct Cli {
    /// Worker threads for the parallel LP tests (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Vertices of the zonotope spanned by a generators file.
    Vertices {
        #[command(flatten)]
        input: Input,
        /// Append each vertex's generator subset as a bitstring.
        #[arg(long)]
        xi: bool,
        /// Print only the summary line.
        #[arg(long)]
        count: bool,
    },
    /// Decide whether a vertices file describes a zonotope; exit 2 if not.
    Decide {
        #[command(flatten)]
        input: Input,
    },
    /// Split a polytope into its greatest zonotopal summand and residual.
    Summand {
        #[command(flatten)]
        input: Input,
        /// Write the summand's generators here instead of stdout.
        #[arg(long, value_name = "FILE")]
        generators_out: Option<PathBuf>,
        /// Write the residual's vertices here instead of stdout.
        #[arg(long, value_name = "FILE")]
        residual_out: Option<PathBuf>,
    },
    /// Edge graph of the convex hull of a point file.
    Graph {
        #[command(flatten)]
        input: Input,
    },
    /// Faces with at most K vertices, as row indices into the input.
    Faces {
        #[command(flatten)]
        input: Input,
        /// Largest face size K to report.
        #[arg(long, value_name = "K", default_value_t = DEFAULT_MAX_FACE_SIZE)]
        size: usize,
        /// Refuse sizes above this limit; enumeration is exponential in K.
        #[arg(long, value_name = "K", default_value_t = DEFAULT_MAX_FACE_SIZE)]
        max_face_size: usize,
    },
}

#[derive(Debug, Args)]
pub struct Input {
    /// Input file; `-` or absent reads standard input.
    pub file: Option<PathBuf>,
}

/// What a command printed and how it exited.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    fn input_error(message: impl std::fmt::Display) -> Self {
        Output { stderr: format!("error: {message}\n"), code: EXIT_INPUT, ..Default::default() }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut (dyn Read + Send)) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output { stderr: text, code: EXIT_INPUT, ..Default::default() }
            } else {
                Output { stdout: text, ..Default::default() }
            };
        }
    };
    match cli.threads {
        None => execute(cli.command, stdin),
        Some(0) => Output::input_error("--threads must be at least 1"),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| execute(cli.command, stdin)),
            Err(e) => Output::input_error(e),
        },
    }
}

fn execute(command: Command, stdin: &mut (dyn Read + Send)) -> Output {
    match command {
        Command::Vertices { input, xi, count } => with_input(&input, stdin, |doc| vertices(doc, xi, count)),
        Command::Decide { input } => with_input(&input, stdin, decide),
        Command::Summand { input, generators_out, residual_out } => with_input(&input, stdin, |doc| {
            summand(doc, generators_out.as_deref(), residual_out.as_deref())
        }),
        Command::Graph { input } => with_input(&input, stdin, graph),
        Command::Faces { input, size, max_face_size } => {
            with_input(&input, stdin, |doc| faces(doc, size, max_face_size))
        }
    }
}

type CommandResult = Result<Output, String>;

fn with_input(input: &Input, stdin: &mut (dyn Read + Send), f: impl FnOnce(Document) -> CommandResult) -> Output {
    let mut text = String::new();
    let read = match input.file.as_deref() {
        None => stdin.read_to_string(&mut text).map(|_| ()),
        Some(p) if p == Path::new("-") => stdin.read_to_string(&mut text).map(|_| ()),
        Some(p) => std::fs::read_to_string(p).map(|t| text = t),
    };
    if let Err(e) = read {
        return Output::input_error(e);
    }
    let name = input.file.as_deref().unwrap_or(Path::new("-")).display().to_string();
    match Document::parse(&text) {
        Err(e) => Output::input_error(format!("{name}: {e}")),
        Ok(doc) => f(doc).unwrap_or_else(|e| Output::input_error(format!("{name}: {e}"))),
    }
}

fn expect_kind(doc: &Document, kind: Kind) -> Result<(), String> {
    if doc.kind == kind {
        Ok(())
    } else {
        Err(format!("expected a {kind} file, found {}", doc.kind))
    }
}

fn point_set(doc: Document) -> Result<PointSet, String> {
    if doc.rows.is_empty() {
        return Err("no points".into());
    }
    PointSet::new(doc.dim, doc.rows).map_err(|e| e.to_string())
}

fn vertices(doc: Document, xi: bool, count: bool) -> CommandResult {
    expect_kind(&doc, Kind::Generators)?;
    let mut stderr = String::new();
    let given = doc.rows.len();
    let nonzero: Vec<RationalPoint> = doc.rows.into_iter().filter(|g| !g.is_zero()).collect();
    if nonzero.len() < given {
        writeln!(stderr, "warning: dropped {} zero generator(s)", given - nonzero.len()).unwrap();
    }
    let before = nonzero.len();
    let g = GeneratorSet::from_vectors(doc.dim, nonzero).map_err(|e| e.to_string())?;
    if g.len() < before {
        writeln!(stderr, "warning: merged parallel generators, {before} -> {}", g.len()).unwrap();
    }
    let records = enumerate_vertices(&g).map_err(|e| e.to_string())?;
    let summary = format!("n={} m={} d={}\n", records.len(), g.len(), g.dim());

    let mut stdout = String::new();
    if count {
        stdout.push_str(&summary);
    } else {
        writeln!(stdout, "{} {}", Kind::Vertices, g.dim()).unwrap();
        for r in &records {
            if xi {
                writeln!(stdout, "{} # {}", r.point, r.xi.to_bitstring()).unwrap();
            } else {
                writeln!(stdout, "{}", r.point).unwrap();
            }
        }
        stderr.push_str(&summary);
    }
    Ok(Output { stdout, stderr, code: EXIT_OK })
}

fn decide(doc: Document) -> CommandResult {
    expect_kind(&doc, Kind::Vertices)?;
    let dim = doc.dim;
    let v = point_set(doc)?;
    Ok(match decide_zonotope(&v).map_err(|e| e.to_string())? {
        ZonotopeDecision::Zonotope(g) => Output {
            stdout: Document::new(Kind::Generators, dim, g.generators().to_vec()).to_string(),
            ..Default::default()
        },
        ZonotopeDecision::NotZonotope(reason) => Output {
            stderr: format!("NotZonotope: {reason}\n"),
            code: EXIT_NEGATIVE,
            ..Default::default()
        },
    })
}

fn summand(doc: Document, generators_out: Option<&Path>, residual_out: Option<&Path>) -> CommandResult {
    expect_kind(&doc, Kind::Vertices)?;
    let dim = doc.dim;
    let v = point_set(doc)?;
    let dec = greatest_zonotopal_summand(&v).map_err(|e| e.to_string())?;
    let gens = Document::new(Kind::Generators, dim, dec.zono_generators.generators().to_vec()).to_string();
    let residual = Document::new(Kind::Vertices, dim, dec.residual_vertices).to_string();

    let mut stdout = String::new();
    for (text, target) in [(gens, generators_out), (residual, residual_out)] {
        match target {
            Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))?,
            None => stdout.push_str(&text),
        }
    }
    Ok(Output { stdout, ..Default::default() })
}

fn graph(doc: Document) -> CommandResult {
    let dim = doc.dim;
    let g = graph_of(&point_set(doc)?).map_err(|e| e.to_string())?;
    let edges = g.edges();
    let mut stdout = Document::new(Kind::Vertices, dim, g.vertices).to_string();
    writeln!(stdout, "edges {}", edges.len()).unwrap();
    for (i, j) in edges {
        writeln!(stdout, "{i} {j}").unwrap();
    }
    Ok(Output { stdout, ..Default::default() })
}

fn faces(doc: Document, k: usize, cap: usize) -> CommandResult {
    let faces = small_faces_capped(&point_set(doc)?, k, cap)
        .map_err(|e| e.to_string())?;
    let mut stdout = format!("faces {}\n", faces.len());
    for f in faces {
        let line: Vec<String> = f.indices().iter().map(usize::to_string).collect();
        writeln!(stdout, "{}", line.join(" ")).unwrap();
    }
    Ok(Output { stdout, ..Default::default() })
}
