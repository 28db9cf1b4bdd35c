//! The `shellings` command line: argument parsing, dispatch and exit codes.
//!
//! Exit code 0 means the property holds (or the command succeeded), 1 that it
//! fails, 2 a usage or input error.

pub mod dot;
pub mod format;
pub mod suites;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::bruhat::{
    is_linear_extension, is_order_ideal, linear_extensions, BruhatElement, OrderKind,
};
use crate::error::Error;
use crate::matroid::{coxeter_violation, has_quasi_exchange, is_matroid, MatroidVerdict};
use crate::promotion::{evacuate, promote, GraphKind};
use crate::shelling::{find_shelling_order, isomorphism, shelling_witness};
use crate::subdivision::{barycentric, is_flag_shelling_order};
use crate::types::FacetSequence;
use format::{read_input, serialize_complex, serialize_sequence, FormatError, LineFacet, Parsed};
use suites::{run_suite, Suite, SuiteConfig};

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Core(#[from] Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

type CliResult = Result<Outcome, CliError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Outcome {
    Holds,
    Fails,
}

impl Outcome {
    fn from_bool(b: bool) -> Self {
        if b {
            Outcome::Holds
        } else {
            Outcome::Fails
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "shellings",
    version,
    about = "Shelling orders, Bruhat orders and Coxeter matroids on small universes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GraphArg {
    Dual,
    Hasse,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Gale,
    Conf,
    Perm,
}

impl From<OrderArg> for OrderKind {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Gale => OrderKind::Gale,
            OrderArg::Conf => OrderKind::Conf,
            OrderArg::Perm => OrderKind::Perm,
        }
    }
}

#[derive(clap::Args, Debug)]
struct Input {
    /// Facet file (`-` for standard input).
    file: PathBuf,
    /// Bruhat order to use; defaults to gale for sorted input, conf for tuples.
    #[arg(long, value_enum)]
    order: Option<OrderArg>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Whether the facets, in file order, form a shelling order.
    CheckShelling { file: PathBuf },
    /// Whether tuples, in file order, give a shelling order of their flag complex.
    CheckFlagShelling { file: PathBuf },
    /// Basis exchange axiom.
    CheckMatroid { file: PathBuf },
    /// Quasi-exchange axiom.
    CheckQuasiExchange { file: PathBuf },
    /// Maximality property over all permutations of the universe.
    CheckCoxeterMatroid(Input),
    /// Whether the facets form an order ideal of their ambient quotient.
    CheckOrderIdeal(Input),
    /// Whether the file order is a linear extension of the induced order.
    CheckLinearExtension(Input),
    /// Every linear extension of the induced order, one per line.
    ListExtensions {
        #[command(flatten)]
        input: Input,
        /// Stop after this many.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Search for a shelling order of the complex.
    FindShelling { file: PathBuf },
    /// Barycentric subdivision of a subset complex, as tuples.
    Barycentric { file: PathBuf },
    /// Promotion of the sequence in file order.
    Promote {
        #[arg(long, value_enum)]
        graph: GraphArg,
        #[command(flatten)]
        input: Input,
    },
    /// Evacuation of the sequence in file order.
    Evacuate {
        #[arg(long, value_enum)]
        graph: GraphArg,
        #[command(flatten)]
        input: Input,
    },
    /// Whether two labelled sequences differ by a relabelling of vertices.
    Isomorphic { a: PathBuf, b: PathBuf },
    /// Dual or Hasse graph in Graphviz format.
    ExportDot {
        #[arg(long, value_enum)]
        graph: GraphArg,
        #[command(flatten)]
        input: Input,
    },
    /// Run a verification sweep.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Facet bound for shelling-order corpora.
        #[arg(long, default_value_t = 5)]
        max_facets: usize,
        /// Random shelling orders added to corpora.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads (0 = all cores).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                2
            } else {
                let _ = write!(out, "{rendered}");
                0
            };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(Outcome::Holds) => 0,
        Ok(Outcome::Fails) => 1,
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn default_order(parsed: &Parsed, order: Option<OrderArg>) -> OrderKind {
    order.map(OrderKind::from).unwrap_or(match parsed {
        Parsed::Subsets(_) => OrderKind::Gale,
        Parsed::Tuples(_) => OrderKind::Conf,
    })
}

fn graph_kind(graph: GraphArg, order: OrderKind) -> GraphKind {
    match graph {
        GraphArg::Dual => GraphKind::Dual,
        GraphArg::Hasse => GraphKind::Hasse(order),
    }
}

fn read(path: &Path) -> Result<Parsed, FormatError> {
    read_input(path)
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    match command {
        Command::CheckShelling { file } => match read(&file)? {
            Parsed::Subsets(c) => check_shelling(&c, out),
            Parsed::Tuples(c) => check_shelling(&c, out),
        },
        Command::CheckFlagShelling { file } => {
            let c = read(&file)?.tuples()?;
            let ok = is_flag_shelling_order(&c);
            writeln!(
                out,
                "{}",
                if ok {
                    "flag shelling order"
                } else {
                    "not a flag shelling order"
                }
            )?;
            Ok(Outcome::from_bool(ok))
        }
        Command::CheckMatroid { file } => {
            let x = read(&file)?.subsets()?.support();
            report_verdict(is_matroid(&x), "matroid", out)
        }
        Command::CheckQuasiExchange { file } => {
            let x = read(&file)?.subsets()?.support();
            report_verdict(has_quasi_exchange(&x), "quasi-exchange", out)
        }
        Command::CheckCoxeterMatroid(input) => {
            let parsed = read(&input.file)?;
            let kind = default_order(&parsed, input.order);
            match parsed {
                Parsed::Subsets(c) => check_coxeter(&c, kind, out),
                Parsed::Tuples(c) => check_coxeter(&c, kind, out),
            }
        }
        Command::CheckOrderIdeal(input) => {
            let parsed = read(&input.file)?;
            let kind = default_order(&parsed, input.order);
            let ok = match parsed {
                Parsed::Subsets(c) => is_order_ideal(&c.support(), kind)?,
                Parsed::Tuples(c) => is_order_ideal(&c.support(), kind)?,
            };
            writeln!(
                out,
                "{}",
                if ok {
                    "order ideal"
                } else {
                    "not an order ideal"
                }
            )?;
            Ok(Outcome::from_bool(ok))
        }
        Command::CheckLinearExtension(input) => {
            let parsed = read(&input.file)?;
            let kind = default_order(&parsed, input.order);
            let ok = match parsed {
                Parsed::Subsets(c) => is_linear_extension(&c, &c.support(), kind)?,
                Parsed::Tuples(c) => is_linear_extension(&c, &c.support(), kind)?,
            };
            writeln!(
                out,
                "{}",
                if ok {
                    "linear extension"
                } else {
                    "not a linear extension"
                }
            )?;
            Ok(Outcome::from_bool(ok))
        }
        Command::ListExtensions { input, limit } => {
            let parsed = read(&input.file)?;
            let kind = default_order(&parsed, input.order);
            let limit = limit.unwrap_or(usize::MAX);
            match parsed {
                Parsed::Subsets(c) => list_extensions(&c, kind, limit, out),
                Parsed::Tuples(c) => list_extensions(&c, kind, limit, out),
            }
        }
        Command::FindShelling { file } => match read(&file)? {
            Parsed::Subsets(c) => find_shelling(&c, out),
            Parsed::Tuples(c) => find_shelling(&c, out),
        },
        Command::Barycentric { file } => {
            let x = read(&file)?.subsets()?.support();
            write!(out, "{}", serialize_complex(&barycentric(&x)?))?;
            Ok(Outcome::Holds)
        }
        Command::Promote { graph, input } => transform(input, graph, out, promote, promote),
        Command::Evacuate { graph, input } => transform(input, graph, out, evacuate, evacuate),
        Command::Isomorphic { a, b } => {
            let (a, b) = (read(&a)?.subsets()?, read(&b)?.subsets()?);
            match isomorphism(&a, &b)? {
                Some(sigma) => {
                    writeln!(out, "isomorphic via {sigma}")?;
                    Ok(Outcome::Holds)
                }
                None => {
                    writeln!(out, "not isomorphic")?;
                    Ok(Outcome::Fails)
                }
            }
        }
        Command::ExportDot { graph, input } => {
            let parsed = read(&input.file)?;
            let kind = graph_kind(graph, default_order(&parsed, input.order));
            let text = match parsed {
                Parsed::Subsets(c) => dot::export_dot(&c, kind)?,
                Parsed::Tuples(c) => dot::export_dot(&c, kind)?,
            };
            write!(out, "{text}")?;
            Ok(Outcome::Holds)
        }
        Command::Verify {
            suite,
            n,
            k,
            max_facets,
            samples,
            seed,
            jobs,
        } => {
            let mut cfg = SuiteConfig::new(suite);
            cfg.n = n.unwrap_or(cfg.n);
            cfg.k = k.unwrap_or(cfg.k);
            cfg.max_facets = max_facets;
            cfg.samples = samples;
            cfg.seed = seed;
            cfg.jobs = jobs;
            let report = run_suite(suite, &cfg)?;
            write!(out, "{}", report.summary())?;
            writeln!(err, "elapsed: {:.3}s", report.elapsed.as_secs_f64())?;
            Ok(Outcome::from_bool(report.holds()))
        }
    }
}

fn check_shelling<F: LineFacet>(c: &FacetSequence<F>, out: &mut dyn Write) -> CliResult {
    match shelling_witness(c) {
        Ok(_) => {
            writeln!(out, "shelling order")?;
            Ok(Outcome::Holds)
        }
        Err(f) => {
            writeln!(
                out,
                "not a shelling order: no certificate for i={} j={}",
                f.i, f.j
            )?;
            Ok(Outcome::Fails)
        }
    }
}

fn report_verdict(v: MatroidVerdict, what: &str, out: &mut dyn Write) -> CliResult {
    match v.witness {
        None => writeln!(out, "{what}: holds")?,
        Some(w) => writeln!(out, "{what}: fails at {w}")?,
    }
    Ok(Outcome::from_bool(v.holds))
}

fn check_coxeter<F: LineFacet + BruhatElement>(
    c: &FacetSequence<F>,
    kind: OrderKind,
    out: &mut dyn Write,
) -> CliResult {
    match coxeter_violation(&c.support(), kind)? {
        None => {
            writeln!(out, "coxeter matroid")?;
            Ok(Outcome::Holds)
        }
        Some(w) => {
            writeln!(
                out,
                "not a coxeter matroid: no unique maximum after acting by {w}"
            )?;
            Ok(Outcome::Fails)
        }
    }
}

fn list_extensions<F: LineFacet + BruhatElement>(
    c: &FacetSequence<F>,
    kind: OrderKind,
    limit: usize,
    out: &mut dyn Write,
) -> CliResult {
    for l in linear_extensions(&c.support(), kind)?.take(limit) {
        writeln!(out, "{l}")?;
    }
    Ok(Outcome::Holds)
}

fn find_shelling<F: LineFacet>(c: &FacetSequence<F>, out: &mut dyn Write) -> CliResult {
    match find_shelling_order(&c.support()) {
        Some(order) => {
            write!(out, "{}", serialize_sequence(&order))?;
            Ok(Outcome::Holds)
        }
        None => {
            writeln!(out, "no shelling order")?;
            Ok(Outcome::Fails)
        }
    }
}

type Transform<F> = fn(&FacetSequence<F>, GraphKind) -> crate::Result<FacetSequence<F>>;

fn transform(
    input: Input,
    graph: GraphArg,
    out: &mut dyn Write,
    on_subsets: Transform<crate::KSubset>,
    on_tuples: Transform<crate::FlagTuple>,
) -> CliResult {
    let parsed = read(&input.file)?;
    let kind = graph_kind(graph, default_order(&parsed, input.order));
    match parsed {
        Parsed::Subsets(c) => emit(&on_subsets(&c, kind)?, out),
        Parsed::Tuples(c) => emit(&on_tuples(&c, kind)?, out),
    }
}

fn emit<F: LineFacet>(c: &FacetSequence<F>, out: &mut dyn Write) -> CliResult {
    writeln!(out, "# {c}")?;
    write!(out, "{}", serialize_sequence(c))?;
    Ok(Outcome::Holds)
}
