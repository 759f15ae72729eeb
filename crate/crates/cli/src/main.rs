use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use idunit::fplus::build_fplus;
use idunit::greens::{eggbox_dot, eggbox_text};
use idunit::suites::{default_corpus, fplus_suite, lemma_suite, shape_suite};
use idunit::{
    apply_functor, build_lattice, classify_shape, emit_hasse, greens, parse_builtin, parse_product,
    Error, FiniteMonoid, FunctorId, HasseFormat, MonoidRef, RunReport, SubSet,
};

#[derive(Parser)]
#[command(name = "idunit", version, about = "Idempotent and unit functors on monoids")]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Write the main output to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Output format for lattices and eggbox diagrams.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Text,
}

impl From<Format> for HasseFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Dot => HasseFormat::Dot,
            Format::Text => HasseFormat::Text,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Type, stability and lattice sizes of a monoid.
    Classify(Source),
    /// Hasse diagram of the lattice of functor values.
    Lattice {
        #[command(flatten)]
        source: Source,
        /// Include Q, P, PL and PR.
        #[arg(long)]
        enhanced: bool,
    },
    /// The submonoid X(M) for one functor X.
    Functor {
        /// One of O, E, G, GL, GR, GLR, F, FL, FR, FLR, Q, P, PL, PR, I.
        functor: String,
        #[command(flatten)]
        source: Source,
    },
    /// Eggbox diagram of Green's relations (finite monoids only).
    Greens(Source),
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Lemmas,
    Fplus,
    Shapes,
    All,
}

#[derive(Args)]
#[command(group(ArgGroup::new("monoid").required(true)))]
struct Source {
    /// JSON document with `order`, `table` and optional `identity` and `names`.
    #[arg(long, group = "monoid", value_name = "PATH")]
    file: Option<PathBuf>,
    /// A builtin such as `bicyclic`, `cyclic:3` or `Tn:3`.
    #[arg(long, group = "monoid", value_name = "NAME[:K]")]
    builtin: Option<String>,
    /// Comma-separated builtins, e.g. `cyclic:2,chain:2,nat,bicyclic`.
    #[arg(long, group = "monoid", value_name = "SPEC,...")]
    product: Option<String>,
    /// The 15-element monoid of functors.
    #[arg(long, group = "monoid")]
    fplus: bool,
    /// Adjoin a zero to the selected monoid.
    #[arg(long)]
    adjoin_zero: bool,
}

/// Failures that are not check failures: bad input, IO, unsupported backends.
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

impl Source {
    fn load(&self) -> Result<MonoidRef, Failure> {
        let base = if let Some(path) = &self.file {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure(format!("{}: {e}", path.display())))?;
            let m = FiniteMonoid::from_json(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
            MonoidRef::finite(m)
        } else if let Some(spec) = &self.builtin {
            parse_builtin(spec)?
        } else if let Some(spec) = &self.product {
            parse_product(spec)?
        } else {
            MonoidRef::finite(build_fplus())
        };
        if self.adjoin_zero {
            Ok(base.adjoin_zero()?)
        } else {
            Ok(base)
        }
    }
}

/// What a command produced: a report, plus an optional document (DOT or text)
/// that goes to `--out` or stdout.
struct Output {
    report: RunReport,
    document: Option<String>,
}

fn classify(src: &Source, command: String) -> Result<Output, Failure> {
    let m = src.load()?;
    let shape = classify_shape(&m)?;
    let mut report = RunReport::new(command);
    report.fact("monoid", m.describe());
    report.fact("type", &shape.monoid_type);
    report.fact("stable", shape.stable);
    report.fact("|L|", shape.actual_nodes);
    report.fact("|L+|", shape.actual_enhanced_nodes);
    report.fact("shape", &shape.shape_id);
    Ok(Output { report, document: None })
}

fn lattice(src: &Source, enhanced: bool, format: Format, command: String) -> Result<Output, Failure> {
    let m = src.load()?;
    let lat = build_lattice(&m, enhanced)?;
    let mut report = RunReport::new(command);
    report.fact("shape", lat.shape_id());
    report.fact("nodes", lat.len());
    report.fact("edges", lat.hasse.len());
    Ok(Output {
        report,
        document: Some(emit_hasse(&lat, format.into())),
    })
}

fn functor(name: &str, src: &Source, command: String) -> Result<Output, Failure> {
    let x: FunctorId = name.parse()?;
    let m = src.load()?;
    let value = apply_functor(x, &m)?;
    let mut report = RunReport::new(command);
    report.fact("functor", x);
    report.fact("value", value.describe());
    if let Some(n) = value.len() {
        report.fact("size", n);
    }
    if let SubSet::Finite(v) = &value.set {
        let idx: Vec<String> = v.iter().map(u32::to_string).collect();
        report.fact("indices", idx.join(" "));
    }
    Ok(Output { report, document: None })
}

fn greens_cmd(src: &Source, format: Format, command: String) -> Result<Output, Failure> {
    let m = src.load()?;
    let finite = m.materialize().ok_or_else(|| {
        Failure(
            Error::BackendUnsupported(format!("Green's relations need a finite monoid, got {}", m.describe()))
                .to_string(),
        )
    })?;
    let g = greens(&finite);
    let mut report = RunReport::new(command);
    report.fact("order", finite.order());
    report.fact("D-classes", g.d.len());
    let sizes: Vec<String> = g.d.sizes().iter().map(usize::to_string).collect();
    report.fact("D-class sizes", sizes.join("/"));
    report.fact("H-classes", g.h.len());
    report.fact("J-trivial", g.is_j_trivial());
    let document = match format {
        Format::Text => eggbox_text(&finite, &g),
        Format::Dot => eggbox_dot(&finite, &g),
    };
    Ok(Output {
        report,
        document: Some(document),
    })
}

fn verify(suite: Suite, command: String) -> Result<Output, Failure> {
    let mut report = RunReport::new(command);
    if matches!(suite, Suite::Lemmas | Suite::All) {
        report.extend(lemma_suite(&default_corpus())?);
    }
    if matches!(suite, Suite::Shapes | Suite::All) {
        report.extend(shape_suite()?);
    }
    if matches!(suite, Suite::Fplus | Suite::All) {
        report.extend(fplus_suite()?);
    }
    Ok(Output { report, document: None })
}

fn write_out(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn run(cli: &Cli, command: String) -> Result<i32, Failure> {
    let output = match &cli.command {
        Command::Classify(src) => classify(src, command)?,
        Command::Lattice { source, enhanced } => lattice(source, *enhanced, cli.format, command)?,
        Command::Functor { functor: x, source } => functor(x, source, command)?,
        Command::Greens(src) => greens_cmd(src, cli.format, command)?,
        Command::Verify { suite } => verify(*suite, command)?,
    };
    let Output { mut report, document } = output;

    // A document goes to --out when given. Otherwise it is the whole of stdout
    // in text mode, or a field of the JSON report.
    let mut primary = None;
    match (&document, &cli.out) {
        (Some(doc), Some(path)) => {
            write_out(path, doc)?;
            report.fact("written", path.display());
        }
        (Some(doc), None) if cli.json => report.fact("document", doc),
        (Some(doc), None) => primary = Some(doc.clone()),
        (None, _) => {}
    }
    let rendered = if cli.json {
        let mut s = serde_json::to_string_pretty(&report).map_err(|e| Failure(e.to_string()))?;
        s.push('\n');
        s
    } else {
        report.to_string()
    };
    match (primary, &cli.out) {
        (Some(doc), _) => print!("{doc}"),
        (None, Some(path)) if document.is_none() => write_out(path, &rendered)?,
        (None, _) => print!("{rendered}"),
    }
    Ok(report.exit_status)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    match run(&cli, command) {
        Ok(0) => ExitCode::SUCCESS,
        Ok(_) => ExitCode::from(1),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
