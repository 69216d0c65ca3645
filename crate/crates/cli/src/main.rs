//! `qtoric`: command-line front end for the qtoric engine.

mod report;

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qtoric::{fixtures, parse_spec, GeometryError, PolytopeSpec};

const EXIT_USAGE: u8 = 2;
const EXIT_PARSE: u8 = 3;
const EXIT_GEOMETRY: u8 = 4;
const EXIT_INVARIANT: u8 = 5;

#[derive(Parser)]
#[command(
    name = "qtoric",
    version,
    about = "Exact combinatorics and Betti numbers of quasitoric spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct SeedArg {
    /// Seed for the generic height direction.
    #[arg(long, env = "QTORIC_SEED", default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline and every cross-check.
    Check {
        /// Spec file, or the name of a builtin fixture.
        file: String,
        #[command(flatten)]
        seed: SeedArg,
        /// Number of extra seeded directions whose index histograms must agree.
        #[arg(long, default_value_t = 8)]
        directions: u64,
    },
    /// Print the f- and h-vectors.
    Hvector { file: String },
    /// Betti numbers by the closed form and by the chart filtration.
    Betti {
        file: String,
        #[command(flatten)]
        seed: SeedArg,
    },
    /// Height direction, vertex order, indices and descending faces.
    Morse {
        file: String,
        #[command(flatten)]
        seed: SeedArg,
    },
    /// Chart group at one vertex.
    Group {
        file: String,
        /// Active facets of the vertex, 1-based, e.g. `1,3`.
        #[arg(long)]
        vertex: String,
    },
    /// Write the atlas document.
    Atlas {
        file: String,
        #[command(flatten)]
        seed: SeedArg,
        /// Output path; standard output when omitted.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// List builtin fixtures, or print one as a spec file.
    Examples {
        #[arg(long, value_name = "NAME")]
        emit: Option<String>,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Core(qtoric::Error),
    /// Cross-checks that failed; the report has already been printed.
    Failed(Vec<String>),
}

impl From<qtoric::Error> for CliError {
    fn from(e: qtoric::Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Failed(_) => EXIT_INVARIANT,
            CliError::Core(e) => match e {
                qtoric::Error::Num(_) | qtoric::Error::Parse { .. } => EXIT_PARSE,
                qtoric::Error::Geometry(g) => match g {
                    GeometryError::UnknownVertex(_) => EXIT_USAGE,
                    GeometryError::DirectionBudget { .. } | GeometryError::NonGeneric(..) => {
                        EXIT_INVARIANT
                    }
                    _ => EXIT_GEOMETRY,
                },
                qtoric::Error::Invariant(_) => EXIT_INVARIANT,
            },
        }
    }
}

/// A readable file wins; otherwise a builtin name, with or without `.poly`.
fn load(arg: &str) -> Result<PolytopeSpec, CliError> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{arg}: {e}")))?;
        let mut spec = parse_spec(&text).map_err(|e| match e {
            qtoric::Error::Parse { line, column, msg } => qtoric::Error::Parse {
                line,
                column,
                msg: format!("{arg}: {msg}"),
            },
            other => other,
        })?;
        if spec.name.is_none() {
            let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned());
            spec.name = stem;
        }
        return Ok(spec);
    }
    let name = arg.strip_suffix(".poly").unwrap_or(arg);
    fixtures::fixture(name)
        .ok_or_else(|| CliError::Usage(format!("{arg}: no such file or builtin fixture")))
}

/// Writes the report into `out`, which is printed even when a check fails.
fn run(cli: Cli, out: &mut String) -> Result<(), CliError> {
    match cli.command {
        Command::Check {
            file,
            seed,
            directions,
        } => {
            let spec = load(&file)?;
            let failures = report::check(out, &spec, seed.seed, directions)?;
            if !failures.is_empty() {
                return Err(CliError::Failed(failures));
            }
        }
        Command::Hvector { file } => report::hvector(out, &load(&file)?)?,
        Command::Betti { file, seed } => {
            if !report::betti(out, &load(&file)?, seed.seed)? {
                return Err(CliError::Failed(vec!["Betti methods disagree".into()]));
            }
        }
        Command::Morse { file, seed } => report::morse(out, &load(&file)?, seed.seed)?,
        Command::Group { file, vertex } => {
            let set = vertex
                .parse()
                .map_err(|e| CliError::Usage(format!("--vertex {vertex:?}: {e}")))?;
            report::group(out, &load(&file)?, set)?;
        }
        Command::Atlas {
            file,
            seed,
            out: path,
        } => {
            let a = qtoric::analyze(&load(&file)?, seed.seed)?;
            let doc = qtoric::atlas::emit_atlas(&a);
            match path {
                Some(p) => fs::write(&p, doc)
                    .map_err(|e| CliError::Usage(format!("{}: {e}", p.display())))?,
                None => out.push_str(&doc),
            }
        }
        Command::Examples { emit: Some(name) } => {
            let text = fixtures::fixture_text(&name)
                .ok_or_else(|| CliError::Usage(format!("unknown fixture {name:?}")))?;
            write!(out, "# {name}\n{text}").unwrap();
        }
        Command::Examples { emit: None } => report::examples(out),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let mut buf = String::new();
    let result = run(cli, &mut buf);
    let mut stdout = io::stdout().lock();
    if stdout
        .write_all(buf.as_bytes())
        .and_then(|()| stdout.flush())
        .is_err()
    {
        return ExitCode::from(EXIT_USAGE);
    }
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            match &e {
                CliError::Usage(msg) => eprintln!("error: {msg}"),
                CliError::Core(err) => eprintln!("error: {err}"),
                CliError::Failed(list) => {
                    for f in list {
                        eprintln!("FAILED: {f}");
                    }
                }
            }
            ExitCode::from(e.exit_code())
        }
    }
}
