//! The `scaprop` command line.
//!
//! Exit codes: 0 success (or equal), 1 not equal / self-test failure,
//! 2 type error, 3 parse error, 4 backend error, 5 usage or I/O error.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use scaprop_core::boxes::boxed_normal_form;
use scaprop_core::scalable::{multiplex, reconstitute, strip, structure_normal_form};
use scaprop_core::wire::{normalize_wiring, wiring_from_normal_form};
use scaprop_core::{languages, Diagram, Error, GraphicalLanguage, Node};

use crate::backend::{self, Backend};
use crate::doc::{self, DocError};
use crate::dsl::{self, DslError};
use crate::render;

pub const EXIT_OK: i32 = 0;
pub const EXIT_UNEQUAL: i32 = 1;
pub const EXIT_TYPE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_BACKEND: i32 = 4;
pub const EXIT_USAGE: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "scaprop", version, about = "Scalable colored props: check, evaluate and compare diagrams")]
pub struct Cli {
    /// Signature document (JSON).
    #[arg(long, global = true, value_name = "FILE")]
    pub sig: Option<PathBuf>,
    /// Language document (JSON), or one of P, M, Mop, B, H, IH.
    #[arg(long, global = true, value_name = "FILE")]
    pub lang: Option<String>,
    /// perm, fun, nat, int, bool, sat2, f2, linrel, zx, zh or zw.
    #[arg(long, global = true, value_name = "NAME")]
    pub backend: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Typecheck and print `dom -> cod`.
    Check { expr: String },
    /// Print the backend value.
    Eval { expr: String },
    /// Compare two diagrams in the backend.
    Eq { lhs: String, rhs: String },
    /// Print the wiring, boxed or structure normal form.
    Normalize { expr: String },
    /// Erase dividers and gatherers.
    Strip { expr: String },
    /// Multiplex a diagram over simple wires k times.
    Scale { expr: String, k: usize },
    /// Emit a graph of the diagram.
    Render {
        expr: String,
        #[arg(long, default_value = "dot")]
        format: String,
    },
    /// Run randomized consistency checks (seed from SCAPROP_SEED).
    Selftest {
        #[arg(long, default_value_t = 100)]
        count: usize,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error(transparent)]
    Dsl(#[from] DslError),
    #[error("{0}")]
    Core(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => EXIT_USAGE,
            CliError::Dsl(DslError::Syntax { .. }) => EXIT_PARSE,
            CliError::Dsl(DslError::Type { .. }) => EXIT_TYPE,
            CliError::Core(e) => core_exit_code(e),
        }
    }
}

/// Whether a library error is a typing problem (2) or a backend problem (4).
pub fn core_exit_code(e: &Error) -> i32 {
    match e {
        Error::MissingAssignment(_)
        | Error::ArityMismatch { .. }
        | Error::ComposeMismatch(..)
        | Error::BackendMismatch { .. }
        | Error::BadArity(_)
        | Error::NegativeEntry(_)
        | Error::DimensionMismatch(_)
        | Error::NotInSemiring(..) => EXIT_BACKEND,
        _ => EXIT_TYPE,
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code. Values go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn read_file(path: &std::path::Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn doc_error(path: &str, e: DocError) -> CliError {
    CliError::Io {
        path: path.to_string(),
        message: e.to_string(),
    }
}

/// The language terms are parsed against.
pub fn resolve_language(cli: &Cli) -> Result<GraphicalLanguage, CliError> {
    match (&cli.lang, &cli.sig) {
        (Some(_), Some(_)) => Err(CliError::Usage("--sig and --lang are mutually exclusive".into())),
        (Some(lang), None) => {
            let path = std::path::Path::new(lang);
            if !path.exists() {
                if let Some(l) = languages::by_name(lang) {
                    return Ok(l);
                }
            }
            let text = read_file(path)?;
            doc::load_language(&text).map_err(|e| doc_error(lang, e))
        }
        (None, Some(sig)) => {
            let text = read_file(sig)?;
            let sig_doc = doc::load_signature(&text).map_err(|e| doc_error(&sig.display().to_string(), e))?;
            Ok(GraphicalLanguage::free(sig_doc))
        }
        (None, None) => {
            let name = cli
                .backend
                .as_deref()
                .and_then(Backend::default_language)
                .unwrap_or("IH");
            Ok(languages::by_name(name).expect("built-in language"))
        }
    }
}

fn resolve_backend(cli: &Cli) -> Result<Backend, CliError> {
    let name = cli
        .backend
        .as_deref()
        .ok_or_else(|| CliError::Usage("this command needs --backend NAME".into()))?;
    Backend::by_name(name).ok_or_else(|| {
        CliError::Usage(format!(
            "unknown backend `{name}` (expected one of {})",
            backend::NAMES.join(", ")
        ))
    })
}

/// The normal form matching the shape of `d`: wiring normal form for wire
/// terms, boxed normal form for box terms, structure normal form otherwise.
pub fn normal_form(d: &Diagram) -> Result<Diagram, Error> {
    if d.is_wire_term() {
        return Ok(wiring_from_normal_form(&normalize_wiring(d)?));
    }
    if d.count(|n| matches!(n, Node::Box(_))) > 0 {
        return boxed_normal_form(d);
    }
    reconstitute(&structure_normal_form(d)?)
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let lang = resolve_language(cli)?;
    let sig = lang.signature();
    let parse = |text: &str| dsl::parse(text, sig).map_err(CliError::from);
    let io = |r: std::io::Result<()>| {
        r.map_err(|e| CliError::Io {
            path: "<stdout>".into(),
            message: e.to_string(),
        })
    };
    match &cli.command {
        Command::Check { expr } => {
            let d = parse(expr)?;
            io(writeln!(out, "{} -> {}", dsl::print_obj(d.dom()), dsl::print_obj(d.cod())))?;
            Ok(EXIT_OK)
        }
        Command::Eval { expr } => {
            let backend = resolve_backend(cli)?;
            let d = parse(expr)?;
            io(writeln!(out, "{}", backend.evaluate(&d)?))?;
            Ok(EXIT_OK)
        }
        Command::Eq { lhs, rhs } => {
            let backend = resolve_backend(cli)?;
            let (a, b) = (parse(lhs)?, parse(rhs)?);
            let c = backend.compare(&a, &b)?;
            if c.equal {
                io(writeln!(out, "equal"))?;
                return Ok(EXIT_OK);
            }
            if c.same_type {
                io(writeln!(out, "not equal"))?;
            } else {
                io(writeln!(
                    out,
                    "not equal: types {} -> {} and {} -> {}",
                    dsl::print_obj(a.dom()),
                    dsl::print_obj(a.cod()),
                    dsl::print_obj(b.dom()),
                    dsl::print_obj(b.cod())
                ))?;
            }
            io(writeln!(out, "lhs: {}", c.lhs))?;
            io(writeln!(out, "rhs: {}", c.rhs))?;
            Ok(EXIT_UNEQUAL)
        }
        Command::Normalize { expr } => {
            let d = parse(expr)?;
            io(writeln!(out, "{}", dsl::pretty(&normal_form(&d)?)))?;
            Ok(EXIT_OK)
        }
        Command::Strip { expr } => {
            let d = parse(expr)?;
            io(writeln!(out, "{}", dsl::pretty(&strip(&d)?)))?;
            Ok(EXIT_OK)
        }
        Command::Scale { expr, k } => {
            let d = parse(expr)?;
            if *k == 0 {
                return Err(CliError::Usage("k must be positive".into()));
            }
            io(writeln!(out, "{}", dsl::print(&multiplex(&d, *k)?)))?;
            Ok(EXIT_OK)
        }
        Command::Render { expr, format } => {
            if format != "dot" {
                return Err(CliError::Usage(format!("unsupported format `{format}` (only dot)")));
            }
            let d = parse(expr)?;
            io(write!(out, "{}", render::to_dot(&d)))?;
            Ok(EXIT_OK)
        }
        Command::Selftest { count } => Ok(crate::selftest::run(*count, crate::gen::env_seed(0), out)),
    }
}
