//! The `opgraph` command line.
//!
//! Exit codes: 0 on success, 1 when `--strict` meets a sentence that cannot
//! be parsed, 2 for usage and I/O errors.

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::document::{compile, CompileOptions};
use crate::export::{export_csv, export_dot, export_graphml, export_json};
use crate::lexicon::Lexicon;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    #[value(name = "graphml")]
    GraphMl,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "opgraph",
    about = "Extract operation-process graphs from controlled-language text"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Extract elements and relations and emit them in the chosen format.
    Extract(RunConfig),
    /// Print the program version.
    Version,
}

#[derive(Debug, Clone, clap::Args)]
pub struct RunConfig {
    /// Input text file, or `-` for standard input.
    #[arg(value_name = "INPUT")]
    pub input_path: String,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Output file (directory for `--format csv`). Defaults to standard output.
    #[arg(long = "out", value_name = "PATH")]
    pub output_path: Option<PathBuf>,
    /// Fail on the first sentence that does not fit the grammar.
    #[arg(long)]
    pub strict: bool,
    /// Treat element surfaces that differ only in case as one node.
    #[arg(long)]
    pub normalize_case: bool,
    /// Extra lexicon entries, merged with the builtin lexicon.
    #[arg(long = "lexicon", value_name = "PATH")]
    pub lexicon_path: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(input_path: impl Into<String>, format: Format) -> Self {
        RunConfig {
            input_path: input_path.into(),
            format,
            output_path: None,
            strict: false,
            normalize_case: false,
            lexicon_path: None,
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn io_failure(path: &Path, err: io::Error) -> Failure {
    if err.kind() == io::ErrorKind::NotFound {
        usage(format!("no such file: {}", path.display()))
    } else {
        usage(format!("{}: {err}", path.display()))
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents).map_err(|e| io_failure(path, e))
}

fn execute(
    config: &RunConfig,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
) -> Result<(), Failure> {
    if config.format == Format::Csv && config.output_path.is_none() {
        return Err(usage("--format csv writes two files and needs --out DIR"));
    }

    let lexicon = match &config.lexicon_path {
        Some(path) => {
            let extra = Lexicon::from_path(path).map_err(|e| usage(e.to_string()))?;
            Lexicon::builtin_with(&extra)
        }
        None => Lexicon::builtin().clone(),
    };

    let text = if config.input_path == "-" {
        let mut buf = String::new();
        stdin
            .read_to_string(&mut buf)
            .map_err(|e| usage(format!("standard input: {e}")))?;
        buf
    } else {
        let path = Path::new(&config.input_path);
        std::fs::read_to_string(path).map_err(|e| io_failure(path, e))?
    };

    let doc = compile(
        &text,
        &lexicon,
        CompileOptions {
            strict: config.strict,
            normalize_case: config.normalize_case,
        },
    )
    .map_err(|e| Failure {
        code: EXIT_PARSE,
        message: e.to_string(),
    })?;

    let rendered = match config.format {
        Format::Json => export_json(&doc),
        Format::Dot => export_dot(&doc.graph),
        Format::GraphMl => export_graphml(&doc.graph),
        Format::Csv => {
            let dir = config.output_path.as_deref().expect("checked above");
            std::fs::create_dir_all(dir).map_err(|e| io_failure(dir, e))?;
            let tables = export_csv(&doc);
            write_file(&dir.join("elements.csv"), &tables.elements)?;
            write_file(&dir.join("relations.csv"), &tables.relations)?;
            return Ok(());
        }
    };
    match &config.output_path {
        Some(path) => write_file(path, &rendered),
        None => stdout
            .write_all(rendered.as_bytes())
            .map_err(|e| usage(format!("standard output: {e}"))),
    }
}

/// Runs `extract` with explicit streams; error text goes to `stderr`.
pub fn run_with_io(
    config: &RunConfig,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    match execute(config, stdin, stdout) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

pub fn run(config: &RunConfig) -> i32 {
    run_with_io(
        config,
        &mut io::stdin().lock(),
        &mut io::stdout().lock(),
        &mut io::stderr(),
    )
}

/// Parses `args` (program name first) and dispatches.
pub fn main_with_args<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(rendered.as_bytes())
            } else {
                stdout.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match cli.command {
        Command::Extract(config) => run_with_io(&config, stdin, stdout, stderr),
        Command::Version => {
            let _ = writeln!(stdout, "opgraph {}", crate::VERSION);
            EXIT_OK
        }
    }
}
