use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use multiserial::oracle::DEFAULT_MAX_PATHS;
use multiserial::FieldSpec;
use multiserial_cli::{parse, run, Command, Options};

/// Special multiserial presentations, defining pairs of cycles and the
/// symmetric algebras they determine.
///
/// Exit status: 0 when every verdict passes, 1 on any FAIL, 2 on faults
/// (unreadable or malformed input, unusable data, exhausted budgets).
#[derive(Debug, Parser)]
#[command(name = "multiserial", version)]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    /// Input document with a [quiver] section and a [presentation] or [definingpair] section.
    file: PathBuf,
    /// Emit the report as JSON.
    #[arg(long)]
    json: bool,
    /// Write the pair file (symmetrize) or DOT text (dot) here.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Ground field: `rational` or `fp:P` for a prime P.
    #[arg(long, default_value = "rational")]
    field: FieldSpec,
    /// Path budget of the brute-force oracle.
    #[arg(long, value_name = "CAP", default_value_t = DEFAULT_MAX_PATHS)]
    max_paths: usize,
    /// For `dot` on a presentation, draw the enlarged quiver with return arrows.
    #[arg(long)]
    qstar: bool,
    /// Print nothing on success; the exit status carries the verdict.
    #[arg(long)]
    quiet: bool,
}

fn fault(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("multiserial: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let text = match fs::read_to_string(&cli.file) {
        Ok(t) => t,
        Err(e) => return fault(format!("{}: {e}", cli.file.display())),
    };
    let doc = match parse(&text) {
        Ok(d) => d,
        Err(e) => return fault(format!("{}: {e}", cli.file.display())),
    };
    let opts = Options { field: cli.field, max_paths: cli.max_paths, qstar: cli.qstar };
    let mut outcome = match run(cli.command, &doc, &opts) {
        Ok(o) => o,
        Err(e) => return fault(e),
    };

    let mut stdout_artifact = None;
    if let Some(art) = outcome.artifact.take() {
        match &cli.out {
            Some(path) => {
                if let Err(e) = fs::write(path, &art.text) {
                    return fault(format!("{}: {e}", path.display()));
                }
                outcome.report.set("written", path.display().to_string());
            }
            None if cli.command == Command::Dot && !cli.json => stdout_artifact = Some(art.text),
            None => outcome.report.set(art.key, art.text),
        }
    }

    let code = outcome.report.exit_code();
    if !cli.quiet {
        let rendered = match (stdout_artifact, cli.json) {
            (Some(dot), _) => dot,
            (None, true) => outcome.report.to_json(),
            (None, false) => outcome.report.to_text(),
        };
        let mut out = std::io::stdout().lock();
        if out.write_all(rendered.as_bytes()).and_then(|()| out.flush()).is_err() {
            return ExitCode::from(2);
        }
    }
    ExitCode::from(code as u8)
}
