//! Line-oriented front end shared by batch and interactive modes.

use std::fs;
use std::io::{self, BufRead, Write};
use std::path::PathBuf;

use serde::Serialize;
use thiserror::Error;

use crate::calendar::{load_holidays, CalendarError, ReportHeader, TradingCalendar};
use crate::generation::Preposition;
use crate::pipeline::{Engine, Translation};
use crate::semantics::{load_lexicon, Lexicon, LexiconError};
use crate::transfer::{Determiner, Domain, EnglishTemporalStructure, TransferConfig, TransferError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 1;
pub const EXIT_LINE_FAILED: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    JsonLines,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Mode {
    #[default]
    Batch,
    Repl,
}

#[derive(Debug, Clone, Default)]
pub struct RunConfig {
    pub transfer: TransferConfig,
    /// Replaces the built-in lexicon when set.
    pub lexicon_path: Option<PathBuf>,
    pub holidays_path: Option<PathBuf>,
    pub output_format: OutputFormat,
    pub mode: Mode,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: io::Error },
    #[error("{path}: {source}")]
    Lexicon { path: PathBuf, source: LexiconError },
    #[error("{path}: {source}")]
    Holidays { path: PathBuf, source: CalendarError },
    #[error("report header: {0}")]
    Header(CalendarError),
    #[error(transparent)]
    Config(#[from] TransferError),
    #[error(transparent)]
    Io(#[from] io::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OutputRecord {
    pub input: String,
    pub output: String,
    pub structure_kind: String,
    pub determiner: Option<Determiner>,
    pub preposition: Preposition,
    pub diagnostics: Vec<String>,
}

impl OutputRecord {
    fn blank() -> Self {
        OutputRecord {
            input: String::new(),
            output: String::new(),
            structure_kind: String::new(),
            determiner: None,
            preposition: Preposition::Bare,
            diagnostics: Vec::new(),
        }
    }

    fn success(input: &str, t: Translation) -> Self {
        OutputRecord {
            input: input.to_string(),
            output: t.realization.text,
            structure_kind: t.structure.kind_name().to_string(),
            determiner: t.realization.determiner,
            preposition: t.realization.preposition_used,
            diagnostics: t.realization.diagnostics,
        }
    }

    fn failure(input: &str, message: String) -> Self {
        OutputRecord {
            input: input.to_string(),
            output: input.to_string(),
            structure_kind: EnglishTemporalStructure::Passthrough(String::new()).kind_name().to_string(),
            determiner: None,
            preposition: Preposition::Bare,
            diagnostics: vec![message],
        }
    }
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Read { path: path.clone(), source })
}

fn load(config: &RunConfig) -> Result<(Option<Lexicon>, TradingCalendar), CliError> {
    let lexicon = match &config.lexicon_path {
        Some(path) => Some(
            load_lexicon(&read(path)?).map_err(|source| CliError::Lexicon { path: path.clone(), source })?,
        ),
        None => None,
    };
    let calendar = match &config.holidays_path {
        Some(path) => TradingCalendar::with_holidays(
            load_holidays(&read(path)?).map_err(|source| CliError::Holidays { path: path.clone(), source })?,
        ),
        None => TradingCalendar::default(),
    };
    Ok((lexicon, calendar))
}

/// Translates one line into its record; the flag is false for a failed line.
pub fn process_line(engine: &Engine<'_>, line: &str) -> (OutputRecord, bool) {
    let input = line.trim();
    if input.is_empty() {
        return (OutputRecord::blank(), true);
    }
    match engine.translate(input) {
        Ok(t) => (OutputRecord::success(input, t), true),
        Err(e) => (OutputRecord::failure(input, e.to_string()), false),
    }
}

fn emit(record: &OutputRecord, format: OutputFormat, line_no: usize, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<()> {
    match format {
        OutputFormat::Text => {
            writeln!(out, "{}", record.output)?;
            for d in &record.diagnostics {
                writeln!(err, "line {line_no}: {d}")?;
            }
        }
        OutputFormat::JsonLines => {
            let json = serde_json::to_string(record).map_err(io::Error::other)?;
            writeln!(out, "{json}")?;
        }
    }
    Ok(())
}

/// Runs the line protocol over `input` and returns the process exit status.
///
/// In the stock domain a first line of the form `DATE: YYYY-MM-DD[ hh:mm]`
/// supplies the reference date unless one was already configured; it
/// produces no record.
pub fn run(config: &RunConfig, input: impl BufRead, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let (owned_lexicon, calendar) = load(config)?;
    let lexicon = owned_lexicon.as_ref().unwrap_or_else(|| Lexicon::builtin());
    let mut transfer = config.transfer.clone();
    let repl = config.mode == Mode::Repl;

    let mut lines = input.lines().peekable();
    if transfer.domain == Domain::Stock {
        if let Some(Ok(first)) = lines.peek() {
            if let Some(header) = ReportHeader::parse_line(first).map_err(CliError::Header)? {
                transfer.reference_date.get_or_insert(header.report_date);
                lines.next();
            }
        }
    }
    let engine = Engine::new(lexicon, transfer, calendar)?;

    let mut status = EXIT_OK;
    let mut line_no = 0;
    loop {
        if repl {
            write!(err, "> ")?;
            err.flush()?;
        }
        let Some(line) = lines.next() else { break };
        let line = line?;
        line_no += 1;
        let (record, ok) = process_line(&engine, &line);
        if !ok {
            status = EXIT_LINE_FAILED;
        }
        emit(&record, config.output_format, line_no, out, err)?;
        if repl {
            out.flush()?;
        }
    }
    if repl {
        writeln!(err)?;
    }
    out.flush()?;
    Ok(status)
}
