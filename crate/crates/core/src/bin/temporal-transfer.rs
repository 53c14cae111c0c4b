use std::io::{self, BufReader};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use temporal_transfer::calendar::CalendarDate;
use temporal_transfer::cli::{run, Mode, OutputFormat, RunConfig, EXIT_CONFIG};
use temporal_transfer::generation::DateStyle;
use temporal_transfer::transfer::{Dialect, Domain, TransferConfig};

/// Translate romanized Japanese temporal expressions into English, one per line.
#[derive(Debug, Parser)]
#[command(version)]
struct Args {
    #[arg(long, value_enum, env = "TEMPORAL_TRANSFER_DIALECT", default_value = "american")]
    dialect: Dialect,
    #[arg(long, value_enum, env = "TEMPORAL_TRANSFER_STYLE", default_value = "month-cardinal")]
    style: DateStyle,
    #[arg(long, value_enum, env = "TEMPORAL_TRANSFER_DOMAIN", default_value = "general")]
    domain: Domain,
    /// Report date (YYYY-MM-DD); overrides a DATE: header line.
    #[arg(long, env = "TEMPORAL_TRANSFER_REFERENCE_DATE")]
    reference_date: Option<CalendarDate>,
    /// Lexicon file replacing the built-in one.
    #[arg(long, env = "TEMPORAL_TRANSFER_LEXICON")]
    lexicon: Option<PathBuf>,
    /// Market holidays, one YYYY-MM-DD per line.
    #[arg(long, env = "TEMPORAL_TRANSFER_HOLIDAYS")]
    holidays: Option<PathBuf>,
    #[arg(long, value_enum, env = "TEMPORAL_TRANSFER_FORMAT", default_value = "text")]
    format: OutputFormat,
    /// Drop optional "on" before weekdays (American usage).
    #[arg(long, env = "TEMPORAL_TRANSFER_NO_OPTIONAL_ON")]
    no_optional_on: bool,
    #[arg(long, env = "TEMPORAL_TRANSFER_SPELL_NUMBERS")]
    spell_numbers: bool,
    #[arg(long, value_enum, env = "TEMPORAL_TRANSFER_MODE", default_value = "batch")]
    mode: Mode,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let config = RunConfig {
        transfer: TransferConfig {
            dialect: args.dialect,
            date_style: args.style,
            domain: args.domain,
            reference_date: args.reference_date,
            emit_optional_on: !args.no_optional_on,
            spell_numbers: args.spell_numbers,
            ..TransferConfig::default()
        },
        lexicon_path: args.lexicon,
        holidays_path: args.holidays,
        output_format: args.format,
        mode: args.mode,
    };
    let stdin = BufReader::new(io::stdin().lock());
    let status = run(&config, stdin, &mut io::stdout().lock(), &mut io::stderr().lock());
    match status {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("temporal-transfer: {e}");
            ExitCode::from(EXIT_CONFIG as u8)
        }
    }
}
