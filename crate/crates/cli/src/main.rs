use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use knotfog::acceptance::run_all;
use knotfog::report::{family_rows, family_table, FamilyTableError};
use knotfog::{parse, Report};

#[derive(Parser)]
#[command(name = "knotfog", version, about = "Knot invariants and first-order genus bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classical invariants and the g1 interval of one expression.
    Invariants {
        /// e.g. "wh0(kfam(3))" or "trefoil # fig8"
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Whitehead doubles wh0(kfam(n)) for n = 1..=k.
    FamilyTable {
        #[arg(long = "n", value_name = "K", allow_negative_numbers = true)]
        n: i64,
        #[arg(long)]
        json: bool,
    },
    /// Run every acceptance check.
    Selftest,
}

const USAGE: u8 = 2;

// A closed pipe (e.g. `| head`) is not an error worth a panic.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn invariants(text: &str, json: bool) -> ExitCode {
    let e = match parse(text) {
        Ok(e) => e,
        Err(err) => {
            eprintln!("error: {err}");
            eprintln!("  {text}");
            eprintln!("  {}^", " ".repeat(text[..err.pos.min(text.len())].chars().count()));
            return ExitCode::from(USAGE);
        }
    };
    let report = Report::evaluate(&e);
    if json {
        emit(&(report.to_json() + "\n"));
    } else {
        emit(&report.to_table());
    }
    ExitCode::SUCCESS
}

fn family(n: i64, json: bool) -> ExitCode {
    let result = if json {
        family_rows(n).map(|rows| serde_json::to_string_pretty(&rows).expect("rows serialize") + "\n")
    } else {
        family_table(n)
    };
    match result {
        Ok(out) => {
            emit(&out);
            ExitCode::SUCCESS
        }
        Err(err @ FamilyTableError::Usage(_)) => {
            eprintln!("error: {err}");
            ExitCode::from(USAGE)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::FAILURE
        }
    }
}

fn selftest() -> ExitCode {
    let results = run_all();
    let mut out: String = results.iter().map(|r| r.line() + "\n").collect();
    let failed = results.iter().filter(|r| !r.passed).count();
    out += &format!("{} passed, {failed} failed\n", results.len() - failed);
    emit(&out);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { USAGE } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Invariants { expr, json } => invariants(&expr, json),
        Command::FamilyTable { n, json } => family(n, json),
        Command::Selftest => selftest(),
    }
}
