//! Perpetual-calendar CLI over the doomsday crate.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage error.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use doomsday::doomsyear::derive_zero_anchors;
use doomsday::tables::{anchor_table, render, table1, table2, table3, TableFormat};
use doomsday::{
    day_of_week, explain, verify_years, verify_years_with, CalendarDate, Error, Method, Mod7,
    VerifyOutcome, Weekday, DEFAULT_VERIFY_RANGE,
};

#[derive(Parser)]
#[command(name = "doomsday", version, about = "Day-of-week calculator built on the doomsday rule")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the weekday of a date
    Dow {
        /// Date as YYYY-MM-DD or MM/DD/YYYY
        date: String,
        /// Doomsyear strategy: true, carrollian, decade-anchor,
        /// decade-anchor-lookup, or conway-zero-anchor
        #[arg(long, default_value = "decade-anchor")]
        method: String,
        /// Print the residue 0..6 instead of the weekday name
        #[arg(long)]
        numeric: bool,
    },
    /// Print every intermediate value behind a date's weekday
    Explain {
        /// Date as YYYY-MM-DD or MM/DD/YYYY
        date: String,
        /// Doomsyear strategy (see `dow --help`)
        #[arg(long, default_value = "decade-anchor")]
        method: String,
    },
    /// Print a reference table
    Tables {
        /// Which table: the decade anchors (1), the leap corrections (2),
        /// the doomsyear values 00..99 (3), or the zero-anchor years
        #[arg(value_parser = ["1", "2", "3", "anchors"])]
        which: String,
        #[arg(long, value_enum, default_value = "tsv")]
        format: FormatArg,
    },
    /// Print the 18 zero-anchor years on one line
    Anchors,
    /// Check every method against the day-count oracle for a year range
    Verify {
        /// First year to check
        #[arg(long, default_value_t = DEFAULT_VERIFY_RANGE.0)]
        from: i32,
        /// Last year to check
        #[arg(long, default_value_t = DEFAULT_VERIFY_RANGE.1)]
        to: i32,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Tsv,
    Markdown,
}

impl From<FormatArg> for TableFormat {
    fn from(format: FormatArg) -> TableFormat {
        match format {
            FormatArg::Tsv => TableFormat::Tsv,
            FormatArg::Markdown => TableFormat::Markdown,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            eprintln!("run `doomsday --help` for usage");
            ExitCode::from(2)
        }
    }
}

fn run(command: Cmd) -> Result<ExitCode, String> {
    match command {
        Cmd::Dow {
            date,
            method,
            numeric,
        } => {
            let date = parse_date_arg(&date)?;
            let method = parse_method(&method)?;
            warn_if_proleptic(date);
            let weekday = day_of_week(date, method);
            if numeric {
                println!("{}", weekday.residue());
            } else {
                println!("{weekday}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Explain { date, method } => {
            let date = parse_date_arg(&date)?;
            let method = parse_method(&method)?;
            warn_if_proleptic(date);
            let trace = explain(date, method);
            for step in &trace.steps {
                println!("{}: {}", step.label, step.value);
            }
            let weekday = Weekday::from_mod7(trace.result);
            println!("result: {weekday} ({})", trace.result);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Tables { which, format } => {
            let doc = match which.as_str() {
                "1" => table1(),
                "2" => table2(),
                "3" => table3(),
                "anchors" => anchor_table(),
                other => return Err(format!("unknown table `{other}`")),
            };
            print!("{}", render(&doc, format.into()));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Anchors => {
            let line: Vec<String> = derive_zero_anchors().iter().map(ToString::to_string).collect();
            println!("{}", line.join(" "));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { from, to } => {
            let outcome = match corruption_from_env()? {
                Some(corruption) => {
                    verify_years_with(from, to, move |date, method| corruption.eval(date, method))
                }
                None => verify_years(from, to),
            }
            .map_err(|e| e.to_string())?;
            match outcome {
                VerifyOutcome::Pass { dates_checked } => {
                    println!("OK {dates_checked} dates checked");
                    Ok(ExitCode::SUCCESS)
                }
                VerifyOutcome::Mismatch(mismatch) => {
                    println!("MISMATCH {mismatch}");
                    Ok(ExitCode::from(1))
                }
            }
        }
    }
}

/// Accepts ISO `YYYY-MM-DD` and `MM/DD/YYYY`.
fn parse_date_arg(text: &str) -> Result<CalendarDate, String> {
    let malformed = || format!("malformed date `{text}`: expected YYYY-MM-DD or MM/DD/YYYY");
    let (separator, iso) = if text.contains('-') {
        ('-', true)
    } else if text.contains('/') {
        ('/', false)
    } else {
        return Err(malformed());
    };
    let fields: Vec<i32> = text
        .split(separator)
        .map(|f| f.parse().map_err(|_| malformed()))
        .collect::<Result<_, _>>()?;
    if fields.len() != 3 {
        return Err(malformed());
    }
    let (year, month, day) = if iso {
        (fields[0], fields[1], fields[2])
    } else {
        (fields[2], fields[0], fields[1])
    };
    let month = u8::try_from(month).unwrap_or(u8::MAX);
    let day = u8::try_from(day).unwrap_or(u8::MAX);
    CalendarDate::new(year, month, day).map_err(|e| e.to_string())
}

fn parse_method(text: &str) -> Result<Method, String> {
    text.parse().map_err(|e: Error| e.to_string())
}

fn warn_if_proleptic(date: CalendarDate) {
    let civil_adoption = CalendarDate::new(1583, 10, 15).expect("fixed valid date");
    if date < civil_adoption {
        eprintln!(
            "warning: {date} predates Gregorian civil adoption ({civil_adoption}); \
             computing with proleptic rules"
        );
    }
}

/// Test hook: `DOOMSDAY_VERIFY_CORRUPT=<method>@<date>` makes `verify`
/// misreport that method for every date at or after the given one, so the
/// mismatch path can be exercised end to end.
struct Corruption {
    method: Method,
    start: CalendarDate,
}

impl Corruption {
    fn eval(&self, date: CalendarDate, method: Method) -> Weekday {
        let honest = day_of_week(date, method);
        if method == self.method && date >= self.start {
            Weekday::from_mod7(Mod7::reduce(i64::from(honest.residue().value()) + 1))
        } else {
            honest
        }
    }
}

fn corruption_from_env() -> Result<Option<Corruption>, String> {
    let setting = match std::env::var("DOOMSDAY_VERIFY_CORRUPT") {
        Ok(setting) => setting,
        Err(_) => return Ok(None),
    };
    let (method, date) = setting
        .split_once('@')
        .ok_or_else(|| {
            format!("malformed DOOMSDAY_VERIFY_CORRUPT `{setting}`: expected <method>@<date>")
        })?;
    Ok(Some(Corruption {
        method: parse_method(method)?,
        start: parse_date_arg(date)?,
    }))
}
