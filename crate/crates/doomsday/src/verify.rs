//! Exhaustive differential verification: every date in a year range, every
//! method, against the day-count oracle.
//!
//! The scan is data-parallel over years when the `parallel` feature is
//! enabled (the default) and plain sequential otherwise; a sequential entry
//! point is always available for comparison. Both report the globally
//! earliest mismatch in (date, method) order, so the outcome is identical
//! whatever the worker count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use std::fmt;

use crate::date::CalendarDate;
use crate::doomsday::day_of_week;
use crate::error::Error;
use crate::oracle::{next_day, oracle_weekday, rata_die};
use crate::types::{Method, Weekday};

/// Default verification span: the Gregorian era through year 3000.
pub const DEFAULT_VERIFY_RANGE: (i32, i32) = (1583, 3000);

/// A disagreement between a method and the oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mismatch {
    pub date: CalendarDate,
    pub method: Method,
    pub got: Weekday,
    pub expected: Weekday,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} got={}({}) expected={}({})",
            self.date,
            self.method,
            self.got,
            self.got.residue(),
            self.expected,
            self.expected.residue()
        )
    }
}

/// Result of a verification sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyOutcome {
    /// Every method agreed with the oracle on every date.
    Pass { dates_checked: u64 },
    /// The earliest disagreement, by date then method order.
    Mismatch(Mismatch),
}

impl VerifyOutcome {
    pub fn is_pass(&self) -> bool {
        matches!(self, VerifyOutcome::Pass { .. })
    }
}

/// Verifies the real engine over `from..=to`.
pub fn verify_years(from: i32, to: i32) -> Result<VerifyOutcome, Error> {
    verify_years_with(from, to, day_of_week)
}

/// Verifies an arbitrary evaluator over `from..=to`. Parallel over years
/// when the `parallel` feature is on, sequential otherwise.
pub fn verify_years_with<F>(from: i32, to: i32, eval: F) -> Result<VerifyOutcome, Error>
where
    F: Fn(CalendarDate, Method) -> Weekday + Sync,
{
    check_range(from, to)?;

    #[cfg(feature = "parallel")]
    let first = (from..=to)
        .into_par_iter()
        .find_map_first(|year| scan_year(year, &eval));

    #[cfg(not(feature = "parallel"))]
    let first = (from..=to).find_map(|year| scan_year(year, &eval));

    Ok(outcome(first, from, to))
}

/// Single-threaded sweep of the real engine, independent of feature flags.
pub fn verify_years_sequential(from: i32, to: i32) -> Result<VerifyOutcome, Error> {
    verify_years_sequential_with(from, to, day_of_week)
}

/// Single-threaded sweep of an arbitrary evaluator.
pub fn verify_years_sequential_with<F>(from: i32, to: i32, eval: F) -> Result<VerifyOutcome, Error>
where
    F: Fn(CalendarDate, Method) -> Weekday,
{
    check_range(from, to)?;
    let first = (from..=to).find_map(|year| scan_year(year, &eval));
    Ok(outcome(first, from, to))
}

fn check_range(from: i32, to: i32) -> Result<(), Error> {
    if from < 1 || to > 9999 || from > to {
        return Err(Error::InvalidYearRange { from, to });
    }
    Ok(())
}

fn outcome(first: Option<Mismatch>, from: i32, to: i32) -> VerifyOutcome {
    match first {
        Some(mismatch) => VerifyOutcome::Mismatch(mismatch),
        None => VerifyOutcome::Pass {
            dates_checked: days_in_years(from, to),
        },
    }
}

/// Scans one year in date order, methods in enumeration order, returning
/// the year's earliest mismatch.
fn scan_year<F>(year: i32, eval: &F) -> Option<Mismatch>
where
    F: Fn(CalendarDate, Method) -> Weekday,
{
    let mut date = CalendarDate::new(year, 1, 1).expect("January 1 of a valid year");
    loop {
        let expected = oracle_weekday(date);
        for method in Method::ALL {
            let got = eval(date, method);
            if got != expected {
                return Some(Mismatch {
                    date,
                    method,
                    got,
                    expected,
                });
            }
        }
        if date.month() == 12 && date.day() == 31 {
            return None;
        }
        date = next_day(date).expect("not December 31, so the year continues");
    }
}

fn days_in_years(from: i32, to: i32) -> u64 {
    let first = CalendarDate::new(from, 1, 1).expect("checked range");
    let last = CalendarDate::new(to, 12, 31).expect("checked range");
    (rata_die(last).value() - rata_die(first).value() + 1) as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::Mod7;

    #[test]
    fn a_decade_passes_with_the_right_day_count() {
        let outcome = verify_years(1990, 1999).unwrap();
        assert_eq!(outcome, VerifyOutcome::Pass { dates_checked: 3652 });
    }

    #[test]
    fn sequential_and_default_paths_agree_on_pass() {
        assert_eq!(
            verify_years(2000, 2003).unwrap(),
            verify_years_sequential(2000, 2003).unwrap()
        );
    }

    #[test]
    fn bad_ranges_are_rejected() {
        assert!(matches!(
            verify_years(1999, 1990),
            Err(Error::InvalidYearRange { .. })
        ));
        assert!(matches!(
            verify_years(0, 10),
            Err(Error::InvalidYearRange { .. })
        ));
        assert!(matches!(
            verify_years_sequential(9000, 10_000),
            Err(Error::InvalidYearRange { .. })
        ));
    }

    fn corrupted(
        bad_method: Method,
        start: CalendarDate,
    ) -> impl Fn(CalendarDate, Method) -> Weekday + Sync {
        move |date, method| {
            let honest = day_of_week(date, method);
            if method == bad_method && date >= start {
                Weekday::from_mod7(Mod7::reduce(i64::from(honest.residue().value()) + 1))
            } else {
                honest
            }
        }
    }

    #[test]
    fn earliest_mismatch_is_reported() {
        let start = CalendarDate::new(1995, 6, 17).unwrap();
        let eval = corrupted(Method::Carrollian, start);
        let outcome = verify_years_with(1990, 1999, &eval).unwrap();
        match outcome {
            VerifyOutcome::Mismatch(m) => {
                assert_eq!(m.date, start);
                assert_eq!(m.method, Method::Carrollian);
                assert_eq!(
                    m.got.residue(),
                    Mod7::reduce(i64::from(m.expected.residue().value()) + 1)
                );
            }
            VerifyOutcome::Pass { .. } => panic!("corruption went unnoticed"),
        }
    }

    #[test]
    fn parallel_and_sequential_report_the_same_mismatch() {
        let start = CalendarDate::new(1992, 2, 29).unwrap();
        let eval = corrupted(Method::ConwayZeroAnchor, start);
        assert_eq!(
            verify_years_with(1990, 1999, &eval).unwrap(),
            verify_years_sequential_with(1990, 1999, &eval).unwrap()
        );
    }

    #[test]
    fn method_order_breaks_date_ties() {
        // Corrupt two methods from the same date; the enumeration order of
        // Method::ALL decides which one is reported.
        let start = CalendarDate::new(1990, 1, 1).unwrap();
        let eval = |date: CalendarDate, method: Method| {
            let honest = day_of_week(date, method);
            if method == Method::True || method == Method::ConwayZeroAnchor {
                Weekday::from_mod7(Mod7::reduce(i64::from(honest.residue().value()) + 1))
            } else {
                honest
            }
        };
        match verify_years_with(1990, 1990, eval).unwrap() {
            VerifyOutcome::Mismatch(m) => {
                assert_eq!(m.date, start);
                assert_eq!(m.method, Method::True);
            }
            VerifyOutcome::Pass { .. } => panic!("corruption went unnoticed"),
        }
    }
}
