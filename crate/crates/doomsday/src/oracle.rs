//! Independent weekday ground truth from a plain day count (Rata Die:
//! 0001-01-01 is day 1, and day 1 is a Monday).
//!
//! This module is the measuring stick for the doomsday engine, so it
//! deliberately shares none of its arithmetic: the leap rule and month
//! lengths are restated locally, and the weekday falls out of a single
//! division instead of a three-term sum. Agreement between the two routes
//! is established by the differential suite, not assumed.

use crate::date::{CalendarDate, MAX_YEAR};
use crate::error::Error;
use crate::types::{Mod7, Weekday};

/// Days elapsed since proleptic Gregorian 0001-01-01 = day 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DayNumber(i64);

impl DayNumber {
    pub fn new(value: i64) -> DayNumber {
        DayNumber(value)
    }

    pub fn value(self) -> i64 {
        self.0
    }
}

// Local restatement of the calendar shape; the engine's tables are off
// limits here.
const MONTH_LENGTHS: [i64; 12] = [31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31];
const DAYS_BEFORE_MONTH: [i64; 12] = [0, 31, 59, 90, 120, 151, 181, 212, 243, 273, 304, 334];

fn leap(year: i32) -> bool {
    (year % 4 == 0 && year % 100 != 0) || year % 400 == 0
}

fn month_length(month: u8, leap_year: bool) -> i64 {
    if month == 2 && leap_year {
        29
    } else {
        MONTH_LENGTHS[month as usize - 1]
    }
}

/// Days strictly before January 1 of `year`.
fn days_before_year(year: i64) -> i64 {
    let y = year - 1;
    365 * y + y / 4 - y / 100 + y / 400
}

/// The date's day number.
pub fn rata_die(date: CalendarDate) -> DayNumber {
    let mut days = days_before_year(i64::from(date.year()));
    days += DAYS_BEFORE_MONTH[date.month() as usize - 1];
    if date.month() > 2 && leap(date.year()) {
        days += 1;
    }
    DayNumber(days + i64::from(date.day()))
}

/// Inverse of [`rata_die`].
pub fn from_day_number(n: DayNumber) -> Result<CalendarDate, Error> {
    let n = n.value();
    if n < 1 || n > days_before_year(i64::from(MAX_YEAR) + 1) {
        return Err(Error::DayNumberOutOfRange(n));
    }

    // Estimate the year from the 400-year cycle length, then settle it so
    // that days_before_year(year) < n <= days_before_year(year + 1).
    let mut year = ((n - 1) * 400 / 146_097 + 1) as i32;
    while days_before_year(i64::from(year)) >= n {
        year -= 1;
    }
    while days_before_year(i64::from(year) + 1) < n {
        year += 1;
    }

    let mut remaining = n - days_before_year(i64::from(year));
    let leap_year = leap(year);
    let mut month = 1u8;
    while remaining > month_length(month, leap_year) {
        remaining -= month_length(month, leap_year);
        month += 1;
    }
    CalendarDate::new(year, month, remaining as u8)
}

/// Ground-truth weekday: the day number reduced mod 7. Day 1 is a Monday,
/// which lands residue 1 on Monday and so agrees with the 0 = Sunday
/// convention without any offset.
pub fn oracle_weekday(date: CalendarDate) -> Weekday {
    Weekday::from_mod7(Mod7::reduce(rata_die(date).value()))
}

/// The following calendar date. Errors only past 9999-12-31.
pub fn next_day(date: CalendarDate) -> Result<CalendarDate, Error> {
    let (year, month, day) = (date.year(), date.month(), date.day());
    if i64::from(day) < month_length(month, leap(year)) {
        return Ok(CalendarDate::new(year, month, day + 1).expect("same month, valid day"));
    }
    if month < 12 {
        return Ok(CalendarDate::new(year, month + 1, 1).expect("first of next month"));
    }
    if year < MAX_YEAR {
        return Ok(CalendarDate::new(year + 1, 1, 1).expect("first of next year"));
    }
    Err(Error::DateOverflow)
}
