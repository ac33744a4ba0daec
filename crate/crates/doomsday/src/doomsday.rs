//! The full day-of-week computation:
//! `(doomscentury + doomsyear + doomsmonth) mod 7`.
//!
//! The century and month terms are standard doomsday-rule bookkeeping; the
//! interesting part, the doomsyear term, is delegated to whichever
//! [`Method`] the caller picks. All methods produce the same weekday, and
//! the differential suite in [`crate::verify`] holds them to that against
//! the day-count oracle.

use crate::date::{days_in_month, CalendarDate};
use crate::error::Error;
use crate::types::{Method, Mod7, Trace, TraceStep, Weekday};

/// A month's reference date: the day that falls on the year's doomsday.
/// Only January and February differ between common and leap years.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonthAnchor {
    month: u8,
    common_year_day: u8,
    leap_year_day: u8,
}

impl MonthAnchor {
    pub fn month(self) -> u8 {
        self.month
    }

    pub fn common_year_day(self) -> u8 {
        self.common_year_day
    }

    pub fn leap_year_day(self) -> u8 {
        self.leap_year_day
    }

    pub fn day(self, leap: bool) -> u8 {
        if leap {
            self.leap_year_day
        } else {
            self.common_year_day
        }
    }
}

const fn anchor(month: u8, common: u8, leap: u8) -> MonthAnchor {
    MonthAnchor {
        month,
        common_year_day: common,
        leap_year_day: leap,
    }
}

// 4/4, 6/6, 8/8, 10/10, 12/12 plus the odd-month and Jan/Feb anchors.
const MONTH_ANCHORS: [MonthAnchor; 12] = [
    anchor(1, 3, 4),
    anchor(2, 28, 29),
    anchor(3, 7, 7),
    anchor(4, 4, 4),
    anchor(5, 9, 9),
    anchor(6, 6, 6),
    anchor(7, 11, 11),
    anchor(8, 8, 8),
    anchor(9, 5, 5),
    anchor(10, 10, 10),
    anchor(11, 7, 7),
    anchor(12, 12, 12),
];

/// Full Gregorian leap rule: every fourth year, except centuries not
/// divisible by 400.
pub fn is_leap_year(year: i32) -> bool {
    year % 4 == 0 && (year % 100 != 0 || year % 400 == 0)
}

/// The century term: (5(cc mod 4) + 2) mod 7 under the 0 = Sunday
/// convention. Repeats with period 4, absorbing the 100/400 leap quirk.
pub fn doomscentury(century: i32) -> Mod7 {
    Mod7::reduce(i64::from(5 * century.rem_euclid(4) + 2))
}

/// The month's reference day-of-month for the given leap status.
pub fn month_anchor(month: u8, leap: bool) -> Result<u8, Error> {
    month_anchor_entry(month).map(|a| a.day(leap))
}

/// The underlying anchor entry, with both common- and leap-year days.
pub fn month_anchor_entry(month: u8) -> Result<MonthAnchor, Error> {
    if !(1..=12).contains(&month) {
        return Err(Error::MonthOutOfRange(month));
    }
    Ok(MONTH_ANCHORS[month as usize - 1])
}

/// Offset of a day from its month's reference date, mod 7.
pub fn doomsmonth(month: u8, day: u8, leap: bool) -> Result<Mod7, Error> {
    let anchor = month_anchor(month, leap)?;
    if day < 1 || day > days_in_month(month, leap) {
        return Err(Error::InvalidMonthDay { month, day });
    }
    Ok(month_offset(day, anchor))
}

fn month_offset(day: u8, anchor_day: u8) -> Mod7 {
    Mod7::reduce(i64::from(day) - i64::from(anchor_day))
}

/// The weekday of a date, by the doomsday rule with the chosen doomsyear
/// strategy. Every strategy returns the same answer.
pub fn day_of_week(date: CalendarDate, method: Method) -> Weekday {
    let split = date.century_split();
    let leap = is_leap_year(date.year());
    let century_term = doomscentury(split.century());
    let year_term = method.doomsyear(split.split_year());
    let anchor_day = month_anchor(date.month(), leap).expect("CalendarDate month is valid");
    let month_term = month_offset(date.day(), anchor_day);
    Weekday::from_mod7(century_term + year_term + month_term)
}

/// Everything behind [`day_of_week`], one labeled step at a time: the
/// century term, the full doomsyear sub-trace (labels prefixed
/// `doomsyear.`), the month term, and the final sum.
pub fn explain(date: CalendarDate, method: Method) -> Trace {
    let split = date.century_split();
    let leap = is_leap_year(date.year());
    let century_term = doomscentury(split.century());
    let year_trace = method.doomsyear_trace(split.split_year());
    let year_term = year_trace.result;
    let anchor_day = month_anchor(date.month(), leap).expect("CalendarDate month is valid");
    let month_term = month_offset(date.day(), anchor_day);

    let mut steps = vec![TraceStep::new(
        "doomscentury",
        i64::from(century_term.value()),
    )];
    for sub in year_trace.steps {
        steps.push(TraceStep {
            label: format!("doomsyear.{}", sub.label),
            value: sub.value,
        });
    }
    steps.push(TraceStep::new("doomsyear", i64::from(year_term.value())));
    steps.push(TraceStep::new("doomsmonth", i64::from(month_term.value())));
    steps.push(TraceStep::new(
        "sum",
        i64::from(century_term.value()) + i64::from(year_term.value())
            + i64::from(month_term.value()),
    ));

    let trace = Trace::new(method, steps);
    debug_assert_eq!(trace.result, day_of_week(date, method).residue());
    trace
}
