use std::fmt;

/// Everything that can go wrong when constructing or combining the
/// calendar types in this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Year outside the supported proleptic-Gregorian range 1..=9999.
    YearOutOfRange(i32),
    /// The (year, month, day) triple does not name a real date.
    InvalidDate { year: i32, month: u8, day: u8 },
    /// A two-digit year argument above 99.
    TwoDigitYearOutOfRange(u16),
    /// A single decimal digit argument above 9.
    DigitOutOfRange(u8),
    /// Month outside 1..=12.
    MonthOutOfRange(u8),
    /// The (month, day) pair is invalid for the given leap status.
    InvalidMonthDay { month: u8, day: u8 },
    /// Day number before day 1 or past the last supported date.
    DayNumberOutOfRange(i64),
    /// Date increment would run past 9999-12-31.
    DateOverflow,
    /// A year range with from > to or ends outside 1..=9999.
    InvalidYearRange { from: i32, to: i32 },
    /// A method name that names no known doomsyear strategy.
    UnknownMethod(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::YearOutOfRange(year) => {
                write!(f, "year {year} out of range (expected 1..=9999)")
            }
            Error::InvalidDate { year, month, day } => {
                write!(f, "invalid calendar date {year:04}-{month:02}-{day:02}")
            }
            Error::TwoDigitYearOutOfRange(x) => {
                write!(f, "two-digit year {x} out of range (expected 0..=99)")
            }
            Error::DigitOutOfRange(d) => {
                write!(f, "digit {d} out of range (expected 0..=9)")
            }
            Error::MonthOutOfRange(m) => {
                write!(f, "month {m} out of range (expected 1..=12)")
            }
            Error::InvalidMonthDay { month, day } => {
                write!(f, "day {day} is invalid for month {month}")
            }
            Error::DayNumberOutOfRange(n) => {
                write!(f, "day number {n} outside the supported date range")
            }
            Error::DateOverflow => write!(f, "date increment past 9999-12-31"),
            Error::InvalidYearRange { from, to } => {
                write!(f, "invalid year range {from}..={to} (expected 1 <= from <= to <= 9999)")
            }
            Error::UnknownMethod(name) => {
                write!(
                    f,
                    "unknown method `{name}` (expected one of: true, carrollian, \
                     decade-anchor, decade-anchor-lookup, conway-zero-anchor)"
                )
            }
        }
    }
}

impl std::error::Error for Error {}
