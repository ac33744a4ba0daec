//! Validated proleptic-Gregorian dates and the digit splits the doomsday
//! arithmetic operates on.

use std::fmt;

use crate::doomsday::is_leap_year;
use crate::error::Error;

/// First supported year.
pub const MIN_YEAR: i32 = 1;
/// Last supported year.
pub const MAX_YEAR: i32 = 9999;

/// A validated calendar date in the proleptic Gregorian calendar.
///
/// Construction rejects impossible combinations, February 29 included,
/// so every value of this type names a real date. Ordering is date order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CalendarDate {
    year: i32,
    month: u8,
    day: u8,
}

impl CalendarDate {
    pub fn new(year: i32, month: u8, day: u8) -> Result<CalendarDate, Error> {
        if !(MIN_YEAR..=MAX_YEAR).contains(&year) {
            return Err(Error::YearOutOfRange(year));
        }
        if !(1..=12).contains(&month) || day < 1 || day > days_in_month(month, is_leap_year(year)) {
            return Err(Error::InvalidDate { year, month, day });
        }
        Ok(CalendarDate { year, month, day })
    }

    pub fn year(self) -> i32 {
        self.year
    }

    pub fn month(self) -> u8 {
        self.month
    }

    pub fn day(self) -> u8 {
        self.day
    }

    pub fn century_split(self) -> CenturySplit {
        CenturySplit::from_year(self.year).expect("a CalendarDate year is always >= 1")
    }
}

impl fmt::Display for CalendarDate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:04}-{:02}-{:02}", self.year, self.month, self.day)
    }
}

/// The positional century/year-within-century split of a full year:
/// 1974 becomes (19, 74), 2000 becomes (20, 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CenturySplit {
    century: i32,
    year_of_century: u8,
}

impl CenturySplit {
    pub fn from_year(year: i32) -> Result<CenturySplit, Error> {
        if year < 1 {
            return Err(Error::YearOutOfRange(year));
        }
        Ok(CenturySplit {
            century: year / 100,
            year_of_century: (year % 100) as u8,
        })
    }

    pub fn century(self) -> i32 {
        self.century
    }

    pub fn year_of_century(self) -> u8 {
        self.year_of_century
    }

    /// Reconstructs the original year exactly.
    pub fn year(self) -> i32 {
        self.century * 100 + i32::from(self.year_of_century)
    }

    /// The tens/ones digit split of the year within the century.
    pub fn split_year(self) -> SplitYear {
        SplitYear::new(u16::from(self.year_of_century))
            .expect("year_of_century is always < 100")
    }
}

/// The tens/ones digit pair of a two-digit year: 74 becomes (7, 4).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SplitYear {
    tens: u8,
    ones: u8,
}

impl SplitYear {
    /// Splits a two-digit year into its decimal digits.
    pub fn new(x: u16) -> Result<SplitYear, Error> {
        if x > 99 {
            return Err(Error::TwoDigitYearOutOfRange(x));
        }
        Ok(SplitYear {
            tens: (x / 10) as u8,
            ones: (x % 10) as u8,
        })
    }

    pub fn from_digits(tens: u8, ones: u8) -> Result<SplitYear, Error> {
        if tens > 9 {
            return Err(Error::DigitOutOfRange(tens));
        }
        if ones > 9 {
            return Err(Error::DigitOutOfRange(ones));
        }
        Ok(SplitYear { tens, ones })
    }

    pub fn tens(self) -> u8 {
        self.tens
    }

    pub fn ones(self) -> u8 {
        self.ones
    }

    /// Recombines the digits: 10*tens + ones, always in 0..=99.
    pub fn value(self) -> u8 {
        10 * self.tens + self.ones
    }
}

impl fmt::Display for SplitYear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:02}", self.value())
    }
}

pub(crate) fn days_in_month(month: u8, leap: bool) -> u8 {
    match month {
        1 | 3 | 5 | 7 | 8 | 10 | 12 => 31,
        4 | 6 | 9 | 11 => 30,
        2 => {
            if leap {
                29
            } else {
                28
            }
        }
        _ => 0,
    }
}
