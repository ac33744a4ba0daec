//! Day-of-week calculation by the doomsday rule, with five interchangeable
//! doomsyear strategies behind one interface.
//!
//! The weekday of a date is the mod-7 sum of three terms: a century term,
//! a year-within-century term (the doomsyear), and a month/day offset. The
//! doomsyear term is where the mental-arithmetic tricks live; this crate
//! implements the classic formulas (the true value, Lewis Carroll's
//! dozens-based split, Conway's zero-anchor lookup) alongside a
//! decade-digit formula with its two lookup-table accelerations, and can
//! explain any result step by step.
//!
//! An independent Rata Die day-count oracle ([`oracle_weekday`]) shares no
//! arithmetic with the engine; [`verify_years`] sweeps every date in a
//! range and holds all five strategies to the oracle's answer.
//!
//! ```
//! use doomsday::{day_of_week, CalendarDate, Method, Weekday};
//!
//! let date = CalendarDate::new(2010, 4, 4)?;
//! assert_eq!(day_of_week(date, Method::DecadeAnchor), Weekday::Sunday);
//! for method in Method::ALL {
//!     assert_eq!(day_of_week(date, method), Weekday::Sunday);
//! }
//! # Ok::<(), doomsday::Error>(())
//! ```

mod date;
mod doomsday;
pub mod doomsyear;
mod error;
pub mod oracle;
pub mod tables;
pub mod types;
pub mod verify;

pub use crate::date::{CalendarDate, CenturySplit, SplitYear, MAX_YEAR, MIN_YEAR};
pub use crate::doomsday::{
    day_of_week, doomscentury, doomsmonth, explain, is_leap_year, month_anchor,
    month_anchor_entry, MonthAnchor,
};
pub use crate::error::Error;
pub use crate::oracle::{from_day_number, next_day, oracle_weekday, rata_die, DayNumber};
pub use crate::types::{Method, Mod7, StepValue, Trace, TraceStep, Weekday};
pub use crate::verify::{
    verify_years, verify_years_sequential, verify_years_sequential_with, verify_years_with,
    Mismatch, VerifyOutcome, DEFAULT_VERIFY_RANGE,
};
