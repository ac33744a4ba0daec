//! The doomsyear term: four ways to compute it, plus the lookup tables and
//! zero-anchor list that accelerate the arithmetic.
//!
//! All strategies map a two-digit year x to the same residue:
//!
//! * true value:        `x + floor(x/4)`
//! * Carrollian:        `floor(x/12) + x mod 12 + floor((x mod 12)/4)`
//! * decade anchor:     `2y + 10(y mod 2) + z + leaps` over the digits of x
//! * Conway zero-anchor: offset and leap correction from the nearest year
//!   whose doomsyear value is zero
//!
//! Everything here is a pure function of the year within the century; the
//! Gregorian 100/400 quirk is the century term's business (see
//! [`crate::doomscentury`]).

use std::fmt;
use std::sync::OnceLock;

use crate::date::SplitYear;
use crate::error::Error;
use crate::types::{Method, Mod7, StepValue, Trace, TraceStep};

/// A year of the century where the true doomsyear value is zero, or a
/// half-number marking a spot where the value jumped 6 -> 1 across a leap
/// year and zero got skipped.
///
/// Half anchors are stored as (base_year, is_half); `95.5` is `(95, true)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZeroAnchor {
    base_year: u8,
    is_half: bool,
}

impl ZeroAnchor {
    pub fn base_year(self) -> u8 {
        self.base_year
    }

    pub fn is_half(self) -> bool {
        self.is_half
    }
}

impl fmt::Display for ZeroAnchor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_half {
            write!(f, "{}.5", self.base_year)
        } else {
            write!(f, "{}", self.base_year)
        }
    }
}

/// Number of leap years since the start of a decade. Never exceeds 2:
/// a decade holds at most three multiples of 4 and its start is excluded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct LeapCount(u8);

impl LeapCount {
    fn new(count: u8) -> LeapCount {
        assert!(count <= 2, "leap count {count} out of range");
        LeapCount(count)
    }

    pub fn value(self) -> u8 {
        self.0
    }
}

/// The value every strategy must reproduce: (x + floor(x/4)) mod 7.
pub fn true_doomsyear(year: SplitYear) -> Mod7 {
    let x = i64::from(year.value());
    Mod7::reduce(x + x / 4)
}

/// Lewis Carroll's dozens-based split:
/// (floor(x/12) + x mod 12 + floor((x mod 12)/4)) mod 7.
pub fn carrollian_doomsyear(year: SplitYear) -> Mod7 {
    let x = i64::from(year.value());
    Mod7::reduce(x / 12 + x % 12 + (x % 12) / 4)
}

/// Closed form for the leap correction: floor((2(y mod 2) + z) / 4).
pub fn leaps_formula(year: SplitYear) -> LeapCount {
    LeapCount::new((2 * (year.tens() % 2) + year.ones()) / 4)
}

/// The leap correction by definition: leap years after the start of the
/// decade, up to and including the year itself.
pub fn leaps_by_counting(year: SplitYear) -> LeapCount {
    let start = 10 * year.tens();
    LeapCount::new(leaps_between(start, start + year.ones()))
}

/// Count of leap years w in (after, up_to] under the within-century rule
/// w mod 4 == 0. The century's own leap quirk never shows up here: a decade
/// start is excluded from its own count and year 00 is the century term's
/// problem.
fn leaps_between(after: u8, up_to: u8) -> u8 {
    (after + 1..=up_to).filter(|w| w % 4 == 0).count() as u8
}

/// The memorized leap correction, resolved by decade parity.
pub fn leaps_table(ones_digit: u8, odd_decade: bool) -> Result<LeapCount, Error> {
    const EVEN: [u8; 10] = [0, 0, 0, 0, 1, 1, 1, 1, 2, 2];
    const ODD: [u8; 10] = [0, 0, 1, 1, 1, 1, 2, 2, 2, 2];
    if ones_digit > 9 {
        return Err(Error::DigitOutOfRange(ones_digit));
    }
    let column = if odd_decade { ODD } else { EVEN };
    Ok(LeapCount::new(column[ones_digit as usize]))
}

/// The per-decade constant (2y + 10(y mod 2)) mod 7.
pub fn decade_anchor(tens_digit: u8) -> Result<Mod7, Error> {
    if tens_digit > 9 {
        return Err(Error::DigitOutOfRange(tens_digit));
    }
    Ok(Mod7::reduce(decade_anchor_raw(tens_digit)))
}

/// The unreduced decade-anchor value 2y + 10(y mod 2).
fn decade_anchor_raw(tens: u8) -> i64 {
    i64::from(2 * tens + 10 * (tens % 2))
}

/// The digit formula: (2y + 10(y mod 2) + z + leaps) mod 7. The unreduced
/// sum never leaves 0..=39.
pub fn proposed_doomsyear(year: SplitYear) -> Mod7 {
    Mod7::reduce(
        decade_anchor_raw(year.tens())
            + i64::from(year.ones())
            + i64::from(leaps_formula(year).value()),
    )
}

/// The digit formula with both memorized shortcuts: decade anchor from
/// Table 1, leap correction from Table 2.
pub fn proposed_doomsyear_lookup(year: SplitYear) -> Mod7 {
    let anchor = decade_anchor(year.tens()).expect("tens digit of a SplitYear is 0..=9");
    let leaps = leaps_table(year.ones(), year.tens() % 2 == 1)
        .expect("ones digit of a SplitYear is 0..=9");
    Mod7::reduce(i64::from(anchor.value()) + i64::from(year.ones()) + i64::from(leaps.value()))
}

/// The 18 zero-anchor years of a century, ascending: the years where the
/// true doomsyear value is zero, plus the four half-numbers where a zero
/// got skipped (value 6 followed by value 1).
///
/// Derived once from [`true_doomsyear`] and cached; the cache is safe to
/// initialize from any number of threads.
pub fn derive_zero_anchors() -> &'static [ZeroAnchor] {
    static ANCHORS: OnceLock<Vec<ZeroAnchor>> = OnceLock::new();
    ANCHORS.get_or_init(|| {
        let value = |x: u16| true_doomsyear(SplitYear::new(x).unwrap()).value();
        let mut anchors = Vec::new();
        for x in 0..=99u16 {
            if value(x) == 0 {
                anchors.push(ZeroAnchor {
                    base_year: x as u8,
                    is_half: false,
                });
            } else if x < 99 && value(x) == 6 && value(x + 1) == 1 {
                anchors.push(ZeroAnchor {
                    base_year: x as u8,
                    is_half: true,
                });
            }
        }
        anchors
    })
}

struct ConwayParts {
    anchor: ZeroAnchor,
    offset: u8,
    leap_count: u8,
}

impl ConwayParts {
    fn adjustment(&self) -> i64 {
        if self.anchor.is_half() {
            -1
        } else {
            0
        }
    }

    fn sum(&self) -> i64 {
        self.adjustment() + i64::from(self.offset) + i64::from(self.leap_count)
    }
}

fn conway_parts(year: SplitYear) -> ConwayParts {
    let x = year.value();
    // Greatest anchor below the year; a non-half anchor may equal it, in
    // which case offset and leap count are zero and the result is zero.
    let anchor = derive_zero_anchors()
        .iter()
        .rev()
        .find(|a| a.base_year() < x || (a.base_year() == x && !a.is_half()))
        .copied()
        .expect("anchor 0 qualifies for every two-digit year");
    ConwayParts {
        anchor,
        offset: x - anchor.base_year(),
        leap_count: leaps_between(anchor.base_year(), x),
    }
}

/// Conway's lookup acceleration: offset from the nearest zero-anchor at or
/// below the year, plus a leap correction, minus one for half anchors.
pub fn conway_doomsyear(year: SplitYear) -> Mod7 {
    Mod7::reduce(conway_parts(year).sum())
}

impl Method {
    /// Computes the doomsyear term with this strategy.
    pub fn doomsyear(self, year: SplitYear) -> Mod7 {
        match self {
            Method::True => true_doomsyear(year),
            Method::Carrollian => carrollian_doomsyear(year),
            Method::DecadeAnchor => proposed_doomsyear(year),
            Method::DecadeAnchorLookup => proposed_doomsyear_lookup(year),
            Method::ConwayZeroAnchor => conway_doomsyear(year),
        }
    }

    /// Computes the doomsyear term and records every intermediate value.
    /// The final step is always the unreduced sum.
    pub fn doomsyear_trace(self, year: SplitYear) -> Trace {
        let x = i64::from(year.value());
        let y = i64::from(year.tens());
        let z = i64::from(year.ones());
        let steps = match self {
            Method::True => vec![
                TraceStep::new("x", x),
                TraceStep::new("floor(x/4)", x / 4),
                TraceStep::new("sum", x + x / 4),
            ],
            Method::Carrollian => vec![
                TraceStep::new("anchor12", x / 12),
                TraceStep::new("z12", x % 12),
                TraceStep::new("leap12", (x % 12) / 4),
                TraceStep::new("sum", x / 12 + x % 12 + (x % 12) / 4),
            ],
            Method::DecadeAnchor => {
                let leaps = i64::from(leaps_formula(year).value());
                vec![
                    TraceStep::new("2y", 2 * y),
                    TraceStep::new("10(y mod 2)", 10 * (y % 2)),
                    TraceStep::new("z", z),
                    TraceStep::new("leaps", leaps),
                    TraceStep::new("sum", 2 * y + 10 * (y % 2) + z + leaps),
                ]
            }
            Method::DecadeAnchorLookup => {
                let anchor = i64::from(
                    decade_anchor(year.tens())
                        .expect("tens digit of a SplitYear is 0..=9")
                        .value(),
                );
                let leaps = i64::from(
                    leaps_table(year.ones(), year.tens() % 2 == 1)
                        .expect("ones digit of a SplitYear is 0..=9")
                        .value(),
                );
                vec![
                    TraceStep::new("decade_anchor", anchor),
                    TraceStep::new("z", z),
                    TraceStep::new("leaps", leaps),
                    TraceStep::new("sum", anchor + z + leaps),
                ]
            }
            Method::ConwayZeroAnchor => {
                let parts = conway_parts(year);
                let anchor_value = if parts.anchor.is_half() {
                    StepValue::HalfYear(parts.anchor.base_year())
                } else {
                    StepValue::Int(i64::from(parts.anchor.base_year()))
                };
                vec![
                    TraceStep {
                        label: "anchor".to_string(),
                        value: anchor_value,
                    },
                    TraceStep::new("z0", i64::from(parts.offset)),
                    TraceStep::new("leap0", i64::from(parts.leap_count)),
                    TraceStep::new("adj", parts.adjustment()),
                    TraceStep::new("sum", parts.sum()),
                ]
            }
        };
        let trace = Trace::new(self, steps);
        debug_assert_eq!(trace.result, self.doomsyear(year));
        trace
    }
}
