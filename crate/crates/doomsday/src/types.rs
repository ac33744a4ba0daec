//! Mod-7 residues, weekday naming, strategy identifiers, and explanation
//! traces. All weekday arithmetic in this crate lands in these types.

use std::fmt;
use std::ops::{Add, Neg};
use std::str::FromStr;

use crate::error::Error;

/// A fully reduced residue modulo 7.
///
/// Every doomsyear/weekday computation in this crate returns one of these,
/// so intermediate sums can never leak out unreduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mod7(u8);

impl Mod7 {
    pub const ZERO: Mod7 = Mod7(0);

    /// Reduces any integer, negative included, into 0..=6.
    pub fn reduce(n: i64) -> Mod7 {
        Mod7(n.rem_euclid(7) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }
}

impl Add for Mod7 {
    type Output = Mod7;

    fn add(self, rhs: Mod7) -> Mod7 {
        Mod7::reduce(i64::from(self.0) + i64::from(rhs.0))
    }
}

impl Neg for Mod7 {
    type Output = Mod7;

    fn neg(self) -> Mod7 {
        Mod7::reduce(-i64::from(self.0))
    }
}

impl fmt::Display for Mod7 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Day of the week under the 0 = Sunday .. 6 = Saturday convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[repr(u8)]
pub enum Weekday {
    Sunday = 0,
    Monday = 1,
    Tuesday = 2,
    Wednesday = 3,
    Thursday = 4,
    Friday = 5,
    Saturday = 6,
}

impl Weekday {
    pub const ALL: [Weekday; 7] = [
        Weekday::Sunday,
        Weekday::Monday,
        Weekday::Tuesday,
        Weekday::Wednesday,
        Weekday::Thursday,
        Weekday::Friday,
        Weekday::Saturday,
    ];

    pub fn from_mod7(residue: Mod7) -> Weekday {
        Weekday::ALL[residue.value() as usize]
    }

    pub fn residue(self) -> Mod7 {
        Mod7(self as u8)
    }

    pub fn name(self) -> &'static str {
        match self {
            Weekday::Sunday => "Sunday",
            Weekday::Monday => "Monday",
            Weekday::Tuesday => "Tuesday",
            Weekday::Wednesday => "Wednesday",
            Weekday::Thursday => "Thursday",
            Weekday::Friday => "Friday",
            Weekday::Saturday => "Saturday",
        }
    }
}

impl fmt::Display for Weekday {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Identifies one of the five doomsyear strategies.
///
/// All strategies compute the same function; they differ in how the work is
/// laid out. `Method::ALL` fixes the enumeration order used everywhere a
/// deterministic ordering matters (verification, CLI output).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    /// x + floor(x/4), the value the other strategies accelerate.
    True,
    /// Lewis Carroll's dozens-based split.
    Carrollian,
    /// Decade-digit formula 2y + 10(y mod 2) + z + leaps.
    DecadeAnchor,
    /// Same, with the per-decade constant and leap count taken from lookup
    /// tables instead of computed.
    DecadeAnchorLookup,
    /// Conway's zero-anchor lookup.
    ConwayZeroAnchor,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::True,
        Method::Carrollian,
        Method::DecadeAnchor,
        Method::DecadeAnchorLookup,
        Method::ConwayZeroAnchor,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::True => "true",
            Method::Carrollian => "carrollian",
            Method::DecadeAnchor => "decade-anchor",
            Method::DecadeAnchorLookup => "decade-anchor-lookup",
            Method::ConwayZeroAnchor => "conway-zero-anchor",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Method, Error> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::UnknownMethod(s.to_string()))
    }
}

/// One value inside a [`Trace`]: a plain integer, or a half-number anchor
/// year that prints with a `.5` suffix. Half anchors stay integer-backed;
/// nothing in the crate does fractional arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepValue {
    Int(i64),
    HalfYear(u8),
}

impl StepValue {
    pub fn as_int(self) -> Option<i64> {
        match self {
            StepValue::Int(n) => Some(n),
            StepValue::HalfYear(_) => None,
        }
    }
}

impl fmt::Display for StepValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StepValue::Int(n) => write!(f, "{n}"),
            StepValue::HalfYear(base) => write!(f, "{base}.5"),
        }
    }
}

/// A labeled intermediate value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub label: String,
    pub value: StepValue,
}

impl TraceStep {
    pub fn new(label: impl Into<String>, value: i64) -> TraceStep {
        TraceStep {
            label: label.into(),
            value: StepValue::Int(value),
        }
    }
}

/// The ordered intermediate values behind one computed residue, suitable
/// for printing a worked example.
///
/// Invariant: the last step is an integer sum whose reduction mod 7 equals
/// `result`. [`Trace::new`] enforces it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace {
    pub method: Method,
    pub steps: Vec<TraceStep>,
    pub result: Mod7,
}

impl Trace {
    /// Builds a trace from its steps; the result is the final step reduced
    /// mod 7. Panics if `steps` is empty or the final step is not an integer.
    pub fn new(method: Method, steps: Vec<TraceStep>) -> Trace {
        let last = steps
            .last()
            .expect("a trace needs at least one step")
            .value
            .as_int()
            .expect("the final trace step must be an integer sum");
        Trace {
            method,
            steps,
            result: Mod7::reduce(last),
        }
    }

    /// Looks up a step by label.
    pub fn step(&self, label: &str) -> Option<StepValue> {
        self.steps.iter().find(|s| s.label == label).map(|s| s.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduce_matches_worked_sums() {
        assert_eq!(Mod7::reduce(29).value(), 1);
        assert_eq!(Mod7::reduce(38).value(), 3);
        assert_eq!(Mod7::reduce(0).value(), 0);
    }

    #[test]
    fn reduce_normalizes_negatives() {
        assert_eq!(Mod7::reduce(-1).value(), 6);
        assert_eq!(Mod7::reduce(-7).value(), 0);
        assert_eq!(Mod7::reduce(-13).value(), 1);
    }

    #[test]
    fn mod7_arithmetic_stays_reduced() {
        let a = Mod7::reduce(6);
        let b = Mod7::reduce(5);
        assert_eq!((a + b).value(), 4);
        assert_eq!((-a).value(), 1);
        assert_eq!((-Mod7::ZERO).value(), 0);
    }

    #[test]
    fn weekday_name_residue_bijection() {
        for residue in 0..7 {
            let wd = Weekday::from_mod7(Mod7::reduce(residue));
            assert_eq!(wd.residue().value() as i64, residue);
        }
        assert_eq!(Weekday::from_mod7(Mod7::ZERO), Weekday::Sunday);
        assert_eq!(Weekday::from_mod7(Mod7::reduce(6)), Weekday::Saturday);
        assert_eq!(Weekday::Monday.name(), "Monday");
    }

    #[test]
    fn method_names_round_trip() {
        for method in Method::ALL {
            assert_eq!(method.name().parse::<Method>().unwrap(), method);
        }
        assert!(matches!(
            "zeller".parse::<Method>(),
            Err(Error::UnknownMethod(_))
        ));
    }

    #[test]
    fn trace_result_is_final_step_reduced() {
        let trace = Trace::new(
            Method::DecadeAnchor,
            vec![TraceStep::new("2y", 14), TraceStep::new("sum", 29)],
        );
        assert_eq!(trace.result.value(), 1);
        assert_eq!(trace.step("2y"), Some(StepValue::Int(14)));
        assert_eq!(trace.step("missing"), None);
    }

    #[test]
    fn half_year_prints_with_suffix() {
        assert_eq!(StepValue::HalfYear(95).to_string(), "95.5");
        assert_eq!(StepValue::Int(-1).to_string(), "-1");
    }
}
