//! Property tests: modular-arithmetic invariants, digit-split identities,
//! date round trips, and cross-method agreement on randomly drawn dates.

use doomsday::{
    day_of_week, explain, from_day_number, next_day, oracle_weekday, rata_die, CalendarDate,
    Method, Mod7, SplitYear, Weekday,
};
use proptest::prelude::*;

fn arb_date() -> impl Strategy<Value = CalendarDate> {
    (1i32..=9999, 1u8..=12, 1u8..=31)
        .prop_filter_map("impossible calendar combination", |(y, m, d)| {
            CalendarDate::new(y, m, d).ok()
        })
}

fn arb_method() -> impl Strategy<Value = Method> {
    prop::sample::select(Method::ALL.to_vec())
}

proptest! {
    #[test]
    fn reduce_lands_in_range_and_preserves_congruence(n in -100_000i64..100_000) {
        let r = Mod7::reduce(n);
        prop_assert!(r.value() <= 6);
        prop_assert_eq!((i64::from(r.value()) - n).rem_euclid(7), 0);
    }

    #[test]
    fn mod7_sum_matches_integer_sum(a in -1000i64..1000, b in -1000i64..1000) {
        prop_assert_eq!(Mod7::reduce(a) + Mod7::reduce(b), Mod7::reduce(a + b));
    }

    #[test]
    fn split_year_recombines_to_itself(x in 0u16..=99) {
        let s = SplitYear::new(x).unwrap();
        prop_assert_eq!(u16::from(10 * s.tens() + s.ones()), x);
    }

    #[test]
    fn every_method_matches_the_oracle(date in arb_date()) {
        let expected = oracle_weekday(date);
        for method in Method::ALL {
            prop_assert_eq!(day_of_week(date, method), expected);
        }
    }

    #[test]
    fn tomorrow_is_one_day_later(date in arb_date(), method in arb_method()) {
        prop_assume!(!(date.year() == 9999 && date.month() == 12 && date.day() == 31));
        let tomorrow = next_day(date).unwrap();
        prop_assert_eq!(rata_die(tomorrow).value(), rata_die(date).value() + 1);
        let succ = Mod7::reduce(i64::from(day_of_week(date, method).residue().value()) + 1);
        prop_assert_eq!(day_of_week(tomorrow, method), Weekday::from_mod7(succ));
    }

    #[test]
    fn day_numbers_round_trip(date in arb_date()) {
        prop_assert_eq!(from_day_number(rata_die(date)).unwrap(), date);
    }

    #[test]
    fn doomsyear_traces_close_over_their_result(x in 0u16..=99, method in arb_method()) {
        let year = SplitYear::new(x).unwrap();
        let trace = method.doomsyear_trace(year);
        prop_assert_eq!(trace.result, method.doomsyear(year));
        let last = trace.steps.last().unwrap().value.as_int().unwrap();
        prop_assert_eq!(Mod7::reduce(last), trace.result);
    }

    #[test]
    fn explain_traces_close_over_the_weekday(date in arb_date(), method in arb_method()) {
        let trace = explain(date, method);
        prop_assert_eq!(trace.result, day_of_week(date, method).residue());
        let last = trace.steps.last().unwrap().value.as_int().unwrap();
        prop_assert_eq!(Mod7::reduce(last), trace.result);
    }
}

#[test]
fn weekday_round_trips_through_its_residue() {
    for weekday in Weekday::ALL {
        assert_eq!(Weekday::from_mod7(weekday.residue()), weekday);
    }
}

#[test]
fn all_methods_agree_on_all_two_digit_years() {
    for x in 0..=99u16 {
        let year = SplitYear::new(x).unwrap();
        let expected = Method::True.doomsyear(year);
        for method in Method::ALL {
            assert_eq!(method.doomsyear(year), expected, "{method} departs at {x}");
        }
    }
}
