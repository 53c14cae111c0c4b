//! Proleptic Gregorian dates, trading calendars and the stock-report
//! conversions that turn Japanese dates into English weekdays.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::generation::{realize_special_compound, DateStyle};
use crate::semantics::{Flag, LexEntry};
use crate::transfer::{DayOfMonth, Domain, SpecialCompoundNp};

pub const MIN_YEAR: i32 = 1600;
pub const MAX_YEAR: i32 = 3000;

/// Dates further than this from the report date keep their date form.
pub const DEFAULT_WEEKDAY_WINDOW: i64 = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CalendarError {
    #[error("invalid date {0}")]
    InvalidDate(String),
    #[error("date arithmetic left the supported range {MIN_YEAR}-{MAX_YEAR}")]
    RangeExceeded,
    #[error("`{0}` is not a deictic day")]
    NotDeictic(String),
    #[error("no open trading day in the 14 days before {0}")]
    NoOpenDay(CalendarDate),
    #[error("`{0}` is not stock-market jargon in this domain")]
    UnknownJargon(String),
    #[error("a trading calendar cannot close every weekday")]
    AllWeekdaysClosed,
    #[error("holiday file line {line}: {message}")]
    HolidayFile { line: usize, message: String },
    #[error("bad report header `{0}`")]
    BadHeader(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Weekday {
    Monday,
    Tuesday,
    Wednesday,
    Thursday,
    Friday,
    Saturday,
    Sunday,
}

impl Weekday {
    pub const ALL: [Weekday; 7] = [
        Weekday::Monday,
        Weekday::Tuesday,
        Weekday::Wednesday,
        Weekday::Thursday,
        Weekday::Friday,
        Weekday::Saturday,
        Weekday::Sunday,
    ];

    pub fn days_from_monday(self) -> i64 {
        self as i64
    }

    pub fn name(self) -> &'static str {
        match self {
            Weekday::Monday => "Monday",
            Weekday::Tuesday => "Tuesday",
            Weekday::Wednesday => "Wednesday",
            Weekday::Thursday => "Thursday",
            Weekday::Friday => "Friday",
            Weekday::Saturday => "Saturday",
            Weekday::Sunday => "Sunday",
        }
    }
}

impl fmt::Display for Weekday {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn is_leap_year(year: i32) -> bool {
    (year % 4 == 0 && year % 100 != 0) || year % 400 == 0
}

pub fn days_in_month(year: i32, month: u8) -> u8 {
    match month {
        1 | 3 | 5 | 7 | 8 | 10 | 12 => 31,
        4 | 6 | 9 | 11 => 30,
        2 if is_leap_year(year) => 29,
        2 => 28,
        _ => 0,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CalendarDate {
    year: i32,
    month: u8,
    day: u8,
}

impl CalendarDate {
    pub fn new(year: i32, month: u8, day: u8) -> Result<Self, CalendarError> {
        let valid = (MIN_YEAR..=MAX_YEAR).contains(&year)
            && (1..=12).contains(&month)
            && day >= 1
            && day <= days_in_month(year, month);
        if valid {
            Ok(CalendarDate { year, month, day })
        } else {
            Err(CalendarError::InvalidDate(format!("{year:04}-{month:02}-{day:02}")))
        }
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

    /// Days since 1970-01-01.
    // Hinnant's days_from_civil, with years starting in March so the leap
    // day falls at the end of the 400-year era.
    pub fn to_days(self) -> i64 {
        let y = i64::from(self.year) - i64::from(self.month <= 2);
        let era = y.div_euclid(400);
        let yoe = y - era * 400;
        let m = i64::from(self.month);
        let mp = (m + 9) % 12;
        let doy = (153 * mp + 2) / 5 + i64::from(self.day) - 1;
        let doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
        era * 146_097 + doe - 719_468
    }

    pub fn from_days(days: i64) -> Result<Self, CalendarError> {
        let z = days + 719_468;
        let era = z.div_euclid(146_097);
        let doe = z - era * 146_097;
        let yoe = (doe - doe / 1460 + doe / 36_524 - doe / 146_096) / 365;
        let doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
        let mp = (5 * doy + 2) / 153;
        let day = (doy - (153 * mp + 2) / 5 + 1) as u8;
        let month = if mp < 10 { mp + 3 } else { mp - 9 } as u8;
        let year = yoe + era * 400 + i64::from(month <= 2);
        if !(i64::from(MIN_YEAR)..=i64::from(MAX_YEAR)).contains(&year) {
            return Err(CalendarError::RangeExceeded);
        }
        Ok(CalendarDate { year: year as i32, month, day })
    }

    pub fn weekday(self) -> Weekday {
        weekday_of(self)
    }

    pub fn add_days(self, n: i64) -> Result<Self, CalendarError> {
        add_days(self, n)
    }

    /// Signed day difference `self - other`.
    pub fn days_since(self, other: CalendarDate) -> i64 {
        self.to_days() - other.to_days()
    }

    /// Monday of the week containing this date.
    pub fn week_start(self) -> Result<Self, CalendarError> {
        self.add_days(-self.weekday().days_from_monday())
    }
}

impl fmt::Display for CalendarDate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:04}-{:02}-{:02}", self.year, self.month, self.day)
    }
}

impl FromStr for CalendarDate {
    type Err = CalendarError;

    /// Parses ISO-8601 `YYYY-MM-DD`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CalendarError::InvalidDate(s.to_string());
        let mut parts = s.trim().split('-');
        let (Some(y), Some(m), Some(d), None) = (parts.next(), parts.next(), parts.next(), parts.next())
        else {
            return Err(bad());
        };
        if y.len() != 4 || m.len() != 2 || d.len() != 2 {
            return Err(bad());
        }
        let year = y.parse().map_err(|_| bad())?;
        let month = m.parse().map_err(|_| bad())?;
        let day = d.parse().map_err(|_| bad())?;
        CalendarDate::new(year, month, day)
    }
}

pub fn weekday_of(date: CalendarDate) -> Weekday {
    // 1970-01-01 was a Thursday.
    let idx = (date.to_days() + 3).rem_euclid(7);
    Weekday::ALL[idx as usize]
}

pub fn add_days(date: CalendarDate, n: i64) -> Result<CalendarDate, CalendarError> {
    let days = date.to_days().checked_add(n).ok_or(CalendarError::RangeExceeded)?;
    CalendarDate::from_days(days)
}

pub fn resolve_deictic(entry: &LexEntry, reference: CalendarDate) -> Result<CalendarDate, CalendarError> {
    let offset = entry
        .deictic_offset
        .ok_or_else(|| CalendarError::NotDeictic(entry.surface.clone()))?;
    add_days(reference, i64::from(offset))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClockTime {
    pub hour: u8,
    pub minute: u8,
}

/// Date and time line at the top of an on-line market report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReportHeader {
    pub report_date: CalendarDate,
    pub report_time: Option<ClockTime>,
}

impl ReportHeader {
    /// Parses `DATE: YYYY-MM-DD[ hh:mm]`. Returns `Ok(None)` when the line is
    /// not a header at all.
    pub fn parse_line(line: &str) -> Result<Option<ReportHeader>, CalendarError> {
        let Some(rest) = line.trim().strip_prefix("DATE:") else {
            return Ok(None);
        };
        let bad = || CalendarError::BadHeader(line.trim().to_string());
        let mut fields = rest.split_whitespace();
        let report_date = fields.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let report_time = match fields.next() {
            None => None,
            Some(t) => {
                let (h, m) = t.split_once(':').ok_or_else(bad)?;
                let hour: u8 = h.parse().map_err(|_| bad())?;
                let minute: u8 = m.parse().map_err(|_| bad())?;
                if hour > 24 || minute > 59 || m.len() != 2 {
                    return Err(bad());
                }
                Some(ClockTime { hour, minute })
            }
        };
        if fields.next().is_some() {
            return Err(bad());
        }
        Ok(Some(ReportHeader { report_date, report_time }))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TradingCalendar {
    closed_weekdays: BTreeSet<Weekday>,
    holidays: BTreeSet<CalendarDate>,
}

impl Default for TradingCalendar {
    fn default() -> Self {
        TradingCalendar {
            closed_weekdays: [Weekday::Saturday, Weekday::Sunday].into(),
            holidays: BTreeSet::new(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TradingDay {
    pub date: CalendarDate,
    pub weekday: Weekday,
}

/// How far back `last_trading_day` looks before giving up.
const TRADING_SCAN_DAYS: i64 = 14;

impl TradingCalendar {
    pub fn new(
        closed_weekdays: BTreeSet<Weekday>,
        holidays: BTreeSet<CalendarDate>,
    ) -> Result<Self, CalendarError> {
        if closed_weekdays.len() >= Weekday::ALL.len() {
            return Err(CalendarError::AllWeekdaysClosed);
        }
        Ok(TradingCalendar { closed_weekdays, holidays })
    }

    pub fn with_holidays(holidays: BTreeSet<CalendarDate>) -> Self {
        TradingCalendar { holidays, ..Default::default() }
    }

    pub fn holidays(&self) -> &BTreeSet<CalendarDate> {
        &self.holidays
    }

    pub fn is_open(&self, date: CalendarDate) -> bool {
        !self.closed_weekdays.contains(&date.weekday()) && !self.holidays.contains(&date)
    }

    /// The last open day of the week before the reference date's week.
    pub fn last_trading_day(&self, reference: CalendarDate) -> Result<TradingDay, CalendarError> {
        let monday = reference.week_start()?;
        for back in 1..=TRADING_SCAN_DAYS {
            let date = monday.add_days(-back)?;
            if self.is_open(date) {
                return Ok(TradingDay { date, weekday: date.weekday() });
            }
        }
        Err(CalendarError::NoOpenDay(reference))
    }
}

/// Reads a holiday file: one `YYYY-MM-DD` per line, `#` comments.
pub fn load_holidays(source: &str) -> Result<BTreeSet<CalendarDate>, CalendarError> {
    let mut out = BTreeSet::new();
    for (idx, raw) in source.lines().enumerate() {
        let text = raw.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        let date = text.parse().map_err(|e: CalendarError| CalendarError::HolidayFile {
            line: idx + 1,
            message: e.to_string(),
        })?;
        out.insert(date);
    }
    Ok(out)
}

/// Picks the date with the given day of month closest to the reference,
/// looking at the reference month and its neighbours.
pub fn nearest_day_of_month(day: u8, reference: CalendarDate) -> Option<CalendarDate> {
    let (y, m) = (reference.year(), reference.month());
    let prev = if m == 1 { (y - 1, 12) } else { (y, m - 1) };
    let next = if m == 12 { (y + 1, 1) } else { (y, m + 1) };
    [prev, (y, m), next]
        .into_iter()
        .filter_map(|(y, m)| CalendarDate::new(y, m, day).ok())
        .min_by_key(|d| d.days_since(reference).abs())
}

/// Picks the month/day date closest to the reference, across adjacent years.
pub fn nearest_month_day(month: u8, day: u8, reference: CalendarDate) -> Option<CalendarDate> {
    let y = reference.year();
    [y - 1, y, y + 1]
        .into_iter()
        .filter_map(|y| CalendarDate::new(y, month, day).ok())
        .min_by_key(|d| d.days_since(reference).abs())
}

fn join_and(items: &[String]) -> String {
    match items {
        [] => String::new(),
        [one] => one.clone(),
        [init @ .., last] => format!("{} and {}", init.join(", "), last),
    }
}

/// Stock-report rendering of dates as weekday names, e.g. "Tuesday and Wednesday".
///
/// Falls back to a date rendering in `style` when any date lies outside
/// `window` days of the reference.
pub fn dates_to_weekday_expr(
    dates: &[CalendarDate],
    reference: CalendarDate,
    window: i64,
    style: DateStyle,
) -> String {
    let near = dates.iter().all(|d| d.days_since(reference).abs() <= window);
    let parts: Vec<String> = if near {
        dates.iter().map(|d| d.weekday().name().to_string()).collect()
    } else {
        dates
            .iter()
            .map(|d| {
                let np = SpecialCompoundNp {
                    month: Some(d.month()),
                    day_of_month: Some(DayOfMonth { value: d.day(), ordinal: false }),
                    ..Default::default()
                };
                realize_special_compound(&np, style, false).expect("date slots are filled")
            })
            .collect()
    };
    join_and(&parts)
}

pub fn date_to_weekday_expr(date: CalendarDate, reference: CalendarDate, style: DateStyle) -> String {
    dates_to_weekday_expr(&[date], reference, DEFAULT_WEEKDAY_WINDOW, style)
}

/// "Monday morning" for a session jargon term on a Monday report.
pub fn anchor_market_period(
    jargon: &LexEntry,
    reference: CalendarDate,
    domain: Domain,
) -> Result<String, CalendarError> {
    let unknown = || CalendarError::UnknownJargon(jargon.surface.clone());
    if domain != Domain::Stock || !jargon.has(Flag::Jargon) {
        return Err(unknown());
    }
    let period = jargon.stock_gloss.as_deref().ok_or_else(unknown)?;
    Ok(format!("{} {}", reference.weekday(), period))
}
