//! English surface realization: determiners, date styles, ordinals, clock
//! times and preposition choice for temporal adverbials.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::semantics::SemanticAttribute;
use crate::transfer::{
    Determiner, Dialect, Domain, DeterminedNp, EnglishTemporalStructure, SpecialCompoundNp,
    TimeSlot, TransferConfig,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Preposition {
    At,
    On,
    In,
    /// The adverbial is a bare noun phrase.
    #[serde(rename = "none")]
    Bare,
    Before,
    During,
    From,
    Until,
    For,
}

impl Preposition {
    pub fn word(self) -> Option<&'static str> {
        Some(match self {
            Preposition::At => "at",
            Preposition::On => "on",
            Preposition::In => "in",
            Preposition::Bare => return None,
            Preposition::Before => "before",
            Preposition::During => "during",
            Preposition::From => "from",
            Preposition::Until => "until",
            Preposition::For => "for",
        })
    }
}

impl fmt::Display for Preposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.word().unwrap_or("none"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown preposition `{0}`")]
pub struct UnknownPreposition(pub String);

impl FromStr for Preposition {
    type Err = UnknownPreposition;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.trim() {
            "at" => Preposition::At,
            "on" => Preposition::On,
            "in" => Preposition::In,
            "none" => Preposition::Bare,
            "before" => Preposition::Before,
            "during" => Preposition::During,
            "from" => Preposition::From,
            "until" => Preposition::Until,
            "for" => Preposition::For,
            other => return Err(UnknownPreposition(other.to_string())),
        })
    }
}

/// How a month + day-of-month date is written.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, clap::ValueEnum)]
pub enum DateStyle {
    /// February the 19th
    MonthTheOrdinal,
    /// February 19
    #[default]
    MonthCardinal,
    /// February 19th
    MonthOrdinal,
    /// the 19th of February
    OrdinalOfMonth,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizeError {
    #[error("special compound with no slot filled")]
    EmptyCompound,
    #[error("{what} {value} out of range")]
    OutOfRange { what: &'static str, value: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Realization {
    pub text: String,
    pub is_adverbial: bool,
    pub preposition_used: Preposition,
    pub determiner: Option<Determiner>,
    pub diagnostics: Vec<String>,
}

pub const MONTH_NAMES: [&str; 12] = [
    "January", "February", "March", "April", "May", "June", "July", "August", "September",
    "October", "November", "December",
];

pub fn month_name(month: u8) -> Result<&'static str, RealizeError> {
    MONTH_NAMES
        .get(usize::from(month).wrapping_sub(1))
        .copied()
        .ok_or(RealizeError::OutOfRange { what: "month", value: u32::from(month) })
}

pub fn render_ordinal(n: u32) -> Result<String, RealizeError> {
    if !(1..=31).contains(&n) {
        return Err(RealizeError::OutOfRange { what: "day of month", value: n });
    }
    let suffix = match (n % 10, n % 100) {
        (_, 11..=13) => "th",
        (1, _) => "st",
        (2, _) => "nd",
        (3, _) => "rd",
        _ => "th",
    };
    Ok(format!("{n}{suffix}"))
}

const ONES: [&str; 20] = [
    "zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine", "ten",
    "eleven", "twelve", "thirteen", "fourteen", "fifteen", "sixteen", "seventeen", "eighteen",
    "nineteen",
];
const TENS: [&str; 10] = [
    "", "", "twenty", "thirty", "forty", "fifty", "sixty", "seventy", "eighty", "ninety",
];

/// Number words for 0..=99; larger numbers stay as digits.
pub fn spell_cardinal(n: u32) -> String {
    match n {
        0..=19 => ONES[n as usize].to_string(),
        20..=99 if n.is_multiple_of(10) => TENS[(n / 10) as usize].to_string(),
        20..=99 => format!("{}-{}", TENS[(n / 10) as usize], ONES[(n % 10) as usize]),
        _ => n.to_string(),
    }
}

pub fn spell_ordinal(n: u32) -> Result<String, RealizeError> {
    if !(1..=31).contains(&n) {
        return Err(RealizeError::OutOfRange { what: "day of month", value: n });
    }
    let irregular = |k: u32| -> Option<&'static str> {
        Some(match k {
            1 => "first",
            2 => "second",
            3 => "third",
            5 => "fifth",
            8 => "eighth",
            9 => "ninth",
            12 => "twelfth",
            _ => return None,
        })
    };
    if let Some(word) = irregular(n) {
        return Ok(word.to_string());
    }
    if n > 20 && !n.is_multiple_of(10) {
        let unit = n % 10;
        let unit_word = irregular(unit).map(String::from).unwrap_or_else(|| format!("{}th", ONES[unit as usize]));
        return Ok(format!("{}-{}", TENS[(n / 10) as usize], unit_word));
    }
    Ok(match n {
        20 => "twentieth".to_string(),
        30 => "thirtieth".to_string(),
        _ => format!("{}th", ONES[n as usize]),
    })
}

/// `3 o'clock` on the 12-hour clock when no minute is given, `H:MM` otherwise.
pub fn render_time(hour: u8, minute: Option<u8>) -> Result<String, RealizeError> {
    if hour > 24 {
        return Err(RealizeError::OutOfRange { what: "hour", value: u32::from(hour) });
    }
    match minute {
        None => {
            let h = match hour % 12 {
                0 => 12,
                h => h,
            };
            Ok(format!("{h} o'clock"))
        }
        Some(m) if m > 59 => Err(RealizeError::OutOfRange { what: "minute", value: u32::from(m) }),
        Some(m) => Ok(format!("{hour}:{m:02}")),
    }
}

fn day_word(n: u8, spell: bool) -> Result<String, RealizeError> {
    if spell {
        spell_ordinal(u32::from(n))
    } else {
        render_ordinal(u32::from(n))
    }
}

/// Renders the date and time slots of a special compound noun phrase.
pub fn realize_special_compound(
    np: &SpecialCompoundNp,
    style: DateStyle,
    spell: bool,
) -> Result<String, RealizeError> {
    if np.is_empty() {
        return Err(RealizeError::EmptyCompound);
    }
    let month = np.month.map(month_name).transpose()?;
    let date = match (month, np.day_of_month) {
        (Some(m), Some(day)) => {
            if !(1..=31).contains(&day.value) {
                return Err(RealizeError::OutOfRange { what: "day of month", value: u32::from(day.value) });
            }
            let style = match style {
                DateStyle::MonthCardinal if day.ordinal => DateStyle::MonthOrdinal,
                s => s,
            };
            let text = match style {
                DateStyle::MonthTheOrdinal => format!("{m} the {}", day_word(day.value, spell)?),
                DateStyle::MonthCardinal => format!("{m} {}", day.value),
                DateStyle::MonthOrdinal => format!("{m} {}", day_word(day.value, spell)?),
                DateStyle::OrdinalOfMonth => format!("the {} of {m}", day_word(day.value, spell)?),
            };
            Some(match np.year {
                Some(y) if style == DateStyle::OrdinalOfMonth => format!("{text} {y}"),
                Some(y) => format!("{text}, {y}"),
                None => text,
            })
        }
        (None, Some(day)) => {
            let text = format!("the {}", day_word(day.value, spell)?);
            Some(match np.year {
                Some(y) => format!("{text}, {y}"),
                None => text,
            })
        }
        (Some(m), None) => Some(match np.year {
            Some(y) => format!("{m} {y}"),
            None => m.to_string(),
        }),
        (None, None) => np.year.map(|y| y.to_string()),
    };
    let time = np.time.map(|TimeSlot { hour, minute }| render_time(hour, minute)).transpose()?;
    Ok(match (time, date) {
        (Some(t), Some(d)) => {
            let joint = if np.day_of_month.is_some() { "on" } else { "in" };
            format!("{t} {joint} {d}")
        }
        (Some(t), None) => t,
        (None, Some(d)) => d,
        (None, None) => unreachable!("checked non-empty"),
    })
}

/// Determiner of a temporal noun phrase from its head and dependents.
pub fn choose_determiner(
    head: Option<SemanticAttribute>,
    night: bool,
    modifiers: &[SemanticAttribute],
) -> Determiner {
    use SemanticAttribute::*;
    // "Monday morning", "yesterday morning", "February 19": NULL modifier head.
    let names_a_time = |a: SemanticAttribute| {
        a.is_a(DeicticDay) || a.is_a(NamedDay) || a.is_a(DayOfMonth) || a == Month || a == Year
    };
    if !modifiers.is_empty() && modifiers.iter().copied().all(names_a_time) {
        return Determiner::Null;
    }
    let Some(head) = head else {
        return Determiner::The;
    };
    if night {
        return Determiner::Null;
    }
    match head {
        OrdinalDay => Determiner::The,
        PeriodOfDay | Week => Determiner::The,
        _ => Determiner::Null,
    }
}

/// What the preposition algorithm needs to know about a noun phrase.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NpProfile {
    pub head: String,
    pub attribute: Option<SemanticAttribute>,
    pub night: bool,
    pub determiner: Option<Determiner>,
    pub premodifiers: Vec<String>,
    pub postmodifiers: Vec<String>,
}

impl NpProfile {
    pub fn new(head: &str, attribute: Option<SemanticAttribute>) -> Self {
        NpProfile { head: head.to_string(), attribute, ..Default::default() }
    }

    pub fn with_determiner(mut self, d: Determiner) -> Self {
        self.determiner = Some(d);
        self
    }

    pub fn premodified(mut self, words: &str) -> Self {
        self.premodifiers.push(words.to_string());
        self
    }

    pub fn postmodified(mut self, words: &str) -> Self {
        self.postmodifiers.push(words.to_string());
        self
    }

    pub fn night(mut self) -> Self {
        self.night = true;
        self
    }

    /// Any pre- or postmodifier other than the determiner.
    pub fn is_modified(&self) -> bool {
        !self.premodifiers.is_empty() || !self.postmodifiers.is_empty()
    }
}

const DEICTIC_DAY_WORDS: [&str; 3] = ["today", "tomorrow", "yesterday"];
const DEICTIC_TERMS: [&str; 4] = ["this", "that", "last", "next"];
const AT_HEADS: [&str; 2] = ["beginning", "end"];

/// The preposition cascade for temporal adverbials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrepositionRules {
    pub quantifiers: Vec<String>,
}

impl Default for PrepositionRules {
    fn default() -> Self {
        PrepositionRules {
            quantifiers: ["every", "each", "some", "any"].map(String::from).to_vec(),
        }
    }
}

fn words(items: &[String]) -> impl Iterator<Item = String> + '_ {
    items
        .iter()
        .flat_map(|s| s.split_whitespace())
        .map(|w| w.trim_end_matches("'s").to_ascii_lowercase())
}

impl PrepositionRules {
    pub fn choose(&self, np: &NpProfile) -> Preposition {
        use SemanticAttribute::*;
        let head = np.head.to_ascii_lowercase();
        let is_deictic_head = DEICTIC_DAY_WORDS.contains(&head.as_str())
            || head == "tonight"
            || np.attribute == Some(DeicticDay);
        let det_word = np.determiner.and_then(Determiner::word);
        // A multi-word gloss such as "this year" carries its own premodifiers.
        let head_words: Vec<String> = head.split_whitespace().map(String::from).collect();
        let gloss_premods = head_words.split_last().map_or(&[][..], |(_, init)| init);
        let premod = || {
            det_word
                .map(String::from)
                .into_iter()
                .chain(words(&np.premodifiers))
                .chain(gloss_premods.iter().cloned())
        };
        let deictic_premod = premod().any(|w| {
            DEICTIC_TERMS.contains(&w.as_str())
                || DEICTIC_DAY_WORDS.contains(&w.as_str())
                || self.quantifiers.contains(&w)
        });
        let ago_later = words(&np.postmodifiers).any(|w| w == "ago" || w == "later");
        if is_deictic_head || deictic_premod || ago_later {
            return Preposition::Bare;
        }

        let attr = np.attribute;
        let under = |a: SemanticAttribute| attr.is_some_and(|x| x.is_a(a));
        let modified = np.is_modified();
        if under(Hour) || (np.night && !modified) || AT_HEADS.contains(&head.as_str()) {
            return Preposition::At;
        }
        if under(Day) || (under(PeriodOfDay) && modified) {
            return Preposition::On;
        }
        Preposition::In
    }
}

pub fn choose_preposition(np: &NpProfile) -> Preposition {
    PrepositionRules::default().choose(np)
}

/// `on` is optional before weekdays (American English) and modified periods
/// of the day ("Friday morning").
pub fn on_is_optional(np: &NpProfile) -> bool {
    use SemanticAttribute::*;
    np.attribute == Some(DayOfWeek) || (np.attribute == Some(PeriodOfDay) && np.is_modified())
}

fn suppress_optional_on(config: &TransferConfig) -> bool {
    config.domain == Domain::Stock || (config.dialect == Dialect::American && !config.emit_optional_on)
}

fn join_nonempty<'a>(parts: impl IntoIterator<Item = &'a str>) -> String {
    parts.into_iter().filter(|s| !s.is_empty()).collect::<Vec<_>>().join(" ")
}

pub fn realize_determined(np: &DeterminedNp) -> String {
    let det = np.determiner.word().unwrap_or("");
    join_nonempty(
        std::iter::once(det)
            .chain(np.premodifiers.iter().map(String::as_str))
            .chain(std::iter::once(np.head.as_str()))
            .chain(np.postmodifiers.iter().map(String::as_str)),
    )
}

pub fn compound_determiner(np: &SpecialCompoundNp, style: DateStyle) -> Determiner {
    match (np.month, np.day_of_month, np.time) {
        (None, Some(_), None) => Determiner::The,
        (Some(_), Some(_), None) if style == DateStyle::OrdinalOfMonth => Determiner::The,
        _ => Determiner::Null,
    }
}

/// Surface string of a structure used as a plain noun phrase.
pub fn realize_np(structure: &EnglishTemporalStructure, config: &TransferConfig) -> Result<String, RealizeError> {
    Ok(match structure {
        EnglishTemporalStructure::DeterminedNp(np) => realize_determined(np),
        EnglishTemporalStructure::SpecialCompoundNp(np) => {
            realize_special_compound(np, config.date_style, config.spell_numbers)?
        }
        EnglishTemporalStructure::AdverbialAttachment { base, adjunct } => {
            let adjunct = realize_adverbial(adjunct, config)?;
            format!("{} {}", realize_np(base, config)?, adjunct.text)
        }
        EnglishTemporalStructure::GenitiveNp { possessor, possessed } => {
            let owner = realize_np(possessor, config)?;
            let mark = if owner.ends_with('s') { "'" } else { "'s" };
            format!("{owner}{mark} {possessed}")
        }
        EnglishTemporalStructure::Passthrough(text) => text.clone(),
    })
}

pub fn profile(structure: &EnglishTemporalStructure, config: &TransferConfig) -> Result<NpProfile, RealizeError> {
    Ok(match structure {
        EnglishTemporalStructure::DeterminedNp(np) => NpProfile {
            head: np.head.clone(),
            attribute: np.attribute,
            night: np.night,
            determiner: Some(np.determiner),
            premodifiers: np.premodifiers.clone(),
            postmodifiers: np.postmodifiers.clone(),
        },
        EnglishTemporalStructure::SpecialCompoundNp(np) => NpProfile {
            head: realize_special_compound(np, config.date_style, config.spell_numbers)?,
            attribute: Some(np.narrowest_attribute()),
            determiner: Some(compound_determiner(np, config.date_style)),
            ..Default::default()
        },
        // The base decides; a trailing adjunct never adds a preposition.
        EnglishTemporalStructure::AdverbialAttachment { base, .. } => profile(base, config)?,
        EnglishTemporalStructure::GenitiveNp { possessor, possessed } => NpProfile {
            head: possessed.clone(),
            attribute: None,
            premodifiers: vec![realize_np(possessor, config)?],
            ..Default::default()
        },
        EnglishTemporalStructure::Passthrough(text) => NpProfile::new(text, None),
    })
}

pub fn determiner_of(structure: &EnglishTemporalStructure, config: &TransferConfig) -> Option<Determiner> {
    match structure {
        EnglishTemporalStructure::DeterminedNp(np) => Some(np.determiner),
        EnglishTemporalStructure::SpecialCompoundNp(np) => Some(compound_determiner(np, config.date_style)),
        EnglishTemporalStructure::AdverbialAttachment { base, .. } => determiner_of(base, config),
        EnglishTemporalStructure::GenitiveNp { .. } | EnglishTemporalStructure::Passthrough(_) => None,
    }
}

/// Realizes a structure as a plain noun phrase.
pub fn realize_plain(structure: &EnglishTemporalStructure, config: &TransferConfig) -> Result<Realization, RealizeError> {
    Ok(Realization {
        text: realize_np(structure, config)?,
        is_adverbial: false,
        preposition_used: Preposition::Bare,
        determiner: determiner_of(structure, config),
        diagnostics: Vec::new(),
    })
}

/// Realizes a structure as a temporal adverbial, choosing its preposition.
pub fn realize_adverbial(
    structure: &EnglishTemporalStructure,
    config: &TransferConfig,
) -> Result<Realization, RealizeError> {
    let determiner = determiner_of(structure, config);
    let np_text = realize_np(structure, config)?;
    let preposition = match structure {
        EnglishTemporalStructure::Passthrough(_) => Preposition::Bare,
        EnglishTemporalStructure::DeterminedNp(DeterminedNp { preposition: Some(p), .. }) => *p,
        _ => {
            let profile = profile(structure, config)?;
            match config.prepositions.choose(&profile) {
                Preposition::On if suppress_optional_on(config) && on_is_optional(&profile) => {
                    Preposition::Bare
                }
                p => p,
            }
        }
    };
    let text = match preposition.word() {
        Some(w) => format!("{w} {np_text}"),
        None => np_text,
    };
    Ok(Realization { text, is_adverbial: true, preposition_used: preposition, determiner, diagnostics: Vec::new() })
}

/// Adverbial headed by a preposition the source particle already fixed
/// (`mae` "before", `kara` "from", ...).
pub fn realize_with_preposition(
    structure: &EnglishTemporalStructure,
    preposition: Preposition,
    config: &TransferConfig,
) -> Result<Realization, RealizeError> {
    let np_text = realize_np(structure, config)?;
    let text = match preposition.word() {
        Some(w) => format!("{w} {np_text}"),
        None => np_text,
    };
    Ok(Realization {
        text,
        is_adverbial: true,
        preposition_used: preposition,
        determiner: determiner_of(structure, config),
        diagnostics: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transfer::DayOfMonth;
    use SemanticAttribute::*;

    fn brute_suffix(n: u32) -> &'static str {
        let last_two = n % 100;
        if (11..=13).contains(&last_two) {
            return "th";
        }
        match n % 10 {
            1 => "st",
            2 => "nd",
            3 => "rd",
            _ => "th",
        }
    }

    #[test]
    fn ordinals() {
        assert_eq!(render_ordinal(19).unwrap(), "19th");
        assert_eq!(render_ordinal(1).unwrap(), "1st");
        assert_eq!(render_ordinal(22).unwrap(), "22nd");
        assert_eq!(render_ordinal(11).unwrap(), "11th");
        assert_eq!(render_ordinal(13).unwrap(), "13th");
        assert_eq!(render_ordinal(31).unwrap(), "31st");
        assert!(render_ordinal(0).is_err());
        assert!(render_ordinal(32).is_err());
        for n in 1..=31 {
            assert_eq!(render_ordinal(n).unwrap(), format!("{n}{}", brute_suffix(n)));
        }
    }

    #[test]
    fn spelled_numbers() {
        assert_eq!(spell_cardinal(13), "thirteen");
        assert_eq!(spell_cardinal(21), "twenty-one");
        assert_eq!(spell_cardinal(40), "forty");
        assert_eq!(spell_cardinal(1997), "1997");
        assert_eq!(spell_ordinal(13).unwrap(), "thirteenth");
        assert_eq!(spell_ordinal(19).unwrap(), "nineteenth");
        assert_eq!(spell_ordinal(22).unwrap(), "twenty-second");
        assert_eq!(spell_ordinal(30).unwrap(), "thirtieth");
        assert_eq!(spell_ordinal(31).unwrap(), "thirty-first");
    }

    #[test]
    fn times() {
        assert_eq!(render_time(3, None).unwrap(), "3 o'clock");
        assert_eq!(render_time(15, None).unwrap(), "3 o'clock");
        assert_eq!(render_time(0, None).unwrap(), "12 o'clock");
        assert_eq!(render_time(12, Some(15)).unwrap(), "12:15");
        assert_eq!(render_time(0, Some(0)).unwrap(), "0:00");
        assert!(render_time(25, None).is_err());
        assert!(render_time(3, Some(60)).is_err());
    }

    fn feb19() -> SpecialCompoundNp {
        SpecialCompoundNp {
            month: Some(2),
            day_of_month: Some(DayOfMonth { value: 19, ordinal: false }),
            ..Default::default()
        }
    }

    #[test]
    fn date_styles() {
        let np = feb19();
        let r = |s| realize_special_compound(&np, s, false).unwrap();
        assert_eq!(r(DateStyle::MonthTheOrdinal), "February the 19th");
        assert_eq!(r(DateStyle::MonthCardinal), "February 19");
        assert_eq!(r(DateStyle::MonthOrdinal), "February 19th");
        assert_eq!(r(DateStyle::OrdinalOfMonth), "the 19th of February");

        let with_year = SpecialCompoundNp { year: Some(1997), ..feb19() };
        assert_eq!(
            realize_special_compound(&with_year, DateStyle::MonthCardinal, false).unwrap(),
            "February 19, 1997"
        );
        assert_eq!(
            realize_special_compound(&with_year, DateStyle::OrdinalOfMonth, false).unwrap(),
            "the 19th of February 1997"
        );
        let year = SpecialCompoundNp { year: Some(1997), ..Default::default() };
        for style in [DateStyle::MonthTheOrdinal, DateStyle::MonthCardinal, DateStyle::MonthOrdinal, DateStyle::OrdinalOfMonth] {
            assert_eq!(realize_special_compound(&year, style, false).unwrap(), "1997");
        }
        assert_eq!(
            realize_special_compound(&SpecialCompoundNp::default(), DateStyle::MonthCardinal, false),
            Err(RealizeError::EmptyCompound)
        );
    }

    #[test]
    fn forced_ordinal_overrides_cardinal_style() {
        let mut np = feb19();
        np.day_of_month = Some(DayOfMonth { value: 19, ordinal: true });
        assert_eq!(realize_special_compound(&np, DateStyle::MonthCardinal, false).unwrap(), "February 19th");
    }

    #[test]
    fn determiners() {
        assert_eq!(choose_determiner(Some(DayOfWeek), false, &[]), Determiner::Null);
        assert_eq!(choose_determiner(Some(OrdinalDay), false, &[]), Determiner::The);
        assert_eq!(choose_determiner(Some(CardinalDay), false, &[Month]), Determiner::Null);
        assert_eq!(choose_determiner(Some(PeriodOfDay), false, &[DayOfWeek]), Determiner::Null);
        assert_eq!(choose_determiner(Some(PeriodOfDay), false, &[]), Determiner::The);
        assert_eq!(choose_determiner(Some(PeriodOfDay), true, &[]), Determiner::Null);
    }

    #[test]
    fn cascade_order() {
        let np = NpProfile::new("Saturday", Some(DayOfWeek)).with_determiner(Determiner::Next);
        assert_eq!(choose_preposition(&np), Preposition::Bare);
        let np = NpProfile::new("Saturday", Some(DayOfWeek)).with_determiner(Determiner::Null);
        assert_eq!(choose_preposition(&np), Preposition::On);
    }

    #[test]
    fn quantifiers_are_configurable() {
        let np = NpProfile::new("Monday", Some(DayOfWeek)).premodified("most");
        assert_eq!(choose_preposition(&np), Preposition::On);
        let rules = PrepositionRules { quantifiers: vec!["most".into()] };
        assert_eq!(rules.choose(&np), Preposition::Bare);
    }

    #[test]
    fn preposition_names_parse() {
        for p in ["at", "on", "in", "none", "before", "during", "from", "until", "for"] {
            assert_eq!(p.parse::<Preposition>().unwrap().to_string(), p);
        }
    }
}
