//! One expression in, one English rendering out.

use thiserror::Error;

use crate::calendar::{
    anchor_market_period, dates_to_weekday_expr, nearest_day_of_month, nearest_month_day,
    resolve_deictic, CalendarDate, CalendarError, TradingCalendar,
};
use crate::generation::{
    realize_adverbial, realize_plain, realize_with_preposition, Realization, RealizeError,
};
use crate::parser::{self, is_adverbial_context, Counter, Head, NumeralCompound, ParseError, Particle, TemporalPhrase};
use crate::semantics::{Flag, Lexicon, SemanticAttribute};
use crate::transfer::{
    map_particle, transfer, Determiner, DeterminedNp, Domain, EnglishTemporalStructure,
    TransferConfig, TransferError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TranslateError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Transfer(#[from] TransferError),
    #[error(transparent)]
    Realize(#[from] RealizeError),
    #[error(transparent)]
    Calendar(#[from] CalendarError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Translation {
    pub structure: EnglishTemporalStructure,
    pub realization: Realization,
}

#[derive(Debug, Clone)]
pub struct Engine<'l> {
    lexicon: &'l Lexicon,
    config: TransferConfig,
    calendar: TradingCalendar,
}

impl<'l> Engine<'l> {
    pub fn new(lexicon: &'l Lexicon, config: TransferConfig, calendar: TradingCalendar) -> Result<Self, TransferError> {
        config.validate()?;
        Ok(Engine { lexicon, config, calendar })
    }

    pub fn config(&self) -> &TransferConfig {
        &self.config
    }

    pub fn translate(&self, input: &str) -> Result<Translation, TranslateError> {
        let phrase = parser::parse(input, self.lexicon)?;
        if self.config.domain == Domain::Stock {
            if let Some(structure) = self.stock_conversion(&phrase)? {
                return self.realize(&phrase, structure, Vec::new());
            }
        }
        let transferred = transfer(&phrase, &self.config)?;
        self.realize(&phrase, transferred.structure, transferred.diagnostics)
    }

    fn realize(
        &self,
        phrase: &TemporalPhrase<'_>,
        structure: EnglishTemporalStructure,
        diagnostics: Vec<String>,
    ) -> Result<Translation, TranslateError> {
        let fixed = matches!(&structure, EnglishTemporalStructure::DeterminedNp(np) if np.preposition.is_some());
        let mut realization = match phrase.particle {
            Some(Particle::Wa) => realize_plain(&structure, &self.config)?,
            Some(p) => match map_particle(p, self.lexicon)? {
                Some(prep) => realize_with_preposition(&structure, prep, &self.config)?,
                None => realize_adverbial(&structure, &self.config)?,
            },
            None if fixed || is_adverbial_context(phrase) => realize_adverbial(&structure, &self.config)?,
            None => realize_plain(&structure, &self.config)?,
        };
        realization.diagnostics = diagnostics;
        Ok(Translation { structure, realization })
    }

    /// Stock-report conversions: dates to weekdays, the week end to the last
    /// trading day, and session jargon anchored to the report's weekday.
    fn stock_conversion(&self, phrase: &TemporalPhrase<'_>) -> Result<Option<EnglishTemporalStructure>, TranslateError> {
        let Some(reference) = self.config.reference_date else {
            return Err(TransferError::MissingReferenceDate.into());
        };
        if !phrase.modifiers.is_empty() {
            return Ok(None);
        }
        let weekdays = |dates: &[CalendarDate]| {
            let near = dates
                .iter()
                .all(|d| d.days_since(reference).abs() <= self.config.weekday_window);
            let text = dates_to_weekday_expr(dates, reference, self.config.weekday_window, self.config.date_style);
            let attribute = if near { SemanticAttribute::DayOfWeek } else { SemanticAttribute::OrdinalDay };
            Some(DeterminedNp::new(Determiner::Null, &text, Some(attribute)).into())
        };

        if let Some(prefix) = phrase.prefix {
            let weekend = phrase.head.lexical().is_some_and(|e| e.has(Flag::Weekend));
            if weekend && prefix.anchor_offset == Some(-1) {
                let day = self.calendar.last_trading_day(reference)?;
                return Ok(Some(
                    DeterminedNp::new(Determiner::Last, day.weekday.name(), Some(SemanticAttribute::DayOfWeek)).into(),
                ));
            }
            return Ok(None);
        }

        Ok(match &phrase.head {
            Head::Lexical(entry) if entry.has(Flag::Jargon) => {
                anchor_market_period(entry, reference, Domain::Stock)?;
                let period = entry.stock_gloss.as_deref().unwrap_or_default();
                let mut np = DeterminedNp::new(Determiner::Null, period, Some(SemanticAttribute::PeriodOfDay));
                np.premodifiers.push(reference.weekday().name().to_string());
                Some(np.into())
            }
            Head::Lexical(entry) if entry.deictic_offset.is_some() => {
                weekdays(&[resolve_deictic(entry, reference)?])
            }
            Head::Compound(c) if c.counter == Counter::Nichi && !c.duration => {
                nearest_day_of_month(c.value as u8, reference).and_then(|d| weekdays(&[d]))
            }
            Head::Fused(cs) => match cs.as_slice() {
                [NumeralCompound { counter: Counter::Gatsu, value: m, .. }, NumeralCompound { counter: Counter::Nichi, value: d, .. }] => {
                    nearest_month_day(*m as u8, *d as u8, reference).and_then(|d| weekdays(&[d]))
                }
                [NumeralCompound { counter: Counter::Nen, value: y, .. }, NumeralCompound { counter: Counter::Gatsu, value: m, .. }, NumeralCompound { counter: Counter::Nichi, value: d, .. }] => {
                    match CalendarDate::new(*y as i32, *m as u8, *d as u8) {
                        Ok(date) => weekdays(&[date]),
                        Err(_) => None,
                    }
                }
                _ => None,
            },
            Head::Range { counter: Counter::Nichi, first, last } => {
                let start = nearest_day_of_month(*first as u8, reference);
                let dates: Option<Vec<CalendarDate>> = start.map(|s| {
                    (0..=i64::from(last - first)).filter_map(|k| s.add_days(k).ok()).collect()
                });
                dates.and_then(|ds| weekdays(&ds))
            }
            _ => None,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generation::Preposition;

    fn general() -> Engine<'static> {
        Engine::new(Lexicon::builtin(), TransferConfig::default(), TradingCalendar::default()).unwrap()
    }

    fn stock(reference: &str) -> Engine<'static> {
        let config = TransferConfig {
            domain: Domain::Stock,
            reference_date: Some(reference.parse().unwrap()),
            ..Default::default()
        };
        Engine::new(Lexicon::builtin(), config, TradingCalendar::default()).unwrap()
    }

    fn text(engine: &Engine<'_>, input: &str) -> String {
        engine.translate(input).unwrap().realization.text
    }

    #[test]
    fn general_mode() {
        let e = general();
        assert_eq!(text(&e, "2-gatsu-19-nichi-ni"), "on February 19");
        assert_eq!(text(&e, "kinō-no ban"), "last night");
        assert_eq!(text(&e, "kinō"), "yesterday");
        assert_eq!(text(&e, "3-ji-ni"), "at 3 o'clock");
        assert_eq!(text(&e, "fuyu-ni"), "in winter");
        assert_eq!(text(&e, "ban-ni"), "at night");
        assert_eq!(text(&e, "asa-ni"), "in the morning");
        assert_eq!(text(&e, "13-nichi-kan"), "for 13 days");
        assert_eq!(text(&e, "kurisumasu-mae"), "before Christmas");
        assert_eq!(text(&e, "3-ji-kara"), "from 3 o'clock");
        assert_eq!(text(&e, "natsu-chū"), "during summer");
        assert_eq!(text(&e, "ashita-no akegata-ni"), "at dawn tomorrow");
        assert_eq!(text(&e, "raishū-no doyōbi-ni"), "next Saturday");
        assert_eq!(text(&e, "getsuyōbi-no asa-ni"), "on Monday morning");
        assert_eq!(text(&e, "12-13-nichi-ni"), "on the 12th and 13th");
    }

    #[test]
    fn ambiguous_bare_day_count() {
        let t = general().translate("13-nichi").unwrap();
        assert_eq!(t.realization.text, "the 13th");
        assert_eq!(t.realization.diagnostics.len(), 1);
        let t = general().translate("13-nichi-ni").unwrap();
        assert!(t.realization.diagnostics.is_empty());
    }

    #[test]
    fn stock_mode() {
        let e = stock("1997-02-17");
        let t = e.translate("zen-shūmatsu").unwrap();
        assert_eq!(t.realization.text, "last Friday");
        assert_eq!(t.realization.preposition_used, Preposition::Bare);
        assert_eq!(text(&e, "maebike"), "Monday morning");
        assert_eq!(text(&e, "maebike-ni"), "Monday morning");
        assert_eq!(text(&e, "kinō"), "Sunday");

        let e = stock("1997-08-11");
        assert_eq!(text(&e, "12-13-nichi-ni"), "Tuesday and Wednesday");
        assert_eq!(text(&e, "8-gatsu-12-nichi-ni"), "Tuesday");
        assert_eq!(text(&e, "9-gatsu-19-nichi-ni"), "on September 19");
    }

    #[test]
    fn holidays_move_the_last_trading_day() {
        let config = TransferConfig {
            domain: Domain::Stock,
            reference_date: Some("1997-02-17".parse().unwrap()),
            ..Default::default()
        };
        let cal = TradingCalendar::with_holidays(["1997-02-14".parse().unwrap()].into());
        let e = Engine::new(Lexicon::builtin(), config, cal).unwrap();
        assert_eq!(text(&e, "zen-shūmatsu"), "last Thursday");
    }

    #[test]
    fn unknown_lemma_is_an_error() {
        assert!(matches!(
            general().translate("xyzzy-ni"),
            Err(TranslateError::Parse(ParseError::UnknownLemma(_)))
        ));
    }
}
