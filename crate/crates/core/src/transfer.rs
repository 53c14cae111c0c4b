//! Transfer of parsed Japanese temporal phrases into abstract English
//! structures.
//!
//! Single nouns are replaced by their lexicon glosses; numeral compounds
//! become special compound noun phrases with year/month/day/time slots; and
//! genitive pairs go through rule tables keyed on the semantic attributes of
//! dependent and head.

use serde::Serialize;
use thiserror::Error;

use crate::calendar::{CalendarDate, DEFAULT_WEEKDAY_WINDOW};
use crate::generation::{
    choose_determiner, month_name, realize_np, realize_special_compound, render_ordinal,
    spell_cardinal, DateStyle, Preposition, PrepositionRules, RealizeError,
};
use crate::parser::{Counter, Head, NumeralCompound, Particle, TemporalPhrase};
use crate::semantics::{Flag, LexEntry, Lexicon, SemanticAttribute};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Determiner {
    /// Empty determiner with definite, uniquely locatable reference ("Ø Monday").
    #[serde(rename = "NULL")]
    Null,
    /// Empty determiner of indefinite plurals and mass nouns ("for Ø 13 days").
    #[serde(rename = "ZERO")]
    Zero,
    #[serde(rename = "the")]
    The,
    #[serde(rename = "this")]
    This,
    #[serde(rename = "last")]
    Last,
    #[serde(rename = "next")]
    Next,
    #[serde(rename = "every")]
    Every,
    #[serde(rename = "some")]
    Some,
    #[serde(rename = "a")]
    A,
}

impl Determiner {
    /// Surface word; `None` for the phonologically empty determiners.
    pub fn word(self) -> Option<&'static str> {
        Some(match self {
            Determiner::Null | Determiner::Zero => return None,
            Determiner::The => "the",
            Determiner::This => "this",
            Determiner::Last => "last",
            Determiner::Next => "next",
            Determiner::Every => "every",
            Determiner::Some => "some",
            Determiner::A => "a",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeterminedNp {
    pub determiner: Determiner,
    pub premodifiers: Vec<String>,
    pub head: String,
    pub postmodifiers: Vec<String>,
    pub attribute: Option<SemanticAttribute>,
    pub night: bool,
    /// Set when the construction fixes its own preposition ("for 13 days").
    pub preposition: Option<Preposition>,
}

impl DeterminedNp {
    pub fn new(determiner: Determiner, head: &str, attribute: Option<SemanticAttribute>) -> Self {
        DeterminedNp {
            determiner,
            premodifiers: Vec::new(),
            head: head.to_string(),
            postmodifiers: Vec::new(),
            attribute,
            night: false,
            preposition: None,
        }
    }

    fn pre(mut self, words: &str) -> Self {
        self.premodifiers.push(words.to_string());
        self
    }

    fn post(mut self, words: &str) -> Self {
        self.postmodifiers.push(words.to_string());
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DayOfMonth {
    pub value: u8,
    pub ordinal: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TimeSlot {
    pub hour: u8,
    pub minute: Option<u8>,
}

/// A date or time with no single head: any of year, month, day of month and
/// clock time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SpecialCompoundNp {
    pub year: Option<u32>,
    pub month: Option<u8>,
    pub day_of_month: Option<DayOfMonth>,
    pub time: Option<TimeSlot>,
}

impl SpecialCompoundNp {
    pub fn is_empty(&self) -> bool {
        self.year.is_none() && self.month.is_none() && self.day_of_month.is_none() && self.time.is_none()
    }

    /// The narrowest filled unit acts as head for preposition choice.
    pub fn narrowest_attribute(&self) -> SemanticAttribute {
        if self.time.is_some() {
            SemanticAttribute::NumberedHour
        } else if let Some(day) = self.day_of_month {
            if day.ordinal || self.month.is_none() {
                SemanticAttribute::OrdinalDay
            } else {
                SemanticAttribute::CardinalDay
            }
        } else if self.month.is_some() {
            SemanticAttribute::Month
        } else {
            SemanticAttribute::Year
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EnglishTemporalStructure {
    DeterminedNp(DeterminedNp),
    SpecialCompoundNp(SpecialCompoundNp),
    /// A noun phrase followed by an adverbial modifying it: "dawn tomorrow".
    AdverbialAttachment {
        base: Box<EnglishTemporalStructure>,
        adjunct: Box<EnglishTemporalStructure>,
    },
    GenitiveNp {
        possessor: Box<EnglishTemporalStructure>,
        possessed: String,
    },
    /// Untranslated source text.
    Passthrough(String),
}

impl EnglishTemporalStructure {
    pub fn kind_name(&self) -> &'static str {
        match self {
            EnglishTemporalStructure::DeterminedNp(_) => "DeterminedNP",
            EnglishTemporalStructure::SpecialCompoundNp(_) => "SpecialCompoundNP",
            EnglishTemporalStructure::AdverbialAttachment { .. } => "AdverbialAttachment",
            EnglishTemporalStructure::GenitiveNp { .. } => "GenitiveNP",
            EnglishTemporalStructure::Passthrough(_) => "Passthrough",
        }
    }

    pub fn as_determined(&self) -> Option<&DeterminedNp> {
        match self {
            EnglishTemporalStructure::DeterminedNp(np) => Some(np),
            _ => None,
        }
    }
}

impl From<DeterminedNp> for EnglishTemporalStructure {
    fn from(np: DeterminedNp) -> Self {
        EnglishTemporalStructure::DeterminedNp(np)
    }
}

impl From<SpecialCompoundNp> for EnglishTemporalStructure {
    fn from(np: SpecialCompoundNp) -> Self {
        EnglishTemporalStructure::SpecialCompoundNp(np)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, clap::ValueEnum)]
pub enum Dialect {
    #[default]
    American,
    British,
    Australian,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, clap::ValueEnum)]
pub enum Domain {
    #[default]
    General,
    Stock,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferConfig {
    pub dialect: Dialect,
    pub date_style: DateStyle,
    pub domain: Domain,
    pub reference_date: Option<CalendarDate>,
    /// Generate `on` where English allows dropping it.
    pub emit_optional_on: bool,
    pub spell_numbers: bool,
    pub prepositions: PrepositionRules,
    /// Stock mode renders dates within this many days of the report as weekdays.
    pub weekday_window: i64,
}

impl Default for TransferConfig {
    fn default() -> Self {
        TransferConfig {
            dialect: Dialect::default(),
            date_style: DateStyle::default(),
            domain: Domain::default(),
            reference_date: None,
            emit_optional_on: true,
            spell_numbers: false,
            prepositions: PrepositionRules::default(),
            weekday_window: DEFAULT_WEEKDAY_WINDOW,
        }
    }
}

impl TransferConfig {
    pub fn validate(&self) -> Result<(), TransferError> {
        if self.domain == Domain::Stock && self.reference_date.is_none() {
            return Err(TransferError::MissingReferenceDate);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransferError {
    #[error("`{0}` has no English gloss")]
    NoGloss(String),
    #[error("{0} is out of range")]
    SlotRange(String),
    #[error("{0} is a duration, not a time position")]
    DurationNotPosition(String),
    #[error("no rule combines {0}")]
    UnsupportedCombination(String),
    #[error("no preposition for particle `{0}`")]
    UnknownParticle(String),
    #[error("stock domain needs a reference date")]
    MissingReferenceDate,
    #[error(transparent)]
    Realize(#[from] RealizeError),
}

/// Result of transferring one phrase.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transferred {
    pub structure: EnglishTemporalStructure,
    pub diagnostics: Vec<String>,
}

fn gloss_of<'e>(entry: &'e LexEntry, config: &TransferConfig) -> Result<&'e str, TransferError> {
    if config.domain == Domain::Stock {
        if let Some(g) = entry.stock_gloss.as_deref() {
            return Ok(g);
        }
    }
    entry.gloss().ok_or_else(|| TransferError::NoGloss(entry.surface.clone()))
}

/// Replaces a single noun by its first gloss.
pub fn transfer_single(head: &LexEntry) -> Result<EnglishTemporalStructure, TransferError> {
    transfer_single_with(head, &TransferConfig::default())
}

pub fn transfer_single_with(head: &LexEntry, config: &TransferConfig) -> Result<EnglishTemporalStructure, TransferError> {
    let gloss = gloss_of(head, config)?;
    // Anchored glosses ("this week", "the previous day") carry their own determiner.
    let determiner = if head.anchor_offset.is_some() {
        Determiner::Null
    } else {
        choose_determiner(head.attribute, head.is_night(), &[])
    };
    let mut np = DeterminedNp::new(determiner, gloss, head.attribute);
    np.night = head.is_night();
    Ok(np.into())
}

/// Fills special compound slots from numeral+counter compounds.
pub fn transfer_compound_date(head: &[NumeralCompound]) -> Result<SpecialCompoundNp, TransferError> {
    let mut np = SpecialCompoundNp::default();
    for c in head {
        if c.duration {
            return Err(TransferError::DurationNotPosition(c.to_string()));
        }
        if !c.in_range() {
            return Err(TransferError::SlotRange(c.to_string()));
        }
        match c.counter {
            Counter::Nen => np.year = Some(c.value),
            Counter::Gatsu => np.month = Some(c.value as u8),
            Counter::Nichi => np.day_of_month = Some(DayOfMonth { value: c.value as u8, ordinal: false }),
            Counter::Ji => np.time = Some(TimeSlot { hour: c.value as u8, minute: None }),
            Counter::Fun => {
                let hour = np
                    .time
                    .map(|t| t.hour)
                    .ok_or_else(|| TransferError::UnsupportedCombination(format!("{c} without an hour")))?;
                np.time = Some(TimeSlot { hour, minute: Some(c.value as u8) });
            }
        }
    }
    if np.is_empty() {
        return Err(TransferError::UnsupportedCombination("an empty compound".into()));
    }
    Ok(np)
}

fn unit_noun(counter: Counter) -> &'static str {
    match counter {
        Counter::Nen => "year",
        Counter::Gatsu => "month",
        Counter::Nichi => "day",
        Counter::Ji => "hour",
        Counter::Fun => "minute",
    }
}

/// `13-nichi-kan` → "for 13 days".
pub fn transfer_duration(head: NumeralCompound, spell: bool) -> EnglishTemporalStructure {
    let count = if spell { spell_cardinal(head.value) } else { head.value.to_string() };
    let unit = unit_noun(head.counter);
    let unit = if head.value == 1 { unit.to_string() } else { format!("{unit}s") };
    let mut np = DeterminedNp::new(Determiner::Zero, &unit, None).pre(&count);
    np.preposition = Some(Preposition::For);
    np.into()
}

/// "the B before the B before last" / "the B after next" and longer chains.
fn offset_chain(b: &str, offset: i32, attribute: Option<SemanticAttribute>) -> Option<DeterminedNp> {
    let (step, end) = match offset {
        o if o <= -2 => ("before", "last"),
        o if o >= 2 => ("after", "next"),
        _ => return None,
    };
    let inner = format!("{step} the {b} ").repeat(offset.unsigned_abs() as usize - 2);
    Some(DeterminedNp::new(Determiner::The, b, attribute).post(&format!("{inner}{step} {end}")))
}

/// The offset family shared by week+day, year+month and prefixed nouns:
/// -1 "last B", 0 "this B", +1 "next B", otherwise the nested chains.
fn anchored(b: &str, offset: i32, attribute: Option<SemanticAttribute>) -> Result<DeterminedNp, TransferError> {
    if !(-3..=4).contains(&offset) {
        return Err(TransferError::UnsupportedCombination(format!("offset {offset} with `{b}`")));
    }
    Ok(match offset {
        -1 => DeterminedNp::new(Determiner::Last, b, attribute),
        0 => DeterminedNp::new(Determiner::This, b, attribute),
        1 => DeterminedNp::new(Determiner::Next, b, attribute),
        o => offset_chain(b, o, attribute).expect("|offset| >= 2"),
    })
}

fn describe(phrase: &TemporalPhrase<'_>) -> String {
    match phrase.attribute() {
        Some(a) => a.to_string(),
        None => "a non-temporal noun".into(),
    }
}

/// Day-like dependent + period of the day ("kinō-no ban" → "last night").
pub fn transfer_day_period(
    a: &TemporalPhrase<'_>,
    b: &LexEntry,
    config: &TransferConfig,
) -> Result<EnglishTemporalStructure, TransferError> {
    use SemanticAttribute::*;
    let unsupported = || {
        TransferError::UnsupportedCombination(format!("{} with {}", describe(a), b.surface))
    };
    if !b.is_a(PeriodOfDay) {
        return Err(unsupported());
    }
    let period = gloss_of(b, config)?;
    let night = b.is_night();
    let attr = Some(PeriodOfDay);
    let with_night = |mut np: DeterminedNp| {
        np.night = night;
        np
    };
    let attribute = a.attribute().ok_or_else(unsupported)?;

    let np = if attribute == DeicticDay {
        let offset = a
            .head
            .lexical()
            .and_then(|e| e.deictic_offset)
            .ok_or_else(unsupported)?;
        match offset {
            -1 if night => DeterminedNp::new(Determiner::Null, period, attr).pre("last"),
            -1 => DeterminedNp::new(Determiner::Null, period, attr).pre("yesterday"),
            0 if night => DeterminedNp::new(Determiner::Null, "tonight", attr),
            0 => DeterminedNp::new(Determiner::This, period, attr),
            1 => DeterminedNp::new(Determiner::Null, period, attr).pre("tomorrow"),
            o => offset_chain(period, o, attr)
                .filter(|_| (-3..=4).contains(&o))
                .ok_or_else(unsupported)?,
        }
    } else if attribute == RelativeDay {
        let offset = a.head.lexical().and_then(|e| e.anchor_offset).ok_or_else(unsupported)?;
        let word = match offset {
            -1 => "previous",
            1 => "following",
            _ => return Err(unsupported()),
        };
        DeterminedNp::new(Determiner::The, period, attr).pre(word)
    } else if attribute.is_a(NamedDay) {
        let day = realize_np(&transfer_phrase(a, config, &mut Vec::new())?, config)?;
        DeterminedNp::new(Determiner::Null, period, attr).pre(&day)
    } else if attribute.is_a(DayOfMonth) {
        // The day of month is always ordinal here: "the morning of the 19th".
        let mut date = match transfer_phrase(a, config, &mut Vec::new())? {
            EnglishTemporalStructure::SpecialCompoundNp(np) => np,
            _ => return Err(unsupported()),
        };
        if let Some(day) = date.day_of_month.as_mut() {
            day.ordinal = true;
        }
        let text = realize_special_compound(&date, config.date_style, config.spell_numbers)?;
        DeterminedNp::new(Determiner::The, period, attr).post(&format!("of {text}"))
    } else {
        return Err(unsupported());
    };
    Ok(with_night(np).into())
}

fn month_gloss(phrase: &TemporalPhrase<'_>) -> Option<String> {
    match &phrase.head {
        Head::Compound(c) if c.counter == Counter::Gatsu && !c.duration => {
            month_name(c.value as u8).ok().map(String::from)
        }
        Head::Lexical(e) if e.month.is_some() => e.gloss().map(String::from),
        _ => None,
    }
}

/// Deictic year + month ("the January before last") and deictic week +
/// weekday ("next Saturday").
pub fn transfer_analogous_family(
    a: &TemporalPhrase<'_>,
    b: &TemporalPhrase<'_>,
    config: &TransferConfig,
    diagnostics: &mut Vec<String>,
) -> Result<EnglishTemporalStructure, TransferError> {
    use SemanticAttribute::*;
    let unsupported = || {
        TransferError::UnsupportedCombination(format!("{} with {}", describe(a), describe(b)))
    };
    let anchor = a.head.lexical().filter(|_| a.modifiers.is_empty()).ok_or_else(unsupported)?;
    let offset = anchor.anchor_offset.ok_or_else(unsupported)?;
    let (member, attribute) = match (anchor.attribute, b.attribute()) {
        (Some(Year), Some(Month)) => (month_gloss(b).ok_or_else(unsupported)?, Month),
        (Some(Week), Some(DayOfWeek)) => {
            let e = b.head.lexical().ok_or_else(unsupported)?;
            (gloss_of(e, config)?.to_string(), DayOfWeek)
        }
        _ => return Err(unsupported()),
    };
    if offset == 0 {
        diagnostics.push(format!(
            "ambiguous: \"this {member}\" may mean the past or the coming {member}"
        ));
    }
    Ok(anchored(&member, offset, Some(attribute))?.into())
}

/// Flattens a phrase whose parts are all numeral dates (or spelled months)
/// into one compound sequence, coarsest unit first.
fn date_parts(phrase: &TemporalPhrase<'_>) -> Option<Vec<NumeralCompound>> {
    if phrase.prefix.is_some() {
        return None;
    }
    let mut parts = Vec::new();
    for m in &phrase.modifiers {
        parts.extend(date_parts(m)?);
    }
    match &phrase.head {
        Head::Compound(c) if !c.duration => parts.push(*c),
        Head::Fused(cs) => parts.extend(cs.iter().copied()),
        Head::Lexical(e) => parts.push(NumeralCompound::position(u32::from(e.month?), Counter::Gatsu)),
        _ => return None,
    }
    Some(parts)
}

/// The phrase formed by all but the last modifier, headed by the last one.
fn dependent<'a>(phrase: &TemporalPhrase<'a>) -> Option<TemporalPhrase<'a>> {
    let (last, init) = phrase.modifiers.split_last()?;
    let mut dep = last.clone();
    dep.modifiers = init.to_vec();
    dep.genitive = true;
    Some(dep)
}

fn without_modifiers<'a>(phrase: &TemporalPhrase<'a>) -> TemporalPhrase<'a> {
    TemporalPhrase { modifiers: Vec::new(), ..phrase.clone() }
}

/// Chooses between an English noun phrase and noun phrase + adverbial for a
/// Japanese `A-no B` phrase.
pub fn decide_np_or_adverbial(
    phrase: &TemporalPhrase<'_>,
    config: &TransferConfig,
    diagnostics: &mut Vec<String>,
) -> Result<EnglishTemporalStructure, TransferError> {
    use SemanticAttribute::*;
    let Some(dep) = dependent(phrase) else {
        return transfer_unit(phrase, config, diagnostics);
    };
    let head = without_modifiers(phrase);
    let dep_attr = dep.attribute();
    let head_attr = head.attribute();

    // Temporal dependents of non-temporal nouns.
    if let Head::Lexical(entry) = &head.head {
        if entry.attribute.is_none() {
            let gloss = gloss_of(entry, config)?;
            let owner = transfer_phrase(&dep, config, diagnostics)?;
            if entry.has(Flag::Span) {
                let of = realize_np(&owner, config)?;
                return Ok(DeterminedNp::new(Determiner::The, gloss, None).post(&format!("of {of}")).into());
            }
            return Ok(EnglishTemporalStructure::GenitiveNp {
                possessor: Box::new(owner),
                possessed: gloss.to_string(),
            });
        }
    }

    // "2-gatsu-no 19-nichi" is one date.
    if let (Some(mut parts), Some(tail)) = (date_parts(&dep), date_parts(&head)) {
        parts.extend(tail);
        if parts.windows(2).all(|w| w[0].counter.granularity() < w[1].counter.granularity()) {
            return Ok(transfer_compound_date(&parts)?.into());
        }
        return Err(TransferError::UnsupportedCombination(
            "date units out of order".into(),
        ));
    }

    // Exceptions rendered as noun phrase + trailing adverbial.
    let dep_anchored = dep.head.lexical().is_some_and(|e| e.anchor_offset.is_some());
    let exception = match (dep_attr, head_attr) {
        (Some(DeicticDay), Some(TimeOfDay)) => true,
        (Some(Year), Some(Holiday)) => dep_anchored,
        _ => false,
    };
    if exception {
        let base = transfer_phrase(&head, config, diagnostics)?;
        let adjunct = transfer_phrase(&dep, config, diagnostics)?;
        return Ok(EnglishTemporalStructure::AdverbialAttachment {
            base: Box::new(base),
            adjunct: Box::new(adjunct),
        });
    }

    if let (Some(d), Some(PeriodOfDay), Head::Lexical(b)) = (dep_attr, head_attr, &head.head) {
        if head.prefix.is_none()
            && (d == DeicticDay || d == RelativeDay || d.is_a(NamedDay) || d.is_a(DayOfMonth))
        {
            return transfer_day_period(&dep, b, config);
        }
    }

    if dep_anchored && matches!((dep_attr, head_attr), (Some(Year), Some(Month)) | (Some(Week), Some(DayOfWeek))) {
        return transfer_analogous_family(&dep, &head, config, diagnostics);
    }

    // Default: NULL modifier head.
    let dep_text = realize_np(&transfer_phrase(&dep, config, diagnostics)?, config)?;
    match transfer_phrase(&head, config, diagnostics)? {
        EnglishTemporalStructure::DeterminedNp(mut np) => {
            let modifiers: Vec<_> = dep_attr.into_iter().collect();
            np.determiner = choose_determiner(np.attribute, np.night, &modifiers);
            np.premodifiers.insert(0, dep_text);
            Ok(np.into())
        }
        _ => Err(TransferError::UnsupportedCombination(format!(
            "{} with {}",
            describe(&dep),
            describe(&head)
        ))),
    }
}

fn render_range(counter: Counter, first: u32, last: u32) -> Result<EnglishTemporalStructure, TransferError> {
    let joint = if last == first + 1 { "and" } else { "to" };
    let (determiner, head, attribute) = match counter {
        Counter::Nichi => (
            Determiner::The,
            format!("{} {joint} {}", render_ordinal(first)?, render_ordinal(last)?),
            SemanticAttribute::OrdinalDay,
        ),
        Counter::Gatsu => (
            Determiner::Null,
            format!("{} {joint} {}", month_name(first as u8)?, month_name(last as u8)?),
            SemanticAttribute::Month,
        ),
        Counter::Nen => (Determiner::Null, format!("{first} {joint} {last}"), SemanticAttribute::Year),
        Counter::Ji | Counter::Fun => {
            return Err(TransferError::UnsupportedCombination("a range of clock times".into()))
        }
    };
    Ok(DeterminedNp::new(determiner, &head, Some(attribute)).into())
}

/// A phrase without genitive dependents.
fn transfer_unit(
    phrase: &TemporalPhrase<'_>,
    config: &TransferConfig,
    diagnostics: &mut Vec<String>,
) -> Result<EnglishTemporalStructure, TransferError> {
    if let Some(prefix) = phrase.prefix {
        let entry = phrase.head.lexical().ok_or_else(|| {
            TransferError::UnsupportedCombination(format!("prefix `{}` on a numeral", prefix.surface))
        })?;
        let offset = prefix.anchor_offset.unwrap_or(0);
        let gloss = gloss_of(entry, config)?;
        let mut np = anchored(gloss, offset, entry.attribute)?;
        np.night = entry.is_night();
        return Ok(np.into());
    }
    match &phrase.head {
        Head::Lexical(entry) => transfer_single_with(entry, config),
        Head::Compound(c) if c.duration => Ok(transfer_duration(*c, config.spell_numbers)),
        Head::Compound(c) => {
            let top_level = !phrase.genitive;
            if top_level && c.counter == Counter::Nichi && phrase.particle.is_none() {
                diagnostics.push(format!(
                    "ambiguous: {c} read as a day of the month, not a period of {} days",
                    c.value
                ));
            }
            Ok(transfer_compound_date(&[*c])?.into())
        }
        Head::Fused(cs) => Ok(transfer_compound_date(cs)?.into()),
        Head::Range { counter, first, last } => render_range(*counter, *first, *last),
    }
}

fn transfer_phrase(
    phrase: &TemporalPhrase<'_>,
    config: &TransferConfig,
    diagnostics: &mut Vec<String>,
) -> Result<EnglishTemporalStructure, TransferError> {
    if phrase.modifiers.is_empty() {
        transfer_unit(phrase, config, diagnostics)
    } else {
        decide_np_or_adverbial(phrase, config, diagnostics)
    }
}

/// Transfers a parsed phrase, collecting ambiguity diagnostics.
pub fn transfer(phrase: &TemporalPhrase<'_>, config: &TransferConfig) -> Result<Transferred, TransferError> {
    let mut diagnostics = Vec::new();
    let structure = transfer_phrase(phrase, config, &mut diagnostics)?;
    Ok(Transferred { structure, diagnostics })
}

/// Preposition for a particle or functional noun other than `ni`, `de` and
/// `no`. Those three return `Ok(None)`: `ni`/`de` go through the adverbial
/// preposition algorithm and `no` is genitive.
pub fn map_particle(particle: Particle, lexicon: &Lexicon) -> Result<Option<Preposition>, TransferError> {
    match particle {
        Particle::Ni | Particle::De | Particle::No => Ok(None),
        p => lexicon
            .particle(p.as_str())
            .map(Some)
            .ok_or_else(|| TransferError::UnknownParticle(p.as_str().to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generation::realize_np;
    use crate::parser::parse;

    fn lex() -> &'static Lexicon {
        Lexicon::builtin()
    }

    fn english(input: &str) -> String {
        let config = TransferConfig::default();
        let phrase = parse(input, lex()).unwrap();
        let t = transfer(&phrase, &config).unwrap();
        realize_np(&t.structure, &config).unwrap()
    }

    fn single(surface: &str) -> DeterminedNp {
        transfer_single(lex().get(surface).unwrap()).unwrap().as_determined().unwrap().clone()
    }

    #[test]
    fn single_nouns() {
        let np = single("kinō");
        assert_eq!((np.determiner, np.head.as_str()), (Determiner::Null, "yesterday"));
        let np = single("ototoi");
        assert_eq!((np.determiner, np.head.as_str()), (Determiner::Null, "the day before yesterday"));
        let np = single("fuyu");
        assert_eq!((np.determiner, np.head.as_str()), (Determiner::Null, "winter"));
        let bare = LexEntry { glosses: vec![], ..LexEntry::new("x", None, "") };
        assert_eq!(transfer_single(&bare), Err(TransferError::NoGloss("x".into())));
    }

    #[test]
    fn compound_dates() {
        let feb19 = [NumeralCompound::position(2, Counter::Gatsu), NumeralCompound::position(19, Counter::Nichi)];
        let np = transfer_compound_date(&feb19).unwrap();
        assert_eq!(np.month, Some(2));
        assert_eq!(np.day_of_month, Some(DayOfMonth { value: 19, ordinal: false }));
        assert_eq!(transfer_compound_date(&[NumeralCompound::position(1997, Counter::Nen)]).unwrap().year, Some(1997));
        let kan = NumeralCompound { value: 13, counter: Counter::Nichi, duration: true };
        assert!(matches!(transfer_compound_date(&[kan]), Err(TransferError::DurationNotPosition(_))));
        assert!(matches!(
            transfer_compound_date(&[NumeralCompound::position(13, Counter::Gatsu)]),
            Err(TransferError::SlotRange(_))
        ));
    }

    #[test]
    fn durations() {
        let c = |v, counter| NumeralCompound { value: v, counter, duration: true };
        let cfg = TransferConfig::default();
        let r = |s: EnglishTemporalStructure| realize_np(&s, &cfg).unwrap();
        assert_eq!(r(transfer_duration(c(13, Counter::Nichi), false)), "13 days");
        assert_eq!(r(transfer_duration(c(13, Counter::Nichi), true)), "thirteen days");
        assert_eq!(r(transfer_duration(c(1, Counter::Nichi), false)), "1 day");
        assert_eq!(r(transfer_duration(c(3, Counter::Nen), false)), "3 years");
    }

    #[test]
    fn day_period_rules() {
        assert_eq!(english("ototoi-no asa"), "the morning before last");
        assert_eq!(english("kinō-no ban"), "last night");
        assert_eq!(english("getsuyōbi-no asa"), "Monday morning");
        assert_eq!(english("19-nichi-no asa"), "the morning of the 19th");
        assert_eq!(english("kyō-no ban"), "tonight");
        assert_eq!(english("kyō-no asa"), "this morning");
        assert_eq!(english("zenjitsu-no yūgata"), "the previous evening");
        assert_eq!(english("kurisumasu-no asa"), "Christmas morning");
        assert_eq!(english("2-gatsu-19-nichi-no asa"), "the morning of February 19th");
    }

    #[test]
    fn night_outputs_are_null() {
        for a in ["kinō", "kyō", "ashita", "getsuyōbi"] {
            let phrase = parse(&format!("{a}-no ban"), lex()).unwrap();
            let t = transfer(&phrase, &TransferConfig::default()).unwrap();
            assert_eq!(t.structure.as_determined().unwrap().determiner, Determiner::Null, "{a}");
        }
    }

    #[test]
    fn analogous_family() {
        assert_eq!(english("ototoshi-no 1-gatsu"), "the January before last");
        assert_eq!(english("raishū-no doyōbi"), "next Saturday");
        assert_eq!(english("senshū-no kin'yōbi"), "last Friday");
        assert_eq!(english("kyonen-no nigatsu"), "last February");
        let phrase = parse("kotoshi-no 12-gatsu", lex()).unwrap();
        let t = transfer(&phrase, &TransferConfig::default()).unwrap();
        assert_eq!(realize_np(&t.structure, &TransferConfig::default()).unwrap(), "this December");
        assert_eq!(t.diagnostics.len(), 1);
        assert!(t.diagnostics[0].starts_with("ambiguous"));
    }

    #[test]
    fn np_or_adverbial() {
        assert_eq!(english("ashita-no akegata"), "dawn tomorrow");
        assert_eq!(english("kotoshi-no kurisumasu"), "Christmas this year");
        assert_eq!(english("konshū-no uchiawase"), "this week's meeting");
        assert_eq!(english("getsuyōbi-no uchiawase"), "Monday's meeting");
        assert_eq!(english("2-gatsu-no hajime"), "the beginning of February");
        assert_eq!(english("2-gatsu-no 19-nichi"), "February 19");
        assert_eq!(english("zen-shūmatsu"), "last weekend");
    }

    #[test]
    fn particle_mapping() {
        assert_eq!(map_particle(Particle::Mae, lex()), Ok(Some(Preposition::Before)));
        assert_eq!(map_particle(Particle::Chu, lex()), Ok(Some(Preposition::During)));
        assert_eq!(map_particle(Particle::Kara, lex()), Ok(Some(Preposition::From)));
        assert_eq!(map_particle(Particle::Made, lex()), Ok(Some(Preposition::Until)));
        assert_eq!(map_particle(Particle::Ni, lex()), Ok(None));
        assert_eq!(map_particle(Particle::Wa, lex()), Err(TransferError::UnknownParticle("wa".into())));
    }

    #[test]
    fn stock_config_needs_reference() {
        let cfg = TransferConfig { domain: Domain::Stock, ..Default::default() };
        assert_eq!(cfg.validate(), Err(TransferError::MissingReferenceDate));
    }
}
