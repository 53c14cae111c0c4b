//! The temporal lexicon and its line-oriented file format.
//!
//! ```text
//! # surface | attribute | gloss[;gloss...] | key=value flags
//! ototoi    | deictic-day | the day before yesterday | offset=-2
//! ban       | period-of-day | night | takes-night-special
//! mae       | particle | before
//! ```
//!
//! The attribute column takes a hierarchy label, `none` for non-temporal host
//! nouns, or `particle` for particle and functional-noun preposition mappings.

use std::collections::{BTreeSet, HashMap};
use std::sync::OnceLock;

use thiserror::Error;

use super::hierarchy::SemanticAttribute;
use super::romaji::fold;
use crate::generation::Preposition;

/// The lexicon shipped with the crate.
pub const DEFAULT_LEXICON: &str = include_str!("../../data/lexicon.txt");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flag {
    /// "night" is a period of day with its own rules ("tonight", "last night", "at night").
    TakesNightSpecial,
    Rare,
    /// Stock-market jargon for a trading session.
    Jargon,
    /// A bound prefix such as `zen-` ("last, previous").
    Prefix,
    /// beginning / middle / end of a period.
    Span,
    /// The week end, converted to the last trading day in stock reports.
    Weekend,
}

impl Flag {
    fn parse(s: &str) -> Option<Flag> {
        Some(match s {
            "takes-night-special" | "night" => Flag::TakesNightSpecial,
            "rare" => Flag::Rare,
            "jargon" => Flag::Jargon,
            "prefix" => Flag::Prefix,
            "span" => Flag::Span,
            "weekend" => Flag::Weekend,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexEntry {
    pub surface: String,
    /// `None` for non-temporal host nouns such as `uchiawase` ("meeting").
    pub attribute: Option<SemanticAttribute>,
    pub glosses: Vec<String>,
    /// Day offset from today; present exactly on deictic-day entries.
    pub deictic_offset: Option<i32>,
    /// Offset in the entry's own unit for relative anchors: `kotoshi` 0,
    /// `ototoshi` -2, `raishū` +1, `zenjitsu` -1, prefix `zen-` -1.
    pub anchor_offset: Option<i32>,
    /// Month number for spelled month names.
    pub month: Option<u8>,
    /// Gloss used when translating stock-market reports.
    pub stock_gloss: Option<String>,
    pub flags: BTreeSet<Flag>,
}

impl LexEntry {
    pub fn new(surface: &str, attribute: Option<SemanticAttribute>, gloss: &str) -> Self {
        LexEntry {
            surface: surface.to_string(),
            attribute,
            glosses: vec![gloss.to_string()],
            deictic_offset: None,
            anchor_offset: None,
            month: None,
            stock_gloss: None,
            flags: BTreeSet::new(),
        }
    }

    pub fn has(&self, flag: Flag) -> bool {
        self.flags.contains(&flag)
    }

    pub fn is_night(&self) -> bool {
        self.has(Flag::TakesNightSpecial)
    }

    pub fn is_a(&self, ancestor: SemanticAttribute) -> bool {
        self.attribute.is_some_and(|a| a.is_a(ancestor))
    }

    pub fn gloss(&self) -> Option<&str> {
        self.glosses.first().map(String::as_str)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LexiconError {
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("line {line}: duplicate entry `{surface}`")]
    DuplicateEntry { line: usize, surface: String },
    #[error("line {line}: unknown attribute name `{name}`")]
    UnknownAttributeName { line: usize, name: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LookupError {
    #[error("unknown lemma `{0}`")]
    UnknownLemma(String),
    #[error("`{0}` is not a temporal noun")]
    NonTemporal(String),
}

#[derive(Debug, Clone, Default)]
pub struct Lexicon {
    entries: HashMap<String, LexEntry>,
    particles: HashMap<String, Preposition>,
}

impl Lexicon {
    /// The bundled lexicon, parsed once.
    pub fn builtin() -> &'static Lexicon {
        static LEXICON: OnceLock<Lexicon> = OnceLock::new();
        LEXICON.get_or_init(|| load_lexicon(DEFAULT_LEXICON).expect("bundled lexicon is valid"))
    }

    pub fn get(&self, surface: &str) -> Option<&LexEntry> {
        self.entries.get(&fold(surface))
    }

    pub fn particle(&self, particle: &str) -> Option<Preposition> {
        self.particles.get(&fold(particle)).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = &LexEntry> {
        self.entries.values()
    }

    pub fn particles(&self) -> impl Iterator<Item = (&str, Preposition)> {
        self.particles.iter().map(|(k, v)| (k.as_str(), *v))
    }

    pub fn attribute_of(&self, surface: &str) -> Result<SemanticAttribute, LookupError> {
        attribute_of(surface, self)
    }
}

pub fn attribute_of(surface: &str, lexicon: &Lexicon) -> Result<SemanticAttribute, LookupError> {
    let entry = lexicon
        .get(surface)
        .ok_or_else(|| LookupError::UnknownLemma(surface.to_string()))?;
    entry
        .attribute
        .ok_or_else(|| LookupError::NonTemporal(surface.to_string()))
}

enum Column {
    Attribute(SemanticAttribute),
    HostNoun,
    Particle,
}

pub fn load_lexicon(source: &str) -> Result<Lexicon, LexiconError> {
    let mut lexicon = Lexicon::default();
    for (idx, raw) in source.lines().enumerate() {
        let line = idx + 1;
        let text = raw.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let format = |message: String| LexiconError::Format { line, message };

        let fields: Vec<&str> = text.split('|').map(str::trim).collect();
        if !(2..=4).contains(&fields.len()) {
            return Err(format(format!("expected 2 to 4 fields, found {}", fields.len())));
        }
        let surface = fields[0];
        if surface.is_empty() {
            return Err(format("empty surface".into()));
        }
        let column = match fields[1].to_ascii_lowercase().as_str() {
            "none" => Column::HostNoun,
            "particle" => Column::Particle,
            name => Column::Attribute(name.parse().map_err(|_| {
                LexiconError::UnknownAttributeName { line, name: fields[1].to_string() }
            })?),
        };
        let glosses: Vec<String> = fields
            .get(2)
            .map(|g| {
                g.split(';')
                    .map(str::trim)
                    .filter(|g| !g.is_empty())
                    .map(String::from)
                    .collect()
            })
            .unwrap_or_default();
        let key = fold(surface);

        if let Column::Particle = column {
            let [gloss] = glosses.as_slice() else {
                return Err(format(format!("particle `{surface}` needs exactly one preposition")));
            };
            let prep = gloss
                .parse::<Preposition>()
                .map_err(|_| format(format!("unknown preposition `{gloss}`")))?;
            if lexicon.particles.insert(key, prep).is_some() {
                return Err(LexiconError::DuplicateEntry { line, surface: surface.to_string() });
            }
            continue;
        }

        let attribute = match column {
            Column::Attribute(a) => Some(a),
            _ => None,
        };
        let mut entry = LexEntry {
            surface: surface.to_string(),
            attribute,
            glosses,
            deictic_offset: None,
            anchor_offset: None,
            month: None,
            stock_gloss: None,
            flags: BTreeSet::new(),
        };
        if let Some(flags) = fields.get(3) {
            for item in flags.split([',', ' ', '\t']).filter(|s| !s.is_empty()) {
                apply_flag(&mut entry, item).map_err(format)?;
            }
        }
        let deictic = attribute == Some(SemanticAttribute::DeicticDay);
        if deictic != entry.deictic_offset.is_some() {
            return Err(format(format!(
                "`{surface}`: offset= is required on deictic-day entries and allowed nowhere else"
            )));
        }
        if lexicon.entries.contains_key(&key) {
            return Err(LexiconError::DuplicateEntry { line, surface: surface.to_string() });
        }
        lexicon.entries.insert(key, entry);
    }
    Ok(lexicon)
}

fn apply_flag(entry: &mut LexEntry, item: &str) -> Result<(), String> {
    let int = |v: &str| v.parse::<i32>().map_err(|_| format!("bad integer in `{item}`"));
    match item.split_once('=') {
        Some(("offset", v)) => entry.deictic_offset = Some(int(v)?),
        Some(("anchor", v)) => entry.anchor_offset = Some(int(v)?),
        Some(("month", v)) => {
            let m = int(v)?;
            if !(1..=12).contains(&m) {
                return Err(format!("month out of range in `{item}`"));
            }
            entry.month = Some(m as u8);
        }
        // Multiword stock glosses are written with underscores.
        Some(("stock", v)) => entry.stock_gloss = Some(v.replace('_', " ")),
        Some((k, _)) => return Err(format!("unknown flag key `{k}`")),
        None => {
            let flag = Flag::parse(item).ok_or_else(|| format!("unknown flag `{item}`"))?;
            entry.flags.insert(flag);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use SemanticAttribute::*;

    #[test]
    fn parses_a_deictic_record() {
        let lex = load_lexicon("ototoi | deictic-day | the day before yesterday | offset=-2").unwrap();
        let e = lex.get("ototoi").unwrap();
        assert_eq!(e.deictic_offset, Some(-2));
        assert_eq!(e.attribute, Some(DeicticDay));
        assert_eq!(e.glosses, vec!["the day before yesterday"]);
    }

    #[test]
    fn empty_document_is_empty_lexicon() {
        let lex = load_lexicon("").unwrap();
        assert!(lex.is_empty());
        assert_eq!(lex.attribute_of("kinō"), Err(LookupError::UnknownLemma("kinō".into())));
    }

    #[test]
    fn duplicate_surface_rejected() {
        let src = "kinō | deictic-day | yesterday | offset=-1\nkinō | deictic-day | yesterday | offset=-1\n";
        assert_eq!(
            load_lexicon(src).unwrap_err(),
            LexiconError::DuplicateEntry { line: 2, surface: "kinō".into() }
        );
        // Alias spellings collide too.
        let src = "kinō | deictic-day | yesterday | offset=-1\nkinou | deictic-day | yesterday | offset=-1\n";
        assert!(matches!(load_lexicon(src), Err(LexiconError::DuplicateEntry { line: 2, .. })));
    }

    #[test]
    fn format_errors_carry_line_numbers() {
        let src = "# comment\n\nkinō\n";
        assert!(matches!(load_lexicon(src), Err(LexiconError::Format { line: 3, .. })));
        let src = "haru | seasonal | spring\n";
        assert_eq!(
            load_lexicon(src).unwrap_err(),
            LexiconError::UnknownAttributeName { line: 1, name: "seasonal".into() }
        );
        let src = "haru | season | spring | bogus\n";
        assert!(matches!(load_lexicon(src), Err(LexiconError::Format { line: 1, .. })));
    }

    #[test]
    fn offset_only_on_deictic_days() {
        assert!(load_lexicon("kinō | deictic-day | yesterday").is_err());
        assert!(load_lexicon("haru | season | spring | offset=1").is_err());
    }

    #[test]
    fn particle_records() {
        let lex = load_lexicon("mae | particle | before\nchū | particle | during").unwrap();
        assert_eq!(lex.particle("mae"), Some(Preposition::Before));
        assert_eq!(lex.particle("chuu"), Some(Preposition::During));
        assert!(lex.is_empty());
        assert!(load_lexicon("mae | particle | beside").is_err());
    }

    #[test]
    fn host_nouns_are_not_temporal() {
        let lex = load_lexicon("uchiawase | none | meeting").unwrap();
        assert_eq!(
            lex.attribute_of("uchiawase"),
            Err(LookupError::NonTemporal("uchiawase".into()))
        );
    }

    #[test]
    fn core_lemmas_classify() {
        let lex = Lexicon::builtin();
        assert_eq!(lex.attribute_of("kinō"), Ok(DeicticDay));
        assert_eq!(lex.attribute_of("getsuyōbi"), Ok(DayOfWeek));
        assert_eq!(lex.attribute_of("akegata"), Ok(TimeOfDay));
        assert_eq!(lex.attribute_of("getsuyoubi"), Ok(DayOfWeek));
        assert_eq!(lex.attribute_of("getsuyobi"), Ok(DayOfWeek));
    }

    #[test]
    fn builtin_has_required_lemmas() {
        let lex = Lexicon::builtin();
        for s in [
            "kyō", "honjitsu", "kinō", "ashita", "ototoi", "asatte", "shiasatte",
            "issakusakujitsu", "yanoasatte", "zenjitsu", "yokujitsu", "asa", "hiru",
            "yūgata", "ban", "yoru", "akegata", "kotoshi", "konshū", "shūmatsu",
            "kurisumasu", "maebike", "uchiawase",
        ] {
            assert!(lex.get(s).is_some(), "missing {s}");
        }
        let count = |attr| lex.entries().filter(|e| e.attribute == Some(attr)).count();
        assert!(count(Month) >= 12);
        assert_eq!(count(DayOfWeek), 7);
        assert!(count(Season) >= 4);
        assert_eq!(lex.particle("chū"), Some(Preposition::During));
        assert_eq!(lex.get("yanoasatte").unwrap().deictic_offset, Some(4));
        assert!(lex.get("yanoasatte").unwrap().has(Flag::Rare));
        assert!(lex.get("ban").unwrap().is_night());
    }
}
