//! Parsing of pre-segmented romanized Japanese temporal expressions.
//!
//! Morphemes are joined by `-` and genitive phrases separated by spaces:
//! `ashita-no akegata`, `2-gatsu-19-nichi-ni`, `zen-shūmatsu`.

use std::fmt;

use thiserror::Error;

use crate::semantics::romaji::{fold, is_romaji_char};
use crate::semantics::{Flag, LexEntry, Lexicon, SemanticAttribute};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Counter {
    Nen,
    Gatsu,
    Nichi,
    Ji,
    Fun,
}

impl Counter {
    fn parse(folded: &str) -> Option<Counter> {
        Some(match folded {
            "nen" => Counter::Nen,
            "gatsu" => Counter::Gatsu,
            "nichi" => Counter::Nichi,
            "ji" => Counter::Ji,
            "fun" | "pun" => Counter::Fun,
            _ => return None,
        })
    }

    /// Coarsest first: year, month, day, hour, minute.
    pub fn granularity(self) -> u8 {
        self as u8
    }

    pub fn valid_range(self) -> std::ops::RangeInclusive<u32> {
        match self {
            Counter::Nen => 0..=u32::MAX,
            Counter::Gatsu => 1..=12,
            Counter::Nichi => 1..=31,
            Counter::Ji => 0..=24,
            Counter::Fun => 0..=59,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Counter::Nen => "nen",
            Counter::Gatsu => "gatsu",
            Counter::Nichi => "nichi",
            Counter::Ji => "ji",
            Counter::Fun => "fun",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Particle {
    Ni,
    De,
    No,
    Wa,
    Kara,
    Made,
    Mae,
    Chu,
}

impl Particle {
    fn parse(folded: &str) -> Option<Particle> {
        Some(match folded {
            "ni" => Particle::Ni,
            "de" => Particle::De,
            "no" => Particle::No,
            "wa" => Particle::Wa,
            "kara" => Particle::Kara,
            "made" => Particle::Made,
            "mae" => Particle::Mae,
            "chu" => Particle::Chu,
            _ => return None,
        })
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Particle::Ni => "ni",
            Particle::De => "de",
            Particle::No => "no",
            Particle::Wa => "wa",
            Particle::Kara => "kara",
            Particle::Made => "made",
            Particle::Mae => "mae",
            Particle::Chu => "chū",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Lemma,
    Numeral,
    Counter,
    Particle,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub text: String,
    pub kind: TokenKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    EmptyInput,
    #[error("illegal character {0:?}")]
    IllegalCharacter(char),
    #[error("unknown lemma `{0}`")]
    UnknownLemma(String),
    #[error("malformed compound: {0}")]
    MalformedCompound(String),
    #[error("particle `{0}` has no head")]
    DanglingParticle(String),
    #[error("`{0}` follows a head noun without a genitive -no")]
    MissingGenitive(String),
    #[error("{value}-{counter} is out of range")]
    OutOfRange { value: u32, counter: &'static str },
    #[error("era year `{0}`: only Western years are supported")]
    EraYear(String),
}

const ERA_NAMES: [&str; 5] = ["meiji", "taisho", "showa", "heisei", "reiwa"];

pub fn tokenize(input: &str) -> Result<Vec<Token>, ParseError> {
    if input.trim().is_empty() {
        return Err(ParseError::EmptyInput);
    }
    let mut tokens = Vec::new();
    for word in input.split_whitespace() {
        for morph in word.split('-') {
            if morph.is_empty() {
                return Err(ParseError::MalformedCompound(format!("empty morpheme in `{word}`")));
            }
            if let Some(c) = morph.chars().find(|&c| !is_romaji_char(c)) {
                return Err(ParseError::IllegalCharacter(c));
            }
            let kind = if morph.chars().all(|c| c.is_ascii_digit()) {
                TokenKind::Numeral
            } else {
                let key = fold(morph);
                if Counter::parse(&key).is_some() || key == "kan" {
                    TokenKind::Counter
                } else if Particle::parse(&key).is_some() {
                    TokenKind::Particle
                } else {
                    TokenKind::Lemma
                }
            };
            tokens.push(Token { text: morph.to_string(), kind });
        }
    }
    Ok(tokens)
}

/// Inverse of [`tokenize`]: hyphen-joined, with a space after each `-no`.
pub fn render_tokens(tokens: &[Token]) -> String {
    let mut out = String::new();
    for (i, tok) in tokens.iter().enumerate() {
        if i > 0 {
            let prev = &tokens[i - 1];
            let after_no = prev.kind == TokenKind::Particle && fold(&prev.text) == "no";
            out.push(if after_no { ' ' } else { '-' });
        }
        out.push_str(&tok.text);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NumeralCompound {
    pub value: u32,
    pub counter: Counter,
    /// Set by a trailing `-kan`.
    pub duration: bool,
}

impl NumeralCompound {
    pub fn position(value: u32, counter: Counter) -> Self {
        NumeralCompound { value, counter, duration: false }
    }

    pub fn in_range(&self) -> bool {
        self.counter.valid_range().contains(&self.value)
    }
}

impl fmt::Display for NumeralCompound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.value, self.counter.name())?;
        if self.duration {
            f.write_str("-kan")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Head<'a> {
    Lexical(&'a LexEntry),
    Compound(NumeralCompound),
    /// A fused date/time such as `2-gatsu-19-nichi`, coarsest unit first.
    Fused(Vec<NumeralCompound>),
    /// `12-13-nichi`: consecutive positions sharing one counter.
    Range { counter: Counter, first: u32, last: u32 },
}

impl Head<'_> {
    pub fn lexical(&self) -> Option<&LexEntry> {
        match self {
            Head::Lexical(e) => Some(e),
            _ => None,
        }
    }

    /// Attribute of the head, taking the narrowest unit for numeral compounds.
    pub fn attribute(&self) -> Option<SemanticAttribute> {
        match self {
            Head::Lexical(e) => e.attribute,
            Head::Compound(c) => Some(counter_attribute(c.counter)),
            Head::Fused(cs) => cs.last().map(|c| counter_attribute(c.counter)),
            Head::Range { counter, .. } => Some(counter_attribute(*counter)),
        }
    }

    pub fn compounds(&self) -> Option<Vec<NumeralCompound>> {
        match self {
            Head::Compound(c) => Some(vec![*c]),
            Head::Fused(cs) => Some(cs.clone()),
            _ => None,
        }
    }
}

pub fn counter_attribute(counter: Counter) -> SemanticAttribute {
    match counter {
        Counter::Nen => SemanticAttribute::Year,
        Counter::Gatsu => SemanticAttribute::Month,
        Counter::Nichi => SemanticAttribute::CardinalDay,
        Counter::Ji | Counter::Fun => SemanticAttribute::NumberedHour,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TemporalPhrase<'a> {
    /// Genitive dependents, outermost first.
    pub modifiers: Vec<TemporalPhrase<'a>>,
    /// Bound prefix such as `zen-`.
    pub prefix: Option<&'a LexEntry>,
    pub head: Head<'a>,
    /// Only ever set on the outermost phrase.
    pub particle: Option<Particle>,
    /// True for phrases embedded with `-no`.
    pub genitive: bool,
}

impl<'a> TemporalPhrase<'a> {
    pub fn bare(head: Head<'a>) -> Self {
        TemporalPhrase { modifiers: Vec::new(), prefix: None, head, particle: None, genitive: false }
    }

    pub fn attribute(&self) -> Option<SemanticAttribute> {
        self.head.attribute()
    }

    pub fn is_deictic_day(&self) -> bool {
        self.attribute() == Some(SemanticAttribute::DeicticDay)
    }
}

/// Temporal phrases with `ni`/`de`, or a bare deictic day, act as adverbials.
pub fn is_adverbial_context(phrase: &TemporalPhrase<'_>) -> bool {
    if phrase.genitive {
        return false;
    }
    match phrase.particle {
        Some(Particle::Ni | Particle::De) => true,
        None => phrase.is_deictic_day() && phrase.modifiers.is_empty(),
        Some(_) => false,
    }
}

pub fn parse<'a>(input: &str, lexicon: &'a Lexicon) -> Result<TemporalPhrase<'a>, ParseError> {
    let tokens = tokenize(input)?;
    parse_temporal(&tokens, lexicon)
}

pub fn parse_temporal<'a>(tokens: &[Token], lexicon: &'a Lexicon) -> Result<TemporalPhrase<'a>, ParseError> {
    if tokens.is_empty() {
        return Err(ParseError::EmptyInput);
    }
    let is_no = |t: &Token| t.kind == TokenKind::Particle && fold(&t.text) == "no";
    let segments: Vec<&[Token]> = tokens.split_inclusive(is_no).collect();
    let last = segments.len() - 1;

    let mut modifiers = Vec::new();
    for (i, seg) in segments.iter().enumerate() {
        if i < last || seg.last().is_some_and(is_no) {
            let body = &seg[..seg.len() - 1];
            if body.is_empty() {
                return Err(ParseError::DanglingParticle("no".into()));
            }
            let mut unit = parse_unit(body, lexicon, false)?;
            unit.genitive = true;
            modifiers.push(unit);
        } else {
            let mut head = parse_unit(seg, lexicon, true)?;
            head.modifiers = modifiers;
            return Ok(head);
        }
    }
    // The input ended with `-no`.
    Err(ParseError::DanglingParticle("no".into()))
}

fn parse_unit<'a>(tokens: &[Token], lexicon: &'a Lexicon, allow_particle: bool) -> Result<TemporalPhrase<'a>, ParseError> {
    let mut rest = tokens;
    let mut particle = None;
    if let Some((last, init)) = rest.split_last() {
        if last.kind == TokenKind::Particle {
            let p = Particle::parse(&fold(&last.text)).expect("classified as particle");
            if init.is_empty() {
                return Err(ParseError::DanglingParticle(last.text.clone()));
            }
            if !allow_particle {
                return Err(ParseError::DanglingParticle(last.text.clone()));
            }
            particle = Some(p);
            rest = init;
        }
    }
    if let Some(p) = rest.iter().find(|t| t.kind == TokenKind::Particle) {
        return Err(ParseError::DanglingParticle(p.text.clone()));
    }

    let mut prefix = None;
    if let [first, tail @ ..] = rest {
        if first.kind == TokenKind::Lemma && !tail.is_empty() {
            if ERA_NAMES.contains(&fold(&first.text).as_str()) {
                return Err(ParseError::EraYear(first.text.clone()));
            }
            let entry = lookup(&first.text, lexicon)?;
            if entry.has(Flag::Prefix) {
                prefix = Some(entry);
                rest = tail;
            }
        }
    }

    let head = match rest {
        [] => return Err(ParseError::MalformedCompound("missing head".into())),
        [tok] if tok.kind == TokenKind::Lemma => {
            if ERA_NAMES.contains(&fold(&tok.text).as_str()) {
                return Err(ParseError::EraYear(tok.text.clone()));
            }
            let entry = lookup(&tok.text, lexicon)?;
            if entry.has(Flag::Prefix) {
                return Err(ParseError::MalformedCompound(format!("prefix `{}` without a head", tok.text)));
            }
            Head::Lexical(entry)
        }
        [first, second, ..] if first.kind == TokenKind::Lemma => {
            lookup(&first.text, lexicon)?;
            return Err(ParseError::MissingGenitive(second.text.clone()));
        }
        _ => parse_numerals(rest)?,
    };
    Ok(TemporalPhrase { modifiers: Vec::new(), prefix, head, particle, genitive: false })
}

fn lookup<'a>(text: &str, lexicon: &'a Lexicon) -> Result<&'a LexEntry, ParseError> {
    lexicon.get(text).ok_or_else(|| ParseError::UnknownLemma(text.to_string()))
}

fn parse_numerals<'a>(tokens: &[Token]) -> Result<Head<'a>, ParseError> {
    let malformed = |msg: String| ParseError::MalformedCompound(msg);
    let mut compounds: Vec<NumeralCompound> = Vec::new();
    let mut range: Option<(u32, u32)> = None;
    let mut i = 0;
    while i < tokens.len() {
        let tok = &tokens[i];
        if tok.kind != TokenKind::Numeral {
            return Err(malformed(format!("`{}` without a numeral", tok.text)));
        }
        let value: u32 = tok
            .text
            .parse()
            .map_err(|_| malformed(format!("numeral `{}` too large", tok.text)))?;
        i += 1;
        let mut second = None;
        if tokens.get(i).is_some_and(|t| t.kind == TokenKind::Numeral) {
            let t = &tokens[i];
            second = Some(t.text.parse::<u32>().map_err(|_| malformed(format!("numeral `{}` too large", t.text)))?);
            i += 1;
        }
        let counter_tok = tokens
            .get(i)
            .ok_or_else(|| malformed(format!("numeral `{}` without a counter", tok.text)))?;
        let counter = match counter_tok.kind {
            TokenKind::Counter => Counter::parse(&fold(&counter_tok.text))
                .ok_or_else(|| malformed("-kan must follow a counter".into()))?,
            _ => return Err(malformed(format!("`{}` is not a counter", counter_tok.text))),
        };
        i += 1;
        let duration = tokens
            .get(i)
            .is_some_and(|t| t.kind == TokenKind::Counter && fold(&t.text) == "kan");
        if duration {
            i += 1;
        }
        let compound = NumeralCompound { value, counter, duration };
        if !compound.in_range() {
            return Err(ParseError::OutOfRange { value, counter: counter.name() });
        }
        if let Some(last) = second {
            let end = NumeralCompound { value: last, ..compound };
            if !end.in_range() {
                return Err(ParseError::OutOfRange { value: last, counter: counter.name() });
            }
            if last <= value || duration {
                return Err(malformed(format!("bad range {value}-{last}")));
            }
            range = Some((value, last));
        }
        if let Some(prev) = compounds.last() {
            if prev.counter.granularity() >= counter.granularity() {
                return Err(malformed(format!(
                    "{} cannot follow {}: units must run from coarse to fine",
                    compound, prev
                )));
            }
        }
        compounds.push(compound);
    }
    match (compounds.as_slice(), range) {
        ([c], Some((first, last))) => Ok(Head::Range { counter: c.counter, first, last }),
        (_, Some(_)) => Err(malformed("a range cannot be fused with other units".into())),
        ([c], None) => Ok(Head::Compound(*c)),
        (cs, None) if cs.iter().any(|c| c.duration) => {
            Err(malformed("-kan applies to a single unit".into()))
        }
        (cs, None) => Ok(Head::Fused(cs.to_vec())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lex() -> &'static Lexicon {
        Lexicon::builtin()
    }

    fn kinds(s: &str) -> Vec<(String, TokenKind)> {
        tokenize(s).unwrap().into_iter().map(|t| (t.text, t.kind)).collect()
    }

    #[test]
    fn tokenizes_fused_date() {
        use TokenKind::*;
        assert_eq!(
            kinds("2-gatsu-19-nichi"),
            vec![
                ("2".into(), Numeral),
                ("gatsu".into(), Counter),
                ("19".into(), Numeral),
                ("nichi".into(), Counter)
            ]
        );
        assert_eq!(
            kinds("ashita-no akegata"),
            vec![("ashita".into(), Lemma), ("no".into(), Particle), ("akegata".into(), Lemma)]
        );
    }

    #[test]
    fn tokenizer_errors() {
        assert_eq!(tokenize(""), Err(ParseError::EmptyInput));
        assert_eq!(tokenize("   "), Err(ParseError::EmptyInput));
        assert_eq!(tokenize("kinō!"), Err(ParseError::IllegalCharacter('!')));
        assert_eq!(tokenize("昨日"), Err(ParseError::IllegalCharacter('昨')));
        assert!(matches!(tokenize("kinō--no"), Err(ParseError::MalformedCompound(_))));
    }

    #[test]
    fn genitive_date() {
        let p = parse("2-gatsu-no 19-nichi", lex()).unwrap();
        assert_eq!(p.modifiers.len(), 1);
        assert_eq!(p.modifiers[0].head, Head::Compound(NumeralCompound::position(2, Counter::Gatsu)));
        assert!(p.modifiers[0].genitive);
        assert_eq!(p.head, Head::Compound(NumeralCompound::position(19, Counter::Nichi)));
    }

    #[test]
    fn fused_date() {
        let p = parse("2-gatsu-19-nichi", lex()).unwrap();
        assert!(p.modifiers.is_empty());
        assert_eq!(
            p.head,
            Head::Fused(vec![
                NumeralCompound::position(2, Counter::Gatsu),
                NumeralCompound::position(19, Counter::Nichi)
            ])
        );
    }

    #[test]
    fn holiday_with_year_modifier() {
        let p = parse("kotoshi-no kurisumasu", lex()).unwrap();
        assert_eq!(p.modifiers[0].attribute(), Some(SemanticAttribute::Year));
        assert_eq!(p.modifiers[0].head.lexical().unwrap().anchor_offset, Some(0));
        assert_eq!(p.attribute(), Some(SemanticAttribute::Holiday));
    }

    #[test]
    fn particles_and_prefixes() {
        let p = parse("2-gatsu-19-nichi-ni", lex()).unwrap();
        assert_eq!(p.particle, Some(Particle::Ni));
        let p = parse("zen-shūmatsu", lex()).unwrap();
        assert_eq!(p.prefix.unwrap().surface, "zen");
        assert_eq!(p.head.lexical().unwrap().surface, "shūmatsu");
        let p = parse("12-13-nichi-ni", lex()).unwrap();
        assert_eq!(p.head, Head::Range { counter: Counter::Nichi, first: 12, last: 13 });
        let p = parse("13-nichi-kan", lex()).unwrap();
        assert_eq!(p.head, Head::Compound(NumeralCompound { value: 13, counter: Counter::Nichi, duration: true }));
    }

    #[test]
    fn parse_errors() {
        let l = lex();
        assert!(matches!(parse("19-nichi-2-gatsu", l), Err(ParseError::MalformedCompound(_))));
        assert!(matches!(parse("gatsu", l), Err(ParseError::MalformedCompound(_))));
        assert!(matches!(parse("19", l), Err(ParseError::MalformedCompound(_))));
        assert_eq!(parse("xyzzy-ni", l), Err(ParseError::UnknownLemma("xyzzy".into())));
        assert_eq!(parse("ni", l), Err(ParseError::DanglingParticle("ni".into())));
        assert_eq!(parse("kinō-no", l), Err(ParseError::DanglingParticle("no".into())));
        assert!(matches!(parse("kinō-ni ban", l), Err(ParseError::DanglingParticle(_))));
        assert_eq!(parse("13-gatsu", l), Err(ParseError::OutOfRange { value: 13, counter: "gatsu" }));
        assert_eq!(parse("heisei-3-nen", l), Err(ParseError::EraYear("heisei".into())));
        assert!(matches!(parse("kinō ban", l), Err(ParseError::MissingGenitive(_))));
        assert!(matches!(parse("2-gatsu-19-nichi-kan", l), Err(ParseError::MalformedCompound(_))));
    }

    #[test]
    fn adverbial_context() {
        let l = lex();
        assert!(is_adverbial_context(&parse("getsuyōbi-ni", l).unwrap()));
        assert!(is_adverbial_context(&parse("getsuyōbi-de", l).unwrap()));
        assert!(is_adverbial_context(&parse("kinō", l).unwrap()));
        assert!(!is_adverbial_context(&parse("getsuyōbi", l).unwrap()));
        let p = parse("getsuyōbi-no uchiawase", l).unwrap();
        assert!(!is_adverbial_context(&p.modifiers[0]));
        let p = parse("kinō-no ban", l).unwrap();
        assert!(!is_adverbial_context(&p.modifiers[0]));
    }

    #[test]
    fn modifiers_never_carry_particles() {
        let p = parse("kotoshi-no 2-gatsu-no 19-nichi-ni", lex()).unwrap();
        assert_eq!(p.modifiers.len(), 2);
        assert!(p.modifiers.iter().all(|m| m.particle.is_none() && m.genitive));
        assert_eq!(p.particle, Some(Particle::Ni));
    }

    fn morpheme() -> impl Strategy<Value = String> {
        prop_oneof![
            "[0-9]{1,4}".prop_map(String::from),
            prop::sample::select(vec![
                "kinō", "asa", "no", "ni", "gatsu", "nichi", "kan", "kyou", "kin'yōbi", "zen", "mae",
            ])
            .prop_map(String::from),
            "[a-z]{1,6}".prop_map(String::from),
        ]
    }

    proptest! {
        #[test]
        fn render_round_trips(morphs in prop::collection::vec(morpheme(), 1..8)) {
            let input = morphs.join("-");
            let tokens = tokenize(&input).unwrap();
            let again = tokenize(&render_tokens(&tokens)).unwrap();
            prop_assert_eq!(tokens, again);
        }

        #[test]
        fn parsing_is_deterministic(morphs in prop::collection::vec(morpheme(), 1..8)) {
            let input = morphs.join("-");
            let a = parse(&input, lex());
            let b = parse(&input, lex());
            prop_assert_eq!(&a, &b);
            if let Ok(p) = a {
                prop_assert!(p.modifiers.iter().all(|m| m.particle.is_none()));
                if let Head::Fused(cs) = &p.head {
                    prop_assert!(cs.windows(2).all(|w| w[0].counter.granularity() < w[1].counter.granularity()));
                }
            }
        }
    }
}
