//! Semantic attributes and the temporal lexicon.

mod hierarchy;
mod lexicon;
pub mod romaji;

pub use hierarchy::{subsumes, SemanticAttribute, UnknownAttribute};
pub use lexicon::{
    attribute_of, load_lexicon, Flag, LexEntry, Lexicon, LexiconError, LookupError,
    DEFAULT_LEXICON,
};
