//! Transfer of romanized Japanese temporal expressions into English.
//!
//! ```
//! use temporal_transfer::calendar::TradingCalendar;
//! use temporal_transfer::pipeline::Engine;
//! use temporal_transfer::semantics::Lexicon;
//! use temporal_transfer::transfer::TransferConfig;
//!
//! let engine = Engine::new(Lexicon::builtin(), TransferConfig::default(), TradingCalendar::default()).unwrap();
//! assert_eq!(engine.translate("kinō-no ban").unwrap().realization.text, "last night");
//! ```

pub mod calendar;
pub mod cli;
pub mod generation;
pub mod parser;
pub mod pipeline;
pub mod semantics;
pub mod transfer;
