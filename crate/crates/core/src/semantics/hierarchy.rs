//! The temporal noun-type hierarchy.
//!
//! Every temporal noun carries one of these attributes. The tree is small and
//! fixed, so it is encoded as a plain enum with a `parent` table rather than
//! as a runtime graph.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(into = "&'static str")]
pub enum SemanticAttribute {
    TemporalNoun,
    DeicticDay,
    Day,
    NamedDay,
    DayOfWeek,
    Holiday,
    RelativeDay,
    DayOfMonth,
    OrdinalDay,
    CardinalDay,
    Hour,
    NumberedHour,
    TimeOfDay,
    NonDayHour,
    Year,
    Season,
    Month,
    Week,
    PeriodOfDay,
}

use SemanticAttribute::*;

impl SemanticAttribute {
    pub const ROOT: SemanticAttribute = TemporalNoun;

    pub const ALL: [SemanticAttribute; 19] = [
        TemporalNoun,
        DeicticDay,
        Day,
        NamedDay,
        DayOfWeek,
        Holiday,
        RelativeDay,
        DayOfMonth,
        OrdinalDay,
        CardinalDay,
        Hour,
        NumberedHour,
        TimeOfDay,
        NonDayHour,
        Year,
        Season,
        Month,
        Week,
        PeriodOfDay,
    ];

    pub fn parent(self) -> Option<SemanticAttribute> {
        match self {
            TemporalNoun => None,
            DeicticDay | Day | Hour | NonDayHour => Some(TemporalNoun),
            NamedDay | RelativeDay | DayOfMonth => Some(Day),
            DayOfWeek | Holiday => Some(NamedDay),
            OrdinalDay | CardinalDay => Some(DayOfMonth),
            NumberedHour | TimeOfDay => Some(Hour),
            Year | Season | Month | Week | PeriodOfDay => Some(NonDayHour),
        }
    }

    pub fn children(self) -> impl Iterator<Item = SemanticAttribute> {
        Self::ALL
            .into_iter()
            .filter(move |a| a.parent() == Some(self))
    }

    /// Walks from `self` up to the root, `self` first.
    pub fn ancestors(self) -> impl Iterator<Item = SemanticAttribute> {
        std::iter::successors(Some(self), |a| a.parent())
    }

    pub fn depth(self) -> usize {
        self.ancestors().count() - 1
    }

    /// True when `self` lies on the path from `descendant` to the root.
    pub fn subsumes(self, descendant: SemanticAttribute) -> bool {
        descendant.ancestors().any(|a| a == self)
    }

    pub fn is_a(self, ancestor: SemanticAttribute) -> bool {
        ancestor.subsumes(self)
    }

    pub fn name(self) -> &'static str {
        match self {
            TemporalNoun => "temporal-noun",
            DeicticDay => "deictic-day",
            Day => "day",
            NamedDay => "named-day",
            DayOfWeek => "day-of-week",
            Holiday => "holiday",
            RelativeDay => "relative-day",
            DayOfMonth => "day-of-month",
            OrdinalDay => "ordinal-day",
            CardinalDay => "cardinal-day",
            Hour => "hour",
            NumberedHour => "numbered-hour",
            TimeOfDay => "time-of-day",
            NonDayHour => "non-day/hour",
            Year => "year",
            Season => "season",
            Month => "month",
            Week => "week",
            PeriodOfDay => "period-of-day",
        }
    }
}

/// Free-function form of [`SemanticAttribute::subsumes`].
pub fn subsumes(ancestor: SemanticAttribute, descendant: SemanticAttribute) -> bool {
    ancestor.subsumes(descendant)
}

impl fmt::Display for SemanticAttribute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl From<SemanticAttribute> for &'static str {
    fn from(a: SemanticAttribute) -> Self {
        a.name()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown attribute name `{0}`")]
pub struct UnknownAttribute(pub String);

impl FromStr for SemanticAttribute {
    type Err = UnknownAttribute;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lowered = s.trim().to_ascii_lowercase();
        // "non-day/hour" is awkward in file formats; accept a slash-free spelling too.
        if lowered == "non-day-hour" {
            return Ok(NonDayHour);
        }
        Self::ALL
            .into_iter()
            .find(|a| a.name() == lowered)
            .ok_or(UnknownAttribute(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_checks() {
        assert!(subsumes(Day, OrdinalDay));
        assert!(!subsumes(Hour, Season));
        assert!(subsumes(NonDayHour, PeriodOfDay));
        assert!(!subsumes(OrdinalDay, Day));
    }

    #[test]
    fn names_round_trip() {
        for a in SemanticAttribute::ALL {
            assert_eq!(a.name().parse::<SemanticAttribute>().unwrap(), a);
        }
        assert_eq!("non-day-hour".parse::<SemanticAttribute>().unwrap(), NonDayHour);
        assert!("weekday".parse::<SemanticAttribute>().is_err());
    }

    #[test]
    fn children_of_day() {
        let kids: Vec<_> = Day.children().collect();
        assert_eq!(kids, vec![NamedDay, RelativeDay, DayOfMonth]);
    }

    #[test]
    fn depth_is_bounded() {
        assert!(SemanticAttribute::ALL.iter().all(|a| a.depth() <= 3));
        assert_eq!(OrdinalDay.depth(), 3);
    }
}
