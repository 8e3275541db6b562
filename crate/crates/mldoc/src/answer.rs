//! Answer slots: the state of a single documentation field.

use std::fmt;

/// Three-valued answer. `Unknown` is a real answer (the author asserts
/// ignorance) and is distinct from an unanswered field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TriState {
    Yes,
    No,
    Unknown,
}

impl TriState {
    pub fn as_str(self) -> &'static str {
        match self {
            TriState::Yes => "yes",
            TriState::No => "no",
            TriState::Unknown => "unknown",
        }
    }

    pub fn parse(s: &str) -> Option<TriState> {
        match s {
            "yes" => Some(TriState::Yes),
            "no" => Some(TriState::No),
            "unknown" => Some(TriState::Unknown),
            _ => None,
        }
    }
}

impl fmt::Display for TriState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A typed answer value. Which variants are legal for a given field is
/// determined by the field's schema kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnswerValue {
    /// Free text. Also used for choice fields, constrained by the schema.
    Text(String),
    TriState(TriState),
    /// Non-negative count (e.g. number of persons with access).
    Count(u64),
    /// List of text items (or of choice tokens, constrained by the schema).
    List(Vec<String>),
    /// A tri-state plus an optional elaboration. The detail may be present
    /// only when the answer is `Yes`.
    WithDetail {
        answer: TriState,
        detail: Option<String>,
    },
    /// Query budget: at most `max_queries` requests per `window_seconds`
    /// seconds. Both components are >= 1.
    QueryLimit {
        max_queries: u64,
        window_seconds: u64,
    },
}

impl AnswerValue {
    /// Short name of the value kind, used in error messages.
    pub fn kind_name(&self) -> &'static str {
        match self {
            AnswerValue::Text(_) => "text",
            AnswerValue::TriState(_) => "tri-state",
            AnswerValue::Count(_) => "count",
            AnswerValue::List(_) => "list",
            AnswerValue::WithDetail { .. } => "tri-state with detail",
            AnswerValue::QueryLimit { .. } => "query limit",
        }
    }
}

/// The state of one documentation field.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum Answer {
    /// The author has not addressed the question.
    #[default]
    Unanswered,
    /// The author states the question does not apply.
    NotApplicable,
    /// The author answered with a typed value.
    Value(AnswerValue),
}

impl Answer {
    pub fn text(s: impl Into<String>) -> Answer {
        Answer::Value(AnswerValue::Text(s.into()))
    }

    pub fn tri(t: TriState) -> Answer {
        Answer::Value(AnswerValue::TriState(t))
    }

    pub fn yes() -> Answer {
        Answer::tri(TriState::Yes)
    }

    pub fn no() -> Answer {
        Answer::tri(TriState::No)
    }

    pub fn unknown() -> Answer {
        Answer::tri(TriState::Unknown)
    }

    pub fn count(n: u64) -> Answer {
        Answer::Value(AnswerValue::Count(n))
    }

    pub fn list<I, S>(items: I) -> Answer
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Answer::Value(AnswerValue::List(items.into_iter().map(Into::into).collect()))
    }

    pub fn with_detail(answer: TriState, detail: Option<impl Into<String>>) -> Answer {
        Answer::Value(AnswerValue::WithDetail {
            answer,
            detail: detail.map(Into::into),
        })
    }

    pub fn query_limit(max_queries: u64, window_seconds: u64) -> Answer {
        Answer::Value(AnswerValue::QueryLimit {
            max_queries,
            window_seconds,
        })
    }

    /// True when the field carries a value (not unanswered, not N/A).
    pub fn is_value(&self) -> bool {
        matches!(self, Answer::Value(_))
    }

    pub fn is_unanswered(&self) -> bool {
        matches!(self, Answer::Unanswered)
    }

    pub fn value(&self) -> Option<&AnswerValue> {
        match self {
            Answer::Value(v) => Some(v),
            _ => None,
        }
    }

    /// The tri-state carried by this answer, if any. For `WithDetail`
    /// values this is the tri-state component.
    pub fn tri_state(&self) -> Option<TriState> {
        match self {
            Answer::Value(AnswerValue::TriState(t)) => Some(*t),
            Answer::Value(AnswerValue::WithDetail { answer, .. }) => Some(*answer),
            _ => None,
        }
    }

    /// True when the answer is a plain or detailed tri-state equal to `t`.
    pub fn is_tri(&self, t: TriState) -> bool {
        self.tri_state() == Some(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tri_state_round_trips_through_strings() {
        for t in [TriState::Yes, TriState::No, TriState::Unknown] {
            assert_eq!(TriState::parse(t.as_str()), Some(t));
        }
        assert_eq!(TriState::parse("maybe"), None);
    }

    #[test]
    fn unknown_is_a_value_distinct_from_unanswered() {
        let unknown = Answer::unknown();
        assert!(unknown.is_value());
        assert_ne!(unknown, Answer::Unanswered);
    }

    #[test]
    fn tri_state_accessor_sees_through_detail() {
        let a = Answer::with_detail(TriState::Yes, Some("spectral signatures"));
        assert_eq!(a.tri_state(), Some(TriState::Yes));
        assert!(a.is_tri(TriState::Yes));
        assert!(!Answer::NotApplicable.is_tri(TriState::Yes));
    }
}
