use thiserror::Error;

use crate::partition::{GroupType, Partition};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partition {partition} has no part of size {part} to remove")]
    MissingPart { partition: Partition, part: u32 },

    #[error("a horizontal domino needs a part of size at least 2, got {part}")]
    PartTooSmall { part: u32 },

    #[error("the empty partition has no smallest part")]
    EmptyPartition,

    #[error("{partition} does not label a nilpotent orbit of type {group}")]
    InvalidLabel { group: GroupType, partition: Partition },

    #[error("element {element} is not in the component group of {group} {partition}")]
    InvalidElement {
        group: GroupType,
        partition: Partition,
        element: String,
    },

    #[error("{0} is a recursion base and has no one-step restriction")]
    RankTooSmall(Partition),

    #[error("graded recursion does not cover {group} {partition} (needed by {root})")]
    OutOfScope {
        group: GroupType,
        partition: Partition,
        root: Partition,
    },

    #[error("non-integral or negative multiplicity: {0}")]
    NonIntegralMultiplicity(String),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: u32, found: u32 },

    #[error("unknown {group} orbit {orbit:?}{}", suggestion.as_ref().map(|s| format!(" (did you mean {s:?}?)")).unwrap_or_default())]
    UnknownOrbit {
        group: String,
        orbit: String,
        suggestion: Option<String>,
    },

    #[error("bad label: {0}")]
    BadLabel(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for errors that signal a bug or data inconsistency rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::NonIntegralMultiplicity(_) | Error::Inconsistent(_)
        )
    }
}
