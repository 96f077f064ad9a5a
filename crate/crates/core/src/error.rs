use thiserror::Error;

use crate::coset_enum::CosetId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { message: String, position: usize },

    #[error("alphabet mismatch")]
    AlphabetMismatch,

    /// The enumeration did not close within the coset limit. Either the index
    /// is infinite or the limit is too small; the two cannot be told apart.
    #[error("coset limit of {max_cosets} exceeded")]
    LimitExceeded { max_cosets: usize },

    #[error("coset {coset} out of range 1..={index}")]
    CosetOutOfRange { coset: CosetId, index: usize },

    #[error("not a {kind} transversal: {reason}")]
    NotATransversal { kind: &'static str, reason: String },

    #[error("invalid Nielsen move: {0}")]
    InvalidMove(String),

    #[error("no empty left coset with respect to the tuple")]
    NoEmptyCoset,

    #[error("no tuple entry lies in the subgroup")]
    NoEntryInH,

    #[error("tuple has {size} entries but the index is only {index}")]
    TupleLargerThanIndex { size: usize, index: usize },

    #[error("tuple is not left-right-cleaned")]
    NotLRCleaned,

    #[error("{count} tuple entries lie in the subgroup (at most one allowed)")]
    MultipleEntriesInH { count: usize },

    #[error("tuple of size {0} is not supported (at most 3)")]
    RankTooLarge(usize),

    #[error("tuple of size {size} is too small (need at least {min})")]
    TupleTooSmall { size: usize, min: usize },

    #[error("tuple does not generate the group: {0}")]
    NotGenerating(String),

    #[error("chessboard blocks are not square (subgroups differ)")]
    NonSquareBlocks,

    #[error("index {index} exceeds the bound {bound}")]
    IndexTooLarge { index: usize, bound: usize },

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("element does not lie in the subgroup")]
    EntryNotInSubgroup,

    #[error("search too large: {0}")]
    SearchTooLarge(String),
}

impl Error {
    pub(crate) fn parse(message: impl Into<String>, position: usize) -> Self {
        Error::Parse {
            message: message.into(),
            position,
        }
    }

    /// True for errors that report a violated operation precondition rather
    /// than bad input text or an exhausted resource limit.
    pub fn is_precondition(&self) -> bool {
        !matches!(self, Error::Parse { .. } | Error::LimitExceeded { .. })
    }
}
