use thiserror::Error;

use crate::coalition::Coalition;
use crate::game::{Classification, RepKind};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("coalition {coalition} uses player {player}, but the game has only {n} players")]
    InvalidCoalition {
        coalition: Coalition,
        player: usize,
        n: usize,
    },

    #[error("games with {n} players exceed the supported maximum of {max}")]
    TooManyPlayers { n: usize, max: usize },

    #[error("operation needs a {expected} representation, got {actual}")]
    WrongKind {
        expected: &'static str,
        actual: RepKind,
    },

    #[error("given coalition #{index} {coalition} is {actual}, expected {expected}")]
    Precondition {
        index: usize,
        coalition: Coalition,
        expected: Classification,
        actual: Classification,
    },

    #[error("invalid game: {0}")]
    InvalidGame(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{what} needs at least {needed} steps, budget is {budget}")]
    BudgetExceeded {
        what: &'static str,
        needed: u128,
        budget: u64,
    },

    #[error("{what}: size {size} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("generator self-check failed: {0}")]
    SelfCheck(String),
}

impl Error {
    /// Resource exhaustion, as opposed to a malformed input or a negative answer.
    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            Error::BudgetExceeded { .. } | Error::CapExceeded { .. }
        )
    }
}
