//! Trading coalitions in simple games.
//!
//! A simple game on players `0..n` is a monotone family of winning
//! coalitions containing the grand coalition and not the empty one. It can
//! be written down as its winning (`W`), losing (`L`), minimal winning
//! (`Wm`) or maximal losing (`LM`) coalitions; see [`game::GameRep`].
//!
//! The crate answers the question: given `j` coalitions of one type, are
//! there `j` coalitions of the other type such that every player occurs
//! equally often on both sides? See [`trade`] for the deciders,
//! [`reductions`] for hard-instance generators and the set splitting
//! translation, and [`oracle`] for exhaustive ground truth.

pub mod cli;
pub mod coalition;
pub mod convert;
pub mod error;
pub mod game;
pub mod io;
pub mod oracle;
pub mod reductions;
pub mod trade;

pub use coalition::{multiplicity, Coalition, Player, Profile, MAX_PLAYERS};
pub use error::{Error, Result};
pub use game::{classify, validate_game, Classification, GameRep, RepKind, ValidationReport};
pub use trade::{dispatch, verify, Limits, TradeAnswer, TradeApplication, TradeQuery};
