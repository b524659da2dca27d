//! Trade applications and the deciders for the `(α, β, j)`-trade problems.
//!
//! A *j-trade application* is a list of `2j` coalitions together with an
//! index set `I` of size `j` such that exactly the coalitions indexed by `I`
//! are winning and every player occurs equally often inside and outside `I`.
//!
//! The routing in [`dispatch`] follows the complexity of each cell:
//!
//! | representation | β = L (given losing)     | β = W (given winning)     |
//! |----------------|--------------------------|---------------------------|
//! | W              | pair scan over W         | pair scan over LM(W)      |
//! | Wm             | dominated pair scan      | symmetric difference scan |
//! | L              | dominated scan Wm(L)     | pair scan over L          |
//! | LM             | set splitting            | dominating pair scan      |
//!
//! Other values of `j` go to [`decide_j_trade`].

mod exact;
mod multi;
mod pairs;

use serde::Serialize;

use crate::coalition::{Coalition, Profile};
use crate::error::{Error, Result};
use crate::game::{Classification, GameRep, RepKind};
use crate::oracle::DEFAULT_ORACLE_CAP;

pub use exact::{decide_lm_l_exact, decide_wm_w_exact};
pub use multi::{decide_j_trade, losing_generators, winning_generators};
pub use pairs::{decide_beta_l, decide_beta_w, pad_to, strip_to};

/// Default number of search steps a decider may spend.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Default largest universe for brute-force subset searches.
pub const DEFAULT_BRUTE_FORCE_CAP: usize = 24;

/// Resource limits shared by the exponential searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Search steps before giving up with [`Error::BudgetExceeded`].
    pub budget: u64,
    /// Largest universe for set splitting and symmetric difference scans.
    pub brute_force_cap: usize,
    /// Largest player count for full `2^n` expansion.
    pub oracle_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            budget: DEFAULT_BUDGET,
            brute_force_cap: DEFAULT_BRUTE_FORCE_CAP,
            oracle_cap: DEFAULT_ORACLE_CAP,
        }
    }
}

impl Limits {
    pub fn with_budget(budget: u64) -> Self {
        Limits {
            budget,
            ..Limits::default()
        }
    }
}

/// `2j` coalitions and the (0-based) indices of the winning ones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TradeApplication {
    pub coalitions: Vec<Coalition>,
    pub winners: Vec<usize>,
}

impl TradeApplication {
    pub fn new(coalitions: Vec<Coalition>, mut winners: Vec<usize>) -> Self {
        winners.sort_unstable();
        TradeApplication {
            coalitions,
            winners,
        }
    }

    /// `first` followed by `second`, with the winning half named by
    /// `first_wins`.
    pub fn from_halves(first: &[Coalition], second: &[Coalition], first_wins: bool) -> Self {
        let j = first.len();
        let coalitions = first.iter().chain(second).copied().collect();
        let winners = if first_wins {
            (0..j).collect()
        } else {
            (j..j + second.len()).collect()
        };
        TradeApplication {
            coalitions,
            winners,
        }
    }

    pub fn j(&self) -> usize {
        self.coalitions.len() / 2
    }

    pub fn is_winner(&self, index: usize) -> bool {
        self.winners.binary_search(&index).is_ok()
    }

    pub fn winning_side(&self) -> Vec<Coalition> {
        self.winners.iter().map(|&i| self.coalitions[i]).collect()
    }

    pub fn losing_side(&self) -> Vec<Coalition> {
        (0..self.coalitions.len())
            .filter(|&i| !self.is_winner(i))
            .map(|i| self.coalitions[i])
            .collect()
    }
}

/// Checks all three defining conditions of a trade application under `rep`.
pub fn verify(rep: &GameRep, ta: &TradeApplication) -> bool {
    let total = ta.coalitions.len();
    if total == 0 || !total.is_multiple_of(2) {
        return false;
    }
    let j = total / 2;
    let mut winners = ta.winners.clone();
    winners.sort_unstable();
    winners.dedup();
    if winners.len() != ta.winners.len() || winners.len() != j {
        return false;
    }
    if winners.iter().any(|&i| i >= total) {
        return false;
    }
    if ta.coalitions.iter().any(|c| !c.fits(rep.n())) {
        return false;
    }
    let classified_ok = ta
        .coalitions
        .iter()
        .enumerate()
        .all(|(i, &c)| rep.wins(c) == winners.binary_search(&i).is_ok());
    if !classified_ok {
        return false;
    }
    let win_side: Vec<Coalition> = winners.iter().map(|&i| ta.coalitions[i]).collect();
    let lose_side: Vec<Coalition> = (0..total)
        .filter(|i| winners.binary_search(i).is_err())
        .map(|i| ta.coalitions[i])
        .collect();
    Profile::of(rep.n(), &win_side) == Profile::of(rep.n(), &lose_side)
}

/// A game, the type of the given coalitions, and the given coalitions.
#[derive(Clone, Debug)]
pub struct TradeQuery {
    pub rep: GameRep,
    pub beta: Classification,
    pub given: Vec<Coalition>,
}

/// Outcome of a decider. On yes, `witness` holds the complementary
/// coalitions and `application` the full verified list (given side first).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TradeAnswer {
    pub witness: Option<Vec<Coalition>>,
    pub application: Option<TradeApplication>,
}

impl TradeAnswer {
    pub fn no() -> Self {
        TradeAnswer {
            witness: None,
            application: None,
        }
    }

    pub fn yes(given: &[Coalition], witness: Vec<Coalition>, given_wins: bool) -> Self {
        let application = TradeApplication::from_halves(given, &witness, given_wins);
        TradeAnswer {
            witness: Some(witness),
            application: Some(application),
        }
    }

    pub fn is_yes(&self) -> bool {
        self.application.is_some()
    }
}

/// Which procedure answers a `(kind, β)` cell with two given coalitions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// Polynomial pair scan with losing given coalitions.
    PairScanLosing,
    /// Polynomial pair scan with winning given coalitions.
    PairScanWinning,
    /// `(LM, L)`: exact search through set splitting.
    SetSplitting,
    /// `(Wm, W)`: exact search over the symmetric difference.
    SymmetricDifference,
}

pub fn route(kind: RepKind, beta: Classification) -> Route {
    match (kind, beta) {
        (RepKind::LM, Classification::Losing) => Route::SetSplitting,
        (RepKind::Wm, Classification::Winning) => Route::SymmetricDifference,
        (_, Classification::Losing) => Route::PairScanLosing,
        (_, Classification::Winning) => Route::PairScanWinning,
    }
}

/// Fails unless every given coalition is in range and classifies as `expected`.
pub(crate) fn check_given(
    rep: &GameRep,
    given: &[Coalition],
    expected: Classification,
) -> Result<()> {
    for (index, &c) in given.iter().enumerate() {
        rep.check_coalition(c)?;
        let actual = rep.classification(c);
        if actual != expected {
            return Err(Error::Precondition {
                index,
                coalition: c,
                expected,
                actual,
            });
        }
    }
    Ok(())
}

/// Answers a query with the decider matching its cell.
pub fn dispatch(query: &TradeQuery, limits: &Limits) -> Result<TradeAnswer> {
    let rep = &query.rep;
    check_given(rep, &query.given, query.beta)?;
    match query.given.as_slice() {
        [] => Err(Error::InvalidArgument(
            "at least one given coalition is required".into(),
        )),
        &[s1, s2] => match route(rep.kind(), query.beta) {
            Route::PairScanLosing => decide_beta_l(rep, s1, s2),
            Route::PairScanWinning => decide_beta_w(rep, s1, s2),
            Route::SetSplitting => decide_lm_l_exact(rep, s1, s2, limits),
            Route::SymmetricDifference => decide_wm_w_exact(rep, s1, s2, limits),
        },
        given => decide_j_trade(rep, given.len(), Some(given), limits),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(players: &[usize]) -> Coalition {
        Coalition::from_players(players.iter().copied())
    }

    fn example_game() -> GameRep {
        GameRep::new(4, RepKind::Wm, vec![c(&[0, 2]), c(&[1, 3])]).unwrap()
    }

    #[test]
    fn verify_examples() {
        let rep = example_game();
        let ta = TradeApplication::new(
            vec![c(&[0, 2]), c(&[1, 3]), c(&[0, 1]), c(&[2, 3])],
            vec![0, 1],
        );
        assert!(verify(&rep, &ta));
        let wrong_side = TradeApplication::new(
            vec![c(&[0, 2]), c(&[1, 3]), c(&[0, 1]), c(&[2, 3])],
            vec![0, 2],
        );
        assert!(!verify(&rep, &wrong_side));
        for s in rep.grand().subsets() {
            for winners in [vec![0], vec![1]] {
                assert!(!verify(&rep, &TradeApplication::new(vec![s, s], winners)));
            }
        }
    }

    #[test]
    fn verify_rejects_malformed() {
        let rep = example_game();
        let coalitions = vec![c(&[0, 2]), c(&[1, 3]), c(&[0, 1]), c(&[2, 3])];
        assert!(!verify(
            &rep,
            &TradeApplication::new(coalitions.clone(), vec![0])
        ));
        assert!(!verify(
            &rep,
            &TradeApplication::new(coalitions.clone(), vec![0, 0])
        ));
        assert!(!verify(
            &rep,
            &TradeApplication::new(coalitions[..3].to_vec(), vec![0])
        ));
        assert!(!verify(&rep, &TradeApplication::new(vec![], vec![])));
        let out_of_range = vec![c(&[0, 2]), c(&[1, 3, 7]), c(&[0, 1]), c(&[2, 3, 7])];
        assert!(!verify(
            &rep,
            &TradeApplication::new(out_of_range, vec![0, 1])
        ));
    }

    #[test]
    fn routing_table() {
        assert_eq!(
            route(RepKind::LM, Classification::Losing),
            Route::SetSplitting
        );
        assert_eq!(
            route(RepKind::Wm, Classification::Winning),
            Route::SymmetricDifference
        );
        assert_eq!(
            route(RepKind::W, Classification::Winning),
            Route::PairScanWinning
        );
        assert_eq!(
            route(RepKind::Wm, Classification::Losing),
            Route::PairScanLosing
        );
        assert_eq!(
            route(RepKind::L, Classification::Losing),
            Route::PairScanLosing
        );
        assert_eq!(
            route(RepKind::L, Classification::Winning),
            Route::PairScanWinning
        );
    }

    #[test]
    fn dispatch_example_game() {
        let query = TradeQuery {
            rep: example_game(),
            beta: Classification::Losing,
            given: vec![c(&[0, 1]), c(&[2, 3])],
        };
        let answer = dispatch(&query, &Limits::default()).unwrap();
        assert!(answer.is_yes());
        assert!(verify(&query.rep, answer.application.as_ref().unwrap()));
    }

    #[test]
    fn dispatch_checks_precondition() {
        let query = TradeQuery {
            rep: example_game(),
            beta: Classification::Losing,
            given: vec![c(&[0, 2]), c(&[2, 3])],
        };
        assert!(matches!(
            dispatch(&query, &Limits::default()),
            Err(Error::Precondition { index: 0, .. })
        ));
        let empty = TradeQuery {
            given: vec![],
            ..query
        };
        assert!(matches!(
            dispatch(&empty, &Limits::default()),
            Err(Error::InvalidArgument(_))
        ));
    }
}
