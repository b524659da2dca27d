//! The four explicit representations of a simple game and membership
//! classification.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::coalition::{Coalition, MAX_PLAYERS};
use crate::error::{Error, Result};

/// Which family of coalitions a [`GameRep`] lists.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RepKind {
    /// Every winning coalition.
    W,
    /// Every losing coalition.
    L,
    /// The minimal winning coalitions.
    Wm,
    /// The maximal losing coalitions.
    LM,
}

impl RepKind {
    pub const ALL: [RepKind; 4] = [RepKind::W, RepKind::L, RepKind::Wm, RepKind::LM];

    pub fn as_str(self) -> &'static str {
        match self {
            RepKind::W => "W",
            RepKind::L => "L",
            RepKind::Wm => "Wm",
            RepKind::LM => "LM",
        }
    }
}

impl fmt::Display for RepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RepKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "W" => Ok(RepKind::W),
            "L" => Ok(RepKind::L),
            "Wm" => Ok(RepKind::Wm),
            "LM" => Ok(RepKind::LM),
            other => Err(Error::Parse(format!(
                "unknown representation {other:?}, expected one of W, L, Wm, LM"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Classification {
    Winning,
    Losing,
}

impl Classification {
    pub fn opposite(self) -> Self {
        match self {
            Classification::Winning => Classification::Losing,
            Classification::Losing => Classification::Winning,
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::Winning => "winning",
            Classification::Losing => "losing",
        })
    }
}

impl FromStr for Classification {
    type Err = Error;

    /// Accepts the family tags used on the command line: `W` or `L`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "W" => Ok(Classification::Winning),
            "L" => Ok(Classification::Losing),
            other => Err(Error::Parse(format!("expected W or L, got {other:?}"))),
        }
    }
}

/// A game `(N, X)` with `N = {0, .., n-1}` and `X` one of W, L, Wm, LM.
///
/// For `W` and `L` the list is taken to be complete; classification is plain
/// membership. For `Wm` and `LM` classification goes through containment.
#[derive(Clone, Debug)]
pub struct GameRep {
    n: usize,
    kind: RepKind,
    coalitions: Vec<Coalition>,
    sorted: Vec<Coalition>,
}

impl PartialEq for GameRep {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.kind == other.kind && self.coalitions == other.coalitions
    }
}

impl Eq for GameRep {}

impl GameRep {
    /// Checks the player range only; see [`validate_game`] for the game axioms.
    pub fn new(n: usize, kind: RepKind, coalitions: Vec<Coalition>) -> Result<Self> {
        if n > MAX_PLAYERS {
            return Err(Error::TooManyPlayers {
                n,
                max: MAX_PLAYERS,
            });
        }
        if let Some(&bad) = coalitions.iter().find(|c| !c.fits(n)) {
            return Err(Error::InvalidCoalition {
                coalition: bad,
                player: bad.max_player().unwrap_or(0),
                n,
            });
        }
        let mut sorted = coalitions.clone();
        sorted.sort_unstable();
        Ok(GameRep {
            n,
            kind,
            coalitions,
            sorted,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> RepKind {
        self.kind
    }

    /// The listed coalitions in input order.
    pub fn coalitions(&self) -> &[Coalition] {
        &self.coalitions
    }

    /// The listed coalitions in ascending bit order (duplicates kept).
    pub fn sorted(&self) -> &[Coalition] {
        &self.sorted
    }

    pub fn grand(&self) -> Coalition {
        Coalition::full(self.n)
    }

    pub fn lists(&self, s: Coalition) -> bool {
        self.sorted.binary_search(&s).is_ok()
    }

    /// Classification without the range check.
    pub fn wins(&self, s: Coalition) -> bool {
        match self.kind {
            RepKind::W => self.lists(s),
            RepKind::L => !self.lists(s),
            RepKind::Wm => self.sorted.iter().any(|m| m.is_subset(s)),
            RepKind::LM => !self.sorted.iter().any(|l| s.is_subset(*l)),
        }
    }

    pub fn classification(&self, s: Coalition) -> Classification {
        if self.wins(s) {
            Classification::Winning
        } else {
            Classification::Losing
        }
    }

    pub fn check_coalition(&self, s: Coalition) -> Result<()> {
        if s.fits(self.n) {
            Ok(())
        } else {
            Err(Error::InvalidCoalition {
                coalition: s,
                player: s.max_player().unwrap_or(0),
                n: self.n,
            })
        }
    }
}

/// Winning or losing status of `s` under `rep`.
pub fn classify(rep: &GameRep, s: Coalition) -> Result<Classification> {
    rep.check_coalition(s)?;
    Ok(rep.classification(s))
}

/// One broken game axiom found by [`validate_game`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "violation", rename_all = "kebab-case")]
pub enum Violation {
    NoPlayers,
    Duplicate {
        coalition: Coalition,
    },
    NotAntichain {
        smaller: Coalition,
        larger: Coalition,
    },
    EmptyListed,
    EmptyWinning,
    GrandNotWinning,
    GrandLosing,
    EmptyNotLosing,
    NotUpwardClosed {
        coalition: Coalition,
        missing: Coalition,
    },
    NotDownwardClosed {
        coalition: Coalition,
        missing: Coalition,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoPlayers => write!(f, "a game needs at least one player"),
            Violation::Duplicate { coalition } => write!(f, "duplicate coalition {coalition}"),
            Violation::NotAntichain { smaller, larger } => {
                write!(f, "not an antichain: {smaller} is contained in {larger}")
            }
            Violation::EmptyListed => write!(f, "the list is empty"),
            Violation::EmptyWinning => write!(f, "the empty coalition is winning"),
            Violation::GrandNotWinning => write!(f, "the grand coalition is not winning"),
            Violation::GrandLosing => write!(f, "the grand coalition is losing"),
            Violation::EmptyNotLosing => write!(f, "the empty coalition is not losing"),
            Violation::NotUpwardClosed { coalition, missing } => {
                write!(
                    f,
                    "{coalition} wins but its superset {missing} is not listed"
                )
            }
            Violation::NotDownwardClosed { coalition, missing } => {
                write!(
                    f,
                    "{coalition} loses but its subset {missing} is not listed"
                )
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the simple-game axioms for `rep`.
///
/// Monotonicity of a complete `W` (`L`) list is equivalent to closure under
/// adding (removing) a single player, which is checked for every listed
/// coalition.
pub fn validate_game(rep: &GameRep) -> ValidationReport {
    let mut violations = Vec::new();
    let n = rep.n();
    let grand = rep.grand();
    if n == 0 {
        violations.push(Violation::NoPlayers);
    }

    let mut seen = HashSet::new();
    for &c in rep.coalitions() {
        if !seen.insert(c) {
            violations.push(Violation::Duplicate { coalition: c });
        }
    }

    match rep.kind() {
        RepKind::Wm | RepKind::LM => {
            if rep.coalitions().is_empty() {
                violations.push(Violation::EmptyListed);
            }
            let distinct: Vec<Coalition> = {
                let mut v = rep.sorted().to_vec();
                v.dedup();
                v
            };
            for &a in &distinct {
                for &b in &distinct {
                    if a != b && a.is_subset(b) {
                        violations.push(Violation::NotAntichain {
                            smaller: a,
                            larger: b,
                        });
                    }
                }
            }
            if rep.kind() == RepKind::Wm && rep.lists(Coalition::EMPTY) {
                violations.push(Violation::EmptyWinning);
            }
            if rep.kind() == RepKind::LM && rep.lists(grand) {
                violations.push(Violation::GrandLosing);
            }
        }
        RepKind::W => {
            if rep.lists(Coalition::EMPTY) {
                violations.push(Violation::EmptyWinning);
            }
            if !rep.lists(grand) {
                violations.push(Violation::GrandNotWinning);
            }
            for &w in rep.sorted() {
                for p in grand - w {
                    let up = w.with(p);
                    if !rep.lists(up) {
                        violations.push(Violation::NotUpwardClosed {
                            coalition: w,
                            missing: up,
                        });
                    }
                }
            }
        }
        RepKind::L => {
            if !rep.lists(Coalition::EMPTY) {
                violations.push(Violation::EmptyNotLosing);
            }
            if rep.lists(grand) {
                violations.push(Violation::GrandLosing);
            }
            for &l in rep.sorted() {
                for p in l {
                    let down = l.without(p);
                    if !rep.lists(down) {
                        violations.push(Violation::NotDownwardClosed {
                            coalition: l,
                            missing: down,
                        });
                    }
                }
            }
        }
    }
    // A W/L list with duplicates reports the same closure failure twice.
    violations.dedup();
    ValidationReport { violations }
}
