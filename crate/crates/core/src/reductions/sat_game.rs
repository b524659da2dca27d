//! Hard trade instances built from CNF formulas.
//!
//! Players are the `2n` literals (`x_v` is player `2(v-1)`, `-x_v` is player
//! `2(v-1)+1`), then `a`, `b`, and for `j > 2` the pairs `c1_i`, `c2_i` with
//! `i = 3..=j`. A coalition `Y` wins when at least one of:
//!
//! * `a ∈ Y` and `Y` meets every clause,
//! * `b ∈ Y` and `Y` holds `x_v` or `-x_v` for every variable,
//! * `{c1_i, c2_i} ⊆ Y` for some `i`.
//!
//! `Y` loses exactly when it avoids one "blocker" per condition, so the
//! maximal losing coalitions are the maximal complements of blocker unions.
//! The given losing coalitions can be traded for winning ones if and only if
//! the formula is satisfiable.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::coalition::{Coalition, Player, Profile};
use crate::convert::maximal_elements;
use crate::error::{Error, Result};
use crate::game::{validate_game, GameRep, RepKind};

use super::cnf::{sat_brute_force, CnfFormula, SAT_BRUTE_FORCE_CAP};

/// Largest number of losing candidates the generator will minimise.
pub const MAX_CANDIDATES: usize = 1 << 20;

/// Player indices of a generated game.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SatLayout {
    pub num_vars: usize,
    pub j: usize,
}

impl SatLayout {
    pub fn positive(&self, var: usize) -> Player {
        2 * (var - 1)
    }

    pub fn negative(&self, var: usize) -> Player {
        2 * (var - 1) + 1
    }

    pub fn literal(&self, lit: i32) -> Player {
        let var = lit.unsigned_abs() as usize;
        if lit > 0 {
            self.positive(var)
        } else {
            self.negative(var)
        }
    }

    pub fn a(&self) -> Player {
        2 * self.num_vars
    }

    pub fn b(&self) -> Player {
        2 * self.num_vars + 1
    }

    /// `c1_i` for `3 <= i <= j`.
    pub fn c1(&self, i: usize) -> Player {
        2 * self.num_vars + 2 + 2 * (i - 3)
    }

    pub fn c2(&self, i: usize) -> Player {
        self.c1(i) + 1
    }

    pub fn n_players(&self) -> usize {
        2 * self.num_vars + 2 + 2 * (self.j - 2)
    }

    pub fn literals(&self) -> Coalition {
        Coalition::full(2 * self.num_vars)
    }

    pub fn variable(&self, var: usize) -> Coalition {
        Coalition::from_players([self.positive(var), self.negative(var)])
    }

    pub fn c_pair(&self, i: usize) -> Coalition {
        Coalition::from_players([self.c1(i), self.c2(i)])
    }

    pub fn names(&self) -> BTreeMap<String, Player> {
        let mut names = BTreeMap::new();
        for v in 1..=self.num_vars {
            names.insert(format!("x{v}"), self.positive(v));
            names.insert(format!("-x{v}"), self.negative(v));
        }
        names.insert("a".into(), self.a());
        names.insert("b".into(), self.b());
        for i in 3..=self.j {
            names.insert(format!("c1_{i}"), self.c1(i));
            names.insert(format!("c2_{i}"), self.c2(i));
        }
        names
    }
}

/// A generated game together with its given losing coalitions.
#[derive(Clone, Debug)]
pub struct SatGameInstance {
    pub formula: CnfFormula,
    pub layout: SatLayout,
    /// The game as its maximal losing coalitions.
    pub game: GameRep,
    /// `j` losing coalitions.
    pub given: Vec<Coalition>,
    /// The winning side built from the first satisfying assignment, when the
    /// formula is satisfiable.
    pub witness: Option<Vec<Coalition>>,
}

/// File form: `{"game": …, "given": […], "names": {…}}`.
#[derive(Serialize)]
pub struct SatGameDocument<'a> {
    pub game: crate::io::GameFile,
    pub given: &'a [Coalition],
    pub names: BTreeMap<String, Player>,
}

impl SatGameInstance {
    pub fn j(&self) -> usize {
        self.layout.j
    }

    pub fn document(&self) -> SatGameDocument<'_> {
        SatGameDocument {
            game: crate::io::GameFile::from(&self.game),
            given: &self.given,
            names: self.layout.names(),
        }
    }

    /// The winning predicate stated directly on the formula.
    pub fn meets_winning_condition(&self, y: Coalition) -> bool {
        let lay = &self.layout;
        let hits_all_clauses = self
            .formula
            .clauses()
            .iter()
            .all(|clause| clause.iter().any(|&lit| y.contains(lay.literal(lit))));
        let covers_all_vars = (1..=lay.num_vars).all(|v| !(y & lay.variable(v)).is_empty());
        (y.contains(lay.a()) && hits_all_clauses)
            || (y.contains(lay.b()) && covers_all_vars)
            || (3..=lay.j).any(|i| lay.c_pair(i).is_subset(y))
    }
}

/// The two-coalition instance: given losing coalitions `{a, b}` and `X`.
pub fn game_from_cnf(f: &CnfFormula) -> Result<SatGameInstance> {
    game_from_cnf_j(f, 2)
}

/// The `j`-coalition generalisation with `2 + 2(j-2)` extra players.
///
/// Given losing coalitions, for even `j`: `X`, `{a, b}`, `{c1_i, c1_(i+1)}`
/// for odd `i` in `3..j` and `{c2_(i-1), c2_i}` for even `i` in `4..=j`.
/// For odd `j`: `X`, `{a, c1_j}`, `{c1_i, c1_(i+1)}` for odd `i` in `3..j-1`,
/// `{c2_(i-1), c2_i}` for even `i` in `4..j`, and `{b, c2_j}`.
///
/// The result is self-checked: the game must be valid, the given coalitions
/// losing, every `{c1_i, c2_i}` winning and, for satisfiable formulas, the
/// constructed winning side must balance the given side player by player.
pub fn game_from_cnf_j(f: &CnfFormula, j: usize) -> Result<SatGameInstance> {
    if j < 2 {
        return Err(Error::InvalidArgument(format!(
            "j must be at least 2, got {j}"
        )));
    }
    if f.num_vars() == 0 || f.clauses().is_empty() {
        return Err(Error::InvalidArgument(
            "the formula needs at least one variable and one clause".into(),
        ));
    }
    let layout = SatLayout {
        num_vars: f.num_vars(),
        j,
    };
    let n = layout.n_players();
    if n > crate::coalition::MAX_PLAYERS {
        return Err(Error::TooManyPlayers {
            n,
            max: crate::coalition::MAX_PLAYERS,
        });
    }
    let grand = Coalition::full(n);
    let blocker_unions = (1 + f.clauses().len()) * (1 + f.num_vars());
    if j - 2 >= 24 || blocker_unions << (j - 2) > MAX_CANDIDATES {
        return Err(Error::CapExceeded {
            what: "losing candidate sets",
            size: blocker_unions.saturating_mul(1 << (j - 2).min(24)),
            cap: MAX_CANDIDATES,
        });
    }

    // Blockers of each winning condition: a losing coalition avoids one
    // blocker of every condition.
    let clause_sets: Vec<Coalition> = f
        .clauses()
        .iter()
        .map(|clause| clause.iter().map(|&lit| layout.literal(lit)).collect())
        .collect();
    let mut first: Vec<Coalition> = vec![Coalition::singleton(layout.a())];
    first.extend(clause_sets.iter().copied());
    let mut second: Vec<Coalition> = vec![Coalition::singleton(layout.b())];
    second.extend((1..=layout.num_vars).map(|v| layout.variable(v)));

    let mut removals: Vec<Coalition> = first
        .iter()
        .flat_map(|&x| second.iter().map(move |&y| x | y))
        .collect();
    for i in 3..=j {
        removals = removals
            .into_iter()
            .flat_map(|r| [r.with(layout.c1(i)), r.with(layout.c2(i))])
            .collect();
    }
    let candidates: Vec<Coalition> = removals.into_iter().map(|r| grand - r).collect();
    let game = GameRep::new(n, RepKind::LM, maximal_elements(&candidates))?;

    let given = given_coalitions(&layout);
    let witness = if f.num_vars() <= SAT_BRUTE_FORCE_CAP {
        sat_brute_force(f)?.map(|assignment| winning_side(&layout, &assignment))
    } else {
        None
    };
    let instance = SatGameInstance {
        formula: f.clone(),
        layout,
        game,
        given,
        witness,
    };
    self_check(&instance)?;
    Ok(instance)
}

fn given_coalitions(lay: &SatLayout) -> Vec<Coalition> {
    let j = lay.j;
    let x = lay.literals();
    let pair = |p: Player, q: Player| Coalition::from_players([p, q]);
    if j == 2 {
        return vec![pair(lay.a(), lay.b()), x];
    }
    let mut given = vec![x];
    if j.is_multiple_of(2) {
        given.push(pair(lay.a(), lay.b()));
        for i in 3..=j {
            given.push(if i % 2 == 1 {
                pair(lay.c1(i), lay.c1(i + 1))
            } else {
                pair(lay.c2(i - 1), lay.c2(i))
            });
        }
    } else {
        given.push(pair(lay.a(), lay.c1(j)));
        for i in 3..j {
            given.push(if i % 2 == 1 {
                pair(lay.c1(i), lay.c1(i + 1))
            } else {
                pair(lay.c2(i - 1), lay.c2(i))
            });
        }
        given.push(pair(lay.b(), lay.c2(j)));
    }
    given
}

fn winning_side(lay: &SatLayout, assignment: &[bool]) -> Vec<Coalition> {
    let true_literals: Coalition = assignment
        .iter()
        .enumerate()
        .map(|(v, &value)| {
            if value {
                lay.positive(v + 1)
            } else {
                lay.negative(v + 1)
            }
        })
        .collect();
    let mut side = vec![
        true_literals.with(lay.a()),
        (lay.literals() - true_literals).with(lay.b()),
    ];
    side.extend((3..=lay.j).map(|i| lay.c_pair(i)));
    side
}

fn self_check(inst: &SatGameInstance) -> Result<()> {
    let report = validate_game(&inst.game);
    if !report.is_valid() {
        return Err(Error::SelfCheck(format!(
            "generated game is invalid: {}",
            report.violations[0]
        )));
    }
    let j = inst.j();
    if inst.given.len() != j {
        return Err(Error::SelfCheck(format!(
            "{} given coalitions for j = {j}",
            inst.given.len()
        )));
    }
    if let Some(s) = inst.given.iter().find(|&&s| inst.game.wins(s)) {
        return Err(Error::SelfCheck(format!("given coalition {s} is winning")));
    }
    if let Some(i) = (3..=j).find(|&i| !inst.game.wins(inst.layout.c_pair(i))) {
        return Err(Error::SelfCheck(format!(
            "pair c1_{i}, c2_{i} is not winning"
        )));
    }
    if let Some(side) = &inst.witness {
        if let Some(s) = side.iter().find(|&&s| !inst.game.wins(s)) {
            return Err(Error::SelfCheck(format!(
                "constructed coalition {s} is losing"
            )));
        }
        let n = inst.game.n();
        if Profile::of(n, side) != Profile::of(n, &inst.given) {
            return Err(Error::SelfCheck(
                "constructed winning side does not balance the given coalitions".into(),
            ));
        }
    }
    Ok(())
}
