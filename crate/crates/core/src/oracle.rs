//! Exhaustive ground truth at small scale.
//!
//! These engines classify every coalition directly and search the definition
//! of a trade application without using any of the structural shortcuts the
//! deciders rely on. They are meant for tests and cross-checking.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coalition::{Coalition, Profile, Subsets};
use crate::convert::minimal_elements;
use crate::error::{Error, Result};
use crate::game::{Classification, GameRep, RepKind};
use crate::trade::TradeApplication;

/// Largest player count for `2^n` enumeration.
pub const DEFAULT_ORACLE_CAP: usize = 20;

/// Default number of search steps for [`brute_force_trade`].
pub const DEFAULT_ORACLE_BUDGET: u64 = 100_000_000;

/// Largest player count accepted by [`random_game`].
pub const RANDOM_GAME_MAX_PLAYERS: usize = 16;

/// Every coalition over `n` players, once each, in ascending bit order.
pub fn enumerate_coalitions(n: usize) -> Result<Subsets> {
    enumerate_coalitions_with_cap(n, DEFAULT_ORACLE_CAP)
}

pub fn enumerate_coalitions_with_cap(n: usize, cap: usize) -> Result<Subsets> {
    if n > cap {
        return Err(Error::CapExceeded {
            what: "coalition enumeration",
            size: n,
            cap,
        });
    }
    Ok(Coalition::full(n).subsets())
}

/// Winning status of every coalition, indexed by bit pattern.
#[derive(Clone, Debug)]
pub struct TruthTable {
    n: usize,
    wins: Vec<bool>,
}

impl TruthTable {
    pub fn new(rep: &GameRep) -> Result<Self> {
        let wins = enumerate_coalitions(rep.n())?
            .map(|s| rep.wins(s))
            .collect();
        Ok(TruthTable { n: rep.n(), wins })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn wins(&self, s: Coalition) -> bool {
        self.wins[s.bits() as usize]
    }

    pub fn class_members(&self, class: Classification) -> Vec<Coalition> {
        let want = class == Classification::Winning;
        Coalition::full(self.n)
            .subsets()
            .filter(|&s| self.wins(s) == want)
            .collect()
    }
}

struct Search<'a> {
    table: &'a TruthTable,
    used: u64,
    budget: u64,
}

impl Search<'_> {
    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.budget {
            return Err(Error::BudgetExceeded {
                what: "brute-force trade search",
                needed: u128::from(self.used),
                budget: self.budget,
            });
        }
        Ok(())
    }

    /// Extends `chosen` to a multiset of `slots` members of class `want`
    /// whose counts are exactly `rest`. The last member is read off `rest`.
    fn exact(
        &mut self,
        cands: &[Coalition],
        start: usize,
        slots: usize,
        rest: &mut [u32],
        want: bool,
        chosen: &mut Vec<Coalition>,
    ) -> Result<bool> {
        self.tick()?;
        if slots == 1 {
            if rest.iter().any(|&k| k > 1) {
                return Ok(false);
            }
            let last: Coalition = rest
                .iter()
                .enumerate()
                .filter(|&(_, &k)| k == 1)
                .map(|(p, _)| p)
                .collect();
            if self.table.wins(last) == want {
                chosen.push(last);
                return Ok(true);
            }
            return Ok(false);
        }
        for (i, &c) in cands.iter().enumerate().skip(start) {
            if c.iter().any(|p| rest[p] == 0) {
                continue;
            }
            c.iter().for_each(|p| rest[p] -= 1);
            chosen.push(c);
            if self.exact(cands, i, slots - 1, rest, want, chosen)? {
                return Ok(true);
            }
            chosen.pop();
            c.iter().for_each(|p| rest[p] += 1);
        }
        Ok(false)
    }

    /// `j` members of class `want` matching `target` exactly.
    fn complete(
        &mut self,
        target: &Profile,
        j: usize,
        want: bool,
    ) -> Result<Option<Vec<Coalition>>> {
        let support = target.at_least(1);
        let cands: Vec<Coalition> = support
            .subsets()
            .filter(|&s| self.table.wins(s) == want)
            .collect();
        let mut rest = target.counts().to_vec();
        let mut chosen = Vec::with_capacity(j);
        Ok(self
            .exact(&cands, 0, j, &mut rest, want, &mut chosen)?
            .then_some(chosen))
    }
}

/// Searches the definition directly: `j` winning and `j` losing coalitions
/// with equal per-player counts.
///
/// With `given`, those coalitions (all of one class) form one side and only
/// the other side is searched; the given side comes first in the result.
/// Without `given`, the returned application lists the winning side first.
/// Running out of `budget` is an error, never a negative answer.
pub fn brute_force_trade(
    rep: &GameRep,
    j: usize,
    given: Option<&[Coalition]>,
    budget: u64,
) -> Result<Option<TradeApplication>> {
    if j == 0 {
        return Err(Error::InvalidArgument("j must be at least 1".into()));
    }
    let table = TruthTable::new(rep)?;
    let n = rep.n();
    let mut search = Search {
        table: &table,
        used: 0,
        budget,
    };

    if let Some(given) = given {
        if given.len() != j {
            return Err(Error::InvalidArgument(format!(
                "{} given coalitions for j = {j}",
                given.len()
            )));
        }
        for &g in given {
            rep.check_coalition(g)?;
        }
        let given_wins = table.wins(given[0]);
        if let Some(index) = given.iter().position(|&g| table.wins(g) != given_wins) {
            return Err(Error::InvalidArgument(format!(
                "given coalitions mix winning and losing (coalition #{index})"
            )));
        }
        let target = Profile::of(n, given);
        return Ok(search
            .complete(&target, j, !given_wins)?
            .map(|other| TradeApplication::from_halves(given, &other, given_wins)));
    }

    // enumerate the smaller class, complete with the larger
    let winning = table.class_members(Classification::Winning);
    let losing = table.class_members(Classification::Losing);
    let outer_wins = winning.len() <= losing.len();
    let outer = if outer_wins { &winning } else { &losing };
    let mut seen = HashSet::new();
    let mut idx = vec![0usize; j];
    loop {
        search.tick()?;
        let side: Vec<Coalition> = idx.iter().map(|&i| outer[i]).collect();
        let target = Profile::of(n, &side);
        if seen.insert(target.clone()) {
            if let Some(other) = search.complete(&target, j, !outer_wins)? {
                let (win, lose) = if outer_wins {
                    (side, other)
                } else {
                    (other, side)
                };
                return Ok(Some(TradeApplication::from_halves(&win, &lose, true)));
            }
        }
        let Some(pos) = (0..j).rev().find(|&p| idx[p] + 1 < outer.len()) else {
            return Ok(None);
        };
        let next = idx[pos] + 1;
        idx[pos..].iter_mut().for_each(|i| *i = next);
    }
}

/// Random game as a minimal winning list, deterministic in `seed`.
///
/// Samples between 1 and `2n` generator coalitions, each player joining a
/// generator with probability `density` (clamped to `[0, 1]`; empty draws
/// become a random singleton), and returns the minimal generators: the
/// minimal winning coalitions of the up-closure of the sample.
pub fn random_game(n: usize, seed: u64, density: f64) -> GameRep {
    assert!(
        (1..=RANDOM_GAME_MAX_PLAYERS).contains(&n),
        "random games need 1..={RANDOM_GAME_MAX_PLAYERS} players, got {n}"
    );
    let density = if density.is_nan() {
        0.5
    } else {
        density.clamp(0.0, 1.0)
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = rng.gen_range(1..=2 * n);
    let generators: Vec<Coalition> = (0..count)
        .map(|_| {
            let drawn: Coalition = (0..n).filter(|_| rng.gen_bool(density)).collect();
            if drawn.is_empty() {
                Coalition::singleton(rng.gen_range(0..n))
            } else {
                drawn
            }
        })
        .collect();
    GameRep::new(n, RepKind::Wm, minimal_elements(&generators)).expect("generators fit n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::validate_game;
    use crate::trade::verify;

    fn c(players: &[usize]) -> Coalition {
        Coalition::from_players(players.iter().copied())
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(
            enumerate_coalitions(0).unwrap().collect::<Vec<_>>(),
            vec![c(&[])]
        );
        assert_eq!(
            enumerate_coalitions(2).unwrap().collect::<Vec<_>>(),
            vec![c(&[]), c(&[0]), c(&[1]), c(&[0, 1])]
        );
        assert_eq!(enumerate_coalitions(3).unwrap().count(), 8);
        assert!(enumerate_coalitions(21).is_err());
    }

    #[test]
    fn brute_force_example_game() {
        let rep = GameRep::new(4, RepKind::Wm, vec![c(&[0, 2]), c(&[1, 3])]).unwrap();
        let app = brute_force_trade(&rep, 2, None, DEFAULT_ORACLE_BUDGET)
            .unwrap()
            .unwrap();
        assert!(verify(&rep, &app));
        let given = [c(&[0, 1]), c(&[2, 3])];
        let app = brute_force_trade(&rep, 2, Some(&given), DEFAULT_ORACLE_BUDGET)
            .unwrap()
            .unwrap();
        assert!(verify(&rep, &app));
        assert_eq!(app.coalitions[..2], given);
        assert!(brute_force_trade(&rep, 1, None, DEFAULT_ORACLE_BUDGET)
            .unwrap()
            .is_none());
    }

    #[test]
    fn brute_force_chain_three() {
        let wm = (0..3).map(|i| c(&[2 * i, 2 * i + 1])).collect();
        let rep = GameRep::new(6, RepKind::Wm, wm).unwrap();
        let app = brute_force_trade(&rep, 3, None, DEFAULT_ORACLE_BUDGET)
            .unwrap()
            .unwrap();
        assert!(verify(&rep, &app));
        assert_eq!(app.j(), 3);
    }

    #[test]
    fn brute_force_guards() {
        let rep = GameRep::new(4, RepKind::Wm, vec![c(&[0, 2]), c(&[1, 3])]).unwrap();
        assert!(brute_force_trade(&rep, 0, None, 10).is_err());
        assert!(brute_force_trade(&rep, 2, None, 3)
            .unwrap_err()
            .is_resource());
        assert!(brute_force_trade(&rep, 2, Some(&[c(&[0, 1])]), 100).is_err());
        assert!(brute_force_trade(&rep, 2, Some(&[c(&[0, 1]), c(&[0, 2])]), 100).is_err());
    }

    #[test]
    fn random_game_examples() {
        let g = random_game(4, 1, 0.3);
        assert!(validate_game(&g).is_valid());
        assert_eq!(g.coalitions(), &[c(&[2]), c(&[3])]);
        assert_eq!(g.coalitions(), random_game(4, 1, 0.3).coalitions());
        assert_eq!(random_game(1, 7, 0.5).coalitions(), &[c(&[0])]);
        let dense = random_game(5, 3, 1.0);
        assert_eq!(dense.coalitions(), &[Coalition::full(5)]);
        assert!(validate_game(&random_game(5, 3, 0.0)).is_valid());
        for seed in 0..200 {
            let g = random_game(
                1 + (seed as usize % 16),
                seed,
                0.1 + (seed % 9) as f64 / 10.0,
            );
            assert!(validate_game(&g).is_valid(), "seed {seed}");
        }
    }
}
