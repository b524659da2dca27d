//! Fixed-`j` enumeration.
//!
//! If a game admits a j-trade application then it admits one whose losing
//! side consists of maximal losing coalitions and whose winning side is
//! obtained by padding minimal winning coalitions: enlarging a losing member
//! to a maximal one and shrinking a winning member to a minimal one only
//! moves counts in the direction padding can repair. The search therefore
//! only enumerates multisets of `Wm` and `LM` members.

use std::collections::HashSet;

use crate::coalition::{Coalition, Profile};
use crate::convert::{convert, lm_from_w, maximal_elements, minimal_elements, wm_from_l};
use crate::error::{Error, Result};
use crate::game::{Classification, GameRep, RepKind};

use super::pairs::{pad_to, strip_to};
use super::{check_given, Limits, TradeAnswer};

/// Minimal winning coalitions of `rep`, sorted. `LM` input is expanded, so it
/// is subject to the oracle cap.
pub fn winning_generators(rep: &GameRep, limits: &Limits) -> Result<Vec<Coalition>> {
    match rep.kind() {
        RepKind::W | RepKind::Wm => Ok(minimal_elements(rep.coalitions())),
        RepKind::L => wm_from_l(rep),
        RepKind::LM => Ok(convert(rep, RepKind::Wm, limits.oracle_cap)?
            .coalitions()
            .to_vec()),
    }
}

/// Maximal losing coalitions of `rep`, sorted. `Wm` input is expanded.
pub fn losing_generators(rep: &GameRep, limits: &Limits) -> Result<Vec<Coalition>> {
    match rep.kind() {
        RepKind::L | RepKind::LM => Ok(maximal_elements(rep.coalitions())),
        RepKind::W => lm_from_w(rep),
        RepKind::Wm => Ok(convert(rep, RepKind::LM, limits.oracle_cap)?
            .coalitions()
            .to_vec()),
    }
}

struct Steps {
    used: u64,
    budget: u64,
}

impl Steps {
    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.budget {
            return Err(Error::BudgetExceeded {
                what: "j-trade enumeration",
                needed: u128::from(self.used),
                budget: self.budget,
            });
        }
        Ok(())
    }
}

/// Multiset of `slots` candidates (non-decreasing indices) whose counts stay
/// pointwise within `room`.
fn below(
    cands: &[Coalition],
    start: usize,
    slots: usize,
    room: &mut [u32],
    chosen: &mut Vec<Coalition>,
    steps: &mut Steps,
) -> Result<bool> {
    if slots == 0 {
        return Ok(true);
    }
    for (i, &c) in cands.iter().enumerate().skip(start) {
        steps.tick()?;
        if c.iter().any(|p| room[p] == 0) {
            continue;
        }
        c.iter().for_each(|p| room[p] -= 1);
        chosen.push(c);
        if below(cands, i, slots - 1, room, chosen, steps)? {
            return Ok(true);
        }
        chosen.pop();
        c.iter().for_each(|p| room[p] += 1);
    }
    Ok(false)
}

/// Multiset of `slots` candidates whose counts reach `need` pointwise.
fn above(
    cands: &[Coalition],
    start: usize,
    slots: usize,
    need: &mut [u32],
    chosen: &mut Vec<Coalition>,
    steps: &mut Steps,
) -> Result<bool> {
    if slots == 0 {
        return Ok(need.iter().all(|&k| k == 0));
    }
    let slots = slots as u32;
    // players that must appear in every remaining pick
    let forced: Coalition = need
        .iter()
        .enumerate()
        .filter(|&(_, &k)| k == slots)
        .map(|(p, _)| p)
        .collect();
    if need.iter().any(|&k| k > slots) {
        return Ok(false);
    }
    for (i, &c) in cands.iter().enumerate().skip(start) {
        steps.tick()?;
        if !forced.is_subset(c) {
            continue;
        }
        let touched: Vec<usize> = c.iter().filter(|&p| need[p] > 0).collect();
        touched.iter().for_each(|&p| need[p] -= 1);
        chosen.push(c);
        if above(cands, i, slots as usize - 1, need, chosen, steps)? {
            return Ok(true);
        }
        chosen.pop();
        touched.iter().for_each(|&p| need[p] += 1);
    }
    Ok(false)
}

/// All `j`-multisets of `items` in lexicographic index order.
fn for_each_multiset<F>(items: &[Coalition], j: usize, mut f: F) -> Result<bool>
where
    F: FnMut(&[Coalition]) -> Result<bool>,
{
    if items.is_empty() {
        return Ok(false);
    }
    let mut idx = vec![0usize; j];
    let mut current: Vec<Coalition> = vec![items[0]; j];
    loop {
        if f(&current)? {
            return Ok(true);
        }
        // advance to the next non-decreasing index vector
        let mut pos = j;
        loop {
            if pos == 0 {
                return Ok(false);
            }
            pos -= 1;
            if idx[pos] + 1 < items.len() {
                break;
            }
        }
        let next = idx[pos] + 1;
        for k in pos..j {
            idx[k] = next;
            current[k] = items[next];
        }
    }
}

/// Decides the `(α, β, j)`-trade problem for the given coalitions, or whether
/// the game is j-trade at all when `given` is `None`.
///
/// With losing coalitions given, `j` minimal winning coalitions are sought
/// whose counts fit within the given ones and then padded; with winning
/// coalitions given, `j` maximal losing coalitions covering the given counts
/// are sought and then stripped. Without given coalitions every `j`-multiset
/// of maximal losing coalitions is tried as the losing side (winning side
/// first in the returned application).
pub fn decide_j_trade(
    rep: &GameRep,
    j: usize,
    given: Option<&[Coalition]>,
    limits: &Limits,
) -> Result<TradeAnswer> {
    if j == 0 {
        return Err(Error::InvalidArgument("j must be at least 1".into()));
    }
    let n = rep.n();
    let mut steps = Steps {
        used: 0,
        budget: limits.budget,
    };

    let Some(given) = given else {
        let wm = winning_generators(rep, limits)?;
        let lm = losing_generators(rep, limits)?;
        let mut seen = HashSet::new();
        let mut result = None;
        for_each_multiset(&lm, j, |losing| {
            steps.tick()?;
            let target = Profile::of(n, losing);
            if !seen.insert(target.clone()) {
                return Ok(false);
            }
            let support = target.at_least(1);
            let cands: Vec<Coalition> = wm
                .iter()
                .copied()
                .filter(|m| m.is_subset(support))
                .collect();
            let mut room = target.counts().to_vec();
            let mut chosen = Vec::with_capacity(j);
            if below(&cands, 0, j, &mut room, &mut chosen, &mut steps)? {
                pad_to(&mut chosen, &target);
                result = Some((chosen, losing.to_vec()));
                return Ok(true);
            }
            Ok(false)
        })?;
        return Ok(match result {
            Some((winning, losing)) => TradeAnswer::yes(&winning, losing, true),
            None => TradeAnswer::no(),
        });
    };

    if given.len() != j {
        return Err(Error::InvalidArgument(format!(
            "{} given coalitions for j = {j}",
            given.len()
        )));
    }
    let first = given[0];
    rep.check_coalition(first)?;
    let beta = rep.classification(first);
    check_given(rep, given, beta)?;
    let target = Profile::of(n, given);
    let mut chosen = Vec::with_capacity(j);

    match beta {
        Classification::Losing => {
            let support = target.at_least(1);
            let cands: Vec<Coalition> = winning_generators(rep, limits)?
                .into_iter()
                .filter(|m| m.is_subset(support))
                .collect();
            let mut room = target.counts().to_vec();
            if below(&cands, 0, j, &mut room, &mut chosen, &mut steps)? {
                pad_to(&mut chosen, &target);
                return Ok(TradeAnswer::yes(given, chosen, false));
            }
        }
        Classification::Winning => {
            let core = target.at_least(j as u32);
            let cands: Vec<Coalition> = losing_generators(rep, limits)?
                .into_iter()
                .filter(|l| l.is_superset(core))
                .collect();
            let mut need = target.counts().to_vec();
            if above(&cands, 0, j, &mut need, &mut chosen, &mut steps)? {
                strip_to(&mut chosen, &target);
                return Ok(TradeAnswer::yes(given, chosen, true));
            }
        }
    }
    Ok(TradeAnswer::no())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convert::expand;
    use crate::trade::verify;

    fn c(players: &[usize]) -> Coalition {
        Coalition::from_players(players.iter().copied())
    }

    fn chain(j: usize) -> GameRep {
        let wm = (0..j).map(|i| c(&[2 * i, 2 * i + 1])).collect();
        GameRep::new(2 * j, RepKind::Wm, wm).unwrap()
    }

    #[test]
    fn multisets_in_order() {
        let items = [c(&[0]), c(&[1]), c(&[2])];
        let mut seen = Vec::new();
        for_each_multiset(&items, 2, |m| {
            seen.push(m.to_vec());
            Ok(false)
        })
        .unwrap();
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[0], vec![items[0], items[0]]);
        assert_eq!(seen[1], vec![items[0], items[1]]);
        assert_eq!(seen[5], vec![items[2], items[2]]);
    }

    #[test]
    fn example_game_is_two_trade() {
        let wm = GameRep::new(4, RepKind::Wm, vec![c(&[0, 2]), c(&[1, 3])]).unwrap();
        let w = expand(&wm).unwrap();
        let ans = decide_j_trade(&w, 2, None, &Limits::default()).unwrap();
        assert!(verify(&w, ans.application.as_ref().unwrap()));
    }

    #[test]
    fn no_game_is_one_trade() {
        for j in 1..=3 {
            let w = expand(&chain(j)).unwrap();
            assert!(!decide_j_trade(&w, 1, None, &Limits::default())
                .unwrap()
                .is_yes());
            for s in w.grand().subsets() {
                let ans = decide_j_trade(&w, 1, Some(&[s]), &Limits::default()).unwrap();
                assert!(!ans.is_yes(), "{s}");
            }
        }
    }

    #[test]
    fn chain_family_three_trade() {
        let rep = chain(3);
        let w = expand(&rep).unwrap();
        let l = expand(&w).unwrap();
        for r in [&w, &l] {
            let ans = decide_j_trade(r, 3, None, &Limits::default()).unwrap();
            assert!(verify(r, ans.application.as_ref().unwrap()));
        }
        // the losing chain {1,2},{3,4},{5,0}
        let given = [c(&[1, 2]), c(&[3, 4]), c(&[0, 5])];
        let ans = decide_j_trade(&w, 3, Some(&given), &Limits::default()).unwrap();
        assert_eq!(ans.witness, Some(vec![c(&[0, 1]), c(&[2, 3]), c(&[4, 5])]));
        assert!(verify(&w, ans.application.as_ref().unwrap()));
    }

    #[test]
    fn winning_side_given() {
        let rep = chain(3);
        let winning = [c(&[0, 1]), c(&[2, 3]), c(&[4, 5])];
        for r in [&rep, &expand(&rep).unwrap()] {
            let ans = decide_j_trade(r, 3, Some(&winning), &Limits::default()).unwrap();
            assert!(verify(r, ans.application.as_ref().unwrap()));
        }
    }

    #[test]
    fn rejects_bad_arguments() {
        let w = expand(&chain(2)).unwrap();
        assert!(matches!(
            decide_j_trade(&w, 0, None, &Limits::default()),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            decide_j_trade(&w, 2, Some(&[c(&[0])]), &Limits::default()),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            decide_j_trade(&w, 2, Some(&[c(&[0]), c(&[0, 1])]), &Limits::default()),
            Err(Error::Precondition { index: 1, .. })
        ));
    }

    #[test]
    fn budget_is_reported_not_answered() {
        let w = expand(&chain(4)).unwrap();
        let err = decide_j_trade(&w, 4, None, &Limits::with_budget(10)).unwrap_err();
        assert!(err.is_resource());
    }
}
