//! Polynomial deciders for two given coalitions.

use crate::coalition::{Coalition, Profile};
use crate::convert::{lm_from_w, wm_from_l};
use crate::error::{Error, Result};
use crate::game::{Classification, GameRep, RepKind};

use super::{check_given, TradeAnswer};

/// Adds missing players so that `sets` reaches `target` exactly.
///
/// Players are processed in ascending order; a player short by `d` is added
/// to the first `d` sets that lack it. Requires `Profile::of(sets) <= target`
/// and `target <= sets.len()` pointwise.
pub fn pad_to(sets: &mut [Coalition], target: &Profile) {
    let n = target.counts().len();
    let have = Profile::of(n, sets);
    for p in 0..n {
        let mut deficit = target.count(p) - have.count(p);
        for s in sets.iter_mut() {
            if deficit == 0 {
                break;
            }
            if !s.contains(p) {
                *s = s.with(p);
                deficit -= 1;
            }
        }
        debug_assert_eq!(deficit, 0, "cannot pad player {p}");
    }
}

/// Removes surplus players so that `sets` drops to `target` exactly.
///
/// Mirror of [`pad_to`]: a player over by `d` is removed from the first `d`
/// sets that contain it.
pub fn strip_to(sets: &mut [Coalition], target: &Profile) {
    let n = target.counts().len();
    let have = Profile::of(n, sets);
    for p in 0..n {
        let mut surplus = have.count(p) - target.count(p);
        for s in sets.iter_mut() {
            if surplus == 0 {
                break;
            }
            if s.contains(p) {
                *s = s.without(p);
                surplus -= 1;
            }
        }
    }
}

fn distinct_sorted(list: &[Coalition]) -> Vec<Coalition> {
    let mut v = list.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

/// First unordered pair `(a, b)` of `sorted` with the same per-player counts
/// as `{s1, s2}`. Both members of such a pair contain `s1 ∩ s2`, lie inside
/// `s1 ∪ s2` and share the symmetric difference, so `a` determines `b`.
fn exact_pair(
    sorted: &[Coalition],
    s1: Coalition,
    s2: Coalition,
) -> Option<(Coalition, Coalition)> {
    let both = s1 & s2;
    let either = s1 | s2;
    let diff = either - both;
    sorted
        .iter()
        .copied()
        .filter(|a| a.is_superset(both) && a.is_subset(either))
        .find_map(|a| {
            let b = both | (diff - a);
            sorted.binary_search(&b).ok().map(|_| (a.min(b), a.max(b)))
        })
}

/// First pair of minimal winning coalitions whose counts stay below those of
/// `{s1, s2}`, padded up to an exact match.
fn dominated_pair(
    wm: &[Coalition],
    s1: Coalition,
    s2: Coalition,
    n: usize,
) -> Option<[Coalition; 2]> {
    let both = s1 & s2;
    let either = s1 | s2;
    let fits: Vec<Coalition> = wm.iter().copied().filter(|m| m.is_subset(either)).collect();
    for (i, &m3) in fits.iter().enumerate() {
        for &m4 in &fits[i..] {
            if (m3 & m4).is_subset(both) {
                let mut pair = [m3, m4];
                pad_to(&mut pair, &Profile::of(n, &[s1, s2]));
                return Some(pair);
            }
        }
    }
    None
}

/// First pair of maximal losing coalitions whose counts reach those of
/// `{s1, s2}`, stripped down to an exact match.
fn dominating_pair(
    lm: &[Coalition],
    s1: Coalition,
    s2: Coalition,
    n: usize,
) -> Option<[Coalition; 2]> {
    let both = s1 & s2;
    let either = s1 | s2;
    let covers: Vec<Coalition> = lm.iter().copied().filter(|l| l.is_superset(both)).collect();
    for (i, &l3) in covers.iter().enumerate() {
        for &l4 in &covers[i..] {
            if (l3 | l4).is_superset(either) {
                let mut pair = [l3, l4];
                strip_to(&mut pair, &Profile::of(n, &[s1, s2]));
                return Some(pair);
            }
        }
    }
    None
}

fn answer(given: [Coalition; 2], found: Option<[Coalition; 2]>, given_wins: bool) -> TradeAnswer {
    match found {
        Some(pair) => TradeAnswer::yes(&given, pair.to_vec(), given_wins),
        None => TradeAnswer::no(),
    }
}

/// Two losing coalitions, game given by W, Wm or L: find two winning
/// coalitions with the same per-player counts.
pub fn decide_beta_l(rep: &GameRep, s1: Coalition, s2: Coalition) -> Result<TradeAnswer> {
    check_given(rep, &[s1, s2], Classification::Losing)?;
    let n = rep.n();
    let found = match rep.kind() {
        RepKind::W => exact_pair(&distinct_sorted(rep.coalitions()), s1, s2).map(|(a, b)| [a, b]),
        RepKind::Wm => dominated_pair(&distinct_sorted(rep.coalitions()), s1, s2, n),
        RepKind::L => dominated_pair(&wm_from_l(rep)?, s1, s2, n),
        RepKind::LM => {
            return Err(Error::WrongKind {
                expected: "W, Wm or L",
                actual: rep.kind(),
            })
        }
    };
    Ok(answer([s1, s2], found, false))
}

/// Two winning coalitions, game given by L, LM or W: find two losing
/// coalitions with the same per-player counts.
pub fn decide_beta_w(rep: &GameRep, s1: Coalition, s2: Coalition) -> Result<TradeAnswer> {
    check_given(rep, &[s1, s2], Classification::Winning)?;
    let n = rep.n();
    let found = match rep.kind() {
        RepKind::L => exact_pair(&distinct_sorted(rep.coalitions()), s1, s2).map(|(a, b)| [a, b]),
        RepKind::LM => dominating_pair(&distinct_sorted(rep.coalitions()), s1, s2, n),
        RepKind::W => dominating_pair(&lm_from_w(rep)?, s1, s2, n),
        RepKind::Wm => {
            return Err(Error::WrongKind {
                expected: "L, LM or W",
                actual: rep.kind(),
            })
        }
    };
    Ok(answer([s1, s2], found, true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convert::expand;
    use crate::trade::verify;

    fn c(players: &[usize]) -> Coalition {
        Coalition::from_players(players.iter().copied())
    }

    fn game(n: usize, kind: RepKind, sets: &[&[usize]]) -> GameRep {
        GameRep::new(n, kind, sets.iter().map(|s| c(s)).collect()).unwrap()
    }

    /// Every unordered pair of coalitions of class `want`, checked for equal
    /// counts against `{s1, s2}`.
    fn brute_pair(rep: &GameRep, s1: Coalition, s2: Coalition, want: bool) -> bool {
        let all: Vec<Coalition> = rep
            .grand()
            .subsets()
            .filter(|&s| rep.wins(s) == want)
            .collect();
        let target = Profile::of(rep.n(), &[s1, s2]);
        all.iter().enumerate().any(|(i, &a)| {
            all[i..]
                .iter()
                .any(|&b| Profile::of(rep.n(), &[a, b]) == target)
        })
    }

    #[test]
    fn example_game_losing_pair() {
        let rep = game(4, RepKind::Wm, &[&[0, 2], &[1, 3]]);
        let ans = decide_beta_l(&rep, c(&[0, 1]), c(&[2, 3])).unwrap();
        assert_eq!(ans.witness, Some(vec![c(&[0, 2]), c(&[1, 3])]));
        assert!(verify(&rep, ans.application.as_ref().unwrap()));
    }

    #[test]
    fn padding_cannot_fake_a_trade() {
        let rep = game(2, RepKind::Wm, &[&[0, 1]]);
        assert!(!brute_pair(&rep, c(&[0]), c(&[1]), true));
        assert!(!decide_beta_l(&rep, c(&[0]), c(&[1])).unwrap().is_yes());

        let rep = game(4, RepKind::Wm, &[&[0, 1]]);
        assert!(!decide_beta_l(&rep, c(&[0]), c(&[1])).unwrap().is_yes());
    }

    #[test]
    fn beta_w_examples() {
        let rep = game(4, RepKind::LM, &[&[0, 1], &[2, 3]]);
        assert!(brute_pair(&rep, c(&[0, 2]), c(&[1, 3]), false));
        let ans = decide_beta_w(&rep, c(&[0, 2]), c(&[1, 3])).unwrap();
        assert_eq!(ans.witness, Some(vec![c(&[0, 1]), c(&[2, 3])]));
        assert!(verify(&rep, ans.application.as_ref().unwrap()));

        let rep = game(1, RepKind::LM, &[&[]]);
        assert!(!decide_beta_w(&rep, c(&[0]), c(&[0])).unwrap().is_yes());

        let rep = game(2, RepKind::L, &[&[], &[0], &[1]]);
        assert!(!brute_pair(&rep, c(&[0, 1]), c(&[0, 1]), false));
        assert!(!decide_beta_w(&rep, c(&[0, 1]), c(&[0, 1]))
            .unwrap()
            .is_yes());
    }

    #[test]
    fn padding_rule() {
        // deficit 2 goes to both, deficit 1 to the first set lacking the player
        let mut pair = [c(&[0]), c(&[])];
        pad_to(&mut pair, &Profile::of(3, &[c(&[0, 1, 2]), c(&[2])]));
        assert_eq!(pair, [c(&[0, 1, 2]), c(&[2])]);
        let mut pair = [c(&[0, 1]), c(&[])];
        pad_to(&mut pair, &Profile::of(2, &[c(&[0, 1]), c(&[0])]));
        assert_eq!(pair, [c(&[0, 1]), c(&[0])]);

        let mut pair = [c(&[0, 1, 2]), c(&[1, 2])];
        strip_to(&mut pair, &Profile::of(3, &[c(&[1]), c(&[0])]));
        assert_eq!(pair, [c(&[0]), c(&[1])]);
    }

    #[test]
    fn all_representations_agree_with_pair_brute_force() {
        let games = [
            game(4, RepKind::Wm, &[&[0, 2], &[1, 3]]),
            game(3, RepKind::Wm, &[&[0], &[1, 2]]),
            game(4, RepKind::Wm, &[&[0, 1], &[1, 2], &[2, 3]]),
            game(5, RepKind::Wm, &[&[0, 1, 2], &[2, 3], &[0, 4]]),
        ];
        for wm in games {
            let w = expand(&wm).unwrap();
            let l = expand(&w).unwrap();
            let lm = GameRep::new(
                wm.n(),
                RepKind::LM,
                crate::convert::maximal_elements(l.coalitions()),
            )
            .unwrap();
            for &s1 in l.coalitions() {
                for &s2 in l.coalitions() {
                    let expected = brute_pair(&wm, s1, s2, true);
                    for rep in [&w, &wm, &l] {
                        let ans = decide_beta_l(rep, s1, s2).unwrap();
                        assert_eq!(ans.is_yes(), expected, "{} {s1} {s2}", rep.kind());
                        if let Some(app) = &ans.application {
                            assert!(verify(rep, app));
                        }
                    }
                }
            }
            for &s1 in w.coalitions() {
                for &s2 in w.coalitions() {
                    let expected = brute_pair(&wm, s1, s2, false);
                    for rep in [&l, &lm, &w] {
                        let ans = decide_beta_w(rep, s1, s2).unwrap();
                        assert_eq!(ans.is_yes(), expected, "{} {s1} {s2}", rep.kind());
                        if let Some(app) = &ans.application {
                            assert!(verify(rep, app));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn wrong_kind_and_precondition() {
        let lm = game(4, RepKind::LM, &[&[0, 1], &[2, 3]]);
        assert!(matches!(
            decide_beta_l(&lm, c(&[0]), c(&[1])),
            Err(Error::WrongKind { .. })
        ));
        let wm = game(4, RepKind::Wm, &[&[0, 2], &[1, 3]]);
        assert!(matches!(
            decide_beta_w(&wm, c(&[0, 2]), c(&[1, 3])),
            Err(Error::WrongKind { .. })
        ));
        assert!(matches!(
            decide_beta_l(&wm, c(&[0, 2]), c(&[1])),
            Err(Error::Precondition { index: 0, .. })
        ));
    }
}
