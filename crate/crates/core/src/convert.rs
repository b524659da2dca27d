//! Conversions between the four game representations.
//!
//! `W -> Wm` and `L -> LM` are plain minimisation/maximisation. The two
//! cross conversions `L -> Wm` and `W -> LM` use the one-player neighbourhood
//! of the complete list: every minimal winning coalition is `L ∪ {p}` for some
//! listed losing `L`, and every maximal losing coalition is `W \ {p}` for some
//! listed winning `W`. Enumerating those `n·|list|` candidates and filtering
//! keeps both conversions polynomial in the size of the list.
//!
//! Everything else goes through [`expand`], which enumerates all `2^n`
//! coalitions and is therefore limited to `n <= cap`.

use std::collections::HashSet;

use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::game::{GameRep, RepKind};
use crate::oracle::DEFAULT_ORACLE_CAP;

fn sorted_distinct(coalitions: &[Coalition]) -> Vec<Coalition> {
    let mut v = coalitions.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

/// The `⊆`-minimal members, sorted by bit pattern.
pub fn minimal_elements(coalitions: &[Coalition]) -> Vec<Coalition> {
    let distinct = sorted_distinct(coalitions);
    distinct
        .iter()
        .copied()
        .filter(|&c| !distinct.iter().any(|&d| d != c && d.is_subset(c)))
        .collect()
}

/// The `⊆`-maximal members, sorted by bit pattern.
pub fn maximal_elements(coalitions: &[Coalition]) -> Vec<Coalition> {
    let distinct = sorted_distinct(coalitions);
    distinct
        .iter()
        .copied()
        .filter(|&c| !distinct.iter().any(|&d| d != c && c.is_subset(d)))
        .collect()
}

fn expect_kind(rep: &GameRep, kind: RepKind) -> Result<()> {
    if rep.kind() == kind {
        Ok(())
    } else {
        Err(Error::WrongKind {
            expected: kind.as_str(),
            actual: rep.kind(),
        })
    }
}

/// Minimal winning coalitions of a game given by its complete losing list.
pub fn wm_from_l(rep: &GameRep) -> Result<Vec<Coalition>> {
    expect_kind(rep, RepKind::L)?;
    let grand = rep.grand();
    if !rep.lists(Coalition::EMPTY) || rep.lists(grand) {
        return Err(Error::InvalidGame(
            "a losing list must contain the empty coalition and not the grand one".into(),
        ));
    }
    let losing: HashSet<Coalition> = rep.coalitions().iter().copied().collect();
    let mut out: Vec<Coalition> = losing
        .iter()
        .flat_map(|&l| (grand - l).iter().map(move |p| l.with(p)))
        .filter(|cand| !losing.contains(cand))
        .filter(|&cand| cand.iter().all(|q| losing.contains(&cand.without(q))))
        .collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Maximal losing coalitions of a game given by its complete winning list.
pub fn lm_from_w(rep: &GameRep) -> Result<Vec<Coalition>> {
    expect_kind(rep, RepKind::W)?;
    let grand = rep.grand();
    if rep.lists(Coalition::EMPTY) || !rep.lists(grand) {
        return Err(Error::InvalidGame(
            "a winning list must contain the grand coalition and not the empty one".into(),
        ));
    }
    let winning: HashSet<Coalition> = rep.coalitions().iter().copied().collect();
    let mut out: Vec<Coalition> = winning
        .iter()
        .flat_map(|&w| w.iter().map(move |p| w.without(p)))
        .filter(|cand| !winning.contains(cand))
        .filter(|&cand| {
            (grand - cand)
                .iter()
                .all(|q| winning.contains(&cand.with(q)))
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// [`expand_with_cap`] at the default oracle cap.
pub fn expand(rep: &GameRep) -> Result<GameRep> {
    expand_with_cap(rep, DEFAULT_ORACLE_CAP)
}

/// Complete explicit list: `Wm -> W`, `LM -> L`, `W -> L`, `L -> W`.
pub fn expand_with_cap(rep: &GameRep, cap: usize) -> Result<GameRep> {
    let n = rep.n();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "explicit expansion",
            size: n,
            cap,
        });
    }
    let (target, keep_winning) = match rep.kind() {
        RepKind::Wm | RepKind::L => (RepKind::W, true),
        RepKind::LM | RepKind::W => (RepKind::L, false),
    };
    let list = rep
        .grand()
        .subsets()
        .filter(|&s| rep.wins(s) == keep_winning)
        .collect();
    GameRep::new(n, target, list)
}

/// Converts `rep` to the `target` representation, expanding through the
/// explicit lists when no direct route exists.
pub fn convert(rep: &GameRep, target: RepKind, cap: usize) -> Result<GameRep> {
    use RepKind::*;
    let n = rep.n();
    let list = match (rep.kind(), target) {
        (a, b) if a == b => sorted_distinct(rep.coalitions()),
        (W, Wm) => minimal_elements(rep.coalitions()),
        (L, LM) => maximal_elements(rep.coalitions()),
        (L, Wm) => wm_from_l(rep)?,
        (W, LM) => lm_from_w(rep)?,
        (Wm, W) | (LM, L) | (W, L) | (L, W) => {
            return expand_with_cap(rep, cap);
        }
        (Wm, L) | (Wm, LM) | (LM, W) | (LM, Wm) => {
            let explicit = expand_with_cap(rep, cap)?;
            return convert(&explicit, target, cap);
        }
        (W, W) | (L, L) | (Wm, Wm) | (LM, LM) => unreachable!(),
    };
    GameRep::new(n, target, list)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(players: &[usize]) -> Coalition {
        Coalition::from_players(players.iter().copied())
    }

    fn cs(sets: &[&[usize]]) -> Vec<Coalition> {
        sets.iter().map(|s| c(s)).collect()
    }

    /// Exhaustive minimal winning coalitions of the game whose winning
    /// predicate is `wins`, straight from the definition.
    fn oracle_minimal_winning(n: usize, wins: impl Fn(Coalition) -> bool) -> Vec<Coalition> {
        Coalition::full(n)
            .subsets()
            .filter(|&s| wins(s) && s.iter().all(|p| !wins(s.without(p))))
            .collect()
    }

    fn oracle_maximal_losing(n: usize, wins: impl Fn(Coalition) -> bool) -> Vec<Coalition> {
        let grand = Coalition::full(n);
        grand
            .subsets()
            .filter(|&s| !wins(s) && (grand - s).iter().all(|p| wins(s.with(p))))
            .collect()
    }

    #[test]
    fn minimal_and_maximal_examples() {
        assert_eq!(
            minimal_elements(&cs(&[&[0], &[0, 1], &[1]])),
            cs(&[&[0], &[1]])
        );
        assert_eq!(minimal_elements(&[]), vec![]);
        assert_eq!(minimal_elements(&cs(&[&[0, 1, 2]])), cs(&[&[0, 1, 2]]));
        assert_eq!(
            maximal_elements(&cs(&[&[0], &[0, 1], &[1]])),
            cs(&[&[0, 1]])
        );
        assert_eq!(maximal_elements(&[]), vec![]);
        assert_eq!(maximal_elements(&cs(&[&[0], &[1]])), cs(&[&[0], &[1]]));
    }

    #[test]
    fn wm_from_l_examples() {
        let l = |n, sets: &[&[usize]]| GameRep::new(n, RepKind::L, cs(sets)).unwrap();
        assert_eq!(
            wm_from_l(&l(2, &[&[], &[0], &[1]])).unwrap(),
            cs(&[&[0, 1]])
        );

        let rep = l(2, &[&[], &[1]]);
        let expected = oracle_minimal_winning(2, |s| !rep.lists(s));
        assert_eq!(expected, cs(&[&[0]]));
        assert_eq!(wm_from_l(&rep).unwrap(), expected);

        let rep = l(3, &[&[], &[0], &[1], &[2], &[0, 1]]);
        let expected = oracle_minimal_winning(3, |s| !rep.lists(s));
        assert_eq!(expected, cs(&[&[0, 2], &[1, 2]]));
        assert_eq!(wm_from_l(&rep).unwrap(), expected);
    }

    #[test]
    fn lm_from_w_examples() {
        let w = |n, sets: &[&[usize]]| GameRep::new(n, RepKind::W, cs(sets)).unwrap();
        assert_eq!(lm_from_w(&w(2, &[&[0, 1]])).unwrap(), cs(&[&[0], &[1]]));

        let rep = w(2, &[&[0], &[0, 1]]);
        let expected = oracle_maximal_losing(2, |s| rep.lists(s));
        assert_eq!(expected, cs(&[&[1]]));
        assert_eq!(lm_from_w(&rep).unwrap(), expected);

        let rep = w(3, &[&[0, 1], &[0, 2], &[1, 2], &[0, 1, 2]]);
        let expected = oracle_maximal_losing(3, |s| rep.lists(s));
        assert_eq!(expected, cs(&[&[0], &[1], &[2]]));
        assert_eq!(lm_from_w(&rep).unwrap(), expected);
    }

    #[test]
    fn cross_conversions_reject_wrong_input() {
        let wm = GameRep::new(2, RepKind::Wm, cs(&[&[0]])).unwrap();
        assert!(matches!(wm_from_l(&wm), Err(Error::WrongKind { .. })));
        let bad_l = GameRep::new(2, RepKind::L, cs(&[&[0]])).unwrap();
        assert!(matches!(wm_from_l(&bad_l), Err(Error::InvalidGame(_))));
        let bad_w = GameRep::new(2, RepKind::W, cs(&[&[0]])).unwrap();
        assert!(matches!(lm_from_w(&bad_w), Err(Error::InvalidGame(_))));
    }

    #[test]
    fn expand_examples() {
        let rep = GameRep::new(2, RepKind::Wm, cs(&[&[0]])).unwrap();
        let w = expand(&rep).unwrap();
        assert_eq!(w.kind(), RepKind::W);
        assert_eq!(w.coalitions(), cs(&[&[0], &[0, 1]]).as_slice());

        let example = GameRep::new(4, RepKind::Wm, cs(&[&[0, 2], &[1, 3]])).unwrap();
        let w = expand(&example).unwrap();
        let expected: Vec<Coalition> = Coalition::full(4)
            .subsets()
            .filter(|s| c(&[0, 2]).is_subset(*s) || c(&[1, 3]).is_subset(*s))
            .collect();
        assert_eq!(expected.len(), 7);
        assert_eq!(w.coalitions(), expected.as_slice());

        let l = expand(&w).unwrap();
        assert_eq!(l.kind(), RepKind::L);
        assert_eq!(l.coalitions().len() + w.coalitions().len(), 16);
        assert!(l.coalitions().iter().all(|s| !w.lists(*s)));
    }

    #[test]
    fn expand_respects_cap() {
        let rep = GameRep::new(30, RepKind::Wm, cs(&[&[0]])).unwrap();
        assert!(matches!(expand(&rep), Err(Error::CapExceeded { .. })));
        assert!(expand_with_cap(&GameRep::new(3, RepKind::Wm, cs(&[&[0]])).unwrap(), 2).is_err());
    }

    #[test]
    fn convert_all_routes_on_example() {
        let example = GameRep::new(4, RepKind::Wm, cs(&[&[0, 2], &[1, 3]])).unwrap();
        for from in RepKind::ALL {
            let start = convert(&example, from, 20).unwrap();
            for to in RepKind::ALL {
                let out = convert(&start, to, 20).unwrap();
                assert_eq!(out.kind(), to);
                for s in Coalition::full(4).subsets() {
                    assert_eq!(out.wins(s), example.wins(s), "{from} -> {to} on {s}");
                }
            }
        }
        let lm = convert(&example, RepKind::LM, 20).unwrap();
        assert_eq!(
            lm.coalitions(),
            cs(&[&[0, 1], &[1, 2], &[0, 3], &[2, 3]]).as_slice()
        );
    }
}
