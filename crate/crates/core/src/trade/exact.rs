//! Exact solvers for the two hard two-coalition cells.

use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::game::{Classification, GameRep, RepKind};
use crate::reductions::set_splitting::{
    build_set_splitting, reconstruct_trade, solve_set_splitting,
};

use super::{check_given, Limits, TradeAnswer};

/// `(LM, L)`: reduce to set splitting over `s1 ∪ s2`, solve by exhaustive
/// bipartition search and rebuild the winning pair from the split.
pub fn decide_lm_l_exact(
    rep: &GameRep,
    s1: Coalition,
    s2: Coalition,
    limits: &Limits,
) -> Result<TradeAnswer> {
    let instance = build_set_splitting(rep, s1, s2)?;
    let answer = match solve_set_splitting(&instance, limits.brute_force_cap)? {
        Some((u1, u2)) => {
            let (s3, s4) = reconstruct_trade(s1, s2, u1, u2);
            TradeAnswer::yes(&[s1, s2], vec![s3, s4], false)
        }
        None => TradeAnswer::no(),
    };
    Ok(answer)
}

/// `(Wm, W)`: any losing pair with the counts of `{s1, s2}` keeps `s1 ∩ s2`
/// in both members and splits the symmetric difference between them, so it
/// suffices to try every split of the symmetric difference.
pub fn decide_wm_w_exact(
    rep: &GameRep,
    s1: Coalition,
    s2: Coalition,
    limits: &Limits,
) -> Result<TradeAnswer> {
    if rep.kind() != RepKind::Wm {
        return Err(Error::WrongKind {
            expected: "Wm",
            actual: rep.kind(),
        });
    }
    check_given(rep, &[s1, s2], Classification::Winning)?;
    let both = s1 & s2;
    let diff = (s1 | s2) - both;
    if diff.len() > limits.brute_force_cap {
        return Err(Error::CapExceeded {
            what: "symmetric difference scan",
            size: diff.len(),
            cap: limits.brute_force_cap,
        });
    }
    let found = diff.subsets().find_map(|part| {
        let s3 = both | part;
        let s4 = both | (diff - part);
        (!rep.wins(s3) && !rep.wins(s4)).then_some((s3, s4))
    });
    Ok(match found {
        Some((s3, s4)) => TradeAnswer::yes(&[s1, s2], vec![s3, s4], true),
        None => TradeAnswer::no(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalition::Profile;
    use crate::trade::verify;

    fn c(players: &[usize]) -> Coalition {
        Coalition::from_players(players.iter().copied())
    }

    fn game(n: usize, kind: RepKind, sets: &[&[usize]]) -> GameRep {
        GameRep::new(n, kind, sets.iter().map(|s| c(s)).collect()).unwrap()
    }

    fn brute_partners(
        rep: &GameRep,
        s1: Coalition,
        s2: Coalition,
        want: bool,
    ) -> Vec<(Coalition, Coalition)> {
        let all: Vec<Coalition> = rep
            .grand()
            .subsets()
            .filter(|&s| rep.wins(s) == want)
            .collect();
        let target = Profile::of(rep.n(), &[s1, s2]);
        let mut out = Vec::new();
        for (i, &a) in all.iter().enumerate() {
            for &b in &all[i..] {
                if Profile::of(rep.n(), &[a, b]) == target {
                    out.push((a, b));
                }
            }
        }
        out
    }

    #[test]
    fn lm_l_examples() {
        let rep = game(4, RepKind::LM, &[&[0, 1], &[2, 3]]);
        let oracle = brute_partners(&rep, c(&[0, 1]), c(&[2, 3]), true);
        assert_eq!(
            oracle,
            vec![(c(&[0, 2]), c(&[1, 3])), (c(&[1, 2]), c(&[0, 3]))]
        );
        let ans = decide_lm_l_exact(&rep, c(&[0, 1]), c(&[2, 3]), &Limits::default()).unwrap();
        let w = ans.witness.clone().unwrap();
        let pair = (w[0].min(w[1]), w[0].max(w[1]));
        assert!(oracle.contains(&pair), "{pair:?}");
        assert!(verify(&rep, ans.application.as_ref().unwrap()));

        let ans = decide_lm_l_exact(&rep, c(&[]), c(&[]), &Limits::default()).unwrap();
        assert!(!ans.is_yes());
    }

    #[test]
    fn wm_w_examples() {
        let rep = game(4, RepKind::Wm, &[&[0, 2], &[1, 3]]);
        let ans = decide_wm_w_exact(&rep, c(&[0, 2]), c(&[1, 3]), &Limits::default()).unwrap();
        assert_eq!(ans.witness, Some(vec![c(&[0, 1]), c(&[2, 3])]));
        assert!(verify(&rep, ans.application.as_ref().unwrap()));

        let rep = game(1, RepKind::Wm, &[&[0]]);
        assert!(
            !decide_wm_w_exact(&rep, c(&[0]), c(&[0]), &Limits::default())
                .unwrap()
                .is_yes()
        );

        let rep = game(3, RepKind::Wm, &[&[0], &[1, 2]]);
        assert!(brute_partners(&rep, c(&[0]), c(&[1, 2]), false).is_empty());
        assert!(
            !decide_wm_w_exact(&rep, c(&[0]), c(&[1, 2]), &Limits::default())
                .unwrap()
                .is_yes()
        );
    }

    #[test]
    fn wm_w_guards() {
        let rep = game(4, RepKind::LM, &[&[0, 1], &[2, 3]]);
        assert!(matches!(
            decide_wm_w_exact(&rep, c(&[0, 2]), c(&[1, 3]), &Limits::default()),
            Err(Error::WrongKind { .. })
        ));
        let rep = game(4, RepKind::Wm, &[&[0, 2], &[1, 3]]);
        let tight = Limits {
            brute_force_cap: 3,
            ..Limits::default()
        };
        assert!(matches!(
            decide_wm_w_exact(&rep, c(&[0, 2]), c(&[1, 3]), &tight),
            Err(Error::CapExceeded { .. })
        ));
    }
}
