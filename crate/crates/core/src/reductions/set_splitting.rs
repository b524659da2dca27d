//! Translation of the `(LM, L)` two-coalition trade problem into set
//! splitting, and a brute-force set splitting solver.
//!
//! For losing `s1, s2` let `U = s1 ∪ s2` and, for every maximal losing `L`
//! with `s1 ∩ s2 ⊆ L`, put `Z = U \ L` into the family. A bipartition
//! `(U1, U2)` of `U` splitting every `Z` yields the winning pair
//! `U1 ∪ (s1 ∩ s2)`, `U2 ∪ (s1 ∩ s2)`, and every winning pair arises this way.

use serde::{Deserialize, Serialize};

use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::game::{Classification, GameRep, RepKind};
use crate::trade::check_given;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetSplittingInstance {
    pub universe: Coalition,
    pub family: Vec<Coalition>,
    /// How many members of `family` must be split.
    pub k: usize,
}

/// A member is split when it meets both sides.
pub fn splits(part: Coalition, rest: Coalition, member: Coalition) -> bool {
    !(member & part).is_empty() && !(member & rest).is_empty()
}

pub fn build_set_splitting(
    rep: &GameRep,
    s1: Coalition,
    s2: Coalition,
) -> Result<SetSplittingInstance> {
    if rep.kind() != RepKind::LM {
        return Err(Error::WrongKind {
            expected: "LM",
            actual: rep.kind(),
        });
    }
    check_given(rep, &[s1, s2], Classification::Losing)?;
    let universe = s1 | s2;
    let both = s1 & s2;
    let family: Vec<Coalition> = rep
        .coalitions()
        .iter()
        .filter(|l| both.is_subset(**l))
        .map(|&l| universe - l)
        .collect();
    let k = family.len();
    Ok(SetSplittingInstance {
        universe,
        family,
        k,
    })
}

/// First bipartition `(U1, U2)` of the universe splitting at least `k`
/// members of the family, or `None`.
///
/// The lowest element of the universe is pinned to `U1`, so each of the
/// `2^(|U|-1)` bipartitions is visited once, in ascending order of `U1`.
pub fn solve_set_splitting(
    inst: &SetSplittingInstance,
    cap: usize,
) -> Result<Option<(Coalition, Coalition)>> {
    let universe = inst.universe;
    if let Some(bad) = inst.family.iter().find(|z| !z.is_subset(universe)) {
        return Err(Error::InvalidArgument(format!(
            "family member {bad} is not inside the universe {universe}"
        )));
    }
    if universe.len() > cap {
        return Err(Error::CapExceeded {
            what: "set splitting universe",
            size: universe.len(),
            cap,
        });
    }
    // only members with two or more elements can ever be split
    let splittable: Vec<Coalition> = inst
        .family
        .iter()
        .copied()
        .filter(|z| z.len() >= 2)
        .collect();
    if splittable.len() < inst.k {
        return Ok(None);
    }
    let Some(pinned) = universe.iter().next() else {
        // the empty universe has the single bipartition (∅, ∅)
        return Ok((inst.k == 0).then_some((Coalition::EMPTY, Coalition::EMPTY)));
    };
    let pinned = Coalition::singleton(pinned);
    let free = universe - pinned;
    let must_miss = inst.family.len() - inst.k;
    for extra in free.subsets() {
        let u1 = pinned | extra;
        let u2 = universe - u1;
        let mut missed = inst.family.len() - splittable.len();
        let mut ok = missed <= must_miss;
        for &z in &splittable {
            if !ok {
                break;
            }
            if !splits(u1, u2, z) {
                missed += 1;
                ok = missed <= must_miss;
            }
        }
        if ok {
            return Ok(Some((u1, u2)));
        }
    }
    Ok(None)
}

/// Winning pair rebuilt from a splitting bipartition.
pub fn reconstruct_trade(
    s1: Coalition,
    s2: Coalition,
    u1: Coalition,
    u2: Coalition,
) -> (Coalition, Coalition) {
    let both = s1 & s2;
    (u1 | both, u2 | both)
}
