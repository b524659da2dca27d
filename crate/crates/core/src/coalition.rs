//! Players and coalitions.
//!
//! Players are 0-based indices. A coalition is a bit set over at most
//! [`MAX_PLAYERS`] players; the derived ordering is the numeric order of the
//! underlying bit pattern, which is the canonical order used for every sorted
//! output in this crate.

use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Sub};

use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest supported player count.
pub const MAX_PLAYERS: usize = 64;

/// A player index in `0..n`.
pub type Player = usize;

#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coalition(u64);

impl Coalition {
    pub const EMPTY: Coalition = Coalition(0);

    pub const fn from_bits(bits: u64) -> Self {
        Coalition(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The grand coalition `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(
            n <= MAX_PLAYERS,
            "at most {MAX_PLAYERS} players are supported"
        );
        if n == MAX_PLAYERS {
            Coalition(u64::MAX)
        } else {
            Coalition((1u64 << n) - 1)
        }
    }

    pub fn singleton(p: Player) -> Self {
        assert!(p < MAX_PLAYERS, "player {p} out of range");
        Coalition(1u64 << p)
    }

    /// Builds a coalition from player ids; `None` if any id is `>= MAX_PLAYERS`.
    pub fn try_from_players<I: IntoIterator<Item = Player>>(players: I) -> Option<Self> {
        let mut bits = 0u64;
        for p in players {
            if p >= MAX_PLAYERS {
                return None;
            }
            bits |= 1u64 << p;
        }
        Some(Coalition(bits))
    }

    /// Panics on ids `>= MAX_PLAYERS`; use [`Coalition::try_from_players`] for
    /// untrusted input.
    pub fn from_players<I: IntoIterator<Item = Player>>(players: I) -> Self {
        Self::try_from_players(players).expect("player id out of range")
    }

    pub fn contains(self, p: Player) -> bool {
        p < MAX_PLAYERS && self.0 >> p & 1 == 1
    }

    pub fn with(self, p: Player) -> Self {
        self | Coalition::singleton(p)
    }

    pub fn without(self, p: Player) -> Self {
        self - Coalition::singleton(p)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: Coalition) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_superset(self, other: Coalition) -> bool {
        other.is_subset(self)
    }

    /// Highest player id in the coalition.
    pub fn max_player(self) -> Option<Player> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros() as usize)
        }
    }

    /// True when every member is `< n`.
    pub fn fits(self, n: usize) -> bool {
        self.is_subset(Coalition::full(n.min(MAX_PLAYERS)))
    }

    /// Members in ascending order.
    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<Player> {
        self.iter().collect()
    }

    /// All subsets in ascending bit-pattern order, `EMPTY` first and `self` last.
    pub fn subsets(self) -> Subsets {
        Subsets {
            set: self.0,
            next: Some(0),
        }
    }
}

impl BitOr for Coalition {
    type Output = Coalition;
    fn bitor(self, rhs: Coalition) -> Coalition {
        Coalition(self.0 | rhs.0)
    }
}

impl BitAnd for Coalition {
    type Output = Coalition;
    fn bitand(self, rhs: Coalition) -> Coalition {
        Coalition(self.0 & rhs.0)
    }
}

impl BitXor for Coalition {
    type Output = Coalition;
    fn bitxor(self, rhs: Coalition) -> Coalition {
        Coalition(self.0 ^ rhs.0)
    }
}

impl Sub for Coalition {
    type Output = Coalition;
    fn sub(self, rhs: Coalition) -> Coalition {
        Coalition(self.0 & !rhs.0)
    }
}

impl FromIterator<Player> for Coalition {
    fn from_iter<I: IntoIterator<Item = Player>>(iter: I) -> Self {
        Coalition::from_players(iter)
    }
}

impl IntoIterator for Coalition {
    type Item = Player;
    type IntoIter = Members;
    fn into_iter(self) -> Members {
        self.iter()
    }
}

pub struct Members(u64);

impl Iterator for Members {
    type Item = Player;

    fn next(&mut self) -> Option<Player> {
        if self.0 == 0 {
            return None;
        }
        let p = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(p)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Members {}

/// Submask enumeration (carry-rippler).
pub struct Subsets {
    set: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = Coalition;

    fn next(&mut self) -> Option<Coalition> {
        let cur = self.next?;
        self.next = if cur == self.set {
            None
        } else {
            Some(cur.wrapping_sub(self.set) & self.set)
        };
        Some(Coalition(cur))
    }
}

impl fmt::Debug for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for Coalition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for p in self.iter() {
            seq.serialize_element(&p)?;
        }
        seq.end()
    }
}

/// Accepts strictly ascending arrays of player ids only.
impl<'de> Deserialize<'de> for Coalition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct CoalitionVisitor;

        impl<'de> Visitor<'de> for CoalitionVisitor {
            type Value = Coalition;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(
                    f,
                    "a strictly ascending array of player ids below {MAX_PLAYERS}"
                )
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Coalition, A::Error> {
                let mut bits = 0u64;
                let mut last: Option<usize> = None;
                while let Some(p) = seq.next_element::<usize>()? {
                    if p >= MAX_PLAYERS {
                        return Err(de::Error::custom(format!(
                            "player id {p} exceeds the supported maximum {}",
                            MAX_PLAYERS - 1
                        )));
                    }
                    if last.is_some_and(|q| q >= p) {
                        return Err(de::Error::custom(format!(
                            "player ids must be strictly ascending (found {p} after {})",
                            last.unwrap()
                        )));
                    }
                    last = Some(p);
                    bits |= 1u64 << p;
                }
                Ok(Coalition(bits))
            }
        }

        deserializer.deserialize_seq(CoalitionVisitor)
    }
}

/// Number of coalitions in `coalitions` that contain `p`.
pub fn multiplicity(coalitions: &[Coalition], p: Player) -> usize {
    coalitions.iter().filter(|c| c.contains(p)).count()
}

/// Per-player occurrence counts of a multiset of coalitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Profile(Vec<u32>);

impl Profile {
    pub fn zero(n: usize) -> Self {
        Profile(vec![0; n])
    }

    pub fn of(n: usize, coalitions: &[Coalition]) -> Self {
        let mut profile = Profile::zero(n);
        for &c in coalitions {
            profile.add(c);
        }
        profile
    }

    pub fn add(&mut self, c: Coalition) {
        for p in c {
            self.0[p] += 1;
        }
    }

    pub fn remove(&mut self, c: Coalition) {
        for p in c {
            self.0[p] -= 1;
        }
    }

    pub fn count(&self, p: Player) -> u32 {
        self.0[p]
    }

    pub fn counts(&self) -> &[u32] {
        &self.0
    }

    /// Pointwise `self <= other`.
    pub fn le(&self, other: &Profile) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Players whose count is at least `k`.
    pub fn at_least(&self, k: u32) -> Coalition {
        self.0
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c >= k)
            .map(|(p, _)| p)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(players: &[usize]) -> Coalition {
        Coalition::from_players(players.iter().copied())
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(multiplicity(&[c(&[0, 2]), c(&[1, 3])], 0), 1);
        assert_eq!(multiplicity(&[], 0), 0);
        assert_eq!(multiplicity(&[c(&[0]), c(&[0]), c(&[0, 1])], 0), 3);
    }

    #[test]
    fn iteration_is_ascending() {
        assert_eq!(c(&[5, 1, 63, 0]).to_vec(), vec![0, 1, 5, 63]);
        assert_eq!(Coalition::full(64).len(), 64);
        assert_eq!(c(&[3, 9]).max_player(), Some(9));
        assert_eq!(Coalition::EMPTY.max_player(), None);
    }

    #[test]
    fn subsets_of_mask() {
        let subs: Vec<u64> = Coalition::from_bits(0x55)
            .subsets()
            .map(Coalition::bits)
            .collect();
        assert_eq!(
            subs,
            [0, 1, 4, 5, 16, 17, 20, 21, 64, 65, 68, 69, 80, 81, 84, 85]
        );
        assert_eq!(Coalition::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn json_grammar() {
        let parsed: Coalition = serde_json::from_str("[0, 2, 5]").unwrap();
        assert_eq!(parsed, c(&[0, 2, 5]));
        assert_eq!(serde_json::to_string(&parsed).unwrap(), "[0,2,5]");
        assert!(serde_json::from_str::<Coalition>("[2, 1]").is_err());
        assert!(serde_json::from_str::<Coalition>("[1, 1]").is_err());
        assert!(serde_json::from_str::<Coalition>("[64]").is_err());
        assert_eq!(
            serde_json::from_str::<Coalition>("[]").unwrap(),
            Coalition::EMPTY
        );
    }

    #[test]
    fn profile_order() {
        let a = Profile::of(3, &[c(&[0]), c(&[0, 1])]);
        let b = Profile::of(3, &[c(&[0, 1]), c(&[0, 1, 2])]);
        assert!(a.le(&b));
        assert!(!b.le(&a));
        assert_eq!(b.at_least(2), c(&[0, 1]));
    }
}
