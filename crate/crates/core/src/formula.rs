//! Closed-form P/N classification for the restricted three-pile game
//! (merge threshold 2).
//!
//! Every triple with nim-sum zero falls into one of six ordered sets,
//! depending on how `x + y` compares to `z`:
//!
//! | set   | sum relation      | extra clause      | outcome |
//! |-------|-------------------|-------------------|---------|
//! | `P01` | `x + y = z`       | `min(x, y) < 2`   | P       |
//! | `N01` | `x + y = z`       | `x, y >= 2`       | N       |
//! | `N02` | `x + y = z + 2`   |                   | N       |
//! | `P02` | `x + y > z + 2`   |                   | P       |
//!
//! (all with `x, y <= z`). The N-sets are repaired into P-positions by
//! shifting the `z` pile by one: up when `x + y` is even, down when odd.
//! The shifted triples form `P11` (from `N01`) and `P12` (from `N02`).
//! A triple is a P-position exactly when some rearrangement of it lies in
//! `P01`, `P02`, `P11` or `P12`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::position::{Outcome, Position};

/// How `x + y` compares with `z` for a nim-sum-zero triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DigitRelation {
    /// `x + y = z`: no bit is set in both `x` and `y`.
    EqualSum,
    /// `x + y = z + 2`: only bit 0 is set in both.
    SumPlusTwo,
    /// `x + y > z + 2`: bit `witness_bit >= 1` is set in `x` and `y` and
    /// clear in `z`.
    SumExceedsTwo { witness_bit: u32 },
    /// The nim-sum is not zero.
    NotApplicable,
}

/// Classifies the sum relation of a nim-sum-zero triple from its bits.
///
/// With `x ^ y ^ z = 0` we have `x + y = z + 2 * (x & y)`, so the shared
/// bits of `x` and `y` decide everything.
pub fn digit_relation(x: u64, y: u64, z: u64) -> DigitRelation {
    if x ^ y ^ z != 0 {
        return DigitRelation::NotApplicable;
    }
    match x & y {
        0 => DigitRelation::EqualSum,
        1 => DigitRelation::SumPlusTwo,
        carry => DigitRelation::SumExceedsTwo {
            witness_bit: (carry & !1).trailing_zeros(),
        },
    }
}

fn ordered(x: u64, y: u64, z: u64) -> bool {
    x <= z && y <= z
}

pub fn in_p01(x: u64, y: u64, z: u64) -> bool {
    ordered(x, y, z) && digit_relation(x, y, z) == DigitRelation::EqualSum && x.min(y) < 2
}

pub fn in_p02(x: u64, y: u64, z: u64) -> bool {
    ordered(x, y, z) && matches!(digit_relation(x, y, z), DigitRelation::SumExceedsTwo { .. })
}

pub fn in_n01(x: u64, y: u64, z: u64) -> bool {
    ordered(x, y, z) && digit_relation(x, y, z) == DigitRelation::EqualSum && x >= 2 && y >= 2
}

pub fn in_n02(x: u64, y: u64, z: u64) -> bool {
    ordered(x, y, z) && digit_relation(x, y, z) == DigitRelation::SumPlusTwo
}

/// The unshifted `z` an `x, y, z` candidate would have come from.
fn unshifted(x: u64, y: u64, z: u64) -> Option<u64> {
    if (x + y).is_multiple_of(2) {
        z.checked_sub(1)
    } else {
        z.checked_add(1)
    }
}

pub fn in_p11(x: u64, y: u64, z: u64) -> bool {
    unshifted(x, y, z).is_some_and(|w| in_n01(x, y, w))
}

pub fn in_p12(x: u64, y: u64, z: u64) -> bool {
    unshifted(x, y, z).is_some_and(|w| in_n02(x, y, w))
}

/// The six ordered sets a triple may belong to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Subset {
    P01,
    P02,
    P11,
    P12,
    N01,
    N02,
}

impl Subset {
    /// Report order: P-sets before N-sets.
    pub const ALL: [Subset; 6] = [
        Subset::P01,
        Subset::P02,
        Subset::P11,
        Subset::P12,
        Subset::N01,
        Subset::N02,
    ];

    pub fn contains(self, x: u64, y: u64, z: u64) -> bool {
        match self {
            Subset::P01 => in_p01(x, y, z),
            Subset::P02 => in_p02(x, y, z),
            Subset::P11 => in_p11(x, y, z),
            Subset::P12 => in_p12(x, y, z),
            Subset::N01 => in_n01(x, y, z),
            Subset::N02 => in_n02(x, y, z),
        }
    }

    pub fn is_p(self) -> bool {
        matches!(self, Subset::P01 | Subset::P02 | Subset::P11 | Subset::P12)
    }

    /// Members of `P01` or `P02` (nim-sum zero).
    pub fn is_p0(self) -> bool {
        matches!(self, Subset::P01 | Subset::P02)
    }

    /// Members of `P11` or `P12` (nim-sum one).
    pub fn is_p1(self) -> bool {
        matches!(self, Subset::P11 | Subset::P12)
    }

    /// Source set of the shifted sets.
    pub fn shifted_from(self) -> Option<Subset> {
        match self {
            Subset::P11 => Some(Subset::N01),
            Subset::P12 => Some(Subset::N02),
            _ => None,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Subset::P01 => "P_{0,1}",
            Subset::P02 => "P_{0,2}",
            Subset::P11 => "P_{1,1}",
            Subset::P12 => "P_{1,2}",
            Subset::N01 => "N_{0,1}",
            Subset::N02 => "N_{0,2}",
        }
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A matched set together with the ordering that matched.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Membership {
    pub subset: Subset,
    /// Index into the canonical triple of the pile playing the `z` role.
    pub orientation: usize,
    /// The triple as `(x, y, z)` in the matching order.
    pub ordered: [u32; 3],
    /// For `P11`/`P12`: the `N01`/`N02` triple `(x, y, w)` that was shifted.
    pub witness: Option<[u64; 3]>,
}

impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.subset)?;
        if let (Some([x, y, w]), Some(src)) = (self.witness, self.subset.shifted_from()) {
            write!(f, " via witness ({x},{y},{w}) ∈ {src}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("the closed-form classifier needs exactly 3 piles, got {0}")]
pub struct ArityError(pub usize);

/// The three ways to put one pile of the canonical triple in the `z` role,
/// largest first. The `x, y` roles keep canonical order.
fn orientations(t: [u32; 3]) -> [(usize, [u32; 3]); 3] {
    let [a, b, c] = t;
    [(2, [a, b, c]), (1, [a, c, b]), (0, [b, c, a])]
}

fn witness_of(subset: Subset, [x, y, z]: [u32; 3]) -> Option<[u64; 3]> {
    subset.shifted_from()?;
    let (x, y, z) = (u64::from(x), u64::from(y), u64::from(z));
    unshifted(x, y, z).map(|w| [x, y, w])
}

fn triple(p: &Position) -> Result<[u32; 3], ArityError> {
    p.as_triple().ok_or(ArityError(p.pile_count()))
}

/// First matching set in report order, or `None` when the triple is in
/// none of them.
pub fn membership(p: &Position) -> Result<Option<Membership>, ArityError> {
    let t = triple(p)?;
    Ok(Subset::ALL
        .iter()
        .find_map(|&s| match_subset(s, t)))
}

/// Every set the triple belongs to, each with its first matching
/// orientation. More than one entry means the sets overlap.
pub fn all_memberships(p: &Position) -> Result<Vec<Membership>, ArityError> {
    let t = triple(p)?;
    Ok(Subset::ALL.iter().filter_map(|&s| match_subset(s, t)).collect())
}

fn match_subset(subset: Subset, t: [u32; 3]) -> Option<Membership> {
    orientations(t).into_iter().find_map(|(orientation, o)| {
        let [x, y, z] = o.map(u64::from);
        subset.contains(x, y, z).then(|| Membership {
            subset,
            orientation,
            ordered: o,
            witness: witness_of(subset, o),
        })
    })
}

/// P/N outcome of a restricted three-pile position, in constant time.
pub fn classify(p: &Position) -> Result<Outcome, ArityError> {
    Ok(match membership(p)? {
        Some(m) if m.subset.is_p() => Outcome::P,
        _ => Outcome::N,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pos(p: [u32; 3]) -> Position {
        Position::new(p)
    }

    #[test]
    fn digit_relation_examples() {
        assert_eq!(digit_relation(2, 4, 6), DigitRelation::EqualSum);
        assert_eq!(digit_relation(3, 5, 6), DigitRelation::SumPlusTwo);
        assert_eq!(
            digit_relation(6, 10, 12),
            DigitRelation::SumExceedsTwo { witness_bit: 1 }
        );
        assert_eq!(digit_relation(1, 2, 2), DigitRelation::NotApplicable);
        // Witness is the lowest shared bit above bit 0.
        assert_eq!(
            digit_relation(13, 13, 0),
            DigitRelation::SumExceedsTwo { witness_bit: 2 }
        );
    }

    #[test]
    fn base_set_examples() {
        assert!(in_n01(2, 4, 6));
        assert!(!in_n01(1, 2, 3));
        assert!(in_p01(1, 2, 3));
        assert!(in_p01(0, 7, 7));
        assert!(in_n02(3, 5, 6));
        assert!(!in_n02(3, 3, 4));
        assert!(in_p02(6, 10, 12));
        assert!(!in_p02(2, 4, 6));
        // Ordering clause: z must be the largest.
        assert!(!in_p01(3, 2, 1));
    }

    #[test]
    fn shifted_set_examples() {
        assert!(in_p11(2, 4, 7));
        assert!(in_p11(2, 5, 6));
        assert!(in_p12(3, 5, 7));
        assert!(!in_p11(2, 4, 6));
        // Even branch with w = 0 has nothing to undo.
        assert!(!in_p11(0, 0, 0));
    }

    #[test]
    fn membership_examples() {
        let m = membership(&pos([1, 2, 3])).unwrap().unwrap();
        assert_eq!(m.subset, Subset::P01);
        assert_eq!(m.orientation, 2);
        assert_eq!(membership(&pos([2, 4, 6])).unwrap().unwrap().subset, Subset::N01);
        assert_eq!(membership(&pos([1, 1, 1])).unwrap(), None);

        let m = membership(&pos([7, 5, 3])).unwrap().unwrap();
        assert_eq!(m.subset, Subset::P12);
        assert_eq!(m.witness, Some([3, 5, 6]));
        assert_eq!(m.to_string(), "P_{1,2} via witness (3,5,6) ∈ N_{0,2}");
    }

    #[test]
    fn membership_rotates_z_role() {
        // (0,k,k) matches with either k pile in the z role; the largest
        // index is tried first.
        let m = membership(&pos([7, 0, 7])).unwrap().unwrap();
        assert_eq!((m.subset, m.orientation, m.ordered), (Subset::P01, 2, [0, 7, 7]));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&pos([0, 0, 0])), Ok(Outcome::P));
        assert_eq!(classify(&pos([3, 5, 6])), Ok(Outcome::N));
        assert_eq!(classify(&pos([3, 5, 7])), Ok(Outcome::P));
        assert_eq!(classify(&pos([0, 7, 7])), Ok(Outcome::P));
        assert_eq!(classify(&pos([1, 1, 1])), Ok(Outcome::N));
        assert_eq!(
            classify(&Position::new([1, 2])),
            Err(ArityError(2))
        );
    }

    #[test]
    fn handles_extreme_piles() {
        let m = u32::MAX;
        assert_eq!(classify(&pos([0, m, m])), Ok(Outcome::P));
        // Shifting up from the maximum pile must not overflow.
        let _ = classify(&pos([m, m, m]));
    }
}
