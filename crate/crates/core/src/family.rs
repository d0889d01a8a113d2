//! Composition families and their membership predicates.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::composition::{pair_view, Composition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("odd-restricted bound must be even and nonnegative, got {0}")]
    OddBound(i64),
    #[error("even-restricted bound must be odd and positive, got {0}")]
    EvenBound(i64),
    #[error(
        "unknown family {0:?}; expected all, arndt:K, oddres:2K, evenres:2K+1, ufixed or vfixed"
    )]
    Unknown(String),
}

/// A named set of compositions, parameterised where needed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    /// Every composition.
    All,
    /// `c[2i-1] > c[2i] + k` for every full pair.
    Arndt(i64),
    /// Odd parts plus even parts up to the (even) bound.
    OddRestricted(u32),
    /// Even parts plus odd parts up to the (odd) bound.
    EvenRestricted(u32),
    /// Fixed points of the U permutation.
    UFixed,
    /// Fixed points of the V permutation.
    VFixed,
}

impl FamilyId {
    pub fn odd_restricted(bound: i64) -> Result<Self, FamilyError> {
        if bound < 0 || bound % 2 != 0 || bound > i64::from(u32::MAX) {
            return Err(FamilyError::OddBound(bound));
        }
        Ok(FamilyId::OddRestricted(bound as u32))
    }

    pub fn even_restricted(bound: i64) -> Result<Self, FamilyError> {
        if bound < 1 || bound % 2 == 0 || bound > i64::from(u32::MAX) {
            return Err(FamilyError::EvenBound(bound));
        }
        Ok(FamilyId::EvenRestricted(bound as u32))
    }

    /// The restricted-part family equinumerous with `Arndt(k)` for `k < 0`.
    pub fn restricted_partner(k: i64) -> Option<Self> {
        match k {
            k if k >= 0 => None,
            k if k % 2 == 0 => Some(FamilyId::OddRestricted((-k) as u32)),
            k => Some(FamilyId::EvenRestricted((-k) as u32)),
        }
    }

    /// Whether `part` may sit at a position of the given parity, where
    /// `odd_position` means a 1-based odd index and `prev` is the part before.
    ///
    /// Membership is this rule applied to every position, so generators use
    /// it for extension while [`is_member`] checks the pair view directly.
    pub fn allows(self, odd_position: bool, prev: u32, part: u32) -> bool {
        match self {
            FamilyId::All => true,
            FamilyId::Arndt(k) => odd_position || i64::from(prev) > i64::from(part) + k,
            FamilyId::OddRestricted(bound) => part % 2 == 1 || part <= bound,
            FamilyId::EvenRestricted(bound) => part.is_multiple_of(2) || part <= bound,
            FamilyId::UFixed => {
                if odd_position {
                    part == 1
                } else {
                    part.is_multiple_of(2)
                }
            }
            FamilyId::VFixed => {
                if odd_position {
                    part == 1
                } else {
                    part % 2 == 1 && part >= 3
                }
            }
        }
    }

    /// Whether the predicate depends on the previous part.
    pub(crate) fn uses_prev(self) -> bool {
        matches!(self, FamilyId::Arndt(_))
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyId::All => write!(f, "all"),
            FamilyId::Arndt(k) => write!(f, "arndt:{k}"),
            FamilyId::OddRestricted(b) => write!(f, "oddres:{b}"),
            FamilyId::EvenRestricted(b) => write!(f, "evenres:{b}"),
            FamilyId::UFixed => write!(f, "ufixed"),
            FamilyId::VFixed => write!(f, "vfixed"),
        }
    }
}

impl FromStr for FamilyId {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let unknown = || FamilyError::Unknown(s.to_string());
        match s {
            "all" => return Ok(FamilyId::All),
            "ufixed" => return Ok(FamilyId::UFixed),
            "vfixed" => return Ok(FamilyId::VFixed),
            _ => {}
        }
        let (name, arg) = s.split_once(':').ok_or_else(unknown)?;
        let value: i64 = arg.trim().parse().map_err(|_| unknown())?;
        match name {
            "arndt" => Ok(FamilyId::Arndt(value)),
            "oddres" => FamilyId::odd_restricted(value),
            "evenres" => FamilyId::even_restricted(value),
            _ => Err(unknown()),
        }
    }
}

/// Membership test read straight off the definitions.
pub fn is_member(c: &Composition, family: FamilyId) -> bool {
    match family {
        FamilyId::All => true,
        FamilyId::Arndt(k) => pair_view(c)
            .pairs()
            .iter()
            // a padded (c_t, 0) pair is vacuously fine
            .all(|&(a, b)| b == 0 || i64::from(a) > i64::from(b) + k),
        FamilyId::OddRestricted(bound) => c.parts().iter().all(|&p| p % 2 == 1 || p <= bound),
        FamilyId::EvenRestricted(bound) => c.parts().iter().all(|&p| p % 2 == 0 || p <= bound),
        FamilyId::UFixed | FamilyId::VFixed => pair_view(c)
            .pairs()
            .iter()
            .all(|&(a, b)| fixed_pair_ok(family, a, b)),
    }
}

/// A padded pair of a U- or V-fixed composition: `(1, even)` for U,
/// `(1, odd >= 3)` for V, and `(1, 0)` at the end for both.
fn fixed_pair_ok(family: FamilyId, a: u32, b: u32) -> bool {
    let second_ok = match family {
        FamilyId::UFixed => b.is_multiple_of(2),
        _ => b == 0 || (b % 2 == 1 && b >= 3),
    };
    a == 1 && second_ok
}

/// Describes the first pair or part that keeps `c` out of `family`.
pub fn membership_violation(c: &Composition, family: FamilyId) -> Option<String> {
    let pairs = pair_view(c);
    match family {
        FamilyId::All => None,
        FamilyId::Arndt(k) => pairs
            .pairs()
            .iter()
            .enumerate()
            .find(|&(_, &(a, b))| b != 0 && i64::from(a) <= i64::from(b) + k)
            .map(|(i, &(a, b))| format!("pair {} is ({a},{b}) but needs {a} > {b} + {k}", i + 1)),
        FamilyId::OddRestricted(bound) => c
            .parts()
            .iter()
            .position(|&p| p % 2 == 0 && p > bound)
            .map(|i| format!("part {} is even and exceeds {bound}", c.parts()[i])),
        FamilyId::EvenRestricted(bound) => c
            .parts()
            .iter()
            .position(|&p| p % 2 == 1 && p > bound)
            .map(|i| format!("part {} is odd and exceeds {bound}", c.parts()[i])),
        FamilyId::UFixed | FamilyId::VFixed => pairs
            .pairs()
            .iter()
            .enumerate()
            .find(|&(_, &(a, b))| !fixed_pair_ok(family, a, b))
            .map(|(i, &(a, b))| format!("pair {} is ({a},{b})", i + 1)),
    }
}
