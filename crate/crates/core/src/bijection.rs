//! Explicit maps between composition families, each with its inverse.
//!
//! Pairwise maps read the padded pair view; their inverses read the run-block
//! view. Any zero produced while rewriting parts is dropped on the spot, so
//! every returned value is a canonical [`Composition`].

use std::fmt;

use thiserror::Error;

use crate::composition::{push_nonzero, push_ones, run_decompose, Closer, Composition};
use crate::family::{membership_violation, FamilyId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("{map}: input {input} is outside the domain ({reason})")]
    Domain {
        map: &'static str,
        input: String,
        reason: String,
    },
}

fn domain_err(map: &'static str, input: &Composition, reason: impl Into<String>) -> BijectionError {
    BijectionError::Domain {
        map,
        input: input.to_string(),
        reason: reason.into(),
    }
}

fn require(map: &'static str, c: &Composition, family: FamilyId) -> Result<(), BijectionError> {
    match membership_violation(c, family) {
        None => Ok(()),
        Some(why) => Err(domain_err(map, c, format!("not in {family}: {why}"))),
    }
}

// ---------------------------------------------------------------------------
// Arndt compositions and odd-part compositions

/// Sends each pair `(a, b)` to `(1^(a-b-1), 2b+1)`; a padded `(a, 0)` gives `1^a`.
pub fn arndt_to_odd(c: &Composition) -> Result<Composition, BijectionError> {
    require("arndt_to_odd", c, FamilyId::Arndt(0))?;
    Ok(u_forward(c))
}

/// Sends each block `(1^a, 2b+1)` to `(a+b+1, b)`.
pub fn odd_to_arndt(c: &Composition) -> Result<Composition, BijectionError> {
    if let Some(index) = c.parts().iter().position(|p| p % 2 == 0) {
        return Err(domain_err(
            "odd_to_arndt",
            c,
            format!("part {} at index {index} is even", c.parts()[index]),
        ));
    }
    Ok(u_inverse(c))
}

// ---------------------------------------------------------------------------
// The permutations U and V of C(n)

/// The U permutation, pair by pair:
/// `b - a < 0` gives `(1^(a-b-1), 2b+1)`, otherwise `(1^(a+b-2k), 2k)` with
/// `k = floor((b-a)/2) + 1`.
pub fn u_forward(c: &Composition) -> Composition {
    let mut out = Vec::with_capacity(c.len() * 2);
    for &(a, b) in c.pair_view().pairs() {
        let d = i64::from(b) - i64::from(a);
        if d < 0 {
            push_ones(&mut out, a - b - 1);
            out.push(2 * b + 1);
        } else {
            let k = (d / 2 + 1) as u32;
            push_ones(&mut out, a + b - 2 * k);
            out.push(2 * k);
        }
    }
    Composition::from_parts_unchecked(out)
}

/// Inverse of [`u_forward`], block by block:
/// `(1^j, 2m-1)` gives `(j+m, m-1)`; `(1^2k, 2m)` gives `(k+1, k+2m-1)`;
/// `(1^(2k-1), 2m)` gives `(k, k+2m-1)`.
pub fn u_inverse(c: &Composition) -> Composition {
    let mut out = Vec::with_capacity(c.len());
    for block in run_decompose(c) {
        let j = block.ones;
        let l = block.closer.value();
        if l % 2 == 1 {
            let m = l.div_ceil(2);
            push_nonzero(&mut out, &[j + m, m - 1]);
        } else {
            let m = l / 2;
            if j % 2 == 0 {
                let k = j / 2;
                out.extend([k + 1, k + 2 * m - 1]);
            } else {
                let k = j.div_ceil(2);
                out.extend([k, k + 2 * m - 1]);
            }
        }
    }
    Composition::from_parts_unchecked(out)
}

/// The V permutation, pair by pair:
/// `b - a < 1` gives `(1^(a-b), 2b)`, otherwise `(1^(a+b-2k-1), 2k+1)` with
/// `k = floor((b-a+1)/2)`.
pub fn v_forward(c: &Composition) -> Composition {
    let mut out = Vec::with_capacity(c.len() * 2);
    for &(a, b) in c.pair_view().pairs() {
        let d = i64::from(b) - i64::from(a);
        if d < 1 {
            push_ones(&mut out, a - b);
            push_nonzero(&mut out, &[2 * b]);
        } else {
            let k = ((d + 1) / 2) as u32;
            push_ones(&mut out, a + b - 2 * k - 1);
            out.push(2 * k + 1);
        }
    }
    Composition::from_parts_unchecked(out)
}

/// Inverse of [`v_forward`], block by block:
/// `(1^j, 2m)` gives `(j+m, m)`; `(1^2k, 2m-1)` gives `(k+1, k+2m-2)`;
/// `(1^(2k-1), 2m-1)` gives `(k, k+2m-2)`. A trailing run `1^j` is the image
/// of the single padded pair `(j, 0)`.
pub fn v_inverse(c: &Composition) -> Composition {
    let mut out = Vec::with_capacity(c.len());
    for block in run_decompose(c) {
        let j = block.ones;
        match block.closer {
            Closer::TerminalOne => out.push(j + 1),
            Closer::Part(l) if l % 2 == 0 => {
                let m = l / 2;
                out.extend([j + m, m]);
            }
            Closer::Part(l) => {
                let m = l.div_ceil(2);
                if j % 2 == 0 {
                    let k = j / 2;
                    out.extend([k + 1, k + 2 * m - 2]);
                } else {
                    let k = j.div_ceil(2);
                    out.extend([k, k + 2 * m - 2]);
                }
            }
        }
    }
    Composition::from_parts_unchecked(out)
}

// ---------------------------------------------------------------------------
// Fixed points of U

/// A U-fixed composition together with how far below the target total it sits.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum UFixedSource {
    /// From `C^U(n-2)`.
    TwoLess(Composition),
    /// From `C^U(n-3)`.
    ThreeLess(Composition),
}

impl UFixedSource {
    pub fn value(&self) -> &Composition {
        match self {
            UFixedSource::TwoLess(c) | UFixedSource::ThreeLess(c) => c,
        }
    }
}

/// `ThreeLess`: append `1,2` (even length) or `2,1` (odd length).
/// `TwoLess`: add 2 to the last nonzero even-indexed part.
pub fn u_fixed_expand(source: &UFixedSource) -> Result<Composition, BijectionError> {
    const MAP: &str = "u_fixed_expand";
    let c = source.value();
    require(MAP, c, FamilyId::UFixed)?;
    let mut parts = c.parts().to_vec();
    match source {
        UFixedSource::ThreeLess(_) => {
            if parts.len().is_multiple_of(2) {
                parts.extend([1, 2]);
            } else {
                parts.extend([2, 1]);
            }
        }
        UFixedSource::TwoLess(_) => {
            if parts.len() < 2 {
                return Err(domain_err(MAP, c, "no even-indexed part to increase"));
            }
            let idx = last_even_index(parts.len());
            parts[idx] += 2;
        }
    }
    Ok(Composition::from_parts_unchecked(parts))
}

/// Inverse of [`u_fixed_expand`] for `n >= 4`.
pub fn u_fixed_reduce(c: &Composition) -> Result<UFixedSource, BijectionError> {
    const MAP: &str = "u_fixed_reduce";
    require(MAP, c, FamilyId::UFixed)?;
    if c.n() < 4 {
        return Err(domain_err(MAP, c, "total must be at least 4"));
    }
    let mut parts = c.parts().to_vec();
    let idx = last_even_index(parts.len());
    if parts[idx] >= 4 {
        parts[idx] -= 2;
        Ok(UFixedSource::TwoLess(Composition::from_parts_unchecked(
            parts,
        )))
    } else {
        // the 2 and the 1 beside it are always the last two parts
        parts.truncate(parts.len() - 2);
        Ok(UFixedSource::ThreeLess(Composition::from_parts_unchecked(
            parts,
        )))
    }
}

/// 0-based index of the last even-indexed (1-based) part; needs `len >= 2`.
fn last_even_index(len: usize) -> usize {
    if len.is_multiple_of(2) {
        len - 1
    } else {
        len - 2
    }
}

// ---------------------------------------------------------------------------
// Fixed points of V

/// A V-fixed composition of even total, tagged by its distance below the target.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum VFixedSource {
    /// From `C^V(2j-2)`.
    TwoLess(Composition),
    /// From `C^V(2j-4)`.
    FourLess(Composition),
}

impl VFixedSource {
    pub fn value(&self) -> &Composition {
        match self {
            VFixedSource::TwoLess(c) | VFixedSource::FourLess(c) => c,
        }
    }
}

fn require_even_v_fixed(map: &'static str, c: &Composition) -> Result<(), BijectionError> {
    require(map, c, FamilyId::VFixed)?;
    if !c.n().is_multiple_of(2) {
        return Err(domain_err(map, c, "total must be even"));
    }
    Ok(())
}

/// `FourLess`: append `1,3`. `TwoLess`: add 2 to the last part.
pub fn v_fixed_expand(source: &VFixedSource) -> Result<Composition, BijectionError> {
    const MAP: &str = "v_fixed_expand";
    let c = source.value();
    require_even_v_fixed(MAP, c)?;
    let mut parts = c.parts().to_vec();
    match source {
        VFixedSource::FourLess(_) => parts.extend([1, 3]),
        VFixedSource::TwoLess(_) => match parts.last_mut() {
            Some(last) => *last += 2,
            None => return Err(domain_err(MAP, c, "no last part to increase")),
        },
    }
    Ok(Composition::from_parts_unchecked(parts))
}

/// Inverse of [`v_fixed_expand`] on `C^V(2j)` with `2j >= 4`.
pub fn v_fixed_reduce(c: &Composition) -> Result<VFixedSource, BijectionError> {
    const MAP: &str = "v_fixed_reduce";
    require_even_v_fixed(MAP, c)?;
    let mut parts = c.parts().to_vec();
    match parts.last().copied() {
        None => Err(domain_err(MAP, c, "total must be at least 4")),
        Some(3) => {
            parts.truncate(parts.len() - 2);
            Ok(VFixedSource::FourLess(Composition::from_parts_unchecked(
                parts,
            )))
        }
        Some(_) => {
            *parts.last_mut().expect("nonempty") -= 2;
            Ok(VFixedSource::TwoLess(Composition::from_parts_unchecked(
                parts,
            )))
        }
    }
}

/// `C^V(2j) -> C^V(2j+1)`: append a part 1.
pub fn v_fixed_append(c: &Composition) -> Result<Composition, BijectionError> {
    require_even_v_fixed("v_fixed_append", c)?;
    let mut parts = c.parts().to_vec();
    parts.push(1);
    Ok(Composition::from_parts_unchecked(parts))
}

/// `C^V(2j+1) -> C^V(2j)`: drop the final part 1.
pub fn v_fixed_trim(c: &Composition) -> Result<Composition, BijectionError> {
    const MAP: &str = "v_fixed_trim";
    require(MAP, c, FamilyId::VFixed)?;
    if c.n() % 2 != 1 {
        return Err(domain_err(MAP, c, "total must be odd"));
    }
    let mut parts = c.parts().to_vec();
    parts.pop();
    Ok(Composition::from_parts_unchecked(parts))
}

// ---------------------------------------------------------------------------
// Splitting A(n, k) by length parity

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Inverse,
}

/// `A^o(n,k) <-> A(n-1,k)`: take 1 from, or add 1 to, the last odd position.
pub fn odd_length_step(
    c: &Composition,
    k: i64,
    direction: Direction,
) -> Result<Composition, BijectionError> {
    const MAP: &str = "odd_length_step";
    require(MAP, c, FamilyId::Arndt(k))?;
    let mut parts = c.parts().to_vec();
    match direction {
        Direction::Forward => {
            if parts.len() % 2 != 1 {
                return Err(domain_err(MAP, c, "length must be odd"));
            }
            let last = parts.last_mut().expect("odd length is nonempty");
            *last -= 1;
            if *last == 0 {
                parts.pop();
            }
        }
        Direction::Inverse => {
            if parts.len() % 2 == 1 {
                *parts.last_mut().expect("odd length is nonempty") += 1;
            } else {
                parts.push(1);
            }
        }
    }
    Ok(Composition::from_parts_unchecked(parts))
}

/// Which side of `A^e(n,k) ∪ A(n-2+k,k)` a composition belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SplitOrigin {
    /// An even-length member of `A(n,k)`.
    EvenPart,
    /// A member of `A(n-2+k,k)`.
    ShiftPart,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SplitSource {
    pub origin: SplitOrigin,
    pub value: Composition,
}

impl SplitSource {
    pub fn even(value: Composition) -> Self {
        Self {
            origin: SplitOrigin::EvenPart,
            value,
        }
    }

    pub fn shift(value: Composition) -> Self {
        Self {
            origin: SplitOrigin::ShiftPart,
            value,
        }
    }
}

impl fmt::Display for SplitSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.origin {
            SplitOrigin::EvenPart => "even",
            SplitOrigin::ShiftPart => "shift",
        };
        write!(f, "{tag}:{}", self.value)
    }
}

/// Which of the two copies of `A(n-2,k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CopyIndex {
    First,
    Second,
}

impl CopyIndex {
    pub fn number(self) -> u8 {
        match self {
            CopyIndex::First => 1,
            CopyIndex::Second => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoCopyElement {
    pub copy: CopyIndex,
    pub value: Composition,
}

impl fmt::Display for TwoCopyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "copy{}:{}", self.copy.number(), self.value)
    }
}

fn require_negative(map: &'static str, c: &Composition, k: i64) -> Result<(), BijectionError> {
    if k >= 0 {
        Err(domain_err(map, c, format!("k must be negative, got {k}")))
    } else {
        Ok(())
    }
}

/// `A^e(n,k) ∪ A(n-2+k,k) -> 2A(n-2,k)` for `k < 0`.
///
/// Even-length sources lose 1 from each of their last two parts and land in
/// the first copy exactly when their penultimate part exceeds 1. Shifted
/// sources gain `-k` in the last odd position and land in the second copy.
pub fn even_length_step(src: &SplitSource, k: i64) -> Result<TwoCopyElement, BijectionError> {
    const MAP: &str = "even_length_step";
    let c = &src.value;
    require_negative(MAP, c, k)?;
    require(MAP, c, FamilyId::Arndt(k))?;
    let mut parts = c.parts().to_vec();
    let minus_k = (-k) as u32;
    match src.origin {
        SplitOrigin::EvenPart => {
            if parts.is_empty() || !parts.len().is_multiple_of(2) {
                return Err(domain_err(
                    MAP,
                    c,
                    "even-part source needs positive even length",
                ));
            }
            let t = parts.len();
            let copy = if parts[t - 2] > 1 {
                CopyIndex::First
            } else {
                CopyIndex::Second
            };
            let (a, b) = (parts[t - 2] - 1, parts[t - 1] - 1);
            parts.truncate(t - 2);
            push_nonzero(&mut parts, &[a, b]);
            Ok(TwoCopyElement {
                copy,
                value: Composition::from_parts_unchecked(parts),
            })
        }
        SplitOrigin::ShiftPart => {
            if parts.len() % 2 == 1 {
                *parts.last_mut().expect("odd length is nonempty") += minus_k;
            } else {
                parts.push(minus_k);
            }
            Ok(TwoCopyElement {
                copy: CopyIndex::Second,
                value: Composition::from_parts_unchecked(parts),
            })
        }
    }
}

/// Inverse of [`even_length_step`]; `e.value` must lie in `A(n-2,k)`.
pub fn even_length_step_inverse(
    e: &TwoCopyElement,
    k: i64,
    n: u64,
) -> Result<SplitSource, BijectionError> {
    const MAP: &str = "even_length_step_inverse";
    let c = &e.value;
    require_negative(MAP, c, k)?;
    require(MAP, c, FamilyId::Arndt(k))?;
    if c.n() + 2 != n {
        return Err(domain_err(
            MAP,
            c,
            format!("total must be n - 2 = {}", n as i64 - 2),
        ));
    }
    let mut parts = c.parts().to_vec();
    let t = parts.len();
    let minus_k = (-k) as u32;
    let source = match (e.copy, t % 2 == 1) {
        (CopyIndex::First, true) => {
            parts[t - 1] += 1;
            parts.push(1);
            SplitSource::even(Composition::from_parts_unchecked(parts))
        }
        (CopyIndex::First, false) => {
            if t == 0 {
                return Err(domain_err(
                    MAP,
                    c,
                    "first copy has no image of the empty composition",
                ));
            }
            parts[t - 2] += 1;
            parts[t - 1] += 1;
            SplitSource::even(Composition::from_parts_unchecked(parts))
        }
        (CopyIndex::Second, true) if parts[t - 1] < minus_k => {
            let last = parts[t - 1];
            parts[t - 1] = 1;
            parts.push(last + 1);
            SplitSource::even(Composition::from_parts_unchecked(parts))
        }
        (CopyIndex::Second, true) => {
            let last = parts.pop().expect("odd length is nonempty") - minus_k;
            push_nonzero(&mut parts, &[last]);
            SplitSource::shift(Composition::from_parts_unchecked(parts))
        }
        (CopyIndex::Second, false) => {
            parts.extend([1, 1]);
            SplitSource::even(Composition::from_parts_unchecked(parts))
        }
    };
    Ok(source)
}
