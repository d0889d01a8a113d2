//! Integer compositions and the views used by every map in this crate.
//!
//! A composition is stored exactly as its positive parts. The padded pair
//! view (a virtual trailing `0` for odd length) and the run-block view are
//! derived on demand and never stored.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Largest total accepted for a single composition.
pub const MAX_TOTAL: u64 = 1 << 31;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompositionError {
    #[error("part at index {index} is {value}; parts must be positive")]
    NonPositivePart { index: usize, value: i64 },
    #[error("total {0} exceeds the supported bound 2^31")]
    TooLarge(u64),
    #[error("statistic is undefined on the empty composition")]
    Empty,
    #[error("cannot parse composition text {text:?}: {reason}")]
    Parse { text: String, reason: String },
}

/// An ordered sequence of positive parts with its cached total.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition {
    parts: Vec<u32>,
    n: u64,
}

impl Composition {
    /// The unique composition of zero.
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(parts: Vec<u32>) -> Result<Self, CompositionError> {
        if let Some(index) = parts.iter().position(|&p| p == 0) {
            return Err(CompositionError::NonPositivePart { index, value: 0 });
        }
        let n: u64 = parts.iter().map(|&p| u64::from(p)).sum();
        if n > MAX_TOTAL {
            return Err(CompositionError::TooLarge(n));
        }
        Ok(Self { parts, n })
    }

    /// Builds from parts that are already known to be positive.
    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        let n = parts.iter().map(|&p| u64::from(p)).sum();
        Self { parts, n }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    /// Sum of the parts.
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn last(&self) -> Option<u32> {
        self.parts.last().copied()
    }

    pub fn pair_view(&self) -> PairView {
        pair_view(self)
    }

    pub fn run_blocks(&self) -> Vec<RunBlock> {
        run_decompose(self)
    }

    /// Ordering used by every listing: larger parts first, componentwise.
    pub fn canonical_cmp(&self, other: &Self) -> std::cmp::Ordering {
        other.parts.cmp(&self.parts)
    }

    /// Formats the composition in the given style; see [`TextStyle`].
    pub fn to_text(&self, style: TextStyle) -> String {
        if self.parts.is_empty() {
            return "()".to_string();
        }
        let compact_ok = self.parts.iter().all(|&p| p < 10);
        if compact_ok && style == TextStyle::Compact {
            return self.parts.iter().map(|p| p.to_string()).collect();
        }
        if self.parts.len() == 1 && !compact_ok {
            // a bare multi-digit number would read back as several parts
            return format!("({})", self.parts[0]);
        }
        self.parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Parses text and reports which style it was written in.
    pub fn parse_with_style(text: &str) -> Result<(Self, TextStyle), CompositionError> {
        let err = |reason: &str| CompositionError::Parse {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = text.trim();
        let (body, bracketed) = match trimmed.strip_prefix('(') {
            Some(rest) => (
                rest.strip_suffix(')')
                    .ok_or_else(|| err("unbalanced parenthesis"))?,
                true,
            ),
            None => (trimmed, false),
        };
        if body.is_empty() {
            return if bracketed {
                Ok((Self::empty(), TextStyle::Comma))
            } else {
                Err(err("empty text; write () for the empty composition"))
            };
        }
        let (values, style) = if bracketed || body.contains(',') {
            let values = body
                .split(',')
                .map(|tok| tok.trim().parse::<i64>().map_err(|_| err("bad number")))
                .collect::<Result<Vec<_>, _>>()?;
            (values, TextStyle::Comma)
        } else {
            let values = body
                .chars()
                .map(|ch| {
                    ch.to_digit(10)
                        .map(i64::from)
                        .ok_or_else(|| err("expected a digit"))
                })
                .collect::<Result<Vec<_>, _>>()?;
            (values, TextStyle::Compact)
        };
        Ok((make_composition(&values)?, style))
    }
}

/// How a composition is written as text.
///
/// `Compact` writes single-digit parts with no separator (`2121`); it falls
/// back to `Comma` whenever a part has two or more digits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TextStyle {
    #[default]
    Compact,
    Comma,
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(TextStyle::Compact))
    }
}

impl FromStr for Composition {
    type Err = CompositionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse_with_style(s).map(|(c, _)| c)
    }
}

impl TryFrom<Vec<u32>> for Composition {
    type Error = CompositionError;

    fn try_from(parts: Vec<u32>) -> Result<Self, Self::Error> {
        Self::new(parts)
    }
}

/// Validates signed input parts.
pub fn make_composition(parts: &[i64]) -> Result<Composition, CompositionError> {
    let mut out = Vec::with_capacity(parts.len());
    for (index, &value) in parts.iter().enumerate() {
        if value <= 0 {
            return Err(CompositionError::NonPositivePart { index, value });
        }
        let part = u32::try_from(value)
            .ok()
            .filter(|&p| u64::from(p) <= MAX_TOTAL)
            .ok_or(CompositionError::TooLarge(value as u64))?;
        out.push(part);
    }
    Composition::new(out)
}

/// Parts read two at a time, the last pair padded with `0` at odd length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairView {
    pairs: Vec<(u32, u32)>,
}

impl PairView {
    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    /// Flattens back to parts, dropping the padding zero.
    pub fn flatten(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self.pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        if out.last() == Some(&0) {
            out.pop();
        }
        out
    }
}

pub fn pair_view(c: &Composition) -> PairView {
    let pairs = c
        .parts
        .chunks(2)
        .map(|chunk| (chunk[0], chunk.get(1).copied().unwrap_or(0)))
        .collect();
    PairView { pairs }
}

/// Greatest `second - first` over the padded pairs.
pub fn h_statistic(c: &Composition) -> Result<i64, CompositionError> {
    pair_view(c)
        .pairs
        .iter()
        .map(|&(a, b)| i64::from(b) - i64::from(a))
        .max()
        .ok_or(CompositionError::Empty)
}

/// The part that ends a run block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Closer {
    /// A part of size at least 2.
    Part(u32),
    /// Stands for the final `1` of a trailing run of ones.
    TerminalOne,
}

impl Closer {
    pub fn value(self) -> u32 {
        match self {
            Closer::Part(v) => v,
            Closer::TerminalOne => 1,
        }
    }
}

/// `ones` copies of 1 followed by `closer`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RunBlock {
    pub ones: u32,
    pub closer: Closer,
}

impl RunBlock {
    pub fn total(&self) -> u64 {
        u64::from(self.ones) + u64::from(self.closer.value())
    }

    pub fn parts(&self) -> impl Iterator<Item = u32> + '_ {
        std::iter::repeat_n(1, self.ones as usize).chain(std::iter::once(self.closer.value()))
    }
}

/// Splits `c` into maximal `(1^j, l)` blocks with `l >= 2`; a trailing run
/// `1^j` becomes `(1^(j-1), TerminalOne)`.
pub fn run_decompose(c: &Composition) -> Vec<RunBlock> {
    let mut blocks = Vec::new();
    let mut ones = 0u32;
    for &p in &c.parts {
        if p == 1 {
            ones += 1;
        } else {
            blocks.push(RunBlock {
                ones,
                closer: Closer::Part(p),
            });
            ones = 0;
        }
    }
    if ones > 0 {
        blocks.push(RunBlock {
            ones: ones - 1,
            closer: Closer::TerminalOne,
        });
    }
    blocks
}

/// Appends parts to a vector, skipping zeros.
pub(crate) fn push_nonzero(out: &mut Vec<u32>, parts: &[u32]) {
    out.extend(parts.iter().copied().filter(|&p| p > 0));
}

pub(crate) fn push_ones(out: &mut Vec<u32>, count: u32) {
    out.extend(std::iter::repeat_n(1, count as usize));
}
