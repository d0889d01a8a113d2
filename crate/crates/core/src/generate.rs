//! Ordered exhaustive generation of every family at a fixed total.
//!
//! Generation is a depth-first descent that picks the largest admissible
//! part first, so compositions come out in canonical order (componentwise,
//! larger parts first). A reachability table built up front prunes every
//! branch that cannot be completed, so sparse families never backtrack
//! through dead prefixes.

use std::env;

use num_bigint::BigUint;
use thiserror::Error;

use crate::composition::Composition;
use crate::family::FamilyId;

/// Environment variable that overrides [`EnumCap::DEFAULT`].
pub const ENUM_CAP_ENV: &str = "COMPLAB_ENUM_CAP";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("n = {n} exceeds the enumeration cap {cap}; use the count module for larger n")]
    CapExceeded { n: u32, cap: u32 },
}

/// Upper bound on `n` for brute-force work.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumCap(pub u32);

impl EnumCap {
    pub const DEFAULT: EnumCap = EnumCap(24);

    /// Reads `COMPLAB_ENUM_CAP`, falling back to the default.
    pub fn from_env() -> Self {
        env::var(ENUM_CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(EnumCap)
            .unwrap_or(Self::DEFAULT)
    }

    pub fn check(self, n: u32) -> Result<(), GenerateError> {
        if n > self.0 {
            Err(GenerateError::CapExceeded { n, cap: self.0 })
        } else {
            Ok(())
        }
    }
}

impl Default for EnumCap {
    fn default() -> Self {
        Self::DEFAULT
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub family: FamilyId,
    pub n: u32,
}

impl GeneratorSpec {
    pub fn new(family: FamilyId, n: u32) -> Self {
        Self { family, n }
    }
}

/// `reach[parity][prev][r]`: can `r` more be placed when the next position
/// has the given parity and follows a part of size `prev`?
struct Reachability {
    prev_dim: usize,
    n: usize,
    table: Vec<bool>,
}

impl Reachability {
    fn build(family: FamilyId, n: u32) -> Self {
        let n = n as usize;
        let prev_dim = if family.uses_prev() { n + 1 } else { 1 };
        let mut me = Self {
            prev_dim,
            n,
            table: vec![false; 2 * prev_dim * (n + 1)],
        };
        for r in 0..=n {
            for parity in 0..2 {
                for prev in 0..prev_dim {
                    let ok = r == 0
                        || (1..=r).any(|part| {
                            family.allows(parity == 0, prev as u32, part as u32)
                                && me.get(1 - parity, part, r - part)
                        });
                    let idx = me.index(parity, prev, r);
                    me.table[idx] = ok;
                }
            }
        }
        me
    }

    fn index(&self, parity: usize, prev: usize, r: usize) -> usize {
        let prev = if self.prev_dim == 1 { 0 } else { prev };
        (parity * self.prev_dim + prev) * (self.n + 1) + r
    }

    fn get(&self, parity: usize, prev: usize, r: usize) -> bool {
        self.table[self.index(parity, prev, r)]
    }
}

/// Lazy stream of the members of one family at one total.
pub struct Compositions {
    family: FamilyId,
    reach: Reachability,
    parts: Vec<u32>,
    remaining: u32,
    started: bool,
    done: bool,
}

impl Compositions {
    fn new(spec: GeneratorSpec) -> Self {
        Self {
            family: spec.family,
            reach: Reachability::build(spec.family, spec.n),
            parts: Vec::new(),
            remaining: spec.n,
            started: false,
            done: false,
        }
    }

    /// Largest admissible, completable part no bigger than `upper` for the
    /// next position.
    fn best_part(&self, upper: u32) -> Option<u32> {
        let pos = self.parts.len();
        let parity = pos % 2;
        let prev = self.parts.last().copied().unwrap_or(0);
        let upper = upper.min(self.remaining);
        (1..=upper).rev().find(|&part| {
            self.family.allows(parity == 0, prev, part)
                && self
                    .reach
                    .get(1 - parity, part as usize, (self.remaining - part) as usize)
        })
    }

    fn descend(&mut self) {
        while self.remaining > 0 {
            let part = self
                .best_part(self.remaining)
                .expect("reachable state always extends");
            self.parts.push(part);
            self.remaining -= part;
        }
    }

    fn current(&self) -> Composition {
        Composition::from_parts_unchecked(self.parts.clone())
    }
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if !self.reach.get(0, 0, self.remaining as usize) {
                self.done = true;
                return None;
            }
            self.descend();
            return Some(self.current());
        }
        while let Some(last) = self.parts.pop() {
            self.remaining += last;
            if let Some(part) = self.best_part(last - 1) {
                self.parts.push(part);
                self.remaining -= part;
                self.descend();
                return Some(self.current());
            }
        }
        self.done = true;
        None
    }
}

/// Every member of `spec.family` at `spec.n`, once each, in canonical order.
pub fn enumerate(spec: GeneratorSpec) -> Compositions {
    Compositions::new(spec)
}

/// Brute-force count: the length of [`enumerate`].
pub fn count_by_generation(spec: GeneratorSpec, cap: EnumCap) -> Result<BigUint, GenerateError> {
    cap.check(spec.n)?;
    Ok(BigUint::from(enumerate(spec).count()))
}
