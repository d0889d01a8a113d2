//! Exact counts for every family.
//!
//! Arndt counts use the two linear recurrences (one for `k < 0`, one for
//! `k >= 0`) with a per-`k` memo that grows on demand. Part-restricted
//! families are counted by a plain allowed-part convolution that shares no
//! code with the recurrences, so the two can check each other.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::family::FamilyId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("n must be nonnegative, got {0}")]
    NegativeN(i64),
    #[error("n must be positive, got {0}")]
    NonPositiveN(i64),
    #[error("(n, k) = ({n}, {k}) is outside the split window n >= 2 - k, k < 0")]
    OutOfWindow { n: i64, k: i64 },
    #[error("{0} has no part-set description; use the matching counter instead")]
    UnsupportedFamily(FamilyId),
}

/// `f_0 = 0`, `f_1 = 1`, `f_n = f_(n-1) + f_(n-2)`.
pub fn fibonacci(n: u64) -> BigUint {
    let (mut a, mut b) = (BigUint::zero(), BigUint::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// Counts of compositions of `0..=n_max` into the parts allowed by `family`.
///
/// `c(0) = 1` and `c(m) = sum of c(m - p)` over allowed `p <= m`.
pub fn restricted_dp_table(n_max: u64, family: FamilyId) -> Result<Vec<BigUint>, CountError> {
    let allowed: Box<dyn Fn(u64) -> bool> = match family {
        FamilyId::All => Box::new(|_| true),
        FamilyId::OddRestricted(b) => Box::new(move |p| p % 2 == 1 || p <= u64::from(b)),
        FamilyId::EvenRestricted(b) => Box::new(move |p| p % 2 == 0 || p <= u64::from(b)),
        other => return Err(CountError::UnsupportedFamily(other)),
    };
    let n_max = n_max as usize;
    let mut table: Vec<BigUint> = Vec::with_capacity(n_max + 1);
    table.push(BigUint::one());
    for m in 1..=n_max {
        let mut total = BigUint::zero();
        for p in 1..=m {
            if allowed(p as u64) {
                total += &table[m - p];
            }
        }
        table.push(total);
    }
    Ok(table)
}

pub fn count_restricted_dp(n: i64, family: FamilyId) -> Result<BigUint, CountError> {
    if n < 0 {
        return Err(CountError::NegativeN(n));
    }
    let mut table = restricted_dp_table(n as u64, family)?;
    Ok(table.swap_remove(n as usize))
}

/// `c^U` or `c^V` from their recurrences and initial values.
pub fn count_fixed(n: i64, which: FamilyId) -> Result<BigUint, CountError> {
    if n <= 0 {
        return Err(CountError::NonPositiveN(n));
    }
    Ok(fixed_sequence(n as usize, which)?.swap_remove(n as usize - 1))
}

/// `[c(1), ..., c(n_max)]` for `UFixed` or `VFixed`.
fn fixed_sequence(n_max: usize, which: FamilyId) -> Result<Vec<BigUint>, CountError> {
    let (initial, lags): (&[u32], [usize; 2]) = match which {
        FamilyId::UFixed => (&[1, 0, 1], [2, 3]),
        FamilyId::VFixed => (&[1, 0, 0, 1], [2, 4]),
        other => return Err(CountError::UnsupportedFamily(other)),
    };
    let mut seq: Vec<BigUint> = initial.iter().map(|&v| BigUint::from(v)).collect();
    while seq.len() < n_max {
        let m = seq.len();
        let next = &seq[m - lags[0]] + &seq[m - lags[1]];
        seq.push(next);
    }
    seq.truncate(n_max);
    Ok(seq)
}

/// Memoized Arndt counts, one growing vector per `k`.
///
/// Every entry is written once under the write lock and never changed, so
/// concurrent readers always see the same values.
#[derive(Debug, Default)]
pub struct CountTable {
    arndt: RwLock<HashMap<i64, Vec<BigUint>>>,
}

impl CountTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide table used by the free functions in this module.
    pub fn global() -> &'static CountTable {
        static TABLE: OnceLock<CountTable> = OnceLock::new();
        TABLE.get_or_init(CountTable::new)
    }

    /// `a(n, k) = |A(n, k)|`.
    pub fn count_arndt(&self, n: i64, k: i64) -> Result<BigUint, CountError> {
        if n < 0 {
            return Err(CountError::NegativeN(n));
        }
        let idx = n as usize;
        {
            let memo = self.arndt.read().expect("count table lock poisoned");
            if let Some(v) = memo.get(&k).and_then(|row| row.get(idx)) {
                return Ok(v.clone());
            }
        }
        let mut memo = self.arndt.write().expect("count table lock poisoned");
        let row = memo.entry(k).or_default();
        while row.len() <= idx {
            let m = row.len();
            let next = arndt_entry(row, m, k);
            row.push(next);
        }
        Ok(row[idx].clone())
    }

    /// `(a^o(n,k), a^e(n,k)) = (a(n-1,k), 2a(n-2,k) - a(n-2+k,k))` for `k < 0`.
    pub fn count_split(&self, n: i64, k: i64) -> Result<(BigUint, BigUint), CountError> {
        if k >= 0 || n < 2 - k {
            return Err(CountError::OutOfWindow { n, k });
        }
        let odd = self.count_arndt(n - 1, k)?;
        let even = self.count_arndt(n - 2, k)? * 2u32 - self.count_arndt(n - 2 + k, k)?;
        Ok((odd, even))
    }

    /// `[count(f, 1), ..., count(f, n_max)]`.
    pub fn sequence(&self, family: FamilyId, n_max: u64) -> Vec<BigUint> {
        match family {
            FamilyId::Arndt(k) => (1..=n_max as i64)
                .map(|n| self.count_arndt(n, k).expect("n is positive"))
                .collect(),
            FamilyId::UFixed | FamilyId::VFixed => {
                fixed_sequence(n_max as usize, family).expect("fixed family")
            }
            FamilyId::All => (1..=n_max).map(|n| BigUint::one() << (n - 1)).collect(),
            FamilyId::OddRestricted(_) | FamilyId::EvenRestricted(_) => {
                let mut table = restricted_dp_table(n_max, family).expect("part-set family");
                table.remove(0);
                table
            }
        }
    }
}

/// Next Arndt count `a(m, k)` given `row = [a(0,k), ..., a(m-1,k)]`.
fn arndt_entry(row: &[BigUint], m: usize, k: i64) -> BigUint {
    if m == 0 {
        return BigUint::one();
    }
    let mi = m as i64;
    if k < 0 {
        if -k >= mi {
            // every full pair (a, b) of a composition of m has b - a < m <= -k
            return BigUint::one() << (m - 1);
        }
        if mi < 2 - k {
            let partner = FamilyId::restricted_partner(k).expect("k is negative");
            return count_restricted_dp(mi, partner).expect("part-set family");
        }
        let back = |d: i64| &row[(mi - d) as usize];
        back(1) + back(2) * 2u32 - back(2 - k)
    } else {
        if mi <= k + 2 {
            // a full pair needs a + b >= k + 3, so only the single part remains
            return BigUint::one();
        }
        let back = |d: i64| &row[(mi - d) as usize];
        back(1) + back(2) + back(3 + k) - back(3)
    }
}

pub fn count_arndt(n: i64, k: i64) -> Result<BigUint, CountError> {
    CountTable::global().count_arndt(n, k)
}

pub fn count_split(n: i64, k: i64) -> Result<(BigUint, BigUint), CountError> {
    CountTable::global().count_split(n, k)
}

pub fn sequence(family: FamilyId, n_max: u64) -> Vec<BigUint> {
    CountTable::global().sequence(family, n_max)
}
