//! Exhaustive checks of the maps and counters against each other.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::io::BufRead;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use thiserror::Error;

use crate::bijection::{
    arndt_to_odd, even_length_step, even_length_step_inverse, odd_length_step, odd_to_arndt,
    u_fixed_expand, u_fixed_reduce, u_forward, u_inverse, v_fixed_append, v_fixed_expand,
    v_fixed_reduce, v_fixed_trim, v_forward, v_inverse, BijectionError, CopyIndex, Direction,
    SplitOrigin, SplitSource, TwoCopyElement, UFixedSource, VFixedSource,
};
use crate::composition::Composition;
use crate::count::{
    count_arndt, count_fixed, count_restricted_dp, fibonacci, sequence, CountError,
};
use crate::family::{is_member, FamilyId};
use crate::generate::{count_by_generation, enumerate, EnumCap, GenerateError, GeneratorSpec};

/// Witnesses kept per report.
pub const MAX_WITNESSES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown map {0:?}")]
    UnknownMap(String),
    #[error("{0} needs a value of k")]
    MissingK(MapId),
    #[error("{map} is not defined at n = {n}{}: {reason}", k.map(|k| format!(", k = {k}")).unwrap_or_default())]
    OutOfDomain {
        map: MapId,
        n: i64,
        k: Option<i64>,
        reason: &'static str,
    },
    #[error(transparent)]
    Generate(#[from] GenerateError),
    #[error(transparent)]
    Count(#[from] CountError),
    #[error("b-file line {line}: {reason}")]
    BFile { line: usize, reason: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

/// One failed expectation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub subject: String,
    pub n_range: RangeInclusive<i64>,
    pub k_range: Option<RangeInclusive<i64>>,
    pub status: Status,
    /// First failures, at most [`MAX_WITNESSES`].
    pub failures: Vec<Witness>,
    pub failure_count: usize,
    /// Number of individual items examined.
    pub checked: usize,
    pub detail: String,
}

impl CheckReport {
    fn new(
        subject: String,
        n_range: RangeInclusive<i64>,
        k_range: Option<RangeInclusive<i64>>,
    ) -> Self {
        Self {
            subject,
            n_range,
            k_range,
            status: Status::Pass,
            failures: Vec::new(),
            failure_count: 0,
            checked: 0,
            detail: String::new(),
        }
    }

    fn fail(&mut self, input: impl ToString, expected: impl ToString, actual: impl ToString) {
        self.status = Status::Fail;
        self.failure_count += 1;
        if self.failures.len() < MAX_WITNESSES {
            self.failures.push(Witness {
                input: input.to_string(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    fn expect_eq<T: PartialEq + fmt::Display>(
        &mut self,
        input: impl ToString,
        expected: &T,
        actual: &T,
    ) {
        self.checked += 1;
        if expected != actual {
            self.fail(input, expected, actual);
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        write!(
            f,
            "[{status}] {} (n {}..={}",
            self.subject,
            self.n_range.start(),
            self.n_range.end()
        )?;
        if let Some(k) = &self.k_range {
            write!(f, ", k {}..={}", k.start(), k.end())?;
        }
        write!(f, "; {} checked", self.checked)?;
        if !self.detail.is_empty() {
            write!(f, "; {}", self.detail)?;
        }
        write!(f, ")")?;
        if self.failure_count > 0 {
            write!(f, " {} failure(s)", self.failure_count)?;
            for w in &self.failures {
                write!(
                    f,
                    "\n    input {}: expected {}, got {}",
                    w.input, w.expected, w.actual
                )?;
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Bijection checks

/// Maps that [`check_bijection`] knows how to verify.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MapId {
    /// `A(n) -> C_odd(n)`.
    ArndtToOdd,
    /// `U` on `C(n)`.
    U,
    /// `V` on `C(n)`.
    V,
    /// `U` on `A(n,k)` for even `k < 0`, `V` for odd `k < 0`.
    Restricted,
    /// `C^U(n-2) ∪ C^U(n-3) -> C^U(n)`.
    UFixedExpand,
    /// `C^V(n-2) ∪ C^V(n-4) -> C^V(n)`, `n` even.
    VFixedExpand,
    /// `C^V(n-1) -> C^V(n)`, `n` odd.
    VFixedAppend,
    /// `A^o(n,k) -> A(n-1,k)`.
    OddLengthStep,
    /// `A^e(n,k) ∪ A(n-2+k,k) -> 2A(n-2,k)`.
    EvenLengthStep,
}

impl MapId {
    pub const ALL: [MapId; 9] = [
        MapId::ArndtToOdd,
        MapId::U,
        MapId::V,
        MapId::Restricted,
        MapId::UFixedExpand,
        MapId::VFixedExpand,
        MapId::VFixedAppend,
        MapId::OddLengthStep,
        MapId::EvenLengthStep,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MapId::ArndtToOdd => "arndt_to_odd",
            MapId::U => "u_forward",
            MapId::V => "v_forward",
            MapId::Restricted => "restricted",
            MapId::UFixedExpand => "u_fixed_expand",
            MapId::VFixedExpand => "v_fixed_expand",
            MapId::VFixedAppend => "v_fixed_append",
            MapId::OddLengthStep => "odd_length_step",
            MapId::EvenLengthStep => "even_length_step",
        }
    }

    pub fn needs_k(self) -> bool {
        matches!(
            self,
            MapId::Restricted | MapId::OddLengthStep | MapId::EvenLengthStep
        )
    }

    /// Whether the map is defined at `(n, k)`.
    pub fn defined_at(self, n: i64, k: Option<i64>) -> Result<(), VerifyError> {
        let out = |reason| {
            Err(VerifyError::OutOfDomain {
                map: self,
                n,
                k,
                reason,
            })
        };
        if self.needs_k() && k.is_none() {
            return Err(VerifyError::MissingK(self));
        }
        let k = k.unwrap_or(0);
        match self {
            _ if n < 0 => out("n must be nonnegative"),
            MapId::Restricted | MapId::EvenLengthStep if k >= 0 => out("k must be negative"),
            MapId::UFixedExpand if n < 4 => out("n must be at least 4"),
            MapId::VFixedExpand if n < 4 || n % 2 != 0 => out("n must be even and at least 4"),
            MapId::VFixedAppend if n % 2 != 1 => out("n must be odd"),
            MapId::OddLengthStep if n < 1 => out("n must be positive"),
            MapId::EvenLengthStep if n < 3 => out("n must be at least 3"),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for MapId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MapId {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let id = match s.trim() {
            "arndt_to_odd" | "arndt2odd" => MapId::ArndtToOdd,
            "u_forward" | "u" => MapId::U,
            "v_forward" | "v" => MapId::V,
            "restricted" => MapId::Restricted,
            "u_fixed_expand" | "ufix" => MapId::UFixedExpand,
            "v_fixed_expand" | "vfix" => MapId::VFixedExpand,
            "v_fixed_append" | "vfixappend" => MapId::VFixedAppend,
            "odd_length_step" | "oddstep" => MapId::OddLengthStep,
            "even_length_step" | "evenstep" => MapId::EvenLengthStep,
            other => return Err(VerifyError::UnknownMap(other.to_string())),
        };
        Ok(id)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Tag {
    Plain,
    Even,
    Shift,
    Copy1,
    Copy2,
    TwoLess,
    ThreeLess,
    FourLess,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Element {
    tag: Tag,
    value: Composition,
}

impl Element {
    fn plain(value: Composition) -> Self {
        Self {
            tag: Tag::Plain,
            value,
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.tag {
            Tag::Plain => return write!(f, "{}", self.value),
            Tag::Even => "even",
            Tag::Shift => "shift",
            Tag::Copy1 => "copy1",
            Tag::Copy2 => "copy2",
            Tag::TwoLess => "n-2",
            Tag::ThreeLess => "n-3",
            Tag::FourLess => "n-4",
        };
        write!(f, "{tag}:{}", self.value)
    }
}

/// One tagged piece of a domain or codomain: the members of `family` at
/// total `n`, optionally restricted to one length parity.
#[derive(Debug, Clone, Copy)]
struct Block {
    tag: Tag,
    n: i64,
    family: FamilyId,
    odd_length: Option<bool>,
}

impl Block {
    fn new(tag: Tag, n: i64, family: FamilyId) -> Self {
        Self {
            tag,
            n,
            family,
            odd_length: None,
        }
    }

    fn with_length(mut self, odd: bool) -> Self {
        self.odd_length = Some(odd);
        self
    }

    fn parity_ok(&self, c: &Composition) -> bool {
        self.odd_length.is_none_or(|odd| (c.len() % 2 == 1) == odd)
    }

    /// Membership decided from the definitions, not from enumeration.
    fn contains(&self, e: &Element) -> bool {
        e.tag == self.tag
            && e.value.n() as i64 == self.n
            && is_member(&e.value, self.family)
            && self.parity_ok(&e.value)
    }

    fn elements(&self) -> Vec<Element> {
        if self.n < 0 {
            return Vec::new();
        }
        enumerate(GeneratorSpec::new(self.family, self.n as u32))
            .filter(|c| self.parity_ok(c))
            .map(|value| Element {
                tag: self.tag,
                value,
            })
            .collect()
    }
}

type ElementMap = Box<dyn Fn(&Element) -> Result<Element, BijectionError> + Send + Sync>;

struct MapSpec {
    domain: Vec<Block>,
    codomain: Vec<Block>,
    forward: ElementMap,
    inverse: ElementMap,
}

fn plain_map(f: fn(&Composition) -> Composition) -> ElementMap {
    Box::new(move |e| Ok(Element::plain(f(&e.value))))
}

fn plain_try_map(f: fn(&Composition) -> Result<Composition, BijectionError>) -> ElementMap {
    Box::new(move |e| f(&e.value).map(Element::plain))
}

fn map_spec(map: MapId, n: i64, k: Option<i64>) -> Result<MapSpec, VerifyError> {
    map.defined_at(n, k)?;
    let kk = k.unwrap_or(0);
    let spec = match map {
        MapId::ArndtToOdd => MapSpec {
            domain: vec![Block::new(Tag::Plain, n, FamilyId::Arndt(0))],
            codomain: vec![Block::new(Tag::Plain, n, FamilyId::OddRestricted(0))],
            forward: plain_try_map(arndt_to_odd),
            inverse: plain_try_map(odd_to_arndt),
        },
        MapId::U | MapId::V => {
            let (forward, inverse) = if map == MapId::U {
                (plain_map(u_forward), plain_map(u_inverse))
            } else {
                (plain_map(v_forward), plain_map(v_inverse))
            };
            MapSpec {
                domain: vec![Block::new(Tag::Plain, n, FamilyId::All)],
                codomain: vec![Block::new(Tag::Plain, n, FamilyId::All)],
                forward,
                inverse,
            }
        }
        MapId::Restricted => {
            let partner = FamilyId::restricted_partner(kk).expect("k checked negative");
            let (forward, inverse) = if kk % 2 == 0 {
                (plain_map(u_forward), plain_map(u_inverse))
            } else {
                (plain_map(v_forward), plain_map(v_inverse))
            };
            MapSpec {
                domain: vec![Block::new(Tag::Plain, n, FamilyId::Arndt(kk))],
                codomain: vec![Block::new(Tag::Plain, n, partner)],
                forward,
                inverse,
            }
        }
        MapId::UFixedExpand => MapSpec {
            domain: vec![
                Block::new(Tag::TwoLess, n - 2, FamilyId::UFixed),
                Block::new(Tag::ThreeLess, n - 3, FamilyId::UFixed),
            ],
            codomain: vec![Block::new(Tag::Plain, n, FamilyId::UFixed)],
            forward: Box::new(|e| {
                let src = match e.tag {
                    Tag::TwoLess => UFixedSource::TwoLess(e.value.clone()),
                    _ => UFixedSource::ThreeLess(e.value.clone()),
                };
                u_fixed_expand(&src).map(Element::plain)
            }),
            inverse: Box::new(|e| {
                Ok(match u_fixed_reduce(&e.value)? {
                    UFixedSource::TwoLess(value) => Element {
                        tag: Tag::TwoLess,
                        value,
                    },
                    UFixedSource::ThreeLess(value) => Element {
                        tag: Tag::ThreeLess,
                        value,
                    },
                })
            }),
        },
        MapId::VFixedExpand => MapSpec {
            domain: vec![
                Block::new(Tag::TwoLess, n - 2, FamilyId::VFixed),
                Block::new(Tag::FourLess, n - 4, FamilyId::VFixed),
            ],
            codomain: vec![Block::new(Tag::Plain, n, FamilyId::VFixed)],
            forward: Box::new(|e| {
                let src = match e.tag {
                    Tag::TwoLess => VFixedSource::TwoLess(e.value.clone()),
                    _ => VFixedSource::FourLess(e.value.clone()),
                };
                v_fixed_expand(&src).map(Element::plain)
            }),
            inverse: Box::new(|e| {
                Ok(match v_fixed_reduce(&e.value)? {
                    VFixedSource::TwoLess(value) => Element {
                        tag: Tag::TwoLess,
                        value,
                    },
                    VFixedSource::FourLess(value) => Element {
                        tag: Tag::FourLess,
                        value,
                    },
                })
            }),
        },
        MapId::VFixedAppend => MapSpec {
            domain: vec![Block::new(Tag::Plain, n - 1, FamilyId::VFixed)],
            codomain: vec![Block::new(Tag::Plain, n, FamilyId::VFixed)],
            forward: plain_try_map(v_fixed_append),
            inverse: plain_try_map(v_fixed_trim),
        },
        MapId::OddLengthStep => MapSpec {
            domain: vec![Block::new(Tag::Plain, n, FamilyId::Arndt(kk)).with_length(true)],
            codomain: vec![Block::new(Tag::Plain, n - 1, FamilyId::Arndt(kk))],
            forward: Box::new(move |e| {
                odd_length_step(&e.value, kk, Direction::Forward).map(Element::plain)
            }),
            inverse: Box::new(move |e| {
                odd_length_step(&e.value, kk, Direction::Inverse).map(Element::plain)
            }),
        },
        MapId::EvenLengthStep => MapSpec {
            domain: vec![
                Block::new(Tag::Even, n, FamilyId::Arndt(kk)).with_length(false),
                Block::new(Tag::Shift, n - 2 + kk, FamilyId::Arndt(kk)),
            ],
            codomain: vec![
                Block::new(Tag::Copy1, n - 2, FamilyId::Arndt(kk)),
                Block::new(Tag::Copy2, n - 2, FamilyId::Arndt(kk)),
            ],
            forward: Box::new(move |e| {
                let src = SplitSource {
                    origin: if e.tag == Tag::Even {
                        SplitOrigin::EvenPart
                    } else {
                        SplitOrigin::ShiftPart
                    },
                    value: e.value.clone(),
                };
                let out = even_length_step(&src, kk)?;
                let tag = match out.copy {
                    CopyIndex::First => Tag::Copy1,
                    CopyIndex::Second => Tag::Copy2,
                };
                Ok(Element {
                    tag,
                    value: out.value,
                })
            }),
            inverse: Box::new(move |e| {
                let copy = if e.tag == Tag::Copy1 {
                    CopyIndex::First
                } else {
                    CopyIndex::Second
                };
                let two = TwoCopyElement {
                    copy,
                    value: e.value.clone(),
                };
                let src = even_length_step_inverse(&two, kk, n as u64)?;
                let tag = match src.origin {
                    SplitOrigin::EvenPart => Tag::Even,
                    SplitOrigin::ShiftPart => Tag::Shift,
                };
                Ok(Element {
                    tag,
                    value: src.value,
                })
            }),
        },
    };
    Ok(spec)
}

/// Enumerates the declared domain of `map` at `(n, k)` and checks image
/// membership, sum offsets, injectivity, surjectivity and the inverse.
pub fn check_bijection(
    map: MapId,
    n: i64,
    k: Option<i64>,
    cap: EnumCap,
) -> Result<CheckReport, VerifyError> {
    let spec = map_spec(map, n, k)?;
    cap.check(n.max(0) as u32)?;
    let subject = match k {
        Some(k) if map.needs_k() => format!("{map} n={n} k={k}"),
        _ => format!("{map} n={n}"),
    };
    let mut report = CheckReport::new(subject, n..=n, k.filter(|_| map.needs_k()).map(|k| k..=k));

    let domain: Vec<Element> = spec.domain.iter().flat_map(Block::elements).collect();
    let codomain: Vec<Element> = spec.codomain.iter().flat_map(Block::elements).collect();
    let mut images: HashSet<Element> = HashSet::with_capacity(domain.len());

    for x in &domain {
        report.checked += 1;
        let image = match (spec.forward)(x) {
            Ok(image) => image,
            Err(e) => {
                report.fail(x, "an image", e);
                continue;
            }
        };
        match spec.codomain.iter().find(|b| b.tag == image.tag) {
            Some(block) if image.value.n() as i64 != block.n => {
                report.fail(
                    x,
                    format!("image total {}", block.n),
                    format!("{image} with total {}", image.value.n()),
                );
            }
            Some(block) if !block.contains(&image) => {
                report.fail(x, format!("image in {}", block.family), &image);
            }
            Some(_) => {}
            None => report.fail(x, "image in the codomain", &image),
        }
        match (spec.inverse)(&image) {
            Ok(back) if &back == x => {}
            Ok(back) => report.fail(&image, format!("inverse {x}"), back),
            Err(e) => report.fail(&image, format!("inverse {x}"), e),
        }
        if !images.insert(image.clone()) {
            report.fail(x, "distinct image", format!("repeated {image}"));
        }
    }
    for y in &codomain {
        if !images.contains(y) {
            report.fail(y, "a preimage", "none");
        }
    }
    report.detail = format!(
        "{} domain elements onto {} targets",
        domain.len(),
        codomain.len()
    );
    Ok(report)
}

/// Runs [`check_bijection`] for every map at every defined `(n, k)` cell with
/// `n <= n_max` and `k` in `ks`. Cells run in parallel; the output order is
/// fixed.
pub fn bijection_grid(
    n_max: i64,
    ks: RangeInclusive<i64>,
    cap: EnumCap,
) -> Result<Vec<CheckReport>, VerifyError> {
    let mut cells = Vec::new();
    for map in MapId::ALL {
        for n in 0..=n_max {
            if map.needs_k() {
                for k in ks.clone() {
                    if map.defined_at(n, Some(k)).is_ok() {
                        cells.push((map, n, Some(k)));
                    }
                }
            } else if map.defined_at(n, None).is_ok() {
                cells.push((map, n, None));
            }
        }
    }
    cells
        .into_par_iter()
        .map(|(map, n, k)| check_bijection(map, n, k, cap))
        .collect()
}

// ---------------------------------------------------------------------------
// Cycle census

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Permutation {
    U,
    V,
}

impl Permutation {
    pub fn apply(self, c: &Composition) -> Composition {
        match self {
            Permutation::U => u_forward(c),
            Permutation::V => v_forward(c),
        }
    }

    pub fn fixed_family(self) -> FamilyId {
        match self {
            Permutation::U => FamilyId::UFixed,
            Permutation::V => FamilyId::VFixed,
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Permutation::U => "U",
            Permutation::V => "V",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleCensus {
    pub n: u32,
    pub permutation: Permutation,
    /// Cycle length to number of cycles of that length.
    pub cycle_type: BTreeMap<usize, u64>,
    pub fixed_point_count: BigUint,
}

impl CycleCensus {
    /// Sum of all cycle lengths; equals `2^(n-1)` for a permutation of `C(n)`.
    pub fn total(&self) -> u64 {
        self.cycle_type
            .iter()
            .map(|(&len, &mult)| len as u64 * mult)
            .sum()
    }
}

/// Decomposes the permutation of `C(n)` into cycles.
pub fn cycle_census(
    permutation: Permutation,
    n: u32,
    cap: EnumCap,
) -> Result<CycleCensus, VerifyError> {
    if n == 0 {
        return Err(VerifyError::OutOfDomain {
            map: match permutation {
                Permutation::U => MapId::U,
                Permutation::V => MapId::V,
            },
            n: 0,
            k: None,
            reason: "n must be positive",
        });
    }
    cap.check(n)?;
    let all: Vec<Composition> = enumerate(GeneratorSpec::new(FamilyId::All, n)).collect();
    let index: HashMap<&Composition, usize> = all.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut seen = vec![false; all.len()];
    let mut cycle_type = BTreeMap::new();
    for start in 0..all.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0usize;
        let mut at = start;
        while !seen[at] {
            seen[at] = true;
            len += 1;
            let image = permutation.apply(&all[at]);
            at = *index.get(&image).expect("image is a composition of n");
        }
        *cycle_type.entry(len).or_insert(0u64) += 1;
    }
    let fixed = cycle_type.get(&1).copied().unwrap_or(0);
    Ok(CycleCensus {
        n,
        permutation,
        cycle_type,
        fixed_point_count: BigUint::from(fixed),
    })
}

/// For each `1 <= n <= n_max`, checks that both censuses cover `2^(n-1)`
/// compositions and that their fixed points match [`count_fixed`].
pub fn census_check(n_max: u32, cap: EnumCap) -> Result<CheckReport, VerifyError> {
    cap.check(n_max)?;
    let mut report = CheckReport::new("cycle census".to_string(), 1..=i64::from(n_max), None);
    let cells: Vec<(Permutation, u32)> = [Permutation::U, Permutation::V]
        .into_iter()
        .flat_map(|p| (1..=n_max).map(move |n| (p, n)))
        .collect();
    let censuses = cells
        .into_par_iter()
        .map(|(p, n)| cycle_census(p, n, cap))
        .collect::<Result<Vec<_>, _>>()?;
    for census in censuses {
        let label = format!("{} on C({})", census.permutation, census.n);
        report.expect_eq(
            format!("{label} size"),
            &(1u64 << (census.n - 1)),
            &census.total(),
        );
        let expected = count_fixed(i64::from(census.n), census.permutation.fixed_family())?;
        report.expect_eq(
            format!("{label} fixed points"),
            &expected,
            &census.fixed_point_count,
        );
    }
    Ok(report)
}

// ---------------------------------------------------------------------------
// Count cross-checks

/// Compares every applicable counter cell by cell on the `(n, k)` grid, plus
/// the fixed-point counters for each `n`.
pub fn cross_check_counts(
    n_max: i64,
    k_min: i64,
    k_max: i64,
    cap: EnumCap,
) -> Result<CheckReport, VerifyError> {
    cap.check(n_max.max(0) as u32)?;
    let mut report = CheckReport::new(
        "count cross-check".to_string(),
        1..=n_max,
        Some(k_min..=k_max),
    );
    let generated = |family, n: i64| count_by_generation(GeneratorSpec::new(family, n as u32), cap);
    for k in k_min..=k_max {
        for n in 1..=n_max {
            let cell = format!("a({n},{k})");
            let brute = generated(FamilyId::Arndt(k), n)?;
            report.expect_eq(format!("{cell} recurrence"), &brute, &count_arndt(n, k)?);
            if let Some(partner) = FamilyId::restricted_partner(k) {
                report.expect_eq(
                    format!("{cell} via {partner}"),
                    &brute,
                    &count_restricted_dp(n, partner)?,
                );
            }
            if k == 0 {
                report.expect_eq(format!("{cell} fibonacci"), &brute, &fibonacci(n as u64));
                report.expect_eq(
                    format!("{cell} odd parts"),
                    &brute,
                    &count_restricted_dp(n, FamilyId::OddRestricted(0))?,
                );
            }
        }
    }
    for family in [FamilyId::UFixed, FamilyId::VFixed] {
        for n in 1..=n_max {
            report.expect_eq(
                format!("{family} n={n}"),
                &generated(family, n)?,
                &count_fixed(n, family)?,
            );
        }
    }
    Ok(report)
}

// ---------------------------------------------------------------------------
// OEIS b-files

/// Parsed `index value` lines of an OEIS b-file.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BFile {
    pub terms: BTreeMap<i64, BigInt>,
}

impl BFile {
    pub fn get(&self, index: i64) -> Option<&BigInt> {
        self.terms.get(&index)
    }
}

/// Reads a b-file; blank lines and lines starting with `#` are skipped.
pub fn parse_bfile(reader: impl BufRead) -> Result<BFile, VerifyError> {
    let mut terms = BTreeMap::new();
    for (i, line) in reader.lines().enumerate() {
        let line_no = i + 1;
        let line = line.map_err(|e| VerifyError::BFile {
            line: line_no,
            reason: e.to_string(),
        })?;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let bad = |reason: &str| VerifyError::BFile {
            line: line_no,
            reason: format!("{reason}: {text:?}"),
        };
        let mut fields = text.split_whitespace();
        let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(bad("expected two fields"));
        };
        let index: i64 = index.parse().map_err(|_| bad("bad index"))?;
        let value: BigInt = value.parse().map_err(|_| bad("bad value"))?;
        if terms.insert(index, value).is_some() {
            return Err(bad("duplicate index"));
        }
    }
    Ok(BFile { terms })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OeisReport {
    pub report: CheckReport,
    /// Our `count(f, n)` is compared with b-file entry `n + offset`.
    pub offset: Option<i64>,
    pub terms_compared: usize,
}

/// OEIS entries and the families they should match.
pub const OEIS_TARGETS: [(&str, FamilyId); 5] = [
    ("A000045", FamilyId::Arndt(0)),
    ("A000045", FamilyId::OddRestricted(0)),
    ("A000931", FamilyId::UFixed),
    ("A028495", FamilyId::EvenRestricted(1)),
    ("A052535", FamilyId::OddRestricted(2)),
];

const FIT_TERMS: i64 = 5;
const FIT_RADIUS: i64 = 10;

/// Compares `sequence(family, ..)` with a b-file. With `offset = None` the
/// alignment is fitted on the first five terms and then checked on the rest.
pub fn oeis_compare(
    family: FamilyId,
    bfile: &BFile,
    offset: Option<i64>,
) -> Result<OeisReport, VerifyError> {
    let (&first, &last) = match (bfile.terms.keys().next(), bfile.terms.keys().next_back()) {
        (Some(a), Some(b)) => (a, b),
        _ => {
            return Err(VerifyError::BFile {
                line: 0,
                reason: "no terms".to_string(),
            })
        }
    };
    let n_max = (last - first + FIT_RADIUS + FIT_TERMS).max(FIT_TERMS) as u64;
    let ours: Vec<BigInt> = sequence(family, n_max)
        .into_iter()
        .map(BigInt::from)
        .collect();
    let ours_at = |n: i64| ours.get((n - 1) as usize);

    let aligns = |o: i64| {
        (1..=FIT_TERMS).all(|n| match (bfile.get(n + o), ours_at(n)) {
            (Some(b), Some(a)) => a == b,
            _ => false,
        })
    };
    let fitted = offset.filter(|&o| aligns(o)).or_else(|| {
        if offset.is_some() {
            return None;
        }
        let mut candidates: Vec<i64> = (-FIT_RADIUS..=FIT_RADIUS).collect();
        candidates.sort_by_key(|o| (o.abs(), *o));
        candidates.into_iter().find(|&o| aligns(o))
    });

    let mut report = CheckReport::new(format!("{family} vs b-file"), 1..=n_max as i64, None);
    let Some(o) = fitted else {
        report.fail("first 5 terms", "an index alignment", "none found");
        return Ok(OeisReport {
            report,
            offset: None,
            terms_compared: 0,
        });
    };
    let mut compared = 0;
    for (&index, value) in &bfile.terms {
        let n = index - o;
        if n < 1 {
            continue;
        }
        let Some(a) = ours_at(n) else { break };
        compared += 1;
        report.expect_eq(format!("b-file index {index} (n = {n})"), value, a);
    }
    report.n_range = 1..=(last - o);
    report.detail = format!("offset {o}, {compared} terms");
    Ok(OeisReport {
        report,
        offset: Some(o),
        terms_compared: compared,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bijection_examples() {
        let cap = EnumCap::DEFAULT;
        let r = check_bijection(MapId::ArndtToOdd, 6, None, cap).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.checked, 8);

        let r = check_bijection(MapId::EvenLengthStep, 6, Some(-1), cap).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.checked, 12);
        assert_eq!(r.detail, "12 domain elements onto 12 targets");

        let r = check_bijection(MapId::U, 5, None, cap).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!((r.checked, r.failure_count), (16, 0));
    }

    #[test]
    fn map_id_errors() {
        assert_eq!(
            "nope".parse::<MapId>(),
            Err(VerifyError::UnknownMap("nope".into()))
        );
        assert_eq!(
            check_bijection(MapId::OddLengthStep, 5, None, EnumCap::DEFAULT),
            Err(VerifyError::MissingK(MapId::OddLengthStep))
        );
        assert!(matches!(
            check_bijection(MapId::U, 30, None, EnumCap::DEFAULT),
            Err(VerifyError::Generate(_))
        ));
    }

    #[test]
    fn census_examples() {
        let cap = EnumCap::DEFAULT;
        let c = cycle_census(Permutation::U, 5, cap).unwrap();
        assert_eq!(c.fixed_point_count, BigUint::from(1u32));
        assert_eq!(c.total(), 16);
        let c = cycle_census(Permutation::V, 5, cap).unwrap();
        assert_eq!(c.fixed_point_count, BigUint::from(1u32));
        assert!(census_check(10, cap).unwrap().passed());
        let c = cycle_census(Permutation::U, 1, cap).unwrap();
        assert_eq!(c.cycle_type, BTreeMap::from([(1, 1)]));
        assert!(cycle_census(Permutation::U, 0, cap).is_err());
    }

    #[test]
    fn cross_check_examples() {
        let cap = EnumCap::DEFAULT;
        let r = cross_check_counts(10, -3, 3, cap).unwrap();
        assert!(r.passed(), "{r}");
        let r = cross_check_counts(1, -1, -1, cap).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn bfile_parsing() {
        let text = "# comment\n0 0\n1 1\n\n2 1\n";
        let b = parse_bfile(text.as_bytes()).unwrap();
        assert_eq!(b.terms.len(), 3);
        let err = parse_bfile("0 0\n1 x\n".as_bytes()).unwrap_err();
        assert!(matches!(err, VerifyError::BFile { line: 2, .. }));
        let err = parse_bfile("0 0 0\n".as_bytes()).unwrap_err();
        assert!(matches!(err, VerifyError::BFile { line: 1, .. }));
    }

    #[test]
    fn oeis_offset_is_fitted() {
        // Padovan with its usual indexing: 1, 0, 0, 1, 0, 1, 1, 1, 2, ...
        let mut p = vec![1u64, 0, 0];
        while p.len() < 40 {
            let m = p.len();
            p.push(p[m - 2] + p[m - 3]);
        }
        let text: String = p
            .iter()
            .enumerate()
            .map(|(i, v)| format!("{i} {v}\n"))
            .collect();
        let b = parse_bfile(text.as_bytes()).unwrap();
        let r = oeis_compare(FamilyId::UFixed, &b, None).unwrap();
        assert!(r.report.passed(), "{}", r.report);
        assert_eq!(r.offset, Some(2));
        assert_eq!(r.terms_compared, 37);

        let r = oeis_compare(FamilyId::Arndt(0), &b, None).unwrap();
        assert!(!r.report.passed());
        assert_eq!(r.offset, None);
    }
}
