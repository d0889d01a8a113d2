//! Enumeration, exact counting and explicit bijections for integer
//! compositions with pairwise part conditions.
//!
//! The central family is `A(n, k)`: compositions `(c_1, ..., c_t)` of `n`
//! with `c_(2i-1) > c_(2i) + k` for every full pair. `k = 0` gives the Arndt
//! compositions, counted by the Fibonacci numbers. For `k < 0` the
//! permutations [`bijection::u_forward`] and [`bijection::v_forward`] carry
//! `A(n, k)` onto compositions with restricted part sets.
//!
//! ```
//! use complab::{enumerate, FamilyId, GeneratorSpec};
//!
//! let listing: Vec<String> = enumerate(GeneratorSpec::new(FamilyId::Arndt(0), 4))
//!     .map(|c| c.to_string())
//!     .collect();
//! assert_eq!(listing, ["4", "31", "211"]);
//! ```

pub mod bijection;
pub mod composition;
pub mod count;
pub mod family;
pub mod generate;
pub mod verify;

pub use composition::{
    h_statistic, make_composition, pair_view, run_decompose, Closer, Composition, CompositionError,
    PairView, RunBlock, TextStyle,
};
pub use family::{is_member, membership_violation, FamilyError, FamilyId};
pub use generate::{count_by_generation, enumerate, EnumCap, GenerateError, GeneratorSpec};
