//! Random serial dictatorship (RSD) toolkit.
//!
//! The crate computes RSD lotteries in the voting setting (weak orders over
//! abstract alternatives) and RSD fractional assignments in the house
//! allocation setting, both exactly (as rationals with denominator dividing
//! `n!`) and by seeded sampling. It also decides support membership in
//! polynomial time and ships the counting reductions from set covers and
//! matchable agent subsets to RSD probabilities, together with brute-force
//! oracles that cross-check the recovered counts.
//!
//! Agents and alternatives are positional: agent `i` is the `i`-th entry of a
//! profile (0-based in the API, 1-based in user-facing output).

pub mod assignment;
pub mod bitset;
pub mod error;
pub mod lottery;
pub mod permutation;
pub mod preference;
pub mod profile;
pub mod rational;
pub mod reductions;
pub mod voting;

mod math;

pub use bitset::BitSet;
pub use error::{Error, Result};
pub use lottery::Lottery;
pub use permutation::Permutation;
pub use preference::{max_set, Alternative, PreferenceRelation};
pub use profile::{pareto_dominated, parse_profile, validate_profile, Profile};
pub use rational::Rational;

/// Default upper bound on the number of agents for factorial enumeration.
pub const DEFAULT_ENUM_GUARD: usize = 10;

/// Default upper bound on the number of agents for the assignment state
/// recursion.
pub const DEFAULT_MEMO_GUARD: usize = 24;

/// Environment variable that overrides [`DEFAULT_ENUM_GUARD`] in the CLI.
pub const GUARD_ENV_VAR: &str = "RSDKIT_GUARD_N";
