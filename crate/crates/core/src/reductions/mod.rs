//! Counting reductions to RSD probabilities, run forward at desk scale.
//!
//! * Voting: from a set-cover instance, profiles `R^1..R^n` whose probability
//!   of a fresh alternative `a` determines the number `x_j` of size-`j` covers
//!   through a factorial linear system.
//! * Assignment: from a house allocation problem and agent `i`, the problems
//!   `G_0..G_{n-1}` (with `k` clones of `i` and `k` dummy houses) whose
//!   probability of `i` getting its top house feeds a system for `s_j`.
//!
//! Both systems are row/column rescalings of the matrix `((i+j-2)!)`, whose
//! determinant is nonzero, and are solved exactly. Brute-force counters check
//! the recovered values.

mod bipartite;
mod factorial;
mod house;
mod linear;
mod set_cover;

pub use bipartite::{
    bipartite_to_assignment, has_saturating_matching, matchable_subsets_bruteforce,
    parse_bipartite, BipartiteDoc, BipartiteInstance, HouseFragment,
};
pub use factorial::{det_nonzero, determinant, pascal_matrix};
pub use house::{
    assignment_recovery, assignment_system, build_assignment_reduction,
    count_feasible_subsets_bruteforce, feasible_subset_counts, recover_s_counts,
    AssignmentRecovery,
};
pub use linear::{FactorialSystem, IntMatrix};
pub use set_cover::{
    build_voting_reduction, count_set_covers_bruteforce, parse_set_cover, recover_cover_counts,
    set_cover_recovery, voting_system_rhs, SetCoverDoc, SetCoverInstance, VotingRecovery,
};

/// Default limit on the number of sets / agents for subset enumeration.
pub const BRUTE_FORCE_GUARD: usize = 20;
