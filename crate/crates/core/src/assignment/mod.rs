//! Random serial dictatorship for house allocation: `n` agents with linear
//! rankings over `n` houses; in a uniformly random order each agent takes its
//! favourite remaining house.

mod exact;
mod problem;
mod sample;
mod support;

pub use exact::{
    assignment_counts_enum, assignment_counts_memo, rsd_assign_enum, rsd_assign_exact,
    rsd_assign_memo, FractionalAssignment,
};
pub use problem::{
    parse_assignment_problem, sd_assign, AgentRankingDoc, AssignmentDoc, AssignmentProblem,
    DeterministicAssignment,
};
pub use sample::{rsd_assign_sample, AssignmentSample};
pub use support::assignment_support_member;
