//! Random serial dictatorship in the voting setting.
//!
//! Agents act in order; each narrows the surviving alternatives to the ones
//! it likes best among them. Under a uniformly random order this induces a
//! lottery whose values are multiples of `1/n!`.

mod exact;
mod sample;
mod sd;
mod support;
mod threshold;

pub use exact::{permutation_counts_enum, permutation_counts_memo, rsd_exact_enum, rsd_exact_memo};
pub use sample::{rsd_sample, SampleReport, SAMPLE_GENERATOR};
pub use sd::{sd, sd_prefix, sd_trace};
pub use support::{support, support_member, SupportWitness};
pub use threshold::{binary_search_probability, max_queries, probability_at_least, ThresholdSearch};
