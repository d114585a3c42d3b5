use crate::error::{Error, Result};
use crate::preference::Alternative;
use crate::profile::Profile;
use crate::rational::{self, Rational};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use super::sd::sd_outcome;

/// Generator family behind every sampler in the crate. Counts are
/// reproducible for a fixed seed as long as this string is unchanged.
pub const SAMPLE_GENERATOR: &str = "chacha8/rand_chacha-0.3/fisher-yates";

/// Monte Carlo tally of serial dictatorship outcomes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleReport {
    pub alternatives: Vec<Alternative>,
    pub counts: Vec<u64>,
    pub total: u64,
    pub seed: u64,
    pub generator: &'static str,
}

impl SampleReport {
    pub fn estimate(&self) -> Vec<Rational> {
        self.counts
            .iter()
            .map(|&c| rational::from_u64(c, self.total))
            .collect()
    }

    pub fn to_json_value(&self) -> Value {
        let mut counts = Map::new();
        let mut estimate = Map::new();
        for ((a, c), e) in self.alternatives.iter().zip(&self.counts).zip(self.estimate()) {
            counts.insert(a.to_string(), json!(c));
            estimate.insert(a.to_string(), Value::String(rational::format(&e)));
        }
        json!({
            "counts": counts,
            "estimate": estimate,
            "total": self.total,
            "seed": self.seed,
            "generator": self.generator,
        })
    }
}

/// Draws `total` uniform orders with a seeded shuffle and tallies outcomes.
pub fn rsd_sample(profile: &Profile, total: u64, seed: u64) -> Result<SampleReport> {
    if total == 0 {
        return Err(Error::ZeroSamples);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..profile.num_agents()).collect();
    let mut counts = vec![0u64; profile.num_alternatives()];
    for _ in 0..total {
        order.shuffle(&mut rng);
        counts[sd_outcome(profile, &order)] += 1;
    }
    Ok(SampleReport {
        alternatives: profile.alternatives().to_vec(),
        counts,
        total,
        seed,
        generator: SAMPLE_GENERATOR,
    })
}
