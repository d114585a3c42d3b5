use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::voting::SAMPLE_GENERATOR;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::problem::{sd_assign_into, AssignmentProblem};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssignmentSample {
    pub agents: Vec<String>,
    pub houses: Vec<String>,
    /// `counts[i][h]`: draws in which agent `i` received house `h`.
    pub counts: Vec<Vec<u64>>,
    pub total: u64,
    pub seed: u64,
    pub generator: &'static str,
}

impl AssignmentSample {
    pub fn estimate(&self) -> Vec<Vec<Rational>> {
        self.counts
            .iter()
            .map(|row| row.iter().map(|&c| rational::from_u64(c, self.total)).collect())
            .collect()
    }

    pub fn to_json_value(&self) -> Value {
        json!({
            "agents": self.agents,
            "houses": self.houses,
            "counts": self.counts,
            "estimate": self
                .estimate()
                .iter()
                .map(|row| row.iter().map(rational::format).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "total": self.total,
            "seed": self.seed,
            "generator": self.generator,
        })
    }
}

pub fn rsd_assign_sample(problem: &AssignmentProblem, total: u64, seed: u64) -> Result<AssignmentSample> {
    if total == 0 {
        return Err(Error::ZeroSamples);
    }
    let n = problem.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    let mut house_of = vec![0; n];
    let mut counts = vec![vec![0u64; n]; n];
    for _ in 0..total {
        order.shuffle(&mut rng);
        sd_assign_into(problem, &order, &mut house_of);
        for (i, &h) in house_of.iter().enumerate() {
            counts[i][h] += 1;
        }
    }
    Ok(AssignmentSample {
        agents: problem.names().to_vec(),
        houses: problem.houses().to_vec(),
        counts,
        total,
        seed,
        generator: SAMPLE_GENERATOR,
    })
}
