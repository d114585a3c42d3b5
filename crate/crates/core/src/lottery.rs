use crate::math::factorial;
use crate::preference::Alternative;
use crate::rational::{self, Rational};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde_json::{json, Map, Value};

/// Exact probability distribution over a profile's alternatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lottery {
    alternatives: Vec<Alternative>,
    probabilities: Vec<Rational>,
    /// Number of agents whose orders generated the lottery, if known.
    agents: Option<usize>,
}

impl Lottery {
    /// Lottery from integer permutation counts; `counts` must sum to `n!`.
    pub fn from_counts(alternatives: Vec<Alternative>, counts: &[BigUint], agents: usize) -> Self {
        debug_assert_eq!(alternatives.len(), counts.len());
        let total = factorial(agents);
        let probabilities = counts
            .iter()
            .map(|c| rational::from_ratio(c, &total))
            .collect();
        Lottery {
            alternatives,
            probabilities,
            agents: Some(agents),
        }
    }

    pub fn from_probabilities(alternatives: Vec<Alternative>, probabilities: Vec<Rational>) -> Self {
        Lottery {
            alternatives,
            probabilities,
            agents: None,
        }
    }

    pub fn alternatives(&self) -> &[Alternative] {
        &self.alternatives
    }

    pub fn probabilities(&self) -> &[Rational] {
        &self.probabilities
    }

    pub fn probability(&self, a: usize) -> &Rational {
        &self.probabilities[a]
    }

    pub fn get(&self, label: &str) -> Option<&Rational> {
        self.alternatives
            .iter()
            .position(|a| a.as_str() == label)
            .map(|i| &self.probabilities[i])
    }

    /// Indices with positive probability.
    pub fn support(&self) -> Vec<usize> {
        (0..self.probabilities.len())
            .filter(|&i| self.probabilities[i] > Rational::zero())
            .collect()
    }

    pub fn total(&self) -> Rational {
        self.probabilities.iter().sum()
    }

    /// Probabilities in `[0,1]` summing to exactly one, and multiples of
    /// `1/n!` when the agent count is known.
    pub fn is_valid(&self) -> bool {
        let in_range = self
            .probabilities
            .iter()
            .all(|p| *p >= Rational::zero() && *p <= Rational::one());
        let scaled_integral = match self.agents {
            Some(n) => {
                let nf = Rational::from_integer(factorial(n).into());
                self.probabilities.iter().all(|p| (p * &nf).is_integer())
            }
            None => true,
        };
        in_range && scaled_integral && self.total() == Rational::one()
    }

    /// `{"lottery": {label: "num/den"}, "denominator_check": "<n!>"}`
    pub fn to_json_value(&self) -> Value {
        let mut map = Map::new();
        for (a, p) in self.alternatives.iter().zip(&self.probabilities) {
            map.insert(a.to_string(), Value::String(rational::format(p)));
        }
        let mut out = json!({ "lottery": Value::Object(map) });
        if let Some(n) = self.agents {
            out["denominator_check"] = Value::String(factorial(n).to_string());
        }
        out
    }
}
