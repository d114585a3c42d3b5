use crate::assignment::{rsd_assign_exact, AssignmentProblem};
use crate::error::{Error, Result};
use crate::math::factorials;
use crate::rational::{self, Rational};
use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use serde_json::{json, Value};

use super::bipartite::count_better_subsets;
use super::factorial::det_nonzero;
use super::linear::{integral_counts, FactorialSystem};

/// `G_k`: appends `k` clones of `agent` and `k` dummy houses. Every agent
/// ranks the dummies below all original houses, in label order; clones copy
/// `agent`'s ranking of the original houses.
pub fn build_assignment_reduction(
    problem: &AssignmentProblem,
    agent: usize,
    k: usize,
) -> Result<AssignmentProblem> {
    let n = problem.len();
    if agent >= n {
        return Err(Error::UnknownAgent(format!("#{}", agent + 1)));
    }
    let mut houses = problem.houses().to_vec();
    let mut names = problem.names().to_vec();
    for d in 1..=k {
        let mut label = format!("d{d}");
        while houses.contains(&label) {
            label.push('*');
        }
        houses.push(label);
        let mut name = format!("{}#{d}", problem.names()[agent]);
        while names.contains(&name) {
            name.push('*');
        }
        names.push(name);
    }
    let dummies: Vec<usize> = (n..n + k).collect();
    let mut rankings: Vec<Vec<usize>> = problem
        .rankings()
        .iter()
        .map(|r| r.iter().chain(&dummies).copied().collect())
        .collect();
    let clone = rankings[agent].clone();
    rankings.extend(std::iter::repeat_n(clone, k));
    AssignmentProblem::new(houses, names, rankings)
}

/// `s_j`: `j`-subsets of the agents other than `agent` that can each be
/// given a distinct house they prefer to `agent`'s top house.
pub fn count_feasible_subsets_bruteforce(
    problem: &AssignmentProblem,
    agent: usize,
    j: usize,
    guard: usize,
) -> Result<u64> {
    if agent >= problem.len() {
        return Err(Error::UnknownAgent(format!("#{}", agent + 1)));
    }
    count_better_subsets(
        problem.rankings(),
        problem.len(),
        problem.top(agent),
        Some(agent),
        j,
        guard,
    )
}

/// `s_0..s_{n-1}`.
pub fn feasible_subset_counts(problem: &AssignmentProblem, agent: usize, guard: usize) -> Result<Vec<u64>> {
    (0..problem.len())
        .map(|j| count_feasible_subsets_bruteforce(problem, agent, j, guard))
        .collect()
}

/// The `n x n` system for `s_{n-1}..s_0` (in that order). Row `k` (from 0)
/// has entries `(n-1-t)! (t+k)!` and right-hand side `p(G_k) (n+k)!`.
pub fn assignment_system(probs: &[Rational]) -> Result<FactorialSystem> {
    let n = probs.len();
    if n == 0 {
        return Err(Error::InvalidInstance("no probabilities given".into()));
    }
    let fact = factorials(2 * n);
    let matrix: Vec<Vec<BigInt>> = (0..n)
        .map(|k| {
            (0..n)
                .map(|t| BigInt::from(&fact[n - 1 - t] * &fact[t + k]))
                .collect()
        })
        .collect();
    let rhs = probs
        .iter()
        .enumerate()
        .map(|(k, p)| p * Rational::from_integer(BigInt::from(fact[n + k].clone())))
        .collect();
    let (nonsingular, _) = det_nonzero(&matrix)?;
    if !nonsingular {
        return Err(Error::Singular);
    }
    let unknowns = (0..n).rev().map(|j| format!("s_{j}")).collect();
    FactorialSystem::new(matrix, rhs, unknowns)
}

/// Solves for `s_0..s_{n-1}` from `p(G_0)..p(G_{n-1})`.
pub fn recover_s_counts(probs: &[Rational]) -> Result<Vec<BigUint>> {
    let mut counts = assignment_system(probs)?.solve_counts()?;
    counts.reverse();
    Ok(counts)
}

#[derive(Debug, Clone)]
pub struct AssignmentRecovery {
    pub agent: usize,
    pub house: usize,
    /// `p_{ih}(G_k)` for `k = 0..n-1`.
    pub probabilities: Vec<Rational>,
    pub system: FactorialSystem,
    /// Exact solution in the system's unknown order (`s_{n-1}..s_0`).
    pub solution: Vec<Rational>,
    /// `s_0..s_{n-1}`, or the integrity error.
    pub recovered: Result<Vec<BigUint>>,
    /// Brute-force `s_0..s_{n-1}`.
    pub brute_force: Vec<u64>,
}

impl AssignmentRecovery {
    pub fn matches(&self) -> bool {
        match &self.recovered {
            Ok(s) => s.iter().zip(&self.brute_force).all(|(x, &b)| *x == BigUint::from(b)),
            Err(_) => false,
        }
    }

    pub fn to_json_value(&self) -> Value {
        let n = self.brute_force.len();
        let rows: Vec<Value> = (0..n)
            .map(|j| {
                json!({
                    "unknown": format!("s_{j}"),
                    "exact": rational::format(&self.solution[n - 1 - j]),
                    "recovered": self.recovered.as_ref().ok().map(|s| s[j].to_string()),
                    "brute_force": self.brute_force[j].to_string(),
                })
            })
            .collect();
        json!({
            "probabilities": self.probabilities.iter().map(rational::format).collect::<Vec<_>>(),
            "system": self.system.to_json_value(),
            "solution": self.solution.iter().map(rational::format).collect::<Vec<_>>(),
            "counts": rows,
            "error": self.recovered.as_ref().err().map(|e| e.to_string()),
            "match": self.matches(),
        })
    }
}

/// Computes `p_{ih}(G_k)` exactly for `k = 0..n-1`, solves for `s_j` and
/// brute-forces `s_j` for comparison.
pub fn assignment_recovery(problem: &AssignmentProblem, agent: usize, guard: usize) -> Result<AssignmentRecovery> {
    let n = problem.len();
    let brute_force = feasible_subset_counts(problem, agent, guard)?;
    let house = problem.top(agent);
    let probabilities = (0..n)
        .into_par_iter()
        .map(|k| {
            let g = build_assignment_reduction(problem, agent, k)?;
            Ok(rsd_assign_exact(&g, guard)?.get(agent, house).clone())
        })
        .collect::<Result<Vec<_>>>()?;
    let system = assignment_system(&probabilities)?;
    let solution = system.solve()?;
    let recovered = integral_counts(&solution, &system.unknowns).map(|mut s| {
        s.reverse();
        s
    });
    Ok(AssignmentRecovery {
        agent,
        house,
        probabilities,
        system,
        solution,
        recovered,
        brute_force,
    })
}
