use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::math::{factorial, factorials};
use crate::permutation::Permutation;
use crate::rational::{self, Rational};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};
use std::collections::HashMap;

use super::problem::{sd_assign_into, AssignmentProblem};

/// `p[i][h]`: probability that agent `i` receives house `h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionalAssignment {
    pub agents: Vec<String>,
    pub houses: Vec<String>,
    pub cells: Vec<Vec<Rational>>,
}

impl FractionalAssignment {
    fn from_counts(problem: &AssignmentProblem, counts: &[Vec<BigUint>]) -> Self {
        let total = factorial(problem.len());
        FractionalAssignment {
            agents: problem.names().to_vec(),
            houses: problem.houses().to_vec(),
            cells: counts
                .iter()
                .map(|row| row.iter().map(|c| rational::from_ratio(c, &total)).collect())
                .collect(),
        }
    }

    pub fn get(&self, agent: usize, house: usize) -> &Rational {
        &self.cells[agent][house]
    }

    pub fn row_sums(&self) -> Vec<Rational> {
        self.cells.iter().map(|row| row.iter().sum()).collect()
    }

    pub fn column_sums(&self) -> Vec<Rational> {
        (0..self.houses.len())
            .map(|h| self.cells.iter().map(|row| &row[h]).sum())
            .collect()
    }

    pub fn is_doubly_stochastic(&self) -> bool {
        let zero = Rational::zero();
        let one = Rational::one();
        self.cells.iter().flatten().all(|p| *p >= zero && *p <= one)
            && self.row_sums().iter().all(|s| *s == one)
            && self.column_sums().iter().all(|s| *s == one)
    }

    pub fn to_json_value(&self) -> Value {
        json!({
            "agents": self.agents,
            "houses": self.houses,
            "matrix": self
                .cells
                .iter()
                .map(|row| row.iter().map(rational::format).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

fn check_guard(problem: &AssignmentProblem, guard: usize) -> Result<()> {
    if problem.len() > guard {
        return Err(Error::GuardExceeded {
            n: problem.len(),
            limit: guard,
        });
    }
    Ok(())
}

/// `counts[i][h]`: orders in which agent `i` gets house `h`, over all `n!`
/// orders.
pub fn assignment_counts_enum(problem: &AssignmentProblem, guard: usize) -> Result<Vec<Vec<BigUint>>> {
    check_guard(problem, guard)?;
    let n = problem.len();
    if n == 0 {
        return Ok(vec![]);
    }
    let partial: Vec<Vec<u128>> = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut counts = vec![0u128; n * n];
            let mut rest: Vec<usize> = (0..n).filter(|&i| i != first).collect();
            let mut order = Vec::with_capacity(n);
            let mut house_of = vec![0; n];
            loop {
                order.clear();
                order.push(first);
                order.extend_from_slice(&rest);
                sd_assign_into(problem, &order, &mut house_of);
                for (i, &h) in house_of.iter().enumerate() {
                    counts[i * n + h] += 1;
                }
                if !Permutation::next_lexicographic(&mut rest) {
                    break;
                }
            }
            counts
        })
        .collect();
    Ok((0..n)
        .map(|i| {
            (0..n)
                .map(|h| partial.iter().map(|c| BigUint::from(c[i * n + h])).sum())
                .collect()
        })
        .collect())
}

/// Same counts as [`assignment_counts_enum`], from a layered pass over states
/// `(served agents, remaining houses)`. The remaining houses depend on the
/// order in which a set of agents was served, so both halves form the key.
/// A state reached by `f` orders contributes `f * (n - s - 1)!` to the cell of
/// each agent that could move next.
pub fn assignment_counts_memo(problem: &AssignmentProblem, guard: usize) -> Result<Vec<Vec<BigUint>>> {
    check_guard(problem, guard)?;
    let n = problem.len();
    let fact = factorials(n);
    let mut cells = vec![vec![BigUint::zero(); n]; n];
    let mut layer: HashMap<(BitSet, BitSet), BigUint> = HashMap::new();
    layer.insert((BitSet::empty(n), BitSet::full(n)), BigUint::one());
    for served_count in 0..n {
        let tail = &fact[n - served_count - 1];
        let mut next: HashMap<(BitSet, BitSet), BigUint> = HashMap::new();
        for ((served, remaining), ways) in layer {
            let weighted = &ways * tail;
            for i in (0..n).filter(|&i| !served.contains(i)) {
                let h = problem.best_available(i, |h| remaining.contains(h));
                cells[i][h] += &weighted;
                let mut s = served.clone();
                s.insert(i);
                *next
                    .entry((s, remaining.without(h)))
                    .or_insert_with(BigUint::zero) += &ways;
            }
        }
        layer = next;
    }
    Ok(cells)
}

pub fn rsd_assign_enum(problem: &AssignmentProblem, guard: usize) -> Result<FractionalAssignment> {
    let counts = assignment_counts_enum(problem, guard)?;
    Ok(FractionalAssignment::from_counts(problem, &counts))
}

pub fn rsd_assign_memo(problem: &AssignmentProblem, guard: usize) -> Result<FractionalAssignment> {
    let counts = assignment_counts_memo(problem, guard)?;
    Ok(FractionalAssignment::from_counts(problem, &counts))
}

/// Exact fractional assignment. Tiny instances (`n <= 4`) are enumerated;
/// larger ones go through the state recursion.
pub fn rsd_assign_exact(problem: &AssignmentProblem, guard: usize) -> Result<FractionalAssignment> {
    if problem.len() <= 4 {
        rsd_assign_enum(problem, guard)
    } else {
        rsd_assign_memo(problem, guard)
    }
}
