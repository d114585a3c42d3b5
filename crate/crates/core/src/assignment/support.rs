use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::permutation::Permutation;

use super::problem::{AssignmentProblem, DeterministicAssignment};

/// Finds an order under which serial dictatorship yields `sigma`, if any.
///
/// Repeatedly serve the smallest-index unserved agent whose `sigma` house is
/// its favourite among the houses still available. Serving such an agent
/// early never hurts: it only removes a house nobody else is meant to get.
pub fn assignment_support_member(
    problem: &AssignmentProblem,
    sigma: &DeterministicAssignment,
) -> Result<Option<Permutation>> {
    let n = problem.len();
    if sigma.len() != n {
        return Err(Error::NotABijection(format!(
            "assignment covers {} agents, problem has {n}",
            sigma.len()
        )));
    }
    let mut available = BitSet::full(n);
    let mut unserved = BitSet::full(n);
    let mut order = Vec::with_capacity(n);
    while !unserved.is_empty() {
        let next = unserved
            .iter()
            .find(|&i| problem.best_available(i, |h| available.contains(h)) == sigma.house_of(i));
        let Some(i) = next else {
            return Ok(None);
        };
        unserved.remove(i);
        available.remove(sigma.house_of(i));
        order.push(i);
    }
    Ok(Some(Permutation::new(order).expect("each agent served once")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assignment::sd_assign;

    #[test]
    fn both_take_tops() {
        let p = AssignmentProblem::from_rankings(vec![vec![0, 1], vec![1, 0]]).unwrap();
        let sigma = DeterministicAssignment::new(vec![0, 1]).unwrap();
        let w = assignment_support_member(&p, &sigma).unwrap().unwrap();
        assert_eq!(w.as_slice(), &[0, 1]);
    }

    #[test]
    fn second_agent_must_go_first() {
        let p = AssignmentProblem::from_rankings(vec![vec![0, 1], vec![0, 1]]).unwrap();
        let sigma = DeterministicAssignment::new(vec![1, 0]).unwrap();
        let w = assignment_support_member(&p, &sigma).unwrap().unwrap();
        assert_eq!(w.as_slice(), &[1, 0]);
        assert_eq!(sd_assign(&p, &w).unwrap(), sigma);
    }

    #[test]
    fn unreachable_assignment() {
        // 1: h1>h2>h3, 2: h2>h1>h3, 3: h1>h3>h2. Agent 2 on h3 needs h2 gone
        // first (to 3), and agent 3 on h2 needs h3 gone first (to 2).
        let p = AssignmentProblem::from_rankings(vec![vec![0, 1, 2], vec![1, 0, 2], vec![0, 2, 1]])
            .unwrap();
        let sigma = DeterministicAssignment::new(vec![0, 2, 1]).unwrap();
        assert_eq!(assignment_support_member(&p, &sigma).unwrap(), None);
    }

    #[test]
    fn size_mismatch() {
        let p = AssignmentProblem::from_rankings(vec![vec![0, 1], vec![0, 1]]).unwrap();
        let sigma = DeterministicAssignment::new(vec![0]).unwrap();
        assert!(assignment_support_member(&p, &sigma).is_err());
    }
}
