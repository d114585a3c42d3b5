use crate::bitset::BitSet;
use crate::error::Result;
use crate::permutation::Permutation;
use crate::profile::Profile;

/// A permutation under which serial dictatorship selects the queried
/// alternative, with the surviving set after each dictator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportWitness {
    pub permutation: Permutation,
    pub trace: Vec<(usize, BitSet)>,
}

/// Decides whether `a` has positive RSD probability.
///
/// Greedy: while agents remain, pick the smallest-index remaining agent that
/// still counts `a` among its favourites in the surviving set and let it
/// narrow the set. If no remaining agent does, `a` is not in the support.
/// Once `a` is the only survivor every agent qualifies, so the witness
/// finishes with the leftover agents in ascending order.
pub fn support_member(profile: &Profile, a: usize) -> Result<Option<SupportWitness>> {
    profile.check_alternative(a)?;
    let n = profile.num_agents();
    let mut remaining = BitSet::full(n);
    let mut alive = BitSet::full(profile.num_alternatives());
    let mut order = Vec::with_capacity(n);
    let mut trace = Vec::with_capacity(n);
    while !remaining.is_empty() {
        let pick = remaining.iter().find_map(|i| {
            let top = profile.relation(i).max_set(&alive).ok()?;
            top.contains(a).then_some((i, top))
        });
        let Some((i, top)) = pick else {
            return Ok(None);
        };
        remaining.remove(i);
        alive = top;
        order.push(i);
        trace.push((i, alive.clone()));
    }
    if alive.single() != Some(a) {
        return Ok(None);
    }
    Ok(Some(SupportWitness {
        permutation: Permutation::new(order).expect("each agent placed once"),
        trace,
    }))
}

/// Alternatives with positive RSD probability, ascending.
pub fn support(profile: &Profile) -> Vec<usize> {
    (0..profile.num_alternatives())
        .filter(|&a| matches!(support_member(profile, a), Ok(Some(_))))
        .collect()
}
