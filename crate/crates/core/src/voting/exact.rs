use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::lottery::Lottery;
use crate::math::factorials;
use crate::permutation::Permutation;
use crate::profile::Profile;
use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;
use std::collections::HashMap;
use std::rc::Rc;

use super::sd::sd_outcome;

/// Number of permutations selecting each alternative, by visiting all `n!`
/// orders. Work is split by first dictator across threads.
pub fn permutation_counts_enum(profile: &Profile, guard: usize) -> Result<Vec<BigUint>> {
    let n = profile.num_agents();
    let m = profile.num_alternatives();
    if n > guard {
        return Err(Error::GuardExceeded { n, limit: guard });
    }
    if n == 0 {
        let mut counts = vec![BigUint::zero(); m];
        counts[sd_outcome(profile, &[])] = 1u32.into();
        return Ok(counts);
    }
    let partial: Vec<Vec<u128>> = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut counts = vec![0u128; m];
            let mut rest: Vec<usize> = (0..n).filter(|&i| i != first).collect();
            let mut order = Vec::with_capacity(n);
            loop {
                order.clear();
                order.push(first);
                order.extend_from_slice(&rest);
                counts[sd_outcome(profile, &order)] += 1;
                if !Permutation::next_lexicographic(&mut rest) {
                    break;
                }
            }
            counts
        })
        .collect();
    Ok((0..m)
        .map(|a| partial.iter().map(|c| BigUint::from(c[a])).sum())
        .collect())
}

/// Exact lottery by enumerating every permutation of at most `guard` agents.
pub fn rsd_exact_enum(profile: &Profile, guard: usize) -> Result<Lottery> {
    let counts = permutation_counts_enum(profile, guard)?;
    Ok(Lottery::from_counts(
        profile.alternatives().to_vec(),
        &counts,
        profile.num_agents(),
    ))
}

/// Permutation counts by memoized recursion over (surviving alternatives,
/// remaining agents). The count vector of a state is the sum over the next
/// dictator `i` of the state `(max_i(alive), agents - i)`; once one
/// alternative survives, every order of the remaining agents selects it.
pub fn permutation_counts_memo(profile: &Profile) -> Vec<BigUint> {
    let mut memo = Memo {
        profile,
        fact: factorials(profile.num_agents()),
        table: HashMap::new(),
    };
    let counts = memo.counts(
        &BitSet::full(profile.num_alternatives()),
        &BitSet::full(profile.num_agents()),
    );
    counts.as_ref().clone()
}

pub fn rsd_exact_memo(profile: &Profile) -> Lottery {
    let counts = permutation_counts_memo(profile);
    Lottery::from_counts(profile.alternatives().to_vec(), &counts, profile.num_agents())
}

struct Memo<'a> {
    profile: &'a Profile,
    fact: Vec<BigUint>,
    table: HashMap<(BitSet, BitSet), Rc<Vec<BigUint>>>,
}

impl Memo<'_> {
    fn counts(&mut self, alive: &BitSet, agents: &BitSet) -> Rc<Vec<BigUint>> {
        let m = self.profile.num_alternatives();
        if let Some(a) = alive.single() {
            let mut out = vec![BigUint::zero(); m];
            out[a] = self.fact[agents.len()].clone();
            return Rc::new(out);
        }
        let key = (alive.clone(), agents.clone());
        if let Some(hit) = self.table.get(&key) {
            return Rc::clone(hit);
        }
        assert!(
            !agents.is_empty(),
            "validated profile cannot leave several alternatives after all agents"
        );
        let mut out = vec![BigUint::zero(); m];
        for i in agents.iter() {
            let next = self
                .profile
                .relation(i)
                .max_set(alive)
                .expect("surviving set is never empty");
            let sub = self.counts(&next, &agents.without(i));
            for (acc, c) in out.iter_mut().zip(sub.iter()) {
                if !c.is_zero() {
                    *acc += c;
                }
            }
        }
        let out = Rc::new(out);
        self.table.insert(key, Rc::clone(&out));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::preference::PreferenceRelation;
    use crate::rational::from_u64;

    fn lin(order: &[usize]) -> PreferenceRelation {
        PreferenceRelation::linear(order).unwrap()
    }

    #[test]
    fn opposed_pair_is_fair_coin() {
        let p = Profile::from_relations(&["a", "b"], vec![lin(&[0, 1]), lin(&[1, 0])]).unwrap();
        for l in [rsd_exact_enum(&p, 10).unwrap(), rsd_exact_memo(&p)] {
            assert_eq!(l.get("a").unwrap(), &from_u64(1, 2));
            assert_eq!(l.get("b").unwrap(), &from_u64(1, 2));
        }
    }

    #[test]
    fn tie_broken_toward_second_agent() {
        // 1: {a,b} > {c}, 2: b > a > c
        let p = Profile::from_relations(
            &["a", "b", "c"],
            vec![
                PreferenceRelation::new(vec![vec![0, 1], vec![2]], 3).unwrap(),
                lin(&[1, 0, 2]),
            ],
        )
        .unwrap();
        let l = rsd_exact_enum(&p, 10).unwrap();
        assert_eq!(l.get("b").unwrap(), &from_u64(1, 1));
        assert_eq!(l, rsd_exact_memo(&p));
    }

    #[test]
    fn distinct_tops_are_uniform() {
        let p = Profile::from_relations(
            &["a", "b", "c"],
            vec![lin(&[0, 1, 2]), lin(&[1, 2, 0]), lin(&[2, 0, 1])],
        )
        .unwrap();
        let l = rsd_exact_enum(&p, 10).unwrap();
        for x in ["a", "b", "c"] {
            assert_eq!(l.get(x).unwrap(), &from_u64(1, 3));
        }
    }

    #[test]
    fn single_dictator() {
        let p = Profile::from_relations(&["a", "b", "c"], vec![lin(&[0, 1, 2])]).unwrap();
        assert_eq!(rsd_exact_memo(&p).get("a").unwrap(), &from_u64(1, 1));
    }

    #[test]
    fn no_agents_single_alternative() {
        let p = Profile::from_relations(&["a"], vec![]).unwrap();
        assert_eq!(rsd_exact_memo(&p).get("a").unwrap(), &from_u64(1, 1));
        assert_eq!(rsd_exact_enum(&p, 10).unwrap(), rsd_exact_memo(&p));
    }

    #[test]
    fn guard_is_enforced() {
        let p = Profile::from_relations(&["a", "b"], vec![lin(&[0, 1]); 4]).unwrap();
        assert_eq!(
            rsd_exact_enum(&p, 3).unwrap_err(),
            Error::GuardExceeded { n: 4, limit: 3 }
        );
    }

    #[test]
    fn memo_handles_wide_universes() {
        // 70 alternatives forces multi-word keys.
        let m = 70;
        let up: Vec<usize> = (0..m).collect();
        let down: Vec<usize> = (0..m).rev().collect();
        let labels: Vec<String> = (0..m).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
        let p = Profile::from_relations(&refs, vec![lin(&up), lin(&down), lin(&up)]).unwrap();
        let l = rsd_exact_memo(&p);
        assert_eq!(l.get("x0").unwrap(), &from_u64(2, 3));
        assert_eq!(l.get("x69").unwrap(), &from_u64(1, 3));
    }
}
