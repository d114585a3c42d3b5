//! Test-only generators and brute-force oracles. The oracles work on plain
//! label sets and rank tables and share no code with the library paths they
//! check.

#![allow(dead_code)]

use itertools::Itertools;
use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::Rng;
use rsdkit::assignment::AssignmentProblem;
use rsdkit::{PreferenceRelation, Profile};
use std::collections::{BTreeMap, BTreeSet};

pub fn labels(m: usize) -> Vec<String> {
    (0..m).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
}

pub fn profile(m: usize, relations: Vec<PreferenceRelation>) -> Option<Profile> {
    let l = labels(m);
    let refs: Vec<&str> = l.iter().map(String::as_str).collect();
    Profile::from_relations(&refs, relations).ok()
}

pub fn random_weak_order<R: Rng>(rng: &mut R, m: usize) -> PreferenceRelation {
    let mut order: Vec<usize> = (0..m).collect();
    order.shuffle(rng);
    let mut classes: Vec<Vec<usize>> = vec![vec![order[0]]];
    for &a in &order[1..] {
        if rng.gen_bool(0.5) {
            classes.push(vec![]);
        }
        classes.last_mut().unwrap().push(a);
    }
    PreferenceRelation::new(classes, m).unwrap()
}

/// Random validated profile; resamples until the universal-indifference
/// condition holds.
pub fn random_profile<R: Rng>(rng: &mut R, n: usize, m: usize) -> Profile {
    loop {
        let rels = (0..n).map(|_| random_weak_order(rng, m)).collect();
        if let Some(p) = profile(m, rels) {
            return p;
        }
    }
}

pub fn random_linear_problem<R: Rng>(rng: &mut R, n: usize) -> AssignmentProblem {
    let rankings = (0..n)
        .map(|_| {
            let mut r: Vec<usize> = (0..n).collect();
            r.shuffle(rng);
            r
        })
        .collect();
    AssignmentProblem::from_rankings(rankings).unwrap()
}

/// All validated dichotomous profiles with `1..=max_n` agents over
/// `1..=max_m` alternatives, one per class under reordering agents and
/// renaming alternatives.
pub fn dichotomous_sweep(max_n: usize, max_m: usize) -> Vec<Profile> {
    let mut out = Vec::new();
    for m in 1..=max_m {
        let tops: Vec<u32> = (1..1u32 << m).collect();
        let perms: Vec<Vec<usize>> = (0..m).permutations(m).collect();
        let rename = |mask: u32, p: &[usize]| -> u32 {
            (0..m).filter(|&a| mask & (1 << a) != 0).map(|a| 1 << p[a]).sum()
        };
        for n in 1..=max_n {
            for combo in tops.iter().copied().combinations_with_replacement(n) {
                let canonical = perms.iter().all(|p| {
                    let mut renamed: Vec<u32> = combo.iter().map(|&t| rename(t, p)).collect();
                    renamed.sort_unstable();
                    combo <= renamed
                });
                if !canonical {
                    continue;
                }
                let rels = combo
                    .iter()
                    .map(|&top| {
                        let hi: Vec<usize> = (0..m).filter(|&a| top & (1 << a) != 0).collect();
                        let lo: Vec<usize> = (0..m).filter(|&a| top & (1 << a) == 0).collect();
                        let classes = if lo.is_empty() { vec![hi] } else { vec![hi, lo] };
                        PreferenceRelation::new(classes, m).unwrap()
                    })
                    .collect();
                if let Some(p) = profile(m, rels) {
                    out.push(p);
                }
            }
        }
    }
    out
}

/// Rank tables: `ranks[i][a]` is the class position of alternative `a` for
/// agent `i`.
pub fn rank_tables(p: &Profile) -> Vec<Vec<usize>> {
    p.relations()
        .iter()
        .map(|r| (0..p.num_alternatives()).map(|a| r.rank(a)).collect())
        .collect()
}

/// Serial dictatorship on explicit sets.
pub fn naive_sd(ranks: &[Vec<usize>], m: usize, order: &[usize]) -> BTreeSet<usize> {
    let mut alive: BTreeSet<usize> = (0..m).collect();
    for &i in order {
        let best = alive.iter().map(|&a| ranks[i][a]).min().unwrap();
        alive.retain(|&a| ranks[i][a] == best);
    }
    alive
}

/// Number of permutations selecting each alternative.
pub fn naive_counts(p: &Profile) -> Vec<u64> {
    let ranks = rank_tables(p);
    let m = p.num_alternatives();
    let n = p.num_agents();
    let mut counts = vec![0u64; m];
    for order in (0..n).permutations(n) {
        let out = naive_sd(&ranks, m, &order);
        assert_eq!(out.len(), 1, "validated profile must end in a singleton");
        counts[*out.iter().next().unwrap()] += 1;
    }
    counts
}

pub fn factorial_u64(n: usize) -> u64 {
    (1..=n as u64).product()
}

pub fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

/// Agent-to-house map from one order, with rankings as plain vectors.
pub fn naive_sd_assign(rankings: &[Vec<usize>], order: &[usize]) -> Vec<usize> {
    let n = rankings.len();
    let mut free: BTreeSet<usize> = (0..n).collect();
    let mut house = vec![usize::MAX; n];
    for &i in order {
        let h = *rankings[i].iter().find(|h| free.contains(h)).unwrap();
        free.remove(&h);
        house[i] = h;
    }
    house
}

/// `counts[i][h]` over all orders.
pub fn naive_assign_counts(rankings: &[Vec<usize>]) -> Vec<Vec<u64>> {
    let n = rankings.len();
    let mut counts = vec![vec![0u64; n]; n];
    for order in (0..n).permutations(n) {
        for (i, h) in naive_sd_assign(rankings, &order).into_iter().enumerate() {
            counts[i][h] += 1;
        }
    }
    counts
}

/// Every deterministic assignment reachable by some order.
pub fn reachable_assignments(rankings: &[Vec<usize>]) -> BTreeSet<Vec<usize>> {
    let n = rankings.len();
    (0..n)
        .permutations(n)
        .map(|order| naive_sd_assign(rankings, &order))
        .collect()
}

/// Whether the agents in `subset` can get distinct houses from their
/// acceptable lists, by trying every injective choice.
pub fn injective_choice_exists(acceptable: &[Vec<usize>]) -> bool {
    fn go(i: usize, acceptable: &[Vec<usize>], used: &mut BTreeSet<usize>) -> bool {
        if i == acceptable.len() {
            return true;
        }
        for &h in &acceptable[i] {
            if used.insert(h) {
                if go(i + 1, acceptable, used) {
                    return true;
                }
                used.remove(&h);
            }
        }
        false
    }
    go(0, acceptable, &mut BTreeSet::new())
}

/// `s_j` for agent `i` by subset enumeration and exhaustive choice.
pub fn naive_s_counts(rankings: &[Vec<usize>], i: usize) -> Vec<u64> {
    let n = rankings.len();
    let h = rankings[i][0];
    let others: Vec<usize> = (0..n).filter(|&a| a != i).collect();
    (0..n)
        .map(|j| {
            others
                .iter()
                .copied()
                .combinations(j)
                .filter(|subset| {
                    let acceptable: Vec<Vec<usize>> = subset
                        .iter()
                        .map(|&a| rankings[a].iter().take_while(|&&x| x != h).copied().collect())
                        .collect();
                    injective_choice_exists(&acceptable)
                })
                .count() as u64
        })
        .collect()
}

/// Size-`j` cover counts `x_0..x_n` over label sets.
pub fn naive_cover_counts(universe: usize, subsets: &[BTreeSet<usize>]) -> Vec<u64> {
    let n = subsets.len();
    (0..=n)
        .map(|j| {
            (0..n)
                .combinations(j)
                .filter(|c| {
                    let union: BTreeSet<usize> = c.iter().flat_map(|&i| subsets[i].iter().copied()).collect();
                    union.len() == universe
                })
                .count() as u64
        })
        .collect()
}

pub fn lottery_map(p: &Profile, counts: &[u64]) -> BTreeMap<String, u64> {
    p.alternatives()
        .iter()
        .zip(counts)
        .map(|(a, &c)| (a.to_string(), c))
        .collect()
}

/// One random instance satisfying the move-forward hypothesis: `sd(p, perm)`
/// is `a` and agent `perm[j-1]` keeps `a` among its favourites in the set
/// left by the first `k` agents. `None` when the draw misses the hypothesis.
pub fn move_forward_trial<R: Rng>(
    rng: &mut R,
) -> Option<(Profile, rsdkit::Permutation, usize, usize, usize)> {
    let n = rng.gen_range(2..=6);
    let m = rng.gen_range(2..=5);
    let p = random_profile(rng, n, m);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let k = rng.gen_range(1..n);
    let j = rng.gen_range(k + 1..=n);
    let ranks = rank_tables(&p);
    let a = *naive_sd(&ranks, m, &order).iter().next().unwrap();
    let prefix = naive_sd(&ranks, m, &order[..k]);
    let agent = order[j - 1];
    let best = prefix.iter().map(|&b| ranks[agent][b]).min().unwrap();
    if !prefix.contains(&a) || ranks[agent][a] != best {
        return None;
    }
    Some((p, rsdkit::Permutation::new(order).unwrap(), k, j, a))
}
