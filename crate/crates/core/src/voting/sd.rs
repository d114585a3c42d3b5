use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::profile::Profile;

/// Outcome of serial dictatorship along a full permutation.
pub fn sd(profile: &Profile, perm: &Permutation) -> Result<usize> {
    if perm.len() != profile.num_agents() {
        return Err(Error::InvalidPermutation(format!(
            "permutation of {} agents for a profile of {}",
            perm.len(),
            profile.num_agents()
        )));
    }
    Ok(sd_outcome(profile, perm.as_slice()))
}

/// Serial dictatorship for an order already known to be a permutation.
pub(crate) fn sd_outcome(profile: &Profile, order: &[usize]) -> usize {
    let mut alive = BitSet::full(profile.num_alternatives());
    for &i in order {
        if let Some(a) = alive.single() {
            return a;
        }
        alive = profile.relation(i).max_set(&alive).expect("surviving set is never empty");
    }
    alive
        .single()
        .expect("validated profile ends in a single alternative")
}

/// Surviving set after the agents of `prefix` act in order.
pub fn sd_prefix(profile: &Profile, prefix: &[usize]) -> Result<BitSet> {
    Ok(sd_trace(profile, prefix)?
        .pop()
        .map(|(_, s)| s)
        .unwrap_or_else(|| BitSet::full(profile.num_alternatives())))
}

/// Surviving set after each agent of `prefix` acts.
pub fn sd_trace(profile: &Profile, prefix: &[usize]) -> Result<Vec<(usize, BitSet)>> {
    let n = profile.num_agents();
    let mut seen = vec![false; n];
    let mut alive = BitSet::full(profile.num_alternatives());
    let mut trace = Vec::with_capacity(prefix.len());
    for &i in prefix {
        if i >= n {
            return Err(Error::UnknownAgent(format!("#{}", i + 1)));
        }
        if std::mem::replace(&mut seen[i], true) {
            return Err(Error::InvalidPermutation(format!("agent {} repeated", i + 1)));
        }
        alive = profile.relation(i).max_set(&alive)?;
        trace.push((i, alive.clone()));
    }
    Ok(trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::preference::PreferenceRelation;

    fn opposed() -> Profile {
        Profile::from_relations(
            &["a", "b"],
            vec![
                PreferenceRelation::linear(&[0, 1]).unwrap(),
                PreferenceRelation::linear(&[1, 0]).unwrap(),
            ],
        )
        .unwrap()
    }

    // 1: {a,b} > {c}, 2: b > c > a
    fn tied_first() -> Profile {
        Profile::from_relations(
            &["a", "b", "c"],
            vec![
                PreferenceRelation::new(vec![vec![0, 1], vec![2]], 3).unwrap(),
                PreferenceRelation::linear(&[1, 2, 0]).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn sd_examples() {
        let id = Permutation::identity(2);
        let rev = Permutation::new(vec![1, 0]).unwrap();
        assert_eq!(sd(&opposed(), &id).unwrap(), 0);
        assert_eq!(sd(&tied_first(), &id).unwrap(), 1);
        assert_eq!(sd(&tied_first(), &rev).unwrap(), 1);
        assert!(sd(&tied_first(), &Permutation::identity(3)).is_err());
    }

    #[test]
    fn prefix_examples() {
        let p = tied_first();
        assert_eq!(sd_prefix(&p, &[]).unwrap(), BitSet::full(3));
        assert_eq!(sd_prefix(&p, &[0]).unwrap(), BitSet::from_indices(3, [0, 1]));
        assert_eq!(sd_prefix(&p, &[0, 1]).unwrap().single(), Some(1));
        assert!(matches!(sd_prefix(&p, &[0, 0]), Err(Error::InvalidPermutation(_))));
        assert!(sd_prefix(&p, &[5]).is_err());
    }

    #[test]
    fn trace_is_nested() {
        let p = tied_first();
        let trace = sd_trace(&p, &[0, 1]).unwrap();
        assert!(trace[1].1.is_subset(&trace[0].1));
    }
}
