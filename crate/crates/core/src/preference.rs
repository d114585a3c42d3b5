//! Alternatives and weak orders.

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use std::fmt;

/// Label of an alternative, unique within its profile.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alternative(String);

impl Alternative {
    pub fn new(label: impl Into<String>) -> Result<Self> {
        let label = label.into();
        if label.is_empty() {
            return Err(Error::Malformed("empty alternative label".into()));
        }
        Ok(Alternative(label))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Alternative {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A complete weak order over alternatives `0..m`, stored as indifference
/// classes from most to least preferred.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PreferenceRelation {
    classes: Vec<Vec<usize>>,
    /// Class index of each alternative.
    rank: Vec<usize>,
}

impl PreferenceRelation {
    /// Builds a relation over `m` alternatives. The classes must partition
    /// `0..m` and none may be empty. Members are kept sorted within a class.
    pub fn new(classes: Vec<Vec<usize>>, m: usize) -> Result<Self> {
        let mut rank = vec![usize::MAX; m];
        let mut classes = classes;
        for (c, class) in classes.iter_mut().enumerate() {
            if class.is_empty() {
                return Err(partition_error(format!("class {} is empty", c + 1)));
            }
            class.sort_unstable();
            for &a in class.iter() {
                if a >= m {
                    return Err(partition_error(format!("alternative index {a} out of range")));
                }
                if rank[a] != usize::MAX {
                    return Err(partition_error(format!("alternative {a} listed twice")));
                }
                rank[a] = c;
            }
        }
        if let Some(missing) = rank.iter().position(|&r| r == usize::MAX) {
            return Err(partition_error(format!("alternative {missing} is missing")));
        }
        Ok(PreferenceRelation { classes, rank })
    }

    /// A linear order given best first.
    pub fn linear(order: &[usize]) -> Result<Self> {
        Self::new(order.iter().map(|&a| vec![a]).collect(), order.len())
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn num_alternatives(&self) -> usize {
        self.rank.len()
    }

    /// Position of `a`'s class; smaller is better.
    pub fn rank(&self, a: usize) -> usize {
        self.rank[a]
    }

    pub fn weakly_prefers(&self, a: usize, b: usize) -> bool {
        self.rank[a] <= self.rank[b]
    }

    pub fn strictly_prefers(&self, a: usize, b: usize) -> bool {
        self.rank[a] < self.rank[b]
    }

    pub fn indifferent(&self, a: usize, b: usize) -> bool {
        self.rank[a] == self.rank[b]
    }

    pub fn is_linear(&self) -> bool {
        self.classes.iter().all(|c| c.len() == 1)
    }

    pub fn is_dichotomous(&self) -> bool {
        self.classes.len() <= 2
    }

    /// Most preferred members of `set`: its intersection with the first
    /// class that meets it.
    pub fn max_set(&self, set: &BitSet) -> Result<BitSet> {
        let best = set
            .iter()
            .map(|a| self.rank.get(a).copied().ok_or(Error::EmptySet))
            .try_fold(usize::MAX, |acc, r| r.map(|r| acc.min(r)))?;
        if best == usize::MAX {
            return Err(Error::EmptySet);
        }
        Ok(BitSet::from_indices(
            set.universe(),
            self.classes[best].iter().copied().filter(|&a| set.contains(a)),
        ))
    }
}

fn partition_error(reason: String) -> Error {
    Error::NotAPartition {
        agent: "?".into(),
        reason,
    }
}

/// Free-function form of [`PreferenceRelation::max_set`].
pub fn max_set(relation: &PreferenceRelation, set: &BitSet) -> Result<BitSet> {
    relation.max_set(set)
}
