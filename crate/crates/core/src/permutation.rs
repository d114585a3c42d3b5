use crate::error::{Error, Result};

/// An ordering of agents `0..n`, first dictator first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut seen = vec![false; n];
        for &i in &order {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidPermutation(format!("{order:?}")));
            }
        }
        Ok(Permutation(order))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Moves the agent at 1-based position `j` to position `k + 1`, shifting
    /// positions `k+1..j-1` back by one. Requires `1 <= k < j <= n`.
    pub fn move_forward(&self, k: usize, j: usize) -> Result<Permutation> {
        let n = self.0.len();
        if !(1 <= k && k < j && j <= n) {
            return Err(Error::IndexOutOfRange(format!(
                "need 1 <= k < j <= {n}, got k={k}, j={j}"
            )));
        }
        let mut order = self.0.clone();
        let moved = order.remove(j - 1);
        order.insert(k, moved);
        Ok(Permutation(order))
    }

    /// Advances to the next permutation in lexicographic order; returns
    /// `false` (leaving the slice sorted) after the last one.
    pub fn next_lexicographic(order: &mut [usize]) -> bool {
        let n = order.len();
        if n < 2 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && order[i - 1] >= order[i] {
            i -= 1;
        }
        if i == 0 {
            order.reverse();
            return false;
        }
        let mut j = n - 1;
        while order[j] <= order[i - 1] {
            j -= 1;
        }
        order.swap(i - 1, j);
        order[i..].reverse();
        true
    }
}

/// Free-function form of [`Permutation::move_forward`].
pub fn move_forward(perm: &Permutation, k: usize, j: usize) -> Result<Permutation> {
    perm.move_forward(k, j)
}
