use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use num_bigint::{BigInt, BigUint, Sign};
use num_traits::Zero;
use serde_json::{json, Value};

pub type IntMatrix = Vec<Vec<BigInt>>;

/// Square integer system `matrix * unknowns = rhs` with labelled unknowns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorialSystem {
    pub matrix: IntMatrix,
    pub rhs: Vec<Rational>,
    pub unknowns: Vec<String>,
}

impl FactorialSystem {
    pub fn new(matrix: IntMatrix, rhs: Vec<Rational>, unknowns: Vec<String>) -> Result<Self> {
        let n = matrix.len();
        if let Some(row) = matrix.iter().find(|r| r.len() != n) {
            return Err(Error::NonSquare {
                rows: n,
                cols: row.len(),
            });
        }
        for len in [rhs.len(), unknowns.len()] {
            if len != n {
                return Err(Error::DimensionMismatch { expected: n, got: len });
            }
        }
        Ok(FactorialSystem {
            matrix,
            rhs,
            unknowns,
        })
    }

    pub fn len(&self) -> usize {
        self.matrix.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrix.is_empty()
    }

    /// Gaussian elimination over the rationals, pivoting on the first
    /// nonzero entry of each column.
    pub fn solve(&self) -> Result<Vec<Rational>> {
        let n = self.len();
        let mut a: Vec<Vec<Rational>> = self
            .matrix
            .iter()
            .zip(&self.rhs)
            .map(|(row, b)| {
                row.iter()
                    .map(|x| Rational::from_integer(x.clone()))
                    .chain(std::iter::once(b.clone()))
                    .collect()
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or(Error::Singular)?;
            a.swap(col, pivot);
            let lead = a[col][col].clone();
            for x in a[col][col..].iter_mut() {
                *x /= &lead;
            }
            let pivot_row = a[col].clone();
            for (r, row) in a.iter_mut().enumerate() {
                if r == col || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= &factor * p;
                }
            }
        }
        Ok(a.into_iter().map(|mut row| row.pop().unwrap()).collect())
    }

    /// Solves and requires every unknown to be a non-negative integer.
    pub fn solve_counts(&self) -> Result<Vec<BigUint>> {
        let solution = self.solve()?;
        integral_counts(&solution, &self.unknowns)
    }

    pub fn to_json_value(&self) -> Value {
        json!({
            "unknowns": self.unknowns,
            "matrix": self
                .matrix
                .iter()
                .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "rhs": self.rhs.iter().map(rational::format).collect::<Vec<_>>(),
        })
    }
}

pub(crate) fn integral_counts(solution: &[Rational], unknowns: &[String]) -> Result<Vec<BigUint>> {
    solution
        .iter()
        .zip(unknowns)
        .map(|(v, name)| {
            if !v.is_integer() || v.numer().sign() == Sign::Minus {
                return Err(Error::NonIntegral {
                    unknown: name.clone(),
                    value: rational::format(v),
                });
            }
            Ok(v.numer().magnitude().clone())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::from_u64;

    fn ints(rows: &[&[i64]]) -> IntMatrix {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("u{i}")).collect()
    }

    #[test]
    fn solves_with_row_swap() {
        // 0x + 1y = 2 ; 3x + 0y = 1  ->  x = 1/3, y = 2
        let sys = FactorialSystem::new(
            ints(&[&[0, 1], &[3, 0]]),
            vec![from_u64(2, 1), from_u64(1, 1)],
            labels(2),
        )
        .unwrap();
        assert_eq!(sys.solve().unwrap(), vec![from_u64(1, 3), from_u64(2, 1)]);
        assert!(matches!(sys.solve_counts(), Err(Error::NonIntegral { .. })));
    }

    #[test]
    fn singular_detected() {
        let sys = FactorialSystem::new(
            ints(&[&[1, 1], &[2, 2]]),
            vec![from_u64(1, 1), from_u64(2, 1)],
            labels(2),
        )
        .unwrap();
        assert_eq!(sys.solve().unwrap_err(), Error::Singular);
    }

    #[test]
    fn homogeneous_gives_zero() {
        let sys = FactorialSystem::new(
            ints(&[&[1, 1, 2], &[1, 2, 6], &[2, 6, 24]]),
            vec![from_u64(0, 1); 3],
            labels(3),
        )
        .unwrap();
        assert!(sys.solve_counts().unwrap().iter().all(|x| x.is_zero()));
    }

    #[test]
    fn negative_solution_rejected() {
        let sys =
            FactorialSystem::new(ints(&[&[1]]), vec![Rational::from_integer((-3).into())], labels(1))
                .unwrap();
        assert!(matches!(sys.solve_counts(), Err(Error::NonIntegral { .. })));
    }

    #[test]
    fn shape_checks() {
        assert!(FactorialSystem::new(ints(&[&[1, 2]]), vec![from_u64(1, 1)], labels(1)).is_err());
        assert!(FactorialSystem::new(ints(&[&[1]]), vec![], labels(1)).is_err());
    }
}
