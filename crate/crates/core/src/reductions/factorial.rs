use crate::error::{Error, Result};
use crate::math::factorials;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::linear::IntMatrix;

/// `n x n` matrix with entry `(i, j)` (1-based) equal to `(i + j - 2)!`.
pub fn pascal_matrix(n: usize) -> Result<IntMatrix> {
    if n == 0 {
        return Err(Error::InvalidInstance("matrix size must be positive".into()));
    }
    let fact = factorials(2 * n - 2);
    Ok((0..n)
        .map(|i| (0..n).map(|j| BigInt::from(fact[i + j].clone())).collect())
        .collect())
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn determinant(matrix: &IntMatrix) -> Result<BigInt> {
    let n = matrix.len();
    if let Some(row) = matrix.iter().find(|r| r.len() != n) {
        return Err(Error::NonSquare {
            rows: n,
            cols: row.len(),
        });
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = matrix.clone();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Determinant together with whether it is nonzero.
pub fn det_nonzero(matrix: &IntMatrix) -> Result<(bool, BigInt)> {
    let det = determinant(matrix)?;
    Ok((!det.is_zero(), det))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn small_pascal_matrices() {
        assert_eq!(pascal_matrix(1).unwrap(), m(&[&[1]]));
        assert_eq!(pascal_matrix(2).unwrap(), m(&[&[1, 1], &[1, 2]]));
        assert_eq!(
            pascal_matrix(3).unwrap(),
            m(&[&[1, 1, 2], &[1, 2, 6], &[2, 6, 24]])
        );
        assert!(pascal_matrix(0).is_err());
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(det_nonzero(&pascal_matrix(2).unwrap()).unwrap(), (true, BigInt::from(1)));
        assert_eq!(det_nonzero(&m(&[&[1, 1], &[1, 1]])).unwrap(), (false, BigInt::from(0)));
        // 1*(48-36) - 1*(24-12) + 2*(6-4) = 4
        assert_eq!(determinant(&pascal_matrix(3).unwrap()).unwrap(), BigInt::from(4));
        assert_eq!(determinant(&m(&[&[0, 1], &[1, 0]])).unwrap(), BigInt::from(-1));
        assert_eq!(determinant(&m(&[&[0, 2, 1], &[0, 1, 5], &[0, 3, 3]])).unwrap(), BigInt::from(0));
        assert!(matches!(
            determinant(&m(&[&[1, 2], &[3]])),
            Err(Error::NonSquare { .. })
        ));
    }

    #[test]
    fn pascal_nonsingular_through_25() {
        for n in 1..=25 {
            let (nonzero, _) = det_nonzero(&pascal_matrix(n).unwrap()).unwrap();
            assert!(nonzero, "n = {n}");
        }
    }
}
