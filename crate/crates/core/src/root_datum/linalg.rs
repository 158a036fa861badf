//! Small exact rational matrix routines for rank <= 12 integer matrices.

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, ToPrimitive, Zero};

pub(crate) type Q = Ratio<i128>;

/// Inverse of a square integer matrix, or `None` if singular or if an
/// entry does not fit in [`Q`]. Elimination runs over big rationals.
pub(crate) fn inverse(m: &[Vec<i64>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a = to_big(m);
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let (x, y) = (&f * &a[col][j], &f * &inv[col][j]);
                    a[r][j] -= x;
                    inv[r][j] -= y;
                }
            }
        }
    }
    inv.into_iter()
        .map(|row| {
            row.into_iter()
                .map(|q| Some(Q::new(q.numer().to_i128()?, q.denom().to_i128()?)))
                .collect()
        })
        .collect()
}

/// Determinant of a square integer matrix.
pub(crate) fn determinant(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    let mut a = to_big(m);
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return BigInt::zero();
        };
        if pivot != col {
            a.swap(col, pivot);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            let f = &a[r][col] / &p;
            if !f.is_zero() {
                for j in col..n {
                    let x = &f * &a[col][j];
                    a[r][j] -= x;
                }
            }
        }
    }
    debug_assert!(det.is_integer());
    det.to_integer()
}

fn to_big(m: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    m.iter()
        .map(|row| row.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect()
}

/// Row vector times matrix.
pub(crate) fn row_times(v: &[i64], m: &[Vec<Q>]) -> Vec<Q> {
    let n = m.first().map_or(0, Vec::len);
    (0..n)
        .map(|j| v.iter().zip(m).map(|(&x, row)| Q::from_integer(x as i128) * row[j]).sum())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_det() {
        let m = vec![vec![2, -1], vec![-1, 2]];
        assert_eq!(determinant(&m), 3.into());
        let inv = inverse(&m).unwrap();
        assert_eq!(inv[0][0], Q::new(2, 3));
        assert_eq!(inv[0][1], Q::new(1, 3));
        assert!(inverse(&[vec![1, 2], vec![2, 4]]).is_none());
        assert_eq!(determinant(&[vec![0, 1], vec![1, 0]]), (-1).into());
    }
}
