//! Change of basis between `{m_e theta_lambda}` and `{m_w}`.

use super::AntisphericalModule;
use crate::affine_weyl::{AffineWeylElement, AffineWeylGroup};
use crate::error::Result;
use crate::laurent::LaurentPoly;
use crate::root_datum::Weight;

/// Expansion of `m_e theta_lambda` in the standard basis, for the weights
/// `lambda` with `l(kappa(lambda)) <= L`.
///
/// Row `i` belongs to `weights[i]`, whose `kappa` is `basis[i]`; column `j`
/// is the coefficient of `m_{basis[j]}`. The basis is sorted by length, so
/// triangularity with respect to the Bruhat order makes the matrix lower
/// triangular.
#[derive(Debug, Clone)]
pub struct FreenessMatrix {
    pub max_length: u32,
    pub basis: Vec<AffineWeylElement>,
    pub weights: Vec<Weight>,
    pub entries: Vec<Vec<LaurentPoly>>,
    /// Number of coefficients that fell outside the listed basis.
    pub outside_support: usize,
}

impl FreenessMatrix {
    pub fn size(&self) -> usize {
        self.basis.len()
    }

    /// Every nonzero entry `(i, j)` has `basis[j] <= basis[i]` in the Bruhat
    /// order, and nothing lies outside the basis.
    pub fn is_bruhat_triangular(&self, group: &AffineWeylGroup) -> bool {
        self.outside_support == 0
            && self.entries.iter().enumerate().all(|(i, row)| {
                row.iter()
                    .enumerate()
                    .all(|(j, c)| c.is_zero() || group.bruhat_leq(&self.basis[j], &self.basis[i]))
            })
    }

    /// Every diagonal entry is `±v^k`.
    pub fn has_unit_diagonal(&self) -> bool {
        (0..self.size()).all(|i| self.entries[i][i].as_unit().is_some())
    }

    /// Inverse over `Z[v, v^-1]` by forward substitution, or `None` when the
    /// matrix is not lower triangular with unit diagonal.
    pub fn inverse(&self) -> Option<Vec<Vec<LaurentPoly>>> {
        let n = self.size();
        for i in 0..n {
            if self.entries[i][i + 1..].iter().any(|c| !c.is_zero()) {
                return None;
            }
        }
        let diag_inv: Vec<LaurentPoly> = (0..n)
            .map(|i| {
                self.entries[i][i]
                    .as_unit()
                    .map(|(s, k)| LaurentPoly::monomial(s as i64, -k))
            })
            .collect::<Option<_>>()?;
        let mut inv = vec![vec![LaurentPoly::zero(); n]; n];
        for i in 0..n {
            inv[i][i] = diag_inv[i].clone();
            for j in (0..i).rev() {
                let mut acc = LaurentPoly::zero();
                for k in j..i {
                    if !self.entries[i][k].is_zero() && !inv[k][j].is_zero() {
                        acc += &self.entries[i][k] * &inv[k][j];
                    }
                }
                inv[i][j] = -(&diag_inv[i] * &acc);
            }
        }
        Some(inv)
    }

    /// Whether `self * other` is the identity matrix.
    pub fn is_left_inverse_of(&self, other: &[Vec<LaurentPoly>]) -> bool {
        let n = self.size();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let mut acc = LaurentPoly::zero();
                for k in 0..n {
                    if !self.entries[i][k].is_zero() && !other[k][j].is_zero() {
                        acc += &self.entries[i][k] * &other[k][j];
                    }
                }
                if i == j {
                    acc.is_one()
                } else {
                    acc.is_zero()
                }
            })
        })
    }
}

impl AntisphericalModule {
    /// The matrix of `m_e theta_lambda` over all `lambda` with
    /// `l(kappa(lambda)) <= max_length`.
    pub fn a_freeness_matrix(&self, max_length: u32) -> Result<FreenessMatrix> {
        let g = self.group();
        let basis: Vec<AffineWeylElement> = g
            .enumerate_up_to_length(max_length)?
            .into_iter()
            .filter(|w| g.is_f_minimal(w))
            .collect();
        let index: rustc_hash::FxHashMap<&AffineWeylElement, usize> =
            basis.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let mut weights = Vec::with_capacity(basis.len());
        let mut entries = Vec::with_capacity(basis.len());
        let mut outside_support = 0;
        for w in &basis {
            let lambda = g.kappa_inverse(w);
            let m = self.theta_basis(&lambda)?;
            let mut row = vec![LaurentPoly::zero(); basis.len()];
            for (y, c) in m.terms() {
                match index.get(y) {
                    Some(&j) => row[j] = c.clone(),
                    None => outside_support += 1,
                }
            }
            weights.push(lambda);
            entries.push(row);
        }
        Ok(FreenessMatrix {
            max_length,
            basis,
            weights,
            entries,
            outside_support,
        })
    }
}
