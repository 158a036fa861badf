//! The extended affine Hecke algebra over `Z[v, v^-1]` in the standard basis
//! `T_w`, with quadratic relation `T_s^2 = (v^2 - 1) T_s + v^2`.
//!
//! On top of the Iwahori-Matsumoto presentation this module provides the
//! Bernstein elements `theta_lambda`, the central elements `z_lambda`, the
//! bar involution with the Kazhdan-Lusztig basis `C'_w`, and the
//! specialization `v -> 1` onto the group ring `Z[W]`.

mod bernstein;
mod format;
mod group_algebra;
mod kl;

use std::sync::{Arc, Mutex};

use rustc_hash::FxHashMap;

pub use group_algebra::GroupAlgebraElement;
pub use format::HeckeTerm;
pub(crate) use format::terms_to_text;

use crate::affine_weyl::{AffineWeylElement, AffineWeylGroup};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::root_datum::Weight;
use crate::terms::Terms;

/// A finite `Z[v, v^-1]`-combination of the `T_w`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HeckeElement {
    group: u64,
    terms: Terms,
}

impl HeckeElement {
    pub(crate) fn from_terms(group: u64, terms: Terms) -> Self {
        Self { group, terms }
    }

    pub fn group_id(&self) -> u64 {
        self.group
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient of `T_w`.
    pub fn coeff(&self, w: &AffineWeylElement) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Nonzero terms in canonical element order.
    pub fn terms(&self) -> Vec<(&AffineWeylElement, &LaurentPoly)> {
        self.terms.sorted()
    }

    pub(crate) fn raw_terms(&self) -> &Terms {
        &self.terms
    }

    fn same_group(&self, other: &Self) -> Result<()> {
        if self.group != other.group {
            return Err(Error::DatumMismatch);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        let mut terms = self.terms.clone();
        terms.add_scaled(&other.terms, &LaurentPoly::one());
        Ok(Self::from_terms(self.group, terms))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        let mut terms = self.terms.clone();
        terms.add_scaled(&other.terms, &LaurentPoly::from(-1));
        Ok(Self::from_terms(self.group, terms))
    }

    pub fn scale(&self, p: &LaurentPoly) -> Self {
        Self::from_terms(self.group, self.terms.scaled(p))
    }
}

/// The affine Hecke algebra of an extended affine Weyl group. Holds the
/// memo tables for `theta_lambda` and the Kazhdan-Lusztig basis.
pub struct HeckeAlgebra {
    group: Arc<AffineWeylGroup>,
    // v^2 - 1 and v^2
    q_minus_one: LaurentPoly,
    q: LaurentPoly,
    theta_cache: Mutex<FxHashMap<Weight, Arc<HeckeElement>>>,
    kl_cache: Mutex<FxHashMap<AffineWeylElement, Arc<HeckeElement>>>,
}

impl std::fmt::Debug for HeckeAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("HeckeAlgebra").field("group", &self.group).finish()
    }
}

impl HeckeAlgebra {
    pub fn new(group: Arc<AffineWeylGroup>) -> Arc<Self> {
        Arc::new(Self {
            group,
            q_minus_one: LaurentPoly::from_terms([(0, -1), (2, 1)]),
            q: LaurentPoly::monomial(1, 2),
            theta_cache: Mutex::new(FxHashMap::default()),
            kl_cache: Mutex::new(FxHashMap::default()),
        })
    }

    pub fn group(&self) -> &Arc<AffineWeylGroup> {
        &self.group
    }

    pub(crate) fn id(&self) -> u64 {
        self.group.id()
    }

    pub(crate) fn check(&self, h: &HeckeElement) -> Result<()> {
        if h.group != self.id() {
            return Err(Error::DatumMismatch);
        }
        Ok(())
    }

    pub fn zero(&self) -> HeckeElement {
        HeckeElement::from_terms(self.id(), Terms::default())
    }

    pub fn one(&self) -> HeckeElement {
        self.t(&self.group.identity())
    }

    /// The basis element `T_w`.
    pub fn t(&self, w: &AffineWeylElement) -> HeckeElement {
        HeckeElement::from_terms(self.id(), Terms::single(w.clone(), LaurentPoly::one()))
    }

    /// `c * T_w`.
    pub fn term(&self, w: &AffineWeylElement, c: LaurentPoly) -> HeckeElement {
        HeckeElement::from_terms(self.id(), Terms::single(w.clone(), c))
    }

    /// `T_{s_i}`, `i` in `0..=rank`.
    pub fn t_simple(&self, i: usize) -> HeckeElement {
        self.t(self.group.simple_reflection(i))
    }

    /// `T_pi` for the `k`-th length-zero element.
    pub fn t_omega(&self, k: usize) -> HeckeElement {
        self.t(&self.group.omega()[k])
    }

    /// `T_{s_i} * terms`.
    pub(crate) fn left_simple(&self, i: usize, terms: &Terms) -> Terms {
        let g = &self.group;
        let mut out = Terms::default();
        for (w, c) in terms.iter() {
            let sw = g.left_mul_simple(i, w);
            if g.length(&sw) > g.length(w) {
                out.add(sw, c.clone());
            } else {
                out.add_product(w.clone(), c, &self.q_minus_one);
                out.add_product(sw, c, &self.q);
            }
        }
        out
    }

    /// `terms * T_{s_i}`.
    pub(crate) fn right_simple(&self, terms: &Terms, i: usize) -> Terms {
        let g = &self.group;
        let mut out = Terms::default();
        for (w, c) in terms.iter() {
            let ws = g.right_mul_simple(w, i);
            if g.length(&ws) > g.length(w) {
                out.add(ws, c.clone());
            } else {
                out.add_product(w.clone(), c, &self.q_minus_one);
                out.add_product(ws, c, &self.q);
            }
        }
        out
    }

    /// `T_{s_i}^-1 * terms`, using `T_s^-1 = v^-2 T_s + (v^-2 - 1)`.
    pub(crate) fn left_simple_inverse(&self, i: usize, terms: &Terms) -> Terms {
        let g = &self.group;
        let mut out = Terms::default();
        let q_inv = LaurentPoly::monomial(1, -2);
        let q_inv_minus_one = LaurentPoly::from_terms([(-2, 1), (0, -1)]);
        for (w, c) in terms.iter() {
            let sw = g.left_mul_simple(i, w);
            if g.length(&sw) > g.length(w) {
                out.add_product(sw, c, &q_inv);
                out.add_product(w.clone(), c, &q_inv_minus_one);
            } else {
                out.add(sw, c.clone());
            }
        }
        out
    }

    /// `T_x * terms`.
    pub(crate) fn left_t(&self, x: &AffineWeylElement, terms: &Terms) -> Terms {
        let r = self.group.reduced_word(x);
        let mut acc = terms.clone();
        for &i in r.word.iter().rev() {
            acc = self.left_simple(i as usize, &acc);
        }
        if r.omega != 0 {
            let pi = &self.group.omega()[r.omega];
            acc = acc.iter().map(|(w, c)| (self.group.mul(pi, w), c.clone())).collect();
        }
        acc
    }

    /// `terms * T_y`.
    pub(crate) fn right_t(&self, terms: &Terms, y: &AffineWeylElement) -> Terms {
        let r = self.group.reduced_word(y);
        let mut acc = terms.clone();
        if r.omega != 0 {
            let pi = &self.group.omega()[r.omega];
            acc = acc.iter().map(|(w, c)| (self.group.mul(w, pi), c.clone())).collect();
        }
        for &i in r.word.iter() {
            acc = self.right_simple(&acc, i as usize);
        }
        acc
    }

    pub(crate) fn mul_terms(&self, a: &Terms, b: &Terms) -> Terms {
        let cost = |t: &Terms| -> usize { t.keys().map(|w| self.group.length(w) as usize + 1).sum() };
        let mut out = Terms::default();
        if cost(a) * b.len() <= cost(b) * a.len() {
            for (x, c) in a.iter() {
                out.add_scaled(&self.left_t(x, b), c);
            }
        } else {
            for (y, c) in b.iter() {
                out.add_scaled(&self.right_t(a, y), c);
            }
        }
        out
    }

    pub fn multiply(&self, a: &HeckeElement, b: &HeckeElement) -> Result<HeckeElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(HeckeElement::from_terms(self.id(), self.mul_terms(&a.terms, &b.terms)))
    }

    /// `T_w^-1`.
    pub fn t_inverse(&self, w: &AffineWeylElement) -> HeckeElement {
        // w = pi s_1 ... s_k, so T_w^-1 = T_{s_k}^-1 ... T_{s_1}^-1 T_{pi^-1}.
        let r = self.group.reduced_word(w);
        let pi_inv = self.group.inverse(&self.group.omega()[r.omega]);
        let mut acc = Terms::single(pi_inv, LaurentPoly::one());
        for &i in r.word.iter() {
            acc = self.left_simple_inverse(i as usize, &acc);
        }
        HeckeElement::from_terms(self.id(), acc)
    }

    /// `T_w^-1` computed along an arbitrary reduced expression
    /// `w = pi * s_{word[0]} * ...`; agrees with [`t_inverse`](Self::t_inverse).
    pub fn t_inverse_along(&self, omega: usize, word: &[u8]) -> HeckeElement {
        let pi_inv = self.group.inverse(&self.group.omega()[omega]);
        let mut acc = Terms::single(pi_inv, LaurentPoly::one());
        for &i in word {
            acc = self.left_simple_inverse(i as usize, &acc);
        }
        HeckeElement::from_terms(self.id(), acc)
    }

    /// The ring involution `v -> v^-1`, `T_w -> T_{w^-1}^-1`.
    pub fn bar_involution(&self, h: &HeckeElement) -> Result<HeckeElement> {
        self.check(h)?;
        let mut out = Terms::default();
        for (w, c) in h.terms.iter() {
            let inv = self.t_inverse(&self.group.inverse(w));
            out.add_scaled(&inv.terms, &c.bar());
        }
        Ok(HeckeElement::from_terms(self.id(), out))
    }
}

#[cfg(test)]
mod tests;
