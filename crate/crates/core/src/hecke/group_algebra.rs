//! The group ring `Z[W]`, the specialization `v -> 1`, Wakimoto classes and
//! the Euler pairing.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{HeckeAlgebra, HeckeElement};
use crate::affine_weyl::{AffineWeylElement, AffineWeylGroup};
use crate::error::{Error, Result};

/// A finite integer combination of group elements.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupAlgebraElement {
    group: u64,
    terms: BTreeMap<AffineWeylElement, BigInt>,
}

impl GroupAlgebraElement {
    pub fn zero(group: &AffineWeylGroup) -> Self {
        Self {
            group: group.id(),
            terms: BTreeMap::new(),
        }
    }

    /// The basis element `w`.
    pub fn basis(group: &AffineWeylGroup, w: &AffineWeylElement) -> Self {
        let mut out = Self::zero(group);
        out.add(w.clone(), BigInt::from(1));
        out
    }

    pub fn group_id(&self) -> u64 {
        self.group
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &AffineWeylElement) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> &BTreeMap<AffineWeylElement, BigInt> {
        &self.terms
    }

    pub fn add(&mut self, w: AffineWeylElement, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        if self.group != other.group {
            return Err(Error::DatumMismatch);
        }
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add(w.clone(), -c);
        }
        Ok(out)
    }

    /// Product in the group ring.
    pub fn multiply(&self, other: &Self, group: &AffineWeylGroup) -> Result<Self> {
        if self.group != other.group || self.group != group.id() {
            return Err(Error::DatumMismatch);
        }
        let mut out = Self::zero(group);
        for (x, a) in &self.terms {
            for (y, b) in &other.terms {
                out.add(group.mul(x, y), a * b);
            }
        }
        Ok(out)
    }
}

impl HeckeAlgebra {
    /// The ring map to `Z[W]` sending `T_w -> w` and `v -> 1`.
    pub fn specialize_v1(&self, h: &HeckeElement) -> Result<GroupAlgebraElement> {
        self.check(h)?;
        let mut out = GroupAlgebraElement::zero(&self.group);
        for (w, c) in h.raw_terms().iter() {
            out.add(w.clone(), c.eval_one());
        }
        Ok(out)
    }

    /// The class `[J_w] = specialize(theta_lambda T_{w_f})` for
    /// `w = t_lambda w_f`.
    pub fn wakimoto_class(&self, w: &AffineWeylElement) -> Result<GroupAlgebraElement> {
        self.group.check(w)?;
        let theta = self.theta(&w.translation)?;
        let finite = self.t(&self.group.finite_element(w.finite));
        self.specialize_v1(&self.multiply(&theta, &finite)?)
    }

    /// `(-1)^l(w)` times the coefficient of `w` in `[J_{w'}]`.
    pub fn euler_pairing(&self, w: &AffineWeylElement, w_prime: &AffineWeylElement) -> Result<BigInt> {
        self.group.check(w)?;
        let c = self.wakimoto_class(w_prime)?.coeff(w);
        Ok(if self.group.length(w).is_multiple_of(2) { c } else { -c })
    }
}
