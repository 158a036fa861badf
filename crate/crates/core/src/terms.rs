//! Sparse `Z[v, v^-1]`-combinations of group elements, shared by the Hecke
//! algebra and the anti-spherical module.

use rustc_hash::FxHashMap;

use crate::affine_weyl::AffineWeylElement;
use crate::laurent::LaurentPoly;

#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub(crate) struct Terms(FxHashMap<AffineWeylElement, LaurentPoly>);

impl Terms {
    pub fn single(w: AffineWeylElement, c: LaurentPoly) -> Self {
        let mut t = Terms::default();
        t.add(w, c);
        t
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, w: &AffineWeylElement) -> Option<&LaurentPoly> {
        self.0.get(w)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&AffineWeylElement, &LaurentPoly)> {
        self.0.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &AffineWeylElement> {
        self.0.keys()
    }

    /// Terms in canonical element order.
    pub fn sorted(&self) -> Vec<(&AffineWeylElement, &LaurentPoly)> {
        let mut v: Vec<_> = self.0.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    pub fn add(&mut self, w: AffineWeylElement, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.0.entry(w) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    /// `self[w] += c * p`.
    pub fn add_product(&mut self, w: AffineWeylElement, c: &LaurentPoly, p: &LaurentPoly) {
        if p.is_one() {
            self.add(w, c.clone());
        } else {
            self.add(w, c * p);
        }
    }

    /// `self += p * other`.
    pub fn add_scaled(&mut self, other: &Terms, p: &LaurentPoly) {
        for (w, c) in other.iter() {
            self.add_product(w.clone(), c, p);
        }
    }

    pub fn scaled(&self, p: &LaurentPoly) -> Terms {
        if p.is_zero() {
            return Terms::default();
        }
        Terms(self.0.iter().map(|(w, c)| (w.clone(), c * p)).collect())
    }
}

impl FromIterator<(AffineWeylElement, LaurentPoly)> for Terms {
    fn from_iter<I: IntoIterator<Item = (AffineWeylElement, LaurentPoly)>>(iter: I) -> Self {
        let mut t = Terms::default();
        for (w, c) in iter {
            t.add(w, c);
        }
        t
    }
}
