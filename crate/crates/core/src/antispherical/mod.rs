//! The anti-spherical right module `M_asp = sgn (x)_{H_f} H`, with standard
//! basis `m_w = m_e T_w` indexed by the minimal coset representatives
//! `w` in `^fW`.
//!
//! Two realizations are provided: the induced-module action [`act`], and
//! the quotient of the Hecke algebra by the span of the `C'_x` with `x`
//! outside `^fW` ([`project_from_hecke`]).
//!
//! [`act`]: AntisphericalModule::act
//! [`project_from_hecke`]: AntisphericalModule::project_from_hecke

mod freeness;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use freeness::FreenessMatrix;

use crate::affine_weyl::{AffineWeylElement, AffineWeylGroup};
use crate::error::{Error, Result};
use crate::hecke::{HeckeAlgebra, HeckeElement};
use crate::laurent::LaurentPoly;
use crate::root_datum::Weight;
use crate::terms::Terms;

/// A finite `Z[v, v^-1]`-combination of the `m_w`, `w` in `^fW`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AntisphericalElement {
    group: u64,
    terms: Terms,
}

impl AntisphericalElement {
    pub fn group_id(&self) -> u64 {
        self.group
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient of `m_w`.
    pub fn coeff(&self, w: &AffineWeylElement) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Nonzero terms in canonical element order.
    pub fn terms(&self) -> Vec<(&AffineWeylElement, &LaurentPoly)> {
        self.terms.sorted()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.group != other.group {
            return Err(Error::DatumMismatch);
        }
        let mut terms = self.terms.clone();
        terms.add_scaled(&other.terms, &LaurentPoly::one());
        Ok(Self {
            group: self.group,
            terms,
        })
    }

    pub fn scale(&self, p: &LaurentPoly) -> Self {
        Self {
            group: self.group,
            terms: self.terms.scaled(p),
        }
    }
}

/// One entry of the JSON form of a module element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AntisphericalTerm {
    pub basis: String,
    pub element: String,
    pub coeff: String,
}

#[derive(Debug)]
pub struct AntisphericalModule {
    hecke: Arc<HeckeAlgebra>,
}

impl AntisphericalModule {
    pub fn new(hecke: Arc<HeckeAlgebra>) -> Self {
        Self { hecke }
    }

    pub fn hecke(&self) -> &Arc<HeckeAlgebra> {
        &self.hecke
    }

    pub fn group(&self) -> &Arc<AffineWeylGroup> {
        self.hecke.group()
    }

    fn id(&self) -> u64 {
        self.group().id()
    }

    fn wrap(&self, terms: Terms) -> AntisphericalElement {
        AntisphericalElement { group: self.id(), terms }
    }

    fn check(&self, m: &AntisphericalElement) -> Result<()> {
        if m.group != self.id() {
            return Err(Error::DatumMismatch);
        }
        Ok(())
    }

    pub fn zero(&self) -> AntisphericalElement {
        self.wrap(Terms::default())
    }

    /// The generator `m_e`.
    pub fn m_e(&self) -> AntisphericalElement {
        self.wrap(Terms::single(self.group().identity(), LaurentPoly::one()))
    }

    /// The basis vector `m_w`; `w` must lie in `^fW`.
    pub fn m(&self, w: &AffineWeylElement) -> Result<AntisphericalElement> {
        self.group().check(w)?;
        if !self.group().is_f_minimal(w) {
            return Err(Error::parse(format!(
                "{} is not a minimal coset representative",
                self.group().format_element(w)
            )));
        }
        Ok(self.wrap(Terms::single(w.clone(), LaurentPoly::one())))
    }

    /// `terms * T_{s_i}` in the module.
    fn right_simple(&self, terms: &Terms, i: usize) -> Terms {
        let g = self.group();
        let q = LaurentPoly::monomial(1, 2);
        let q_minus_one = LaurentPoly::from_terms([(0, -1), (2, 1)]);
        let mut out = Terms::default();
        for (w, c) in terms.iter() {
            let ws = g.right_mul_simple(w, i);
            if !g.is_f_minimal(&ws) {
                out.add(w.clone(), -c);
            } else if g.length(&ws) > g.length(w) {
                out.add(ws, c.clone());
            } else {
                out.add_product(w.clone(), c, &q_minus_one);
                out.add_product(ws, c, &q);
            }
        }
        out
    }

    /// `terms * T_x`.
    fn right_t(&self, terms: &Terms, x: &AffineWeylElement) -> Terms {
        let g = self.group();
        let r = g.reduced_word(x);
        let mut acc = terms.clone();
        if r.omega != 0 {
            let pi = &g.omega()[r.omega];
            acc = acc.iter().map(|(w, c)| (g.mul(w, pi), c.clone())).collect();
        }
        for &i in &r.word {
            acc = self.right_simple(&acc, i as usize);
        }
        acc
    }

    /// The right action `m * h`.
    pub fn act(&self, m: &AntisphericalElement, h: &HeckeElement) -> Result<AntisphericalElement> {
        self.check(m)?;
        if h.group_id() != self.id() {
            return Err(Error::DatumMismatch);
        }
        let mut out = Terms::default();
        for (x, c) in h.terms() {
            out.add_scaled(&self.right_t(&m.terms, x), c);
        }
        Ok(self.wrap(out))
    }

    /// Image of `h` in `H / span{C'_x : x not in ^fW}`, written in the basis
    /// `T_w -> m_w`. Terms outside `^fW` are eliminated longest first, ties
    /// broken by the canonical element order.
    pub fn project_from_hecke(&self, h: &HeckeElement) -> Result<AntisphericalElement> {
        if h.group_id() != self.id() {
            return Err(Error::DatumMismatch);
        }
        let g = self.group();
        let mut terms = h.raw_terms().clone();
        loop {
            let Some(x) = terms
                .keys()
                .filter(|x| !g.is_f_minimal(x))
                .max_by(|a, b| (g.length(a), *a).cmp(&(g.length(b), *b)))
                .cloned()
            else {
                break;
            };
            let c = terms.get(&x).unwrap().clone();
            let kl = self.hecke.kl_element(&x)?;
            let factor = -(c.shift(g.length(&x) as i32));
            terms.add_scaled(kl.raw_terms(), &factor);
            debug_assert!(terms.get(&x).is_none());
        }
        Ok(self.wrap(terms))
    }

    /// `m_e theta_lambda`.
    pub fn theta_basis(&self, lambda: &Weight) -> Result<AntisphericalElement> {
        let theta = self.hecke.theta(lambda)?;
        self.act(&self.m_e(), &theta)
    }

    /// JSON list of `{basis: "m", element, coeff}` objects.
    pub fn to_json(&self, m: &AntisphericalElement) -> Result<String> {
        self.check(m)?;
        let g = self.group();
        let entries: Vec<AntisphericalTerm> = m
            .terms()
            .into_iter()
            .map(|(w, c)| AntisphericalTerm {
                basis: "m".to_string(),
                element: g.format_element(w),
                coeff: c.to_string(),
            })
            .collect();
        Ok(serde_json::to_string(&entries).expect("plain data serializes"))
    }

    pub fn parse_json(&self, json: &str) -> Result<AntisphericalElement> {
        let entries: Vec<AntisphericalTerm> = serde_json::from_str(json).map_err(|e| Error::parse(e.to_string()))?;
        let mut out = self.zero();
        for e in entries {
            if e.basis != "m" {
                return Err(Error::parse(format!("unknown basis tag `{}`", e.basis)));
            }
            let w = self.group().parse_element(&e.element)?;
            let c: LaurentPoly = e.coeff.parse()?;
            out = out.checked_add(&self.m(&w)?.scale(&c))?;
        }
        Ok(out)
    }

    /// Text such as `(v^-1)*m(t[1]*s1)`.
    pub fn format_text(&self, m: &AntisphericalElement) -> Result<String> {
        self.check(m)?;
        Ok(crate::hecke::terms_to_text(self.group(), &m.terms, "m"))
    }
}
