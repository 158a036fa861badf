use serde::{Deserialize, Serialize};

use super::{GroupAlgebraElement, HeckeAlgebra, HeckeElement};
use crate::affine_weyl::AffineWeylGroup;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::terms::Terms;

/// One entry of the JSON form of a Hecke algebra element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HeckeTerm {
    pub element: String,
    pub coeff: String,
}

pub(crate) fn terms_to_json(group: &AffineWeylGroup, terms: &Terms) -> Vec<HeckeTerm> {
    terms
        .sorted()
        .into_iter()
        .map(|(w, c)| HeckeTerm {
            element: group.format_element(w),
            coeff: c.to_string(),
        })
        .collect()
}

pub(crate) fn terms_from_json(group: &AffineWeylGroup, entries: &[HeckeTerm]) -> Result<Terms> {
    let mut terms = Terms::default();
    for e in entries {
        let w = group.parse_element(&e.element)?;
        let c: LaurentPoly = e.coeff.parse()?;
        terms.add(w, c);
    }
    Ok(terms)
}

/// `coeff*Tag(element) + ...` in canonical element order; `0` when empty.
pub(crate) fn terms_to_text(group: &AffineWeylGroup, terms: &Terms, tag: &str) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    terms
        .sorted()
        .into_iter()
        .map(|(w, c)| {
            let basis = format!("{tag}({})", group.format_element(w));
            if c.is_one() {
                basis
            } else {
                format!("({c})*{basis}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

impl HeckeAlgebra {
    /// JSON list of `{element, coeff}` objects in canonical element order.
    pub fn to_json(&self, h: &HeckeElement) -> Result<String> {
        self.check(h)?;
        Ok(serde_json::to_string(&terms_to_json(&self.group, h.raw_terms())).expect("plain data serializes"))
    }

    pub fn parse_json(&self, json: &str) -> Result<HeckeElement> {
        let entries: Vec<HeckeTerm> = serde_json::from_str(json).map_err(|e| Error::parse(e.to_string()))?;
        Ok(HeckeElement::from_terms(self.id(), terms_from_json(&self.group, &entries)?))
    }

    /// Text such as `(v^-1)*T(t[1])`.
    pub fn format_text(&self, h: &HeckeElement) -> Result<String> {
        self.check(h)?;
        Ok(terms_to_text(&self.group, h.raw_terms(), "T"))
    }

    /// Text such as `t[1] + 2*s1`; `0` when empty.
    pub fn format_group_algebra(&self, x: &GroupAlgebraElement) -> Result<String> {
        if x.group_id() != self.id() {
            return Err(Error::DatumMismatch);
        }
        if x.is_zero() {
            return Ok("0".to_string());
        }
        Ok(x.terms()
            .iter()
            .map(|(w, c)| {
                let e = self.group.format_element(w);
                if *c == 1.into() {
                    e
                } else {
                    format!("{c}*{e}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + "))
    }
}
