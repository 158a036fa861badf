//! Characters of irreducible modules: Freudenthal's recursion over dominant
//! weights, extended to all weights by Weyl group invariance.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use super::{RootDatum, Weight};
use crate::error::{Error, Result};

/// Dominant part of the character of `V_lambda`.
#[derive(Debug, Clone)]
pub struct Character {
    pub highest_weight: Weight,
    pub dominant: BTreeMap<Weight, u64>,
}

/// Weight multiset as a sorted map `weight -> multiplicity`.
pub type WeightMultiset = BTreeMap<Weight, u64>;

/// One entry of the JSON form of a weight multiset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightMultiplicity {
    pub coords: Vec<i64>,
    pub mult: u64,
}

impl RootDatum {
    /// Dominant weights `mu` with `lambda - mu` a non-negative integer
    /// combination of simple roots.
    pub fn dominant_weights_below(&self, lambda: &Weight) -> Vec<Weight> {
        let n = self.rank();
        let bounds: Vec<i64> = self
            .root_coords(lambda)
            .iter()
            .map(|q| q.floor().to_integer() as i64)
            .collect();
        if bounds.iter().any(|&b| b < 0) {
            return vec![lambda.clone()];
        }
        let mut out = Vec::new();
        let mut c = vec![0i64; n];
        loop {
            let mu = lambda - &self.weight_from_root_coords(&c);
            if self.is_dominant(&mu) {
                out.push(mu);
            }
            let mut i = 0;
            loop {
                if i == n {
                    return out;
                }
                if c[i] < bounds[i] {
                    c[i] += 1;
                    break;
                }
                c[i] = 0;
                i += 1;
            }
        }
    }

    /// The character of `V_lambda` restricted to dominant weights, memoized
    /// per datum.
    pub fn character(&self, lambda: &Weight) -> Result<Arc<Character>> {
        if lambda.rank() != self.rank() {
            return Err(Error::RankMismatch(lambda.clone(), self.rank()));
        }
        if !self.is_dominant(lambda) {
            return Err(Error::NotDominant(lambda.clone()));
        }
        if let Some(c) = self.characters.lock().unwrap().get(lambda) {
            return Ok(c.clone());
        }
        let ch = Arc::new(self.freudenthal(lambda));
        self.characters
            .lock()
            .unwrap()
            .entry(lambda.clone())
            .or_insert(ch.clone());
        Ok(ch)
    }

    fn freudenthal(&self, lambda: &Weight) -> Character {
        let rho = self.rho();
        let lr = lambda + rho;
        let top = self.form(&lr, &lr);
        let mut candidates = self.dominant_weights_below(lambda);
        // Process from the top: larger height difference later.
        candidates.sort_by_key(|mu| {
            let c = self.root_coords(&(lambda - mu));
            c.iter().map(|q| q.to_integer()).sum::<i128>()
        });
        let mut table: FxHashMap<Weight, u64> = FxHashMap::default();
        for mu in candidates {
            if mu == *lambda {
                table.insert(mu, 1);
                continue;
            }
            let mut numer: i128 = 0;
            for root in self.positive_roots() {
                let mut k = 1;
                loop {
                    let nu = mu.add_multiple(&root.weight, k);
                    let (dom, _) = self.dominant_representative(&nu);
                    let Some(&m) = table.get(&dom) else {
                        break;
                    };
                    numer += m as i128 * self.form(&nu, &root.weight);
                    k += 1;
                }
            }
            numer *= 2;
            let mr = &mu + rho;
            let denom = top - self.form(&mr, &mr);
            assert!(denom > 0, "Freudenthal denominator must be positive");
            assert_eq!(numer % denom, 0, "Freudenthal recursion produced a non-integer");
            let m = numer / denom;
            if m > 0 {
                table.insert(mu, m as u64);
            }
        }
        Character {
            highest_weight: lambda.clone(),
            dominant: table.into_iter().collect(),
        }
    }

    /// Dimension of the `mu`-weight space of `V_lambda`.
    pub fn weight_multiplicity(&self, lambda: &Weight, mu: &Weight) -> Result<u64> {
        let ch = self.character(lambda)?;
        if mu.rank() != self.rank() {
            return Err(Error::RankMismatch(mu.clone(), self.rank()));
        }
        let (dom, _) = self.dominant_representative(mu);
        Ok(ch.dominant.get(&dom).copied().unwrap_or(0))
    }

    /// The full weight multiset of `V_lambda`.
    pub fn weights_of(&self, lambda: &Weight) -> Result<WeightMultiset> {
        let ch = self.character(lambda)?;
        let mut out = BTreeMap::new();
        for (dom, &m) in &ch.dominant {
            for mu in self.orbit(dom) {
                out.insert(mu, m);
            }
        }
        Ok(out)
    }

    /// Weyl's dimension formula.
    pub fn weyl_dimension(&self, lambda: &Weight) -> BigInt {
        let lr = lambda + self.rho();
        let mut num = BigInt::from(1);
        let mut den = BigInt::from(1);
        for r in self.positive_roots() {
            num *= r.pair(&lr);
            den *= r.pair(self.rho());
        }
        num / den
    }

    pub fn weight_multiset_json(multiset: &WeightMultiset) -> Vec<WeightMultiplicity> {
        multiset
            .iter()
            .map(|(w, &m)| WeightMultiplicity {
                coords: w.coords().to_vec(),
                mult: m,
            })
            .collect()
    }

    /// Parses the JSON array form `[{"coords": [...], "mult": n}, ...]`,
    /// checking ranks. Repeated weights are summed.
    pub fn parse_weight_multiset(&self, json: &str) -> Result<WeightMultiset> {
        let entries: Vec<WeightMultiplicity> =
            serde_json::from_str(json).map_err(|e| Error::parse(e.to_string()))?;
        let mut out = WeightMultiset::new();
        for e in entries {
            let w = Weight::new(&e.coords);
            if w.rank() != self.rank() {
                return Err(Error::RankMismatch(w, self.rank()));
            }
            super::check_label_range(w.coords().iter().map(|&c| c as i128))?;
            let slot = out.entry(w).or_insert(0u64);
            *slot = slot
                .checked_add(e.mult)
                .ok_or_else(|| Error::parse("multiplicity overflow"))?;
        }
        out.retain(|_, m| *m > 0);
        Ok(out)
    }

    /// Character of a tensor product, as a weight multiset.
    pub fn tensor_character(&self, a: &WeightMultiset, b: &WeightMultiset) -> WeightMultiset {
        let mut out = WeightMultiset::new();
        for (x, m) in a {
            for (y, k) in b {
                *out.entry(x + y).or_insert(0) += m * k;
            }
        }
        out
    }

    /// Decomposes a `W_f`-invariant weight multiset into irreducible
    /// characters by peeling off highest weights.
    pub fn decompose_character(&self, ch: &WeightMultiset) -> Result<BTreeMap<Weight, u64>> {
        let mut rest: BTreeMap<Weight, i128> = ch.iter().map(|(w, &m)| (w.clone(), m as i128)).collect();
        let mut out = BTreeMap::new();
        loop {
            rest.retain(|_, m| *m != 0);
            // A weight maximal for the height function is dominant and highest.
            let Some(top) = rest
                .keys()
                .filter(|w| self.is_dominant(w))
                .max_by_key(|w| self.rho_height(w))
                .cloned()
            else {
                break;
            };
            let m = rest[&top];
            if m < 0 {
                return Err(Error::parse(format!("character is not effective at {top}")));
            }
            out.insert(top.clone(), m as u64);
            for (mu, k) in self.weights_of(&top)? {
                *rest.entry(mu).or_insert(0) -= m * k as i128;
            }
        }
        if rest.is_empty() {
            Ok(out)
        } else {
            Err(Error::parse("character is not W_f-invariant".to_string()))
        }
    }

    fn rho_height(&self, w: &Weight) -> i128 {
        self.form(w, self.rho())
    }
}
