//! Text notation for group elements.
//!
//! An element is written as a `*`-separated product of factors:
//! `e` (identity), `t[a,b,...]` (translation, lattice coordinates),
//! `s<k>` (simple reflection, `k` in `0..=rank`), `pi` and `pi^k`
//! (length-zero elements). The canonical printed form is
//! `t[lambda]*s_i*...` with a reduced word for the finite part, or `e`.

use super::{AffineWeylElement, AffineWeylGroup};
use crate::error::{Error, Result};
use crate::root_datum::Weight;

impl AffineWeylGroup {
    /// Parses an element written in the product notation.
    pub fn parse_element(&self, text: &str) -> Result<AffineWeylElement> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::parse("empty group element"));
        }
        let mut acc = self.identity();
        for factor in text.split('*') {
            let f = self.parse_factor(factor.trim())?;
            acc = self.mul(&acc, &f);
        }
        Ok(acc)
    }

    fn parse_factor(&self, f: &str) -> Result<AffineWeylElement> {
        if f == "e" {
            return Ok(self.identity());
        }
        if let Some(rest) = f.strip_prefix('t') {
            let coords = Weight::parse(rest)?;
            if coords.rank() != self.rank() {
                return Err(Error::RankMismatch(coords, self.rank()));
            }
            let lambda = self.datum.from_lattice_coords(coords.coords())?;
            return Ok(self.translation(&lambda));
        }
        if let Some(rest) = f.strip_prefix("pi") {
            let k: i64 = if rest.is_empty() {
                1
            } else {
                let digits = rest
                    .strip_prefix('^')
                    .ok_or_else(|| Error::parse(format!("bad factor `{f}`")))?;
                digits
                    .parse()
                    .map_err(|_| Error::parse(format!("bad exponent in `{f}`")))?
            };
            return self.omega_power(k).ok_or_else(|| Error::parse(format!("no length-zero element `{f}`")));
        }
        if let Some(rest) = f.strip_prefix('s') {
            if !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) {
                if let Ok(i) = rest.parse::<usize>() {
                    if i <= self.rank() {
                        return Ok(self.simple[i].clone());
                    }
                }
                return Err(Error::parse(format!(
                    "simple reflection `{f}` out of range 0..={}",
                    self.rank()
                )));
            }
        }
        Err(Error::parse(format!("bad factor `{f}`")))
    }

    fn omega_power(&self, k: i64) -> Option<AffineWeylElement> {
        let n = self.omega.len() as i64;
        if self.omega_cyclic {
            Some(self.omega[k.rem_euclid(n) as usize].clone())
        } else if (0..n).contains(&k) {
            Some(self.omega[k as usize].clone())
        } else {
            None
        }
    }

    /// Canonical text: `t[lambda]` in lattice coordinates followed by the
    /// reduced word of the finite part, e.g. `t[1]*s1`; `e` for the identity.
    pub fn format_element(&self, w: &AffineWeylElement) -> String {
        let mut parts = Vec::new();
        if !w.translation.is_zero() {
            let coords = self
                .datum
                .to_lattice_coords(&w.translation)
                .expect("group elements translate by lattice vectors");
            parts.push(format!("t{}", Weight::new(&coords)));
        }
        for &i in self.weyl.reduced_word(w.finite) {
            parts.push(format!("s{}", i + 1));
        }
        if parts.is_empty() {
            "e".to_string()
        } else {
            parts.join("*")
        }
    }

    /// Text built from the reduced expression `pi^k * s_{i_1} * ...`,
    /// e.g. `pi*s1` or `s0*s1`.
    pub fn format_word(&self, w: &AffineWeylElement) -> String {
        let r = self.reduced_word(w);
        let mut parts = Vec::new();
        match r.omega {
            0 => {}
            1 => parts.push("pi".to_string()),
            k => parts.push(format!("pi^{k}")),
        }
        parts.extend(r.word.iter().map(|i| format!("s{i}")));
        if parts.is_empty() {
            "e".to_string()
        } else {
            parts.join("*")
        }
    }
}
