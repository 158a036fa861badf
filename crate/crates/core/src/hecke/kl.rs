//! Kazhdan-Lusztig basis `C'_w = v^-l(w) sum_{x <= w} P_{x,w}(v^2) T_x`.

use std::sync::Arc;

use num_bigint::BigInt;

use super::{HeckeAlgebra, HeckeElement};
use crate::affine_weyl::AffineWeylElement;
use crate::error::Result;
use crate::laurent::LaurentPoly;
use crate::terms::Terms;

impl HeckeAlgebra {
    /// The self-dual element `C'_w`. Refused with a budget error when
    /// `l(w)` exceeds the configured maximum.
    pub fn kl_basis(&self, w: &AffineWeylElement) -> Result<HeckeElement> {
        self.group.check(w)?;
        Ok((*self.kl_element(w)?).clone())
    }

    pub(crate) fn kl_element(&self, w: &AffineWeylElement) -> Result<Arc<HeckeElement>> {
        let g = &self.group;
        let len = g.length(w);
        g.budget().check_kl(len)?;
        if let Some(h) = self.kl_cache.lock().unwrap().get(w) {
            return Ok(h.clone());
        }
        let r = g.reduced_word(w);
        let h = if r.omega != 0 {
            // C'_{pi w'} = T_pi C'_{w'}
            let pi = &g.omega()[r.omega];
            let rest = g.mul(&g.inverse(pi), w);
            let base = self.kl_element(&rest)?;
            let terms: Terms = base
                .raw_terms()
                .iter()
                .map(|(x, c)| (g.mul(pi, x), c.clone()))
                .collect();
            HeckeElement::from_terms(self.id(), terms)
        } else if len == 0 {
            self.one()
        } else {
            let s = r.word[0] as usize;
            let u = g.left_mul_simple(s, w);
            let cu = self.kl_element(&u)?;
            // C'_s C'_u = v^-1 (T_s + 1) C'_u
            let mut terms = self.left_simple(s, cu.raw_terms());
            terms.add_scaled(cu.raw_terms(), &LaurentPoly::one());
            terms = terms.scaled(&LaurentPoly::monomial(1, -1));
            let mut lower: Vec<(&AffineWeylElement, &LaurentPoly)> = cu.raw_terms().iter().collect();
            lower.sort_by(|a, b| a.0.cmp(b.0));
            for (z, p) in lower {
                if z == &u || !g.is_left_descent(s, z) {
                    continue;
                }
                let mu = mu_coefficient(p, g.length(z));
                if mu != BigInt::from(0) {
                    let cz = self.kl_element(z)?;
                    terms.add_scaled(cz.raw_terms(), &LaurentPoly::constant(-mu));
                }
            }
            HeckeElement::from_terms(self.id(), terms)
        };
        let h = Arc::new(h);
        self.kl_cache.lock().unwrap().insert(w.clone(), h.clone());
        Ok(h)
    }

    /// `P_{x,w}` as a polynomial in `q`; zero unless `x <= w`.
    pub fn kl_polynomial(&self, x: &AffineWeylElement, w: &AffineWeylElement) -> Result<LaurentPoly> {
        self.group.check(x)?;
        let c = self.kl_element(w)?;
        let p = c.coeff(x).shift(self.group.length(w) as i32);
        Ok(p
            .halve_exponents()
            .expect("KL coefficients involve only even powers after normalization"))
    }

    /// `mu(x, w)`: the coefficient of `q^((l(w) - l(x) - 1) / 2)` in `P_{x,w}`.
    pub fn kl_mu(&self, x: &AffineWeylElement, w: &AffineWeylElement) -> Result<BigInt> {
        let c = self.kl_element(w)?;
        Ok(mu_coefficient(&c.coeff(x), self.group.length(x)))
    }
}

/// With `p = v^-l(w) P_{x,w}(v^2)` the coefficient of `T_x` in `C'_w`, the
/// top allowed term of `P_{x,w}` sits at `v^(-l(x) - 1)`.
fn mu_coefficient(p: &LaurentPoly, len_x: u32) -> BigInt {
    p.coeff(-(len_x as i32) - 1)
}
