//! Bernstein elements `theta_lambda` and the central elements `z_lambda`.

use std::sync::Arc;

use super::{HeckeAlgebra, HeckeElement};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::root_datum::Weight;
use crate::terms::Terms;

impl HeckeAlgebra {
    /// `theta_lambda`, equal to `v^-l(t_lambda) T_{t_lambda}` for dominant
    /// `lambda` and multiplicative in `lambda`.
    pub fn theta(&self, lambda: &Weight) -> Result<HeckeElement> {
        let datum = self.group.datum();
        datum.check_weight(lambda)?;
        if let Some(h) = self.theta_cache.lock().unwrap().get(lambda) {
            return Ok((**h).clone());
        }
        let (mu, nu) = self.minimal_decomposition(lambda);
        let h = self.theta_with_decomposition(&mu, &nu)?;
        self.theta_cache.lock().unwrap().insert(lambda.clone(), Arc::new(h.clone()));
        Ok(h)
    }

    /// `lambda = mu - nu` with `nu` the smallest dominant lattice vector
    /// (componentwise in fundamental weights) making `mu` dominant.
    pub fn minimal_decomposition(&self, lambda: &Weight) -> (Weight, Weight) {
        let datum = self.group.datum();
        let nu: Vec<i64> = lambda
            .coords()
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                let m = datum.fundamental_multiple(i);
                let deficit = (-c).max(0);
                (deficit + m - 1) / m * m
            })
            .collect();
        let nu = Weight::new(&nu);
        (lambda + &nu, nu)
    }

    /// `v^-l(t_mu) T_{t_mu} * (v^-l(t_nu) T_{t_nu})^-1` for dominant lattice
    /// weights `mu`, `nu`.
    pub fn theta_with_decomposition(&self, mu: &Weight, nu: &Weight) -> Result<HeckeElement> {
        let datum = self.group.datum();
        for w in [mu, nu] {
            datum.check_weight(w)?;
            if !datum.is_dominant(w) {
                return Err(Error::NotDominant(w.clone()));
            }
        }
        let t_mu = self.group.translation(mu);
        let t_nu = self.group.translation(nu);
        let shift = self.group.length(&t_nu) as i32 - self.group.length(&t_mu) as i32;
        let inv = self.t_inverse(&t_nu);
        let terms = self.left_t(&t_mu, inv.raw_terms());
        let v = LaurentPoly::monomial(1, shift);
        Ok(HeckeElement::from_terms(self.id(), terms.scaled(&v)))
    }

    /// `z_lambda = sum_mu [mu : V_lambda] theta_mu` for dominant `lambda`.
    pub fn center_element(&self, lambda: &Weight) -> Result<HeckeElement> {
        let datum = self.group.datum();
        datum.check_weight(lambda)?;
        if !datum.is_dominant(lambda) {
            return Err(Error::NotDominant(lambda.clone()));
        }
        let mut out = Terms::default();
        for (mu, mult) in datum.weights_of(lambda)? {
            let theta = self.theta(&mu)?;
            out.add_scaled(theta.raw_terms(), &LaurentPoly::constant(mult));
        }
        Ok(HeckeElement::from_terms(self.id(), out))
    }
}
