//! Lusztig's q-analogue of weight multiplicity and the Whittaker trace
//! polynomials
//!
//! ```text
//! P_{lambda,mu}(q) = sum_{w in W_f} (-1)^l(w) P_q(w(lambda + rho) - (mu + rho))
//! Q_{lambda,mu}(t) = t^(l(lambda) + l(w_0)) P_{lambda,mu+}(t^2)
//! ```
//!
//! where `P_q` is the q-Kostant partition function and `mu+` the dominant
//! representative of `mu`.

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::affine_weyl::{AffineWeylElement, AffineWeylGroup};
use crate::error::{Error, Result};
use crate::hecke::HeckeAlgebra;
use crate::laurent::LaurentPoly;
use crate::root_datum::{KostantPartition, RootDatum, Weight};

/// The exponent `l(lambda)` in `Q_{lambda,mu}`, read as the length of the
/// translation `t_lambda`, which is `<lambda, 2 rho^vee>` for dominant
/// `lambda`.
pub fn lambda_length(datum: &RootDatum, lambda: &Weight) -> i64 {
    datum.two_rho_vee_pairing(lambda)
}

fn check_dominant(datum: &RootDatum, lambda: &Weight) -> Result<()> {
    datum.check_weight(lambda)?;
    if !datum.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.clone()));
    }
    Ok(())
}

/// `P_{lambda,mu}(q)` by the alternating sum, evaluated at `mu` exactly as
/// given (no reduction to the dominant chamber).
pub fn lusztig_q_analogue(datum: &RootDatum, lambda: &Weight, mu: &Weight) -> Result<LaurentPoly> {
    check_dominant(datum, lambda)?;
    datum.check_weight(mu)?;
    let mut kp = KostantPartition::new(datum);
    alternating_sum(datum, &mut kp, lambda, mu)
}

fn alternating_sum(datum: &RootDatum, kp: &mut KostantPartition<'_>, lambda: &Weight, mu: &Weight) -> Result<LaurentPoly> {
    let weyl = datum.weyl_group()?;
    let top = lambda + datum.rho();
    let shift = mu + datum.rho();
    let mut total = LaurentPoly::zero();
    for w in weyl.elements() {
        let term = kp.eval(&(&weyl.act(w, &top) - &shift));
        if weyl.length(w) % 2 == 0 {
            total += term;
        } else {
            total -= &term;
        }
    }
    Ok(total)
}

/// `Q_{lambda,mu}(t)`.
pub fn whittaker_trace(datum: &RootDatum, lambda: &Weight, mu: &Weight) -> Result<LaurentPoly> {
    check_dominant(datum, lambda)?;
    datum.check_weight(mu)?;
    let mut kp = KostantPartition::new(datum);
    trace_with(datum, &mut kp, lambda, mu)
}

fn trace_with(datum: &RootDatum, kp: &mut KostantPartition<'_>, lambda: &Weight, mu: &Weight) -> Result<LaurentPoly> {
    let (mu_plus, _) = datum.dominant_representative(mu);
    let p = alternating_sum(datum, kp, lambda, &mu_plus)?;
    Ok(q_from_p(datum, lambda, &p))
}

fn q_from_p(datum: &RootDatum, lambda: &Weight, p: &LaurentPoly) -> LaurentPoly {
    let exp = lambda_length(datum, lambda) + datum.longest_length() as i64;
    p.substitute_power(2).shift(exp as i32)
}

/// One row of a Whittaker table. Weights are in lattice coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WhittakerRow {
    pub lambda: String,
    pub mu: String,
    pub kappa_mu: String,
    #[serde(rename = "P_q")]
    pub p_q: String,
    #[serde(rename = "Q_t")]
    pub q_t: String,
    #[serde(rename = "Q_at_1")]
    pub q_at_1: i64,
    pub freudenthal_mult: u64,
    #[serde(rename = "match")]
    pub matches: bool,
}

/// `Q_{lambda,mu}` for every weight `mu` of `V_lambda`.
#[derive(Debug, Clone)]
pub struct WhittakerTable {
    pub lambda: Weight,
    /// `(mu, kappa(mu), P_{lambda,mu+}(q), Q_{lambda,mu}(t), [mu : V_lambda])`,
    /// sorted by `kappa(mu)` (length, then canonical order).
    pub entries: Vec<WhittakerEntry>,
}

#[derive(Debug, Clone)]
pub struct WhittakerEntry {
    pub mu: Weight,
    pub kappa: AffineWeylElement,
    pub p: LaurentPoly,
    pub q: LaurentPoly,
    pub multiplicity: u64,
}

impl WhittakerEntry {
    pub fn matches(&self) -> bool {
        self.q.eval_one() == self.multiplicity.into()
    }
}

/// The table of `Q_{lambda,mu}` over the weights of `V_lambda`; all other
/// `mu` have `Q_{lambda,mu} = 0`.
pub fn whittaker_table(group: &AffineWeylGroup, lambda: &Weight) -> Result<WhittakerTable> {
    let datum = group.datum();
    check_dominant(datum, lambda)?;
    let mut kp = KostantPartition::new(datum);
    let mut entries = Vec::new();
    for (mu, multiplicity) in datum.weights_of(lambda)? {
        let (mu_plus, _) = datum.dominant_representative(&mu);
        let p = alternating_sum(datum, &mut kp, lambda, &mu_plus)?;
        let q = q_from_p(datum, lambda, &p);
        entries.push(WhittakerEntry {
            kappa: group.kappa(&mu),
            mu,
            p,
            q,
            multiplicity,
        });
    }
    entries.sort_by_cached_key(|e| (group.length(&e.kappa), e.kappa.clone()));
    Ok(WhittakerTable {
        lambda: lambda.clone(),
        entries,
    })
}

impl WhittakerTable {
    pub fn rows(&self, group: &AffineWeylGroup) -> Vec<WhittakerRow> {
        let datum = group.datum();
        let coords = |w: &Weight| Weight::new(&datum.to_lattice_coords(w).expect("lattice weight")).to_string();
        self.entries
            .iter()
            .map(|e| WhittakerRow {
                lambda: coords(&self.lambda),
                mu: coords(&e.mu),
                kappa_mu: group.format_element(&e.kappa),
                p_q: e.p.to_string_var("q"),
                q_t: e.q.to_string_var("t"),
                q_at_1: e.q.eval_one().to_i64().expect("multiplicities fit in i64"),
                freudenthal_mult: e.multiplicity,
                matches: e.matches(),
            })
            .collect()
    }
}

/// Compares `P_{lambda,mu}` with the Kazhdan-Lusztig polynomial `P_{x,w}`
/// for a caller-chosen pair `(x, w)`.
pub fn kl_cross_check(
    hecke: &HeckeAlgebra,
    lambda: &Weight,
    mu: &Weight,
    x: &AffineWeylElement,
    w: &AffineWeylElement,
) -> Result<bool> {
    let datum = hecke.group().datum();
    let (mu_plus, _) = datum.dominant_representative(mu);
    let p = lusztig_q_analogue(datum, lambda, &mu_plus)?;
    Ok(p == hecke.kl_polynomial(x, w)?)
}
