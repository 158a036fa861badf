//! Individual property checks. Each returns a [`Check`] recording how many
//! instances were examined and the first counterexample, if any.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::Check;
use crate::affine_weyl::AffineWeylGroup;
use crate::antispherical::AntisphericalModule;
use crate::error::Result;
use crate::hecke::{GroupAlgebraElement, HeckeAlgebra, HeckeElement};
use crate::laurent::LaurentPoly;
use crate::root_datum::Weight;
use crate::whittaker;

struct Recorder {
    name: &'static str,
    instances: u64,
    counterexample: Option<String>,
}

impl Recorder {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            instances: 0,
            counterexample: None,
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(describe());
        }
    }

    fn finish(self) -> Check {
        Check {
            name: self.name.to_string(),
            passed: self.counterexample.is_none(),
            instances: self.instances,
            counterexample: self.counterexample,
        }
    }
}

fn fmt_weight(g: &AffineWeylGroup, w: &Weight) -> String {
    match g.datum().to_lattice_coords(w) {
        Ok(c) => Weight::new(&c).to_string(),
        Err(_) => w.to_string(),
    }
}

fn mul(h: &HeckeAlgebra, a: &HeckeElement, b: &HeckeElement) -> Result<HeckeElement> {
    h.multiply(a, b)
}

/// Lattice weights `lambda` with `|lambda_i| <= bound` in lattice coordinates.
fn weight_box(g: &AffineWeylGroup, bound: i64) -> Vec<Weight> {
    g.datum().weights_in_box(bound)
}

/// Dominant lattice weights with `<lambda, 2 rho^vee> <= bound`.
pub fn dominant_up_to(g: &AffineWeylGroup, bound: i64) -> Vec<Weight> {
    g.datum().dominant_weights_up_to(bound)
}

/// Braid relations among the `T_s`, and `T_pi T_s T_pi^-1 = T_sigma(s)`.
pub fn braid_relations(h: &HeckeAlgebra) -> Result<Check> {
    let g = h.group();
    let mut r = Recorder::new("braid_relations");
    for i in 0..=g.rank() {
        for j in i + 1..=g.rank() {
            let p = g.mul(g.simple_reflection(i), g.simple_reflection(j));
            let mut x = p.clone();
            let mut m = 1;
            while x != g.identity() && m <= 6 {
                x = g.mul(&x, &p);
                m += 1;
            }
            if m > 6 {
                continue;
            }
            let (mut a, mut b) = (h.one(), h.one());
            for k in 0..m {
                a = mul(h, &a, &h.t_simple(if k % 2 == 0 { i } else { j }))?;
                b = mul(h, &b, &h.t_simple(if k % 2 == 0 { j } else { i }))?;
            }
            r.record(a == b, || format!("s{i}, s{j}, m = {m}"));
        }
        for k in 0..g.omega().len() {
            let sigma = g.omega_permutation(k)[i];
            let lhs = mul(h, &h.t_omega(k), &h.t_simple(i))?;
            let rhs = mul(h, &h.t_simple(sigma), &h.t_omega(k))?;
            r.record(lhs == rhs, || format!("pi^{k} s{i}"));
        }
    }
    Ok(r.finish())
}

/// `(T_a T_b) T_c = T_a (T_b T_c)` for random elements of length `<= len`.
pub fn associativity(h: &HeckeAlgebra, rng: &mut ChaCha8Rng, count: usize, len: usize) -> Result<Check> {
    let g = h.group();
    let mut r = Recorder::new("associativity");
    for _ in 0..count {
        let [a, b, c] = [0, 1, 2].map(|_| g.random_element(rng, len));
        let (ta, tb, tc) = (h.t(&a), h.t(&b), h.t(&c));
        let lhs = mul(h, &mul(h, &ta, &tb)?, &tc)?;
        let rhs = mul(h, &ta, &mul(h, &tb, &tc)?)?;
        r.record(lhs == rhs, || {
            format!("{} | {} | {}", g.format_element(&a), g.format_element(&b), g.format_element(&c))
        });
    }
    Ok(r.finish())
}

/// `T_w T_w^-1 = T_w^-1 T_w = T_e` for random `w` of length `<= len`.
pub fn inverses(h: &HeckeAlgebra, rng: &mut ChaCha8Rng, count: usize, len: usize) -> Result<Check> {
    let g = h.group();
    let mut r = Recorder::new("t_inverse");
    for _ in 0..count {
        let w = g.random_element(rng, len);
        let inv = h.t_inverse(&w);
        let ok = mul(h, &h.t(&w), &inv)? == h.one() && mul(h, &inv, &h.t(&w))? == h.one();
        r.record(ok, || g.format_element(&w));
    }
    Ok(r.finish())
}

/// `theta_lambda` agrees for two random decompositions `lambda = mu - nu`.
pub fn theta_decomposition(h: &HeckeAlgebra, rng: &mut ChaCha8Rng, count: usize, bound: i64) -> Result<Check> {
    let g = h.group();
    let mut r = Recorder::new("theta_decomposition_independence");
    let box_weights = weight_box(g, bound);
    let extra = dominant_up_to(g, 2 * bound.max(1));
    for _ in 0..count {
        let lambda = &box_weights[rng.gen_range(0..box_weights.len())];
        let (mu, nu) = h.minimal_decomposition(lambda);
        let e1 = &extra[rng.gen_range(0..extra.len())];
        let e2 = &extra[rng.gen_range(0..extra.len())];
        let a = h.theta_with_decomposition(&(&mu + e1), &(&nu + e1))?;
        let b = h.theta_with_decomposition(&(&mu + e2), &(&nu + e2))?;
        r.record(a == b && a == h.theta(lambda)?, || {
            format!("lambda = {}, extra = {}, {}", fmt_weight(g, lambda), fmt_weight(g, e1), fmt_weight(g, e2))
        });
    }
    Ok(r.finish())
}

/// `theta_a theta_b = theta_{a+b} = theta_b theta_a` for random pairs.
pub fn theta_multiplicative(h: &HeckeAlgebra, rng: &mut ChaCha8Rng, count: usize, bound: i64) -> Result<Check> {
    let g = h.group();
    let mut r = Recorder::new("theta_multiplicative");
    let box_weights = weight_box(g, bound);
    for _ in 0..count {
        let a = &box_weights[rng.gen_range(0..box_weights.len())];
        let b = &box_weights[rng.gen_range(0..box_weights.len())];
        let (ta, tb) = (h.theta(a)?, h.theta(b)?);
        let sum = h.theta(&(a + b))?;
        let ok = mul(h, &ta, &tb)? == sum && mul(h, &tb, &ta)? == sum;
        r.record(ok, || format!("{} + {}", fmt_weight(g, a), fmt_weight(g, b)));
    }
    Ok(r.finish())
}

/// `z_lambda` commutes with every `T_s` (affine node included) and `T_pi`.
pub fn center_commutes(h: &HeckeAlgebra, two_rho_bound: i64) -> Result<Check> {
    let g = h.group();
    let mut r = Recorder::new("center_commutes");
    let gens: Vec<(String, HeckeElement)> = (0..=g.rank())
        .map(|i| (format!("s{i}"), h.t_simple(i)))
        .chain((1..g.omega().len()).map(|k| (format!("pi^{k}"), h.t_omega(k))))
        .collect();
    for lambda in dominant_up_to(g, two_rho_bound) {
        let z = h.center_element(&lambda)?;
        for (name, t) in &gens {
            let ok = mul(h, &z, t)? == mul(h, t, &z)?;
            r.record(ok, || format!("z_{} vs T_{name}", fmt_weight(g, &lambda)));
        }
    }
    Ok(r.finish())
}

/// `z_a z_b = sum_c [V_c : V_a (x) V_b] z_c` and `z_a z_b = z_b z_a`.
pub fn center_tensor(h: &HeckeAlgebra, two_rho_bound: i64) -> Result<Check> {
    let g = h.group();
    let d = g.datum();
    let mut r = Recorder::new("center_tensor_products");
    let ws = dominant_up_to(g, two_rho_bound);
    for (i, a) in ws.iter().enumerate() {
        for b in &ws[i..] {
            if d.two_rho_vee_pairing(a) + d.two_rho_vee_pairing(b) > two_rho_bound {
                continue;
            }
            let (za, zb) = (h.center_element(a)?, h.center_element(b)?);
            let prod = mul(h, &za, &zb)?;
            let ch = d.tensor_character(&d.weights_of(a)?, &d.weights_of(b)?);
            let mut want = h.zero();
            for (c, n) in d.decompose_character(&ch)? {
                want = want.checked_add(&h.center_element(&c)?.scale(&LaurentPoly::constant(n)))?;
            }
            let ok = prod == want && prod == mul(h, &zb, &za)?;
            r.record(ok, || format!("z_{} z_{}", fmt_weight(g, a), fmt_weight(g, b)));
        }
    }
    Ok(r.finish())
}

/// `specialize(theta_lambda) = t_lambda` for `|lambda_i| <= bound`.
pub fn specialize_theta(h: &HeckeAlgebra, bound: i64) -> Result<Check> {
    let g = h.group();
    let mut r = Recorder::new("specialize_theta");
    for lambda in weight_box(g, bound) {
        let got = h.specialize_v1(&h.theta(&lambda)?)?;
        let want = GroupAlgebraElement::basis(g, &g.translation(&lambda));
        r.record(got == want, || fmt_weight(g, &lambda));
    }
    Ok(r.finish())
}

/// `specialize(z_lambda) = sum_mu [mu : V_lambda] t_mu`.
pub fn specialize_center(h: &HeckeAlgebra, two_rho_bound: i64) -> Result<Check> {
    let g = h.group();
    let mut r = Recorder::new("specialize_center");
    for lambda in dominant_up_to(g, two_rho_bound) {
        let got = h.specialize_v1(&h.center_element(&lambda)?)?;
        let mut want = GroupAlgebraElement::zero(g);
        for (mu, n) in g.datum().weights_of(&lambda)? {
            want.add(g.translation(&mu), n.into());
        }
        r.record(got == want, || fmt_weight(g, &lambda));
    }
    Ok(r.finish())
}

/// `specialize(a b) = specialize(a) specialize(b)` on random pairs.
pub fn specialize_multiplicative(h: &HeckeAlgebra, rng: &mut ChaCha8Rng, count: usize, len: usize) -> Result<Check> {
    let g = h.group();
    let mut r = Recorder::new("specialize_multiplicative");
    for _ in 0..count {
        let mut pair = Vec::new();
        for _ in 0..2 {
            let mut x = h.zero();
            for _ in 0..3 {
                let w = g.random_element(rng, len);
                let c = LaurentPoly::monomial(rng.gen_range(-2i64..=2), rng.gen_range(-2..=2));
                x = x.checked_add(&h.term(&w, c))?;
            }
            pair.push(x);
        }
        let lhs = h.specialize_v1(&mul(h, &pair[0], &pair[1])?)?;
        let rhs = h.specialize_v1(&pair[0])?.multiply(&h.specialize_v1(&pair[1])?, g)?;
        r.record(lhs == rhs, || {
            format!(
                "{} * {}",
                h.format_text(&pair[0]).unwrap_or_default(),
                h.format_text(&pair[1]).unwrap_or_default()
            )
        });
    }
    Ok(r.finish())
}

/// `euler_pairing(w, w') = (-1)^l(w) delta_{w,w'}` for all `l(w), l(w') <= len`.
pub fn euler_pairing(h: &HeckeAlgebra, len: u32) -> Result<Check> {
    let g = h.group();
    let mut r = Recorder::new("euler_pairing");
    let elems = g.enumerate_up_to_length(len)?;
    for w2 in &elems {
        let class = h.wakimoto_class(w2)?;
        for w in &elems {
            let c = class.coeff(w);
            let pairing = if g.length(w).is_multiple_of(2) { c } else { -c };
            let want: i64 = if w != w2 {
                0
            } else if g.length(w).is_multiple_of(2) {
                1
            } else {
                -1
            };
            r.record(pairing == want.into(), || {
                format!("({}, {}) gave {pairing}", g.format_element(w), g.format_element(w2))
            });
        }
    }
    Ok(r.finish())
}

/// `bar(C'_w) = C'_w`, `P_{w,w} = 1`, the degree bound and non-negative
/// coefficients, for all `l(w) <= len`.
pub fn kl_self_duality(h: &HeckeAlgebra, len: u32) -> Result<Check> {
    let g = h.group();
    let mut r = Recorder::new("kl_self_duality_positivity");
    for w in g.enumerate_up_to_length(len)? {
        let c = h.kl_basis(&w)?;
        let mut ok = h.bar_involution(&c)? == c;
        let lw = g.length(&w) as i32;
        for (x, _) in c.terms() {
            let p = h.kl_polynomial(x, &w)?;
            ok &= p.has_nonnegative_coeffs() && p.min_exp().unwrap_or(0) >= 0;
            if x == &w {
                ok &= p.is_one();
            } else {
                ok &= 2 * p.max_exp().unwrap_or(0) < lw - g.length(x) as i32;
            }
        }
        r.record(ok, || g.format_element(&w));
    }
    Ok(r.finish())
}

/// `act(m_e, T_w) = project_from_hecke(T_w)` for all `l(w) <= len`.
pub fn masp_realizations(m: &AntisphericalModule, len: u32) -> Result<Check> {
    let g = m.group();
    let h = m.hecke();
    let mut r = Recorder::new("masp_realizations_agree");
    for w in g.enumerate_up_to_length(len)? {
        let t = h.t(&w);
        let ok = m.act(&m.m_e(), &t)? == m.project_from_hecke(&t)?;
        r.record(ok, || g.format_element(&w));
    }
    Ok(r.finish())
}

/// `project_from_hecke(C'_w) = 0` exactly when `w` is not in `^fW`.
pub fn masp_kernel(m: &AntisphericalModule, len: u32) -> Result<Check> {
    let g = m.group();
    let h = m.hecke();
    let mut r = Recorder::new("masp_kernel");
    for w in g.enumerate_up_to_length(len)? {
        let zero = m.project_from_hecke(&h.kl_basis(&w)?)?.is_zero();
        r.record(zero != g.is_f_minimal(&w), || g.format_element(&w));
    }
    Ok(r.finish())
}

/// `(m h1) h2 = m (h1 h2)` for random Hecke elements.
pub fn masp_module_axiom(m: &AntisphericalModule, rng: &mut ChaCha8Rng, count: usize, len: usize) -> Result<Check> {
    let g = m.group();
    let h = m.hecke();
    let mut r = Recorder::new("masp_module_axiom");
    for _ in 0..count {
        let a = h.t(&g.random_element(rng, len));
        let b = h.t(&g.random_element(rng, len));
        let x = m.act(&m.m_e(), &h.t(&g.random_element(rng, len)))?;
        let ok = m.act(&m.act(&x, &a)?, &b)? == m.act(&x, &h.multiply(&a, &b)?)?;
        r.record(ok, || format!("{} {}", h.format_text(&a).unwrap_or_default(), h.format_text(&b).unwrap_or_default()));
    }
    Ok(r.finish())
}

/// `m_e z_lambda = sum_mu [mu : V_lambda] m_e theta_mu`.
pub fn masp_central(m: &AntisphericalModule, two_rho_bound: i64) -> Result<Check> {
    let g = m.group();
    let h = m.hecke();
    let mut r = Recorder::new("masp_central_compatibility");
    for lambda in dominant_up_to(g, two_rho_bound) {
        let lhs = m.act(&m.m_e(), &h.center_element(&lambda)?)?;
        let mut rhs = m.zero();
        for (mu, n) in g.datum().weights_of(&lambda)? {
            rhs = rhs.checked_add(&m.theta_basis(&mu)?.scale(&LaurentPoly::constant(n)))?;
        }
        r.record(lhs == rhs, || fmt_weight(g, &lambda));
    }
    Ok(r.finish())
}

/// The matrix of `m_e theta_lambda`, `l(kappa(lambda)) <= len`, is
/// Bruhat-triangular with unit diagonal and has an inverse over
/// `Z[v, v^-1]`.
pub fn freeness(m: &AntisphericalModule, len: u32) -> Result<Check> {
    let g = m.group();
    let mut r = Recorder::new("a_freeness");
    let f = m.a_freeness_matrix(len)?;
    r.record(f.is_bruhat_triangular(g), || "not Bruhat-triangular".to_string());
    for i in 0..f.size() {
        r.record(f.entries[i][i].as_unit().is_some(), || {
            format!("diagonal at {} is {}", g.format_element(&f.basis[i]), f.entries[i][i])
        });
    }
    let inverse_ok = f.inverse().is_some_and(|inv| f.is_left_inverse_of(&inv));
    r.record(inverse_ok, || "no inverse over Z[v, v^-1]".to_string());
    Ok(r.finish())
}

/// `Q_{lambda,mu}(1) = [mu : V_lambda]` for every weight `mu` of `V_lambda`.
pub fn whittaker_multiplicities(g: &AffineWeylGroup, two_rho_bound: i64) -> Result<Check> {
    let mut r = Recorder::new("whittaker_multiplicities");
    for lambda in dominant_up_to(g, two_rho_bound) {
        let table = whittaker::whittaker_table(g, &lambda)?;
        for e in &table.entries {
            r.record(e.matches(), || {
                format!("lambda = {}, mu = {}: Q = {}", fmt_weight(g, &lambda), fmt_weight(g, &e.mu), e.q)
            });
        }
    }
    Ok(r.finish())
}

/// `Q_{lambda,w(mu)} = Q_{lambda,mu}` for all `w`, and the unreduced
/// alternating sum at every translate `w(mu)` evaluates to `[mu : V_lambda]`
/// at `q = 1`.
pub fn whittaker_invariance(g: &AffineWeylGroup, two_rho_bound: i64) -> Result<Check> {
    let d = g.datum();
    let weyl = d.weyl_group()?;
    let mut r = Recorder::new("whittaker_weyl_invariance");
    for lambda in dominant_up_to(g, two_rho_bound) {
        let weights = d.weights_of(&lambda)?;
        let mut mus: Vec<Weight> = d.dominant_weights_below(&lambda);
        mus.retain(|mu| d.contains(mu));
        for mu in mus {
            let q = whittaker::whittaker_trace(d, &lambda, &mu)?;
            let mult = weights.get(&mu).copied().unwrap_or(0);
            for w in weyl.elements() {
                let wmu = weyl.act(w, &mu);
                let qw = whittaker::whittaker_trace(d, &lambda, &wmu)?;
                let unreduced = whittaker::lusztig_q_analogue(d, &lambda, &wmu)?;
                r.record(qw == q && unreduced.eval_one() == mult.into(), || {
                    format!("lambda = {}, mu = {}", fmt_weight(g, &lambda), fmt_weight(g, &wmu))
                });
            }
        }
    }
    Ok(r.finish())
}

/// Non-negative coefficients and `deg P_{lambda,mu} <= <lambda - mu, rho^vee>`.
pub fn whittaker_positivity(g: &AffineWeylGroup, two_rho_bound: i64) -> Result<Check> {
    let d = g.datum();
    let mut r = Recorder::new("whittaker_positivity_degree");
    for lambda in dominant_up_to(g, two_rho_bound) {
        for mu in d.dominant_weights_below(&lambda) {
            if !d.contains(&mu) {
                continue;
            }
            let p = whittaker::lusztig_q_analogue(d, &lambda, &mu)?;
            let deg = (d.two_rho_vee_pairing(&lambda) - d.two_rho_vee_pairing(&mu)) / 2;
            let ok = p.has_nonnegative_coeffs() && p.max_exp().is_none_or(|e| e as i64 <= deg);
            r.record(ok, || format!("lambda = {}, mu = {}: P = {}", fmt_weight(g, &lambda), fmt_weight(g, &mu), p));
        }
    }
    Ok(r.finish())
}
