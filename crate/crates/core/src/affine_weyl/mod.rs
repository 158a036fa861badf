//! The extended affine Weyl group `W = Lambda x| W_f`.
//!
//! An element is stored canonically as the pair `(lambda, w_f)` standing for
//! `t_lambda * w_f`, so equality and hashing are structural. Lengths come from
//! the Iwahori-Matsumoto formula; reduced words are derived on demand.
//!
//! Generators are numbered `0..=n`: `0` is the affine simple reflection
//! `s_0 = t_phi s_phi` (with `phi` the short dominant root, so that `phi^vee`
//! is the highest coroot) and `i >= 1` is the finite simple reflection `s_i`.

mod notation;

use std::collections::VecDeque;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex};

use rand::Rng;
use rustc_hash::{FxHashMap, FxHashSet};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::root_datum::{FiniteWeylElement, FiniteWeylGroup, RootDatum, Weight};

static NEXT_GROUP_ID: AtomicU64 = AtomicU64::new(1);

/// `t_translation * finite`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct AffineWeylElement {
    pub translation: Weight,
    pub finite: FiniteWeylElement,
}

impl AffineWeylElement {
    pub fn new(translation: Weight, finite: FiniteWeylElement) -> Self {
        Self { translation, finite }
    }

    pub fn translation(lambda: Weight) -> Self {
        Self::new(lambda, FiniteWeylElement::IDENTITY)
    }
}

/// `w = pi * s_{word[0]} * ... * s_{word[k-1]}` with `k = length(w)` and `pi`
/// the length-zero element with index `omega`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedWord {
    pub omega: usize,
    pub word: Vec<u8>,
}

pub struct AffineWeylGroup {
    id: u64,
    datum: Arc<RootDatum>,
    weyl: Arc<FiniteWeylGroup>,
    budget: Budget,
    identity: AffineWeylElement,
    simple: Vec<AffineWeylElement>,
    omega: Vec<AffineWeylElement>,
    omega_index: FxHashMap<Vec<i64>, usize>,
    omega_cyclic: bool,
    omega_perm: Vec<Vec<usize>>,
    words: Mutex<FxHashMap<AffineWeylElement, Arc<ReducedWord>>>,
}

impl std::fmt::Debug for AffineWeylGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("AffineWeylGroup")
            .field("datum", &self.datum)
            .field("omega", &self.omega.len())
            .finish()
    }
}

impl AffineWeylGroup {
    pub fn new(datum: Arc<RootDatum>) -> Result<Arc<Self>> {
        Self::with_budget(datum, Budget::default())
    }

    pub fn with_budget(datum: Arc<RootDatum>, budget: Budget) -> Result<Arc<Self>> {
        let weyl = datum.weyl_group()?.clone();
        let n = datum.rank();
        let phi_index = datum
            .positive_roots()
            .iter()
            .position(|r| std::ptr::eq(r, datum.short_dominant_root()))
            .unwrap();
        let phi = datum.short_dominant_root().weight.clone();
        let mut simple = vec![AffineWeylElement::new(phi, weyl.root_reflection(&datum, phi_index))];
        simple.extend((0..n).map(|i| AffineWeylElement::new(Weight::zero(n), weyl.simple_reflection(i))));

        let mut group = AffineWeylGroup {
            id: NEXT_GROUP_ID.fetch_add(1, Ordering::Relaxed),
            identity: AffineWeylElement::translation(Weight::zero(n)),
            datum,
            weyl,
            budget,
            simple,
            omega: Vec::new(),
            omega_index: FxHashMap::default(),
            omega_cyclic: true,
            omega_perm: Vec::new(),
            words: Mutex::new(FxHashMap::default()),
        };
        group.build_omega();
        Ok(Arc::new(group))
    }

    fn build_omega(&mut self) {
        let n = self.rank();
        let target = self.datum.fundamental_group_order() as usize;
        let mut found: FxHashMap<Vec<i64>, AffineWeylElement> = FxHashMap::default();
        'search: for bound in 0.. {
            // Lattice coordinates in [0, bound]^n cover every class of
            // Lambda / Q once bound reaches the exponent of the group.
            let mut c = vec![0i64; n];
            loop {
                let lambda = self.datum.from_lattice_coords(&c).unwrap();
                let key = self.datum.root_lattice_class(&lambda);
                if let std::collections::hash_map::Entry::Vacant(e) = found.entry(key) {
                    e.insert(self.strip_right_descents(AffineWeylElement::translation(lambda)));
                    if found.len() == target {
                        break 'search;
                    }
                }
                let mut i = 0;
                loop {
                    if i == n {
                        break;
                    }
                    if c[i] < bound {
                        c[i] += 1;
                        break;
                    }
                    c[i] = 0;
                    i += 1;
                }
                if i == n {
                    break;
                }
            }
        }
        let mut elems: Vec<AffineWeylElement> = found.into_values().collect();
        elems.sort();
        let e_pos = elems.iter().position(|x| *x == self.identity).unwrap();
        elems.remove(e_pos);
        let order_of = |g: &AffineWeylElement| {
            let mut x = g.clone();
            let mut k = 1;
            while x != self.identity {
                x = self.mul(&x, g);
                k += 1;
            }
            k
        };
        let generator = elems.iter().find(|g| order_of(g) == target).cloned();
        let mut omega = vec![self.identity.clone()];
        match generator {
            Some(g) => {
                for _ in 1..target {
                    let next = self.mul(omega.last().unwrap(), &g);
                    omega.push(next);
                }
            }
            None => {
                self.omega_cyclic = elems.is_empty();
                omega.extend(elems);
            }
        }
        self.omega_index = omega
            .iter()
            .enumerate()
            .map(|(k, pi)| (self.datum.root_lattice_class(&pi.translation), k))
            .collect();
        self.omega_perm = omega
            .iter()
            .map(|pi| {
                let pi_inv = self.inverse(pi);
                (0..=n)
                    .map(|i| {
                        let conj = self.mul(&self.mul(pi, &self.simple[i]), &pi_inv);
                        self.simple
                            .iter()
                            .position(|s| *s == conj)
                            .expect("length-zero elements permute the simple reflections")
                    })
                    .collect()
            })
            .collect();
        self.omega = omega;
    }

    fn strip_right_descents(&self, mut x: AffineWeylElement) -> AffineWeylElement {
        loop {
            let len = self.length(&x);
            if len == 0 {
                return x;
            }
            let s = self
                .simple
                .iter()
                .find(|s| self.length(&self.mul(&x, s)) < len)
                .expect("positive-length elements have a right descent");
            x = self.mul(&x, s);
        }
    }

    /// Process-unique identifier of this group instance.
    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn datum(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    pub fn finite_group(&self) -> &Arc<FiniteWeylGroup> {
        &self.weyl
    }

    pub fn budget(&self) -> &Budget {
        &self.budget
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn identity(&self) -> AffineWeylElement {
        self.identity.clone()
    }

    /// Simple reflection `s_i`, `i` in `0..=rank`.
    pub fn simple_reflection(&self, i: usize) -> &AffineWeylElement {
        &self.simple[i]
    }

    pub fn simple_reflections(&self) -> &[AffineWeylElement] {
        &self.simple
    }

    /// The length-zero elements, `omega()[k]` being `pi^k`. When `Lambda / Q`
    /// is cyclic these are the powers of a fixed generator `pi`; otherwise
    /// they are listed in canonical order starting with the identity.
    pub fn omega(&self) -> &[AffineWeylElement] {
        &self.omega
    }

    pub fn omega_is_cyclic(&self) -> bool {
        self.omega_cyclic
    }

    /// The permutation `i -> sigma(i)` of `0..=rank` with
    /// `pi^k s_i pi^-k = s_sigma(i)`.
    pub fn omega_permutation(&self, k: usize) -> &[usize] {
        &self.omega_perm[k]
    }

    /// Index of the length-zero element of the coset `Omega`-component of `w`.
    pub fn omega_index(&self, w: &AffineWeylElement) -> usize {
        self.omega_index[&self.datum.root_lattice_class(&w.translation)]
    }

    pub fn translation(&self, lambda: &Weight) -> AffineWeylElement {
        AffineWeylElement::translation(lambda.clone())
    }

    pub fn finite_element(&self, w: FiniteWeylElement) -> AffineWeylElement {
        AffineWeylElement::new(Weight::zero(self.rank()), w)
    }

    /// Checks that `w` is a well-formed element of this group.
    pub fn check(&self, w: &AffineWeylElement) -> Result<()> {
        if w.translation.rank() != self.rank() || w.finite.index() >= self.weyl.order() {
            return Err(Error::DatumMismatch);
        }
        if !self.datum.contains(&w.translation) {
            return Err(Error::NotInLattice(w.translation.clone()));
        }
        Ok(())
    }

    /// `t_l u * t_m v = t_{l + u(m)} (u v)`.
    pub fn mul(&self, x: &AffineWeylElement, y: &AffineWeylElement) -> AffineWeylElement {
        let moved = self.weyl.act(x.finite, &y.translation);
        AffineWeylElement {
            translation: &x.translation + &moved,
            finite: self.weyl.mul(x.finite, y.finite),
        }
    }

    pub fn multiply(&self, x: &AffineWeylElement, y: &AffineWeylElement) -> Result<AffineWeylElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.mul(x, y))
    }

    pub fn inverse(&self, x: &AffineWeylElement) -> AffineWeylElement {
        let inv = self.weyl.inverse(x.finite);
        AffineWeylElement {
            translation: -&self.weyl.act(inv, &x.translation),
            finite: inv,
        }
    }

    /// Iwahori-Matsumoto length of `t_lambda w`:
    /// `sum_{a > 0, w^-1 a > 0} |<lambda, a^vee>| + sum_{a > 0, w^-1 a < 0} |<lambda, a^vee> - 1|`.
    pub fn length(&self, x: &AffineWeylElement) -> u32 {
        let mut len = 0i64;
        for (k, root) in self.datum.positive_roots().iter().enumerate() {
            let p = root.pair(&x.translation);
            len += if self.weyl.inverse_negates(x.finite, k) {
                (p - 1).abs()
            } else {
                p.abs()
            };
        }
        len as u32
    }

    /// `s_i * w`.
    pub fn left_mul_simple(&self, i: usize, w: &AffineWeylElement) -> AffineWeylElement {
        if i == 0 {
            self.mul(&self.simple[0], w)
        } else {
            AffineWeylElement {
                translation: self.datum.reflect(&w.translation, i - 1),
                finite: self.weyl.left_mul_simple(i - 1, w.finite),
            }
        }
    }

    /// `w * s_i`.
    pub fn right_mul_simple(&self, w: &AffineWeylElement, i: usize) -> AffineWeylElement {
        self.mul(w, &self.simple[i])
    }

    pub fn is_left_descent(&self, i: usize, w: &AffineWeylElement) -> bool {
        self.length(&self.left_mul_simple(i, w)) < self.length(w)
    }

    pub fn is_right_descent(&self, w: &AffineWeylElement, i: usize) -> bool {
        self.length(&self.right_mul_simple(w, i)) < self.length(w)
    }

    /// Reduced expression `w = pi * s_{i_1} ... s_{i_k}`, taking the smallest
    /// available generator index at each step (lexicographically smallest
    /// reduced word).
    pub fn reduced_word(&self, w: &AffineWeylElement) -> Arc<ReducedWord> {
        if let Some(r) = self.words.lock().unwrap().get(w) {
            return r.clone();
        }
        let omega = self.omega_index(w);
        let mut rest = self.mul(&self.inverse(&self.omega[omega]), w);
        let mut len = self.length(&rest);
        let mut word = Vec::with_capacity(len as usize);
        while len > 0 {
            let (i, next) = (0..=self.rank())
                .map(|i| (i, self.left_mul_simple(i, &rest)))
                .find(|(_, x)| self.length(x) < len)
                .expect("positive-length elements have a left descent");
            word.push(i as u8);
            rest = next;
            len -= 1;
        }
        let r = Arc::new(ReducedWord { omega, word });
        self.words.lock().unwrap().insert(w.clone(), r.clone());
        r
    }

    /// `pi^omega * s_{word[0]} * ...`, for any (not necessarily reduced) word.
    pub fn from_word(&self, omega: usize, word: &[u8]) -> AffineWeylElement {
        word.iter()
            .fold(self.omega[omega].clone(), |acc, &i| self.right_mul_simple(&acc, i as usize))
    }

    /// Bruhat order. Elements of different `Omega`-cosets are incomparable.
    pub fn bruhat_leq(&self, x: &AffineWeylElement, w: &AffineWeylElement) -> bool {
        if self.omega_index(x) != self.omega_index(w) {
            return false;
        }
        let mut x = x.clone();
        let mut w = w.clone();
        loop {
            let (lx, lw) = (self.length(&x), self.length(&w));
            if lx > lw {
                return false;
            }
            if lx == lw {
                return x == w;
            }
            if lx == 0 {
                return true;
            }
            let i = (0..=self.rank())
                .find(|&i| self.is_left_descent(i, &w))
                .expect("positive-length elements have a left descent");
            w = self.left_mul_simple(i, &w);
            let sx = self.left_mul_simple(i, &x);
            if self.length(&sx) < lx {
                x = sx;
            }
        }
    }

    /// Membership in `^fW`: no finite simple reflection is a left descent.
    pub fn is_f_minimal(&self, w: &AffineWeylElement) -> bool {
        (1..=self.rank()).all(|i| !self.is_left_descent(i, w))
    }

    /// `kappa(lambda)`: the unique element of `W_f t_lambda` lying in `^fW`.
    pub fn kappa(&self, lambda: &Weight) -> AffineWeylElement {
        let t = self.translation(lambda);
        self.weyl
            .elements()
            .map(|u| self.mul(&self.finite_element(u), &t))
            .min_by_key(|x| (self.length(x), x.clone()))
            .unwrap()
    }

    /// The weight `lambda` with `kappa(lambda) = w`, for `w` in `^fW`.
    pub fn kappa_inverse(&self, w: &AffineWeylElement) -> Weight {
        // w = u t_lambda = t_{u(lambda)} u.
        self.weyl.act(self.weyl.inverse(w.finite), &w.translation)
    }

    /// Number of elements of length exactly `k`, `k <= max_len`, in the whole
    /// extended group: `|Omega|` times the Bott series of the affine Coxeter
    /// group.
    pub fn growth_series(&self, max_len: u32) -> Vec<u64> {
        let omega = self.omega.len() as u64;
        affine_growth_series(&self.datum.cartan_type().exponents(), max_len)
            .into_iter()
            .map(|c| c * omega)
            .collect()
    }

    /// All elements of length at most `max_len`, sorted by length and then
    /// canonically.
    pub fn enumerate_up_to_length(&self, max_len: u32) -> Result<Vec<AffineWeylElement>> {
        let expected: u64 = self.growth_series(max_len).iter().sum();
        if expected > self.budget.max_elements as u64 {
            return Err(Error::Budget {
                what: "enumerated group elements",
                limit: self.budget.max_elements,
                requested: expected as usize,
            });
        }
        let mut layers: Vec<Vec<AffineWeylElement>> = vec![self.omega.clone()];
        let mut seen: FxHashSet<AffineWeylElement> = self.omega.iter().cloned().collect();
        for len in 1..=max_len {
            let mut next = Vec::new();
            for w in &layers[len as usize - 1] {
                for i in 0..=self.rank() {
                    let x = self.right_mul_simple(w, i);
                    if self.length(&x) == len && seen.insert(x.clone()) {
                        next.push(x);
                    }
                }
            }
            next.sort();
            layers.push(next);
        }
        let mut out: Vec<AffineWeylElement> = layers.into_iter().flatten().collect();
        out.sort_by_cached_key(|w| (self.length(w), w.clone()));
        Ok(out)
    }

    /// A product of a random length-zero element and `len` random simple
    /// reflections (so of length at most `len`).
    pub fn random_element<R: Rng>(&self, rng: &mut R, len: usize) -> AffineWeylElement {
        let omega = rng.gen_range(0..self.omega.len());
        let word: Vec<u8> = (0..len).map(|_| rng.gen_range(0..=self.rank()) as u8).collect();
        self.from_word(omega, &word)
    }
}

/// Coefficients up to `t^max_len` of the Poincare series of the affine Weyl
/// group with the given exponents:
/// `prod_i (1 + t + ... + t^{m_i}) / (1 - t^{m_i})`.
pub fn affine_growth_series(exponents: &[u32], max_len: u32) -> Vec<u64> {
    let n = max_len as usize + 1;
    let mut series = vec![0u64; n];
    series[0] = 1;
    for &m in exponents {
        let m = m as usize;
        // multiply by 1 + t + ... + t^m
        let mut next = vec![0u64; n];
        for (k, &c) in series.iter().enumerate() {
            for j in 0..=m {
                if k + j < n {
                    next[k + j] += c;
                }
            }
        }
        // divide by 1 - t^m
        for k in m..n {
            next[k] += next[k - m];
        }
        series = next;
    }
    series
}

/// Breadth-first distances from `Omega` under right multiplication by simple
/// reflections, for elements up to `max_len`. Used as an independent check of
/// the length formula.
pub fn word_length_by_search(group: &AffineWeylGroup, max_len: u32) -> FxHashMap<AffineWeylElement, u32> {
    let mut dist: FxHashMap<AffineWeylElement, u32> = FxHashMap::default();
    let mut queue: VecDeque<AffineWeylElement> = VecDeque::new();
    for pi in group.omega() {
        dist.insert(pi.clone(), 0);
        queue.push_back(pi.clone());
    }
    while let Some(w) = queue.pop_front() {
        let d = dist[&w];
        if d == max_len {
            continue;
        }
        for i in 0..=group.rank() {
            let x = group.right_mul_simple(&w, i);
            if !dist.contains_key(&x) {
                dist.insert(x.clone(), d + 1);
                queue.push_back(x);
            }
        }
    }
    dist
}
