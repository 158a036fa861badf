//! Root data of finite type: roots, coroots, the weight lattice and its
//! sublattices, the finite Weyl group, weight multiplicities and the
//! q-analogue of Kostant's partition function.
//!
//! Weights are stored by Dynkin labels throughout. The Cartan matrix follows
//! the convention `a_ij = <alpha_i, alpha_j^vee>`, so the Dynkin labels of the
//! simple root `alpha_i` are row `i` of the matrix.

mod cartan;
mod linalg;
mod partition;
mod weight;
mod weights;
mod weyl;

use std::collections::VecDeque;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{ToPrimitive, Zero};
use rustc_hash::{FxHashMap, FxHashSet};

pub use cartan::CartanType;
pub use partition::KostantPartition;
pub use weight::Weight;
pub use weights::{Character, WeightMultiset, WeightMultiplicity};
pub use weyl::{FiniteWeylElement, FiniteWeylGroup};

use crate::error::{Error, Result};
use linalg::Q;

/// Largest finite Weyl group that is enumerated element by element.
pub const MAX_ENUMERATED_WEYL_ORDER: usize = 2000;

static NEXT_DATUM_ID: AtomicU64 = AtomicU64::new(1);

/// Which lattice between the root lattice `Q` and the weight lattice `P`
/// plays the role of `Lambda`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LatticeKind {
    Weight,
    Root,
    /// Lattice spanned by the given weights (Dynkin labels). It must have full
    /// rank and contain the root lattice.
    Intermediate(Vec<Weight>),
}

impl LatticeKind {
    pub fn name(&self) -> &'static str {
        match self {
            LatticeKind::Weight => "weight",
            LatticeKind::Root => "root",
            LatticeKind::Intermediate(_) => "intermediate",
        }
    }

    /// Parses `weight`, `root`, or `intermediate:[a,b];[c,d]`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "weight" => Ok(LatticeKind::Weight),
            "root" => Ok(LatticeKind::Root),
            _ => {
                let basis = s
                    .strip_prefix("intermediate:")
                    .ok_or_else(|| Error::InvalidLattice(format!("unknown lattice kind `{s}`")))?;
                let vecs = basis.split(';').map(Weight::parse).collect::<Result<Vec<_>>>()?;
                Ok(LatticeKind::Intermediate(vecs))
            }
        }
    }
}

impl fmt::Display for LatticeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeKind::Intermediate(b) => {
                f.write_str("intermediate:")?;
                for (i, w) in b.iter().enumerate() {
                    if i > 0 {
                        f.write_str(";")?;
                    }
                    write!(f, "{w}")?;
                }
                Ok(())
            }
            other => f.write_str(other.name()),
        }
    }
}

/// A positive root with its coroot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositiveRoot {
    /// Coefficients in the basis of simple roots.
    pub root_coords: Vec<i64>,
    /// Dynkin labels of the root.
    pub weight: Weight,
    /// Coefficients of the coroot in the basis of simple coroots; pairing a
    /// weight `lambda` with the coroot is `sum_j coroot[j] * lambda_j`.
    pub coroot: Vec<i64>,
}

impl PositiveRoot {
    pub fn height(&self) -> i64 {
        self.root_coords.iter().sum()
    }

    pub fn pair(&self, lambda: &Weight) -> i64 {
        self.coroot.iter().zip(lambda.coords()).map(|(a, b)| a * b).sum()
    }
}

pub struct RootDatum {
    id: u64,
    cartan_type: CartanType,
    lattice: LatticeKind,
    cartan: Vec<Vec<i64>>,
    simple_roots: Vec<Weight>,
    positive_roots: Vec<PositiveRoot>,
    rho: Weight,
    finite_weyl_order: u64,
    cartan_inv: Vec<Vec<Q>>,
    cartan_det: i128,
    // Invariant form on Dynkin labels, scaled to integers.
    form: Vec<Vec<i128>>,
    lattice_basis: Vec<Weight>,
    lattice_inv: Vec<Vec<Q>>,
    weyl: OnceLock<std::result::Result<Arc<FiniteWeylGroup>, Error>>,
    characters: Mutex<FxHashMap<Weight, Arc<Character>>>,
}

impl fmt::Debug for RootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RootDatum")
            .field("type", &self.cartan_type.to_string())
            .field("lattice", &self.lattice.to_string())
            .finish()
    }
}

/// Builds the root datum for a type label such as `"A2"` with the given
/// choice of lattice.
/// Largest absolute Dynkin label accepted from callers. Lengths and
/// pairings of weights inside this range stay far from overflow.
pub const MAX_WEIGHT_LABEL: i64 = 1 << 16;

const MAX_BASIS_INVERSE: u128 = 1 << 48;

pub(crate) fn check_label_range(labels: impl Iterator<Item = i128>) -> Result<()> {
    match labels.map(|c| c.unsigned_abs()).max() {
        Some(m) if m > MAX_WEIGHT_LABEL as u128 => Err(Error::Budget {
            what: "absolute weight label",
            limit: MAX_WEIGHT_LABEL as usize,
            requested: m.min(usize::MAX as u128) as usize,
        }),
        _ => Ok(()),
    }
}

pub fn build_root_datum(label: &str, lattice: LatticeKind) -> Result<Arc<RootDatum>> {
    RootDatum::new(label.parse()?, lattice).map(Arc::new)
}

impl RootDatum {
    pub fn new(cartan_type: CartanType, lattice: LatticeKind) -> Result<Self> {
        let n = cartan_type.rank();
        let cartan = cartan_type.cartan_matrix();
        let gram = cartan_type.gram_matrix();
        let simple_roots: Vec<Weight> = cartan.iter().map(|row| Weight::new(row)).collect();
        let positive_roots = positive_roots(&cartan, &gram);

        let cartan_inv = linalg::inverse(&cartan).expect("finite-type Cartan matrices are invertible");
        // (lambda, mu) = lambda A^-1 G A^-T mu^T on Dynkin labels.
        let mut form_q = vec![vec![Q::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = Q::zero();
                for k in 0..n {
                    for l in 0..n {
                        acc += cartan_inv[i][k] * Q::from_integer(gram[k][l] as i128) * cartan_inv[j][l];
                    }
                }
                form_q[i][j] = acc;
            }
        }
        let denom_lcm = form_q
            .iter()
            .flatten()
            .fold(1i128, |acc, q| num_integer::lcm(acc, *q.denom()));
        let form = form_q
            .iter()
            .map(|row| row.iter().map(|q| (q * Q::from_integer(denom_lcm)).to_integer()).collect())
            .collect();

        let lattice_basis: Vec<Weight> = match &lattice {
            LatticeKind::Weight => (0..n)
                .map(|i| {
                    let mut w = Weight::zero(n);
                    w.0[i] = 1;
                    w
                })
                .collect(),
            LatticeKind::Root => simple_roots.clone(),
            LatticeKind::Intermediate(basis) => {
                if basis.len() != n || basis.iter().any(|b| b.rank() != n) {
                    return Err(Error::InvalidLattice(format!(
                        "intermediate lattice needs {n} basis vectors of rank {n}"
                    )));
                }
                if basis.iter().flat_map(|b| b.coords()).any(|c| c.unsigned_abs() > MAX_WEIGHT_LABEL as u64) {
                    return Err(Error::InvalidLattice(format!(
                        "basis labels must lie within +-{MAX_WEIGHT_LABEL}"
                    )));
                }
                basis.clone()
            }
        };
        let basis_rows: Vec<Vec<i64>> = lattice_basis.iter().map(|b| b.coords().to_vec()).collect();
        // A lattice between the root and weight lattices has index dividing
        // det(A) in the weight lattice; checking this first also keeps the
        // inverse entries small.
        let index = linalg::determinant(&basis_rows);
        if index.is_zero() {
            return Err(Error::InvalidLattice("lattice basis is not of full rank".into()));
        }
        if !(linalg::determinant(&cartan) % &index).is_zero() {
            return Err(Error::InvalidLattice("lattice does not contain the root lattice".into()));
        }
        let lattice_inv = linalg::inverse(&basis_rows)
            .filter(|inv| inv.iter().flatten().all(|q| q.numer().unsigned_abs() <= MAX_BASIS_INVERSE))
            .ok_or_else(|| Error::InvalidLattice("lattice basis is too skewed; use a reduced basis".into()))?;

        let datum = RootDatum {
            id: NEXT_DATUM_ID.fetch_add(1, Ordering::Relaxed),
            cartan_type,
            lattice,
            cartan: cartan.clone(),
            rho: Weight(std::iter::repeat_n(1, n).collect()),
            simple_roots,
            positive_roots,
            finite_weyl_order: cartan_type.weyl_group_order(),
            cartan_det: linalg::determinant(&cartan).to_i128().expect("small Cartan determinant"),
            cartan_inv,
            form,
            lattice_basis,
            lattice_inv,
            weyl: OnceLock::new(),
            characters: Mutex::new(FxHashMap::default()),
        };
        if let Some(alpha) = datum.simple_roots.iter().find(|a| !datum.contains(a)) {
            return Err(Error::InvalidLattice(format!(
                "lattice does not contain the simple root {alpha}"
            )));
        }
        Ok(datum)
    }

    /// Process-unique identifier, used to detect mixing of objects built over
    /// different data.
    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn label(&self) -> String {
        self.cartan_type.to_string()
    }

    pub fn lattice_kind(&self) -> &LatticeKind {
        &self.lattice
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[PositiveRoot] {
        &self.positive_roots
    }

    /// Half the sum of the positive roots (the sum of fundamental weights).
    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn finite_weyl_order(&self) -> u64 {
        self.finite_weyl_order
    }

    /// Length of the longest element of the finite Weyl group.
    pub fn longest_length(&self) -> u32 {
        self.positive_roots.len() as u32
    }

    pub fn check_weight(&self, lambda: &Weight) -> Result<()> {
        if lambda.rank() != self.rank() {
            return Err(Error::RankMismatch(lambda.clone(), self.rank()));
        }
        check_label_range(lambda.coords().iter().map(|&c| c as i128))?;
        if !self.contains(lambda) {
            return Err(Error::NotInLattice(lambda.clone()));
        }
        Ok(())
    }

    /// `<lambda, alpha_i^vee> >= 0` for every simple coroot.
    pub fn is_dominant(&self, lambda: &Weight) -> bool {
        lambda.coords().iter().all(|&c| c >= 0)
    }

    /// `<lambda, 2 rho^vee>`, the sum of pairings with all positive coroots.
    pub fn two_rho_vee_pairing(&self, lambda: &Weight) -> i64 {
        self.positive_roots.iter().map(|r| r.pair(lambda)).sum()
    }

    /// Coordinates of `lambda` in the basis of simple roots.
    pub fn root_coords(&self, lambda: &Weight) -> Vec<Q> {
        linalg::row_times(lambda.coords(), &self.cartan_inv)
    }

    /// Integral root coordinates, if `lambda` lies in the root lattice.
    pub fn root_lattice_coords(&self, lambda: &Weight) -> Option<Vec<i64>> {
        self.root_coords(lambda)
            .into_iter()
            .map(|q| q.is_integer().then(|| q.to_integer() as i64))
            .collect()
    }

    /// A key identifying the class of `lambda` in `P / Q`.
    pub fn root_lattice_class(&self, lambda: &Weight) -> Vec<i64> {
        let d = self.cartan_det;
        self.root_coords(lambda)
            .iter()
            .map(|q| ((q * Q::from_integer(d)).to_integer().rem_euclid(d)) as i64)
            .collect()
    }

    pub fn weight_from_root_coords(&self, c: &[i64]) -> Weight {
        let n = self.rank();
        let mut w = Weight::zero(n);
        for (ci, alpha) in c.iter().zip(&self.simple_roots) {
            if *ci != 0 {
                for j in 0..n {
                    w.0[j] += ci * alpha.0[j];
                }
            }
        }
        w
    }

    /// `lambda <= mu` in the dominance order: `mu - lambda` is a non-negative
    /// integer combination of simple roots.
    pub fn dominance_leq(&self, lambda: &Weight, mu: &Weight) -> bool {
        self.root_lattice_coords(&(mu - lambda))
            .is_some_and(|c| c.iter().all(|&x| x >= 0))
    }

    /// Membership in the chosen lattice `Lambda`.
    pub fn contains(&self, lambda: &Weight) -> bool {
        lambda.rank() == self.rank()
            && linalg::row_times(lambda.coords(), &self.lattice_inv)
                .iter()
                .all(|q| q.is_integer())
    }

    /// Coordinates of `lambda` in the basis of the chosen lattice.
    pub fn to_lattice_coords(&self, lambda: &Weight) -> Result<Vec<i64>> {
        self.check_weight(lambda)?;
        Ok(linalg::row_times(lambda.coords(), &self.lattice_inv)
            .into_iter()
            .map(|q| q.to_integer() as i64)
            .collect())
    }

    pub fn from_lattice_coords(&self, coords: &[i64]) -> Result<Weight> {
        if coords.len() != self.rank() {
            return Err(Error::RankMismatch(Weight::new(coords), self.rank()));
        }
        let mut acc = vec![0i128; self.rank()];
        for (x, b) in coords.iter().zip(&self.lattice_basis) {
            for (a, c) in acc.iter_mut().zip(b.coords()) {
                *a += *x as i128 * *c as i128;
            }
        }
        check_label_range(acc.iter().copied())?;
        Ok(Weight::new(&acc.iter().map(|&a| a as i64).collect::<Vec<_>>()))
    }

    /// `|Lambda / Q|`, the number of length-zero elements of the extended
    /// affine Weyl group.
    pub fn fundamental_group_order(&self) -> u64 {
        let det_p = linalg::determinant(&self.cartan).magnitude().clone();
        let rows: Vec<Vec<i64>> = self.lattice_basis.iter().map(|b| b.coords().to_vec()).collect();
        let index = linalg::determinant(&rows).magnitude().clone();
        (det_p / index).to_u64().expect("index divides the Cartan determinant")
    }

    /// Smallest `m > 0` with `m * omega_i` in the lattice.
    pub fn fundamental_multiple(&self, i: usize) -> i64 {
        let mut w = Weight::zero(self.rank());
        for m in 1.. {
            w.0[i] = m;
            if self.contains(&w) {
                return m;
            }
        }
        unreachable!()
    }

    /// Invariant bilinear form on Dynkin labels (scaled to integer values).
    pub fn form(&self, a: &Weight, b: &Weight) -> i128 {
        let n = self.rank();
        let mut acc = 0i128;
        for i in 0..n {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..n {
                acc += a.0[i] as i128 * self.form[i][j] * b.0[j] as i128;
            }
        }
        acc
    }

    pub fn reflect(&self, lambda: &Weight, i: usize) -> Weight {
        lambda.add_multiple(&self.simple_roots[i], -lambda.0[i])
    }

    /// Reflection in the hyperplane orthogonal to a positive root.
    pub fn reflect_root(&self, lambda: &Weight, root: &PositiveRoot) -> Weight {
        lambda.add_multiple(&root.weight, -root.pair(lambda))
    }

    /// The dominant element of the orbit `W_f mu`, together with a word
    /// `i_1 ... i_k` such that `s_{i_1} ... s_{i_k}` maps `mu` to it.
    pub fn dominant_representative(&self, mu: &Weight) -> (Weight, Vec<usize>) {
        let mut cur = mu.clone();
        let mut word = Vec::new();
        while let Some(i) = cur.0.iter().position(|&c| c < 0) {
            cur = self.reflect(&cur, i);
            word.push(i);
        }
        word.reverse();
        (cur, word)
    }

    /// The `W_f`-orbit of `lambda`, sorted.
    pub fn orbit(&self, lambda: &Weight) -> Vec<Weight> {
        let mut seen: FxHashSet<Weight> = FxHashSet::default();
        let mut queue = VecDeque::from([lambda.clone()]);
        seen.insert(lambda.clone());
        while let Some(mu) = queue.pop_front() {
            for i in 0..self.rank() {
                if mu.0[i] != 0 {
                    let nu = self.reflect(&mu, i);
                    if seen.insert(nu.clone()) {
                        queue.push_back(nu);
                    }
                }
            }
        }
        let mut out: Vec<Weight> = seen.into_iter().collect();
        out.sort();
        out
    }

    /// The positive root whose coroot is the highest coroot; this is the
    /// short dominant root (quasi-minuscule weight). The affine simple
    /// reflection is `t_phi s_phi` for this root `phi`.
    pub fn short_dominant_root(&self) -> &PositiveRoot {
        self.positive_roots
            .iter()
            .max_by_key(|r| r.coroot.iter().sum::<i64>())
            .expect("root systems are nonempty")
    }

    /// The finite Weyl group, enumerated on first use.
    pub fn weyl_group(&self) -> Result<&Arc<FiniteWeylGroup>> {
        self.weyl
            .get_or_init(|| {
                if self.finite_weyl_order > MAX_ENUMERATED_WEYL_ORDER as u64 {
                    return Err(Error::WeylGroupTooLarge(
                        self.finite_weyl_order,
                        MAX_ENUMERATED_WEYL_ORDER,
                    ));
                }
                Ok(Arc::new(FiniteWeylGroup::new(self)))
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// All dominant weights `lambda` in the lattice with `<lambda, 2 rho^vee>
    /// <= bound`, sorted.
    pub fn dominant_weights_up_to(&self, bound: i64) -> Vec<Weight> {
        let n = self.rank();
        let steps: Vec<i64> = (0..n)
            .map(|i| {
                let mut w = Weight::zero(n);
                w.0[i] = 1;
                self.two_rho_vee_pairing(&w)
            })
            .collect();
        let mut out = Vec::new();
        let mut cur = vec![0i64; n];
        fn rec(d: &RootDatum, i: usize, budget: i64, steps: &[i64], cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
            if i == cur.len() {
                let w = Weight::new(cur);
                if d.contains(&w) {
                    out.push(w);
                }
                return;
            }
            let mut k = 0;
            while k * steps[i] <= budget {
                cur[i] = k;
                rec(d, i + 1, budget - k * steps[i], steps, cur, out);
                k += 1;
            }
            cur[i] = 0;
        }
        rec(self, 0, bound, &steps, &mut cur, &mut out);
        out.sort();
        out
    }

    /// All lattice weights whose Dynkin labels are bounded by `bound` in
    /// absolute value.
    pub fn weights_in_box(&self, bound: i64) -> Vec<Weight> {
        let n = self.rank();
        let mut out = Vec::new();
        let mut cur = vec![-bound; n];
        loop {
            let w = Weight::new(&cur);
            if self.contains(&w) {
                out.push(w);
            }
            let mut i = 0;
            loop {
                if i == n {
                    return out;
                }
                if cur[i] < bound {
                    cur[i] += 1;
                    break;
                }
                cur[i] = -bound;
                i += 1;
            }
        }
    }
}

/// Positive roots (in simple-root coordinates) by closing the simple roots
/// under simple reflections, sorted by height then coordinates.
fn positive_roots(cartan: &[Vec<i64>], gram: &[Vec<i64>]) -> Vec<PositiveRoot> {
    let n = cartan.len();
    let pair_simple = |c: &[i64], i: usize| -> i64 { (0..n).map(|j| c[j] * cartan[j][i]).sum() };
    let mut seen: FxHashSet<Vec<i64>> = FxHashSet::default();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0i64; n];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(beta) = queue.pop_front() {
        for i in 0..n {
            let k = pair_simple(&beta, i);
            if k == 0 {
                continue;
            }
            let mut gamma = beta.clone();
            gamma[i] -= k;
            if gamma.iter().all(|&x| x >= 0) && gamma.iter().any(|&x| x > 0) && seen.insert(gamma.clone()) {
                queue.push_back(gamma);
            }
        }
    }
    let mut roots: Vec<Vec<i64>> = seen.into_iter().collect();
    roots.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    roots
        .into_iter()
        .map(|c| {
            let weight = Weight((0..n).map(|j| pair_simple(&c, j)).collect());
            let norm: i64 = (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .map(|(i, j)| c[i] * c[j] * gram[i][j])
                .sum();
            let coroot = (0..n)
                .map(|j| {
                    let num = c[j] * gram[j][j];
                    debug_assert_eq!(num % norm, 0);
                    num / norm
                })
                .collect();
            PositiveRoot {
                root_coords: c,
                weight,
                coroot,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rd(label: &str) -> Arc<RootDatum> {
        build_root_datum(label, LatticeKind::Weight).unwrap()
    }

    #[test]
    fn a1_has_one_positive_root_twice_omega() {
        let d = rd("A1");
        assert_eq!(d.positive_roots().len(), 1);
        assert_eq!(d.positive_roots()[0].weight, Weight::new(&[2]));
    }

    #[test]
    fn a2_positive_roots_and_rho() {
        let d = rd("A2");
        assert_eq!(d.positive_roots().len(), 3);
        // rho = alpha_1 + alpha_2 in root coordinates.
        let c = d.root_lattice_coords(d.rho()).unwrap();
        assert_eq!(c, vec![1, 1]);
    }

    #[test]
    fn positive_root_counts() {
        for (label, count, order) in [
            ("G2", 6, 12),
            ("B2", 4, 8),
            ("C2", 4, 8),
            ("A3", 6, 24),
            ("B3", 9, 48),
            ("D4", 12, 192),
            ("F4", 24, 1152),
            ("E6", 36, 51840),
            ("E8", 120, 696729600),
        ] {
            let d = rd(label);
            assert_eq!(d.positive_roots().len(), count, "{label}");
            assert_eq!(d.finite_weyl_order(), order, "{label}");
        }
    }

    #[test]
    fn cartan_entries_are_pairings() {
        for label in ["A3", "B3", "C3", "G2", "F4", "D4"] {
            let d = rd(label);
            let n = d.rank();
            for i in 0..n {
                for j in 0..n {
                    // <alpha_i, alpha_j^vee> is the j-th Dynkin label of alpha_i.
                    assert_eq!(d.simple_roots()[i].0[j], d.cartan_matrix()[i][j]);
                }
            }
            // Simple coroots appear among the coroots of the simple roots.
            for (k, r) in d.positive_roots().iter().take(n).enumerate() {
                let mut e = vec![0; n];
                e[r.root_coords.iter().position(|&x| x == 1).unwrap()] = 1;
                assert_eq!(r.coroot, e, "{label} root {k}");
                assert_eq!(r.pair(&r.weight), 2);
            }
            for r in d.positive_roots() {
                assert_eq!(r.pair(&r.weight), 2, "{label}");
            }
        }
    }

    #[test]
    fn dominance_checks() {
        let a1 = rd("A1");
        assert!(a1.is_dominant(&Weight::new(&[1])));
        assert!(!a1.is_dominant(&Weight::new(&[-1])));
        assert!(a1.dominance_leq(&Weight::new(&[0]), &Weight::new(&[2])));
        assert!(!a1.dominance_leq(&Weight::new(&[1]), &Weight::new(&[2])));
        let a2 = rd("A2");
        let alpha1 = a2.simple_roots()[0].clone();
        assert!(!a2.is_dominant(&alpha1));
        let theta = Weight::new(&[1, 1]);
        assert!(a2.dominance_leq(&Weight::new(&[0, 0]), &theta));
        assert_eq!(a2.root_lattice_coords(&theta), Some(vec![1, 1]));
        let w = Weight::new(&[3, -2]);
        assert!(a2.dominance_leq(&w, &w));
    }

    #[test]
    fn oversized_input_is_refused() {
        let d = build_root_datum("A2", LatticeKind::Root).unwrap();
        assert!(d.from_lattice_coords(&[1 << 15, 0]).is_ok());
        assert!(matches!(d.from_lattice_coords(&[1 << 16, 0]), Err(Error::Budget { .. })));
        assert!(matches!(d.from_lattice_coords(&[i64::MAX, i64::MIN]), Err(Error::Budget { .. })));
        assert!(matches!(d.check_weight(&Weight::new(&[i64::MAX, 0])), Err(Error::Budget { .. })));
    }

    #[test]
    fn intermediate_lattice_validation() {
        let skewed = |b: &str| build_root_datum("A2", LatticeKind::parse(b).unwrap());
        // Unimodular change of basis of the weight lattice is fine.
        assert_eq!(skewed("intermediate:[1,0];[7,1]").unwrap().fundamental_group_order(), 3);
        assert!(matches!(skewed("intermediate:[1,0];[70000,1]"), Err(Error::InvalidLattice(_))));
        // Index 4 does not divide 3.
        assert!(matches!(skewed("intermediate:[2,0];[0,2]"), Err(Error::InvalidLattice(_))));
        assert!(matches!(skewed("intermediate:[1,1];[2,2]"), Err(Error::InvalidLattice(_))));
    }

    #[test]
    fn lattice_kinds() {
        let root = build_root_datum("A1", LatticeKind::Root).unwrap();
        assert!(!root.contains(&Weight::new(&[1])));
        assert!(root.contains(&Weight::new(&[2])));
        assert_eq!(root.to_lattice_coords(&Weight::new(&[4])).unwrap(), vec![2]);
        assert_eq!(root.fundamental_group_order(), 1);
        assert_eq!(rd("A2").fundamental_group_order(), 3);
        assert_eq!(rd("G2").fundamental_group_order(), 1);
        assert_eq!(rd("D4").fundamental_group_order(), 4);

        // SO(3)-type intermediate lattices in A3: P contains 2*omega_1 + Q.
        let inter = LatticeKind::parse("intermediate:[0,1,0];[1,0,1];[2,0,0]").unwrap();
        let d = build_root_datum("A3", inter).unwrap();
        assert_eq!(d.fundamental_group_order(), 2);
        assert!(d.contains(&Weight::new(&[0, 1, 0])));
        assert!(!d.contains(&Weight::new(&[1, 0, 0])));

        let bad = LatticeKind::parse("intermediate:[2,0];[0,2]").unwrap();
        assert!(matches!(build_root_datum("A2", bad), Err(Error::InvalidLattice(_))));
        let singular = LatticeKind::parse("intermediate:[1,0];[2,0]").unwrap();
        assert!(matches!(build_root_datum("A2", singular), Err(Error::InvalidLattice(_))));
        assert!(matches!(build_root_datum("Q7", LatticeKind::Weight), Err(Error::UnknownType(_))));
    }

    #[test]
    fn lattice_coordinate_round_trip() {
        for kind in ["weight", "root", "intermediate:[0,1,0];[1,0,1];[2,0,0]"] {
            let d = build_root_datum("A3", LatticeKind::parse(kind).unwrap()).unwrap();
            for w in d.weights_in_box(2) {
                let c = d.to_lattice_coords(&w).unwrap();
                assert_eq!(d.from_lattice_coords(&c).unwrap(), w);
            }
        }
        let d = rd("B2");
        for w in d.weights_in_box(3) {
            if let Some(c) = d.root_lattice_coords(&w) {
                assert_eq!(d.weight_from_root_coords(&c), w);
            }
        }
    }

    #[test]
    fn short_dominant_root() {
        assert_eq!(rd("A2").short_dominant_root().weight, Weight::new(&[1, 1]));
        // B2 (alpha_2 short): short dominant root alpha_1 + alpha_2 = omega_1.
        assert_eq!(rd("B2").short_dominant_root().weight, Weight::new(&[1, 0]));
        assert_eq!(rd("G2").short_dominant_root().weight, Weight::new(&[1, 0]));
    }

    #[test]
    fn invariant_form_is_weyl_invariant() {
        let d = rd("G2");
        for a in d.weights_in_box(2) {
            for b in d.weights_in_box(1) {
                for i in 0..2 {
                    assert_eq!(d.form(&a, &b), d.form(&d.reflect(&a, i), &d.reflect(&b, i)));
                }
            }
        }
    }
}
