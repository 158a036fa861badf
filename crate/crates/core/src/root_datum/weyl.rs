//! Explicit enumeration of a finite Weyl group.
//!
//! Elements are identified by the permutation they induce on the root system;
//! each element also carries its matrix on Dynkin labels, its length and its
//! lexicographically smallest reduced word.

use std::collections::VecDeque;

use rustc_hash::FxHashMap;

use super::{RootDatum, Weight};

/// Index of an element of the finite Weyl group. Index 0 is the identity;
/// indices increase with length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FiniteWeylElement(pub u16);

impl FiniteWeylElement {
    pub const IDENTITY: FiniteWeylElement = FiniteWeylElement(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

struct Entry {
    // Image of each root (positive roots first, then their negatives).
    perm: Vec<u16>,
    // Row-major matrix acting on column vectors of Dynkin labels.
    matrix: Vec<i64>,
    length: u32,
    word: Vec<u8>,
    // Bit k set iff w^{-1}(alpha_k) is negative, alpha_k the k-th positive root.
    inverse_inversions: u128,
}

pub struct FiniteWeylGroup {
    rank: usize,
    n_pos: usize,
    entries: Vec<Entry>,
    left_mul: Vec<u16>,
    mult: Vec<u16>,
    inverse: Vec<u16>,
    by_rho_image: FxHashMap<Weight, u16>,
    longest: u16,
}

impl FiniteWeylGroup {
    pub(super) fn new(datum: &RootDatum) -> Self {
        let n = datum.rank();
        let pos = datum.positive_roots();
        let n_pos = pos.len();
        assert!(n_pos <= 128, "inversion masks hold at most 128 roots");
        let roots: Vec<Vec<i64>> = pos
            .iter()
            .map(|r| r.root_coords.clone())
            .chain(pos.iter().map(|r| r.root_coords.iter().map(|x| -x).collect()))
            .collect();
        let root_index: FxHashMap<Vec<i64>, u16> =
            roots.iter().enumerate().map(|(i, r)| (r.clone(), i as u16)).collect();
        let cartan = datum.cartan_matrix();

        let simple_perm: Vec<Vec<u16>> = (0..n)
            .map(|i| {
                roots
                    .iter()
                    .map(|beta| {
                        let k: i64 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
                        let mut gamma = beta.clone();
                        gamma[i] -= k;
                        root_index[&gamma]
                    })
                    .collect()
            })
            .collect();
        let simple_matrix: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                // s_i(lambda) = lambda - lambda_i alpha_i
                let mut m = vec![0i64; n * n];
                for r in 0..n {
                    m[r * n + r] = 1;
                    m[r * n + i] -= cartan[i][r];
                }
                m
            })
            .collect();

        let identity_perm: Vec<u16> = (0..roots.len() as u16).collect();
        let mut identity_matrix = vec![0i64; n * n];
        for r in 0..n {
            identity_matrix[r * n + r] = 1;
        }
        let mut index: FxHashMap<Vec<u16>, u16> = FxHashMap::default();
        index.insert(identity_perm.clone(), 0);
        let mut perms = vec![identity_perm];
        let mut matrices = vec![identity_matrix];
        let mut left_mul: Vec<u16> = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(w) = queue.pop_front() {
            for i in 0..n {
                let p: Vec<u16> = perms[w].iter().map(|&b| simple_perm[i][b as usize]).collect();
                let id = match index.get(&p) {
                    Some(&id) => id,
                    None => {
                        let id = perms.len() as u16;
                        index.insert(p.clone(), id);
                        perms.push(p);
                        matrices.push(mat_mul(&simple_matrix[i], &matrices[w], n));
                        queue.push_back(id as usize);
                        id
                    }
                };
                if left_mul.len() < (w + 1) * n {
                    left_mul.resize((w + 1) * n, 0);
                }
                left_mul[w * n + i] = id;
            }
        }
        let order = perms.len();
        left_mul.resize(order * n, 0);
        let lengths: Vec<u32> = perms
            .iter()
            .map(|p| p[..n_pos].iter().filter(|&&b| b as usize >= n_pos).count() as u32)
            .collect();

        // Lexicographically smallest reduced words via the smallest left descent.
        let mut words: Vec<Vec<u8>> = vec![Vec::new(); order];
        let mut by_length: Vec<usize> = (0..order).collect();
        by_length.sort_by_key(|&w| lengths[w]);
        for &w in &by_length {
            if lengths[w] == 0 {
                continue;
            }
            let i = (0..n)
                .find(|&i| lengths[left_mul[w * n + i] as usize] < lengths[w])
                .expect("nontrivial elements have a left descent");
            let rest = left_mul[w * n + i] as usize;
            let mut word = vec![i as u8];
            word.extend_from_slice(&words[rest]);
            words[w] = word;
        }

        let apply_word = |word: &[u8], start: usize| -> usize {
            word.iter()
                .rev()
                .fold(start, |acc, &i| left_mul[acc * n + i as usize] as usize)
        };
        let mut mult = vec![0u16; order * order];
        for a in 0..order {
            for b in 0..order {
                mult[a * order + b] = apply_word(&words[a], b) as u16;
            }
        }
        let inverse: Vec<u16> = (0..order)
            .map(|a| (0..order).find(|&b| mult[a * order + b] == 0).unwrap() as u16)
            .collect();

        let entries: Vec<Entry> = (0..order)
            .map(|w| {
                let inv = &perms[inverse[w] as usize];
                let mut mask = 0u128;
                for k in 0..n_pos {
                    if inv[k] as usize >= n_pos {
                        mask |= 1 << k;
                    }
                }
                Entry {
                    perm: perms[w].clone(),
                    matrix: matrices[w].clone(),
                    length: lengths[w],
                    word: words[w].clone(),
                    inverse_inversions: mask,
                }
            })
            .collect();
        let rho = datum.rho().clone();
        let mut group = FiniteWeylGroup {
            rank: n,
            n_pos,
            entries,
            left_mul,
            mult,
            inverse,
            by_rho_image: FxHashMap::default(),
            longest: 0,
        };
        group.by_rho_image = (0..order)
            .map(|w| (group.act(FiniteWeylElement(w as u16), &rho), w as u16))
            .collect();
        group.longest = (0..order).max_by_key(|&w| group.entries[w].length).unwrap() as u16;
        group
    }

    pub fn order(&self) -> usize {
        self.entries.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn elements(&self) -> impl Iterator<Item = FiniteWeylElement> {
        (0..self.entries.len() as u16).map(FiniteWeylElement)
    }

    pub fn simple_reflection(&self, i: usize) -> FiniteWeylElement {
        FiniteWeylElement(self.left_mul[i])
    }

    pub fn longest_element(&self) -> FiniteWeylElement {
        FiniteWeylElement(self.longest)
    }

    pub fn mul(&self, a: FiniteWeylElement, b: FiniteWeylElement) -> FiniteWeylElement {
        FiniteWeylElement(self.mult[a.index() * self.order() + b.index()])
    }

    /// `s_i * w`.
    pub fn left_mul_simple(&self, i: usize, w: FiniteWeylElement) -> FiniteWeylElement {
        FiniteWeylElement(self.left_mul[w.index() * self.rank + i])
    }

    pub fn inverse(&self, a: FiniteWeylElement) -> FiniteWeylElement {
        FiniteWeylElement(self.inverse[a.index()])
    }

    pub fn length(&self, a: FiniteWeylElement) -> u32 {
        self.entries[a.index()].length
    }

    /// Lexicographically smallest reduced word (0-based generator indices).
    pub fn reduced_word(&self, a: FiniteWeylElement) -> &[u8] {
        &self.entries[a.index()].word
    }

    pub fn from_word(&self, word: &[usize]) -> FiniteWeylElement {
        word.iter()
            .rev()
            .fold(FiniteWeylElement::IDENTITY, |acc, &i| self.left_mul_simple(i, acc))
    }

    /// Action on Dynkin labels.
    pub fn act(&self, a: FiniteWeylElement, lambda: &Weight) -> Weight {
        let n = self.rank;
        let m = &self.entries[a.index()].matrix;
        if a.0 == 0 {
            return lambda.clone();
        }
        Weight(
            (0..n)
                .map(|r| (0..n).map(|c| m[r * n + c] * lambda.0[c]).sum())
                .collect(),
        )
    }

    /// Whether `a^{-1}` sends the `k`-th positive root to a negative root.
    pub fn inverse_negates(&self, a: FiniteWeylElement, k: usize) -> bool {
        self.entries[a.index()].inverse_inversions >> k & 1 == 1
    }

    /// Whether `a` sends the `k`-th positive root to a negative root.
    pub fn negates(&self, a: FiniteWeylElement, k: usize) -> bool {
        self.entries[a.index()].perm[k] as usize >= self.n_pos
    }

    /// The unique element mapping `rho` to the given weight, if any.
    pub fn element_with_rho_image(&self, image: &Weight) -> Option<FiniteWeylElement> {
        self.by_rho_image.get(image).map(|&i| FiniteWeylElement(i))
    }

    /// The reflection in the positive root with the given index.
    pub fn root_reflection(&self, datum: &RootDatum, k: usize) -> FiniteWeylElement {
        let image = datum.reflect_root(datum.rho(), &datum.positive_roots()[k]);
        self.element_with_rho_image(&image).expect("reflections lie in the Weyl group")
    }
}

fn mat_mul(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
    let mut out = vec![0i64; n * n];
    for r in 0..n {
        for k in 0..n {
            let x = a[r * n + k];
            if x != 0 {
                for c in 0..n {
                    out[r * n + c] += x * b[k * n + c];
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_datum::{build_root_datum, LatticeKind};

    #[test]
    fn orders_match_closed_formula() {
        for label in ["A1", "A2", "A3", "B2", "C2", "B3", "C3", "G2", "D4", "F4"] {
            let d = build_root_datum(label, LatticeKind::Weight).unwrap();
            let w = d.weyl_group().unwrap();
            assert_eq!(w.order() as u64, d.finite_weyl_order(), "{label}");
            assert_eq!(w.length(w.longest_element()), d.longest_length(), "{label}");
        }
        let e6 = build_root_datum("E6", LatticeKind::Weight).unwrap();
        assert!(e6.weyl_group().is_err());
    }

    #[test]
    fn group_laws() {
        let d = build_root_datum("B2", LatticeKind::Weight).unwrap();
        let w = d.weyl_group().unwrap();
        let lambda = Weight::new(&[3, -5]);
        for a in w.elements() {
            assert_eq!(w.mul(a, w.inverse(a)), FiniteWeylElement::IDENTITY);
            assert_eq!(w.from_word(&w.reduced_word(a).iter().map(|&i| i as usize).collect::<Vec<_>>()), a);
            assert_eq!(w.reduced_word(a).len() as u32, w.length(a));
            for b in w.elements() {
                let ab = w.mul(a, b);
                assert_eq!(w.act(ab, &lambda), w.act(a, &w.act(b, &lambda)));
            }
        }
    }

    #[test]
    fn reduced_words_are_lex_smallest() {
        let d = build_root_datum("A2", LatticeKind::Weight).unwrap();
        let w = d.weyl_group().unwrap();
        assert_eq!(w.reduced_word(w.longest_element()), &[0, 1, 0]);
    }

    #[test]
    fn inversion_masks() {
        let d = build_root_datum("G2", LatticeKind::Weight).unwrap();
        let w = d.weyl_group().unwrap();
        for a in w.elements() {
            let count = (0..6).filter(|&k| w.inverse_negates(a, k)).count() as u32;
            assert_eq!(count, w.length(a));
        }
        for k in 0..6 {
            let s = w.root_reflection(&d, k);
            assert!(w.negates(s, k));
            assert_eq!(w.mul(s, s), FiniteWeylElement::IDENTITY);
        }
    }
}
