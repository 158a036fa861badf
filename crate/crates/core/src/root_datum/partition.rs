//! q-analogue of Kostant's partition function,
//! `P_q(nu) = sum over multisets S of positive roots with sum(S) = nu of q^|S|`.

use rustc_hash::FxHashMap;

use super::{RootDatum, Weight};
use crate::laurent::LaurentPoly;

/// Memoizing evaluator for `P_q`. The table is private to the value, so
/// separate evaluators never share state.
pub struct KostantPartition<'a> {
    datum: &'a RootDatum,
    // Positive roots in simple-root coordinates, non-simple roots first.
    roots: Vec<Vec<i64>>,
    first_simple: usize,
    memo: FxHashMap<(usize, Vec<i64>), LaurentPoly>,
}

impl<'a> KostantPartition<'a> {
    pub fn new(datum: &'a RootDatum) -> Self {
        let mut roots: Vec<Vec<i64>> = datum.positive_roots().iter().map(|r| r.root_coords.clone()).collect();
        // Tallest roots first; the simple roots close the list and are
        // handled in closed form.
        roots.sort_by_key(|c| std::cmp::Reverse(c.iter().sum::<i64>()));
        let first_simple = roots.iter().position(|c| c.iter().sum::<i64>() == 1).unwrap_or(roots.len());
        Self {
            datum,
            roots,
            first_simple,
            memo: FxHashMap::default(),
        }
    }

    /// `P_q(nu)`; zero unless `nu` is a non-negative integer combination of
    /// simple roots.
    pub fn eval(&mut self, nu: &Weight) -> LaurentPoly {
        match self.datum.root_lattice_coords(nu) {
            Some(c) if c.iter().all(|&x| x >= 0) => self.eval_coords(0, c),
            _ => LaurentPoly::zero(),
        }
    }

    fn eval_coords(&mut self, start: usize, c: Vec<i64>) -> LaurentPoly {
        if start >= self.first_simple {
            // Only simple roots remain: the decomposition is forced.
            let size: i64 = c.iter().sum();
            return LaurentPoly::monomial(1, size as i32);
        }
        let key = (start, c);
        if let Some(p) = self.memo.get(&key) {
            return p.clone();
        }
        let (start, c) = key;
        let beta = self.roots[start].clone();
        let mut total = LaurentPoly::zero();
        let mut rest = c.clone();
        let mut k = 0i32;
        loop {
            let sub = self.eval_coords(start + 1, rest.clone());
            total += sub.shift(k);
            for (r, b) in rest.iter_mut().zip(&beta) {
                *r -= b;
            }
            if rest.iter().any(|&x| x < 0) {
                break;
            }
            k += 1;
        }
        self.memo.insert((start, c), total.clone());
        total
    }
}

impl RootDatum {
    /// `P_q(nu)` with a fresh memo table.
    pub fn kostant_partition_q(&self, nu: &Weight) -> LaurentPoly {
        KostantPartition::new(self).eval(nu)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_datum::{build_root_datum, LatticeKind};

    /// Exhaustive enumeration of multisets of positive roots summing to `nu`.
    fn brute_force(datum: &RootDatum, nu: &[i64]) -> LaurentPoly {
        let roots: Vec<Vec<i64>> = datum.positive_roots().iter().map(|r| r.root_coords.clone()).collect();
        fn rec(roots: &[Vec<i64>], i: usize, rest: &mut Vec<i64>, size: i32, out: &mut Vec<(i32, i64)>) {
            if rest.iter().all(|&x| x == 0) {
                out.push((size, 1));
                return;
            }
            if i == roots.len() {
                return;
            }
            // Skip root i entirely, or use it once more and stay on it.
            rec(roots, i + 1, rest, size, out);
            for (r, b) in rest.iter_mut().zip(&roots[i]) {
                *r -= b;
            }
            if rest.iter().all(|&x| x >= 0) {
                rec(roots, i, rest, size + 1, out);
            }
            for (r, b) in rest.iter_mut().zip(&roots[i]) {
                *r += b;
            }
        }
        let mut out = Vec::new();
        rec(&roots, 0, &mut nu.to_vec(), 0, &mut out);
        LaurentPoly::from_terms(out)
    }

    #[test]
    fn spec_values() {
        let a1 = build_root_datum("A1", LatticeKind::Weight).unwrap();
        assert_eq!(a1.kostant_partition_q(&Weight::new(&[0])), LaurentPoly::one());
        assert_eq!(a1.kostant_partition_q(&Weight::new(&[2])), LaurentPoly::monomial(1, 1));
        assert_eq!(a1.kostant_partition_q(&Weight::new(&[1])), LaurentPoly::zero());
        assert_eq!(a1.kostant_partition_q(&Weight::new(&[-2])), LaurentPoly::zero());
        let a2 = build_root_datum("A2", LatticeKind::Weight).unwrap();
        let theta = Weight::new(&[1, 1]);
        assert_eq!(a2.kostant_partition_q(&theta), LaurentPoly::from_terms([(1, 1), (2, 1)]));
    }

    #[test]
    fn matches_exhaustive_enumeration() {
        for label in ["A1", "A2", "B2", "G2", "A3"] {
            let d = build_root_datum(label, LatticeKind::Weight).unwrap();
            let n = d.rank();
            let mut kp = KostantPartition::new(&d);
            // All root-coordinate vectors of total height <= 12 (smaller box
            // in rank 3 to keep the oracle quick).
            let max_h = if n == 3 { 8 } else { 12 };
            let mut c = vec![0i64; n];
            loop {
                if c.iter().sum::<i64>() <= max_h {
                    let nu = d.weight_from_root_coords(&c);
                    let fast = kp.eval(&nu);
                    assert_eq!(fast, brute_force(&d, &c), "{label} {c:?}");
                    assert!(fast.has_nonnegative_coeffs());
                }
                let mut i = 0;
                loop {
                    if i == n {
                        break;
                    }
                    if c[i] < max_h {
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
    }
}
