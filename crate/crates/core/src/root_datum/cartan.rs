use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

const MAX_RANK: usize = 12;

/// Finite irreducible Cartan type, Bourbaki numbering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CartanType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

impl CartanType {
    pub fn rank(self) -> usize {
        match self {
            CartanType::A(n) | CartanType::B(n) | CartanType::C(n) | CartanType::D(n) | CartanType::E(n) => n,
            CartanType::F4 => 4,
            CartanType::G2 => 2,
        }
    }

    /// Order of the Weyl group, from the closed formulas.
    pub fn weyl_group_order(self) -> u64 {
        fn fact(n: usize) -> u64 {
            (1..=n as u64).product()
        }
        match self {
            CartanType::A(n) => fact(n + 1),
            CartanType::B(n) | CartanType::C(n) => (1u64 << n) * fact(n),
            CartanType::D(n) => (1u64 << (n - 1)) * fact(n),
            CartanType::E(6) => 51_840,
            CartanType::E(7) => 2_903_040,
            CartanType::E(8) => 696_729_600,
            CartanType::E(_) => unreachable!("validated on construction"),
            CartanType::F4 => 1152,
            CartanType::G2 => 12,
        }
    }

    /// Exponents `m_1 <= ... <= m_n` of the Weyl group.
    pub fn exponents(self) -> Vec<u32> {
        match self {
            CartanType::A(n) => (1..=n as u32).collect(),
            CartanType::B(n) | CartanType::C(n) => (0..n as u32).map(|i| 2 * i + 1).collect(),
            CartanType::D(n) => {
                let mut e: Vec<u32> = (0..n as u32 - 1).map(|i| 2 * i + 1).collect();
                e.push(n as u32 - 1);
                e.sort_unstable();
                e
            }
            CartanType::E(6) => vec![1, 4, 5, 7, 8, 11],
            CartanType::E(7) => vec![1, 5, 7, 9, 11, 13, 17],
            CartanType::E(8) => vec![1, 7, 11, 13, 17, 19, 23, 29],
            CartanType::E(_) => unreachable!("validated on construction"),
            CartanType::F4 => vec![1, 5, 7, 11],
            CartanType::G2 => vec![1, 5],
        }
    }

    /// Gram matrix `(alpha_i, alpha_j)` of the simple roots for an invariant
    /// form normalized to be integral.
    pub(crate) fn gram_matrix(self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut g = vec![vec![0i64; n]; n];
        let bond = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, x: i64| {
            g[i][j] = x;
            g[j][i] = x;
        };
        match self {
            CartanType::A(_) => {
                for i in 0..n {
                    g[i][i] = 2;
                }
                for i in 0..n.saturating_sub(1) {
                    bond(&mut g, i, i + 1, -1);
                }
            }
            CartanType::B(_) => {
                // alpha_i = e_i - e_{i+1}, alpha_n = e_n; doubled form.
                for i in 0..n {
                    g[i][i] = 4;
                }
                g[n - 1][n - 1] = 2;
                for i in 0..n - 1 {
                    bond(&mut g, i, i + 1, -2);
                }
            }
            CartanType::C(_) => {
                // alpha_i = e_i - e_{i+1}, alpha_n = 2 e_n.
                for i in 0..n {
                    g[i][i] = 2;
                }
                g[n - 1][n - 1] = 4;
                for i in 0..n - 2 {
                    bond(&mut g, i, i + 1, -1);
                }
                bond(&mut g, n - 2, n - 1, -2);
            }
            CartanType::D(_) => {
                for i in 0..n {
                    g[i][i] = 2;
                }
                for i in 0..n - 2 {
                    bond(&mut g, i, i + 1, -1);
                }
                bond(&mut g, n - 3, n - 1, -1);
            }
            CartanType::E(_) => {
                for i in 0..n {
                    g[i][i] = 2;
                }
                // 1-3-4-5-6-7-8 with 2 attached to 4 (1-based).
                bond(&mut g, 0, 2, -1);
                bond(&mut g, 1, 3, -1);
                for i in 2..n - 1 {
                    bond(&mut g, i, i + 1, -1);
                }
            }
            CartanType::F4 => {
                g[0][0] = 4;
                g[1][1] = 4;
                g[2][2] = 2;
                g[3][3] = 2;
                bond(&mut g, 0, 1, -2);
                bond(&mut g, 1, 2, -2);
                bond(&mut g, 2, 3, -1);
            }
            CartanType::G2 => {
                g[0][0] = 2;
                g[1][1] = 6;
                bond(&mut g, 0, 1, -3);
            }
        }
        g
    }

    /// Cartan matrix with entries `a_ij = <alpha_i, alpha_j^vee>`.
    pub fn cartan_matrix(self) -> Vec<Vec<i64>> {
        let g = self.gram_matrix();
        let n = g.len();
        (0..n)
            .map(|i| (0..n).map(|j| 2 * g[i][j] / g[j][j]).collect())
            .collect()
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(label: &str) -> Result<Self> {
        let unknown = || Error::UnknownType(label.to_string());
        let mut chars = label.trim().chars();
        let letter = chars.next().ok_or_else(unknown)?.to_ascii_uppercase();
        let n: usize = chars.as_str().parse().map_err(|_| unknown())?;
        let t = match (letter, n) {
            ('A', n) if (1..=MAX_RANK).contains(&n) => CartanType::A(n),
            ('B', n) if (2..=MAX_RANK).contains(&n) => CartanType::B(n),
            ('C', n) if (2..=MAX_RANK).contains(&n) => CartanType::C(n),
            ('D', n) if (4..=MAX_RANK).contains(&n) => CartanType::D(n),
            ('E', n) if (6..=8).contains(&n) => CartanType::E(n),
            ('F', 4) => CartanType::F4,
            ('G', 2) => CartanType::G2,
            _ => return Err(unknown()),
        };
        Ok(t)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanType::A(n) => write!(f, "A{n}"),
            CartanType::B(n) => write!(f, "B{n}"),
            CartanType::C(n) => write!(f, "C{n}"),
            CartanType::D(n) => write!(f, "D{n}"),
            CartanType::E(n) => write!(f, "E{n}"),
            CartanType::F4 => f.write_str("F4"),
            CartanType::G2 => f.write_str("G2"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels() {
        for l in ["A1", "A3", "B2", "C2", "D4", "E8", "F4", "G2", "a2"] {
            let t: CartanType = l.parse().unwrap();
            assert_eq!(t.to_string(), l.to_uppercase());
        }
        for l in ["", "A0", "B1", "D3", "E9", "F3", "G3", "X2", "A", "A-1", "A99"] {
            assert!(l.parse::<CartanType>().is_err(), "{l}");
        }
    }

    #[test]
    fn cartan_matrices_match_bourbaki_transposed() {
        assert_eq!(CartanType::A(2).cartan_matrix(), vec![vec![2, -1], vec![-1, 2]]);
        // B2: alpha_2 short, <alpha_1, alpha_2^vee> = -2.
        assert_eq!(CartanType::B(2).cartan_matrix(), vec![vec![2, -2], vec![-1, 2]]);
        assert_eq!(CartanType::C(2).cartan_matrix(), vec![vec![2, -1], vec![-2, 2]]);
        // G2: alpha_1 short.
        assert_eq!(CartanType::G2.cartan_matrix(), vec![vec![2, -1], vec![-3, 2]]);
    }
}
