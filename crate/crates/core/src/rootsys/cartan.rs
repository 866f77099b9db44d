use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// A finite irreducible Cartan type.
///
/// Construction normalizes the low-rank coincidences `C2 = B2` and `D3 = A3`
/// so that every value names exactly one Dynkin diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let valid = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !valid {
            return Err(Error::InvalidCartanType {
                family: family.letter(),
                rank,
            });
        }
        Ok(match (family, rank) {
            (Family::C, 2) => CartanType {
                family: Family::B,
                rank: 2,
            },
            (Family::D, 3) => CartanType {
                family: Family::A,
                rank: 3,
            },
            _ => CartanType { family, rank },
        })
    }

    pub const G2: CartanType = CartanType {
        family: Family::G,
        rank: 2,
    };
    pub const F4: CartanType = CartanType {
        family: Family::F,
        rank: 4,
    };
    pub const E6: CartanType = CartanType {
        family: Family::E,
        rank: 6,
    };
    pub const E7: CartanType = CartanType {
        family: Family::E,
        rank: 7,
    };
    pub const E8: CartanType = CartanType {
        family: Family::E,
        rank: 8,
    };
    pub const C4: CartanType = CartanType {
        family: Family::C,
        rank: 4,
    };

    pub const EXCEPTIONAL: [CartanType; 5] = [Self::G2, Self::F4, Self::E6, Self::E7, Self::E8];

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of roots, from the closed-form count for each family.
    pub fn expected_root_count(&self) -> usize {
        let n = self.rank;
        match (self.family, n) {
            (Family::A, _) => n * (n + 1),
            (Family::B, _) | (Family::C, _) => 2 * n * n,
            (Family::D, _) => 2 * n * (n - 1),
            (Family::E, 6) => 72,
            (Family::E, 7) => 126,
            (Family::E, _) => 240,
            (Family::F, _) => 48,
            (Family::G, _) => 12,
        }
    }

    /// Dimension of the complex simple Lie algebra of this type.
    pub fn algebra_dimension(&self) -> usize {
        self.expected_root_count() + self.rank
    }

    /// Cartan matrix in Bourbaki node order; see [`CartanMatrix`] for the
    /// entry convention.
    pub fn cartan_matrix(&self) -> CartanMatrix {
        let n = self.rank;
        let mut m = vec![vec![0i32; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 2;
        }
        // Each bond is (long node, short node, bond multiplicity), 1-based.
        let mut bonds: Vec<(usize, usize, i32)> = Vec::new();
        let chain = |bonds: &mut Vec<(usize, usize, i32)>, upto: usize| {
            for i in 1..upto {
                bonds.push((i, i + 1, 1));
            }
        };
        match self.family {
            Family::A => chain(&mut bonds, n),
            Family::B => {
                chain(&mut bonds, n - 1);
                bonds.push((n - 1, n, 2));
            }
            Family::C => {
                chain(&mut bonds, n - 1);
                bonds.push((n, n - 1, 2));
            }
            Family::D => {
                chain(&mut bonds, n - 1);
                bonds.push((n - 2, n, 1));
            }
            Family::E => {
                bonds.push((1, 3, 1));
                bonds.push((2, 4, 1));
                for i in 3..n {
                    bonds.push((i, i + 1, 1));
                }
            }
            Family::F => {
                bonds.push((1, 2, 1));
                bonds.push((2, 3, 2));
                bonds.push((3, 4, 1));
            }
            // short root first
            Family::G => bonds.push((2, 1, 3)),
        }
        for (long, short, mult) in bonds {
            let (l, s) = (long - 1, short - 1);
            m[l][s] = -mult;
            m[s][l] = -1;
        }
        CartanMatrix(m)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidCartanType {
            family: s.chars().next().unwrap_or('?'),
            rank: 0,
        };
        let mut chars = s.chars();
        let family = chars.next().and_then(Family::from_letter).ok_or_else(bad)?;
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        CartanType::new(family, rank)
    }
}

/// Square integer matrix with entry `[i][j] = <alpha_i, alpha_j^vee>`, so row
/// `i` holds the pairings of simple root `i` with every simple coroot. A
/// long-to-short bond therefore has its large entry in the long node's row.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanMatrix(pub(crate) Vec<Vec<i32>>);

impl CartanMatrix {
    /// Wraps rows after checking the matrix is square and non-empty.
    pub fn from_rows(rows: Vec<Vec<i32>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::UnrecognizedDiagram(
                "matrix must be square and non-empty".into(),
            ));
        }
        Ok(CartanMatrix(rows))
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn rows(&self) -> &[Vec<i32>] {
        &self.0
    }

    pub fn get(&self, i: usize, j: usize) -> i32 {
        self.0[i][j]
    }

    pub fn transpose(&self) -> CartanMatrix {
        let n = self.size();
        CartanMatrix((0..n).map(|i| (0..n).map(|j| self.0[j][i]).collect()).collect())
    }

    /// Checks the generalized-Cartan-matrix axioms: diagonal 2, non-positive
    /// off-diagonal entries, and `a_ij = 0` iff `a_ji = 0`.
    pub fn check_generalized(&self) -> Result<()> {
        let n = self.size();
        for i in 0..n {
            if self.0[i][i] != 2 {
                return Err(Error::UnrecognizedDiagram(format!("diagonal entry {i} is not 2")));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                let (a, b) = (self.0[i][j], self.0[j][i]);
                if a > 0 {
                    return Err(Error::UnrecognizedDiagram(format!("positive entry at ({i},{j})")));
                }
                if (a == 0) != (b == 0) {
                    return Err(Error::UnrecognizedDiagram(format!(
                        "entries ({i},{j}) and ({j},{i}) break the zero pattern"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Positive integers `d_i`, proportional to the squared simple-root
    /// lengths, with `a_ij * d_j = a_ji * d_i`. Fails when the matrix is not
    /// symmetrizable or its diagram is disconnected.
    pub fn symmetrizer(&self) -> Result<Vec<i64>> {
        let n = self.size();
        // d_i held as num/den pairs until the final rescale
        let mut num = vec![0i64; n];
        let mut den = vec![0i64; n];
        num[0] = 1;
        den[0] = 1;
        let mut stack = vec![0usize];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if i == j || self.0[i][j] == 0 || num[j] != 0 {
                    continue;
                }
                // d_j = d_i * a_ji / a_ij
                let (a_ji, a_ij) = (i64::from(self.0[j][i]), i64::from(self.0[i][j]));
                let (mut p, mut q) = (num[i] * a_ji, den[i] * a_ij);
                if q < 0 {
                    p = -p;
                    q = -q;
                }
                let g = gcd(p, q);
                num[j] = p / g;
                den[j] = q / g;
                stack.push(j);
            }
        }
        if num.contains(&0) {
            return Err(Error::UnrecognizedDiagram("diagram is disconnected".into()));
        }
        let l = den.iter().fold(1i64, |acc, &d| acc / gcd(acc, d) * d);
        let d: Vec<i64> = (0..n).map(|i| num[i] * (l / den[i])).collect();
        for i in 0..n {
            for j in 0..n {
                if i64::from(self.0[i][j]) * d[j] != i64::from(self.0[j][i]) * d[i] {
                    return Err(Error::UnrecognizedDiagram("matrix is not symmetrizable".into()));
                }
            }
        }
        Ok(d)
    }
}

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

impl serde::Serialize for CartanType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for CartanType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
