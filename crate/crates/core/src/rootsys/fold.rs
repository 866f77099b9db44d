use std::fmt;
use std::str::FromStr;

use super::cartan::{CartanMatrix, CartanType};
use super::identify::identify_cartan_type;
use super::roots::{extended_matrix, RootSystem};
use crate::error::{Error, Result};

/// How a folded Cartan matrix is assembled from the node orbits of a diagram
/// automorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FoldConvention {
    /// `F[I][J] = sum_{j in J} C[i][j]` for any `i` in `I`.
    OrbitSum,
    /// `F[I][J] = sum_{i in I} C[i][j]` for any `j` in `J`; the transpose
    /// assembly.
    OrbitRestriction,
    /// Orbit-sum fold, extended by minus the highest short root of the folded
    /// system, then the other mark-one node removed. This is the finite part
    /// of the twisted affine diagram seen from its opposite end.
    TwistedAffine,
}

impl FoldConvention {
    pub const ALL: [FoldConvention; 3] = [
        FoldConvention::OrbitSum,
        FoldConvention::OrbitRestriction,
        FoldConvention::TwistedAffine,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FoldConvention::OrbitSum => "orbit-sum",
            FoldConvention::OrbitRestriction => "orbit-restriction",
            FoldConvention::TwistedAffine => "twisted-affine",
        }
    }
}

impl fmt::Display for FoldConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FoldConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FoldConvention::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidFolding(format!("unknown convention `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldingSpec {
    pub source: CartanType,
    /// Node orbits, 1-based Bourbaki numbering.
    pub node_orbits: Vec<Vec<usize>>,
    pub convention: FoldConvention,
}

impl FoldingSpec {
    /// The order-two automorphism of E6: `{1,6}, {3,5}, {4}, {2}`, listed so
    /// the folded nodes come out as a chain.
    pub fn e6(convention: FoldConvention) -> Self {
        FoldingSpec {
            source: CartanType::E6,
            node_orbits: vec![vec![1, 6], vec![3, 5], vec![4], vec![2]],
            convention,
        }
    }

    pub fn identity(source: CartanType, convention: FoldConvention) -> Self {
        FoldingSpec {
            source,
            node_orbits: (1..=source.rank()).map(|i| vec![i]).collect(),
            convention,
        }
    }
}

fn check_orbits(c: &CartanMatrix, orbits: &[Vec<usize>]) -> Result<()> {
    let n = c.size();
    let mut hit = vec![false; n];
    for orbit in orbits {
        if orbit.is_empty() {
            return Err(Error::InvalidFolding("empty orbit".into()));
        }
        for &v in orbit {
            if v == 0 || v > n {
                return Err(Error::InvalidFolding(format!("node {v} out of range 1..={n}")));
            }
            if std::mem::replace(&mut hit[v - 1], true) {
                return Err(Error::InvalidFolding(format!("node {v} appears twice")));
            }
        }
        for &a in orbit {
            for &b in orbit {
                if a != b && c.get(a - 1, b - 1) != 0 {
                    return Err(Error::InvalidFolding(format!(
                        "nodes {a} and {b} share an orbit but are bonded"
                    )));
                }
            }
        }
    }
    if let Some(missing) = hit.iter().position(|h| !h) {
        return Err(Error::InvalidFolding(format!(
            "node {} is in no orbit",
            missing + 1
        )));
    }
    // representative independence, i.e. the partition comes from a diagram
    // automorphism as far as the matrix can tell
    for from in orbits {
        for to in orbits {
            let sums: Vec<i32> = from
                .iter()
                .map(|&i| to.iter().map(|&j| c.get(i - 1, j - 1)).sum())
                .collect();
            if sums.windows(2).any(|w| w[0] != w[1]) {
                return Err(Error::InvalidFolding(format!(
                    "orbit {from:?} does not see orbit {to:?} uniformly"
                )));
            }
        }
    }
    Ok(())
}

fn orbit_sum(c: &CartanMatrix, orbits: &[Vec<usize>]) -> CartanMatrix {
    CartanMatrix(
        orbits
            .iter()
            .map(|from| {
                let i = from[0] - 1;
                orbits
                    .iter()
                    .map(|to| to.iter().map(|&j| c.get(i, j - 1)).sum())
                    .collect()
            })
            .collect(),
    )
}

/// The folded Cartan matrix, rows in the order of `spec.node_orbits` (for the
/// twisted convention, the surviving nodes in extended order).
pub fn folded_matrix(spec: &FoldingSpec) -> Result<CartanMatrix> {
    let c = spec.source.cartan_matrix();
    check_orbits(&c, &spec.node_orbits)?;
    let summed = orbit_sum(&c, &spec.node_orbits);
    match spec.convention {
        FoldConvention::OrbitSum => Ok(summed),
        FoldConvention::OrbitRestriction => Ok(orbit_sum(&c.transpose(), &spec.node_orbits).transpose()),
        FoldConvention::TwistedAffine => twisted_complement(&summed),
    }
}

fn twisted_complement(folded: &CartanMatrix) -> Result<CartanMatrix> {
    let rs = RootSystem::from_cartan_matrix(folded.clone())?;
    let theta = rs.highest_short_root();
    let mut nodes = rs.simple_roots();
    nodes.push(theta.neg());
    let extended = extended_matrix(&rs, &nodes);
    let drop = theta
        .coeffs()
        .iter()
        .position(|&a| a == 1)
        .ok_or_else(|| Error::InvalidFolding("no mark-one node to remove".into()))?;
    let keep: Vec<usize> = (0..nodes.len()).filter(|&k| k != drop).collect();
    Ok(CartanMatrix(
        keep.iter()
            .map(|&i| keep.iter().map(|&j| extended.get(i, j)).collect())
            .collect(),
    ))
}

/// Folds E6 by `spec` and names the resulting type.
pub fn fold_e6(spec: &FoldingSpec) -> Result<CartanType> {
    if spec.source != CartanType::E6 {
        return Err(Error::InvalidFolding(format!(
            "source must be E6, got {}",
            spec.source
        )));
    }
    identify_cartan_type(&folded_matrix(spec)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbit_sum_gives_f4() {
        let m = folded_matrix(&FoldingSpec::e6(FoldConvention::OrbitSum)).unwrap();
        assert_eq!(
            m.rows(),
            &[
                vec![2, -1, 0, 0],
                vec![-1, 2, -1, 0],
                vec![0, -2, 2, -1],
                vec![0, 0, -1, 2]
            ]
        );
        assert_eq!(
            fold_e6(&FoldingSpec::e6(FoldConvention::OrbitSum)).unwrap(),
            CartanType::F4
        );
    }

    #[test]
    fn transpose_assembly_is_still_f4() {
        let spec = FoldingSpec::e6(FoldConvention::OrbitRestriction);
        let sum = folded_matrix(&FoldingSpec::e6(FoldConvention::OrbitSum)).unwrap();
        assert_eq!(folded_matrix(&spec).unwrap(), sum.transpose());
        assert_eq!(fold_e6(&spec).unwrap(), CartanType::F4);
    }

    #[test]
    fn twisted_affine_gives_c4() {
        assert_eq!(
            fold_e6(&FoldingSpec::e6(FoldConvention::TwistedAffine)).unwrap(),
            CartanType::C4
        );
    }

    #[test]
    fn identity_partition_keeps_e6() {
        for conv in FoldConvention::ALL {
            let spec = FoldingSpec::identity(CartanType::E6, conv);
            assert_eq!(fold_e6(&spec).unwrap(), CartanType::E6, "{conv}");
        }
        let spec = FoldingSpec::identity(CartanType::E6, FoldConvention::OrbitSum);
        assert_eq!(folded_matrix(&spec).unwrap(), CartanType::E6.cartan_matrix());
    }

    #[test]
    fn malformed_partitions() {
        let mut spec = FoldingSpec::e6(FoldConvention::OrbitSum);
        spec.node_orbits = vec![vec![1, 6], vec![3, 5], vec![4]];
        assert!(matches!(fold_e6(&spec), Err(Error::InvalidFolding(_))));
        spec.node_orbits = vec![vec![1, 6], vec![3, 5], vec![4], vec![2], vec![2]];
        assert!(matches!(fold_e6(&spec), Err(Error::InvalidFolding(_))));
        // bonded nodes in one orbit
        spec.node_orbits = vec![vec![1, 3], vec![5, 6], vec![4], vec![2]];
        assert!(matches!(fold_e6(&spec), Err(Error::InvalidFolding(_))));
        // not automorphism orbits
        spec.node_orbits = vec![vec![1, 5], vec![3, 6], vec![4], vec![2]];
        assert!(matches!(fold_e6(&spec), Err(Error::InvalidFolding(_))));
        spec.node_orbits = vec![vec![1, 6], vec![3, 5], vec![4], vec![7]];
        assert!(matches!(fold_e6(&spec), Err(Error::InvalidFolding(_))));
        let mut other = FoldingSpec::identity(CartanType::E7, FoldConvention::OrbitSum);
        other.convention = FoldConvention::OrbitSum;
        assert!(matches!(fold_e6(&other), Err(Error::InvalidFolding(_))));
    }

    #[test]
    fn convention_names_round_trip() {
        for c in FoldConvention::ALL {
            assert_eq!(c.name().parse::<FoldConvention>().unwrap(), c);
        }
        assert!("orbit".parse::<FoldConvention>().is_err());
    }
}
