use std::collections::{HashSet, VecDeque};
use std::fmt;

use super::cartan::{CartanMatrix, CartanType};
use super::identify::identify_cartan_type;
use crate::error::{Error, Result};

/// A root written as integer coefficients over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(pub Vec<i32>);

impl Root {
    pub fn simple(rank: usize, i: usize) -> Root {
        let mut v = vec![0; rank];
        v[i] = 1;
        Root(v)
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.0
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    /// `self <= other` in the root order: `other - self` is a non-negative
    /// combination of simple roots.
    pub fn precedes(&self, other: &Root) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| b >= a)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `<beta, alpha_j^vee>` for every simple coroot.
pub fn simple_pairings(matrix: &CartanMatrix, beta: &[i32]) -> Vec<i32> {
    let n = matrix.size();
    (0..n)
        .map(|j| (0..n).map(|i| beta[i] * matrix.get(i, j)).sum())
        .collect()
}

fn reflect(matrix: &CartanMatrix, beta: &[i32], j: usize) -> Vec<i32> {
    let p: i32 = (0..matrix.size()).map(|i| beta[i] * matrix.get(i, j)).sum();
    let mut out = beta.to_vec();
    out[j] -= p;
    out
}

/// Closes `seed` under the simple reflections `s_j(b) = b - <b, alpha_j^vee> alpha_j`,
/// breadth first. Gives up once more than `cap` vectors have been produced.
pub fn reflection_closure(matrix: &CartanMatrix, seed: &[Root], cap: usize) -> Result<Vec<Root>> {
    let n = matrix.size();
    let mut seen: HashSet<Vec<i32>> = HashSet::new();
    let mut queue: VecDeque<Vec<i32>> = VecDeque::new();
    for r in seed {
        if seen.insert(r.0.clone()) {
            queue.push_back(r.0.clone());
        }
    }
    while let Some(beta) = queue.pop_front() {
        for j in 0..n {
            let image = reflect(matrix, &beta, j);
            if seen.contains(&image) {
                continue;
            }
            if seen.len() >= cap {
                return Err(Error::ClosureDiverged { cap });
            }
            seen.insert(image.clone());
            queue.push_back(image);
        }
    }
    Ok(sort_roots(seen.into_iter().map(Root).collect()))
}

/// Positive roots by height then coefficients, followed by their negatives in
/// the same order.
fn sort_roots(roots: Vec<Root>) -> Vec<Root> {
    let mut pos: Vec<Root> = roots.iter().filter(|r| r.is_positive()).cloned().collect();
    pos.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
    let mut out = pos.clone();
    out.extend(pos.iter().map(Root::neg));
    // anything that is neither sign-coherent is kept at the end so callers can
    // detect it
    out.extend(
        roots
            .into_iter()
            .filter(|r| !r.is_positive() && !r.neg().is_positive()),
    );
    out
}

/// A finite root system in Bourbaki numbering, with roots stored as simple-root
/// coefficient vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    cartan_type: CartanType,
    matrix: CartanMatrix,
    symmetrizer: Vec<i64>,
    roots: Vec<Root>,
    highest: Root,
}

impl RootSystem {
    pub fn new(cartan_type: CartanType) -> Result<Self> {
        Self::build(cartan_type, cartan_type.cartan_matrix())
    }

    /// Root system of an arbitrary finite-type Cartan matrix, keeping the
    /// matrix's own node order.
    pub fn from_cartan_matrix(matrix: CartanMatrix) -> Result<Self> {
        let cartan_type = identify_cartan_type(&matrix)?;
        Self::build(cartan_type, matrix)
    }

    fn build(cartan_type: CartanType, matrix: CartanMatrix) -> Result<Self> {
        let n = cartan_type.rank();
        let simple: Vec<Root> = (0..n).map(|i| Root::simple(n, i)).collect();
        let cap = 10 * cartan_type.expected_root_count();
        let roots = reflection_closure(&matrix, &simple, cap)?;
        let symmetrizer = matrix.symmetrizer()?;
        if let Some(bad) = roots.iter().find(|r| !r.is_positive() && !r.neg().is_positive()) {
            return Err(Error::UnrecognizedDiagram(format!("mixed-sign root {bad}")));
        }
        let highest = maximal_root(&roots)?;
        Ok(RootSystem {
            cartan_type,
            matrix,
            symmetrizer,
            roots,
            highest,
        })
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank()
    }

    pub fn cartan_matrix(&self) -> &CartanMatrix {
        &self.matrix
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter().filter(|r| r.is_positive())
    }

    pub fn simple_roots(&self) -> Vec<Root> {
        (0..self.rank()).map(|i| Root::simple(self.rank(), i)).collect()
    }

    pub fn highest_root(&self) -> &Root {
        &self.highest
    }

    pub fn contains(&self, beta: &Root) -> bool {
        self.roots.binary_search_by(|r| cmp_canonical(r, beta)).is_ok()
    }

    /// Invariant form `(beta, gamma)`, normalized so the shortest simple root
    /// has squared length 2.
    pub fn inner_product(&self, beta: &Root, gamma: &Root) -> i64 {
        let n = self.rank();
        let mut s = 0i64;
        for i in 0..n {
            for j in 0..n {
                s += i64::from(beta.0[i])
                    * i64::from(gamma.0[j])
                    * i64::from(self.matrix.get(i, j))
                    * self.symmetrizer[j];
            }
        }
        s
    }

    pub fn norm_squared(&self, beta: &Root) -> i64 {
        self.inner_product(beta, beta)
    }

    /// `<beta, alpha^vee> = 2 (beta, alpha) / (alpha, alpha)`.
    pub fn pairing(&self, beta: &Root, alpha: &Root) -> i32 {
        let num = 2 * self.inner_product(beta, alpha);
        let den = self.norm_squared(alpha);
        debug_assert_eq!(num % den, 0);
        (num / den) as i32
    }

    pub fn simple_pairings(&self, beta: &Root) -> Vec<i32> {
        simple_pairings(&self.matrix, &beta.0)
    }

    /// Membership in the closed dominant chamber: non-negative pairing with
    /// every simple coroot.
    pub fn is_dominant(&self, beta: &Root) -> bool {
        self.simple_pairings(beta).iter().all(|&p| p >= 0)
    }

    pub fn is_long(&self, beta: &Root) -> bool {
        let max = self.roots.iter().map(|r| self.norm_squared(r)).max().unwrap_or(0);
        self.norm_squared(beta) == max
    }

    /// Highest root among the short roots. Equals the highest root for simply
    /// laced types.
    pub fn highest_short_root(&self) -> Root {
        let min = self.roots.iter().map(|r| self.norm_squared(r)).min().unwrap_or(0);
        let short: Vec<Root> = self
            .roots
            .iter()
            .filter(|r| self.norm_squared(r) == min)
            .cloned()
            .collect();
        maximal_root(&short).expect("short roots of an irreducible system have a maximum")
    }

    pub fn extended_basis(&self) -> ExtendedBasis {
        ExtendedBasis::new(self.clone())
    }
}

fn cmp_canonical(a: &Root, b: &Root) -> std::cmp::Ordering {
    match (a.is_positive(), b.is_positive()) {
        (true, false) => std::cmp::Ordering::Less,
        (false, true) => std::cmp::Ordering::Greater,
        (true, true) => a.height().cmp(&b.height()).then_with(|| a.cmp(b)),
        (false, false) => {
            let (pa, pb) = (a.neg(), b.neg());
            pa.height().cmp(&pb.height()).then_with(|| pa.cmp(&pb))
        }
    }
}

/// The unique maximal element of `roots` in the root order.
fn maximal_root(roots: &[Root]) -> Result<Root> {
    let maximal: Vec<&Root> = roots
        .iter()
        .filter(|r| !roots.iter().any(|s| s != *r && r.precedes(s)))
        .collect();
    match maximal.as_slice() {
        [one] => Ok((*one).clone()),
        _ => Err(Error::UnrecognizedDiagram(format!(
            "{} maximal roots; the system is not irreducible",
            maximal.len()
        ))),
    }
}

/// Simple roots together with `alpha_0`, the negative of the highest root,
/// stored last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedBasis {
    base: RootSystem,
    alpha_0: Root,
    nodes: Vec<Root>,
}

impl ExtendedBasis {
    pub fn new(base: RootSystem) -> Self {
        let alpha_0 = base.highest_root().neg();
        let mut nodes = base.simple_roots();
        nodes.push(alpha_0.clone());
        ExtendedBasis { base, alpha_0, nodes }
    }

    pub fn base(&self) -> &RootSystem {
        &self.base
    }

    pub fn alpha_0(&self) -> &Root {
        &self.alpha_0
    }

    pub fn nodes(&self) -> &[Root] {
        &self.nodes
    }

    /// Index of `alpha_0` within [`nodes`](Self::nodes).
    pub fn alpha_0_index(&self) -> usize {
        self.base.rank()
    }

    /// `(l+1) x (l+1)` matrix of pairings `<node_i, node_j^vee>`; the affine
    /// Cartan matrix of the untwisted extension.
    pub fn extended_cartan_matrix(&self) -> CartanMatrix {
        extended_matrix(&self.base, &self.nodes)
    }

    /// Coefficients `(a_1, .., a_l, 1)` with `sum a_i alpha_i + alpha_0 = 0`.
    pub fn marks(&self) -> Vec<i32> {
        let mut m = self.base.highest_root().0.clone();
        m.push(1);
        m
    }
}

pub(crate) fn extended_matrix(rs: &RootSystem, nodes: &[Root]) -> CartanMatrix {
    CartanMatrix(
        nodes
            .iter()
            .map(|a| nodes.iter().map(|b| rs.pairing(a, b)).collect())
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::cartan::Family;

    #[test]
    fn a1_has_two_roots() {
        let rs = RootSystem::new(CartanType::new(Family::A, 1).unwrap()).unwrap();
        assert_eq!(rs.roots(), &[Root(vec![1]), Root(vec![-1])]);
        assert_eq!(rs.highest_root(), &Root(vec![1]));
        let eb = rs.extended_basis();
        assert_eq!(eb.nodes().len(), 2);
        assert_eq!(eb.alpha_0(), &Root(vec![-1]));
    }

    #[test]
    fn g2_highest_root_is_long() {
        let rs = RootSystem::new(CartanType::G2).unwrap();
        assert_eq!(rs.highest_root(), &Root(vec![3, 2]));
        assert!(rs.is_long(rs.highest_root()));
        assert_eq!(rs.highest_short_root(), Root(vec![2, 1]));
        assert_eq!(rs.extended_basis().alpha_0(), &Root(vec![-3, -2]));
    }

    #[test]
    fn f4_highest_short_root() {
        let rs = RootSystem::new(CartanType::F4).unwrap();
        assert_eq!(rs.highest_root(), &Root(vec![2, 3, 4, 2]));
        assert_eq!(rs.highest_short_root(), Root(vec![1, 2, 3, 2]));
    }

    #[test]
    fn divergent_matrix_hits_the_cap() {
        // affine A1
        let m = CartanMatrix::from_rows(vec![vec![2, -2], vec![-2, 2]]).unwrap();
        let seed = [Root::simple(2, 0), Root::simple(2, 1)];
        assert_eq!(
            reflection_closure(&m, &seed, 50),
            Err(Error::ClosureDiverged { cap: 50 })
        );
    }

    #[test]
    fn contains_finds_every_root() {
        let rs = RootSystem::new(CartanType::E7).unwrap();
        for r in rs.roots() {
            assert!(rs.contains(r));
        }
        assert!(!rs.contains(&Root(vec![1, 1, 1, 1, 1, 1, 5])));
    }
}
