use super::cartan::{CartanMatrix, CartanType, Family};
use crate::error::{Error, Result};

/// Names the finite simple type whose Dynkin diagram matches `matrix` up to a
/// permutation of the nodes.
///
/// Bond direction is read from the asymmetric pair: the node whose row holds
/// the larger entry is the long end (see [`CartanMatrix`]).
pub fn identify_cartan_type(matrix: &CartanMatrix) -> Result<CartanType> {
    matrix.check_generalized()?;
    let n = matrix.size();
    let unrecognized = |why: &str| Error::UnrecognizedDiagram(why.to_string());

    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut edges = 0usize;
    // (long node, short node, multiplicity) for every non-simple bond
    let mut multi: Vec<(usize, usize, i32)> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let (a, b) = (matrix.get(i, j), matrix.get(j, i));
            if a == 0 {
                continue;
            }
            let product = a * b;
            if !(1..=3).contains(&product) {
                return Err(unrecognized("bond is not of finite type"));
            }
            adj[i].push(j);
            adj[j].push(i);
            edges += 1;
            if product > 1 {
                if a.min(b) != -product {
                    return Err(unrecognized("bond entries are not (-1, -k)"));
                }
                let (long, short) = if a < b { (i, j) } else { (j, i) };
                multi.push((long, short, product));
            }
        }
    }

    if n == 1 {
        return CartanType::new(Family::A, 1);
    }
    if edges != n - 1 || !connected(&adj) {
        return Err(unrecognized("diagram is not a tree"));
    }
    let degrees: Vec<usize> = adj.iter().map(Vec::len).collect();
    let max_degree = degrees.iter().copied().max().unwrap_or(0);

    match multi.as_slice() {
        [] => simply_laced(n, &adj, &degrees, max_degree),
        [(_, _, 3)] if n == 2 => Ok(CartanType::G2),
        [(long, short, 2)] if max_degree <= 2 => {
            if n == 2 {
                return CartanType::new(Family::B, 2);
            }
            let (long, short) = (*long, *short);
            match (degrees[long], degrees[short]) {
                // bond at the end of the chain: the leaf decides B versus C
                (_, 1) => CartanType::new(Family::B, n),
                (1, _) => CartanType::new(Family::C, n),
                (2, 2) if n == 4 => Ok(CartanType::F4),
                _ => Err(unrecognized("double bond in the interior of a long chain")),
            }
        }
        _ => Err(unrecognized("unsupported bond pattern")),
    }
}

fn simply_laced(n: usize, adj: &[Vec<usize>], degrees: &[usize], max_degree: usize) -> Result<CartanType> {
    if max_degree <= 2 {
        return CartanType::new(Family::A, n);
    }
    let branches: Vec<usize> = (0..n).filter(|&v| degrees[v] == 3).collect();
    if max_degree > 3 || branches.len() != 1 {
        return Err(Error::UnrecognizedDiagram("more than one branch point".into()));
    }
    let centre = branches[0];
    let mut arms: Vec<usize> = adj[centre].iter().map(|&s| arm_length(adj, centre, s)).collect();
    arms.sort_unstable();
    match arms.as_slice() {
        [1, 1, _] => CartanType::new(Family::D, n),
        [1, 2, 2] => Ok(CartanType::E6),
        [1, 2, 3] => Ok(CartanType::E7),
        [1, 2, 4] => Ok(CartanType::E8),
        _ => Err(Error::UnrecognizedDiagram(format!(
            "arms {arms:?} are not of finite type"
        ))),
    }
}

fn arm_length(adj: &[Vec<usize>], from: usize, start: usize) -> usize {
    let (mut prev, mut cur, mut len) = (from, start, 1);
    loop {
        match adj[cur].iter().find(|&&x| x != prev) {
            Some(&next) if adj[cur].len() == 2 => {
                prev = cur;
                cur = next;
                len += 1;
            }
            _ => return len,
        }
    }
}

fn connected(adj: &[Vec<usize>]) -> bool {
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}
