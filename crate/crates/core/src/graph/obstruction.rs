//! Parity-respecting partitions that admit no compatible tree-like pairing.
//!
//! On `2n` points take `γ = (1,2)(3,4)...(2n-1,2n)` (1-based). A partition `τ`
//! respects parity when each block holds as many even as odd points. The
//! obstruction set of order `n` collects the parity-respecting `τ` with
//! `τ ∨ γ = 1` for which no pairing `σ ≤ τ` matching evens to odds makes the
//! bipartite graph of (`γ ∨ σ`-blocks, `τ`-blocks, `σ`-pairs) a tree.

use std::sync::OnceLock;

use super::BipartiteGraph;
use crate::combinat::{partitions, Permutation, SetPartition};
use crate::error::{Error, Result};

/// Largest order for which the obstruction set is computed.
pub const MAX_OBSTRUCTION_ORDER: usize = 5;

/// `(0,1)(2,3)...` on `2n` points.
pub fn gamma_parity(n: usize) -> Permutation {
    Permutation::consecutive_cycles(&vec![2; n])
}

/// Each block contains equally many even and odd points.
pub fn respects_parity(tau: &SetPartition) -> bool {
    tau.blocks().iter().all(|b| 2 * b.iter().filter(|&&x| x % 2 == 0).count() == b.len())
}

/// Whether some pairing `σ ≤ τ`, each pair one even and one odd point,
/// makes the bipartite graph a tree.
pub fn admits_ncpp(tau: &SetPartition) -> Result<bool> {
    let size = tau.size();
    if size == 0 || size % 2 == 1 {
        return Err(Error::Domain("partition of an even, positive number of points required".into()));
    }
    if !respects_parity(tau) {
        return Err(Error::Domain(format!("{tau} does not respect parity")));
    }
    let g = gamma_parity(size / 2);
    if tau.join(&g.cycle_partition())?.block_count() != 1 {
        return Err(Error::Domain(format!("{tau} does not connect the pairs")));
    }
    let split: Vec<(Vec<usize>, Vec<usize>)> = tau
        .blocks()
        .iter()
        .map(|b| (b.iter().copied().filter(|x| x % 2 == 0).collect(), b.iter().copied().filter(|x| x % 2 == 1).collect()))
        .collect();
    let mut pairs = Vec::with_capacity(size / 2);
    Ok(search(tau, &g, &split, 0, &mut pairs))
}

fn search(tau: &SetPartition, g: &Permutation, split: &[(Vec<usize>, Vec<usize>)], block: usize, pairs: &mut Vec<Vec<usize>>) -> bool {
    if block == split.len() {
        return is_tree(tau, g, pairs);
    }
    let (evens, odds) = &split[block];
    let mut order: Vec<usize> = (0..odds.len()).collect();
    loop {
        let before = pairs.len();
        pairs.extend(evens.iter().zip(&order).map(|(&e, &o)| vec![e, odds[o]]));
        if search(tau, g, split, block + 1, pairs) {
            return true;
        }
        pairs.truncate(before);
        if !next_permutation(&mut order) {
            return false;
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot has a successor");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn is_tree(tau: &SetPartition, g: &Permutation, pairs: &[Vec<usize>]) -> bool {
    let sigma = SetPartition::from_blocks(tau.size(), pairs).expect("pairs cover every point");
    let white = sigma.join(&g.cycle_partition()).expect("same size");
    let edges = pairs.iter().map(|p| (white.block_of(p[0]), tau.block_of(p[0]))).collect();
    BipartiteGraph { white: white.block_count(), black: tau.block_count(), edges }.is_tree()
}

/// The obstruction set of order `n`, computed once and cached.
pub fn obstruction_set(n: usize) -> Result<&'static [SetPartition]> {
    static CACHE: [OnceLock<Vec<SetPartition>>; MAX_OBSTRUCTION_ORDER + 1] = [const { OnceLock::new() }; MAX_OBSTRUCTION_ORDER + 1];
    if n == 0 {
        return Err(Error::InvalidArgument("order must be positive".into()));
    }
    if n > MAX_OBSTRUCTION_ORDER {
        return Err(Error::Capability(format!("obstruction sets are computed up to order {MAX_OBSTRUCTION_ORDER}, not {n}")));
    }
    Ok(CACHE[n].get_or_init(|| {
        let pairs = gamma_parity(n).cycle_partition();
        partitions(2 * n)
            .filter(respects_parity)
            .filter(|t| t.join(&pairs).map(|j| j.block_count() == 1).unwrap_or(false))
            .filter(|t| !admits_ncpp(t).expect("candidate meets the preconditions"))
            .collect()
    }))
}
