//! Partitioned permutations `(U, π)`: a permutation together with a coarser
//! partition of its points.
//!
//! The length of `(U, π)` is `2|U| - |π|`. Two partitioned permutations
//! multiply to `(U ∨ V, πσ)` when lengths add up and to zero otherwise. Relative
//! to an annulus shape, `(U, π)` is non-crossing when `π` is and the bipartite
//! graph (blocks of `π ∨ γ`, blocks of `U`, one edge per cycle of `π`) is a tree.

use std::collections::BTreeSet;
use std::fmt;

use crate::annular::{classify, enumerate_nc_permutations, AnnulusShape, NcClass};
use crate::combinat::{partitions, Permutation, SetPartition};
use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct PartitionedPermutation {
    part: SetPartition,
    perm: Permutation,
}

impl PartitionedPermutation {
    /// Fails unless every cycle of `perm` lies inside a block of `part`.
    pub fn new(part: SetPartition, perm: Permutation) -> Result<Self> {
        if part.size() != perm.size() {
            return Err(Error::SizeMismatch { left: part.size(), right: perm.size() });
        }
        if !perm.cycle_partition().refines(&part)? {
            return Err(Error::Domain(format!("{perm} is not finer than {part}")));
        }
        Ok(Self { part, perm })
    }

    /// `(0_π, π)`.
    pub fn from_permutation(perm: Permutation) -> Self {
        Self { part: perm.cycle_partition(), perm }
    }

    pub fn part(&self) -> &SetPartition {
        &self.part
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn length(&self) -> usize {
        2 * self.part.length() - self.perm.length()
    }

    /// Cycles of the permutation grouped by block of the partition.
    pub fn cycles_by_block(&self) -> Vec<Vec<Vec<usize>>> {
        let mut out = vec![Vec::new(); self.part.block_count()];
        for c in self.perm.cycles() {
            out[self.part.block_of(c[0])].push(c);
        }
        out
    }
}

impl fmt::Display for PartitionedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.part, self.perm)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Product {
    Zero,
    Value(PartitionedPermutation),
}

pub fn product(a: &PartitionedPermutation, b: &PartitionedPermutation) -> Result<Product> {
    let part = a.part.join(&b.part)?;
    let perm = a.perm.compose(&b.perm)?;
    let c = PartitionedPermutation { part, perm };
    Ok(if c.length() == a.length() + b.length() { Product::Value(c) } else { Product::Zero })
}

fn check_shape(pp: &PartitionedPermutation, shape: &AnnulusShape) -> Result<()> {
    if pp.perm.size() != shape.total() {
        return Err(Error::SizeMismatch { left: pp.perm.size(), right: shape.total() });
    }
    Ok(())
}

/// The bipartite graph of `(U, π)`; `π` must be non-crossing for the shape.
pub fn gamma_graph(pp: &PartitionedPermutation, shape: &AnnulusShape) -> Result<BipartiteGraph> {
    check_shape(pp, shape)?;
    let gamma = shape.gamma();
    if !classify(&pp.perm, &gamma)?.is_non_crossing() {
        return Err(Error::Domain(format!("{} is not non-crossing for {shape}", pp.perm)));
    }
    let white = pp.perm.cycle_partition().join(&gamma.cycle_partition())?;
    let edges = pp.perm.cycles().iter().map(|c| (white.block_of(c[0]), pp.part.block_of(c[0]))).collect();
    Ok(BipartiteGraph { white: white.block_count(), black: pp.part.block_count(), edges })
}

pub fn is_nc_partitioned(pp: &PartitionedPermutation, shape: &AnnulusShape) -> Result<bool> {
    check_shape(pp, shape)?;
    if !classify(&pp.perm, &shape.gamma())?.is_non_crossing() {
        return Ok(false);
    }
    Ok(gamma_graph(pp, shape)?.is_tree())
}

/// The product criterion: `(U, π) · (0_{π⁻¹γ}, π⁻¹γ) = (1_m, γ)`.
pub fn is_nc_by_product(pp: &PartitionedPermutation, shape: &AnnulusShape) -> Result<bool> {
    check_shape(pp, shape)?;
    let gamma = shape.gamma();
    let rest = PartitionedPermutation::from_permutation(pp.perm.inverse().compose(&gamma)?);
    let top = PartitionedPermutation { part: SetPartition::single_block(shape.total()), perm: gamma };
    Ok(product(pp, &rest)? == Product::Value(top))
}

/// Whether `(u, v)` sits in one cycle of `γσ`, for every 2-cycle of `sigma`.
fn loop_cycles(sigma: &Permutation, gamma: &Permutation) -> Vec<bool> {
    let labels = gamma.compose(sigma).expect("same size").cycle_labels();
    sigma.cycles().iter().map(|c| c.len() == 2 && labels[c[0]] == labels[c[1]]).collect()
}

/// All `U ≥ 0_π` making the graph of `(U, π)` a tree. With `isolate`, the
/// flagged cycles must form blocks of their own.
fn tree_partitions(perm: &Permutation, gamma: &Permutation, isolate: Option<&[bool]>) -> Vec<SetPartition> {
    let cycles = perm.cycles();
    let white = perm.cycle_partition().join(&gamma.cycle_partition()).expect("same size");
    let whites: Vec<usize> = cycles.iter().map(|c| white.block_of(c[0])).collect();
    let k = cycles.len();
    let Some(target) = (k + 1).checked_sub(white.block_count()) else {
        return Vec::new();
    };
    let lonely = |i: usize| isolate.map(|f| f[i]).unwrap_or(false);
    let mut assign = vec![0usize; k];
    let mut blocks: Vec<(Vec<bool>, bool)> = Vec::new();
    let mut out = Vec::new();
    fill(0, &whites, white.block_count(), target, &lonely, &mut assign, &mut blocks, &mut |assign: &[usize], nblocks| {
        let edges = (0..k).map(|i| (whites[i], assign[i])).collect();
        if (BipartiteGraph { white: white.block_count(), black: nblocks, edges }).is_tree() {
            let mut labels = vec![0; perm.size()];
            for (i, c) in cycles.iter().enumerate() {
                for &x in c {
                    labels[x] = assign[i];
                }
            }
            out.push(SetPartition::from_labels(&labels));
        }
    });
    out
}

#[allow(clippy::too_many_arguments)]
fn fill(
    i: usize,
    whites: &[usize],
    nwhite: usize,
    target: usize,
    lonely: &dyn Fn(usize) -> bool,
    assign: &mut Vec<usize>,
    blocks: &mut Vec<(Vec<bool>, bool)>,
    emit: &mut dyn FnMut(&[usize], usize),
) {
    let remaining = whites.len() - i;
    if blocks.len() > target || blocks.len() + remaining < target {
        return;
    }
    if i == whites.len() {
        emit(assign, blocks.len());
        return;
    }
    let w = whites[i];
    if !lonely(i) {
        for b in 0..blocks.len() {
            if blocks[b].1 || blocks[b].0[w] {
                continue;
            }
            blocks[b].0[w] = true;
            assign[i] = b;
            fill(i + 1, whites, nwhite, target, lonely, assign, blocks, emit);
            blocks[b].0[w] = false;
        }
    }
    let mut seen = vec![false; nwhite];
    seen[w] = true;
    blocks.push((seen, lonely(i)));
    assign[i] = blocks.len() - 1;
    fill(i + 1, whites, nwhite, target, lonely, assign, blocks, emit);
    blocks.pop();
}

fn expand(perms: impl Iterator<Item = Permutation>, shape: &AnnulusShape, loop_free: bool) -> impl Iterator<Item = PartitionedPermutation> {
    let gamma = shape.gamma();
    perms.flat_map(move |p| {
        let isolate = loop_free.then(|| loop_cycles(&p, &gamma));
        tree_partitions(&p, &gamma, isolate.as_deref())
            .into_iter()
            .map(move |part| PartitionedPermutation { part, perm: p.clone() })
            .collect::<Vec<_>>()
    })
}

/// Every non-crossing partitioned permutation of the shape (brute force over `S_m`).
pub fn enumerate_ps_nc(shape: &AnnulusShape) -> impl Iterator<Item = PartitionedPermutation> {
    expand(enumerate_nc_permutations(shape, None).map(|(p, _)| p), shape, false)
}

fn nc_pairings(shape: &AnnulusShape) -> impl Iterator<Item = Permutation> {
    let gamma = shape.gamma();
    crate::combinat::pairings(shape.total())
        .map(|p| Permutation::from_partition_pairs(&p).expect("pairs"))
        .filter(move |s| classify(s, &gamma).map(NcClass::is_non_crossing).unwrap_or(false))
}

/// Non-crossing partitioned permutations whose permutation is a pairing.
pub fn enumerate_ps_nc2(shape: &AnnulusShape) -> impl Iterator<Item = PartitionedPermutation> {
    expand(nc_pairings(shape), shape, false)
}

/// Non-crossing partitioned permutations whose cycles have length one or two.
pub fn enumerate_ps_nc21(shape: &AnnulusShape) -> impl Iterator<Item = PartitionedPermutation> {
    let gamma = shape.gamma();
    let perms = partitions(shape.total())
        .filter(|p| p.blocks().iter().all(|b| b.len() <= 2))
        .map(|p| Permutation::from_partition_pairs(&p).expect("small blocks"))
        .filter(move |s| classify(s, &gamma).map(NcClass::is_non_crossing).unwrap_or(false));
    expand(perms, shape, false)
}

/// Non-crossing partitioned pairings in which every loop block is a block of `U`.
pub fn enumerate_ps_nc2_loop_free(shape: &AnnulusShape) -> impl Iterator<Item = PartitionedPermutation> {
    expand(nc_pairings(shape), shape, true)
}

pub fn is_loop_free(pp: &PartitionedPermutation, shape: &AnnulusShape) -> Result<bool> {
    check_shape(pp, shape)?;
    let flags = loop_cycles(&pp.perm, &shape.gamma());
    Ok(pp.perm.cycles().iter().zip(flags).all(|(c, is_loop)| !is_loop || pp.part.blocks()[pp.part.block_of(c[0])] == *c))
}

/// For each block `B` of `U`, the other blocks holding a 2-cycle related to
/// one in `B`. Two 2-cycles are related when their endpoints fall into the
/// same unordered pair of `γσ`-cycles.
pub fn related_blocks(pp: &PartitionedPermutation, shape: &AnnulusShape) -> Result<Vec<BTreeSet<usize>>> {
    check_shape(pp, shape)?;
    if !pp.perm.is_pairing() {
        return Err(Error::Domain(format!("{} is not a pairing", pp.perm)));
    }
    let labels = shape.gamma().compose(&pp.perm)?.cycle_labels();
    let keyed: Vec<((usize, usize), usize)> = pp
        .perm
        .cycles()
        .iter()
        .map(|c| {
            let (a, b) = (labels[c[0]], labels[c[1]]);
            ((a.min(b), a.max(b)), pp.part.block_of(c[0]))
        })
        .collect();
    let mut out = vec![BTreeSet::new(); pp.part.block_count()];
    for (i, (k1, b1)) in keyed.iter().enumerate() {
        for (k2, b2) in &keyed[i + 1..] {
            if k1 == k2 && b1 != b2 {
                out[*b1].insert(*b2);
                out[*b2].insert(*b1);
            }
        }
    }
    Ok(out)
}

/// Some block has no related block.
pub fn is_maximal(pp: &PartitionedPermutation, shape: &AnnulusShape) -> Result<bool> {
    Ok(related_blocks(pp, shape)?.iter().any(BTreeSet::is_empty))
}
