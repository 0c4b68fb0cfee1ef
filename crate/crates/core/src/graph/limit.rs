//! Structural conditions on a triple `(σ, τ, π)` deciding whether the term
//! indexed by `π` survives in the large-`N` limit.
//!
//! `σ` is a pairing, `τ` a partition of the edge labels with `σ ≤ τ`, and `π`
//! a partition of the vertices of `T`, with `τ` refining the edge classes of
//! `T^π`. The conditions are:
//!
//! * **L1** — `σ` is a non-crossing pairing of the annulus;
//! * **L2** — on each block `W` of `σ ∨ γ`, `π` restricts to the cycles of `γσ`;
//! * **L3** — two loop blocks of `σ` lying in different components of `T^{γσ}`
//!   share an edge class of `T^π` exactly when there are non-loop edges at
//!   their vertices whose images join the same pair of `π`-blocks, one of which
//!   holds both loop vertices;
//! * **L4** — the bipartite graph (components of `T^{γσ}`, non-loop `τ`-blocks
//!   merged along the edge classes of `T^π`, one edge per `σ`-block) becomes a
//!   tree once parallel edges are merged;
//! * **L4'** — the same graph without any merging is already a tree.

use super::{BipartiteGraph, LabeledDigraph};
use crate::annular::{classify, AnnulusShape};
use crate::combinat::{DisjointSets, Permutation, SetPartition};
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LimitConditions {
    pub l1: bool,
    pub l2: bool,
    pub l3: bool,
    pub l4: bool,
    pub l4_prime: bool,
}

impl LimitConditions {
    /// L1 through L4 all hold.
    pub fn all(&self) -> bool {
        self.l1 && self.l2 && self.l3 && self.l4
    }
}

/// `#π - m/2 + r - 2`, the power of `N` carried by the terms indexed by `π`.
pub fn leading_order_excess(shape: &AnnulusShape, pi: &SetPartition) -> Result<i64> {
    let m = shape.total();
    if pi.size() != m {
        return Err(Error::SizeMismatch { left: pi.size(), right: m });
    }
    if m % 2 == 1 {
        return Err(Error::Domain("odd number of points".into()));
    }
    Ok(pi.block_count() as i64 - (m / 2) as i64 + shape.circles() as i64 - 2)
}

pub fn limit_triple_check(shape: &AnnulusShape, sigma: &Permutation, tau: &SetPartition, pi: &SetPartition) -> Result<LimitConditions> {
    let m = shape.total();
    for size in [sigma.size(), tau.size(), pi.size()] {
        if size != m {
            return Err(Error::SizeMismatch { left: size, right: m });
        }
    }
    if !sigma.is_pairing() {
        return Err(Error::Domain(format!("{sigma} is not a pairing")));
    }
    let gamma = shape.gamma();
    let t = LabeledDigraph::of_shape(shape);
    let t_pi = t.quotient(pi)?;
    let pi_bar = t_pi.edge_classes().as_partition()?;
    let sigma_part = sigma.cycle_partition();
    if !sigma_part.refines(tau)? || !tau.refines(&pi_bar)? {
        return Err(Error::Domain("expected sigma <= tau <= edge classes of T^pi".into()));
    }

    let l1 = classify(sigma, &gamma)?.is_non_crossing();

    let gs = gamma.compose(sigma)?;
    let rho = gs.cycle_partition();
    let joined = sigma_part.join(&gamma.cycle_partition())?;
    let mut l2 = true;
    for w in joined.blocks() {
        l2 &= pi.restrict(w)? == rho.restrict(w)?;
    }

    let t_rho = t.quotient(&rho)?;
    let components = t_rho.connected_components();
    let mut component_of = vec![0; m];
    for (i, c) in components.iter().enumerate() {
        for &v in c {
            component_of[v] = i;
        }
    }
    let vertex = |x: usize| rho.blocks()[rho.block_of(x)][0];
    let pairs: Vec<(usize, usize)> = sigma.cycles().into_iter().map(|c| (c[0], c[1])).collect();
    let loops: Vec<usize> = pairs.iter().map(|p| p.0).filter(|&u| t_rho.edge(u).map(|e| e.is_loop()).unwrap_or(false)).collect();

    let pi_pair = |label: usize| {
        let (a, b) = (pi.block_of(gamma.apply(label)), pi.block_of(label));
        (a.min(b), a.max(b))
    };
    let inside = |block: usize, x: usize| rho.blocks()[rho.block_of(x)].iter().all(|&y| pi.block_of(y) == block);
    let mut l3 = true;
    for (i, &u1) in loops.iter().enumerate() {
        for &u2 in &loops[i + 1..] {
            if component_of[vertex(u1)] == component_of[vertex(u2)] {
                continue;
            }
            let same_class = pi_bar.same_block(u1, u2);
            let near = |u: usize| -> Vec<usize> {
                t_rho
                    .edges()
                    .iter()
                    .filter(|e| !e.is_loop() && (e.src == vertex(u) || e.trg == vertex(u)))
                    .map(|e| e.label)
                    .collect()
            };
            let (near1, near2) = (near(u1), near(u2));
            let witnessed = near1.iter().any(|&a| {
                near2.iter().any(|&b| {
                    let (p, q) = (pi_pair(a), pi_pair(b));
                    p == q && [p.0, p.1].iter().any(|&x| inside(x, u1) && inside(x, u2))
                })
            });
            l3 &= same_class == witnessed;
        }
    }

    let mut merged = DisjointSets::new(tau.block_count());
    let non_loop: Vec<usize> = (0..tau.block_count()).filter(|&d| !t_pi.edge(tau.blocks()[d][0]).map(|e| e.is_loop()).unwrap_or(true)).collect();
    for (i, &d1) in non_loop.iter().enumerate() {
        for &d2 in &non_loop[i + 1..] {
            if pi_bar.same_block(tau.blocks()[d1][0], tau.blocks()[d2][0]) {
                merged.union(d1, d2);
            }
        }
    }
    let merged = SetPartition::from_labels(&merged.roots());
    let white_of = |u: usize| component_of[vertex(u)];
    let coarse = BipartiteGraph {
        white: components.len(),
        black: merged.block_count(),
        edges: pairs.iter().map(|&(u, _)| (white_of(u), merged.block_of(tau.block_of(u)))).collect(),
    };
    let fine = BipartiteGraph {
        white: components.len(),
        black: tau.block_count(),
        edges: pairs.iter().map(|&(u, _)| (white_of(u), tau.block_of(u))).collect(),
    };

    Ok(LimitConditions { l1, l2, l3, l4: coarse.elementarized().is_tree(), l4_prime: fine.is_tree() })
}
