//! Edge-labelled directed multigraphs, their quotients and edge classes.
//!
//! The graph `T` of an annulus shape has vertices `0..m` and one edge per
//! point `j`, running from `γ(j)` to `j` and labelled `j`. Gluing vertices
//! along a partition `π` gives the quotient `T^π`; edges of a quotient that
//! join the same unordered pair of vertices form one edge class.

mod bipartite;
mod limit;
mod obstruction;

pub use bipartite::BipartiteGraph;
pub use limit::{leading_order_excess, limit_triple_check, LimitConditions};
pub use obstruction::{admits_ncpp, gamma_parity, obstruction_set, respects_parity, MAX_OBSTRUCTION_ORDER};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::annular::AnnulusShape;
use crate::combinat::{DisjointSets, SetPartition};
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Edge {
    pub label: usize,
    pub src: usize,
    pub trg: usize,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.src == self.trg
    }

    /// Endpoints as an unordered pair `(min, max)`.
    pub fn endpoints(&self) -> (usize, usize) {
        (self.src.min(self.trg), self.src.max(self.trg))
    }
}

/// A directed multigraph with uniquely labelled edges, kept sorted by label.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LabeledDigraph {
    vertices: Vec<usize>,
    edges: Vec<Edge>,
}

impl LabeledDigraph {
    pub fn new(mut vertices: Vec<usize>, mut edges: Vec<Edge>) -> Result<Self> {
        vertices.sort_unstable();
        vertices.dedup();
        edges.sort_by_key(|e| e.label);
        if edges.windows(2).any(|w| w[0].label == w[1].label) {
            return Err(Error::InvalidArgument("edge labels must be unique".into()));
        }
        for e in &edges {
            for v in [e.src, e.trg] {
                if vertices.binary_search(&v).is_err() {
                    return Err(Error::InvalidArgument(format!("edge {} uses unknown vertex {v}", e.label)));
                }
            }
        }
        Ok(Self { vertices, edges })
    }

    /// The graph `T`: edge `j` runs from `γ(j)` to `j`.
    pub fn of_shape(shape: &AnnulusShape) -> Self {
        let g = shape.gamma();
        let m = shape.total();
        let edges = (0..m).map(|j| Edge { label: j, src: g.apply(j), trg: j }).collect();
        Self { vertices: (0..m).collect(), edges }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, label: usize) -> Result<&Edge> {
        self.edges
            .binary_search_by_key(&label, |e| e.label)
            .map(|i| &self.edges[i])
            .map_err(|_| Error::InvalidArgument(format!("no edge labelled {label}")))
    }

    /// Glues vertices along `p`, a partition of exactly the vertex ids `0..n`.
    /// Each glued vertex is named by the smallest original vertex in it.
    pub fn quotient(&self, p: &SetPartition) -> Result<Self> {
        let n = p.size();
        if self.vertices.len() != n || self.vertices.iter().enumerate().any(|(i, &v)| i != v) {
            return Err(Error::Domain("partition must cover exactly the vertex ids 0..n".into()));
        }
        let rep: Vec<usize> = (0..n).map(|v| p.blocks()[p.block_of(v)][0]).collect();
        let vertices = p.blocks().iter().map(|b| b[0]).collect();
        let edges = self.edges.iter().map(|e| Edge { label: e.label, src: rep[e.src], trg: rep[e.trg] }).collect();
        Self::new(vertices, edges)
    }

    /// Partition of the edges by unordered endpoint pair.
    pub fn edge_classes(&self) -> EdgeClasses {
        let mut by_pair: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for e in &self.edges {
            by_pair.entry(e.endpoints()).or_default().push(e.label);
        }
        let mut classes: Vec<((usize, usize), Vec<usize>)> = by_pair.into_iter().collect();
        classes.sort_by_key(|(_, labels)| labels[0]);
        let mut class_of = BTreeMap::new();
        for (i, (_, labels)) in classes.iter().enumerate() {
            for &l in labels {
                class_of.insert(l, i);
            }
        }
        EdgeClasses {
            endpoints: classes.iter().map(|(p, _)| *p).collect(),
            classes: classes.into_iter().map(|(_, l)| l).collect(),
            class_of,
        }
    }

    pub fn loop_labels(&self) -> BTreeSet<usize> {
        self.edges.iter().filter(|e| e.is_loop()).map(|e| e.label).collect()
    }

    /// Whether the edges in `labels` (all joining the same two vertices)
    /// split evenly between the two directions. Loops are balanced.
    pub fn orientation_balance(&self, labels: &[usize]) -> Result<bool> {
        let Some(&first) = labels.first() else {
            return Ok(true);
        };
        let pair = self.edge(first)?.endpoints();
        let mut forward = 0i64;
        for &l in labels {
            let e = self.edge(l)?;
            if e.endpoints() != pair {
                return Err(Error::Domain("edges do not share their endpoints".into()));
            }
            if !e.is_loop() {
                forward += if e.src == pair.0 { 1 } else { -1 };
            }
        }
        Ok(forward == 0)
    }

    /// Weakly connected components as sorted vertex lists, ordered by minimum.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let index: BTreeMap<usize, usize> = self.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut dsu = DisjointSets::new(self.vertices.len());
        for e in &self.edges {
            dsu.union(index[&e.src], index[&e.trg]);
        }
        let p = SetPartition::from_labels(&dsu.roots());
        p.blocks().iter().map(|b| b.iter().map(|&i| self.vertices[i]).collect()).collect()
    }

    /// Text form: a `digraph` header, then `label src trg` per edge, all 1-based.
    pub fn to_text(&self) -> String {
        let mut out = String::from("digraph\n");
        for e in &self.edges {
            let _ = writeln!(out, "{} {} {}", e.label + 1, e.src + 1, e.trg + 1);
        }
        out
    }
}

/// Edges grouped by the unordered pair of vertices they join.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EdgeClasses {
    /// Labels of each class, sorted; classes ordered by smallest label.
    pub classes: Vec<Vec<usize>>,
    /// Unordered endpoint pair of each class.
    pub endpoints: Vec<(usize, usize)>,
    class_of: BTreeMap<usize, usize>,
}

impl EdgeClasses {
    pub fn class_of(&self, label: usize) -> Option<usize> {
        self.class_of.get(&label).copied()
    }

    pub fn is_loop_class(&self, class: usize) -> bool {
        let (a, b) = self.endpoints[class];
        a == b
    }

    /// The classes as a partition of the labels, which must be `0..n`.
    pub fn as_partition(&self) -> Result<SetPartition> {
        let n = self.class_of.len();
        if self.class_of.keys().enumerate().any(|(i, &l)| i != l) {
            return Err(Error::Domain("edge labels are not 0..n".into()));
        }
        SetPartition::from_blocks(n, &self.classes)
    }
}

/// The bipartite graph whose white vertices are the components of `g`, whose
/// black vertices are the blocks of `tau` (a partition of the edge classes of
/// `g`), with one edge per class joining its component to its `tau`-block.
pub fn bipartite_of_classes(g: &LabeledDigraph, tau: &SetPartition) -> Result<BipartiteGraph> {
    let classes = g.edge_classes();
    if tau.size() != classes.classes.len() {
        return Err(Error::SizeMismatch { left: tau.size(), right: classes.classes.len() });
    }
    let components = g.connected_components();
    let mut component_of = BTreeMap::new();
    for (i, c) in components.iter().enumerate() {
        for &v in c {
            component_of.insert(v, i);
        }
    }
    let edges = (0..classes.classes.len())
        .map(|c| (component_of[&classes.endpoints[c].0], tau.block_of(c)))
        .collect();
    Ok(BipartiteGraph { white: components.len(), black: tau.block_count(), edges })
}
