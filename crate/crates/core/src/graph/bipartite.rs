use super::{Edge, LabeledDigraph};
use crate::combinat::DisjointSets;

/// A bipartite multigraph with `white` white and `black` black vertices.
///
/// Each edge joins white `w` to black `b`; parallel edges are allowed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BipartiteGraph {
    pub white: usize,
    pub black: usize,
    pub edges: Vec<(usize, usize)>,
}

impl BipartiteGraph {
    pub fn vertex_count(&self) -> usize {
        self.white + self.black
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut dsu = DisjointSets::new(n);
        let mut parts = n;
        for &(w, b) in &self.edges {
            if dsu.union(w, self.white + b) {
                parts -= 1;
            }
        }
        parts == 1
    }

    /// Connected with exactly one more vertex than edges; parallel edges count.
    pub fn is_tree(&self) -> bool {
        self.vertex_count() == self.edges.len() + 1 && self.is_connected()
    }

    /// Same graph with parallel edges merged.
    pub fn elementarized(&self) -> Self {
        let mut edges = self.edges.clone();
        edges.sort_unstable();
        edges.dedup();
        Self { white: self.white, black: self.black, edges }
    }

    /// White vertices become ids `0..white`, black ones `white..white+black`;
    /// edges run from black to white and are labelled by position.
    pub fn to_digraph(&self) -> LabeledDigraph {
        let vertices = (0..self.vertex_count()).collect();
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(label, &(w, b))| Edge { label, src: self.white + b, trg: w })
            .collect();
        LabeledDigraph::new(vertices, edges).expect("endpoints are valid vertex ids")
    }
}
