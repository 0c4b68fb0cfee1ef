//! Permutations, set partitions and exhaustive enumerations of both.

mod enumerate;
mod partition;
mod permutation;

pub use enumerate::{pairings, partitions, permutations, Pairings, Partitions, Permutations};
pub use partition::SetPartition;
pub use permutation::Permutation;

use crate::error::{Error, Result};

/// Union-find over `0..n` with path halving and union by size.
#[derive(Clone, Debug)]
pub(crate) struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }

    /// Root of every element, in element order.
    pub(crate) fn roots(&mut self) -> Vec<usize> {
        (0..self.parent.len()).map(|x| self.find(x)).collect()
    }
}

/// Parses groups such as `(1,3)(2)` or `{1,2}{3}` into 0-based element lists.
pub(crate) fn parse_groups(text: &str, open: char, close: char, n: usize) -> Result<Vec<Vec<usize>>> {
    let mut groups = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix(open)
            .ok_or_else(|| Error::Parse(format!("expected '{open}' in {text:?}")))?;
        let end = body
            .find(close)
            .ok_or_else(|| Error::Parse(format!("unclosed '{open}' in {text:?}")))?;
        let inner = body[..end].trim();
        let mut group = Vec::new();
        if !inner.is_empty() {
            for tok in inner.split(',') {
                let v: usize = tok
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad element {tok:?} in {text:?}")))?;
                if v == 0 || v > n {
                    return Err(Error::OutOfRange { element: v, size: n });
                }
                group.push(v - 1);
            }
        }
        groups.push(group);
        rest = body[end + 1..].trim_start();
    }
    Ok(groups)
}

pub(crate) fn format_groups(groups: &[Vec<usize>], open: char, close: char) -> String {
    let mut out = String::new();
    for g in groups {
        out.push(open);
        let items: Vec<String> = g.iter().map(|x| (x + 1).to_string()).collect();
        out.push_str(&items.join(","));
        out.push(close);
    }
    out
}
