use std::fmt;

use super::{format_groups, parse_groups, DisjointSets};
use crate::error::{Error, Result};

/// A set partition of `{0, .., n-1}` in canonical form.
///
/// Blocks are sorted internally and ordered by their minimum; the block
/// index of each element (a restricted growth string) is kept alongside.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct SetPartition {
    labels: Vec<usize>,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Canonicalizes an arbitrary labelling: elements with equal labels share a block.
    pub fn from_labels<T: Eq + std::hash::Hash + Copy>(labels: &[T]) -> Self {
        let mut ids = std::collections::HashMap::new();
        let canon: Vec<usize> = labels
            .iter()
            .map(|l| {
                let next = ids.len();
                *ids.entry(*l).or_insert(next)
            })
            .collect();
        Self::from_labels_unchecked(canon)
    }

    /// Labels must already be a restricted growth string.
    pub(crate) fn from_labels_unchecked(labels: Vec<usize>) -> Self {
        let count = labels.iter().map(|&l| l + 1).max().unwrap_or(0);
        let mut blocks = vec![Vec::new(); count];
        for (x, &l) in labels.iter().enumerate() {
            blocks[l].push(x);
        }
        Self { labels, blocks }
    }

    /// Builds a partition of `0..n` from its blocks; they must cover each element exactly once.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut labels = vec![usize::MAX; n];
        for (i, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &x in block {
                if x >= n {
                    return Err(Error::OutOfRange { element: x, size: n });
                }
                if labels[x] != usize::MAX {
                    return Err(Error::InvalidPartition(format!("element {x} in two blocks")));
                }
                labels[x] = i;
            }
        }
        if let Some(x) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(Error::InvalidPartition(format!("element {x} not covered")));
        }
        Ok(Self::from_labels(&labels))
    }

    /// Parses 1-based block notation such as `{1,2}{3,4}`.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        Self::from_blocks(n, &parse_groups(text, '{', '}', n)?)
    }

    /// `0_n`, all singletons.
    pub fn singletons(n: usize) -> Self {
        Self::from_labels_unchecked((0..n).collect())
    }

    /// `1_n`, a single block (empty when `n == 0`).
    pub fn single_block(n: usize) -> Self {
        Self::from_labels_unchecked(vec![0; n])
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Index of the block containing `x`.
    pub fn block_of(&self, x: usize) -> usize {
        self.labels[x]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn same_block(&self, a: usize, b: usize) -> bool {
        self.labels[a] == self.labels[b]
    }

    /// `n` minus the number of blocks.
    pub fn length(&self) -> usize {
        self.size() - self.block_count()
    }

    fn check_size(&self, other: &Self) -> Result<()> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch { left: self.size(), right: other.size() });
        }
        Ok(())
    }

    /// Least upper bound in the refinement order.
    pub fn join(&self, other: &Self) -> Result<Self> {
        self.check_size(other)?;
        let mut dsu = DisjointSets::new(self.size());
        for p in [self, other] {
            for block in &p.blocks {
                for w in block.windows(2) {
                    dsu.union(w[0], w[1]);
                }
            }
        }
        Ok(Self::from_labels(&dsu.roots()))
    }

    /// Greatest lower bound in the refinement order.
    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.check_size(other)?;
        let pairs: Vec<(usize, usize)> = self.labels.iter().copied().zip(other.labels.iter().copied()).collect();
        Ok(Self::from_labels(&pairs))
    }

    /// True when every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &Self) -> Result<bool> {
        self.check_size(other)?;
        Ok(self.blocks.iter().all(|b| b.iter().all(|&x| other.labels[x] == other.labels[b[0]])))
    }

    /// Nonempty intersections of the blocks with `subset`, canonically ordered.
    pub fn restrict(&self, subset: &[usize]) -> Result<Vec<Vec<usize>>> {
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        let n = self.size();
        let mut inside = vec![false; n];
        for &x in subset {
            if x >= n {
                return Err(Error::OutOfRange { element: x, size: n });
            }
            inside[x] = true;
        }
        let mut parts: Vec<Vec<usize>> = self
            .blocks
            .iter()
            .map(|b| b.iter().copied().filter(|&x| inside[x]).collect::<Vec<_>>())
            .filter(|b| !b.is_empty())
            .collect();
        parts.sort_unstable_by_key(|b| b[0]);
        Ok(parts)
    }

    /// No `a < b < c < d` with `a, c` in one block and `b, d` in another.
    pub fn is_non_crossing(&self) -> bool {
        let n = self.size();
        let l = &self.labels;
        for a in 0..n {
            for b in a + 1..n {
                if l[b] == l[a] {
                    continue;
                }
                for c in b + 1..n {
                    if l[c] != l[a] {
                        continue;
                    }
                    for d in c + 1..n {
                        if l[d] == l[b] {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_groups(&self.blocks, '{', '}'))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_is_order_independent() {
        let a = SetPartition::parse(5, "{4,5}{3,1}{2}").unwrap();
        assert_eq!(a.to_string(), "{1,3}{2}{4,5}");
        assert_eq!(a.length(), 2);
    }

    #[test]
    fn join_merges_chains() {
        let a = SetPartition::parse(4, "{1,2}{3}{4}").unwrap();
        let b = SetPartition::parse(4, "{1}{2,3}{4}").unwrap();
        assert_eq!(a.join(&b).unwrap().to_string(), "{1,2,3}{4}");
        assert_eq!(a.meet(&b).unwrap(), SetPartition::singletons(4));
        assert!(a.refines(&a.join(&b).unwrap()).unwrap());
    }

    #[test]
    fn restriction_keeps_nonempty_parts() {
        let a = SetPartition::parse(5, "{1,2,3}{4,5}").unwrap();
        assert_eq!(a.restrict(&[1, 3]).unwrap(), vec![vec![1], vec![3]]);
        let b = SetPartition::parse(4, "{1,4}{2,3}").unwrap();
        assert_eq!(b.restrict(&[2, 3]).unwrap(), vec![vec![2], vec![3]]);
        assert_eq!(a.restrict(&[]), Err(Error::EmptySubset));
    }

    #[test]
    fn crossing_detection() {
        assert!(!SetPartition::parse(4, "{1,3}{2,4}").unwrap().is_non_crossing());
        assert!(SetPartition::parse(4, "{1,4}{2,3}").unwrap().is_non_crossing());
    }

    #[test]
    fn rejects_bad_blocks() {
        assert!(SetPartition::parse(3, "{1,2}").is_err());
        assert!(SetPartition::parse(3, "{1,2}{2,3}").is_err());
        let a = SetPartition::singletons(2);
        assert!(a.join(&SetPartition::singletons(3)).is_err());
    }
}
