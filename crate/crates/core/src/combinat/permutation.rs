use std::fmt;

use super::{format_groups, parse_groups, SetPartition};
use crate::error::{Error, Result};

/// A bijection of `{0, .., n-1}` stored in one-line notation.
///
/// Composition is right-to-left: `p.compose(&q)` maps `x` to `p(q(x))`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self { map: (0..n).collect() }
    }

    /// Builds a permutation from its images; fails unless `images` is a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &y in &images {
            if y >= n {
                return Err(Error::OutOfRange { element: y, size: n });
            }
            if std::mem::replace(&mut seen[y], true) {
                return Err(Error::InvalidPermutation(format!("image {y} repeated")));
            }
        }
        Ok(Self { map: images })
    }

    /// Builds a permutation of `0..n` from disjoint cycles; unlisted points are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut map: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= n {
                    return Err(Error::OutOfRange { element: x, size: n });
                }
                if std::mem::replace(&mut seen[x], true) {
                    return Err(Error::InvalidPermutation(format!("point {x} in two cycles")));
                }
                map[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Self { map })
    }

    /// Parses 1-based cycle notation such as `(1,3)(2,4)`.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        Self::from_cycles(n, &parse_groups(text, '(', ')', n)?)
    }

    /// The consecutive-cycle permutation `(0..m1)(m1..m1+m2)...`.
    pub fn consecutive_cycles(orders: &[usize]) -> Self {
        let n: usize = orders.iter().sum();
        let mut map = Vec::with_capacity(n);
        let mut start = 0;
        for &k in orders {
            for i in 0..k {
                map.push(start + (i + 1) % k);
            }
            start += k;
        }
        Self { map }
    }

    /// The involution whose 2-cycles are the blocks of `p`; fails on blocks larger than 2.
    pub fn from_partition_pairs(p: &SetPartition) -> Result<Self> {
        if p.blocks().iter().any(|b| b.len() > 2) {
            return Err(Error::Domain("blocks of size at most 2 required".into()));
        }
        Self::from_cycles(p.size(), p.blocks())
    }

    pub fn size(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.map
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.map.len()];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y] = x;
        }
        Self { map: inv }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch { left: self.size(), right: other.size() });
        }
        Ok(Self { map: other.map.iter().map(|&x| self.map[x]).collect() })
    }

    /// Cycles, each starting at its minimum, sorted by minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.map.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.map[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle index of every point; cycles are numbered by their minimum.
    pub fn cycle_labels(&self) -> Vec<usize> {
        let n = self.map.len();
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            let mut x = start;
            while label[x] == usize::MAX {
                label[x] = next;
                x = self.map[x];
            }
            next += 1;
        }
        label
    }

    pub fn cycle_count(&self) -> usize {
        let n = self.map.len();
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if !seen[start] {
                count += 1;
                let mut x = start;
                while !seen[x] {
                    seen[x] = true;
                    x = self.map[x];
                }
            }
        }
        count
    }

    /// Minimal number of transpositions needed to write the permutation.
    pub fn length(&self) -> usize {
        self.size() - self.cycle_count()
    }

    /// The partition `0_π` into the cycles of the permutation.
    pub fn cycle_partition(&self) -> SetPartition {
        SetPartition::from_labels_unchecked(self.cycle_labels())
    }

    /// First-return map on `subset`, extended by the identity outside it.
    pub fn restrict(&self, subset: &[usize]) -> Result<Self> {
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
        let mut map: Vec<usize> = (0..n).collect();
        for x in 0..n {
            if inside[x] {
                let mut y = self.map[x];
                while !inside[y] {
                    y = self.map[y];
                }
                map[x] = y;
            }
        }
        Ok(Self { map })
    }

    /// True when every cycle has length exactly two.
    pub fn is_pairing(&self) -> bool {
        self.map.iter().enumerate().all(|(x, &y)| y != x && self.map[y] == x)
    }
}

impl fmt::Display for Permutation {
    /// 1-based cycle notation without fixed points; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<Vec<usize>> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        f.write_str(&format_groups(&cycles, '(', ')'))
    }
}
