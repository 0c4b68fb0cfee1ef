use super::{Permutation, SetPartition};

/// Lazily enumerates all set partitions of `0..n` in restricted-growth order.
pub fn partitions(n: usize) -> Partitions {
    Partitions { rgs: vec![0; n], maxes: vec![0; n], started: false, done: n == 0 }
}

/// Lazily enumerates all perfect matchings of `0..n` as partitions into pairs.
pub fn pairings(n: usize) -> Pairings {
    Pairings { n, mate: vec![usize::MAX; n], stack: Vec::new(), started: false, done: n == 0 || n % 2 == 1 }
}

/// Lazily enumerates all permutations of `0..n` in lexicographic order of images.
pub fn permutations(n: usize) -> Permutations {
    Permutations { current: (0..n).collect(), done: false }
}

pub struct Partitions {
    rgs: Vec<usize>,
    // maxes[i] = max(rgs[0..i]) + 1 for i > 0
    maxes: Vec<usize>,
    started: bool,
    done: bool,
}

impl Iterator for Partitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            for i in 1..self.rgs.len() {
                self.maxes[i] = 1;
            }
            return Some(SetPartition::from_labels_unchecked(self.rgs.clone()));
        }
        let n = self.rgs.len();
        // find the rightmost position that can still grow
        let mut i = n;
        while i > 1 {
            i -= 1;
            if self.rgs[i] < self.maxes[i] {
                self.rgs[i] += 1;
                for j in i + 1..n {
                    self.rgs[j] = 0;
                    self.maxes[j] = self.maxes[j - 1].max(self.rgs[j - 1] + 1);
                }
                return Some(SetPartition::from_labels_unchecked(self.rgs.clone()));
            }
        }
        self.done = true;
        None
    }
}

pub struct Pairings {
    n: usize,
    mate: Vec<usize>,
    stack: Vec<(usize, usize)>,
    started: bool,
    done: bool,
}

impl Pairings {
    fn free_after(&self, from: usize) -> Option<usize> {
        (from..self.n).find(|&x| self.mate[x] == usize::MAX)
    }

    fn pair(&mut self, a: usize, b: usize) {
        self.mate[a] = b;
        self.mate[b] = a;
        self.stack.push((a, b));
    }

    fn descend(&mut self) {
        while let Some(a) = self.free_after(0) {
            let b = self.free_after(a + 1).expect("even number of free points");
            self.pair(a, b);
        }
    }

    fn emit(&self) -> SetPartition {
        let blocks: Vec<Vec<usize>> = self.stack.iter().map(|&(a, b)| vec![a, b]).collect();
        SetPartition::from_blocks(self.n, &blocks).expect("stack holds a perfect matching")
    }
}

impl Iterator for Pairings {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.descend();
            return Some(self.emit());
        }
        while let Some((a, b)) = self.stack.pop() {
            self.mate[a] = usize::MAX;
            self.mate[b] = usize::MAX;
            if let Some(c) = self.free_after(b + 1) {
                self.pair(a, c);
                self.descend();
                return Some(self.emit());
            }
        }
        self.done = true;
        None
    }
}

pub struct Permutations {
    current: Vec<usize>,
    done: bool,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let out = Permutation::from_images(self.current.clone()).expect("always a bijection");
        let v = &mut self.current;
        match (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) {
            Some(i) => {
                let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot has a successor");
                v.swap(i - 1, j);
                v[i..].reverse();
            }
            None => self.done = true,
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn bell(n: usize) -> usize {
        // Bell triangle
        let mut row = vec![1usize];
        for _ in 0..n {
            let mut next = vec![*row.last().unwrap()];
            for &x in &row {
                let v = next.last().unwrap() + x;
                next.push(v);
            }
            row = next;
        }
        row[0]
    }

    #[test]
    fn partition_counts_are_bell_numbers() {
        for n in 1..=8 {
            let all: Vec<_> = partitions(n).collect();
            assert_eq!(all.len(), bell(n), "n = {n}");
            let distinct: HashSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
        }
    }

    #[test]
    fn pairing_counts_are_double_factorials() {
        let expected = [0, 0, 1, 0, 3, 0, 15, 0, 105, 0, 945];
        for n in 1..=10 {
            let all: Vec<_> = pairings(n).collect();
            assert_eq!(all.len(), expected[n], "n = {n}");
            assert!(all.iter().all(|p| p.blocks().iter().all(|b| b.len() == 2)));
            let distinct: HashSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
        }
    }

    #[test]
    fn permutation_counts_are_factorials() {
        let mut f = 1;
        for n in 1..=7 {
            f *= n;
            let all: HashSet<_> = permutations(n).collect();
            assert_eq!(all.len(), f);
        }
    }
}
