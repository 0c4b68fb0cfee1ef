//! Non-crossing permutations and pairings on a union of circles.
//!
//! An annulus shape `(m1, .., mr)` fixes the permutation
//! `γ = (0 .. m1-1)(m1 .. m1+m2-1)...` with one cycle per circle. A permutation
//! `π` satisfies `#π + #γ + #(π⁻¹γ) ≤ m + 2 #(π ∨ γ)`; equality singles out the
//! non-crossing ones, split by whether `π ∨ γ` is everything.

use std::fmt;
use std::str::FromStr;

use crate::combinat::{pairings, Permutation, SetPartition};
use crate::error::{Error, Result};

/// Circle sizes `m1, .., mr`, all positive.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct AnnulusShape {
    orders: Vec<usize>,
}

impl AnnulusShape {
    pub fn new(orders: Vec<usize>) -> Result<Self> {
        if orders.is_empty() {
            return Err(Error::InvalidArgument("at least one circle is required".into()));
        }
        if orders.contains(&0) {
            return Err(Error::InvalidArgument("circle sizes must be positive".into()));
        }
        Ok(Self { orders })
    }

    pub fn orders(&self) -> &[usize] {
        &self.orders
    }

    /// Total number of points `m`.
    pub fn total(&self) -> usize {
        self.orders.iter().sum()
    }

    /// Number of circles `r`.
    pub fn circles(&self) -> usize {
        self.orders.len()
    }

    pub fn gamma(&self) -> Permutation {
        Permutation::consecutive_cycles(&self.orders)
    }

    /// Circle index of every point.
    pub fn circle_labels(&self) -> Vec<usize> {
        self.orders.iter().enumerate().flat_map(|(i, &k)| std::iter::repeat_n(i, k)).collect()
    }

    pub fn circle_partition(&self) -> SetPartition {
        SetPartition::from_labels(&self.circle_labels())
    }
}

impl fmt::Display for AnnulusShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.orders.iter().map(|k| k.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for AnnulusShape {
    type Err = Error;

    /// Accepts `2,2` or `(2,2)`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let orders = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad circle size {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(orders)
    }
}

/// Position of a permutation relative to `γ`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum NcClass {
    /// Equality with `π ∨ γ = 1`.
    Connected,
    /// Equality with `π ∨ γ ≠ 1`.
    NonConnecting,
    /// Strict inequality.
    Neither,
}

impl NcClass {
    pub fn is_non_crossing(self) -> bool {
        self != NcClass::Neither
    }
}

/// Both sides of the genus inequality together with the join block count.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GenusData {
    pub lhs: usize,
    pub join_blocks: usize,
    pub n: usize,
}

impl GenusData {
    pub fn rhs(&self) -> usize {
        self.n + 2 * self.join_blocks
    }
}

pub fn genus_data(p: &Permutation, g: &Permutation) -> Result<GenusData> {
    let rest = p.inverse().compose(g)?;
    let join = p.cycle_partition().join(&g.cycle_partition())?;
    Ok(GenusData {
        lhs: p.cycle_count() + g.cycle_count() + rest.cycle_count(),
        join_blocks: join.block_count(),
        n: p.size(),
    })
}

pub fn classify(p: &Permutation, g: &Permutation) -> Result<NcClass> {
    let d = genus_data(p, g)?;
    Ok(if d.lhs != d.rhs() {
        NcClass::Neither
    } else if d.join_blocks == 1 {
        NcClass::Connected
    } else {
        NcClass::NonConnecting
    })
}

fn pairings_of_class(shape: &AnnulusShape, want: NcClass) -> impl Iterator<Item = Permutation> {
    let g = shape.gamma();
    pairings(shape.total()).filter_map(move |p| {
        let s = Permutation::from_partition_pairs(&p).expect("pairing blocks have size two");
        (classify(&s, &g).ok()? == want).then_some(s)
    })
}

/// Connected non-crossing pairings of the annulus.
pub fn enumerate_nc2(shape: &AnnulusShape) -> impl Iterator<Item = Permutation> {
    pairings_of_class(shape, NcClass::Connected)
}

/// Non-crossing pairings that leave at least two circles unconnected.
pub fn enumerate_nc2_nonconnecting(shape: &AnnulusShape) -> impl Iterator<Item = Permutation> {
    pairings_of_class(shape, NcClass::NonConnecting)
}

/// Non-crossing permutations of the annulus (connected or not), by brute force over `S_m`.
pub fn enumerate_nc_permutations(shape: &AnnulusShape, want: Option<NcClass>) -> impl Iterator<Item = (Permutation, NcClass)> {
    let g = shape.gamma();
    crate::combinat::permutations(shape.total()).filter_map(move |p| {
        let c = classify(&p, &g).ok()?;
        let keep = match want {
            Some(w) => c == w,
            None => c.is_non_crossing(),
        };
        keep.then_some((p, c))
    })
}

fn check_cycle(sigma: &Permutation, (u, v): (usize, usize)) -> Result<()> {
    let n = sigma.size();
    if u >= n || v >= n {
        return Err(Error::OutOfRange { element: u.max(v), size: n });
    }
    if u == v || sigma.apply(u) != v || sigma.apply(v) != u {
        return Err(Error::Domain(format!("({},{}) is not a 2-cycle of the pairing", u + 1, v + 1)));
    }
    Ok(())
}

/// 2-cycles of `sigma` whose endpoints sit on different circles.
pub fn through_strings(sigma: &Permutation, shape: &AnnulusShape) -> Result<Vec<(usize, usize)>> {
    if sigma.size() != shape.total() {
        return Err(Error::SizeMismatch { left: sigma.size(), right: shape.total() });
    }
    let circle = shape.circle_labels();
    Ok(sigma
        .cycles()
        .into_iter()
        .filter(|c| c.len() == 2 && circle[c[0]] != circle[c[1]])
        .map(|c| (c[0], c[1]))
        .collect())
}

/// Whether replacing the 2-cycle `(u,v)` by two fixed points splits `γ ∨ σ` in two.
pub fn is_cutting(sigma: &Permutation, string: (usize, usize), shape: &AnnulusShape) -> Result<bool> {
    check_cycle(sigma, string)?;
    let (u, v) = string;
    let transposition = Permutation::from_cycles(sigma.size(), &[vec![u, v]])?;
    let cut = sigma.compose(&transposition)?;
    let join = shape.gamma().cycle_partition().join(&cut.cycle_partition())?;
    Ok(join.block_count() == 2)
}

/// Whether `u` and `v` lie in the same cycle of `γσ`.
pub fn is_loop_block(sigma: &Permutation, string: (usize, usize), shape: &AnnulusShape) -> Result<bool> {
    check_cycle(sigma, string)?;
    let labels = shape.gamma().compose(sigma)?.cycle_labels();
    Ok(labels[string.0] == labels[string.1])
}
