//! Brute-force genus expansion of the joint cumulant of traces.
//!
//! Writing `Tr X^{m1} ... Tr X^{mr}` as a sum over index maps `i: [m] → [N]`,
//! the joint cumulant splits over the kernel `π` of `i` and over partitions
//! `τ` of the edge labels of `T` with `τ ∨ γ = 1`. Each `τ`-block contributes
//! the classical cumulant of the entries it names, which is nonzero only when
//! all of them sit on one edge class of `T^π`:
//!
//! * an off-diagonal class needs as many edges in each direction, giving `b_{|D|}`;
//! * a diagonal (loop) class is real Gaussian, so only `|D| = 2` survives, giving `b2`.

use std::collections::BTreeMap;

use num::{BigInt, BigRational, One, Zero};
use rayon::prelude::*;

use crate::annular::AnnulusShape;
use crate::combinat::{partitions, SetPartition};
use crate::error::{Error, Result};
use crate::poly::{BetaPoly, Monomial};

/// Largest `m` the oracle accepts unless told otherwise.
pub const DEFAULT_ORACLE_BOUND: usize = 8;

/// Edge classes of `T^π`, flattened for the inner loop.
struct ClassData {
    class: Vec<usize>,
    // +1 / -1 by direction inside the class, 0 for loops
    orient: Vec<i32>,
}

impl ClassData {
    fn new(gamma: &[usize], pi: &SetPartition) -> Self {
        let k = pi.block_count();
        let m = gamma.len();
        let mut class = Vec::with_capacity(m);
        let mut orient = Vec::with_capacity(m);
        for (j, &g) in gamma.iter().enumerate() {
            let (a, b) = (pi.block_of(g), pi.block_of(j));
            class.push(a.min(b) * k + a.max(b));
            orient.push((a as i32 - b as i32).signum());
        }
        Self { class, orient }
    }

    fn weight(&self, tau: &[Vec<usize>]) -> Option<Monomial> {
        let mut mono = Vec::with_capacity(tau.len());
        for block in tau {
            if block.len() == 1 {
                return None;
            }
            let c = self.class[block[0]];
            let mut balance = 0;
            for &j in block {
                if self.class[j] != c {
                    return None;
                }
                balance += self.orient[j];
            }
            let is_loop = self.orient[block[0]] == 0;
            if is_loop && block.len() != 2 || balance != 0 {
                return None;
            }
            mono.push(block.len() as u32);
        }
        mono.sort_unstable();
        Some(mono)
    }
}

fn check_pi_tau(shape: &AnnulusShape, tau: &SetPartition, pi: &SetPartition) -> Result<()> {
    let m = shape.total();
    for size in [tau.size(), pi.size()] {
        if size != m {
            return Err(Error::SizeMismatch { left: size, right: m });
        }
    }
    Ok(())
}

/// The cumulant weight of one `(τ, π)` term: a single monomial or zero.
pub fn k_tau_pi(shape: &AnnulusShape, tau: &SetPartition, pi: &SetPartition) -> Result<BetaPoly> {
    check_pi_tau(shape, tau, pi)?;
    let data = ClassData::new(shape.gamma().images(), pi);
    Ok(data.weight(tau.blocks()).map(BetaPoly::monomial).unwrap_or_default())
}

fn connecting_taus(shape: &AnnulusShape) -> Vec<Vec<Vec<usize>>> {
    let circles = shape.circle_partition();
    partitions(shape.total())
        .filter(|t| t.join(&circles).map(|j| j.block_count() == 1).unwrap_or(false))
        .map(|t| t.blocks().to_vec())
        .collect()
}

/// Monomial counts `Σ_τ k_τ(π)`, summed over `π` and grouped by `#π`.
fn counts_by_block_number(shape: &AnnulusShape, only: Option<usize>) -> Vec<BTreeMap<Monomial, i64>> {
    let m = shape.total();
    let gamma = shape.gamma();
    let taus = connecting_taus(shape);
    let pis: Vec<SetPartition> = partitions(m).filter(|p| only.is_none_or(|k| p.block_count() == k)).collect();
    pis.par_iter()
        .fold(
            || vec![BTreeMap::new(); m + 1],
            |mut acc: Vec<BTreeMap<Monomial, i64>>, pi| {
                let data = ClassData::new(gamma.images(), pi);
                for tau in &taus {
                    if let Some(mono) = data.weight(tau) {
                        *acc[pi.block_count()].entry(mono).or_insert(0) += 1;
                    }
                }
                acc
            },
        )
        .reduce(
            || vec![BTreeMap::new(); m + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    for (mono, c) in y {
                        *x.entry(mono).or_insert(0) += c;
                    }
                }
                a
            },
        )
}

fn check_bound(shape: &AnnulusShape, bound: usize) -> Result<()> {
    if shape.total() > bound {
        return Err(Error::Capability(format!("m = {} exceeds the brute-force bound {bound}", shape.total())));
    }
    Ok(())
}

/// `α` from the terms with `#π = m/2 - r + 2`; zero when `m` is odd or no such `π` exists.
pub fn moment_oracle(shape: &AnnulusShape, bound: usize) -> Result<BetaPoly> {
    check_bound(shape, bound)?;
    let m = shape.total();
    if m % 2 == 1 || m / 2 + 2 <= shape.circles() {
        return Ok(BetaPoly::zero());
    }
    let k = m / 2 + 2 - shape.circles();
    if k > m {
        return Ok(BetaPoly::zero());
    }
    let counts = counts_by_block_number(shape, Some(k));
    Ok(BetaPoly::from_counts(&counts[k]))
}

/// `N^{r-2-m/2} Σ_π N(N-1)...(N-#π+1) Σ_τ k_τ(π)`: the normalized joint
/// cumulant of `Tr X^{m1}, ..., Tr X^{mr}` at matrix size `N`, exactly.
pub fn finite_n_expansion(shape: &AnnulusShape, n: u64, bound: usize) -> Result<BetaPoly> {
    check_bound(shape, bound)?;
    let m = shape.total();
    let least = (m / 2 + 2).saturating_sub(shape.circles()).max(1) as u64;
    if n < least {
        return Err(Error::Domain(format!("N = {n} is below the minimum {least} for {shape}")));
    }
    if m % 2 == 1 {
        return Ok(BetaPoly::zero());
    }
    let counts = counts_by_block_number(shape, None);
    let big_n = BigInt::from(n);
    let exponent = shape.circles() as i64 - 2 - (m / 2) as i64;
    let scale = if exponent >= 0 {
        BigRational::from_integer(big_n.pow(exponent as u32))
    } else {
        BigRational::new(BigInt::one(), big_n.pow((-exponent) as u32))
    };
    let mut total = BetaPoly::zero();
    let mut falling = BigInt::one();
    for (k, c) in counts.iter().enumerate().skip(1) {
        falling *= BigInt::from(n) - BigInt::from(k as u64 - 1);
        if falling.is_zero() {
            break;
        }
        total = total + BetaPoly::from_counts(c).scale(&(BigRational::from_integer(falling.clone()) * &scale));
    }
    Ok(total)
}
