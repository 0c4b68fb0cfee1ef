//! Higher-order free cumulants by inverting
//! `α_{m1..mr} = Σ_{(U,π) non-crossing} Π_{B ∈ U} κ_{sizes of the π-cycles in B}`.

use std::collections::BTreeMap;

use num::{BigInt, BigRational};

use super::{moment_theorem1, obstruction_polynomial};
use crate::annular::AnnulusShape;
use crate::error::{Error, Result};
use crate::partitioned::{enumerate_ps_nc, PartitionedPermutation};
use crate::poly::BetaPoly;

/// Largest number of arguments supported by [`free_cumulants`].
pub const MAX_CUMULANT_ORDER: usize = 4;

/// Free cumulants keyed by their ascending index tuple.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CumulantTable {
    entries: BTreeMap<Vec<usize>, BetaPoly>,
}

impl CumulantTable {
    /// Looks up `κ` for the indices in any order.
    pub fn get(&self, idx: &[usize]) -> Option<&BetaPoly> {
        let mut key = idx.to_vec();
        key.sort_unstable();
        self.entries.get(&key)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<usize>, &BetaPoly)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Ascending tuples with at most `max_r` entries summing to at most `max_order`,
/// ordered by length and then by sum.
fn sorted_indices(max_r: usize, max_order: usize) -> Vec<Vec<usize>> {
    fn grow(prefix: &mut Vec<usize>, min: usize, left: usize, len: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        for k in min..=left {
            prefix.push(k);
            grow(prefix, k, left - k, len, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for r in 1..=max_r {
        grow(&mut Vec::new(), 1, max_order, r, &mut out);
    }
    out.sort_by_key(|v| (v.len(), v.iter().sum::<usize>(), v.clone()));
    out
}

fn cycle_sizes_by_block(pp: &PartitionedPermutation) -> Vec<Vec<usize>> {
    pp.cycles_by_block().iter().map(|b| b.iter().map(Vec::len).collect()).collect()
}

/// `Σ_{(U,π)} Π_B κ_B` for one shape, with cumulants supplied by `lookup`.
pub fn moment_from_cumulants(shape: &AnnulusShape, lookup: impl Fn(&[usize]) -> BetaPoly) -> BetaPoly {
    enumerate_ps_nc(shape)
        .map(|pp| {
            cycle_sizes_by_block(&pp).iter().fold(BetaPoly::one(), |acc, sizes| {
                let mut key = sizes.clone();
                key.sort_unstable();
                &acc * &lookup(&key)
            })
        })
        .sum()
}

/// All free cumulants with at most `max_r` arguments of total order at most `max_order`.
pub fn free_cumulants(max_r: usize, max_order: usize) -> Result<CumulantTable> {
    if max_r == 0 || max_order == 0 {
        return Err(Error::InvalidArgument("orders must be positive".into()));
    }
    if max_r > MAX_CUMULANT_ORDER {
        return Err(Error::Capability(format!("free cumulants are computed for at most {MAX_CUMULANT_ORDER} arguments, not {max_r}")));
    }
    let mut table = CumulantTable::default();
    for idx in sorted_indices(max_r, max_order) {
        let shape = AnnulusShape::new(idx.clone())?;
        let gamma = shape.gamma();
        let mut rest = BetaPoly::zero();
        for pp in enumerate_ps_nc(&shape) {
            if pp.part().block_count() == 1 && *pp.perm() == gamma {
                continue;
            }
            let mut term = BetaPoly::one();
            for sizes in cycle_sizes_by_block(&pp) {
                let kappa = table
                    .get(&sizes)
                    .ok_or_else(|| Error::Domain(format!("cumulant {sizes:?} needed before it is known")))?;
                term = &term * kappa;
            }
            rest = rest + term;
        }
        let kappa = moment_theorem1(&shape)? - rest;
        table.entries.insert(idx, kappa);
    }
    Ok(table)
}

/// The closed form for a cumulant with `u` arguments equal to 1 and `v` equal to 2:
/// `(-1)^{u/2} 2^{r-1} (u-1)!! (b_{2r} + Σ_{A_r} Π b)` with `r = u/2 + v`.
/// Odd `u` and `(u, v) = (2, 0)` give zero.
pub fn closed_form_cumulant(u: usize, v: usize) -> Result<BetaPoly> {
    if u + v == 0 {
        return Err(Error::InvalidArgument("at least one argument is required".into()));
    }
    if u % 2 == 1 || (u, v) == (2, 0) {
        return Ok(BetaPoly::zero());
    }
    let r = u / 2 + v;
    let double_factorial: i64 = (1..u as i64).step_by(2).product();
    let sign = if (u / 2).is_multiple_of(2) { 1 } else { -1 };
    let coef = BigRational::from_integer(BigInt::from(sign * double_factorial) * BigInt::from(2).pow(r as u32 - 1));
    Ok((BetaPoly::symbol(2 * r as u32) + obstruction_polynomial(r)?).scale(&coef))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_order_is_triangular() {
        let idx = sorted_indices(2, 3);
        assert_eq!(idx, vec![vec![1], vec![2], vec![3], vec![1, 1], vec![1, 2]]);
    }

    #[test]
    fn capability_limit() {
        assert!(matches!(free_cumulants(5, 10), Err(Error::Capability(_))));
    }

    #[test]
    fn closed_form_small_cases() {
        assert_eq!(closed_form_cumulant(0, 1).unwrap().to_string(), "b2");
        assert_eq!(closed_form_cumulant(2, 1).unwrap().to_string(), "-2*b4");
        assert_eq!(closed_form_cumulant(4, 0).unwrap().to_string(), "6*b4");
        assert!(closed_form_cumulant(2, 0).unwrap().is_zero());
    }
}
