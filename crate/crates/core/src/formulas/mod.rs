//! Exact formulas for the limiting higher-order moments `α_{m1..mr}`.
//!
//! * [`moment_theorem1`] sums pseudo-cumulants over loop-free non-crossing
//!   partitioned pairings;
//! * [`moment_oracle`] sums the surviving terms of the genus expansion by
//!   brute force and serves as an independent check;
//! * [`finite_n_expansion`] keeps every term at a fixed matrix size `N`;
//! * [`free_cumulants`] inverts the moment–cumulant relation over
//!   non-crossing partitioned permutations.

mod cumulants;
mod oracle;

pub use cumulants::{closed_form_cumulant, free_cumulants, moment_from_cumulants, CumulantTable, MAX_CUMULANT_ORDER};
pub use oracle::{finite_n_expansion, k_tau_pi, moment_oracle, DEFAULT_ORACLE_BOUND};

use num::BigRational;

use crate::annular::AnnulusShape;
use crate::error::{Error, Result};
use crate::graph::{obstruction_set, MAX_OBSTRUCTION_ORDER};
use crate::partitioned::{enumerate_ps_nc2_loop_free, is_loop_free, is_nc_partitioned, related_blocks, PartitionedPermutation};
use crate::poly::BetaPoly;

/// `Σ_{τ ∈ A_n} Π_{D ∈ τ} b_{|D|}` over the obstruction set of order `n`.
pub fn obstruction_polynomial(n: usize) -> Result<BetaPoly> {
    Ok(obstruction_set(n)?
        .iter()
        .map(|t| BetaPoly::monomial(t.blocks().iter().map(|b| b.len() as u32).collect()))
        .sum())
}

/// The pseudo-cumulant of a loop-free non-crossing partitioned pairing: a
/// product over blocks `B` with `r` pairs of `2^{r-1} (b_{2r} + [B unrelated] Σ_{A_r})`.
pub fn pseudo_cumulant(pp: &PartitionedPermutation, shape: &AnnulusShape) -> Result<BetaPoly> {
    if !pp.perm().is_pairing() || !is_nc_partitioned(pp, shape)? || !is_loop_free(pp, shape)? {
        return Err(Error::Domain(format!("{pp} is not a loop-free non-crossing partitioned pairing")));
    }
    pseudo_cumulant_unchecked(pp, shape)
}

fn pseudo_cumulant_unchecked(pp: &PartitionedPermutation, shape: &AnnulusShape) -> Result<BetaPoly> {
    let mut related = None;
    let mut value = BetaPoly::one();
    for (b, cycles) in pp.cycles_by_block().iter().enumerate() {
        let r = cycles.len();
        let mut factor = BetaPoly::symbol(2 * r as u32);
        // obstruction sets of order <= 3 are empty
        if r >= 4 {
            let related = match &related {
                Some(rel) => rel,
                None => related.insert(related_blocks(pp, shape)?),
            };
            if related[b].is_empty() {
                if r > MAX_OBSTRUCTION_ORDER {
                    return Err(Error::Capability(format!("block with {r} pairs needs an obstruction set beyond order {MAX_OBSTRUCTION_ORDER}")));
                }
                factor = factor + obstruction_polynomial(r)?;
            }
        }
        value = &value * &factor.scale(&BigRational::from_integer(num::BigInt::from(2).pow(r as u32 - 1)));
    }
    Ok(value)
}

/// `α` as the sum of pseudo-cumulants over loop-free non-crossing partitioned pairings.
pub fn moment_theorem1(shape: &AnnulusShape) -> Result<BetaPoly> {
    let mut total = BetaPoly::zero();
    for pp in enumerate_ps_nc2_loop_free(shape) {
        total = total + pseudo_cumulant_unchecked(&pp, shape)?;
    }
    Ok(total)
}
