use rayon::prelude::*;

use super::{sample, trace_powers, EntryLaw};
use crate::combinat::partitions;
use crate::error::{Error, Result};

/// A Monte Carlo estimate of `N^{r-2} k_r(Tr X^{m1}, ..., Tr X^{mr})`.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct Fluctuation {
    pub estimate: f64,
    /// Standard error from the spread of per-batch estimates.
    pub stderr: f64,
    pub samples: usize,
    pub batches: usize,
}

/// Plug-in joint cumulant of the columns of `rows` (one row per draw).
///
/// For two or more variables the columns are centred first; cumulants of
/// order at least two do not see the shift, and partitions with a singleton
/// block then drop out.
pub fn joint_cumulant(rows: &[Vec<f64>]) -> Result<f64> {
    let Some(first) = rows.first() else {
        return Err(Error::InvalidArgument("no samples".into()));
    };
    let r = first.len();
    if r == 0 || rows.iter().any(|row| row.len() != r) {
        return Err(Error::InvalidArgument("rows must share a positive length".into()));
    }
    let count = rows.len() as f64;
    let means: Vec<f64> = (0..r).map(|i| rows.iter().map(|row| row[i]).sum::<f64>() / count).collect();
    if r == 1 {
        return Ok(means[0]);
    }
    let centred: Vec<Vec<f64>> = rows.iter().map(|row| row.iter().zip(&means).map(|(x, m)| x - m).collect()).collect();
    let mixed = |block: &[usize]| centred.iter().map(|row| block.iter().map(|&i| row[i]).product::<f64>()).sum::<f64>() / count;
    let mut total = 0.0;
    for pi in partitions(r) {
        if pi.blocks().iter().any(|b| b.len() == 1) {
            continue;
        }
        let k = pi.block_count();
        let mobius = if k % 2 == 1 { 1.0 } else { -1.0 } * (1..k).map(|i| i as f64).product::<f64>();
        total += mobius * pi.blocks().iter().map(|b| mixed(b)).product::<f64>();
    }
    Ok(total)
}

/// Derives the seed of draw `index` from the run seed (SplitMix64 finalizer).
fn draw_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Estimates `N^{r-2} k_r(Tr X^{m1}, ..., Tr X^{mr})` from `samples` seeded draws.
///
/// The error bar splits the draws into `⌊√samples⌋` contiguous batches and
/// reports the standard deviation of the batch estimates over `√batches`.
pub fn empirical_fluctuation(law: &EntryLaw, n: usize, orders: &[usize], samples: usize, seed: u64) -> Result<Fluctuation> {
    if orders.is_empty() || orders.contains(&0) {
        return Err(Error::InvalidArgument("orders must be nonempty and positive".into()));
    }
    let batches = (samples as f64).sqrt().floor() as usize;
    if batches < 2 || samples < 10 * batches {
        return Err(Error::InvalidArgument(format!("{samples} samples are too few for batched error bars")));
    }
    let max_power = *orders.iter().max().expect("nonempty");
    let rows: Vec<Vec<f64>> = (0..samples as u64)
        .into_par_iter()
        .map(|i| {
            let x = sample(law, n, draw_seed(seed, i))?;
            let traces = trace_powers(&x, max_power);
            Ok(orders.iter().map(|&k| traces[k - 1]).collect())
        })
        .collect::<Result<_>>()?;
    let scale = (n as f64).powi(orders.len() as i32 - 2);
    let estimate = scale * joint_cumulant(&rows)?;
    let size = samples / batches;
    let per_batch: Vec<f64> = (0..batches)
        .map(|b| {
            let end = if b + 1 == batches { samples } else { (b + 1) * size };
            joint_cumulant(&rows[b * size..end]).map(|k| scale * k)
        })
        .collect::<Result<_>>()?;
    let mean = per_batch.iter().sum::<f64>() / batches as f64;
    let var = per_batch.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (batches - 1) as f64;
    Ok(Fluctuation { estimate, stderr: (var / batches as f64).sqrt(), samples, batches })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cumulants_of_a_small_table() {
        let rows = vec![vec![1.0, 2.0], vec![3.0, 6.0], vec![5.0, 4.0]];
        // mean of the first column
        assert_eq!(joint_cumulant(&rows.iter().map(|r| vec![r[0]]).collect::<Vec<_>>()).unwrap(), 3.0);
        // plug-in covariance: ((-2)(-2) + 0*2 + 2*0) / 3
        assert!((joint_cumulant(&rows).unwrap() - 4.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn too_few_samples() {
        assert!(empirical_fluctuation(&EntryLaw::ComplexGaussian, 4, &[2], 50, 1).is_err());
        assert!(empirical_fluctuation(&EntryLaw::ComplexGaussian, 4, &[], 1000, 1).is_err());
    }

    #[test]
    fn same_seed_same_estimate() {
        let a = empirical_fluctuation(&EntryLaw::ComplexGaussian, 4, &[2, 2], 400, 9).unwrap();
        let b = empirical_fluctuation(&EntryLaw::ComplexGaussian, 4, &[2, 2], 400, 9).unwrap();
        assert_eq!(a, b);
    }
}
