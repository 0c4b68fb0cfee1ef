use nalgebra::DMatrix;
use num::complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::EntryLaw;
use crate::error::{Error, Result};

/// A Hermitian matrix `X = W / √N`.
#[derive(Clone, Debug)]
pub struct WignerSample {
    matrix: DMatrix<Complex64>,
}

impl WignerSample {
    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }
}

/// Draws one matrix: i.i.d. entries above the diagonal, real Gaussian
/// diagonal with variance `b2`, everything scaled by `1/√N`.
pub fn sample(law: &EntryLaw, n: usize, seed: u64) -> Result<WignerSample> {
    if n == 0 {
        return Err(Error::InvalidArgument("dimension must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let scale = 1.0 / (n as f64).sqrt();
    let mut matrix = DMatrix::zeros(n, n);
    for i in 0..n {
        matrix[(i, i)] = Complex64::new(law.draw_diagonal(&mut rng) * scale, 0.0);
        for j in i + 1..n {
            let x = law.draw(&mut rng) * scale;
            matrix[(i, j)] = x;
            matrix[(j, i)] = x.conj();
        }
    }
    Ok(WignerSample { matrix })
}

/// `Tr X^k` for `k = 1..=max_power`, using `Tr X^{a+b} = Σ (X^a)_{ij} conj((X^b)_{ij})`
/// so only powers up to `⌈max_power/2⌉` are formed.
pub fn trace_powers(x: &WignerSample, max_power: usize) -> Vec<f64> {
    let half = max_power.div_ceil(2).max(1);
    let mut powers = vec![x.matrix.clone()];
    if half >= 2 {
        powers.push(hermitian_square(&x.matrix));
    }
    for _ in 2..half {
        let next = powers.last().expect("nonempty") * &x.matrix;
        powers.push(next);
    }
    (1..=max_power)
        .map(|k| {
            if k <= half {
                powers[k - 1].trace().re
            } else {
                let (a, b) = (&powers[half - 1], &powers[k - half - 1]);
                a.iter().zip(b.iter()).map(|(p, q)| (p * q.conj()).re).sum()
            }
        })
        .collect()
}

/// `A²` for Hermitian `A`, filling the upper triangle from column inner
/// products and mirroring it.
fn hermitian_square(a: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let n = a.nrows();
    let mut out = DMatrix::zeros(n, n);
    for j in 0..n {
        for i in 0..=j {
            // (A²)_{ij} = Σ_k A_ik A_kj = Σ_k conj(A_ki) A_kj
            let v = a.column(i).dotc(&a.column(j));
            out[(i, j)] = v;
            out[(j, i)] = v.conj();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sample_is_hermitian_and_reproducible() {
        let a = sample(&EntryLaw::ComplexGaussian, 6, 7).unwrap();
        let b = sample(&EntryLaw::ComplexGaussian, 6, 7).unwrap();
        assert_eq!(a.matrix(), b.matrix());
        assert_eq!(a.matrix(), &a.matrix().adjoint());
        assert!(sample(&EntryLaw::ComplexGaussian, 0, 1).is_err());
    }

    #[test]
    fn traces_match_direct_powers() {
        let x = sample(&EntryLaw::fixed_modulus(1.0).unwrap(), 5, 3).unwrap();
        let got = trace_powers(&x, 5);
        let mut p = x.matrix().clone();
        for (k, t) in got.iter().enumerate() {
            assert!((p.trace().re - t).abs() < 1e-9, "k = {}", k + 1);
            p = &p * x.matrix();
        }
    }
}
