use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand_distr::{Distribution, StandardNormal};
use num::complex::Complex64;

use crate::combinat::partitions;
use crate::error::{Error, Result};

/// Law of an off-diagonal entry. Every law here has a uniformly distributed
/// phase independent of the modulus, so only `E|x|^{2k}` matters.
#[derive(Clone, Copy, PartialEq, Debug)]
pub enum EntryLaw {
    /// Standard complex Gaussian, `E|x|^2 = 1` (the GUE).
    ComplexGaussian,
    /// `|x| = c`.
    FixedModulus { c: f64 },
    /// `|x| = c1` with probability `p`, otherwise `c2`.
    TwoPoint { c1: f64, c2: f64, p: f64 },
}

/// Largest order `n` for which `b_{2n}` is computed.
const MAX_BETA_ORDER: usize = 4;

impl EntryLaw {
    pub fn fixed_modulus(c: f64) -> Result<Self> {
        if !(c.is_finite() && c > 0.0) {
            return Err(Error::InvalidArgument(format!("modulus must be positive, got {c}")));
        }
        Ok(Self::FixedModulus { c })
    }

    pub fn two_point(c1: f64, c2: f64, p: f64) -> Result<Self> {
        if ![c1, c2].iter().all(|c| c.is_finite() && *c >= 0.0) || !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidArgument(format!("bad two-point law ({c1}, {c2}, {p})")));
        }
        if p * c1 * c1 + (1.0 - p) * c2 * c2 == 0.0 {
            return Err(Error::InvalidArgument("two-point law is identically zero".into()));
        }
        Ok(Self::TwoPoint { c1, c2, p })
    }

    /// `E|x|^{2k}`.
    pub fn modulus_moment(&self, k: usize) -> f64 {
        match *self {
            Self::ComplexGaussian => (1..=k).map(|i| i as f64).product(),
            Self::FixedModulus { c } => c.powi(2 * k as i32),
            Self::TwoPoint { c1, c2, p } => p * c1.powi(2 * k as i32) + (1.0 - p) * c2.powi(2 * k as i32),
        }
    }

    /// `b_{2n}`: the classical cumulant of `x, x̄, x, x̄, ...` (2n arguments).
    pub fn beta(&self, n: usize) -> Result<f64> {
        if n == 0 {
            return Err(Error::InvalidArgument("order must be positive".into()));
        }
        if n > MAX_BETA_ORDER {
            return Err(Error::Capability(format!("b{} is computed only up to b{}", 2 * n, 2 * MAX_BETA_ORDER)));
        }
        let mut total = 0.0;
        for pi in partitions(2 * n) {
            let k = pi.block_count();
            let mut term = if k % 2 == 1 { 1.0 } else { -1.0 } * (1..k).map(|i| i as f64).product::<f64>();
            for block in pi.blocks() {
                let xs = block.iter().filter(|&&j| j % 2 == 0).count();
                if 2 * xs != block.len() {
                    term = 0.0;
                    break;
                }
                term *= self.modulus_moment(xs);
            }
            total += term;
        }
        Ok(total)
    }

    /// `b2, b4, b6, b8` keyed by index.
    pub fn betas(&self) -> HashMap<u32, f64> {
        (1..=MAX_BETA_ORDER).map(|n| (2 * n as u32, self.beta(n).expect("order in range"))).collect()
    }

    /// One off-diagonal entry.
    pub fn draw<R: Rng + ?Sized>(&self, rng: &mut R) -> Complex64 {
        match *self {
            Self::ComplexGaussian => {
                let re: f64 = rng.sample(StandardNormal);
                let im: f64 = rng.sample(StandardNormal);
                Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
            }
            Self::FixedModulus { c } => Complex64::from_polar(c, uniform_phase(rng)),
            Self::TwoPoint { c1, c2, p } => {
                let c = if rng.gen::<f64>() < p { c1 } else { c2 };
                Complex64::from_polar(c, uniform_phase(rng))
            }
        }
    }

    /// One diagonal entry: real Gaussian with variance `b2`.
    pub fn draw_diagonal<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        let z: f64 = StandardNormal.sample(rng);
        z * self.modulus_moment(1).sqrt()
    }
}

fn uniform_phase<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    rng.gen::<f64>() * std::f64::consts::TAU
}

impl fmt::Display for EntryLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::ComplexGaussian => f.write_str("gue"),
            Self::FixedModulus { c } => write!(f, "fixed-modulus:{c}"),
            Self::TwoPoint { c1, c2, p } => write!(f, "two-point:{c1},{c2},{p}"),
        }
    }
}

impl FromStr for EntryLaw {
    type Err = Error;

    /// `gue`, `fixed-modulus:c` or `two-point:c1,c2,p`.
    fn from_str(s: &str) -> Result<Self> {
        let num = |t: &str| t.trim().parse::<f64>().map_err(|_| Error::Parse(format!("bad number {t:?} in law {s:?}")));
        match s.split_once(':') {
            None if s == "gue" || s == "complex-gaussian" => Ok(Self::ComplexGaussian),
            Some(("fixed-modulus", c)) => Self::fixed_modulus(num(c)?),
            Some(("two-point", rest)) => {
                let parts: Vec<&str> = rest.split(',').collect();
                let [c1, c2, p] = parts[..] else {
                    return Err(Error::Parse(format!("two-point law needs c1,c2,p: {s:?}")));
                };
                Self::two_point(num(c1)?, num(c2)?, num(p)?)
            }
            _ => Err(Error::Parse(format!("unknown law {s:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_cumulants_vanish_above_two() {
        let law = EntryLaw::ComplexGaussian;
        assert!((law.beta(1).unwrap() - 1.0).abs() < 1e-12);
        for n in 2..=4 {
            assert!(law.beta(n).unwrap().abs() < 1e-9, "n = {n}");
        }
    }

    #[test]
    fn unit_modulus_fourth_cumulant() {
        let law = EntryLaw::fixed_modulus(1.0).unwrap();
        assert!((law.beta(1).unwrap() - 1.0).abs() < 1e-12);
        assert!((law.beta(2).unwrap() + 1.0).abs() < 1e-12);
        assert!(matches!(law.beta(5), Err(Error::Capability(_))));
    }

    #[test]
    fn parsing() {
        assert_eq!("gue".parse::<EntryLaw>().unwrap(), EntryLaw::ComplexGaussian);
        assert_eq!("fixed-modulus:2".parse::<EntryLaw>().unwrap(), EntryLaw::FixedModulus { c: 2.0 });
        assert!("two-point:1,2".parse::<EntryLaw>().is_err());
        assert!("two-point:1,2,1.5".parse::<EntryLaw>().is_err());
        assert!("cauchy".parse::<EntryLaw>().is_err());
    }
}
