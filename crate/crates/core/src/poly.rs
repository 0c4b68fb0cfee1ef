//! Polynomials with rational coefficients in the symbols `b2, b4, b6, ...`.
//!
//! `bK` is the balanced classical cumulant of order `K` of an off-diagonal
//! entry. A monomial is the sorted multiset of its indices.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Sorted, non-decreasing list of symbol indices; empty means the constant 1.
pub type Monomial = Vec<u32>;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BetaPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl BetaPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(Vec::new(), c)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(c.into()))
    }

    /// The symbol `b{index}`.
    pub fn symbol(index: u32) -> Self {
        Self::monomial(vec![index])
    }

    pub fn monomial(mut mono: Monomial) -> Self {
        mono.sort_unstable();
        Self::term(mono, BigRational::one())
    }

    pub fn term(mut mono: Monomial, c: BigRational) -> Self {
        mono.sort_unstable();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        Self { terms }
    }

    /// Sums integer-weighted monomials.
    pub fn from_counts<'a>(counts: impl IntoIterator<Item = (&'a Monomial, &'a i64)>) -> Self {
        let mut p = Self::zero();
        for (mono, &c) in counts {
            p.add_term(mono.clone(), BigRational::from_integer(c.into()));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &[u32]) -> BigRational {
        let mut key = mono.to_vec();
        key.sort_unstable();
        self.terms.get(&key).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, mono: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&BigRational::from_integer(c.into()))
    }

    /// Evaluates with `values[k]` standing for `bk`; missing symbols are an error.
    pub fn evaluate(&self, values: &HashMap<u32, f64>) -> Result<f64> {
        let mut total = 0.0;
        for (mono, c) in &self.terms {
            let mut v = c.to_f64().unwrap_or(f64::NAN);
            for k in mono {
                v *= values.get(k).ok_or(Error::UnboundSymbol(*k))?;
            }
            total += v;
        }
        Ok(total)
    }

    /// Exact evaluation with rational values.
    pub fn evaluate_exact(&self, values: &HashMap<u32, BigRational>) -> Result<BigRational> {
        let mut total = BigRational::zero();
        for (mono, c) in &self.terms {
            let mut v = c.clone();
            for k in mono {
                v *= values.get(k).ok_or(Error::UnboundSymbol(*k))?;
            }
            total += v;
        }
        Ok(total)
    }

    /// Value under `b2 = 1` and every other symbol zero.
    pub fn gue_specialize(&self) -> BigRational {
        self.terms
            .iter()
            .filter(|(m, _)| m.iter().all(|&k| k == 2))
            .map(|(_, c)| c.clone())
            .fold(BigRational::zero(), |a, b| a + b)
    }

    /// Terms in display order: by degree, then by indices.
    fn ordered_terms(&self) -> Vec<(&Monomial, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| (a.0.len(), a.0).cmp(&(b.0.len(), b.0)));
        v
    }
}

fn format_monomial(mono: &[u32]) -> String {
    let mut parts = Vec::new();
    let mut i = 0;
    while i < mono.len() {
        let k = mono[i];
        let run = mono[i..].iter().take_while(|&&x| x == k).count();
        parts.push(if run == 1 { format!("b{k}") } else { format!("b{k}^{run}") });
        i += run;
    }
    parts.join("*")
}

impl fmt::Display for BetaPoly {
    /// Canonical text such as `8*b8 + 24*b4^2`; the zero polynomial prints `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (mono, c)) in self.ordered_terms().into_iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = c.abs();
            if mono.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                f.write_str(&format_monomial(mono))?;
            } else {
                write!(f, "{magnitude}*{}", format_monomial(mono))?;
            }
        }
        Ok(())
    }
}

impl FromStr for BetaPoly {
    type Err = Error;

    /// Parses the canonical text form (and any reordering of it).
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut poly = Self::zero();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for i in 1..=bytes.len() {
            if i == bytes.len() || bytes[i] == b'+' || bytes[i] == b'-' {
                poly = poly + parse_term(&compact[start..i])?;
                start = i;
            }
        }
        Ok(poly)
    }
}

fn parse_term(term: &str) -> Result<BetaPoly> {
    let bad = || Error::Parse(format!("bad term {term:?}"));
    let (sign, body) = match term.as_bytes().first() {
        Some(b'-') => (-1, &term[1..]),
        Some(b'+') => (1, &term[1..]),
        _ => (1, term),
    };
    if body.is_empty() {
        return Err(bad());
    }
    let mut coef = BigRational::from_integer(sign.into());
    let mut mono = Vec::new();
    for factor in body.split('*') {
        if let Some(sym) = factor.strip_prefix('b') {
            let (k, e) = match sym.split_once('^') {
                Some((k, e)) => (k, e.parse::<usize>().map_err(|_| bad())?),
                None => (sym, 1),
            };
            let k: u32 = k.parse().map_err(|_| bad())?;
            mono.extend(std::iter::repeat_n(k, e));
        } else {
            let c = match factor.split_once('/') {
                Some((n, d)) => {
                    let d: BigInt = d.parse().map_err(|_| bad())?;
                    if d.is_zero() {
                        return Err(bad());
                    }
                    BigRational::new(n.parse().map_err(|_| bad())?, d)
                }
                None => BigRational::from_integer(factor.parse().map_err(|_| bad())?),
            };
            coef *= c;
        }
    }
    Ok(BetaPoly::term(mono, coef))
}

impl Add for BetaPoly {
    type Output = BetaPoly;
    fn add(mut self, rhs: BetaPoly) -> BetaPoly {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Add<&BetaPoly> for &BetaPoly {
    type Output = BetaPoly;
    fn add(self, rhs: &BetaPoly) -> BetaPoly {
        self.clone() + rhs.clone()
    }
}

impl Neg for BetaPoly {
    type Output = BetaPoly;
    fn neg(self) -> BetaPoly {
        self.scale_int(-1)
    }
}

impl Sub for BetaPoly {
    type Output = BetaPoly;
    fn sub(self, rhs: BetaPoly) -> BetaPoly {
        self + (-rhs)
    }
}

impl Mul<&BetaPoly> for &BetaPoly {
    type Output = BetaPoly;
    fn mul(self, rhs: &BetaPoly) -> BetaPoly {
        let mut out = BetaPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let mut m: Monomial = m1.iter().chain(m2).copied().collect();
                m.sort_unstable();
                out.add_term(m, c1 * c2);
            }
        }
        out
    }
}

impl Mul for BetaPoly {
    type Output = BetaPoly;
    fn mul(self, rhs: BetaPoly) -> BetaPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for BetaPoly {
    fn sum<I: Iterator<Item = BetaPoly>>(iter: I) -> BetaPoly {
        iter.fold(BetaPoly::zero(), |a, b| a + b)
    }
}

impl Serialize for BetaPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for BetaPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
