//! Degrees: exact rationals in the unit interval, with the lattice
//! operations that make `[0, 1]` a lineale.
//!
//! The multiplication is binary `min` (so the monoid unit is 1) and the
//! residuum is the Gödel implication: `a ⇒ b` is 1 when `a ≤ b` and `b`
//! otherwise. Everything here is a comparison or a selection, so staying
//! exact costs nothing and keeps serialization round-trips and equality
//! tests deterministic.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DegreeError {
    #[error("degree {0} is outside [0, 1]")]
    OutOfRange(String),
    #[error("degree denominator must be positive")]
    ZeroDenominator,
    #[error("cannot parse degree from {0:?}")]
    Invalid(String),
}

/// An exact rational in `[0, 1]`, normalized to lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Degree(Ratio<u64>);

impl Degree {
    pub const fn zero() -> Self {
        Degree(Ratio::new_raw(0, 1))
    }

    pub const fn one() -> Self {
        Degree(Ratio::new_raw(1, 1))
    }

    /// Builds `numer/denom`, rejecting values outside the unit interval.
    pub fn new(numer: u64, denom: u64) -> Result<Self, DegreeError> {
        if denom == 0 {
            return Err(DegreeError::ZeroDenominator);
        }
        if numer > denom {
            return Err(DegreeError::OutOfRange(format!("{numer}/{denom}")));
        }
        Ok(Degree(Ratio::new(numer, denom)))
    }

    pub fn numer(&self) -> u64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> u64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// True when the degree is 0 or 1 (the crisp values).
    pub fn is_crisp(&self) -> bool {
        self.is_zero() || self.is_one()
    }

    /// Lineale multiplication: binary minimum.
    pub fn meet(self, other: Self) -> Self {
        self.min(other)
    }

    /// Binary maximum.
    pub fn join(self, other: Self) -> Self {
        self.max(other)
    }

    /// Gödel implication, the residuum of `meet`: the largest `c` with
    /// `meet(c, self) ≤ other`.
    pub fn implies(self, other: Self) -> Self {
        if self <= other {
            Degree::one()
        } else {
            other
        }
    }

    /// `1 - self`; used by the bit-stream demo to score similarity to 0.
    pub fn complement(self) -> Self {
        Degree(Ratio::one() - self.0)
    }
}

impl Default for Degree {
    fn default() -> Self {
        Degree::zero()
    }
}

/// Minimum of an iterator of degrees; empty input yields 1 (the empty meet).
pub fn meet_all<I: IntoIterator<Item = Degree>>(degrees: I) -> Degree {
    degrees.into_iter().fold(Degree::one(), Degree::meet)
}

/// Maximum of an iterator of degrees; empty input yields 0 (the empty join).
pub fn join_all<I: IntoIterator<Item = Degree>>(degrees: I) -> Degree {
    degrees.into_iter().fold(Degree::zero(), Degree::join)
}

impl fmt::Display for Degree {
    /// Prints the shortest exact decimal when one exists, else `numer/denom`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, d) = (self.numer(), self.denom());
        if d == 1 {
            return write!(f, "{n}");
        }
        // A reduced fraction has a terminating decimal iff d = 2^a * 5^b.
        let mut rest = d;
        let mut twos = 0u32;
        let mut fives = 0u32;
        while rest % 2 == 0 {
            rest /= 2;
            twos += 1;
        }
        while rest % 5 == 0 {
            rest /= 5;
            fives += 1;
        }
        if rest != 1 {
            return write!(f, "{n}/{d}");
        }
        let digits = twos.max(fives);
        let scale = 10u64.pow(digits) / d;
        write!(f, "0.{:0width$}", n * scale, width = digits as usize)
    }
}

impl FromStr for Degree {
    type Err = DegreeError;

    /// Accepts a fraction `a/b` or an exact decimal such as `0.25` or `1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(DegreeError::Invalid(s.to_string()));
        }
        if let Some((n, d)) = s.split_once('/') {
            let numer: u64 = n.trim().parse().map_err(|_| DegreeError::Invalid(s.to_string()))?;
            let denom: u64 = d.trim().parse().map_err(|_| DegreeError::Invalid(s.to_string()))?;
            return Degree::new(numer, denom);
        }
        let (int_part, frac_part) = match s.split_once('.') {
            Some((i, f)) => (i, f),
            None => (s, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(DegreeError::Invalid(s.to_string()));
        }
        if !int_part.chars().all(|c| c.is_ascii_digit()) || !frac_part.chars().all(|c| c.is_ascii_digit()) {
            return Err(DegreeError::Invalid(s.to_string()));
        }
        let int: u64 = if int_part.is_empty() {
            0
        } else {
            int_part.parse().map_err(|_| DegreeError::Invalid(s.to_string()))?
        };
        if frac_part.is_empty() {
            return Degree::new(int, 1);
        }
        if frac_part.len() > 18 {
            return Err(DegreeError::Invalid(s.to_string()));
        }
        let scale = 10u64.pow(frac_part.len() as u32);
        let frac: u64 = frac_part.parse().map_err(|_| DegreeError::Invalid(s.to_string()))?;
        let numer = int
            .checked_mul(scale)
            .and_then(|v| v.checked_add(frac))
            .ok_or_else(|| DegreeError::Invalid(s.to_string()))?;
        Degree::new(numer, scale)
    }
}

impl Serialize for Degree {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Degree {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
