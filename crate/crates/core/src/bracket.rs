use std::fmt;

use crate::error::{Error, Result};

/// Tolerance used to recognise the equality orders (ν = 1/2, ν = −1/2).
pub const EQUALITY_EPS: f64 = 1e-12;

/// Half-line of admissible orders.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NuRange {
    /// ν ≥ a
    AtLeast(f64),
    /// ν > a
    Above(f64),
}

impl NuRange {
    pub fn contains(&self, nu: f64) -> bool {
        match *self {
            NuRange::AtLeast(a) => nu >= a,
            NuRange::Above(a) => nu > a,
        }
    }

    pub fn endpoint(&self) -> f64 {
        match *self {
            NuRange::AtLeast(a) | NuRange::Above(a) => a,
        }
    }
}

impl fmt::Display for NuRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NuRange::AtLeast(a) => write!(f, "nu >= {a}"),
            NuRange::Above(a) => write!(f, "nu > {a}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Strictness {
    Strict,
    /// The inequality is an identity at this order and strict elsewhere.
    EqualityAt(f64),
}

impl Strictness {
    pub fn is_equality(&self, nu: f64) -> bool {
        matches!(*self, Strictness::EqualityAt(e) if (nu - e).abs() <= EQUALITY_EPS)
    }
}

/// A lower/upper pair around an exact quantity. Invalid sides still carry
/// the formula value (useful for tables) but make no claim.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub lower: f64,
    pub upper: f64,
    pub lower_valid: bool,
    pub upper_valid: bool,
    pub lower_id: &'static str,
    pub upper_id: &'static str,
}

impl Bracket {
    pub fn new(
        (lower_id, lower, lower_valid): (&'static str, f64, bool),
        (upper_id, upper, upper_valid): (&'static str, f64, bool),
    ) -> Self {
        Self { lower, upper, lower_valid, upper_valid, lower_id, upper_id }
    }

    /// Fails when both sides are valid and out of order.
    pub fn check(&self) -> Result<()> {
        if self.lower_valid && self.upper_valid && self.lower > self.upper {
            return Err(Error::InvalidBracket { lower: self.lower, upper: self.upper });
        }
        Ok(())
    }

    pub fn width(&self) -> Option<f64> {
        (self.lower_valid && self.upper_valid).then_some(self.upper - self.lower)
    }

    /// Whether `value` is consistent with every valid side.
    pub fn contains(&self, value: f64) -> bool {
        (!self.lower_valid || self.lower <= value) && (!self.upper_valid || value <= self.upper)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert!(NuRange::AtLeast(0.5).contains(0.5));
        assert!(!NuRange::Above(0.5).contains(0.5));
        assert!(NuRange::Above(-1.5).contains(-1.4));
    }

    #[test]
    fn bracket_checks() {
        let b = Bracket::new(("lo", 1.0, true), ("hi", 0.5, true));
        assert!(matches!(b.check(), Err(Error::InvalidBracket { .. })));
        let b = Bracket::new(("lo", 1.0, true), ("hi", 0.5, false));
        assert!(b.check().is_ok());
        assert!(b.contains(2.0));
        assert_eq!(b.width(), None);
    }

    #[test]
    fn equality_detection() {
        let s = Strictness::EqualityAt(0.5);
        assert!(s.is_equality(0.5));
        assert!(!s.is_equality(0.51));
        assert!(!Strictness::Strict.is_equality(0.5));
    }
}
