//! Coefficient fields for homology and Betti number computations.
//!
//! Betti numbers of a Stanley–Reisner ring can depend on the characteristic,
//! so the field is an explicit, user-visible parameter everywhere. The
//! default is GF(2); the rationals use fraction-free integer elimination.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Field {
    /// Exact rational arithmetic (characteristic 0).
    Rational,
    /// The prime field GF(p).
    Prime(u64),
}

impl Field {
    pub const GF2: Field = Field::Prime(2);

    /// Constructs GF(p), rejecting composite or unit moduli.
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::precondition(format!("{p} is not prime")))
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }
}

impl Default for Field {
    fn default() -> Self {
        Field::GF2
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// `"0"` selects the rationals; any other integer must be prime.
    fn from_str(s: &str) -> Result<Self> {
        let n: u64 = s
            .trim()
            .parse()
            .map_err(|_| Error::parse(format!("invalid field characteristic: {s:?}")))?;
        if n == 0 {
            Ok(Field::Rational)
        } else {
            Field::prime(n)
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_validation() {
        assert!(Field::prime(2).is_ok());
        assert!(Field::prime(97).is_ok());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(91).is_err());
    }

    #[test]
    fn parsing() {
        assert_eq!("0".parse::<Field>().unwrap(), Field::Rational);
        assert_eq!("2".parse::<Field>().unwrap(), Field::GF2);
        assert!("6".parse::<Field>().is_err());
        assert!("x".parse::<Field>().is_err());
    }
}
