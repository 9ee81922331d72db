use alloc::string::ToString;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{rat, Rational};

/// ℕ, ℤ, ℚ and the quotients ℕ/(2=1), ℕ/(2=3), ℕ/(2=0).
///
/// Quotients are represented on the canonical carriers {0,1}, {0,1,2}
/// (2 standing for "at least 2") and {0,1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Semiring {
    Nat,
    Int,
    Bool,
    Sat2,
    F2,
    Rational,
}

impl Semiring {
    pub const ALL: [Semiring; 6] = [
        Semiring::Nat,
        Semiring::Int,
        Semiring::Bool,
        Semiring::Sat2,
        Semiring::F2,
        Semiring::Rational,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Semiring::Nat => "nat",
            Semiring::Int => "int",
            Semiring::Bool => "bool",
            Semiring::Sat2 => "sat2",
            Semiring::F2 => "f2",
            Semiring::Rational => "rational",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|s| s.name() == name)
    }

    /// Maps a number onto the carrier. Integers are required except in ℚ,
    /// and negative numbers are only allowed in ℤ, ℚ and 𝔽₂.
    pub fn normalize(self, q: &Rational) -> Result<Rational> {
        if self == Semiring::Rational {
            return Ok(q.clone());
        }
        let bad = || Error::NotInSemiring(q.to_string(), self.name());
        if !q.is_integer() {
            return Err(bad());
        }
        match self {
            Semiring::Int => Ok(q.clone()),
            Semiring::F2 => Ok(Rational::from_integer(q.to_integer().mod_floor(&2.into()))),
            _ if q.is_negative() => Err(bad()),
            Semiring::Nat => Ok(q.clone()),
            Semiring::Bool => Ok(if q.is_zero() { rat(0) } else { rat(1) }),
            Semiring::Sat2 => Ok(if q > &rat(2) { rat(2) } else { q.clone() }),
            Semiring::Rational => unreachable!(),
        }
    }

    pub fn zero(self) -> Rational {
        Rational::zero()
    }

    pub fn one(self) -> Rational {
        Rational::one()
    }

    /// Addition on canonical elements. The quotients are quotients of ℕ, so
    /// computing in ℚ and normalizing agrees with the quotient operation.
    pub fn add(self, a: &Rational, b: &Rational) -> Rational {
        self.normalize(&(a + b)).expect("closed under addition")
    }

    pub fn mul(self, a: &Rational, b: &Rational) -> Rational {
        self.normalize(&(a * b)).expect("closed under multiplication")
    }
}
