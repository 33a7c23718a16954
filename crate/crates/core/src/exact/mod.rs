//! Exact scalar, polynomial and linear-algebra substrate.
//!
//! Everything here works over the rationals with arbitrary-precision
//! integers; no floating point value is produced anywhere in the crate.

mod matrix;
mod poly;
mod subspace;

pub use matrix::Matrix;
pub use poly::Poly;
pub use subspace::Subspace;

use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact rational scalar, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::ParseRational(s.to_string());
    match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(t.parse().map_err(|_| bad())?)),
    }
}

/// `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Applies the sign `(-1)^odd` to a scalar.
pub fn signed(odd: bool, r: Rational) -> Rational {
    if odd {
        -r
    } else {
        r
    }
}

pub fn sign(odd: bool) -> Rational {
    signed(odd, Rational::one())
}

pub fn is_integer_valued(r: &Rational) -> bool {
    r.denom().is_one()
}

pub fn abs(r: &Rational) -> Rational {
    r.abs()
}

/// Z₂ grade of a homogeneous element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Parity {
    #[default]
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(bit: u8) -> Result<Self> {
        match bit {
            0 => Ok(Parity::Even),
            1 => Ok(Parity::Odd),
            b => Err(Error::InvalidBasis(format!("grade must be 0 or 1, got {b}"))),
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// True when the Koszul sign `(-1)^{σ(a)σ(b)}` is negative.
    pub fn both_odd(self, other: Parity) -> bool {
        self.is_odd() && other.is_odd()
    }

    /// `(-1)^{σ(a)σ(b)}`.
    pub fn koszul(self, other: Parity) -> Rational {
        sign(self.both_odd(other))
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bit())
    }
}

impl Serialize for Parity {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u8(self.bit())
    }
}

impl<'de> Deserialize<'de> for Parity {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let bit = u8::deserialize(d)?;
        Parity::from_bit(bit).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter writing a [`Rational`] as its `"p/q"` string.
pub mod rational_str {
    use super::{format_rational, parse_rational, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let raw = RawScalar::deserialize(d)?;
        raw.into_rational().map_err(serde::de::Error::custom)
    }

    /// Accepts `"3/4"` as well as bare JSON integers.
    #[derive(Deserialize)]
    #[serde(untagged)]
    pub(crate) enum RawScalar {
        Text(String),
        Int(i64),
    }

    impl RawScalar {
        pub(crate) fn into_rational(self) -> crate::error::Result<Rational> {
            match self {
                RawScalar::Text(t) => parse_rational(&t),
                RawScalar::Int(i) => Ok(super::int(i)),
            }
        }
    }
}

/// Dense vector helpers.
pub mod vector {
    use super::Rational;
    use num_traits::Zero;

    pub fn zeros(n: usize) -> Vec<Rational> {
        vec![Rational::zero(); n]
    }

    pub fn unit(n: usize, i: usize) -> Vec<Rational> {
        let mut v = zeros(n);
        v[i] = super::int(1);
        v
    }

    pub fn is_zero(v: &[Rational]) -> bool {
        v.iter().all(Zero::is_zero)
    }

    pub fn add_scaled(acc: &mut [Rational], c: &Rational, v: &[Rational]) {
        if c.is_zero() {
            return;
        }
        for (a, b) in acc.iter_mut().zip(v) {
            if !b.is_zero() {
                *a += c * b;
            }
        }
    }

    pub fn scale(c: &Rational, v: &[Rational]) -> Vec<Rational> {
        v.iter().map(|x| c * x).collect()
    }

    pub fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }
}
