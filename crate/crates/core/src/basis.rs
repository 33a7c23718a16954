use std::collections::HashSet;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Parity, Rational};

/// Named basis of a Z₂-graded space, each element carrying its grade.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedBasis {
    names: Vec<String>,
    parities: Vec<Parity>,
}

impl GradedBasis {
    pub fn new(names: Vec<String>, parities: Vec<Parity>) -> Result<Self> {
        if names.len() != parities.len() {
            return Err(Error::InvalidBasis(format!(
                "{} names but {} grades",
                names.len(),
                parities.len()
            )));
        }
        let mut seen = HashSet::new();
        for n in &names {
            if !seen.insert(n.as_str()) {
                return Err(Error::InvalidBasis(format!("duplicate basis name {n:?}")));
            }
        }
        Ok(GradedBasis { names, parities })
    }

    /// All-even basis with the given names.
    pub fn even<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let parities = vec![Parity::Even; names.len()];
        GradedBasis::new(names, parities).expect("distinct names")
    }

    /// Basis `e1, …, en` with the given grades.
    pub fn numbered(parities: Vec<Parity>) -> Self {
        let names = (1..=parities.len()).map(|i| format!("e{i}")).collect();
        GradedBasis { names, parities }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn is_all_even(&self) -> bool {
        self.parities.iter().all(|p| *p == Parity::Even)
    }

    /// dim V₀ − dim V₁.
    pub fn super_dimension(&self) -> i64 {
        self.parities
            .iter()
            .map(|p| if p.is_odd() { -1 } else { 1 })
            .sum()
    }

    /// Grade of `v` if it is homogeneous; the zero vector counts as even.
    pub fn vector_parity(&self, v: &[Rational]) -> Option<Parity> {
        let mut found: Option<Parity> = None;
        for (c, p) in v.iter().zip(&self.parities) {
            if c.is_zero() {
                continue;
            }
            match found {
                None => found = Some(*p),
                Some(q) if q != *p => return None,
                _ => {}
            }
        }
        Some(found.unwrap_or(Parity::Even))
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                dim: self.len(),
            })
        }
    }

    /// Concatenation; names of the second summand get `suffix` appended
    /// when they would collide.
    pub fn direct_sum(&self, other: &GradedBasis, suffix: &str) -> GradedBasis {
        let mut names = self.names.clone();
        for n in &other.names {
            let mut candidate = n.clone();
            while names.contains(&candidate) {
                candidate.push_str(suffix);
            }
            names.push(candidate);
        }
        let mut parities = self.parities.clone();
        parities.extend_from_slice(&other.parities);
        GradedBasis { names, parities }
    }
}

/// A sign ±1, used for the triple-system parameters δ and ε.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_int(v: i64) -> Result<Self> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(Error::Format(format!("sign must be +1 or -1, got {v}"))),
        }
    }

    pub fn as_int(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }

    pub fn to_rational(self) -> Rational {
        crate::exact::int(self.as_int())
    }

    /// True when `self · (-1)^{odd}` is negative.
    pub fn negative_with(self, odd: bool) -> bool {
        self.is_minus() != odd
    }
}

impl std::ops::Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_int())
    }
}

impl Serialize for Sign {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i64(self.as_int())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Sign::from_int(i64::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}
