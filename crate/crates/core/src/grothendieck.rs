//! Classes in the polynomial ring `Z[L]`, where `L` is the class of the affine
//! line.
//!
//! Every variety handled by this crate is paved by affine cells, so its class is
//! a polynomial in `L` with nonnegative integer coefficients. Specializing `L`
//! to a prime power `t` gives the number of points over `F_t`; the coefficients
//! are the even Betti numbers.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassError {
    #[error("coefficient of L^{degree} is negative ({value}); not the class of a cell decomposition")]
    NegativeCoefficient { degree: usize, value: BigInt },
}

/// An element of `Z[L]`. Coefficient `i` multiplies `L^i`; trailing zeros are
/// never stored, so the zero class has no coefficients at all.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MotiveClass {
    coeffs: Vec<BigInt>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Add,
    Mul,
}

impl MotiveClass {
    pub fn from_coeffs<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut c = MotiveClass {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        c.trim();
        c
    }

    pub fn zero() -> Self {
        MotiveClass { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_coeffs([1])
    }

    /// The Lefschetz class `L`.
    pub fn lefschetz() -> Self {
        Self::from_coeffs([0, 1])
    }

    /// `1 + L`, the class of a projective line.
    pub fn projective_line() -> Self {
        Self::from_coeffs([1, 1])
    }

    /// `1 + L + ... + L^(k-1)`, the class of `P^(k-1)`.
    pub fn projective_space(k: usize) -> Self {
        Self::from_coeffs(std::iter::repeat_n(1, k))
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `L`; `None` for the zero class.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Exact evaluation at `L = t`. At `t = 1` this is the Euler characteristic.
    pub fn specialize(&self, t: u64) -> BigInt {
        let t = BigInt::from(t);
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * &t + c)
    }

    pub fn euler_characteristic(&self) -> BigInt {
        self.specialize(1)
    }

    /// Betti numbers `b_0, b_1, ..., b_{2d}`: `b_{2i}` is the coefficient of
    /// `L^i` and odd Betti numbers vanish.
    pub fn poincare(&self) -> Result<Vec<BigInt>, ClassError> {
        if let Some((degree, value)) = self
            .coeffs
            .iter()
            .enumerate()
            .find(|(_, c)| c.is_negative())
        {
            return Err(ClassError::NegativeCoefficient {
                degree,
                value: value.clone(),
            });
        }
        let mut betti = Vec::with_capacity(2 * self.coeffs.len());
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                betti.push(BigInt::zero());
            }
            betti.push(c.clone());
        }
        Ok(betti)
    }

    /// Renders the class with `var` as the indeterminate, e.g. `1 + 2*t + t^2`.
    pub fn render_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let abs = c.abs();
            let monomial = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if i == 0 {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&monomial);
            } else {
                out.push_str(&format!("{abs}*{monomial}"));
            }
        }
        out
    }
}

pub fn combine(a: &MotiveClass, b: &MotiveClass, op: Op) -> MotiveClass {
    match op {
        Op::Add => a + b,
        Op::Mul => a * b,
    }
}

/// Class of the variety of complete flags in an `m`-dimensional space:
/// `prod_{k=1..m} (1 + L + ... + L^(k-1))`.
pub fn flag_class(m: usize) -> MotiveClass {
    (1..=m).fold(MotiveClass::one(), |acc, k| {
        &acc * &MotiveClass::projective_space(k)
    })
}

impl Add for &MotiveClass {
    type Output = MotiveClass;

    fn add(self, rhs: &MotiveClass) -> MotiveClass {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        MotiveClass::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)))
    }
}

impl Add for MotiveClass {
    type Output = MotiveClass;

    fn add(self, rhs: MotiveClass) -> MotiveClass {
        &self + &rhs
    }
}

impl Mul for &MotiveClass {
    type Output = MotiveClass;

    fn mul(self, rhs: &MotiveClass) -> MotiveClass {
        if self.is_zero() || rhs.is_zero() {
            return MotiveClass::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        MotiveClass::from_coeffs(out)
    }
}

impl Mul for MotiveClass {
    type Output = MotiveClass;

    fn mul(self, rhs: MotiveClass) -> MotiveClass {
        &self * &rhs
    }
}

impl std::iter::Sum for MotiveClass {
    fn sum<I: Iterator<Item = MotiveClass>>(iter: I) -> Self {
        iter.fold(MotiveClass::zero(), |acc, c| &acc + &c)
    }
}

impl std::iter::Product for MotiveClass {
    fn product<I: Iterator<Item = MotiveClass>>(iter: I) -> Self {
        iter.fold(MotiveClass::one(), |acc, c| &acc * &c)
    }
}

impl fmt::Display for MotiveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_in("L"))
    }
}

// Coefficients that fit in an i64 serialize as JSON numbers; larger ones as
// decimal strings so nothing is lost.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum WireCoeff {
    Small(i64),
    Big(String),
}

impl Serialize for MotiveClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let wire: Vec<WireCoeff> = self
            .coeffs
            .iter()
            .map(|c| match c.to_i64() {
                Some(v) => WireCoeff::Small(v),
                None => WireCoeff::Big(c.to_string()),
            })
            .collect();
        let mut s = serializer.serialize_struct("MotiveClass", 1)?;
        s.serialize_field("coeffs", &wire)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for MotiveClass {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            coeffs: Vec<WireCoeff>,
        }
        let wire = Wire::deserialize(deserializer)?;
        let coeffs = wire
            .coeffs
            .into_iter()
            .map(|c| match c {
                WireCoeff::Small(v) => Ok(BigInt::from(v)),
                WireCoeff::Big(s) => s.parse::<BigInt>().map_err(de::Error::custom),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MotiveClass::from_coeffs(coeffs))
    }
}
