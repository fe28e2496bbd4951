//! Degree-one integer polynomials in the curve genus `g`.
//!
//! Euler pairings, moduli dimensions, and flip exponents on an irreducible
//! curve are all affine in the genus, so tables can be reported symbolically
//! (`9g-6`, `g+1`) and only evaluated when the caller pins a numeric genus.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// An integer polynomial `g_coeff * g + constant`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct GenusPoly {
    pub g_coeff: BigInt,
    pub constant: BigInt,
}

impl GenusPoly {
    pub fn new(g_coeff: i64, constant: i64) -> Self {
        GenusPoly { g_coeff: BigInt::from(g_coeff), constant: BigInt::from(constant) }
    }

    pub fn constant(c: i64) -> Self {
        GenusPoly::new(0, c)
    }

    /// The symbol `g` itself.
    pub fn g() -> Self {
        GenusPoly::new(1, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.g_coeff == BigInt::from(0) && self.constant == BigInt::from(0)
    }

    /// Substitute a concrete genus.
    pub fn eval(&self, g: i64) -> BigInt {
        &self.g_coeff * BigInt::from(g) + &self.constant
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        GenusPoly { g_coeff: &self.g_coeff * k, constant: &self.constant * k }
    }

    /// Parse strings like `9g-6`, `-g+1`, `g`, `17`.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::BadGenusPoly { text: s.to_owned() };
        if t.is_empty() {
            return Err(bad());
        }
        match t.find('g') {
            None => {
                let c: BigInt = t.parse().map_err(|_| bad())?;
                Ok(GenusPoly { g_coeff: BigInt::from(0), constant: c })
            }
            Some(pos) => {
                let coeff_str = &t[..pos];
                let coeff: BigInt = match coeff_str {
                    "" | "+" => BigInt::from(1),
                    "-" => BigInt::from(-1),
                    other => other.parse().map_err(|_| bad())?,
                };
                let rest = &t[pos + 1..];
                let constant: BigInt = if rest.is_empty() {
                    BigInt::from(0)
                } else if rest.starts_with('+') || rest.starts_with('-') {
                    rest.parse().map_err(|_| bad())?
                } else {
                    return Err(bad());
                };
                Ok(GenusPoly { g_coeff: coeff, constant })
            }
        }
    }
}

impl fmt::Display for GenusPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let zero = BigInt::from(0);
        if self.g_coeff == zero {
            return write!(f, "{}", self.constant);
        }
        if self.g_coeff == BigInt::from(1) {
            write!(f, "g")?;
        } else if self.g_coeff == BigInt::from(-1) {
            write!(f, "-g")?;
        } else {
            write!(f, "{}g", self.g_coeff)?;
        }
        if self.constant > zero {
            write!(f, "+{}", self.constant)?;
        } else if self.constant < zero {
            write!(f, "{}", self.constant)?;
        }
        Ok(())
    }
}

impl fmt::Debug for GenusPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GenusPoly({self})")
    }
}

impl From<GenusPoly> for String {
    fn from(p: GenusPoly) -> String {
        p.to_string()
    }
}

impl TryFrom<String> for GenusPoly {
    type Error = Error;
    fn try_from(s: String) -> Result<Self, Error> {
        GenusPoly::parse(&s)
    }
}

impl Add for GenusPoly {
    type Output = GenusPoly;
    fn add(self, rhs: GenusPoly) -> GenusPoly {
        GenusPoly { g_coeff: self.g_coeff + rhs.g_coeff, constant: self.constant + rhs.constant }
    }
}

impl Sub for GenusPoly {
    type Output = GenusPoly;
    fn sub(self, rhs: GenusPoly) -> GenusPoly {
        GenusPoly { g_coeff: self.g_coeff - rhs.g_coeff, constant: self.constant - rhs.constant }
    }
}

impl Neg for GenusPoly {
    type Output = GenusPoly;
    fn neg(self) -> GenusPoly {
        GenusPoly { g_coeff: -self.g_coeff, constant: -self.constant }
    }
}

impl Mul<i64> for GenusPoly {
    type Output = GenusPoly;
    fn mul(self, k: i64) -> GenusPoly {
        self.scale(&BigInt::from(k))
    }
}
