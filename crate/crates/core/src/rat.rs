//! Exact rational scalars and their `p/q` string form.
//!
//! Everything in this crate is computed over arbitrary-precision rationals;
//! no floating point appears anywhere. JSON and table output renders
//! rationals as reduced `p/q` strings with the sign on the numerator
//! (`3/4`, `-1/2`, `5`), which is exactly what [`num::BigRational`]'s
//! `Display`/`FromStr` implementations produce and accept, so the helpers
//! here are thin wrappers plus serde adapters.

use num::BigInt;
pub use num::BigRational as Rat;

use crate::error::Error;

/// Build `n/d` from machine integers. Panics if `d == 0` (programmer error).
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Build the integer rational `n`.
pub fn ratz(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parse `"p/q"` or `"p"` into an exact rational.
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    s.trim()
        .parse::<Rat>()
        .map_err(|e| Error::BadRational { text: s.to_owned(), reason: e.to_string() })
}

/// serde adapter: a single rational as a `"p/q"` string (integers also accepted on input).
pub mod rat_string {
    use super::*;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rat, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Rat, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(i64),
            Str(String),
        }
        match Repr::deserialize(de)? {
            Repr::Int(n) => Ok(ratz(n)),
            Repr::Str(s) => parse_rat(&s).map_err(D::Error::custom),
        }
    }
}

/// serde adapter: `Vec<Rat>` as a list of `"p/q"` strings.
pub mod rat_vec {
    use super::*;
    use serde::de::Error as _;
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rat], ser: S) -> Result<S::Ok, S::Error> {
        let mut seq = ser.serialize_seq(Some(v.len()))?;
        for r in v {
            seq.serialize_element(&r.to_string())?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<Rat>, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(i64),
            Str(String),
        }
        let raw = Vec::<Repr>::deserialize(de)?;
        raw.into_iter()
            .map(|x| match x {
                Repr::Int(n) => Ok(ratz(n)),
                Repr::Str(s) => parse_rat(&s).map_err(D::Error::custom),
            })
            .collect()
    }
}

/// serde adapter: `Vec<Vec<Rat>>` as nested lists of `"p/q"` strings.
pub mod rat_mat {
    use super::*;
    use serde::de::Error as _;
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Vec<Rat>], ser: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> =
            v.iter().map(|row| row.iter().map(Rat::to_string).collect()).collect();
        let mut seq = ser.serialize_seq(Some(rows.len()))?;
        for row in rows {
            seq.serialize_element(&row)?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<Vec<Rat>>, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(i64),
            Str(String),
        }
        let raw = Vec::<Vec<Repr>>::deserialize(de)?;
        raw.into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|x| match x {
                        Repr::Int(n) => Ok(ratz(n)),
                        Repr::Str(s) => parse_rat(&s).map_err(D::Error::custom),
                    })
                    .collect()
            })
            .collect()
    }
}

/// serde adapter: `Option<Rat>` as an optional `"p/q"` string.
pub mod rat_opt {
    use super::*;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Option<Rat>, ser: S) -> Result<S::Ok, S::Error> {
        match r {
            Some(r) => ser.serialize_some(&r.to_string()),
            None => ser.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Option<Rat>, D::Error> {
        let raw = Option::<String>::deserialize(de)?;
        raw.map(|s| parse_rat(&s).map_err(D::Error::custom)).transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["3/4", "-1/2", "5", "0", "-7"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(r.to_string(), s);
        }
    }

    #[test]
    fn parse_reduces_and_normalizes_sign() {
        assert_eq!(parse_rat("6/8").unwrap(), rat(3, 4));
        assert_eq!(parse_rat("1/-2").unwrap().to_string(), "-1/2");
        assert_eq!(parse_rat(" 2/4 ").unwrap(), rat(1, 2));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("a/b").is_err());
        assert!(parse_rat("").is_err());
    }
}
