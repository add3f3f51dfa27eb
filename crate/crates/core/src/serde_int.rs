//! Serde adapters writing `BigInt` as a plain JSON number when it fits in 64 bits and as a
//! decimal string otherwise.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A `BigInt` with the number-or-string encoding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Int(pub BigInt);

impl Serialize for Int {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if let Some(x) = self.0.to_i64() {
            s.serialize_i64(x)
        } else if let Some(x) = self.0.to_u64() {
            s.serialize_u64(x)
        } else {
            s.serialize_str(&self.0.to_string())
        }
    }
}

struct IntVisitor;

impl Visitor<'_> for IntVisitor {
    type Value = Int;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("an integer or a decimal string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Int, E> {
        Ok(Int(v.into()))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Int, E> {
        Ok(Int(v.into()))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Int, E> {
        v.parse().map(Int).map_err(|_| E::custom(format!("not an integer: {v:?}")))
    }
}

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Int, D::Error> {
        d.deserialize_any(IntVisitor)
    }
}

pub mod scalar {
    use super::*;

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        Int(v.clone()).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        Ok(Int::deserialize(d)?.0)
    }
}

pub mod vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|x| Int(x.clone())))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Ok(Vec::<Int>::deserialize(d)?.into_iter().map(|x| x.0).collect())
    }
}

pub mod option_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &Option<Vec<BigInt>>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => s.serialize_some(&v.iter().map(|x| Int(x.clone())).collect::<Vec<_>>()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Vec<BigInt>>, D::Error> {
        Ok(Option::<Vec<Int>>::deserialize(d)?.map(|v| v.into_iter().map(|x| x.0).collect()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers_and_strings() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let v = vec![BigInt::from(-3), BigInt::from(u64::MAX), big.clone()];
        let json = serde_json::to_string(&v.iter().cloned().map(Int).collect::<Vec<_>>()).unwrap();
        assert_eq!(json, format!("[-3,{},\"{big}\"]", u64::MAX));
        let back: Vec<Int> = serde_json::from_str(&json).unwrap();
        assert_eq!(back.into_iter().map(|x| x.0).collect::<Vec<_>>(), v);
    }
}
