//! Big integers rendered as bare JSON numbers (never strings, never floats).

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

fn to_number(v: &BigInt) -> serde_json::Number {
    serde_json::Number::from_str(&v.to_string()).expect("decimal integers are valid JSON numbers")
}

fn from_number<E: serde::de::Error>(n: &serde_json::Number) -> Result<BigInt, E> {
    BigInt::from_str(&n.to_string()).map_err(|_| E::custom(format!("{n} is not an integer")))
}

pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    to_number(v).serialize(s)
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
    let n = serde_json::Number::deserialize(d)?;
    from_number(&n)
}

pub mod map {
    use super::*;

    pub fn serialize<K: Serialize + Ord, S: Serializer>(m: &BTreeMap<K, BigInt>, s: S) -> Result<S::Ok, S::Error> {
        let view: BTreeMap<&K, serde_json::Number> = m.iter().map(|(k, v)| (k, to_number(v))).collect();
        view.serialize(s)
    }

    pub fn deserialize<'de, K, D>(d: D) -> Result<BTreeMap<K, BigInt>, D::Error>
    where
        K: Deserialize<'de> + Ord,
        D: Deserializer<'de>,
    {
        let raw = BTreeMap::<K, serde_json::Number>::deserialize(d)?;
        raw.into_iter()
            .map(|(k, n)| from_number::<D::Error>(&n).map(|v| (k, v)))
            .collect()
    }
}
