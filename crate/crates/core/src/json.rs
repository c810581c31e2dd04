//! Serde helpers rendering arbitrary-precision integers as plain JSON numbers.

use std::collections::BTreeMap;
use std::fmt::Display;

use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

pub(crate) fn number(v: &impl Display) -> serde_json::Number {
    v.to_string().parse().expect("integers render as JSON numbers")
}

pub fn decimal<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    number(v).serialize(s)
}

pub fn decimal_vec<T: Display, S: Serializer>(v: &[T], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&number(x))?;
    }
    seq.end()
}

pub fn decimal_matrix<T: Display, S: Serializer>(v: &[Vec<T>], s: S) -> Result<S::Ok, S::Error> {
    let rows: Vec<Vec<serde_json::Number>> = v.iter().map(|r| r.iter().map(number).collect()).collect();
    rows.serialize(s)
}

pub fn decimal_map<K: Serialize, T: Display, S: Serializer>(v: &BTreeMap<K, T>, s: S) -> Result<S::Ok, S::Error> {
    let mut map = s.serialize_map(Some(v.len()))?;
    for (k, x) in v {
        map.serialize_entry(k, &number(x))?;
    }
    map.end()
}
