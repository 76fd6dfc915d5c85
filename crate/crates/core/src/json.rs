//! Serializers that write big integers as plain JSON numbers.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::ser::{SerializeSeq, Serializer};
use serde_json::Number;

pub(crate) fn number(value: &BigInt) -> Number {
    Number::from_str(&value.to_string()).expect("integer literal is a JSON number")
}

pub(crate) fn big_vec<S: Serializer>(values: &[BigInt], serializer: S) -> Result<S::Ok, S::Error> {
    let mut seq = serializer.serialize_seq(Some(values.len()))?;
    for v in values {
        seq.serialize_element(&number(v))?;
    }
    seq.end()
}

pub(crate) fn big_rows<S: Serializer>(rows: &[Vec<BigInt>], serializer: S) -> Result<S::Ok, S::Error> {
    let mut seq = serializer.serialize_seq(Some(rows.len()))?;
    for row in rows {
        let numbers: Vec<Number> = row.iter().map(number).collect();
        seq.serialize_element(&numbers)?;
    }
    seq.end()
}
