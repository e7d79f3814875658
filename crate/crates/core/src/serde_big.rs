//! Decimal-string serialization for big integers in reports.

use num_bigint::BigUint;
use serde::ser::SerializeSeq;
use serde::Serializer;

pub fn dec<S: Serializer>(n: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_str_radix(10))
}

pub fn dec_vec<S: Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for n in v {
        seq.serialize_element(&n.to_str_radix(10))?;
    }
    seq.end()
}

pub fn dec_opt<S: Serializer>(n: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
    match n {
        Some(n) => s.serialize_some(&n.to_str_radix(10)),
        None => s.serialize_none(),
    }
}
