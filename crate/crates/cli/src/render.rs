//! JSON rendering. Integers that fit in `i64` become numbers, larger ones
//! decimal strings; rationals are `"p/q"` strings (or integers when `q = 1`).
//! Object keys come out sorted since `serde_json::Map` is a `BTreeMap`.

use std::collections::BTreeSet;

use mfmoduli::exactlin::DualVector;
use mfmoduli::scalar::{Int, Rat};
use serde_json::{json, Value};

pub fn int<T: Int>(x: &T) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

pub fn vec<T: Int>(v: &[T]) -> Value {
    Value::Array(v.iter().map(int).collect())
}

pub fn vecs<T: Int>(vs: &[Vec<T>]) -> Value {
    Value::Array(vs.iter().map(|v| vec(v)).collect())
}

pub fn rat<T: Int>(q: &Rat<T>) -> Value {
    if q.denom().is_one() {
        int(q.numer())
    } else {
        json!(format!("{}/{}", q.numer(), q.denom()))
    }
}

pub fn dual<T: Int>(d: &DualVector<T>) -> Value {
    vec(&d.0)
}

/// Simple-root indices as 1-based positions.
pub fn nodes(s: &BTreeSet<usize>) -> Value {
    json!(s.iter().map(|i| i + 1).collect::<Vec<_>>())
}
