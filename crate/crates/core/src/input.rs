//! JSON ingestion of user-supplied polynomial sequences, number sequences and
//! triangular arrays.
//!
//! Integers may be JSON numbers or decimal strings; strings keep full
//! precision. Rationals may also be written `"p/q"`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::transforms::{NumberSequence, TriangularArray};

fn bad(what: &str, v: &Value) -> Error {
    Error::Input(format!("expected {what}, found `{v}`"))
}

pub fn integer_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(i.into())
            } else if let Some(u) = n.as_u64() {
                Ok(u.into())
            } else {
                Err(bad("an integer", v))
            }
        }
        Value::String(s) => s.trim().parse().map_err(|_| bad("an integer", v)),
        _ => Err(bad("an integer", v)),
    }
}

pub fn rational_from_json(v: &Value) -> Result<BigRational> {
    if let Value::String(s) = v {
        if let Some((p, q)) = s.split_once('/') {
            let p: BigInt = p.trim().parse().map_err(|_| bad("a rational", v))?;
            let q: BigInt = q.trim().parse().map_err(|_| bad("a rational", v))?;
            if q.is_zero() {
                return Err(bad("a nonzero denominator", v));
            }
            return Ok(BigRational::new(p, q));
        }
    }
    integer_from_json(v).map(BigRational::from_integer)
}

fn parse(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| bad(what, v))
}

fn integers(v: &Value) -> Result<Vec<BigInt>> {
    array(v, "an array of integers")?.iter().map(integer_from_json).collect()
}

/// `[[c0, c1, ...], ...]`, entry `n` holding the coefficients of `f_n`.
///
/// ```
/// let seq = schurq::input::polynomial_sequence_from_json("[[1], [1, 1], [1, 2, 1]]").unwrap();
/// assert_eq!(seq[2].to_string(), "1 + 2*q + q^2");
/// ```
pub fn polynomial_sequence_from_json(text: &str) -> Result<Vec<Poly>> {
    array(&parse(text)?, "an array of coefficient arrays")?
        .iter()
        .map(|row| integers(row).map(Poly::from_coeffs))
        .collect()
}

/// Either a single array `[x0, x1, ...]`, an array of such arrays (named
/// `seq0`, `seq1`, ...), or an object mapping names to arrays.
pub fn corpus_from_json(text: &str) -> Result<Vec<(String, NumberSequence)>> {
    let seq = |v: &Value| -> Result<NumberSequence> {
        array(v, "an array of numbers")?
            .iter()
            .map(rational_from_json)
            .collect::<Result<Vec<_>>>()
            .map(NumberSequence::new)
    };
    match parse(text)? {
        Value::Object(map) => map.iter().map(|(k, v)| Ok((k.clone(), seq(v)?))).collect(),
        Value::Array(items) if items.iter().all(Value::is_array) && !items.is_empty() => items
            .iter()
            .enumerate()
            .map(|(i, v)| Ok((format!("seq{i}"), seq(v)?)))
            .collect(),
        v @ Value::Array(_) => Ok(vec![("seq0".to_string(), seq(&v)?)]),
        v => Err(bad("a sequence, an array of sequences or an object", &v)),
    }
}

/// `[[a00], [a10, a11], ...]`; row `n` must have `n + 1` entries.
pub fn triangular_array_from_json(text: &str) -> Result<TriangularArray> {
    let rows = array(&parse(text)?, "an array of rows")?
        .iter()
        .map(integers)
        .collect::<Result<Vec<_>>>()?;
    TriangularArray::table(rows)
}
