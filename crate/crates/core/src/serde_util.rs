use std::fmt::Display;

use serde::Serializer;

/// Serializes through `Display`, keeping big integers exact in JSON.
pub(crate) fn display<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}
