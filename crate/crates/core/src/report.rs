//! Serialization helpers shared by the machine-readable reports.

use serde::Serializer;

use crate::poly::Polynomial;

/// Serializes a polynomial as its canonical text.
pub fn ser_poly<S: Serializer>(p: &Polynomial, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(p)
}

pub fn ser_polys<S: Serializer>(ps: &[Polynomial], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(ps.iter().map(|p| p.to_string()))
}

pub fn ser_opt_poly<S: Serializer>(p: &Option<Polynomial>, s: S) -> Result<S::Ok, S::Error> {
    match p {
        Some(p) => s.collect_str(p),
        None => s.serialize_none(),
    }
}
