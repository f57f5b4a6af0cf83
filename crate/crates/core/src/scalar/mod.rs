//! Exact coefficient arithmetic.
//!
//! Scalars live in the fraction field of Laurent polynomials over the
//! rationals. The square roots `u = r^{1/2}` and `v = s^{1/2}` are the base
//! variables, so every half-integer power of `r` and `s` has an integral
//! exponent vector.

mod frac;
mod gcd;
mod mono;
mod poly;
mod qnum;
mod text;

pub use frac::{Scalar, A, B, U, V, W, X, Y, Z};
pub use gcd::gcd;
pub use mono::{Mono, NVARS};
pub use poly::{Poly, Q};
pub use qnum::{rs_binomial, rs_factorial, rs_integer, rs_integer_in};

use serde::{Deserialize, Serialize};
use std::collections::HashSet;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero substituted into a negative power")]
    ZeroToNegativePower,
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("ring has {0} slots, at most {max} are supported", max = NVARS)]
    TooManyVariables(usize),
    #[error("scalar uses {used} variables but the ring has {slots}")]
    Arity { used: usize, slots: usize },
    #[error("binomial [{m} over {k}] needs k <= m")]
    BinomialRange { m: u32, k: u32 },
    #[error("parse error: {0}")]
    Parse(String),
}

/// An ordered set of variable names. Slot `k` of every exponent vector refers
/// to the `k`-th name. The names `u` and `v` denote `r^{1/2}` and `s^{1/2}`
/// and are printed as half powers of `r` and `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarRing {
    names: Vec<String>,
}

impl ScalarRing {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<ScalarRing, ScalarError> {
        if names.len() > NVARS {
            return Err(ScalarError::TooManyVariables(names.len()));
        }
        let mut seen = HashSet::new();
        for n in names {
            if !seen.insert(n.as_ref()) {
                return Err(ScalarError::DuplicateVariable(n.as_ref().to_string()));
            }
        }
        Ok(ScalarRing { names: names.iter().map(|n| n.as_ref().to_string()).collect() })
    }

    /// `u, v, w, z, x, y, a, b`: the slot layout used throughout the crate.
    pub fn standard() -> ScalarRing {
        ScalarRing::new(&["u", "v", "w", "z", "x", "y", "a", "b"]).unwrap()
    }

    /// The first `k` standard slots.
    pub fn standard_prefix(k: usize) -> ScalarRing {
        let mut r = ScalarRing::standard();
        r.names.truncate(k.max(2));
        r
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn slot_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Validates that a scalar only uses slots of this ring.
    pub fn check(&self, x: &Scalar) -> Result<(), ScalarError> {
        let used = x.arity();
        if used > self.len() {
            return Err(ScalarError::Arity { used, slots: self.len() });
        }
        Ok(())
    }

    pub fn to_terms(&self, p: &Poly) -> Vec<JsonTerm> {
        p.terms()
            .iter()
            .map(|(m, c)| JsonTerm {
                coeff: format!("{}/{}", c.numer(), c.denom()),
                exps: (0..self.len()).map(|k| m.exp(k)).collect(),
            })
            .collect()
    }

    pub fn from_terms(&self, terms: &[JsonTerm]) -> Result<Poly, ScalarError> {
        let mut out = Vec::with_capacity(terms.len());
        for t in terms {
            if t.exps.len() != self.len() {
                return Err(ScalarError::Arity { used: t.exps.len(), slots: self.len() });
            }
            let c = parse_q(&t.coeff)?;
            out.push((Mono::from_slice(&t.exps), c));
        }
        Ok(Poly::from_terms(out))
    }
}

/// One term of the JSON schema: rational coefficient `"p/q"` and the raw
/// exponent vector (doubled for `r` and `s`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub coeff: String,
    pub exps: Vec<i32>,
}

fn parse_q(t: &str) -> Result<Q, ScalarError> {
    let bad = || ScalarError::Parse(format!("bad rational `{}`", t));
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n, d),
        None => (t, "1"),
    };
    let n: num_bigint::BigInt = n.trim().parse().map_err(|_| bad())?;
    let d: num_bigint::BigInt = d.trim().parse().map_err(|_| bad())?;
    if d == 0.into() {
        return Err(bad());
    }
    Ok(Q::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_slots() {
        assert_eq!(ScalarRing::new(&["u", "v"]).unwrap().len(), 2);
        assert_eq!(ScalarRing::new(&["u", "v", "x", "y"]).unwrap().len(), 4);
        assert_eq!(ScalarRing::new(&["u", "u"]), Err(ScalarError::DuplicateVariable("u".into())));
    }

    #[test]
    fn arity_is_validated() {
        let ring = ScalarRing::new(&["u", "v"]).unwrap();
        assert!(ring.check(&Scalar::rs(1, -1)).is_ok());
        assert!(ring.check(&Scalar::z()).is_err());
    }
}
