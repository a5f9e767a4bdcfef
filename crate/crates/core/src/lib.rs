//! Exact-arithmetic toolkit for Fermat equations of signature (r, r, p),
//! `x^r + y^r = d z^p`, over the rationals, real quadratic fields, and real
//! cyclotomic fields `Q(zeta_r)^+`.
//!
//! The crate provides:
//!
//! * [`arith`] — big-integer/rational substrate, polynomial factorization
//!   over prime fields, Hensel lifting, resultants;
//! * [`numfield`] — field descriptors, prime splitting, element valuations,
//!   residue rings `O/P^n` and square testing therein;
//! * [`frey`] — Frey curves for both signatures with their exact invariants
//!   and the associated coprimality / reduction-type / j-valuation checks;
//! * [`sunit`] — bounded enumeration of the auxiliary S-unit equations
//!   `λ + μ = 1` and `α + β = γ²` with valuation-bound predicates;
//! * [`criteria`] — decision procedures for the local criteria, with
//!   witnesses and provenance-tagged class-number data;
//! * [`search`] — exhaustive desk-scale solution search over coordinate
//!   boxes.
//!
//! All computation is integer-exact; there is no floating point in any
//! decision path.

pub mod arith;
pub mod criteria;
pub mod frey;
pub mod numfield;
pub mod search;
pub mod sunit;

pub use arith::{IntPolynomial, ModPolynomial};
pub use numfield::{FieldElement, FieldKind, NumberField, NumberFieldDesc, PrimeData, ResidueRing};

use thiserror::Error as ThisError;

/// Toolkit-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, ThisError)]
pub enum Error {
    #[error("vanishing polynomial")]
    VanishingPolynomial,
    #[error("non-separable lift")]
    NonSeparableLift,
    #[error("not a unit")]
    NotAUnit,
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
    #[error("unsupported prime: {0}")]
    UnsupportedPrime(String),
    #[error("precision cap exceeded")]
    PrecisionCapExceeded,
    #[error("excluded prime")]
    ExcludedPrime,
    #[error("singular curve")]
    SingularCurve,
    #[error("degenerate Legendre parameter")]
    DegenerateLegendreParameter,
    #[error("degenerate descent")]
    DegenerateDescent,
    #[error("construction precondition violated: {0}")]
    ConstructionPrecondition(String),
    #[error("undecided: {0}")]
    Undecided(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

/// Serde helpers representing big integers and rationals as decimal strings,
/// keeping JSON output portable and byte-stable.
pub mod serde_big {
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};
    use std::str::FromStr;

    pub mod int {
        use super::*;

        pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
            s.serialize_str(&x.to_string())
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
            let t = String::deserialize(d)?;
            BigInt::from_str(&t).map_err(D::Error::custom)
        }
    }

    pub mod int_vec {
        use super::*;

        pub fn serialize<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
            s.collect_seq(xs.iter().map(|x| x.to_string()))
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
            let ts = Vec::<String>::deserialize(d)?;
            ts.iter()
                .map(|t| BigInt::from_str(t).map_err(D::Error::custom))
                .collect()
        }
    }

    pub mod rat {
        use super::*;

        pub fn serialize<S: Serializer>(x: &BigRational, s: S) -> Result<S::Ok, S::Error> {
            s.serialize_str(&super::rat_to_string(x))
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
            let t = String::deserialize(d)?;
            super::rat_from_str(&t).map_err(D::Error::custom)
        }
    }

    pub mod rat_vec {
        use super::*;

        pub fn serialize<S: Serializer>(xs: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
            s.collect_seq(xs.iter().map(super::rat_to_string))
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigRational>, D::Error> {
            let ts = Vec::<String>::deserialize(d)?;
            ts.iter()
                .map(|t| super::rat_from_str(t).map_err(D::Error::custom))
                .collect()
        }
    }

    pub fn rat_to_string(x: &BigRational) -> String {
        if x.denom() == &BigInt::from(1) {
            x.numer().to_string()
        } else {
            format!("{}/{}", x.numer(), x.denom())
        }
    }

    pub fn rat_from_str(t: &str) -> Result<BigRational, String> {
        let parse = |s: &str| BigInt::from_str(s).map_err(|e| e.to_string());
        match t.split_once('/') {
            Some((n, d)) => Ok(BigRational::new(parse(n)?, parse(d)?)),
            None => Ok(BigRational::from(parse(t)?)),
        }
    }
}

/// Version tag stamped into every machine-readable report.
pub const SCHEMA_VERSION: u32 = 1;
