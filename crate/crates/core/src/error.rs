use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

use crate::ring::Axiom;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{p} is not prime")]
    NotPrime { p: u64 },
    #[error("field modulus {modulus:?} is reducible over F_{p}")]
    NotIrreducible { p: u32, modulus: Vec<u32> },
    #[error("table violates {axiom} at ({a}, {b}, {c})")]
    NotARing { axiom: Axiom, a: u32, b: u32, c: u32 },
    #[error("ring is not local: non-units {a} and {b} sum to a unit")]
    NotLocal { a: u32, b: u32 },
    #[error("ring order {order} exceeds the size cap {cap}")]
    SizeLimit { order: u64, cap: u64 },
    #[error("element or polynomial belongs to a different ring")]
    ForeignElement,
    #[error("divisor is not monic")]
    NotMonic,
    #[error("expected degree {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("bad representatives: {reason}")]
    BadRepresentatives { reason: String },
    #[error("the maximal ideal is not principal")]
    NonPrincipalMaximalIdeal,
    #[error("nilpotency index {e} exceeds q + 1 = {}", q + 1)]
    OutOfTheoremRange { e: u32, q: u32 },
    #[error("polynomial is not a pi-polynomial")]
    NotAPiPolynomial,
    #[error("operation does not support generator-list ideals")]
    UnsupportedForm,
    #[error("polynomial does not vanish on the ring: f({element}) = {value}")]
    NotAZeroFunction { element: String, value: String },
    #[error("enumeration needs {required} candidates, cap is {cap}")]
    CapExceeded { required: u128, cap: u128 },
    #[error("residue image is not x^q - x")]
    NotALift,
    #[error("iteration from {start} did not stabilize within e - 1 steps")]
    NoStabilization { start: String },
    #[error("product of linear factors does not reproduce the polynomial")]
    FactorMismatch,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

impl Error {
    /// Stable name of the variant, used in CLI diagnostics and reports.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NotPrime { .. } => "NotPrime",
            Error::NotIrreducible { .. } => "NotIrreducible",
            Error::NotARing { .. } => "NotARing",
            Error::NotLocal { .. } => "NotLocal",
            Error::SizeLimit { .. } => "SizeLimit",
            Error::ForeignElement => "ForeignElement",
            Error::NotMonic => "NotMonic",
            Error::DegreeMismatch { .. } => "DegreeMismatch",
            Error::BadRepresentatives { .. } => "BadRepresentatives",
            Error::NonPrincipalMaximalIdeal => "NonPrincipalMaximalIdeal",
            Error::OutOfTheoremRange { .. } => "OutOfTheoremRange",
            Error::NotAPiPolynomial => "NotAPiPolynomial",
            Error::UnsupportedForm => "UnsupportedForm",
            Error::NotAZeroFunction { .. } => "NotAZeroFunction",
            Error::CapExceeded { .. } => "CapExceeded",
            Error::NotALift => "NotALift",
            Error::NoStabilization { .. } => "NoStabilization",
            Error::FactorMismatch => "FactorMismatch",
            Error::Parse { .. } => "Parse",
        }
    }
}
