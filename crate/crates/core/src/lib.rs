//! Zero-function ideals of polynomials over finite local rings.
//!
//! Everything here is exact arithmetic over a [`FiniteLocalRing`]: the ring
//! itself, univariate polynomials over it, the structured generating sets of
//! the ideals `Z(m)` and `Z(R)` of polynomials vanishing on the maximal ideal
//! and on the whole ring, Teichmüller-style root lifting, and an exhaustive
//! brute-force oracle that certifies all of the above slice by slice.
//!
//! The crate is `no_std` and only needs `alloc`. IO, file formats, the
//! parallel executor and the command-line tool live in the `nullideal` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod exec;
pub mod lift;
pub mod null_ideal;
pub mod oracle;
pub mod poly;
pub mod ring;

pub use error::{Error, Result};
pub use exec::{Executor, Sequential};
pub use lift::{factor_pi_polynomial, teichmuller_lift, PiFactorization, TeichmullerTrace};
pub use null_ideal::{IdealForm, StructuredIdeal};
pub use poly::{Poly, PolyRing};
pub use ring::{Elem, FiniteLocalRing, RingElement, RingId, RingKind, RingOptions, RingSpec, TableSpec};
