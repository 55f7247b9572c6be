//! Exact factorization of singular square matrices over Euclidean domains into
//! products of idempotent matrices.
//!
//! The crate is `no_std` and only needs `alloc`. Supported domains are the
//! integers, the rationals, the Gaussian integers and `F_p[x]`; see [`rings`].
//!
//! The entry point is [`ipn::factor_singular`], which returns a
//! [`certify::Certificate`] that [`certify::verify_certificate`] checks by
//! re-multiplication alone.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod certify;
pub mod error;
pub mod exactmat;
pub mod ge;
pub mod idem2;
pub mod ipn;
pub mod rings;

pub use certify::{verify_certificate, Certificate, Verdict};
pub use error::{Error, Result};
pub use exactmat::Matrix;
pub use ipn::factor_singular;
