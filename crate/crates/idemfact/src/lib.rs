//! JSON file formats, a seeded instance generator and the `idemfact`
//! command-line front end for [`idemfact_core`].

pub mod cli;
pub mod codec;
pub mod gen;

pub use idemfact_core as core;

/// Runs `$body` with `$ring` bound to the concrete ring named by a descriptor.
///
/// `$body` must evaluate to a `Result` whose error type converts from
/// [`idemfact_core::Error`].
#[macro_export]
macro_rules! with_ring {
    ($desc:expr, |$ring:ident| $body:expr) => {
        match $desc {
            $crate::core::rings::RingDescriptor::Integer => {
                let $ring = $crate::core::rings::Integers;
                $body
            }
            $crate::core::rings::RingDescriptor::Rational => {
                let $ring = $crate::core::rings::Rationals::rationals();
                $body
            }
            $crate::core::rings::RingDescriptor::Gauss => {
                let $ring = $crate::core::rings::GaussianIntegers;
                $body
            }
            $crate::core::rings::RingDescriptor::PolyMod(p) => {
                let $ring = $crate::core::rings::PolyModP::new(p)?;
                $body
            }
        }
    };
}
