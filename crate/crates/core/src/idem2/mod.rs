//! The 2x2 case: fixed factorization templates, idempotents from Bezout
//! quadruples, and the Euclidean pipeline for singular 2x2 matrices.
//!
//! A singular `[[a, b], [0, 0]]` with `aR + bR = R` is the product of the
//! idempotents `(a_i; b_i)(c_i, d_i)` of a normalized chain. Chains and odd
//! r-sequences determine each other, and the Euclidean algorithm on `(-b, a)`
//! produces an r-sequence directly.

mod chain;
mod pipeline;
mod table;

pub use chain::{
    chain_to_idempotents, chain_to_rseq, euclid_rseq, idempotent_from_bezout, normalize_chain,
    rseq_row, rseq_to_chain, BezoutQuad, IdemChain2, RSeq,
};
pub(crate) use pipeline::{conjugate_all, drop_repeats};
pub use pipeline::{
    factor_singular_2x2, factor_unit_shift, idempotent_factors_2x2, UnitShift, ALGORITHM_2X2,
};
pub use table::{table_factor_2x2, TableCase};
