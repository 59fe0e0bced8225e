//! Ratliff–Rush filtrations, depth of the associated graded module, the
//! Valabrega–Valla sum and length identities along superficial sequences.

mod depth;
mod rr;
mod sequences;

pub use depth::{chain_hilbert, delta_vv, depth_assoc_graded, depth_from_chain, DeltaReport, DepthReport};
pub use rr::{rr_filtration, RRReport};
pub use sequences::{
    graded_quotient_series, verify_exact_sequences, ExactSequenceReport, FiveTermCheck, QuotientSeries,
    RRSequenceCheck, ThreeTermCheck,
};
