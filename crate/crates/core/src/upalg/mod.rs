//! Exact arithmetic over ultimately periodic index sets and sequences,
//! together with the anchored ultrafilter decision procedure.

mod hyper;
mod poly;
mod seq;
mod set;
pub(crate) mod text;

pub use hyper::{Hypernatural, Parity};
pub use poly::{EventualSign, Poly};
pub use seq::{Rel, UppSeq};
pub use set::{AnchoredUltrafilter, UpSet};

use alloc::string::String;

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum UpAlgError {
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("pattern residue {residue} is not below modulus {modulus}")]
    ResidueOutOfRange { residue: u64, modulus: u64 },
    #[error("prefix length {len} does not match threshold {threshold}")]
    PrefixLengthMismatch { len: usize, threshold: u64 },
    #[error("cycle must be nonempty")]
    EmptyCycle,
    #[error("sequence is not integer-valued at index {index}")]
    NotIntegerValued { index: u64 },
    #[error("sequence is negative at index {index}; absorb it into the prefix")]
    NegativeTerm { index: u64 },
    #[error("subtrahend exceeds minuend almost everywhere")]
    NegativeAlmostEverywhere,
    #[error("min/max over an empty set")]
    EmptySet,
    #[error("fold window exceeds the supported bound")]
    BoundTooLarge,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
