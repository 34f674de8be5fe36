//! 2-swap configuration graphs of words with a fixed Parikh vector.
//!
//! The vertices of `G(P)` are the words with Parikh vector `P`; two words are
//! adjacent when exchanging two positions holding different symbols turns one
//! into the other. This crate enumerates Hamiltonian paths of `G(P)` from any
//! start word with small worst-case delay, evaluates closed forms for the
//! diameter and clique structure, builds explicit paths between words, and
//! ships a brute-force oracle to check all of it on small instances.

pub mod enumerator;
pub mod error;
pub mod oracle;
pub mod ordered_set;
pub mod pathfinder;
pub mod structure;
pub mod word;

pub use enumerator::{enumerate_all, BinaryEnumerator, Checkpoint, DelayStats, Enumerator};
pub use error::{Error, Result};
pub use ordered_set::OrderedIndexSet;
pub use word::{ParikhVector, Swap, Symbol, Word};
