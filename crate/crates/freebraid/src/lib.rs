//! Braids as automorphisms of free groups: Artin's action, recovery of braid
//! words, the Dehornoy order, ends, free products of cyclic groups, and
//! planar words.

pub mod braid;
pub mod ends;
pub mod error;
pub mod order;
pub mod phi;
pub mod planar;
pub mod random;
pub mod relations;
pub mod surface;
pub mod torsion;
pub mod verify;
pub mod word;

pub use braid::{apply_braid, automorphism_of, recover_braid_word, BraidAutomorphism, BraidWord, Endomorphism};
pub use error::{Error, Result};
pub use word::{FreeWord, Letter};
