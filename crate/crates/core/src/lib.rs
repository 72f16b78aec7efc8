//! Exact combinatorics of descending plane partitions and alternating sign
//! matrices.
//!
//! The crate validates and exhaustively enumerates both families of objects,
//! encodes partitions as non-intersecting lattice paths and back, realizes
//! the bijection between permutations and partitions without special parts,
//! evaluates the counting determinants and product formulas in exact
//! rational arithmetic, and verifies that both families are equinumerous
//! bucket by bucket under their `(k, n, p)` statistics.
//!
//! Everything is exact: no floating point anywhere.

pub mod asm;
pub mod bijection;
pub mod dpp;
pub mod exact;
pub mod lattice;
pub mod mrr;
pub mod perm;
pub mod render;

pub use asm::{enumerate_asms, validate_asm, Asm, AsmStats};
pub use bijection::{dpp_from_perm, perm_from_dpp};
pub use dpp::{enumerate_dpps, parse_dpp, serialize_dpp, validate_dpp, Dpp, DppStats};
pub use exact::{ExactMatrix, ExactScalar};
pub use lattice::{build_lattice, decode, encode, LatticeM, PathFamily};
pub use mrr::{histogram_asm, histogram_dpp, verify_mrr};
pub use perm::{InversionWord, Permutation};
