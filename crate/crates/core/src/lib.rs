//! Exact-arithmetic library for the combinatorics shared by generic
//! unipotent data and Calogero-Moser fixed-point geometry: partitions and
//! abaci, character tables of symmetric groups, wreath products and small
//! primitive reflection groups, parameter spaces with Euler invariants,
//! generic degrees with their series decompositions, and explicit
//! hypersurface models.
//!
//! All arithmetic is exact (big rationals and cyclotomic field elements);
//! every identity checked by the verification harness holds on the nose.

pub mod chartab;
pub mod cmfam;
pub mod cmgeom;
pub mod exact;
pub mod linalg;
pub mod partitions;
pub mod unip;

pub use exact::{Cyclotomic, MultiPoly, Rational, UniPoly};
pub use partitions::{MultiPartition, Partition};
