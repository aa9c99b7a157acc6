//! Generic unipotent data: type-A degree polynomials and their series
//! decompositions with relative parameters, classical-type principal
//! Harish-Chandra tables and symbols, the G4 datum, and the rank-2 data.

mod classical;
mod g4;
mod rank2;
mod type_a;

pub use classical::{
    classical_hc, symbol_check, ClassicalKind, ClassicalRow, ClassicalTables, Symbol,
};
pub use g4::{g4_consistency, g4_datum, G4Report, SpetsDatum};
pub use rank2::{rank2_datum, Rank2};
pub use type_a::{
    a_a_of, cuspidality_sweep, d_series_a, ennola_twist, generic_degree_a, is_d_cuspidal_a,
    michel_identity_a, phi_d_multiplicity, MichelReport, SeriesBlock,
};

use serde::Serialize;
use thiserror::Error;

use crate::cmfam::Parameter;
use crate::exact::UniPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UnipError {
    #[error("size cap exceeded: {0}")]
    SizeCap(String),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

/// The relative group attached to a cuspidal pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum RelativeGroup {
    Trivial,
    Cyclic(u32),
    /// `G(d, 1, r)`.
    Wreath(u32, u32),
    /// A Weyl group of type D of the given rank.
    TypeD(u32),
    G4,
}

impl RelativeGroup {
    /// Number of irreducible characters, where it is cheaply known.
    pub fn irreducible_count(&self) -> Option<u64> {
        match self {
            RelativeGroup::Trivial => Some(1),
            RelativeGroup::Cyclic(d) => Some(*d as u64),
            RelativeGroup::Wreath(d, r) => {
                Some(crate::partitions::multipartitions_of(*r as u64, *d).len() as u64)
            }
            RelativeGroup::TypeD(_) => None,
            RelativeGroup::G4 => Some(7),
        }
    }
}

impl std::fmt::Display for RelativeGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RelativeGroup::Trivial => write!(f, "1"),
            RelativeGroup::Cyclic(d) => write!(f, "mu{}", d),
            RelativeGroup::Wreath(d, r) => write!(f, "G({},1,{})", d, r),
            RelativeGroup::TypeD(n) => write!(f, "D{}", n),
            RelativeGroup::G4 => write!(f, "G4"),
        }
    }
}

/// A cuspidal pair: the parabolic support, the cuspidal datum on it, the
/// relative group of its series, and the relative parameter.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CuspidalPair {
    pub parabolic: String,
    pub cuspidal: String,
    pub relative: RelativeGroup,
    pub parameter: Parameter,
}

/// One generic unipotent datum: a label, its degree polynomial, and its
/// family.
#[derive(Debug, Clone)]
pub struct GenericUnipotent {
    pub label: String,
    pub degree: UniPoly,
    pub family: String,
}

/// The pair (valuation, degree) of a nonzero polynomial.
pub fn degree_span(p: &UniPoly) -> Option<(u64, u64)> {
    Some((p.valuation()? as u64, p.degree()? as u64))
}
