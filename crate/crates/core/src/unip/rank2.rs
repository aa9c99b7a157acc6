//! Rank-2 data at the Coxeter number: the cyclic relative group and its
//! parameter.

use crate::cmfam::Parameter;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rank2 {
    B2,
    G2,
}

/// The Coxeter number `d` and the parameter of the cyclic relative group
/// `mu_d` attached to the Coxeter torus.
pub fn rank2_datum(which: Rank2) -> (u32, Parameter) {
    match which {
        Rank2::B2 => (4, Parameter::from_ints(&[&[0, 1, 2, 1]])),
        Rank2::G2 => (6, Parameter::from_ints(&[&[0, 1, 2, 1, 1, 1]])),
    }
}
