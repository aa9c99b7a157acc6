//! Exact character tables with class metadata: sizes, fixed-space
//! codimensions, and reflection-orbit data, for symmetric groups, wreath
//! products `G(d,1,r)`, and the hardcoded rank-2 groups B2, G2 and the
//! primitive group G4.

mod group;
mod hardcoded;
mod mn;
mod symmetric;
mod wreath;

pub use group::EnumeratedGroup;
pub use hardcoded::{hardcoded_group, table_hardcoded, Hardcoded};
pub use mn::{remove_border_strips, symmetric_character_value, wreath_character_value};
pub use symmetric::table_symmetric;
pub use wreath::{table_wreath, wreath_class_representative, WreathElement};

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::exact::Cyclotomic;
use crate::partitions::{MultiPartition, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChartabError {
    #[error("group size out of supported range: {0}")]
    SizeCap(String),
    #[error("unknown label: {0}")]
    UnknownLabel(String),
}

/// Which group a table belongs to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum GroupKind {
    Symmetric(u32),
    /// `G(d, 1, r)`: the wreath product of a cyclic group of order `d` by
    /// the symmetric group on `r` points.
    Wreath(u32, u32),
    Hardcoded(Hardcoded),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupDescriptor {
    pub kind: GroupKind,
    pub order: u64,
    /// Dimension of the reflection representation.
    pub rank: u32,
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            GroupKind::Symmetric(n) => write!(f, "S{}", n),
            GroupKind::Wreath(d, r) => write!(f, "G({},1,{})", d, r),
            GroupKind::Hardcoded(h) => write!(f, "{}", h),
        }
    }
}

/// Conjugacy-class label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub enum ClassLabel {
    /// Cycle type, for symmetric groups.
    Cycles(Partition),
    /// Cycle lengths per color, for wreath products.
    Multi(MultiPartition),
    Named(String),
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel::Cycles(p) => write!(f, "({})", p),
            ClassLabel::Multi(m) => write!(f, "({})", m),
            ClassLabel::Named(s) => write!(f, "{}", s),
        }
    }
}

/// Irreducible-character label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub enum IrrLabel {
    Par(Partition),
    Multi(MultiPartition),
    /// `phi_{degree, b}` labels for G4.
    DegreeB { degree: u32, b: u32 },
    Named(String),
}

impl fmt::Display for IrrLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrrLabel::Par(p) => write!(f, "[{}]", p),
            IrrLabel::Multi(m) => write!(f, "[{}]", m),
            IrrLabel::DegreeB { degree, b } => write!(f, "phi({},{})", degree, b),
            IrrLabel::Named(s) => write!(f, "{}", s),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassData {
    pub label: ClassLabel,
    pub size: u64,
    /// Codimension of the fixed space of the class in the reflection
    /// representation.
    pub cod: u32,
}

/// One orbit of reflecting hyperplanes: the order `e` of the pointwise
/// stabilizer, the number of hyperplanes, and for each `a = 1..e-1` the
/// class of the `a`-th power of the distinguished generator (the one of
/// determinant `zeta_e`).
#[derive(Debug, Clone, Serialize)]
pub struct ReflectionOrbit {
    pub label: String,
    pub e: u32,
    pub size: u64,
    /// `power_classes[a-1]` = class index of `s_H^a`, whose determinant is
    /// `zeta_e^a`.
    pub power_classes: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub group: GroupDescriptor,
    pub classes: Vec<ClassData>,
    pub irreducibles: Vec<IrrLabel>,
    /// `values[i][c]` = value of irreducible `i` on class `c`.
    pub values: Vec<Vec<Cyclotomic>>,
    pub reflection_orbits: Vec<ReflectionOrbit>,
    /// `inverse_class[c]` = class of the inverses of class `c`.
    pub inverse_class: Vec<usize>,
}

impl CharacterTable {
    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn order(&self) -> u64 {
        self.group.order
    }

    pub fn value(&self, irr: usize, class: usize) -> &Cyclotomic {
        &self.values[irr][class]
    }

    /// Degree of an irreducible (its value on the identity class).
    pub fn degree(&self, irr: usize) -> u64 {
        let id = self.identity_class();
        let r = self.values[irr][id]
            .to_rational()
            .expect("degrees are rational integers");
        assert!(num::One::is_one(r.denom()));
        u64::try_from(r.numer().clone()).expect("degrees are positive")
    }

    pub fn identity_class(&self) -> usize {
        self.classes
            .iter()
            .position(|c| c.size == 1 && c.cod == 0)
            .expect("a table always contains the identity class")
    }

    pub fn class_index(&self, label: &ClassLabel) -> Option<usize> {
        self.classes.iter().position(|c| &c.label == label)
    }

    pub fn irr_index(&self, label: &IrrLabel) -> Option<usize> {
        self.irreducibles.iter().position(|l| l == label)
    }

    /// Total number of reflections implied by the orbit data:
    /// `sum |orbit| * (e - 1)`.
    pub fn reflection_count(&self) -> u64 {
        self.reflection_orbits
            .iter()
            .map(|o| o.size * (o.e as u64 - 1))
            .sum()
    }

    /// Exact row and column orthogonality; returns a description of the
    /// first failure, if any.
    pub fn check_orthogonality(&self) -> Result<(), String> {
        let n = self.num_classes();
        let order = Cyclotomic::from_rational(crate::exact::rat(self.order() as i64));
        // Rows: sum_c |c| chi(c) conj(chi'(c)) = delta * |W|.
        for i in 0..n {
            for j in i..n {
                let mut s = Cyclotomic::zero(1);
                for c in 0..n {
                    let size = Cyclotomic::from_rational(crate::exact::rat(
                        self.classes[c].size as i64,
                    ));
                    s = s.add(
                        &size.mul(&self.values[i][c].mul(&self.values[j][c].conjugate())),
                    );
                }
                let expected = if i == j {
                    order.clone()
                } else {
                    Cyclotomic::zero(1)
                };
                if s != expected {
                    return Err(format!(
                        "row orthogonality fails for {} vs {}: got {}",
                        self.irreducibles[i], self.irreducibles[j], s
                    ));
                }
            }
        }
        // Columns: sum_chi chi(c) conj(chi(c')) = delta * |W| / |c|.
        for c in 0..n {
            for c2 in c..n {
                let mut s = Cyclotomic::zero(1);
                for i in 0..n {
                    s = s.add(&self.values[i][c].mul(&self.values[i][c2].conjugate()));
                }
                let expected = if c == c2 {
                    Cyclotomic::from_rational(crate::exact::ratio(
                        self.order() as i64,
                        self.classes[c].size as i64,
                    ))
                } else {
                    Cyclotomic::zero(1)
                };
                if s != expected {
                    return Err(format!(
                        "column orthogonality fails for {} vs {}: got {}",
                        self.classes[c].label, self.classes[c2].label, s
                    ));
                }
            }
        }
        Ok(())
    }

    /// Serializes the table: group, class metadata, irreducible labels, and
    /// the value matrix as cyclotomic strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "group": self.group,
            "classes": self.classes.iter().map(|c| serde_json::json!({
                "label": c.label.to_string(),
                "size": c.size,
                "cod": c.cod,
            })).collect::<Vec<_>>(),
            "irreducibles": self.irreducibles.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
            "values": self.values.iter().map(|row| {
                row.iter().map(|v| v.to_string()).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
            "reflection_orbits": self.reflection_orbits,
        })
    }
}

/// Filtration degree of a class-coefficient vector: the largest fixed-space
/// codimension over classes with a nonzero coefficient (0 for the zero
/// vector).
pub fn cod_filtration_degree(table: &CharacterTable, coeffs: &[Cyclotomic]) -> u32 {
    assert_eq!(coeffs.len(), table.num_classes());
    coeffs
        .iter()
        .zip(&table.classes)
        .filter(|(c, _)| !c.is_zero())
        .map(|(_, data)| data.cod)
        .max()
        .unwrap_or(0)
}
