//! Principal (d = 1) Harish-Chandra data for the classical types B/C and D:
//! the cuspidal-rank index sets, relative groups and parameters, tabulated
//! once from the induction-theorem side and once from the fixed-point side,
//! plus the two-row symbol comparison identifying the cuspidal family.

use serde::Serialize;

use crate::cmfam::Parameter;
use crate::exact::rat;

use super::{RelativeGroup, UnipError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ClassicalKind {
    B,
    /// Type D with the split rational structure.
    Dplus,
    /// Type D with the twisted rational structure.
    Dminus,
}

impl std::fmt::Display for ClassicalKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ClassicalKind::B => write!(f, "B"),
            ClassicalKind::Dplus => write!(f, "D+"),
            ClassicalKind::Dminus => write!(f, "D-"),
        }
    }
}

/// One row of a classical table: the cuspidal rank, the relative group of
/// its series, the relative parameter, and the label of the cuspidal datum.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassicalRow {
    pub r: u32,
    pub relative: RelativeGroup,
    pub parameter: Parameter,
    pub cuspidal: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassicalTables {
    pub kind: ClassicalKind,
    pub n: u32,
    pub hc: Vec<ClassicalRow>,
    pub cm: Vec<ClassicalRow>,
}

impl ClassicalTables {
    /// Differences between the two sides on (rank, relative group,
    /// parameter); must come back empty.
    pub fn diff(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.hc.len() != self.cm.len() {
            out.push(format!(
                "row counts differ: {} vs {}",
                self.hc.len(),
                self.cm.len()
            ));
            return out;
        }
        for (a, b) in self.hc.iter().zip(&self.cm) {
            if a.r != b.r {
                out.push(format!("rank mismatch: {} vs {}", a.r, b.r));
            } else if a.relative != b.relative {
                out.push(format!(
                    "relative group mismatch at r = {}: {} vs {}",
                    a.r, a.relative, b.relative
                ));
            } else if a.parameter != b.parameter {
                out.push(format!("parameter mismatch at r = {}", a.r));
            }
        }
        out
    }
}

/// The parameter `k[c]` on `W_m = G(2,1,m)`: `(c, 0)` on the coordinate
/// hyperplane orbit and `(1, 0)` on the transposition orbit, with the same
/// orbit layout as the wreath tables (diagonal first).
fn k_bracket(c: i64, m: u32) -> Parameter {
    let mut orbits = Vec::new();
    if m >= 1 {
        orbits.push(vec![rat(c), rat(0)]);
    }
    if m >= 2 {
        orbits.push(vec![rat(1), rat(0)]);
    }
    Parameter::new(orbits)
}

/// The spetsial parameter of a type-D group (single orbit for rank >= 3).
fn k_spetsial_d(n: u32) -> Parameter {
    assert!(n >= 3);
    Parameter::new(vec![vec![rat(1), rat(0)]])
}

fn wreath2(m: u32) -> RelativeGroup {
    match m {
        0 => RelativeGroup::Trivial,
        1 => RelativeGroup::Cyclic(2),
        _ => RelativeGroup::Wreath(2, m),
    }
}

/// Index set and relative data, as read from the induction theorems.
fn hc_side(kind: ClassicalKind, n: u32) -> Vec<ClassicalRow> {
    match kind {
        ClassicalKind::B => {
            // Cuspidal data sit in ranks r^2 + r <= n; the series of the one
            // at rank r^2 + r has relative group W_(n - r^2 - r) with
            // parameter k[2r + 1].
            let mut rows = Vec::new();
            let mut r = 0u32;
            while r * r + r <= n {
                let m = n - (r * r + r);
                rows.push(ClassicalRow {
                    r,
                    relative: wreath2(m),
                    parameter: k_bracket(2 * r as i64 + 1, m),
                    cuspidal: format!("cus[B{}]", r * r + r),
                });
                r += 1;
            }
            rows
        }
        ClassicalKind::Dplus | ClassicalKind::Dminus => {
            // Ranks r^2 <= n with r != 1, even for the split structure and
            // odd for the twisted one; r = 0 is always present.
            let twist = matches!(kind, ClassicalKind::Dminus);
            let mut rows = Vec::new();
            let mut r = 0u32;
            while r * r <= n {
                let keep = r == 0 || (r >= 2 && (r % 2 == 1) == twist);
                if keep {
                    let row = match (r, twist) {
                        (0, false) => ClassicalRow {
                            r,
                            relative: RelativeGroup::TypeD(n),
                            parameter: k_spetsial_d(n),
                            cuspidal: "cus[D0]".to_string(),
                        },
                        (0, true) => ClassicalRow {
                            r,
                            relative: wreath2(n - 1),
                            parameter: k_bracket(2, n - 1),
                            cuspidal: "cus[D0]".to_string(),
                        },
                        _ => ClassicalRow {
                            r,
                            relative: wreath2(n - r * r),
                            parameter: k_bracket(2 * r as i64, n - r * r),
                            cuspidal: format!("cus[D{}]", r * r),
                        },
                    };
                    rows.push(row);
                }
                r += 1;
            }
            rows
        }
    }
}

/// Index set and relative data, as read from the fixed-point theorems on the
/// other side. The leaf attached to rank r normalizes to the space of the
/// same relative group at the same parameter.
fn cm_side(kind: ClassicalKind, n: u32) -> Vec<ClassicalRow> {
    match kind {
        ClassicalKind::B => {
            let mut rows = Vec::new();
            let mut r = 0u32;
            while r * r + r <= n {
                let m = n - (r * r + r);
                let height = r + 1;
                rows.push(ClassicalRow {
                    r,
                    relative: wreath2(m),
                    parameter: k_bracket(2 * r as i64 + 1, m),
                    // The cuspidal point is the fixed point labelled by the
                    // bipartition (r^(r+1), empty).
                    cuspidal: format!("z[({}^{}|)]", r, height),
                });
                r += 1;
            }
            rows
        }
        ClassicalKind::Dplus | ClassicalKind::Dminus => {
            let twist = matches!(kind, ClassicalKind::Dminus);
            let mut rows = Vec::new();
            let mut r = 0u32;
            while r * r <= n {
                let keep = r == 0 || (r >= 2 && (r % 2 == 1) == twist);
                if keep {
                    let (relative, parameter) = match (r, twist) {
                        (0, false) => (RelativeGroup::TypeD(n), k_spetsial_d(n)),
                        (0, true) => (wreath2(n - 1), k_bracket(2, n - 1)),
                        _ => (wreath2(n - r * r), k_bracket(2 * r as i64, n - r * r)),
                    };
                    rows.push(ClassicalRow {
                        r,
                        relative,
                        parameter,
                        cuspidal: format!("y[{}]", r * r),
                    });
                }
                r += 1;
            }
            rows
        }
    }
}

/// Both sides of the classical comparison; `diff()` of the result must be
/// empty.
pub fn classical_hc(kind: ClassicalKind, n: u32) -> Result<ClassicalTables, UnipError> {
    let min = match kind {
        ClassicalKind::B => 2,
        _ => 4,
    };
    if n < min {
        return Err(UnipError::SizeCap(format!(
            "{kind} requires rank >= {min}, got {n}"
        )));
    }
    Ok(ClassicalTables {
        kind,
        n,
        hc: hc_side(kind, n),
        cm: cm_side(kind, n),
    })
}

/// A two-row symbol with strictly increasing rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Symbol {
    pub top: Vec<u32>,
    pub bottom: Vec<u32>,
}

impl Symbol {
    pub fn new(top: Vec<u32>, bottom: Vec<u32>) -> Self {
        assert!(top.windows(2).all(|w| w[0] < w[1]));
        assert!(bottom.windows(2).all(|w| w[0] < w[1]));
        Symbol { top, bottom }
    }

    pub fn defect(&self) -> u32 {
        (self.top.len() as i64 - self.bottom.len() as i64).unsigned_abs() as u32
    }

    pub fn entry_multiset(&self) -> Vec<u32> {
        let mut all: Vec<u32> = self.top.iter().chain(&self.bottom).copied().collect();
        all.sort_unstable();
        all
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SymbolCheck {
    pub r: u32,
    pub cuspidal: Symbol,
    pub principal: Symbol,
    pub same_entries: bool,
    pub defects: (u32, u32),
}

/// Builds the cuspidal symbol (one row `1..2r+1`, defect `2r+1`) and the
/// principal-series symbol of the same datum (rows `r+1..2r+1` over `1..r`,
/// defect 1) and compares their entry multisets.
pub fn symbol_check(r: u32) -> SymbolCheck {
    assert!(r >= 1);
    let cuspidal = Symbol::new((1..=2 * r + 1).collect(), vec![]);
    let principal = Symbol::new((r + 1..=2 * r + 1).collect(), (1..=r).collect());
    let same_entries = cuspidal.entry_multiset() == principal.entry_multiset();
    let defects = (cuspidal.defect(), principal.defect());
    SymbolCheck {
        r,
        cuspidal,
        principal,
        same_entries,
        defects,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type_b_small_ranks() {
        let t = classical_hc(ClassicalKind::B, 2).unwrap();
        let ranks: Vec<u32> = t.hc.iter().map(|row| row.r).collect();
        assert_eq!(ranks, vec![0, 1]);
        // r = 1 sits at rank 2 = 1^2 + 1, so the relative group is trivial
        // and the parameter degenerates.
        assert_eq!(t.hc[1].relative, RelativeGroup::Trivial);
        assert!(t.hc[1].parameter.orbits.is_empty());
        assert!(t.diff().is_empty());

        let t = classical_hc(ClassicalKind::B, 6).unwrap();
        let ranks: Vec<u32> = t.hc.iter().map(|row| row.r).collect();
        assert_eq!(ranks, vec![0, 1, 2]);
        assert_eq!(t.hc[0].relative, RelativeGroup::Wreath(2, 6));
        assert_eq!(
            t.hc[0].parameter.orbits,
            vec![vec![rat(1), rat(0)], vec![rat(1), rat(0)]]
        );
        assert_eq!(t.hc[2].relative, RelativeGroup::Trivial);
        assert!(t.diff().is_empty());
    }

    #[test]
    fn type_d_small_ranks() {
        let t = classical_hc(ClassicalKind::Dplus, 4).unwrap();
        let ranks: Vec<u32> = t.hc.iter().map(|row| row.r).collect();
        assert_eq!(ranks, vec![0, 2]);
        assert_eq!(t.hc[0].relative, RelativeGroup::TypeD(4));
        assert_eq!(t.hc[1].relative, RelativeGroup::Trivial);
        assert!(t.diff().is_empty());

        let t = classical_hc(ClassicalKind::Dminus, 9).unwrap();
        let ranks: Vec<u32> = t.hc.iter().map(|row| row.r).collect();
        assert_eq!(ranks, vec![0, 3]);
        assert_eq!(t.hc[0].relative, RelativeGroup::Wreath(2, 8));
        assert_eq!(t.hc[1].relative, RelativeGroup::Trivial);
        assert!(t.diff().is_empty());

        assert!(classical_hc(ClassicalKind::Dplus, 3).is_err());
    }

    #[test]
    fn symbols_share_entries() {
        let c = symbol_check(1);
        assert_eq!(c.cuspidal.top, vec![1, 2, 3]);
        assert!(c.cuspidal.bottom.is_empty());
        assert_eq!(c.principal.top, vec![2, 3]);
        assert_eq!(c.principal.bottom, vec![1]);
        assert!(c.same_entries);
        for r in 1..=10 {
            let c = symbol_check(r);
            assert!(c.same_entries);
            assert_eq!(c.defects, (2 * r + 1, 1));
            assert_eq!(
                c.cuspidal.entry_multiset(),
                (1..=2 * r + 1).collect::<Vec<_>>()
            );
        }
    }
}
