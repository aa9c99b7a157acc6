//! Explicit Calogero-Moser models: the cyclic hypersurfaces `xy = f(z)`,
//! the rank-2 fixed-variety comparison at the Coxeter number, and the full
//! eight-variable G4 presentation with its scaling action, fixed points,
//! root-of-unity loci, and surface identifications.

mod g4geom;

pub use g4geom::{
    g4_fixed_points, g4_presentation, g4_series_geometry_crosscheck, g4_surface_checks,
    mu_d_locus, verify_fixed_points, FixedPointRecord, GeomCheck, MuLocus, SeriesGeometryReport,
    SurfaceReport, WeightedPresentation, G4_VARS, G4_WEIGHTS,
};

use serde::Serialize;
use thiserror::Error;

use crate::exact::{format_rational, rat, Rational};
use crate::unip::{rank2_datum, Rank2};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CmgeomError {
    #[error("parameter has {0} entries, expected {1}")]
    ParameterLength(usize, usize),
    #[error("data integrity failure: {0}")]
    Integrity(String),
}

/// The hypersurface `xy = prod_j (z - m k_j)` attached to a cyclic group of
/// order `m` at parameter `k`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CyclicCMSpace {
    pub m: u32,
    /// Roots of the right-hand side, sorted, repeats encoding multiplicity.
    pub roots: Vec<String>,
    #[serde(skip)]
    pub root_values: Vec<Rational>,
}

/// Builds the cyclic space; the parameter must have exactly `m` entries.
pub fn cyclic_cm(m: u32, k: &[Rational]) -> Result<CyclicCMSpace, CmgeomError> {
    if k.len() != m as usize {
        return Err(CmgeomError::ParameterLength(k.len(), m as usize));
    }
    let mut root_values: Vec<Rational> = k.iter().map(|kj| kj * rat(m as i64)).collect();
    root_values.sort();
    Ok(CyclicCMSpace {
        m,
        roots: root_values.iter().map(format_rational).collect(),
        root_values,
    })
}

impl CyclicCMSpace {
    /// The root multiset shifted by a constant.
    pub fn shifted_roots(&self, shift: &Rational) -> Vec<Rational> {
        self.root_values.iter().map(|r| r + shift).collect()
    }
}

/// Distinct roots with multiplicities; a multiple root of multiplicity `m`
/// is a simple singularity of type `A_(m-1)`.
#[derive(Debug, Clone, Serialize)]
pub struct SingularityReport {
    /// (root, multiplicity) over distinct roots.
    pub multiplicities: Vec<(String, u32)>,
    /// (root, type label) over roots of multiplicity at least 2.
    pub singular: Vec<(String, String)>,
    /// All distinct roots: the scaling-fixed points sit at x = y = 0 over
    /// them.
    pub fixed_points: Vec<String>,
}

pub fn singularity_report(space: &CyclicCMSpace) -> SingularityReport {
    let mut multiplicities: Vec<(Rational, u32)> = Vec::new();
    for r in &space.root_values {
        match multiplicities.last_mut() {
            Some((prev, count)) if prev == r => *count += 1,
            _ => multiplicities.push((r.clone(), 1)),
        }
    }
    let singular = multiplicities
        .iter()
        .filter(|(_, m)| *m >= 2)
        .map(|(r, m)| (format_rational(r), format!("A{}", m - 1)))
        .collect();
    let fixed_points = multiplicities
        .iter()
        .map(|(r, _)| format_rational(r))
        .collect();
    SingularityReport {
        multiplicities: multiplicities
            .into_iter()
            .map(|(r, m)| (format_rational(&r), m))
            .collect(),
        singular,
        fixed_points,
    }
}

/// Looks for an affine map `z -> alpha z + beta` (alpha nonzero) carrying
/// the root multiset of `a` onto that of `b`. Roots are matched by trying
/// every pairing of two distinct roots on each side; spaces whose roots are
/// all equal only need a translation.
pub fn iso_up_to_affine(
    a: &CyclicCMSpace,
    b: &CyclicCMSpace,
) -> Option<(Rational, Rational)> {
    if a.m != b.m {
        return None;
    }
    let mut target = b.root_values.clone();
    target.sort();
    let check = |alpha: &Rational, beta: &Rational| -> bool {
        let mut mapped: Vec<Rational> =
            a.root_values.iter().map(|r| r * alpha + beta).collect();
        mapped.sort();
        mapped == target
    };
    let distinct = |v: &[Rational]| {
        let mut d = v.to_vec();
        d.dedup();
        d
    };
    let da = distinct(&a.root_values);
    let db = distinct(&b.root_values);
    if da.len() != db.len() {
        return None;
    }
    if da.len() <= 1 {
        // A translation handles constant root multisets.
        let beta = match (da.first(), db.first()) {
            (Some(x), Some(y)) => y - x,
            _ => rat(0),
        };
        let alpha = rat(1);
        return check(&alpha, &beta).then_some((alpha, beta));
    }
    for i in 0..da.len() {
        for j in 0..da.len() {
            if i == j {
                continue;
            }
            for s in 0..db.len() {
                for t in 0..db.len() {
                    if s == t {
                        continue;
                    }
                    // Solve alpha da[i] + beta = db[s], alpha da[j] + beta = db[t].
                    let denom = &da[i] - &da[j];
                    let alpha = (&db[s] - &db[t]) / denom.clone();
                    if num::Zero::is_zero(&alpha) {
                        continue;
                    }
                    let beta = &db[s] - &alpha * &da[i];
                    if check(&alpha, &beta) {
                        return Some((alpha, beta));
                    }
                }
            }
        }
    }
    None
}

#[derive(Debug, Clone, Serialize)]
pub struct Rank2Report {
    pub coxeter_number: u32,
    pub shifted_fixed_roots: Vec<String>,
    pub cyclic_roots: Vec<String>,
    pub singular_type: String,
    pub pass: bool,
}

/// Compares the fixed variety `(z^2 - d^2) z^(d-2) = xy` of a rank-2 group
/// at its Coxeter number `d`, shifted by `z' = z + d`, with the cyclic space
/// of `mu_d` at the stated parameter: the root multisets must agree exactly.
pub fn rank2_fixed_check(which: Rank2) -> Rank2Report {
    let (d, k) = rank2_datum(which);
    // Roots of (z^2 - d^2) z^(d-2): {d, -d, 0 repeated d-2 times}, shifted.
    let mut shifted: Vec<Rational> = vec![rat(2 * d as i64), rat(0)];
    shifted.extend(std::iter::repeat_n(rat(d as i64), d as usize - 2));
    shifted.sort();
    let cyclic = cyclic_cm(d, &k.orbits[0]).expect("parameter length matches");
    let pass = shifted == cyclic.root_values;
    let report = singularity_report(&cyclic);
    let singular_type = report
        .singular
        .iter()
        .map(|(r, t)| format!("{t} at {r}"))
        .collect::<Vec<_>>()
        .join(", ");
    Rank2Report {
        coxeter_number: d,
        shifted_fixed_roots: shifted.iter().map(format_rational).collect(),
        cyclic_roots: cyclic.roots.clone(),
        singular_type,
        pass,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn zero_parameter_is_quotient_singularity() {
        let space = cyclic_cm(5, &vec![rat(0); 5]).unwrap();
        let report = singularity_report(&space);
        assert_eq!(report.multiplicities, vec![("0".to_string(), 5)]);
        assert_eq!(report.singular, vec![("0".to_string(), "A4".to_string())]);
        assert_eq!(report.fixed_points.len(), 1);
    }

    #[test]
    fn two_block_parameter() {
        // k = (0,...,0,1,...,1) with p zeros gives z^p (z - m)^(m-p).
        let m = 5u32;
        let p = 2usize;
        let mut k = vec![rat(0); p];
        k.extend(std::iter::repeat_n(rat(1), m as usize - p));
        let space = cyclic_cm(m, &k).unwrap();
        let report = singularity_report(&space);
        assert_eq!(
            report.singular,
            vec![
                ("0".to_string(), "A1".to_string()),
                ("5".to_string(), "A2".to_string())
            ]
        );
    }

    #[test]
    fn smooth_case() {
        let space = cyclic_cm(2, &[rat(3), rat(0)]).unwrap();
        assert_eq!(space.roots, vec!["0", "6"]);
        assert!(singularity_report(&space).singular.is_empty());
        assert!(cyclic_cm(2, &[rat(1)]).is_err());
    }

    #[test]
    fn affine_matching() {
        // Same multiset: identity map.
        let a = cyclic_cm(3, &[rat(0), rat(1), rat(2)]).unwrap();
        let rotated = cyclic_cm(3, &[rat(1), rat(2), rat(0)]).unwrap();
        assert_eq!(iso_up_to_affine(&a, &rotated), Some((rat(1), rat(0))));
        // Shift by -4: the rank-2 shape.
        let b = cyclic_cm(4, &[rat(0), rat(1), rat(1), rat(2)]).unwrap();
        let c = cyclic_cm(4, &[rat(-1), rat(0), rat(0), rat(1)]).unwrap();
        assert_eq!(iso_up_to_affine(&b, &c), Some((rat(1), rat(-4))));
        // Roots {0,0,1} vs {0,1,1}: the reversal z -> 1 - z matches them
        // (the multiplicity multisets agree).
        let d = cyclic_cm(3, &[rat(0), rat(0), ratio(1, 3)]).unwrap();
        let e = cyclic_cm(3, &[rat(0), ratio(1, 3), ratio(1, 3)]).unwrap();
        assert_eq!(iso_up_to_affine(&d, &e), Some((rat(-1), rat(1))));
        // Genuinely different multiplicity profiles cannot match.
        let f = cyclic_cm(3, &[rat(0), ratio(1, 3), ratio(2, 3)]).unwrap();
        assert!(iso_up_to_affine(&d, &f).is_none());
        assert!(iso_up_to_affine(&f, &d).is_none());
        // Symmetry on a sample.
        assert!(iso_up_to_affine(&c, &b).is_some());
        assert!(iso_up_to_affine(&d, &d).is_some());
    }

    #[test]
    fn multiplicities_sum_to_order() {
        for (m, k) in [
            (3u32, vec![rat(0), rat(0), rat(1)]),
            (5, vec![rat(2); 5]),
            (4, vec![rat(3), rat(0), rat(1), rat(0)]),
        ] {
            let space = cyclic_cm(m, &k).unwrap();
            let report = singularity_report(&space);
            let total: u32 = report.multiplicities.iter().map(|(_, c)| c).sum();
            assert_eq!(total, m);
        }
    }

    #[test]
    fn rank2_matching() {
        let b2 = rank2_fixed_check(Rank2::B2);
        assert!(b2.pass);
        assert_eq!(b2.shifted_fixed_roots, vec!["0", "4", "4", "8"]);
        assert_eq!(b2.singular_type, "A1 at 4");
        let g2 = rank2_fixed_check(Rank2::G2);
        assert!(g2.pass);
        assert_eq!(g2.shifted_fixed_roots, vec!["0", "6", "6", "6", "6", "12"]);
        assert_eq!(g2.singular_type, "A3 at 6");
    }
}
