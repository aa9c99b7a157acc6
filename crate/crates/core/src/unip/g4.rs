//! The G4 spets datum: ten unipotent data with exact degrees over the
//! twelfth cyclotomic field, four families, the series decompositions at
//! d = 1, 4, 6 with their cuspidal pairs and parameters, and the internal
//! consistency report tying degrees, cuspidality, families, and the Euler
//! invariant together.

use serde::Serialize;

use crate::chartab::{table_hardcoded, Hardcoded};
use crate::cmfam::{euler_invariant, hardcoded_cm_families, spetsial_parameter, Parameter};
use crate::exact::{cyclotomic_polynomial, rat, ratio, Cyclotomic, UniPoly};

use super::{degree_span, CuspidalPair, GenericUnipotent, RelativeGroup};

/// Everything the datum carries: the unipotent list, the family partition,
/// and the series blocks per d.
#[derive(Debug, Clone)]
pub struct SpetsDatum {
    pub unipotents: Vec<GenericUnipotent>,
    /// Family name -> member labels.
    pub families: Vec<(String, Vec<String>)>,
    /// Per d in {1, 4, 6}: the series blocks (cuspidal data are singleton
    /// blocks whose pair has a trivial relative group).
    pub series: Vec<(u32, Vec<G4SeriesBlock>)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct G4SeriesBlock {
    pub pair: CuspidalPair,
    pub members: Vec<String>,
}

impl SpetsDatum {
    pub fn unipotent(&self, label: &str) -> &GenericUnipotent {
        self.unipotents
            .iter()
            .find(|u| u.label == label)
            .expect("unknown unipotent label")
    }

    pub fn family_of(&self, label: &str) -> &str {
        self.families
            .iter()
            .find(|(_, members)| members.iter().any(|m| m == label))
            .map(|(name, _)| name.as_str())
            .expect("every label belongs to a family")
    }

    /// The members of the non-cuspidal series at d (the block whose relative
    /// group is nontrivial).
    pub fn principal_series_at(&self, d: u32) -> &G4SeriesBlock {
        let (_, blocks) = self
            .series
            .iter()
            .find(|(dd, _)| *dd == d)
            .expect("series tabulated for d in {1, 4, 6}");
        blocks
            .iter()
            .max_by_key(|b| b.members.len())
            .expect("nonempty series list")
    }

    /// Labels marked d-cuspidal (singleton blocks with trivial relative
    /// group whose cuspidal support is the full group).
    pub fn cuspidals_at(&self, d: u32) -> Vec<String> {
        let (_, blocks) = self.series.iter().find(|(dd, _)| *dd == d).unwrap();
        blocks
            .iter()
            .filter(|b| b.pair.parabolic == "G4")
            .flat_map(|b| b.members.clone())
            .collect()
    }
}

fn zeta12(k: i64) -> Cyclotomic {
    Cyclotomic::root_of_unity(12, k)
}

/// `sqrt(-3) = 2 zeta_3 + 1` inside the twelfth cyclotomic field.
fn sqrt_minus_three() -> Cyclotomic {
    zeta12(4).scale(&rat(2)).add(&Cyclotomic::one(12))
}

fn linear(root: Cyclotomic) -> UniPoly {
    UniPoly::from_roots(&[root])
}

fn phi(e: u32) -> UniPoly {
    cyclotomic_polynomial(e)
}

/// The ten degrees, expanded from their factored table forms into
/// polynomials with coefficients in the twelfth cyclotomic field.
fn degrees() -> Vec<(&'static str, UniPoly, &'static str)> {
    let s3 = sqrt_minus_three();
    let q = |k: usize, c: Cyclotomic| UniPoly::monomial(c, k);
    let phi3p = linear(zeta12(4)); // q - zeta_3
    let phi3pp = linear(zeta12(8)); // q - zeta_3^2
    let phi6p = linear(zeta12(2)); // q - zeta_6
    let phi6pp = linear(zeta12(-2)); // q - zeta_6^(-1)
    let sixth = ratio(1, 6);
    let third = ratio(1, 3);
    let half = ratio(1, 2);
    vec![
        ("rho(1,0)", UniPoly::one(), "club"),
        (
            "rho(1,4)",
            q(4, s3.neg().scale(&sixth))
                .mul(&phi3pp)
                .mul(&phi(4))
                .mul(&phi6pp),
            "spade",
        ),
        (
            "rho(1,8)",
            q(4, s3.scale(&sixth)).mul(&phi3p).mul(&phi(4)).mul(&phi6p),
            "spade",
        ),
        (
            "rho(2,1)",
            q(1, s3.add(&Cyclotomic::from_rational(rat(3))).scale(&sixth))
                .mul(&phi3p)
                .mul(&phi(4))
                .mul(&phi6pp),
            "heart",
        ),
        (
            "rho(2,3)",
            q(
                1,
                Cyclotomic::from_rational(rat(3)).sub(&s3).scale(&sixth),
            )
            .mul(&phi3pp)
            .mul(&phi(4))
            .mul(&phi6p),
            "heart",
        ),
        (
            "rho(2,5)",
            q(4, Cyclotomic::from_rational(half.clone()))
                .mul(&phi(2))
                .mul(&phi(2))
                .mul(&phi(6)),
            "spade",
        ),
        ("rho(3,2)", q(2, Cyclotomic::one(1)).mul(&phi(3)).mul(&phi(6)), "diamond"),
        (
            "rho(C3,+)",
            q(1, s3.neg().scale(&third))
                .mul(&phi(1))
                .mul(&phi(2))
                .mul(&phi(4)),
            "heart",
        ),
        (
            "rho(C3,-)",
            q(4, s3.neg().scale(&third))
                .mul(&phi(1))
                .mul(&phi(2))
                .mul(&phi(4)),
            "spade",
        ),
        (
            "cus[G4]",
            q(4, Cyclotomic::from_rational(-half))
                .mul(&phi(1))
                .mul(&phi(1))
                .mul(&phi(3)),
            "spade",
        ),
    ]
}

/// The G4 spets datum.
pub fn g4_datum() -> SpetsDatum {
    let rows = degrees();
    let unipotents: Vec<GenericUnipotent> = rows
        .iter()
        .map(|(label, degree, family)| {
            // The table is entered in factored form; the expansion must land
            // in the twelfth cyclotomic field.
            assert!(degree.coeffs().iter().all(|c| 12 % c.conductor() == 0));
            GenericUnipotent {
                label: label.to_string(),
                degree: degree.clone(),
                family: family.to_string(),
            }
        })
        .collect();
    let families = vec![
        ("club".to_string(), vec!["rho(1,0)".to_string()]),
        ("diamond".to_string(), vec!["rho(3,2)".to_string()]),
        (
            "heart".to_string(),
            vec![
                "rho(2,1)".to_string(),
                "rho(2,3)".to_string(),
                "rho(C3,+)".to_string(),
            ],
        ),
        (
            "spade".to_string(),
            vec![
                "rho(1,4)".to_string(),
                "rho(1,8)".to_string(),
                "rho(2,5)".to_string(),
                "rho(C3,-)".to_string(),
                "cus[G4]".to_string(),
            ],
        ),
    ];
    let strings = |labels: &[&str]| labels.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    let all = strings(&[
        "rho(1,0)", "rho(1,4)", "rho(1,8)", "rho(2,1)", "rho(2,3)", "rho(2,5)", "rho(3,2)",
    ]);
    let series = vec![
        (
            1,
            vec![
                G4SeriesBlock {
                    pair: CuspidalPair {
                        parabolic: "1".to_string(),
                        cuspidal: "1".to_string(),
                        relative: RelativeGroup::G4,
                        parameter: Parameter::from_ints(&[&[1, 0, 0]]),
                    },
                    members: all,
                },
                G4SeriesBlock {
                    pair: CuspidalPair {
                        parabolic: "C3".to_string(),
                        cuspidal: "cus[C3]".to_string(),
                        relative: RelativeGroup::Cyclic(2),
                        parameter: Parameter::from_ints(&[&[3, 0]]),
                    },
                    members: strings(&["rho(C3,+)", "rho(C3,-)"]),
                },
                G4SeriesBlock {
                    pair: CuspidalPair {
                        parabolic: "G4".to_string(),
                        cuspidal: "cus[G4]".to_string(),
                        relative: RelativeGroup::Trivial,
                        parameter: Parameter::new(vec![]),
                    },
                    members: strings(&["cus[G4]"]),
                },
            ],
        ),
        (
            4,
            {
                let mut blocks = vec![G4SeriesBlock {
                    pair: CuspidalPair {
                        parabolic: "1".to_string(),
                        cuspidal: "1".to_string(),
                        relative: RelativeGroup::Cyclic(4),
                        parameter: Parameter::from_ints(&[&[3, 0, 1, 0]]),
                    },
                    members: strings(&["rho(1,0)", "rho(2,5)", "rho(3,2)", "cus[G4]"]),
                }];
                for label in ["rho(1,4)", "rho(1,8)", "rho(2,1)", "rho(2,3)", "rho(C3,+)", "rho(C3,-)"]
                {
                    blocks.push(G4SeriesBlock {
                        pair: CuspidalPair {
                            parabolic: "G4".to_string(),
                            cuspidal: label.to_string(),
                            relative: RelativeGroup::Trivial,
                            parameter: Parameter::new(vec![]),
                        },
                        members: strings(&[label]),
                    });
                }
                blocks
            },
        ),
        (
            6,
            {
                let mut blocks = vec![G4SeriesBlock {
                    pair: CuspidalPair {
                        parabolic: "1".to_string(),
                        cuspidal: "1".to_string(),
                        relative: RelativeGroup::Cyclic(6),
                        parameter: Parameter::from_ints(&[&[2, 0, 0, 1, 0, 1]]),
                    },
                    members: strings(&[
                        "rho(1,0)",
                        "rho(1,4)",
                        "rho(2,1)",
                        "rho(C3,+)",
                        "rho(C3,-)",
                        "cus[G4]",
                    ]),
                }];
                for label in ["rho(1,8)", "rho(2,3)", "rho(2,5)", "rho(3,2)"] {
                    blocks.push(G4SeriesBlock {
                        pair: CuspidalPair {
                            parabolic: "G4".to_string(),
                            cuspidal: label.to_string(),
                            relative: RelativeGroup::Trivial,
                            parameter: Parameter::new(vec![]),
                        },
                        members: strings(&[label]),
                    });
                }
                blocks
            },
        ),
    ];
    SpetsDatum {
        unipotents,
        families,
        series,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct G4Check {
    pub id: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct G4Report {
    pub checks: Vec<G4Check>,
    pub pass: bool,
}

/// The internal consistency of the datum:
/// membership in the nontrivial d-series matches non-divisibility of the
/// degree by `(q - zeta_d)` for d in {4, 6}; the span `a + A` of the degree
/// is constant on families; and `a + A` plus the Euler invariant of the
/// matching character family is 12 throughout.
pub fn g4_consistency() -> G4Report {
    let datum = g4_datum();
    let mut checks = Vec::new();

    // (i) d-cuspidality from degree divisibility.
    for d in [4u32, 6] {
        let zeta = Cyclotomic::root_of_unity(d, 1);
        let cuspidal = datum.cuspidals_at(d);
        for u in &datum.unipotents {
            let mult = u.degree.root_multiplicity(&zeta).unwrap();
            let marked = cuspidal.iter().any(|l| l == &u.label);
            checks.push(G4Check {
                id: format!("cuspidal-d{}-{}", d, u.label),
                pass: marked == (mult >= 1),
                detail: format!("multiplicity {mult}, marked cuspidal: {marked}"),
            });
        }
    }

    // (ii) a + A constant per family, with the stated values.
    let expected_span = [("club", 0), ("diamond", 8), ("heart", 6), ("spade", 12)];
    for (family, span) in expected_span {
        let members: Vec<&GenericUnipotent> = datum
            .unipotents
            .iter()
            .filter(|u| u.family == family)
            .collect();
        let pass = members.iter().all(|u| {
            degree_span(&u.degree).map(|(a, big_a)| a + big_a) == Some(span as u64)
        });
        checks.push(G4Check {
            id: format!("a-plus-A-{family}"),
            pass,
            detail: format!("expected a + A = {span}"),
        });
    }

    // (iii) a + A + Euler invariant = 12, pairing each unipotent family with
    // the character family of the same name.
    let table = table_hardcoded(Hardcoded::G4);
    let k = spetsial_parameter(&table);
    let char_families = hardcoded_cm_families(Hardcoded::G4);
    for (family, span) in expected_span {
        let (_, block) = char_families
            .blocks
            .iter()
            .find(|(name, _)| name == family)
            .expect("family names align");
        let i = table.irr_index(&block[0]).unwrap();
        let omega = euler_invariant(&table, &k, i).unwrap();
        let expected = Cyclotomic::from_rational(rat(12 - span));
        checks.push(G4Check {
            id: format!("euler-affine-{family}"),
            pass: omega == expected,
            detail: format!("a + A = {span}, euler = {omega}"),
        });
    }

    // The family blocks partition the ten labels.
    {
        let mut seen = std::collections::BTreeSet::new();
        let mut disjoint = true;
        for (_, members) in &datum.families {
            for m in members {
                disjoint &= seen.insert(m.clone());
            }
        }
        checks.push(G4Check {
            id: "family-partition".to_string(),
            pass: disjoint && seen.len() == datum.unipotents.len(),
            detail: format!("{} labels covered", seen.len()),
        });
    }

    // Series sizes match the relative groups' character counts.
    for (d, blocks) in &datum.series {
        for b in blocks {
            if let Some(count) = b.pair.relative.irreducible_count() {
                checks.push(G4Check {
                    id: format!("series-size-d{}-{}", d, b.pair.cuspidal),
                    pass: count as usize == b.members.len(),
                    detail: format!("{} members vs {} characters", b.members.len(), count),
                });
            }
        }
        // The blocks partition the ten labels.
        let mut seen = std::collections::BTreeSet::new();
        let mut disjoint = true;
        for b in blocks {
            for m in &b.members {
                disjoint &= seen.insert(m.clone());
            }
        }
        checks.push(G4Check {
            id: format!("series-partition-d{}", d),
            pass: disjoint && seen.len() == datum.unipotents.len(),
            detail: format!("{} labels covered", seen.len()),
        });
    }

    let pass = checks.iter().all(|c| c.pass);
    G4Report { checks, pass }
}
