//! Character tables of B2, G2 and G4, built by brute force from explicit
//! generator matrices: the group is enumerated, partitioned into conjugacy
//! classes, and each named representation is evaluated by multiplying its
//! generator images along the word spelling each class representative.

use std::fmt;

use serde::Serialize;

use crate::exact::{rat, ratio, Cyclotomic, Rational};
use crate::linalg::{kernel_basis, kernel_dim, Matrix};

use super::group::EnumeratedGroup;
use super::{
    CharacterTable, ClassData, ClassLabel, GroupDescriptor, GroupKind, IrrLabel, ReflectionOrbit,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Hardcoded {
    B2,
    G2,
    G4,
}

impl fmt::Display for Hardcoded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hardcoded::B2 => write!(f, "B2"),
            Hardcoded::G2 => write!(f, "G2"),
            Hardcoded::G4 => write!(f, "G4"),
        }
    }
}

fn m2(conductor: u32, entries: [[Cyclotomic; 2]; 2]) -> Matrix {
    let _ = conductor;
    Matrix::from_rows(entries.into_iter().map(|r| r.to_vec()).collect())
}

fn cr(r: Rational) -> Cyclotomic {
    Cyclotomic::from_rational(r)
}

fn ci(n: i64) -> Cyclotomic {
    cr(rat(n))
}

/// Symmetric square of a 2x2 matrix on the basis (e1^2, e1e2, e2^2).
fn sym_square(a: &Matrix) -> Matrix {
    assert_eq!((a.rows, a.cols), (2, 2));
    let (p, q) = (a.at(0, 0), a.at(0, 1));
    let (r, s) = (a.at(1, 0), a.at(1, 1));
    let two = ci(2);
    Matrix::from_rows(vec![
        vec![p.mul(p), p.mul(q), q.mul(q)],
        vec![
            two.mul(&p.mul(r)),
            p.mul(s).add(&q.mul(r)),
            two.mul(&q.mul(s)),
        ],
        vec![r.mul(r), r.mul(s), s.mul(s)],
    ])
}

fn dual(a: &Matrix) -> Matrix {
    a.inverse().transpose()
}

struct NamedRep {
    label: IrrLabel,
    gens: Vec<Matrix>,
    dim: usize,
}

impl NamedRep {
    fn new(label: IrrLabel, gens: Vec<Matrix>) -> Self {
        let dim = gens[0].rows;
        NamedRep { label, gens, dim }
    }

    fn trace_at(&self, word: &[usize]) -> Cyclotomic {
        let mut m = Matrix::identity(self.dim);
        for &g in word {
            m = m.mul(&self.gens[g]);
        }
        m.trace()
    }
}

struct Blueprint {
    gens: Vec<Matrix>,
    reps: Vec<NamedRep>,
    expected_order: usize,
}

fn blueprint(which: Hardcoded) -> Blueprint {
    match which {
        Hardcoded::B2 => {
            let swap = m2(1, [[ci(0), ci(1)], [ci(1), ci(0)]]);
            let flip = m2(1, [[ci(-1), ci(0)], [ci(0), ci(1)]]);
            let lin = |a: i64, b: i64| {
                NamedRep::new(
                    IrrLabel::Named(
                        match (a, b) {
                            (1, 1) => "1",
                            (-1, -1) => "eps",
                            (-1, 1) => "eps_s",
                            (1, -1) => "eps_t",
                            _ => unreachable!(),
                        }
                        .to_string(),
                    ),
                    vec![
                        Matrix::from_rows(vec![vec![ci(a)]]),
                        Matrix::from_rows(vec![vec![ci(b)]]),
                    ],
                )
            };
            Blueprint {
                gens: vec![swap.clone(), flip.clone()],
                reps: vec![
                    lin(1, 1),
                    lin(-1, -1),
                    lin(-1, 1),
                    lin(1, -1),
                    NamedRep::new(IrrLabel::Named("V".to_string()), vec![swap, flip]),
                ],
                expected_order: 8,
            }
        }
        Hardcoded::G2 => {
            // Dihedral of order 12 over Q(zeta_12): s the x-axis reflection,
            // t = s * (rotation by pi/3).
            let z = |k: i64| Cyclotomic::root_of_unity(12, k);
            let half = ratio(1, 2);
            // cos(pi/3) = 1/2, sin(pi/3) = sqrt(3)/2, sqrt(3) = z + z^-1.
            let sqrt3 = z(1).add(&z(-1));
            let c = cr(half.clone());
            let sn = sqrt3.scale(&half);
            let s = m2(12, [[ci(1), ci(0)], [ci(0), ci(-1)]]);
            let t = m2(12, [[c.clone(), sn.neg()], [sn.neg(), c.neg()]]);
            // The second two-dimensional representation sends the rotation
            // st to the rotation by 2pi/3.
            let c2 = cr(-half.clone());
            let sn2 = sqrt3.scale(&half);
            let t2 = m2(12, [[c2.clone(), sn2.neg()], [sn2.neg(), c2.neg()]]);
            let lin = |a: i64, b: i64, name: &str| {
                NamedRep::new(
                    IrrLabel::Named(name.to_string()),
                    vec![
                        Matrix::from_rows(vec![vec![ci(a)]]),
                        Matrix::from_rows(vec![vec![ci(b)]]),
                    ],
                )
            };
            Blueprint {
                gens: vec![s.clone(), t.clone()],
                reps: vec![
                    lin(1, 1, "1"),
                    lin(-1, -1, "eps"),
                    lin(-1, 1, "eps_s"),
                    lin(1, -1, "eps_t"),
                    NamedRep::new(IrrLabel::Named("V".to_string()), vec![s.clone(), t]),
                    NamedRep::new(IrrLabel::Named("V2".to_string()), vec![s, t2]),
                ],
                expected_order: 12,
            }
        }
        Hardcoded::G4 => {
            let z3 = Cyclotomic::root_of_unity(3, 1);
            let third = ratio(1, 3);
            let s = m2(3, [[ci(1), ci(0)], [ci(0), z3.clone()]]);
            // (1/3) [[2w+1, 2(w-1)], [w-1, w+2]] with w = zeta_3.
            let t = m2(
                3,
                [
                    [
                        z3.scale(&rat(2)).add(&ci(1)).scale(&third),
                        z3.sub(&ci(1)).scale(&rat(2)).scale(&third),
                    ],
                    [
                        z3.sub(&ci(1)).scale(&third),
                        z3.add(&ci(2)).scale(&third),
                    ],
                ],
            );
            let det = NamedRep::new(
                IrrLabel::DegreeB { degree: 1, b: 4 },
                vec![
                    Matrix::from_rows(vec![vec![z3.clone()]]),
                    Matrix::from_rows(vec![vec![z3.clone()]]),
                ],
            );
            let det2 = NamedRep::new(
                IrrLabel::DegreeB { degree: 1, b: 8 },
                vec![
                    Matrix::from_rows(vec![vec![z3.mul(&z3)]]),
                    Matrix::from_rows(vec![vec![z3.mul(&z3)]]),
                ],
            );
            let scale_mat = |m: &Matrix, c: &Cyclotomic| {
                let mut out = m.clone();
                for x in out.data.iter_mut() {
                    *x = x.mul(c);
                }
                out
            };
            Blueprint {
                gens: vec![s.clone(), t.clone()],
                reps: vec![
                    NamedRep::new(
                        IrrLabel::DegreeB { degree: 1, b: 0 },
                        vec![
                            Matrix::from_rows(vec![vec![ci(1)]]),
                            Matrix::from_rows(vec![vec![ci(1)]]),
                        ],
                    ),
                    det,
                    det2,
                    NamedRep::new(
                        IrrLabel::DegreeB { degree: 2, b: 1 },
                        vec![s.clone(), t.clone()],
                    ),
                    NamedRep::new(
                        IrrLabel::DegreeB { degree: 2, b: 3 },
                        vec![dual(&s), dual(&t)],
                    ),
                    NamedRep::new(
                        IrrLabel::DegreeB { degree: 2, b: 5 },
                        vec![scale_mat(&s, &z3), scale_mat(&t, &z3)],
                    ),
                    NamedRep::new(
                        IrrLabel::DegreeB { degree: 3, b: 2 },
                        vec![sym_square(&s), sym_square(&t)],
                    ),
                ],
                expected_order: 24,
            }
        }
    }
}

/// Class name from invariants: generator membership where possible,
/// otherwise order and determinant.
fn class_names(
    which: Hardcoded,
    group: &EnumeratedGroup<Matrix>,
    gens: &[Matrix],
) -> Vec<String> {
    let n_classes = group.classes.len();
    let mut names = vec![String::new(); n_classes];
    let class_of_element =
        |e: &Matrix| -> usize { group.class_of[group.elements.iter().position(|x| x == e).unwrap()] as usize };
    names[0] = "1".to_string();
    let minus_id = {
        let mut m = Matrix::identity(gens[0].rows);
        for x in m.data.iter_mut() {
            *x = x.neg();
        }
        m
    };
    if let Some(i) = group.elements.iter().position(|x| *x == minus_id) {
        names[group.class_of[i] as usize] = "z".to_string();
    }
    let s_class = class_of_element(&gens[0]);
    let t_class = class_of_element(&gens[1]);
    match which {
        Hardcoded::G4 => {
            names[s_class] = "s".to_string();
            // Powers and central twists of s.
            let s_idx = group.elements.iter().position(|x| *x == gens[0]).unwrap();
            let s2 = group.power(s_idx, 2) as usize;
            names[group.class_of[s2] as usize] = "s2".to_string();
            if let Some(zi) = group.elements.iter().position(|x| *x == minus_id) {
                let zs = group.mult[zi][s_idx] as usize;
                names[group.class_of[zs] as usize] = "zs".to_string();
                let zs2 = group.mult[zi][s2] as usize;
                names[group.class_of[zs2] as usize] = "zs2".to_string();
            }
            for (c, name) in names.iter_mut().enumerate() {
                if name.is_empty() {
                    let order = group.element_order(group.classes[c][0] as usize);
                    *name = format!("ord{}", order);
                }
            }
        }
        Hardcoded::B2 | Hardcoded::G2 => {
            names[s_class] = "s".to_string();
            names[t_class] = "t".to_string();
            for (c, name) in names.iter_mut().enumerate() {
                if name.is_empty() {
                    let order = group.element_order(group.classes[c][0] as usize);
                    *name = format!("r{}", order);
                }
            }
        }
    }
    names
}

/// Builds the reflection-orbit data of a matrix reflection group: for every
/// orbit of reflecting hyperplanes, the pointwise stabilizer order `e`, the
/// orbit size, and the classes of the powers of the distinguished generator
/// (the one of determinant `zeta_e`).
fn reflection_orbits(group: &EnumeratedGroup<Matrix>, rank: usize) -> Vec<ReflectionOrbit> {
    // Identify reflections and their fixed hyperplanes (canonical spanning
    // vector of the fixed space when rank = 2: a 1-dimensional line).
    let canonical = |v: &[Cyclotomic]| -> Vec<Cyclotomic> {
        let lead = v.iter().find(|c| !c.is_zero()).expect("nonzero vector");
        let inv = lead.inverse().unwrap();
        v.iter().map(|c| c.mul(&inv)).collect()
    };
    let mut hyperplanes: Vec<Vec<Cyclotomic>> = Vec::new();
    let mut members: Vec<Vec<usize>> = Vec::new();
    for (i, m) in group.elements.iter().enumerate() {
        let diff = m.sub(&Matrix::identity(rank));
        if rank - kernel_dim(&diff) != 1 {
            continue;
        }
        let rows: Vec<Vec<Cyclotomic>> = (0..diff.rows).map(|r| diff.row(r).to_vec()).collect();
        let fixed = canonical(&kernel_basis(&rows, rank)[0]);
        match hyperplanes.iter().position(|h| *h == fixed) {
            Some(idx) => members[idx].push(i),
            None => {
                hyperplanes.push(fixed);
                members.push(vec![i]);
            }
        }
    }
    // Orbits of hyperplanes under the group action.
    let mut orbit_of = vec![usize::MAX; hyperplanes.len()];
    let mut n_orbits = 0;
    for h in 0..hyperplanes.len() {
        if orbit_of[h] != usize::MAX {
            continue;
        }
        for g in &group.elements {
            let image = canonical(&g.mul_vec(&hyperplanes[h]));
            let idx = hyperplanes.iter().position(|x| *x == image).unwrap();
            orbit_of[idx] = n_orbits;
        }
        n_orbits += 1;
    }
    let mut orbits = Vec::new();
    for o in 0..n_orbits {
        let in_orbit: Vec<usize> = (0..hyperplanes.len()).filter(|&h| orbit_of[h] == o).collect();
        let h0 = in_orbit[0];
        let e = members[h0].len() as u32 + 1;
        // Distinguished generator: determinant zeta_e.
        let zeta = Cyclotomic::root_of_unity(e, 1);
        let s_h = *members[h0]
            .iter()
            .find(|&&i| group.elements[i].determinant() == zeta)
            .expect("a generator of each stabilizer has determinant zeta_e");
        let power_classes = (1..e)
            .map(|a| group.class_of[group.power(s_h, a) as usize] as usize)
            .collect();
        orbits.push(ReflectionOrbit {
            label: format!("orbit{}", o),
            e,
            size: in_orbit.len() as u64,
            power_classes,
        });
    }
    orbits.sort_by_key(|o| (o.e, o.power_classes.clone()));
    orbits
}

/// The full character table of one of the hardcoded groups.
pub fn table_hardcoded(which: Hardcoded) -> CharacterTable {
    let bp = blueprint(which);
    let group = EnumeratedGroup::close(
        Matrix::identity(bp.gens[0].rows),
        &bp.gens,
        |a: &Matrix, b: &Matrix| a.mul(b),
    );
    assert_eq!(group.order(), bp.expected_order, "group closure size");
    let rank = bp.gens[0].rows;

    let names = class_names(which, &group, &bp.gens);
    let classes: Vec<ClassData> = group
        .classes
        .iter()
        .zip(&names)
        .map(|(members, name)| {
            let rep = group.elements[members[0] as usize].clone();
            let cod = rank - kernel_dim(&rep.sub(&Matrix::identity(rank)));
            ClassData {
                label: ClassLabel::Named(name.clone()),
                size: members.len() as u64,
                cod: cod as u32,
            }
        })
        .collect();

    let values: Vec<Vec<Cyclotomic>> = bp
        .reps
        .iter()
        .map(|rep| {
            group
                .classes
                .iter()
                .map(|members| rep.trace_at(&group.words[members[0] as usize]))
                .collect()
        })
        .collect();

    let inverse_class = group
        .classes
        .iter()
        .map(|members| group.class_of[group.inverse[members[0] as usize] as usize] as usize)
        .collect();

    let table = CharacterTable {
        group: GroupDescriptor {
            kind: GroupKind::Hardcoded(which),
            order: bp.expected_order as u64,
            rank: rank as u32,
        },
        classes,
        irreducibles: bp.reps.iter().map(|r| r.label.clone()).collect(),
        values,
        reflection_orbits: reflection_orbits(&group, rank),
        inverse_class,
    };
    // The construction is brute force; fail loudly if the named
    // representations do not form the full dual.
    let degsum: u64 = (0..table.irreducibles.len())
        .map(|i| table.degree(i) * table.degree(i))
        .sum();
    assert_eq!(degsum, table.order(), "degrees must square-sum to |W|");
    table
}

/// The enumerated matrix group itself (elements, classes, multiplication),
/// for structure-constant computations.
pub fn hardcoded_group(which: Hardcoded) -> EnumeratedGroup<Matrix> {
    let bp = blueprint(which);
    EnumeratedGroup::close(
        Matrix::identity(bp.gens[0].rows),
        &bp.gens,
        |a: &Matrix, b: &Matrix| a.mul(b),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g4_shape() {
        let t = table_hardcoded(Hardcoded::G4);
        assert_eq!(t.order(), 24);
        assert_eq!(t.num_classes(), 7);
        let mut degrees: Vec<u64> = (0..7).map(|i| t.degree(i)).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![1, 1, 1, 2, 2, 2, 3]);
        assert_eq!(t.reflection_count(), 8);
        assert_eq!(t.reflection_orbits.len(), 1);
        assert_eq!(t.reflection_orbits[0].e, 3);
        assert_eq!(t.reflection_orbits[0].size, 4);
        t.check_orthogonality().unwrap();
    }

    #[test]
    fn g4_reflection_value() {
        // The reflection representation evaluated on the diagonal generator
        // s = diag(1, zeta_3) has trace 1 + zeta_3.
        let t = table_hardcoded(Hardcoded::G4);
        let v = t.irr_index(&IrrLabel::DegreeB { degree: 2, b: 1 }).unwrap();
        let s = t.class_index(&ClassLabel::Named("s".to_string())).unwrap();
        let expected = Cyclotomic::one(3).add(&Cyclotomic::root_of_unity(3, 1));
        assert_eq!(t.values[v][s], expected);
        assert_eq!(t.classes[s].cod, 1);
    }

    #[test]
    fn b2_shape() {
        let t = table_hardcoded(Hardcoded::B2);
        assert_eq!(t.order(), 8);
        assert_eq!(t.num_classes(), 5);
        assert_eq!(t.reflection_orbits.len(), 2);
        assert!(t.reflection_orbits.iter().all(|o| o.e == 2));
        assert_eq!(t.reflection_count(), 4);
        t.check_orthogonality().unwrap();
    }

    #[test]
    fn g2_shape() {
        let t = table_hardcoded(Hardcoded::G2);
        assert_eq!(t.order(), 12);
        assert_eq!(t.num_classes(), 6);
        assert_eq!(t.reflection_orbits.len(), 2);
        assert_eq!(t.reflection_count(), 6);
        assert!(t
            .reflection_orbits
            .iter()
            .all(|o| o.e == 2 && o.size == 3));
        t.check_orthogonality().unwrap();
    }
}
