//! Character tables of the wreath products `G(d,1,r)` (monomial matrices:
//! permutations with `d`-th-root-of-unity entries).

use crate::exact::Cyclotomic;
use crate::linalg::{kernel_dim, Matrix};
use crate::partitions::{multipartitions_of, MultiPartition, Partition};

use super::symmetric::centralizer_order;
use super::{
    CharacterTable, ChartabError, ClassData, ClassLabel, GroupDescriptor, GroupKind, IrrLabel,
    ReflectionOrbit,
};
use super::mn::wreath_character_value;

/// A monomial matrix: `e_i -> zeta_d^(colors[i]) e_(perm[i])`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WreathElement {
    pub d: u32,
    pub perm: Vec<usize>,
    pub colors: Vec<u32>,
}

impl WreathElement {
    pub fn identity(d: u32, r: usize) -> Self {
        WreathElement {
            d,
            perm: (0..r).collect(),
            colors: vec![0; r],
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.d, other.d);
        let r = self.perm.len();
        let mut perm = vec![0; r];
        let mut colors = vec![0; r];
        for i in 0..r {
            perm[i] = self.perm[other.perm[i]];
            colors[i] = (other.colors[i] + self.colors[other.perm[i]]) % self.d;
        }
        WreathElement {
            d: self.d,
            perm,
            colors,
        }
    }

    pub fn inverse(&self) -> Self {
        let r = self.perm.len();
        let mut perm = vec![0; r];
        let mut colors = vec![0; r];
        for i in 0..r {
            perm[self.perm[i]] = i;
            colors[self.perm[i]] = (self.d - self.colors[i]) % self.d;
        }
        WreathElement {
            d: self.d,
            perm,
            colors,
        }
    }

    /// Cycle type with colors: cycle lengths grouped by the sum of the
    /// colors along each cycle.
    pub fn class_label(&self) -> MultiPartition {
        let r = self.perm.len();
        let mut seen = vec![false; r];
        let mut per_color: Vec<Vec<u32>> = vec![Vec::new(); self.d as usize];
        for start in 0..r {
            if seen[start] {
                continue;
            }
            let mut len = 0u32;
            let mut color = 0u32;
            let mut i = start;
            loop {
                seen[i] = true;
                len += 1;
                color = (color + self.colors[i]) % self.d;
                i = self.perm[i];
                if i == start {
                    break;
                }
            }
            per_color[color as usize].push(len);
        }
        MultiPartition::new(
            per_color
                .into_iter()
                .map(|mut parts| {
                    parts.sort_unstable_by(|a, b| b.cmp(a));
                    Partition::new(parts)
                })
                .collect(),
        )
    }

    /// The monomial matrix over `Q(zeta_d)`.
    pub fn matrix(&self) -> Matrix {
        let r = self.perm.len();
        let mut m = Matrix::zero(r, r);
        for (i, (&j, &c)) in self.perm.iter().zip(&self.colors).enumerate() {
            *m.at_mut(j, i) = Cyclotomic::root_of_unity(self.d, c as i64);
        }
        m
    }
}

/// A standard representative of the class labelled by `mu`: cycles laid out
/// consecutively, the color placed on the closing entry of each cycle.
pub fn wreath_class_representative(mu: &MultiPartition, d: u32) -> WreathElement {
    let r = mu.size() as usize;
    let mut perm: Vec<usize> = (0..r).collect();
    let mut colors = vec![0u32; r];
    let mut next = 0usize;
    for (c, comp) in mu.components().iter().enumerate() {
        for &len in comp.parts() {
            let len = len as usize;
            for k in 0..len - 1 {
                perm[next + k] = next + k + 1;
            }
            perm[next + len - 1] = next;
            colors[next + len - 1] = c as u32;
            next += len;
        }
    }
    WreathElement { d, perm, colors }
}

fn pow_u64(base: u64, exp: u32) -> u64 {
    (0..exp).fold(1u64, |acc, _| acc * base)
}

/// Character table of `G(d,1,r)` with `d*r <= 12`.
///
/// Classes and irreducibles are both indexed by `d`-multipartitions of `r`.
pub fn table_wreath(d: u32, r: u32) -> Result<CharacterTable, ChartabError> {
    if d == 0 || r == 0 || d * r > 12 {
        return Err(ChartabError::SizeCap(format!(
            "G({d},1,{r}) not supported (need d,r >= 1 and d*r <= 12)"
        )));
    }
    let labels = multipartitions_of(r as u64, d);
    let order = pow_u64(d as u64, r) * (1..=r as u64).product::<u64>();

    // Classes sorted by increasing codimension (identity first), then label.
    let mut class_types = labels.clone();
    class_types.sort_by_key(|mu| (r - mu.component(0).len() as u32, mu.clone()));

    let mut classes = Vec::with_capacity(class_types.len());
    for mu in &class_types {
        let mut centralizer = 1u64;
        for comp in mu.components() {
            centralizer *= centralizer_order(comp) * pow_u64(d as u64, comp.len() as u32);
        }
        // cod from the monomial realization: rank minus the fixed-space
        // dimension of a representative.
        let rep = wreath_class_representative(mu, d);
        let m = rep.matrix().sub(&Matrix::identity(r as usize));
        let cod = r - kernel_dim(&m) as u32;
        debug_assert_eq!(cod, r - mu.component(0).len() as u32);
        classes.push(ClassData {
            label: ClassLabel::Multi(mu.clone()),
            size: order / centralizer,
            cod,
        });
    }

    let values: Vec<Vec<Cyclotomic>> = labels
        .iter()
        .map(|lambda| {
            class_types
                .iter()
                .map(|mu| wreath_character_value(lambda, mu, d))
                .collect()
        })
        .collect();

    let mut reflection_orbits = Vec::new();
    if d >= 2 {
        // Diagonal reflections diag(1, ..., zeta_d^a, ..., 1).
        let mut power_classes = Vec::new();
        for a in 1..d {
            let mut comps = vec![Partition::empty(); d as usize];
            if r >= 2 {
                comps[0] = Partition::new(vec![1; r as usize - 1]);
            }
            comps[a as usize] = Partition::new(vec![1]);
            let label = ClassLabel::Multi(MultiPartition::new(comps));
            let idx = classes
                .iter()
                .position(|c| c.label == label)
                .expect("diagonal power class exists");
            power_classes.push(idx);
        }
        reflection_orbits.push(ReflectionOrbit {
            label: "diagonal".to_string(),
            e: d,
            size: r as u64,
            power_classes,
        });
    }
    if r >= 2 {
        // Reflections swapping two coordinates up to a color.
        let mut parts = vec![2u32];
        parts.extend(std::iter::repeat_n(1, r as usize - 2));
        let mut comps = vec![Partition::empty(); d as usize];
        comps[0] = Partition::new(parts);
        let label = ClassLabel::Multi(MultiPartition::new(comps));
        let idx = classes
            .iter()
            .position(|c| c.label == label)
            .expect("transposition class exists");
        reflection_orbits.push(ReflectionOrbit {
            label: "transpositions".to_string(),
            e: 2,
            size: d as u64 * r as u64 * (r as u64 - 1) / 2,
            power_classes: vec![idx],
        });
    }

    // Inverting an element negates the color of every cycle.
    let inverse_class: Vec<usize> = class_types
        .iter()
        .map(|mu| {
            let mut comps = vec![Partition::empty(); d as usize];
            for (c, comp) in mu.components().iter().enumerate() {
                let target = (d as usize - c) % d as usize;
                comps[target] = comp.clone();
            }
            let label = ClassLabel::Multi(MultiPartition::new(comps));
            class_types
                .iter()
                .position(|l| ClassLabel::Multi(l.clone()) == label)
                .expect("inverse class exists")
        })
        .collect();

    Ok(CharacterTable {
        group: GroupDescriptor {
            kind: GroupKind::Wreath(d, r),
            order,
            rank: r,
        },
        classes,
        irreducibles: labels.into_iter().map(IrrLabel::Multi).collect(),
        values,
        reflection_orbits,
        inverse_class,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn cyclic_table_is_fourier_matrix() {
        for d in [2u32, 3, 4, 6] {
            let t = table_wreath(d, 1).unwrap();
            assert_eq!(t.num_classes(), d as usize);
            // chi_i(c_j) = zeta_d^(i*j) under the single-cell labelling.
            for (i, lam) in t.irreducibles.iter().enumerate() {
                let comp_i = match lam {
                    IrrLabel::Multi(m) => {
                        m.components().iter().position(|p| !p.is_empty()).unwrap()
                    }
                    _ => unreachable!(),
                };
                for (j, class) in t.classes.iter().enumerate() {
                    let comp_j = match &class.label {
                        ClassLabel::Multi(m) => {
                            m.components().iter().position(|p| !p.is_empty()).unwrap()
                        }
                        _ => unreachable!(),
                    };
                    assert_eq!(
                        t.values[i][j],
                        Cyclotomic::root_of_unity(d, (comp_i * comp_j) as i64)
                    );
                }
            }
        }
    }

    #[test]
    fn degenerates_to_symmetric() {
        for r in 1..=6u32 {
            let w = table_wreath(1, r).unwrap();
            let s = super::super::table_symmetric(r).unwrap();
            assert_eq!(w.num_classes(), s.num_classes());
            for (i, lam) in w.irreducibles.iter().enumerate() {
                let IrrLabel::Multi(m) = lam else { unreachable!() };
                let si = s.irr_index(&IrrLabel::Par(m.component(0).clone())).unwrap();
                for (j, class) in w.classes.iter().enumerate() {
                    let ClassLabel::Multi(cm) = &class.label else {
                        unreachable!()
                    };
                    let sj = s
                        .class_index(&ClassLabel::Cycles(cm.component(0).clone()))
                        .unwrap();
                    assert_eq!(w.values[i][j], s.values[si][sj]);
                    assert_eq!(class.size, s.classes[sj].size);
                    assert_eq!(class.cod, s.classes[sj].cod);
                }
            }
        }
    }

    #[test]
    fn degrees_are_multinomial_times_tableaux() {
        let t = table_wreath(2, 3).unwrap();
        let id = t.identity_class();
        let mut total = 0u64;
        for i in 0..t.irreducibles.len() {
            let deg = t.values[i][id].to_rational().unwrap();
            assert!(deg > rat(0));
            let d = u64::try_from(deg.numer().clone()).unwrap();
            total += d * d;
        }
        assert_eq!(total, t.order());
    }

    #[test]
    fn reflection_counts() {
        let t = table_wreath(3, 2).unwrap();
        // 2 diagonal hyperplanes of order 3 plus 3 transposition hyperplanes.
        assert_eq!(t.reflection_count(), 2 * 2 + 3);
        let t = table_wreath(2, 2).unwrap();
        assert_eq!(t.reflection_count(), 2 + 2);
    }

    #[test]
    fn element_arithmetic() {
        let a = wreath_class_representative(
            &MultiPartition::parse("2|1").unwrap(),
            2,
        );
        let b = a.inverse();
        assert_eq!(a.mul(&b), WreathElement::identity(2, 3));
        assert_eq!(a.class_label(), MultiPartition::parse("2|1").unwrap());
        // Conjugation preserves the class label.
        let g = WreathElement {
            d: 2,
            perm: vec![1, 2, 0],
            colors: vec![1, 0, 1],
        };
        let conj = g.mul(&a).mul(&g.inverse());
        assert_eq!(conj.class_label(), a.class_label());
    }

    #[test]
    fn size_caps() {
        assert!(table_wreath(3, 5).is_err());
        assert!(table_wreath(0, 1).is_err());
    }
}
