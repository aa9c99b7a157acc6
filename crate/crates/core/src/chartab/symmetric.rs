//! Symmetric-group character tables.

use crate::exact::{rat, Cyclotomic};
use crate::partitions::{partitions_of, Partition};

use super::mn::symmetric_character_value;
use super::{
    CharacterTable, ChartabError, ClassData, ClassLabel, GroupDescriptor, GroupKind, IrrLabel,
    ReflectionOrbit,
};

fn factorial(n: u32) -> u64 {
    (1..=n as u64).product()
}

/// Centralizer order of a cycle type: `prod i^(m_i) m_i!`.
pub(crate) fn centralizer_order(cycles: &Partition) -> u64 {
    let mut z = 1u64;
    let mut run = 1u64;
    let parts = cycles.parts();
    for (i, &p) in parts.iter().enumerate() {
        z *= p as u64;
        if i > 0 && parts[i - 1] == p {
            run += 1;
            z *= run;
        } else {
            run = 1;
        }
    }
    z
}

/// Character table of the symmetric group on `n` points, `1 <= n <= 10`.
///
/// Classes and irreducibles are both indexed by partitions of `n`; values
/// come from the border-strip recursion; `cod` of a cycle type is `n` minus
/// its number of cycles.
pub fn table_symmetric(n: u32) -> Result<CharacterTable, ChartabError> {
    if n == 0 || n > 10 {
        return Err(ChartabError::SizeCap(format!(
            "symmetric group size {n} not in 1..=10"
        )));
    }
    let labels = partitions_of(n as u64);
    let order = factorial(n);
    // Classes sorted by increasing codimension (identity first), then label.
    let mut class_types = labels.clone();
    class_types.sort_by_key(|mu| (n - mu.len() as u32, mu.clone()));
    let classes: Vec<ClassData> = class_types
        .iter()
        .map(|mu| ClassData {
            label: ClassLabel::Cycles(mu.clone()),
            size: order / centralizer_order(mu),
            cod: n - mu.len() as u32,
        })
        .collect();
    let values: Vec<Vec<Cyclotomic>> = labels
        .iter()
        .map(|lambda| {
            class_types
                .iter()
                .map(|mu| Cyclotomic::from_rational(rat(symmetric_character_value(lambda, mu))))
                .collect()
        })
        .collect();
    let mut reflection_orbits = Vec::new();
    if n >= 2 {
        let mut s_type = vec![2u32];
        s_type.extend(std::iter::repeat_n(1, n as usize - 2));
        let s_label = ClassLabel::Cycles(Partition::new(s_type));
        let s_class = classes
            .iter()
            .position(|c| c.label == s_label)
            .expect("transposition class exists");
        reflection_orbits.push(ReflectionOrbit {
            label: "transpositions".to_string(),
            e: 2,
            size: n as u64 * (n as u64 - 1) / 2,
            power_classes: vec![s_class],
        });
    }
    // Every permutation is conjugate to its inverse.
    let inverse_class = (0..labels.len()).collect();
    Ok(CharacterTable {
        group: GroupDescriptor {
            kind: GroupKind::Symmetric(n),
            order,
            rank: n.saturating_sub(1),
        },
        classes,
        irreducibles: labels.into_iter().map(IrrLabel::Par).collect(),
        values,
        reflection_orbits,
        inverse_class,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s2_table() {
        let t = table_symmetric(2).unwrap();
        assert_eq!(t.num_classes(), 2);
        let vals: Vec<Vec<String>> = t
            .values
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect())
            .collect();
        assert_eq!(vals, vec![vec!["1", "1"], vec!["1", "-1"]]);
    }

    #[test]
    fn class_sizes_sum_to_order() {
        for n in 1..=7 {
            let t = table_symmetric(n).unwrap();
            assert_eq!(t.classes.iter().map(|c| c.size).sum::<u64>(), t.order());
            assert_eq!(
                t.reflection_count(),
                n as u64 * (n as u64 - 1) / 2
            );
        }
    }

    #[test]
    fn cod_values() {
        let t = table_symmetric(5).unwrap();
        let id = t.identity_class();
        assert_eq!(t.classes[id].cod, 0);
        let five_cycle = t
            .class_index(&ClassLabel::Cycles(Partition::new(vec![5])))
            .unwrap();
        assert_eq!(t.classes[five_cycle].cod, 4);
    }

    #[test]
    fn filtration_degree_examples() {
        use super::super::cod_filtration_degree;
        use crate::exact::Cyclotomic;
        let t = table_symmetric(5).unwrap();
        let mut v = vec![Cyclotomic::zero(1); t.num_classes()];
        // The zero vector sits in level 0 by convention.
        assert_eq!(cod_filtration_degree(&t, &v), 0);
        v[t.identity_class()] = Cyclotomic::one(1);
        assert_eq!(cod_filtration_degree(&t, &v), 0);
        let s = t.reflection_orbits[0].power_classes[0];
        v[s] = Cyclotomic::one(1);
        assert_eq!(cod_filtration_degree(&t, &v), 1);
        let five_cycle = t
            .class_index(&ClassLabel::Cycles(Partition::new(vec![5])))
            .unwrap();
        v[five_cycle] = Cyclotomic::one(1);
        assert_eq!(cod_filtration_degree(&t, &v), 4);
    }

    #[test]
    fn size_cap() {
        assert!(table_symmetric(11).is_err());
        assert!(table_symmetric(0).is_err());
    }
}
