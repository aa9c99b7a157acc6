//! Border-strip character recursions: the classical rule for symmetric
//! groups and its colored refinement for `G(d,1,r)`.

use std::collections::HashMap;

use crate::exact::Cyclotomic;
use crate::partitions::{MultiPartition, Partition};

/// All ways of removing a border strip of length `len` from `lambda`:
/// returns the smaller partition together with the sign `(-1)^height`.
///
/// On the beta-set, removing a strip of length `len` moves one bead from
/// position `b` down to the empty position `b - len`; the strip height is
/// the number of beads passed on the way.
pub fn remove_border_strips(lambda: &Partition, len: u32) -> Vec<(Partition, i8)> {
    if len == 0 {
        return vec![];
    }
    let beads = lambda.beta_set(lambda.len() as u64);
    let mut out = Vec::new();
    for (i, &b) in beads.iter().enumerate() {
        if b < len as u64 {
            continue;
        }
        let target = b - len as u64;
        if beads.binary_search(&target).is_ok() {
            continue;
        }
        let passed = beads[..i].iter().filter(|&&x| x > target).count();
        let sign = if passed % 2 == 0 { 1 } else { -1 };
        let mut new_beads = beads.clone();
        new_beads[i] = target;
        out.push((Partition::from_beta_set(&new_beads), sign));
    }
    out
}

/// Character value of the symmetric-group irreducible labelled by `lambda`
/// on the class of cycle type `cycles`, by iterated border-strip removal.
pub fn symmetric_character_value(lambda: &Partition, cycles: &Partition) -> i64 {
    assert_eq!(lambda.size(), cycles.size());
    let mut memo = HashMap::new();
    sym_rec(lambda, cycles.parts(), &mut memo)
}

fn sym_rec(
    lambda: &Partition,
    cycles: &[u32],
    memo: &mut HashMap<(Partition, usize), i64>,
) -> i64 {
    if cycles.is_empty() {
        return 1;
    }
    let key = (lambda.clone(), cycles.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let (rest, last) = cycles.split_at(cycles.len() - 1);
    let len = last[0];
    let mut acc = 0;
    for (smaller, sign) in remove_border_strips(lambda, len) {
        acc += sign as i64 * sym_rec(&smaller, rest, memo);
    }
    memo.insert(key, acc);
    acc
}

/// Character value of the `G(d,1,r)` irreducible labelled by the
/// `d`-multipartition `lambda` on the class whose color-`c` cycles have
/// lengths `class.component(c)`.
///
/// Removing a cycle of length `len` and color `c` contributes
/// `zeta_d^(c*i)` times a signed strip removal in component `i`, summed over
/// components and strips.
pub fn wreath_character_value(
    lambda: &MultiPartition,
    class: &MultiPartition,
    d: u32,
) -> Cyclotomic {
    assert_eq!(lambda.size(), class.size());
    assert_eq!(lambda.arity(), d);
    assert_eq!(class.arity(), d);
    let mut cycles: Vec<(u32, u32)> = Vec::new();
    for c in 0..d as usize {
        for &len in class.component(c).parts() {
            cycles.push((c as u32, len));
        }
    }
    let mut memo = HashMap::new();
    wreath_rec(lambda, &cycles, d, &mut memo)
}

fn wreath_rec(
    lambda: &MultiPartition,
    cycles: &[(u32, u32)],
    d: u32,
    memo: &mut HashMap<(MultiPartition, usize), Cyclotomic>,
) -> Cyclotomic {
    if cycles.is_empty() {
        return Cyclotomic::one(d);
    }
    let key = (lambda.clone(), cycles.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let (rest, last) = cycles.split_at(cycles.len() - 1);
    let (color, len) = last[0];
    let mut acc = Cyclotomic::zero(d);
    for (i, component) in lambda.components().iter().enumerate() {
        if component.size() < len as u64 {
            continue;
        }
        let phase = Cyclotomic::root_of_unity(d, color as i64 * i as i64);
        for (smaller, sign) in remove_border_strips(component, len) {
            let mut comps = lambda.components().to_vec();
            comps[i] = smaller;
            let sub = wreath_rec(&MultiPartition::new(comps), rest, d, memo);
            let term = phase.mul(&sub);
            acc = if sign > 0 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            };
        }
    }
    memo.insert(key, acc.clone());
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn strips_from_square() {
        // (2,1) has no border strip of length 2 (the two removable pairs of
        // cells are disconnected), which is why the standard character of S3
        // vanishes on transpositions.
        assert!(remove_border_strips(&p(&[2, 1]), 2).is_empty());
        // (2,2) has two: the bottom row (height 0) and the right column
        // (height 1).
        let mut strips = remove_border_strips(&p(&[2, 2]), 2);
        strips.sort_by_key(|(_, s)| *s);
        assert_eq!(strips, vec![(p(&[1, 1]), -1), (p(&[2]), 1)]);
    }

    #[test]
    fn hook_lengths_vs_full_strip() {
        // A full-size strip exists exactly when the partition is a hook.
        assert_eq!(remove_border_strips(&p(&[3, 1, 1]), 5).len(), 1);
        assert_eq!(remove_border_strips(&p(&[3, 2]), 5).len(), 0);
    }

    #[test]
    fn symmetric_values_small() {
        // S3: standard character on a transposition vanishes.
        assert_eq!(symmetric_character_value(&p(&[2, 1]), &p(&[2, 1])), 0);
        // Sign character on a transposition.
        assert_eq!(symmetric_character_value(&p(&[1, 1, 1]), &p(&[2, 1])), -1);
        // Dimensions by hook content: chi(1^n).
        assert_eq!(symmetric_character_value(&p(&[3, 2]), &p(&[1, 1, 1, 1, 1])), 5);
    }
}
