//! Partition combinatorics: hooks, beta-sets, runner abaci, cores and
//! quotients, cell residues, and the two integer sequences attached to a
//! core that drive the relative parameters of type-A series.
//!
//! Conventions (fixed once, validated by the worked examples and the
//! cyclic-shift identity downstream):
//!
//! - the residue of the cell in row `r`, column `c` (1-indexed) is
//!   `r - c (mod d)`;
//! - a beta-set of length `L` for a partition of length `m` is normalized
//!   when `L = m (mod d)`, which puts the first empty position on runner 0;
//! - the quotient components are read from the runners of the abacus whose
//!   bead count is normalized for the *core* (`L = len(core) (mod d)`), the
//!   unique choice making `(core, quotient)` a bijection.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("{0:?} is not a {1}-core")]
    NotACore(String, u32),
    #[error("bead count {0} is not admissible: {1}")]
    BadBeadCount(u64, String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// An integer partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing"
        );
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of (nonzero) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// The part at 1-indexed row `i` (0 beyond the length).
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 || i > self.parts.len() {
            0
        } else {
            self.parts[i - 1]
        }
    }

    /// The conjugate (transposed) partition.
    pub fn conjugate(&self) -> Self {
        let m = self.part(1) as usize;
        let parts = (1..=m)
            .map(|c| self.parts.iter().filter(|&&p| p as usize >= c).count() as u32)
            .collect();
        Partition { parts }
    }

    /// `sum (k-1) * lambda_k`, the colength statistic of the diagram.
    pub fn a_invariant(&self) -> u64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| i as u64 * p as u64)
            .sum()
    }

    /// The multiset of hook lengths, one per cell, together with the
    /// a-invariant.
    pub fn hooks(&self) -> (Vec<u32>, u64) {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.size() as usize);
        for (r0, &row_len) in self.parts.iter().enumerate() {
            let r = r0 as u32 + 1;
            for c in 1..=row_len {
                let arm = row_len - c;
                let leg = conj.part(c as usize) - r;
                hooks.push(arm + leg + 1);
            }
        }
        (hooks, self.a_invariant())
    }

    /// True when no hook length equals `d`. The equivalent characterization
    /// (no hook length divisible by `d`) is asserted to agree.
    pub fn is_d_core(&self, d: u32) -> bool {
        assert!(d >= 1);
        let (hooks, _) = self.hooks();
        let no_equal = hooks.iter().all(|&h| h != d);
        let no_divisible = hooks.iter().all(|&h| h % d != 0);
        assert_eq!(
            no_equal, no_divisible,
            "hook-avoidance characterizations disagree on {self} with d = {d}"
        );
        no_equal
    }

    /// Number of hooks divisible by `d` (the abacus-vs-hook cross-check
    /// counts these against the quotient size).
    pub fn hooks_divisible_by(&self, d: u32) -> usize {
        self.hooks().0.iter().filter(|&&h| h % d == 0).count()
    }

    /// The beta-set of length `L >= len`: `{lambda_i + L - i : 1 <= i <= L}`,
    /// ascending.
    pub fn beta_set(&self, length: u64) -> Vec<u64> {
        let m = self.len() as u64;
        assert!(length >= m, "beta-set length must cover all parts");
        let mut beads: Vec<u64> = (1..=length)
            .map(|i| self.part(i as usize) as u64 + length - i)
            .collect();
        beads.reverse();
        beads
    }

    /// Recovers a partition from a set of distinct bead positions.
    pub fn from_beta_set(beads: &[u64]) -> Self {
        let mut sorted = beads.to_vec();
        sorted.sort_unstable();
        let mut parts: Vec<u32> = sorted
            .iter()
            .enumerate()
            .map(|(i, &b)| (b - i as u64) as u32)
            .collect();
        parts.reverse();
        Partition::new(parts)
    }

    pub fn parse(s: &str) -> Result<Self, PartitionError> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Result<Vec<u32>, _> = s
            .split(',')
            .map(|tok| tok.trim().parse::<u32>())
            .collect();
        let parts = parts.map_err(|e| PartitionError::Parse(format!("{s:?}: {e}")))?;
        let mut clean: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        if !clean.windows(2).all(|w| w[0] >= w[1]) {
            clean.sort_unstable_by(|a, b| b.cmp(a));
        }
        Ok(Partition { parts: clean })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", body.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

/// A `d`-tuple of partitions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiPartition {
    components: Vec<Partition>,
}

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> Self {
        MultiPartition { components }
    }

    pub fn empty(d: u32) -> Self {
        MultiPartition {
            components: vec![Partition::empty(); d as usize],
        }
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Partition {
        &self.components[i]
    }

    pub fn arity(&self) -> u32 {
        self.components.len() as u32
    }

    pub fn size(&self) -> u64 {
        self.components.iter().map(|p| p.size()).sum()
    }

    pub fn parse(s: &str) -> Result<Self, PartitionError> {
        let components: Result<Vec<Partition>, _> =
            s.split('|').map(Partition::parse).collect();
        Ok(MultiPartition {
            components: components?,
        })
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.components.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", body.join("|"))
    }
}

impl fmt::Debug for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

/// A beta-set arranged on `d` runners.
///
/// Position `p` sits on runner `p mod d`, row `p div d`. Normalization asks
/// that the first empty position be on runner 0, i.e. that the bead count be
/// congruent to the partition length modulo `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Abacus {
    d: u32,
    beads: Vec<u64>,
}

impl Abacus {
    /// The normalized abacus of `lambda` with the minimal bead count
    /// (`L = len(lambda)`).
    pub fn new(lambda: &Partition, d: u32) -> Self {
        assert!(d >= 1);
        Abacus {
            d,
            beads: lambda.beta_set(lambda.len() as u64),
        }
    }

    /// The abacus with an explicit bead count; `length` must cover all parts
    /// and keep the normalization `length = len(lambda) (mod d)`.
    pub fn with_bead_count(
        lambda: &Partition,
        d: u32,
        length: u64,
    ) -> Result<Self, PartitionError> {
        let m = lambda.len() as u64;
        if length < m {
            return Err(PartitionError::BadBeadCount(
                length,
                format!("fewer beads than parts ({m})"),
            ));
        }
        if (length % d as u64) != (m % d as u64) {
            return Err(PartitionError::BadBeadCount(
                length,
                format!("not congruent to the partition length {m} mod {d}"),
            ));
        }
        Ok(Abacus {
            d,
            beads: lambda.beta_set(length),
        })
    }

    pub fn runners(&self) -> u32 {
        self.d
    }

    pub fn beads(&self) -> &[u64] {
        &self.beads
    }

    pub fn bead_count(&self) -> u64 {
        self.beads.len() as u64
    }

    /// The smallest position not occupied by a bead.
    pub fn first_gap(&self) -> u64 {
        let mut expected = 0;
        for &b in &self.beads {
            if b != expected {
                break;
            }
            expected += 1;
        }
        expected
    }

    /// Bead count per runner.
    pub fn runner_counts(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.d as usize];
        for &b in &self.beads {
            counts[(b % self.d as u64) as usize] += 1;
        }
        counts
    }

    /// Per-runner bead count minus the runner-0 bead count.
    pub fn b_sequence(&self) -> Vec<i64> {
        let counts = self.runner_counts();
        counts.iter().map(|&c| c as i64 - counts[0] as i64).collect()
    }

    /// Bead rows per runner, ascending.
    pub fn runner_rows(&self) -> Vec<Vec<u64>> {
        let mut rows = vec![Vec::new(); self.d as usize];
        for &b in &self.beads {
            rows[(b % self.d as u64) as usize].push(b / self.d as u64);
        }
        rows
    }

    /// The partition encoded by the beads.
    pub fn decode(&self) -> Partition {
        Partition::from_beta_set(&self.beads)
    }
}

/// Core data of a `d`-core: the runner counts `b`, the residues `rho`, and
/// the two sequences `k` and `l` built from them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoreData {
    pub core: Partition,
    pub d: u32,
    pub b: Vec<i64>,
    pub residues: Vec<u64>,
    pub kseq: Vec<i64>,
    pub lseq: Vec<i64>,
}

/// Residue counts of the diagram: entry `k` counts cells with
/// `row - column = k (mod d)`.
pub fn residues(gamma: &Partition, d: u32) -> Vec<u64> {
    assert!(d >= 1);
    let mut rho = vec![0u64; d as usize];
    for (r0, &row_len) in gamma.parts().iter().enumerate() {
        let r = r0 as i64 + 1;
        for c in 1..=row_len as i64 {
            let k = (r - c).rem_euclid(d as i64) as usize;
            rho[k] += 1;
        }
    }
    rho
}

/// Core and quotient of a partition. The inverse is [`par_d`].
pub fn core_quotient(lambda: &Partition, d: u32) -> (Partition, MultiPartition) {
    assert!(d >= 1);
    let dd = d as u64;
    let m = lambda.len() as u64;
    // Pushing every bead to the bottom of its runner yields the core
    // (one bead step down removes one d-hook).
    let mut counts = vec![0u64; d as usize];
    for &b in &lambda.beta_set(m) {
        counts[(b % dd) as usize] += 1;
    }
    let mut core_beads = Vec::new();
    for (j, &c) in counts.iter().enumerate() {
        for row in 0..c {
            core_beads.push(row * dd + j as u64);
        }
    }
    let core = Partition::from_beta_set(&core_beads);

    // Re-read lambda with the bead count aligned to the core's length; the
    // runners of that abacus spell the quotient components.
    let m_core = core.len() as u64;
    let length = m + (m_core % dd + dd - m % dd) % dd;
    let mut rows = vec![Vec::new(); d as usize];
    for &b in &lambda.beta_set(length) {
        rows[(b % dd) as usize].push(b / dd);
    }
    let components: Vec<Partition> = rows
        .iter()
        .map(|r| Partition::from_beta_set(r))
        .collect();
    (core, MultiPartition::new(components))
}

/// Rebuilds the partition with the given `d`-core and `d`-quotient.
pub fn par_d(
    core: &Partition,
    quotient: &MultiPartition,
    d: u32,
) -> Result<Partition, PartitionError> {
    assert!(d >= 1);
    if quotient.arity() != d {
        return Err(PartitionError::BadBeadCount(
            quotient.arity() as u64,
            format!("quotient must have {d} components"),
        ));
    }
    if !core.is_d_core(d) {
        return Err(PartitionError::NotACore(core.to_string(), d));
    }
    // Grow the core's abacus until each runner has enough beads to host its
    // quotient component, then raise beads by the component parts.
    let mut extra = 0u64;
    let counts = loop {
        let length = core.len() as u64 + extra * d as u64;
        let abacus = Abacus::with_bead_count(core, d, length).expect("normalized by construction");
        let counts = abacus.runner_counts();
        let enough = (0..d as usize)
            .all(|j| counts[j] >= quotient.component(j).len() as u64);
        if enough {
            break counts;
        }
        extra += 1;
    };
    let mut beads = Vec::new();
    for j in 0..d as usize {
        let n = counts[j];
        let rows = quotient.component(j).beta_set(n);
        for row in rows {
            beads.push(row * d as u64 + j as u64);
        }
    }
    Ok(Partition::from_beta_set(&beads))
}

/// The `k` and `l` sequences of a `d`-core, with the data they derive from.
pub fn k_l_sequences(gamma: &Partition, d: u32) -> Result<CoreData, PartitionError> {
    assert!(d >= 1);
    if !gamma.is_d_core(d) {
        return Err(PartitionError::NotACore(gamma.to_string(), d));
    }
    let abacus = Abacus::new(gamma, d);
    let b = abacus.b_sequence();
    let rho = residues(gamma, d);
    let m: i64 = b.iter().sum();
    debug_assert_eq!(m, gamma.len() as i64);
    debug_assert_eq!(rho.iter().sum::<u64>(), gamma.size());
    debug_assert_eq!(b[0], 0);

    let di = d as i64;
    let idx = |j: i64| -> usize { j.rem_euclid(di) as usize };
    let kseq: Vec<i64> = (0..di).map(|j| di * b[j as usize] + j).collect();
    let lseq: Vec<i64> = (0..di)
        .map(|j| {
            let base = m;
            if j == 0 {
                base + di * (rho[idx(1)] as i64 - rho[0] as i64) + di - 1
            } else {
                base + di * (rho[idx(1 - j)] as i64 - rho[idx(-j)] as i64) + j - 1
            }
        })
        .collect();
    Ok(CoreData {
        core: gamma.clone(),
        d,
        b,
        residues: rho,
        kseq,
        lseq,
    })
}

/// Checks that `k_j = l_(j+1-m)` cyclically, `m` the length of the core.
pub fn check_k_equals_l(gamma: &Partition, d: u32) -> Result<bool, PartitionError> {
    let data = k_l_sequences(gamma, d)?;
    let m = gamma.len() as i64;
    let di = d as i64;
    Ok((0..di).all(|j| {
        let shifted = (j + 1 - m).rem_euclid(di) as usize;
        data.kseq[j as usize] == data.lseq[shifted]
    }))
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: u64) -> Vec<Partition> {
    fn go(remaining: u64, max: u64, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::new(prefix.clone()));
            return;
        }
        let top = remaining.min(max);
        for next in (1..=top).rev() {
            prefix.push(next as u32);
            go(remaining - next, next, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    if n == 0 {
        return vec![Partition::empty()];
    }
    out
}

/// All `d`-tuples of partitions with total size `r`, components ordered
/// lexicographically by position.
pub fn multipartitions_of(r: u64, d: u32) -> Vec<MultiPartition> {
    fn go(r: u64, slots: u32, prefix: &mut Vec<Partition>, out: &mut Vec<MultiPartition>) {
        if slots == 0 {
            if r == 0 {
                out.push(MultiPartition::new(prefix.clone()));
            }
            return;
        }
        for here in 0..=r {
            for p in partitions_of(here) {
                prefix.push(p);
                go(r - here, slots - 1, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(r, d, &mut Vec::new(), &mut out);
    out
}

/// All `d`-cores of size at most `max_size`; when `congruent_to` is given,
/// only sizes congruent to it modulo `d` are kept.
pub fn d_cores_up_to(max_size: u64, d: u32, congruent_to: Option<u64>) -> Vec<Partition> {
    let mut out = Vec::new();
    for n in 0..=max_size {
        if let Some(r) = congruent_to {
            if n % d as u64 != r % d as u64 {
                continue;
            }
        }
        for p in partitions_of(n) {
            if p.is_d_core(d) {
                out.push(p);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn hooks_and_a_invariant() {
        let (hooks, a) = p(&[5]).hooks();
        assert_eq!(hooks, vec![5, 4, 3, 2, 1]);
        assert_eq!(a, 0);

        let (mut hooks, a) = p(&[2, 1]).hooks();
        hooks.sort_unstable();
        assert_eq!(hooks, vec![1, 1, 3]);
        assert_eq!(a, 1);

        // Eight cells, none of hook length 4.
        let (hooks, a) = p(&[5, 2, 1]).hooks();
        assert_eq!(hooks.len(), 8);
        assert!(hooks.iter().all(|&h| h != 4));
        assert_eq!(a, 4);
    }

    #[test]
    fn d_core_predicate() {
        assert!(p(&[5, 2, 1]).is_d_core(4));
        assert!(!p(&[2]).is_d_core(2));
        assert!(Partition::empty().is_d_core(3));
        assert!(!p(&[5, 2, 1]).is_d_core(3));
    }

    #[test]
    fn abacus_of_worked_example() {
        let gamma = p(&[5, 2, 1]);
        let ab = Abacus::new(&gamma, 4);
        assert_eq!(ab.b_sequence(), vec![0, 1, 0, 2]);
        assert_eq!(ab.first_gap() % 4, 0);
        assert_eq!(ab.decode(), gamma);

        // Re-encoding with four extra beads keeps b and spells the drawn
        // bead positions.
        let big = Abacus::with_bead_count(&gamma, 4, 7).unwrap();
        assert_eq!(big.beads(), &[0, 1, 2, 3, 5, 7, 11]);
        assert_eq!(big.b_sequence(), vec![0, 1, 0, 2]);
        assert_eq!(big.decode(), gamma);

        assert!(Abacus::with_bead_count(&gamma, 4, 6).is_err());
        assert!(Abacus::with_bead_count(&gamma, 4, 2).is_err());

        let empty = Abacus::new(&Partition::empty(), 5);
        assert_eq!(empty.b_sequence(), vec![0; 5]);
    }

    #[test]
    fn residue_counts() {
        assert_eq!(residues(&p(&[5, 2, 1]), 4), vec![3, 2, 2, 1]);
        assert_eq!(residues(&Partition::empty(), 3), vec![0, 0, 0]);
        assert_eq!(residues(&p(&[1]), 4), vec![1, 0, 0, 0]);
    }

    #[test]
    fn core_quotient_examples() {
        let (core, quo) = core_quotient(&p(&[5, 2, 1]), 4);
        assert_eq!(core, p(&[5, 2, 1]));
        assert_eq!(quo, MultiPartition::empty(4));

        // d = 1 degeneracy: core empty, quotient the partition itself.
        let (core, quo) = core_quotient(&p(&[3, 1]), 1);
        assert_eq!(core, Partition::empty());
        assert_eq!(quo.components(), &[p(&[3, 1])]);
        assert_eq!(
            par_d(&Partition::empty(), &quo, 1).unwrap(),
            p(&[3, 1])
        );

        // Distinguishes (2) from (1,1) at d = 2.
        let (c2, q2) = core_quotient(&p(&[2]), 2);
        let (c11, q11) = core_quotient(&p(&[1, 1]), 2);
        assert_eq!(c2, Partition::empty());
        assert_eq!(c11, Partition::empty());
        assert_ne!(q2, q11);

        assert!(par_d(&p(&[2]), &MultiPartition::empty(2), 2).is_err());
    }

    #[test]
    fn round_trip_exhaustive_small() {
        for n in 0..=12u64 {
            for lambda in partitions_of(n) {
                for d in 1..=5u32 {
                    let (core, quo) = core_quotient(&lambda, d);
                    assert!(core.is_d_core(d));
                    assert_eq!(
                        lambda.size(),
                        core.size() + d as u64 * quo.size(),
                        "size identity fails for {lambda} d={d}"
                    );
                    assert_eq!(
                        lambda.hooks_divisible_by(d) as u64,
                        quo.size(),
                        "hook count vs quotient size fails for {lambda} d={d}"
                    );
                    let back = par_d(&core, &quo, d).unwrap();
                    assert_eq!(back, lambda, "round trip fails for {lambda} d={d}");
                }
            }
        }
    }

    #[test]
    fn par_d_is_injective_onto_partitions() {
        // For fixed n and d the series blocks partition Part(n).
        for d in 2..=4u32 {
            let n = 8u64;
            let mut seen = std::collections::BTreeSet::new();
            for gamma in d_cores_up_to(n, d, Some(n)) {
                let r = (n - gamma.size()) / d as u64;
                for mu in multipartitions_of(r, d) {
                    let lambda = par_d(&gamma, &mu, d).unwrap();
                    assert_eq!(lambda.size(), n);
                    assert!(seen.insert(lambda));
                }
            }
            assert_eq!(seen.len(), partitions_of(n).len());
        }
    }

    #[test]
    fn k_l_sequences_worked_example() {
        let gamma = p(&[5, 2, 1]);
        let data = k_l_sequences(&gamma, 4).unwrap();
        assert_eq!(data.b, vec![0, 1, 0, 2]);
        assert_eq!(data.residues, vec![3, 2, 2, 1]);
        assert_eq!(data.kseq, vec![0, 5, 2, 11]);
        assert_eq!(data.lseq, vec![2, 11, 0, 5]);
        assert!(check_k_equals_l(&gamma, 4).unwrap());

        assert!(k_l_sequences(&p(&[2]), 2).is_err());
    }

    #[test]
    fn k_l_sequences_empty_core() {
        for d in 1..=6u32 {
            let data = k_l_sequences(&Partition::empty(), d).unwrap();
            let di = d as i64;
            assert_eq!(data.kseq, (0..di).collect::<Vec<_>>());
            let mut expect_l = vec![di - 1];
            expect_l.extend(0..di - 1);
            assert_eq!(data.lseq, expect_l);
            assert!(check_k_equals_l(&Partition::empty(), d).unwrap());
        }
    }

    #[test]
    fn k_equals_l_for_all_small_cores() {
        for gamma in d_cores_up_to(20, 5, None) {
            assert!(check_k_equals_l(&gamma, 5).unwrap(), "fails on {gamma}");
        }
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (0..=10u64).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(multipartitions_of(2, 2).len(), 5);
        assert_eq!(multipartitions_of(4, 3).len(), 51);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(Partition::parse("5,2,1").unwrap(), p(&[5, 2, 1]));
        assert_eq!(Partition::parse("").unwrap(), Partition::empty());
        assert_eq!(p(&[5, 2, 1]).to_string(), "5,2,1");
        let mp = MultiPartition::parse("2,1|3").unwrap();
        assert_eq!(mp.components(), &[p(&[2, 1]), p(&[3])]);
        assert_eq!(mp.to_string(), "2,1|3");
        assert!(Partition::parse("a,b").is_err());
    }
}
