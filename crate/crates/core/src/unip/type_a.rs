//! Type-A generic degrees, cuspidality, series decomposition, and the
//! regular-element character identity.

use serde::Serialize;

use crate::chartab::symmetric_character_value;
use crate::cmfam::Parameter;
use crate::exact::{cyclotomic_polynomial, rat, Cyclotomic, UniPoly};
use crate::partitions::{
    core_quotient, d_cores_up_to, k_l_sequences, multipartitions_of, par_d, partitions_of,
    MultiPartition, Partition,
};

use super::{CuspidalPair, RelativeGroup, UnipError};

/// `prod_(k=1..n) (q^k - 1)`, memoized process-wide (it is shared by every
/// degree computation at rank n).
fn degree_numerator(n: u32) -> UniPoly {
    use std::collections::HashMap;
    use std::sync::{Mutex, OnceLock};
    static CACHE: OnceLock<Mutex<HashMap<u32, UniPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut num = UniPoly::one();
    for k in 1..=n {
        num = num.mul(&UniPoly::q_pow_minus_one(k));
    }
    cache.lock().unwrap().insert(n, num.clone());
    num
}

/// The generic degree of the type-A datum labelled by `lambda`:
/// `q^a * prod_(k=1..n) (q^k - 1) / prod_cells (q^hook - 1)`,
/// computed by exact division; the result always has integer coefficients.
pub fn generic_degree_a(lambda: &Partition) -> UniPoly {
    let n = lambda.size() as u32;
    let (hooks, a) = lambda.hooks();
    let mut p = UniPoly::monomial(Cyclotomic::one(1), a as usize).mul(&degree_numerator(n));
    for h in hooks {
        p = p
            .divexact(&UniPoly::q_pow_minus_one(h))
            .expect("hook factors divide the degree numerator");
    }
    assert!(
        p.has_integer_coeffs(),
        "generic degree of {lambda} is not integral"
    );
    p
}

/// Valuation and degree of a nonzero degree polynomial.
pub fn a_a_of(p: &UniPoly) -> Result<(u64, u64), UnipError> {
    match (p.valuation(), p.degree()) {
        (Some(v), Some(d)) => Ok((v as u64, d as u64)),
        _ => Err(UnipError::Inconsistent("zero polynomial".to_string())),
    }
}

/// Multiplicity of the `d`-th cyclotomic polynomial in `p`.
pub fn phi_d_multiplicity(p: &UniPoly, d: u32) -> u32 {
    p.adic_valuation(&cyclotomic_polynomial(d))
        .expect("degree polynomials are nonzero")
}

/// Whether the type-A datum labelled by `lambda` is `d`-cuspidal: the degree
/// is divisible by `(q - zeta_d)` to the order of the relevant fixed-space
/// dimension (`floor(n/d)` for `d >= 2`, `n - 1` for the split case `d = 1`).
/// The result is asserted to agree with the `d`-core test.
pub fn is_d_cuspidal_a(lambda: &Partition, d: u32) -> bool {
    assert!(d >= 1);
    let n = lambda.size();
    let deg = generic_degree_a(lambda);
    let cuspidal = if d == 1 {
        let threshold = n.saturating_sub(1) as u32;
        deg.root_multiplicity(&Cyclotomic::one(1))
            .expect("degree polynomials are nonzero")
            >= threshold
    } else {
        let zeta = Cyclotomic::root_of_unity(d, 1);
        let threshold = (n / d as u64) as u32;
        deg.root_multiplicity(&zeta).expect("nonzero") >= threshold
    };
    let is_core = if d == 1 {
        // Only the empty partition avoids hooks of length 1.
        lambda.is_empty()
    } else {
        lambda.is_d_core(d)
    };
    // The divisibility criterion and the combinatorial one are two routes to
    // the same classification; n = 0 and 1 are the degenerate exceptions for
    // d = 1 where the threshold collapses.
    if d >= 2 || n >= 2 {
        assert_eq!(
            cuspidal, is_core,
            "cuspidality routes disagree on {lambda}, d = {d}"
        );
    }
    cuspidal
}

/// Exhaustively checks, for all partitions of every `n <= n_max` and all
/// `2 <= d <= n`, that the cyclotomic multiplicity of the degree equals
/// `floor(n/d) - |quotient|` (so cuspidality is the quotient-free case).
/// Returns the number of `(lambda, d)` pairs checked.
pub fn cuspidality_sweep(n_max: u32) -> Result<u64, UnipError> {
    if n_max > 12 {
        return Err(UnipError::SizeCap(format!(
            "cuspidality sweep capped at n <= 12, got {n_max}"
        )));
    }
    let mut checked = 0;
    for n in 1..=n_max as u64 {
        for lambda in partitions_of(n) {
            let deg = generic_degree_a(&lambda);
            for d in 2..=n as u32 {
                let (_, quo) = core_quotient(&lambda, d);
                let expected = (n / d as u64) - quo.size();
                let got = phi_d_multiplicity(&deg, d) as u64;
                if got != expected {
                    return Err(UnipError::Inconsistent(format!(
                        "multiplicity of Phi_{d} in deg {lambda} is {got}, expected {expected}"
                    )));
                }
                // Cuspidality is the |quotient| = 0 case.
                if is_d_cuspidal_a(&lambda, d) != (quo.size() == 0) {
                    return Err(UnipError::Inconsistent(format!(
                        "cuspidality mismatch for {lambda}, d = {d}"
                    )));
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}

/// One series block of the type-A decomposition at `d`.
#[derive(Debug, Clone, Serialize)]
pub struct SeriesBlock {
    pub core: Partition,
    pub relative_rank: u32,
    pub pair: CuspidalPair,
    pub members: Vec<Partition>,
}

/// The decomposition of the partitions of `n` into `d`-series: one block per
/// core `gamma` of size `= n (mod d)`, with members `par_d(gamma, mu)` over
/// `d`-multipartitions `mu` of the relative rank, relative group `G(d,1,r)`,
/// and relative parameter built from the `k` sequence of the core.
pub fn d_series_a(n: u32, d: u32) -> Vec<SeriesBlock> {
    assert!(n >= 1 && d >= 1);
    let mut blocks = Vec::new();
    for gamma in d_cores_up_to(n as u64, d, Some(n as u64)) {
        let r = ((n as u64 - gamma.size()) / d as u64) as u32;
        let members: Vec<Partition> = multipartitions_of(r as u64, d)
            .iter()
            .map(|mu| par_d(&gamma, mu, d).expect("core and quotient recombine"))
            .collect();
        let relative = if r == 0 {
            RelativeGroup::Trivial
        } else if r == 1 && d >= 2 {
            RelativeGroup::Cyclic(d)
        } else {
            RelativeGroup::Wreath(d, r)
        };
        // Orbit order matches the wreath tables: diagonal first (present for
        // d >= 2 and r >= 1), then transpositions (present for r >= 2).
        let mut orbits = Vec::new();
        if d >= 2 && r >= 1 {
            let kseq = k_l_sequences(&gamma, d).expect("gamma is a d-core");
            orbits.push(kseq.kseq.iter().map(|&k| rat(k)).collect());
        }
        if r >= 2 {
            let mut transposition = vec![rat(0); 2];
            transposition[0] = rat(d as i64);
            orbits.push(transposition);
        }
        blocks.push(SeriesBlock {
            core: gamma.clone(),
            relative_rank: r,
            pair: CuspidalPair {
                parabolic: format!("S{}", gamma.size()),
                cuspidal: format!("[{}]", gamma),
                relative,
                parameter: Parameter::new(orbits),
            },
            members,
        });
    }
    blocks
}

/// The twist exchanging split and non-split series orders: `d` maps to
/// `2d` for odd `d`, `d/2` for `d = 2 (mod 4)`, and `d` for `d = 0 (mod 4)`.
/// The non-split data set is this relabelling of the split one, so no
/// separate tables are stored.
pub fn ennola_twist(d: u32) -> u32 {
    match d % 4 {
        1 | 3 => 2 * d,
        2 => d / 2,
        _ => d,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MichelCase {
    pub lambda: Partition,
    pub lhs: u64,
    pub rhs: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct MichelReport {
    pub n: u32,
    pub d: u32,
    pub cases: Vec<MichelCase>,
    pub pass: bool,
}

fn factorial_u64(n: u64) -> u64 {
    (1..=n).product()
}

/// Number of standard tableaux of shape `lambda`, by the hook-length
/// formula.
fn tableaux_count(lambda: &Partition) -> u64 {
    let n = lambda.size();
    let (hooks, _) = lambda.hooks();
    let hook_product: u64 = hooks.iter().map(|&h| h as u64).product();
    let num = factorial_u64(n);
    debug_assert_eq!(num % hook_product, 0);
    num / hook_product
}

/// Dimension of the `G(d,1,r)` irreducible labelled by `mu`: the multinomial
/// coefficient of the component sizes times the product of the per-component
/// tableau counts.
fn wreath_dimension(mu: &MultiPartition) -> u64 {
    let r = mu.size();
    let denom: u64 = mu
        .components()
        .iter()
        .map(|comp| factorial_u64(comp.size()))
        .product();
    let multinomial = factorial_u64(r) / denom;
    multinomial
        * mu.components()
            .iter()
            .map(tableaux_count)
            .product::<u64>()
}

/// The regular-element identity at `w_d` of cycle type `(d^(n/d))`: for
/// every partition of `n`, the squared character value equals the squared
/// dimension of the quotient's wreath label when the core is empty, and both
/// sides vanish otherwise. Both sides are computed independently: the left
/// by the border-strip recursion, the right by hook-length counts.
pub fn michel_identity_a(n: u32, d: u32) -> Result<MichelReport, UnipError> {
    if n > 10 {
        return Err(UnipError::SizeCap(format!("n = {n} exceeds 10")));
    }
    if d == 0 || !n.is_multiple_of(d) {
        return Err(UnipError::SizeCap(format!("d = {d} must divide n = {n}")));
    }
    let w_d = Partition::new(vec![d; (n / d) as usize]);
    let mut cases = Vec::new();
    for lambda in partitions_of(n as u64) {
        let value = symmetric_character_value(&lambda, &w_d);
        let lhs = (value * value) as u64;
        let (core, quo) = core_quotient(&lambda, d);
        let rhs = if core.is_empty() {
            let dim = wreath_dimension(&quo);
            dim * dim
        } else {
            0
        };
        cases.push(MichelCase { lambda, lhs, rhs });
    }
    let pass = cases.iter().all(|c| c.lhs == c.rhs);
    Ok(MichelReport { n, d, cases, pass })
}
