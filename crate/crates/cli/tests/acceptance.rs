//! Acceptance suite: every stated identity is rechecked here end to end,
//! one test per criterion, each printing a pass/fail line with its runtime
//! against the stated budget. All arithmetic is exact, so every comparison
//! is on the nose.

use std::time::{Duration, Instant};

use cmuni::chartab::{
    table_hardcoded, table_symmetric, table_wreath, ClassLabel, Hardcoded, IrrLabel,
};
use cmuni::cmfam::{
    check_filtration_conjecture, euler_invariant, hardcoded_cm_families, spetsial_parameter,
};
use cmuni::cmgeom::{
    g4_fixed_points, g4_presentation, g4_series_geometry_crosscheck, g4_surface_checks,
    rank2_fixed_check, verify_fixed_points, G4_WEIGHTS,
};
use cmuni::exact::{rat, Cyclotomic};
use cmuni::partitions::{
    check_k_equals_l, core_quotient, d_cores_up_to, k_l_sequences, par_d, partitions_of,
    Partition,
};
use cmuni::unip::{
    a_a_of, classical_hc, degree_span, g4_consistency, g4_datum, generic_degree_a,
    michel_identity_a, phi_d_multiplicity, symbol_check, ClassicalKind, Rank2,
};

fn criterion<F>(number: u32, label: &str, budget: Duration, body: F)
where
    F: FnOnce() -> Result<String, String>,
{
    let started = Instant::now();
    let outcome = body();
    let elapsed = started.elapsed();
    match &outcome {
        Ok(detail) => println!(
            "[PASS] criterion {number} ({label}): {detail} ({elapsed:.2?} < {budget:.0?})"
        ),
        Err(e) => println!("[FAIL] criterion {number} ({label}): {e}"),
    }
    let detail = outcome.unwrap_or_else(|e| panic!("criterion {number} ({label}) failed: {e}"));
    assert!(
        elapsed <= budget,
        "criterion {number} ({label}) exceeded its budget: {elapsed:.2?} > {budget:.0?} ({detail})"
    );
}

#[test]
fn criterion_01_core_sequences() {
    criterion(1, "k = l on small cores", Duration::from_secs(10), || {
        let gamma = Partition::new(vec![5, 2, 1]);
        let data = k_l_sequences(&gamma, 4).map_err(|e| e.to_string())?;
        if data.b != vec![0, 1, 0, 2] || data.residues != vec![3, 2, 2, 1] {
            return Err(format!(
                "worked example drifted: b={:?} residues={:?}",
                data.b, data.residues
            ));
        }
        let mut scanned = 0u64;
        for d in 2..=7u32 {
            for gamma in d_cores_up_to(25, d, None) {
                if !check_k_equals_l(&gamma, d).map_err(|e| e.to_string())? {
                    return Err(format!("k != l for {gamma} at d = {d}"));
                }
                scanned += 1;
            }
        }
        Ok(format!("{scanned} cores scanned"))
    });
}

#[test]
fn criterion_02_core_quotient_bijection() {
    criterion(2, "core/quotient bijection", Duration::from_secs(10), || {
        let mut checked = 0u64;
        for n in 0..=15u64 {
            for lambda in partitions_of(n) {
                for d in 1..=6u32 {
                    let (core, quo) = core_quotient(&lambda, d);
                    if lambda.size() != core.size() + d as u64 * quo.size() {
                        return Err(format!("size identity fails for {lambda}, d = {d}"));
                    }
                    if par_d(&core, &quo, d).map_err(|e| e.to_string())? != lambda {
                        return Err(format!("round trip fails for {lambda}, d = {d}"));
                    }
                    checked += 1;
                }
            }
        }
        Ok(format!("{checked} round trips"))
    });
}

#[test]
fn criterion_03_type_a_cuspidality() {
    criterion(3, "type-A cuspidality", Duration::from_secs(30), || {
        let mut checked = 0u64;
        for n in 1..=12u32 {
            let degrees: Vec<(Partition, cmuni::UniPoly)> = partitions_of(n as u64)
                .into_iter()
                .map(|l| {
                    let deg = generic_degree_a(&l);
                    (l, deg)
                })
                .collect();
            for d in 2..=n {
                let zeta = Cyclotomic::root_of_unity(d, 1);
                for (lambda, deg) in &degrees {
                    let (_, quo) = core_quotient(lambda, d);
                    let expected = (n as u64 / d as u64) - quo.size();
                    if phi_d_multiplicity(deg, d) as u64 != expected {
                        return Err(format!("multiplicity off for {lambda}, d = {d}"));
                    }
                    let cuspidal =
                        deg.root_multiplicity(&zeta).unwrap() as u64 >= n as u64 / d as u64;
                    if cuspidal != lambda.is_d_core(d) {
                        return Err(format!("cuspidality mismatch for {lambda}, d = {d}"));
                    }
                    checked += 1;
                }
            }
        }
        Ok(format!("{checked} (label, d) pairs"))
    });
}

#[test]
fn criterion_04_rank2_matching() {
    criterion(4, "rank-2 matching", Duration::from_secs(5), || {
        for which in [Rank2::B2, Rank2::G2] {
            let r = rank2_fixed_check(which);
            if !r.pass {
                return Err(format!(
                    "root multisets differ at d = {}: {:?} vs {:?}",
                    r.coxeter_number, r.shifted_fixed_roots, r.cyclic_roots
                ));
            }
        }
        Ok("B2 (d = 4) and G2 (d = 6)".to_string())
    });
}

#[test]
fn criterion_05_g4_suite() {
    criterion(5, "G4 suite", Duration::from_secs(5), || {
        // (a) fixed points, (b) homogeneity.
        let presentation = g4_presentation();
        if presentation.equations.len() != 10 {
            return Err("presentation must carry ten equations".to_string());
        }
        verify_fixed_points(&presentation, &g4_fixed_points()).map_err(|e| e.to_string())?;
        for (i, (eq, w)) in presentation.equations.iter().enumerate() {
            if eq.weighted_degree(&G4_WEIGHTS) != Some(*w) {
                return Err(format!("equation {} not homogeneous", i + 1));
            }
        }
        // (c), (d), (e): embeddings, singular values, cyclic matching.
        for d in [1u32, 4, 6] {
            let report = g4_surface_checks(d);
            if let Some(c) = report.checks.iter().find(|c| !c.pass) {
                return Err(format!("surface check {} failed: {}", c.id, c.detail));
            }
        }
        // (f) series vs geometry.
        for d in [4u32, 6] {
            let r = g4_series_geometry_crosscheck(d);
            if !r.pass {
                return Err(format!("series-geometry mismatch at d = {d}"));
            }
        }
        // (g) Euler invariants (12, 4, 6, 0), spans (0, 8, 6, 12), sum 12.
        let table = table_hardcoded(Hardcoded::G4);
        let k = spetsial_parameter(&table);
        let families = hardcoded_cm_families(Hardcoded::G4);
        let datum = g4_datum();
        let expected = [("club", 12, 0), ("diamond", 4, 8), ("heart", 6, 6), ("spade", 0, 12)];
        for (name, omega, span) in expected {
            let (_, block) = families.blocks.iter().find(|(n, _)| n == name).unwrap();
            for label in block {
                let i = table.irr_index(label).unwrap();
                if euler_invariant(&table, &k, i).unwrap()
                    != Cyclotomic::from_rational(rat(omega))
                {
                    return Err(format!("euler invariant off in family {name}"));
                }
            }
            for u in datum.unipotents.iter().filter(|u| u.family == name) {
                let (a, big_a) = degree_span(&u.degree).unwrap();
                if a + big_a != span as u64 {
                    return Err(format!("span off for {}", u.label));
                }
            }
            if omega + span != 12 {
                return Err(format!("affine relation off for {name}"));
            }
        }
        let report = g4_consistency();
        if !report.pass {
            return Err("datum consistency report failed".to_string());
        }
        Ok("points, homogeneity, embeddings, surfaces, series, invariants".to_string())
    });
}

#[test]
fn criterion_06_classical_tables() {
    criterion(6, "classical tables", Duration::from_secs(5), || {
        let mut rows = 0usize;
        for n in 2..=12u32 {
            let t = classical_hc(ClassicalKind::B, n).map_err(|e| e.to_string())?;
            if !t.diff().is_empty() {
                return Err(format!("type B mismatch at n = {n}"));
            }
            rows += t.hc.len();
        }
        for kind in [ClassicalKind::Dplus, ClassicalKind::Dminus] {
            for n in 4..=12u32 {
                let t = classical_hc(kind, n).map_err(|e| e.to_string())?;
                if !t.diff().is_empty() {
                    return Err(format!("type {kind} mismatch at n = {n}"));
                }
                rows += t.hc.len();
            }
        }
        for r in 1..=5u32 {
            let c = symbol_check(r);
            if !c.same_entries || c.defects != (2 * r + 1, 1) {
                return Err(format!("symbol check fails at r = {r}"));
            }
        }
        Ok(format!("{rows} table rows, symbols r <= 5"))
    });
}

#[test]
fn criterion_07_michel_identity() {
    criterion(7, "regular-element identity", Duration::from_secs(60), || {
        let mut checked = 0usize;
        for n in 1..=10u32 {
            for d in 1..=n {
                if n % d != 0 {
                    continue;
                }
                let report = michel_identity_a(n, d).map_err(|e| e.to_string())?;
                if let Some(case) = report.cases.iter().find(|c| c.lhs != c.rhs) {
                    return Err(format!(
                        "identity fails at n = {n}, d = {d}, lambda = {}",
                        case.lambda
                    ));
                }
                checked += report.cases.len();
            }
        }
        Ok(format!("{checked} labels over all d | n <= 10"))
    });
}

#[test]
fn criterion_08_filtration_instances() {
    criterion(8, "filtration transfer", Duration::from_secs(60), || {
        let mut cases = 0usize;
        for d in [2u32, 3] {
            for n in d..=6 {
                let report = check_filtration_conjecture(n, d).map_err(|e| e.to_string())?;
                if !report.pass {
                    return Err(format!("transfer fails at n = {n}, d = {d}"));
                }
                cases += report.cases.len();
            }
        }
        Ok(format!("{cases} (core, level) cases"))
    });
}

#[test]
fn criterion_09_character_table_properties() {
    criterion(9, "character tables", Duration::from_secs(30), || {
        let mut tables = 0usize;
        for n in 1..=10u32 {
            table_symmetric(n)
                .unwrap()
                .check_orthogonality()
                .map_err(|e| format!("S{n}: {e}"))?;
            tables += 1;
        }
        for d in 2..=12u32 {
            for r in 1..=(12 / d) {
                table_wreath(d, r)
                    .unwrap()
                    .check_orthogonality()
                    .map_err(|e| format!("G({d},1,{r}): {e}"))?;
                tables += 1;
            }
        }
        for which in [Hardcoded::B2, Hardcoded::G2, Hardcoded::G4] {
            table_hardcoded(which)
                .check_orthogonality()
                .map_err(|e| format!("{which}: {e}"))?;
            tables += 1;
        }
        // Wreath degeneration at d = 1 equals the symmetric table.
        for r in 1..=6u32 {
            let w = table_wreath(1, r).unwrap();
            let s = table_symmetric(r).unwrap();
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
                    if w.values[i][j] != s.values[si][sj] {
                        return Err(format!("degeneration fails at r = {r}"));
                    }
                }
            }
            tables += 1;
        }
        // Border-strip tables equal the matrix-built oracle for n <= 5.
        for n in 2..=5u32 {
            cmuni_cli::oracle::compare_with_matrix_oracle(n)?;
        }
        // Affine relation for n <= 8.
        for n in 2..=8u32 {
            let t = table_symmetric(n).unwrap();
            let k = spetsial_parameter(&t);
            for (i, label) in t.irreducibles.iter().enumerate() {
                let IrrLabel::Par(lambda) = label else { unreachable!() };
                let (a, big_a) = a_a_of(&generic_degree_a(lambda)).unwrap();
                let omega = euler_invariant(&t, &k, i).unwrap();
                let total = omega.add(&Cyclotomic::from_rational(rat((a + big_a) as i64)));
                if total != Cyclotomic::from_rational(rat(n as i64 * (n as i64 - 1))) {
                    return Err(format!("affine relation fails for {lambda}"));
                }
            }
        }
        Ok(format!("{tables} tables orthogonal; oracle and affine checks"))
    });
}

#[test]
fn criterion_10_cli_contract() {
    criterion(10, "CLI contract", Duration::from_secs(180), || {
        let output = std::process::Command::new(env!("CARGO_BIN_EXE_cmuni"))
            .args(["verify", "all", "--json"])
            .output()
            .map_err(|e| e.to_string())?;
        if !output.status.success() {
            return Err(format!("verify all exited with {:?}", output.status.code()));
        }
        let value: serde_json::Value =
            serde_json::from_slice(&output.stdout).map_err(|e| e.to_string())?;
        cmuni_cli::schema::validate("bundle", &value)?;
        if value["status"] != "pass" {
            return Err("bundle status is not pass".to_string());
        }
        let suites = value["suites"].as_array().unwrap().len();
        Ok(format!("verify all: exit 0, {suites} suites, schema valid"))
    });
}
