//! Matrix-built symmetric-group character tables, used as the independent
//! reference for the border-strip tables: every value comes from traces and
//! determinants of explicit permutation matrices and their tensor
//! constructions (reflection representation, sign twists, exterior square,
//! symmetric-square complement).

use cmuni::chartab::{table_symmetric, CharacterTable, ClassLabel};
use cmuni::exact::Cyclotomic;
use cmuni::linalg::Matrix;
use cmuni::partitions::Partition;
use cmuni::Rational;

fn perm_matrix(perm: &[usize]) -> Matrix {
    let n = perm.len();
    let mut m = Matrix::zero(n, n);
    for (i, &j) in perm.iter().enumerate() {
        *m.at_mut(j, i) = Cyclotomic::one(1);
    }
    m
}

fn representative(cycles: &Partition) -> Vec<usize> {
    let n = cycles.size() as usize;
    let mut perm: Vec<usize> = (0..n).collect();
    let mut next = 0;
    for &len in cycles.parts() {
        let len = len as usize;
        for k in 0..len - 1 {
            perm[next + k] = next + k + 1;
        }
        perm[next + len - 1] = next;
        next += len;
    }
    perm
}

fn to_int(c: &Cyclotomic) -> i64 {
    use num::One;
    let r: Rational = c.to_rational().expect("trace of a rational matrix");
    assert!(r.denom().is_one());
    i64::try_from(r.numer().clone()).unwrap()
}

/// One oracle character: a partition label and its values in the class
/// order of the border-strip table.
pub struct OracleRow {
    pub label: Partition,
    pub values: Vec<i64>,
}

/// The full table of the symmetric group on `n` points (2 <= n <= 5) from
/// permutation matrices.
pub fn matrix_table(n: u32) -> Vec<OracleRow> {
    assert!((2..=5).contains(&n), "matrix oracle covers n = 2..=5");
    let table = table_symmetric(n).unwrap();
    let classes: Vec<Partition> = table
        .classes
        .iter()
        .map(|c| match &c.label {
            ClassLabel::Cycles(p) => p.clone(),
            _ => unreachable!(),
        })
        .collect();
    struct Info {
        fix: i64,
        fix_sq: i64,
        det: i64,
    }
    let info: Vec<Info> = classes
        .iter()
        .map(|cycles| {
            let m = perm_matrix(&representative(cycles));
            let sq = m.mul(&m);
            Info {
                fix: to_int(&m.trace()),
                fix_sq: to_int(&sq.trace()),
                det: to_int(&m.determinant()),
            }
        })
        .collect();
    let chi_v: Vec<i64> = info.iter().map(|i| i.fix - 1).collect();
    let chi_v_sq: Vec<i64> = info.iter().map(|i| i.fix_sq - 1).collect();
    let sign: Vec<i64> = info.iter().map(|i| i.det).collect();
    let twist = |values: &[i64]| -> Vec<i64> {
        values.iter().zip(&sign).map(|(v, s)| v * s).collect()
    };

    let mut rows = vec![OracleRow {
        label: Partition::new(vec![n]),
        values: vec![1; classes.len()],
    }];
    rows.push(OracleRow {
        label: Partition::new(vec![1; n as usize]),
        values: sign.clone(),
    });
    if n >= 3 {
        rows.push(OracleRow {
            label: Partition::new(vec![n - 1, 1]),
            values: chi_v.clone(),
        });
    }
    if n >= 4 {
        rows.push(OracleRow {
            label: Partition::new(vec![n - 1, 1]).conjugate(),
            values: twist(&chi_v),
        });
        let s2_complement: Vec<i64> = (0..classes.len())
            .map(|c| (chi_v[c] * chi_v[c] + chi_v_sq[c]) / 2 - chi_v[c] - 1)
            .collect();
        rows.push(OracleRow {
            label: Partition::new(vec![n - 2, 2]),
            values: s2_complement.clone(),
        });
        if n >= 5 {
            let wedge: Vec<i64> = (0..classes.len())
                .map(|c| (chi_v[c] * chi_v[c] - chi_v_sq[c]) / 2)
                .collect();
            rows.push(OracleRow {
                label: Partition::new(vec![n - 2, 1, 1]),
                values: wedge,
            });
            rows.push(OracleRow {
                label: Partition::new(vec![n - 2, 2]).conjugate(),
                values: twist(&s2_complement),
            });
        }
    }
    rows
}

/// Compares the border-strip table of rank `n` with the matrix oracle;
/// returns a failure description naming the first mismatch.
pub fn compare_with_matrix_oracle(n: u32) -> Result<usize, String> {
    let table: CharacterTable = table_symmetric(n).map_err(|e| e.to_string())?;
    let oracle = matrix_table(n);
    if oracle.len() != table.irreducibles.len() {
        return Err(format!(
            "oracle covers {} of {} characters",
            oracle.len(),
            table.irreducibles.len()
        ));
    }
    let mut compared = 0;
    for row in &oracle {
        let i = table
            .irr_index(&cmuni::chartab::IrrLabel::Par(row.label.clone()))
            .ok_or_else(|| format!("missing label {}", row.label))?;
        for (c, &v) in row.values.iter().enumerate() {
            let expected = Cyclotomic::from_rational(cmuni::exact::rat(v));
            if table.values[i][c] != expected {
                return Err(format!(
                    "value mismatch at character {}, class {}: {} vs oracle {}",
                    row.label, table.classes[c].label, table.values[i][c], v
                ));
            }
            compared += 1;
        }
    }
    Ok(compared)
}
