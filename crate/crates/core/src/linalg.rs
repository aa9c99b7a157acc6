//! Exact linear algebra over cyclotomic fields.
//!
//! Plain Gaussian elimination with first-nonzero pivoting; dimensions here
//! never exceed the number of conjugacy classes of the groups in play, so
//! nothing cleverer is warranted.

use crate::exact::Cyclotomic;

/// A dense matrix of cyclotomic entries, row major.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Cyclotomic>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Cyclotomic>) -> Self {
        assert_eq!(rows * cols, data.len());
        Matrix { rows, cols, data }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Cyclotomic::zero(1); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Cyclotomic::one(1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Cyclotomic>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        assert!(rows.iter().all(|x| x.len() == c));
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn at(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Cyclotomic {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Cyclotomic] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    *out.at_mut(i, j) = out.at(i, j).add(&a.mul(b));
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.sub(b))
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn trace(&self) -> Cyclotomic {
        assert_eq!(self.rows, self.cols);
        let mut t = Cyclotomic::zero(1);
        for i in 0..self.rows {
            t = t.add(self.at(i, i));
        }
        t
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut s = Cyclotomic::zero(1);
                for (j, x) in v.iter().enumerate() {
                    if !x.is_zero() && !self.at(i, j).is_zero() {
                        s = s.add(&self.at(i, j).mul(x));
                    }
                }
                s
            })
            .collect()
    }

    /// Determinant by fraction-free-enough Gaussian elimination (entries are
    /// field elements, so plain division is fine).
    pub fn determinant(&self) -> Cyclotomic {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Cyclotomic::one(1);
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a.at(r, col).is_zero()) else {
                return Cyclotomic::zero(1);
            };
            if pivot != col {
                for j in 0..n {
                    a.data.swap(col * n + j, pivot * n + j);
                }
                det = det.neg();
            }
            det = det.mul(a.at(col, col));
            let inv = a.at(col, col).inverse().expect("pivot is nonzero");
            for r in (col + 1)..n {
                if a.at(r, col).is_zero() {
                    continue;
                }
                let factor = a.at(r, col).mul(&inv);
                for j in col..n {
                    let sub = factor.mul(a.at(col, j));
                    *a.at_mut(r, j) = a.at(r, j).sub(&sub);
                }
            }
        }
        det
    }

    /// Inverse of a square matrix by Gauss-Jordan; panics if singular (the
    /// call sites only invert group elements).
    pub fn inverse(&self) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a.at(r, col).is_zero())
                .expect("matrix is singular");
            if pivot != col {
                for j in 0..n {
                    a.data.swap(col * n + j, pivot * n + j);
                    inv.data.swap(col * n + j, pivot * n + j);
                }
            }
            let scale = a.at(col, col).inverse().expect("pivot is nonzero");
            for j in 0..n {
                *a.at_mut(col, j) = a.at(col, j).mul(&scale);
                *inv.at_mut(col, j) = inv.at(col, j).mul(&scale);
            }
            for r in 0..n {
                if r == col || a.at(r, col).is_zero() {
                    continue;
                }
                let factor = a.at(r, col).clone();
                for j in 0..n {
                    let sub_a = factor.mul(a.at(col, j));
                    *a.at_mut(r, j) = a.at(r, j).sub(&sub_a);
                    let sub_i = factor.mul(inv.at(col, j));
                    *inv.at_mut(r, j) = inv.at(r, j).sub(&sub_i);
                }
            }
        }
        inv
    }
}

/// Reduces a list of row vectors to echelon form; returns the independent
/// rows (a basis of the row span).
pub fn row_reduce(rows: &[Vec<Cyclotomic>]) -> Vec<Vec<Cyclotomic>> {
    let mut basis: Vec<Vec<Cyclotomic>> = Vec::new();
    for row in rows {
        let mut row = row.clone();
        for b in &basis {
            let lead = b.iter().position(|c| !c.is_zero()).unwrap();
            if row[lead].is_zero() {
                continue;
            }
            let factor = row[lead].clone();
            for (x, y) in row.iter_mut().zip(b) {
                *x = x.sub(&factor.mul(y));
            }
        }
        if let Some(lead) = row.iter().position(|c| !c.is_zero()) {
            let scale = row[lead].inverse().expect("leading entry is nonzero");
            for x in row.iter_mut() {
                *x = x.mul(&scale);
            }
            basis.push(row);
            basis.sort_by_key(|r| r.iter().position(|c| !c.is_zero()).unwrap());
        }
    }
    basis
}

/// Rank of a set of row vectors.
pub fn rank(rows: &[Vec<Cyclotomic>]) -> usize {
    row_reduce(rows).len()
}

/// Dimension of the kernel of the square matrix `a - lambda*id` style
/// operators; here just `cols - rank` of an arbitrary matrix.
pub fn kernel_dim(m: &Matrix) -> usize {
    let rows: Vec<Vec<Cyclotomic>> = (0..m.rows).map(|i| m.row(i).to_vec()).collect();
    m.cols - rank(&rows)
}

/// True when `candidate` lies in the row span of `basis` (basis need not be
/// reduced).
pub fn in_span(basis: &[Vec<Cyclotomic>], candidate: &[Vec<Cyclotomic>]) -> bool {
    let r = rank(basis);
    let mut all = basis.to_vec();
    all.extend(candidate.iter().cloned());
    rank(&all) == r
}

/// Basis of the intersection of two row spans, by the kernel construction:
/// a combination of `a`-rows equals a combination of `b`-rows exactly when
/// the stacked coefficient vector lies in the kernel of `[A^T | -B^T]`.
pub fn span_intersection(
    a: &[Vec<Cyclotomic>],
    b: &[Vec<Cyclotomic>],
) -> Vec<Vec<Cyclotomic>> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let dim = a[0].len();
    let cols = a.len() + b.len();
    // Rows of the constraint system: one per coordinate.
    let mut rows = Vec::with_capacity(dim);
    for coord in 0..dim {
        let mut row = Vec::with_capacity(cols);
        for va in a {
            row.push(va[coord].clone());
        }
        for vb in b {
            row.push(vb[coord].neg());
        }
        rows.push(row);
    }
    let ker = kernel_basis(&rows, cols);
    let mut out = Vec::new();
    for coeffs in ker {
        let mut v = vec![Cyclotomic::zero(1); dim];
        for (c, va) in coeffs.iter().take(a.len()).zip(a) {
            if c.is_zero() {
                continue;
            }
            for (x, y) in v.iter_mut().zip(va) {
                *x = x.add(&c.mul(y));
            }
        }
        if v.iter().any(|c| !c.is_zero()) {
            out.push(v);
        }
    }
    row_reduce(&out)
}

/// Solves `sum_j b_j columns[j] = rhs` by Gaussian elimination; `None` when
/// the system is inconsistent. Free coordinates are set to zero.
pub fn solve_in_span(columns: &[Vec<Cyclotomic>], rhs: &[Cyclotomic]) -> Option<Vec<Cyclotomic>> {
    let m = columns.len();
    let dim = rhs.len();
    // Augmented rows: one equation per coordinate.
    let mut rows: Vec<Vec<Cyclotomic>> = (0..dim)
        .map(|i| {
            let mut row: Vec<Cyclotomic> = columns.iter().map(|c| c[i].clone()).collect();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut rank = 0;
    for col in 0..m {
        let Some(p) = (rank..dim).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].inverse().unwrap();
        for x in rows[rank].iter_mut() {
            *x = x.mul(&inv);
        }
        for r in 0..dim {
            if r == rank || rows[r][col].is_zero() {
                continue;
            }
            let f = rows[r][col].clone();
            for j in 0..=m {
                let sub = f.mul(&rows[rank][j]);
                rows[r][j] = rows[r][j].sub(&sub);
            }
        }
        pivots.push((rank, col));
        rank += 1;
    }
    // Inconsistent if a zero row has nonzero right-hand side.
    for r in rank..dim {
        if !rows[r][m].is_zero() {
            return None;
        }
    }
    let mut sol = vec![Cyclotomic::zero(1); m];
    for (r, col) in pivots {
        sol[col] = rows[r][m].clone();
    }
    Some(sol)
}

/// Basis of the kernel of the linear map given by `rows` (each row is one
/// equation in `cols` unknowns).
pub fn kernel_basis(rows: &[Vec<Cyclotomic>], cols: usize) -> Vec<Vec<Cyclotomic>> {
    let reduced = row_reduce(rows);
    let pivots: Vec<usize> = reduced
        .iter()
        .map(|r| r.iter().position(|c| !c.is_zero()).unwrap())
        .collect();
    let free: Vec<usize> = (0..cols).filter(|j| !pivots.contains(j)).collect();
    let mut basis = Vec::new();
    for &f in &free {
        let mut v = vec![Cyclotomic::zero(1); cols];
        v[f] = Cyclotomic::one(1);
        // Back-substitute pivot coordinates.
        for (r, &p) in reduced.iter().zip(&pivots).rev() {
            let mut s = Cyclotomic::zero(1);
            for j in (p + 1)..cols {
                if !r[j].is_zero() && !v[j].is_zero() {
                    s = s.add(&r[j].mul(&v[j]));
                }
            }
            v[p] = s.neg();
        }
        basis.push(v);
    }
    basis
}
