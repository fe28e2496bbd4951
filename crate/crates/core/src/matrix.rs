//! Dense matrices over exact rationals: products, reduced row echelon form,
//! rank, kernel bases, and linear solves.
//!
//! This is deliberately small — the hom-space and resolution computations
//! need nothing beyond Gaussian elimination, and exact `BigRational`
//! arithmetic makes every rank decision unambiguous.

use std::fmt;

use num::traits::{One, Zero};

use crate::error::Error;
use crate::rat::Rat;

/// A row-major dense matrix over `Rat`.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    /// Build from explicit rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self, Error> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch {
                what: "matrix rows".into(),
                expected: format!("{c} columns in every row"),
                got: "ragged rows".into(),
            });
        }
        Ok(Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut m = Mat::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Integer-entry convenience constructor, mostly for tests and standard modules.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let data = rows.iter().map(|r| r.iter().map(|&n| crate::rat::ratz(n)).collect()).collect();
        Mat::from_rows(data).expect("literal rows are rectangular")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, rhs: &Mat) -> Result<Mat, Error> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch {
                what: "matrix product".into(),
                expected: format!("left cols = right rows ({} x {})", self.rows, self.cols),
                got: format!("{} x {}", rhs.rows, rhs.cols),
            });
        }
        let mut out = Mat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let prod = a * b;
                        out[(i, j)] += prod;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Apply to a column vector.
    pub fn apply(&self, v: &[Rat]) -> Result<Vec<Rat>, Error> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch {
                what: "matrix-vector product".into(),
                expected: format!("vector of length {}", self.cols),
                got: format!("length {}", v.len()),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for j in 0..self.cols {
                    if !v[j].is_zero() && !self[(i, j)].is_zero() {
                        acc += &self[(i, j)] * &v[j];
                    }
                }
                acc
            })
            .collect())
    }

    /// Stack `self` on top of `other` (must agree in column count).
    pub fn vstack(&self, other: &Mat) -> Result<Mat, Error> {
        if self.cols != other.cols {
            return Err(Error::ShapeMismatch {
                what: "vertical stack".into(),
                expected: format!("{} columns", self.cols),
                got: format!("{} columns", other.cols),
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Mat { rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Block-diagonal sum; the shape used to assemble direct sums of modules.
    pub fn block_diag(&self, other: &Mat) -> Mat {
        let mut out = Mat::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        out
    }

    /// Reduced row echelon form together with the pivot column indices.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pivot_row) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, pivot_row);
            let inv = m[(row, col)].recip();
            for j in col..m.cols {
                let scaled = &m[(row, j)] * &inv;
                m[(row, j)] = scaled;
            }
            for r in 0..m.rows {
                if r != row && !m[(r, col)].is_zero() {
                    let factor = m[(r, col)].clone();
                    for j in col..m.cols {
                        let delta = &factor * &m[(row, j)];
                        m[(r, j)] -= delta;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of the right null space, as column vectors.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let (r, pivots) = self.rref();
        let pivot_set: Vec<usize> = pivots.clone();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for (row_idx, &p) in pivot_set.iter().enumerate() {
                v[p] = -r[(row_idx, free)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of `self * x = rhs` (free variables set to zero), or
    /// `None` when the system is inconsistent.
    pub fn solve(&self, rhs: &[Rat]) -> Result<Option<Vec<Rat>>, Error> {
        if rhs.len() != self.rows {
            return Err(Error::ShapeMismatch {
                what: "linear solve".into(),
                expected: format!("rhs of length {}", self.rows),
                got: format!("length {}", rhs.len()),
            });
        }
        let mut aug = Mat::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = rhs[i].clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(None); // pivot in the augmented column: inconsistent
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (row_idx, &p) in pivots.iter().enumerate() {
            x[p] = r[(row_idx, self.cols)].clone();
        }
        Ok(Some(x))
    }

    /// Solve `self * X = rhs` column by column; `None` when any column is
    /// inconsistent.
    pub fn solve_mat(&self, rhs: &Mat) -> Result<Option<Mat>, Error> {
        if rhs.rows != self.rows {
            return Err(Error::ShapeMismatch {
                what: "matrix solve".into(),
                expected: format!("rhs with {} rows", self.rows),
                got: format!("{} rows", rhs.rows),
            });
        }
        let mut out = Mat::zeros(self.cols, rhs.cols);
        for j in 0..rhs.cols {
            let col: Vec<Rat> = (0..rhs.rows).map(|i| rhs[(i, j)].clone()).collect();
            match self.solve(&col)? {
                Some(x) => {
                    for (i, xi) in x.into_iter().enumerate() {
                        out[(i, j)] = xi;
                    }
                }
                None => return Ok(None),
            }
        }
        Ok(Some(out))
    }

    /// Inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Result<Option<Mat>, Error> {
        if self.rows != self.cols {
            return Err(Error::ShapeMismatch {
                what: "matrix inverse".into(),
                expected: "a square matrix".into(),
                got: format!("{}x{}", self.rows, self.cols),
            });
        }
        let n = self.rows;
        let mut aug = Mat::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rat::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots.iter().take(n).enumerate().any(|(i, &p)| p != i) {
            return Ok(None);
        }
        Ok(Some(Mat::from_fn(n, n, |i, j| r[(i, n + j)].clone())))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(Rat::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
