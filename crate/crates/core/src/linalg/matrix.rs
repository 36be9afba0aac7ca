use std::fmt;

use super::{CycScalar, LinalgError};

/// Dense row-major matrix over ℚ(ζ₈).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<CycScalar>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<CycScalar>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::ShapeMismatch {
                op: "new",
                left: (rows, cols),
                right: (data.len(), 1),
            });
        }
        Ok(ExactMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![CycScalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| {
            if r == c {
                CycScalar::one()
            } else {
                CycScalar::zero()
            }
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> CycScalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        ExactMatrix { rows, cols, data }
    }

    /// Integer matrix from row slices. Panics on ragged input.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Self::from_fn(rows.len(), ncols, |r, c| CycScalar::from_int(rows[r][c]))
    }

    pub fn diagonal(entries: &[CycScalar]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |r, c| {
            if r == c {
                entries[r].clone()
            } else {
                CycScalar::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &CycScalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: CycScalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[CycScalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycScalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let v = self.get(r, c);
                    if r == c {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    fn check_same_shape(&self, other: &Self, op: &'static str) -> Result<(), LinalgError> {
        if self.shape() != other.shape() {
            return Err(LinalgError::ShapeMismatch {
                op,
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_same_shape(other, "add")?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(ExactMatrix { data, ..*self })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_same_shape(other, "sub")?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(ExactMatrix { data, ..*self })
    }

    pub fn neg(&self) -> Self {
        ExactMatrix {
            data: self.data.iter().map(|a| -a).collect(),
            ..*self
        }
    }

    pub fn scale(&self, s: &CycScalar) -> Self {
        ExactMatrix {
            data: self.data.iter().map(|a| a * s).collect(),
            ..*self
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::ShapeMismatch {
                op: "mul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = r * out.cols + c;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// Product of a chain of matrices, left to right.
    pub fn product(factors: &[&Self]) -> Result<Self, LinalgError> {
        let (first, rest) = factors.split_first().expect("empty product");
        rest.iter().try_fold((*first).clone(), |acc, m| acc.mul(m))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    /// Gauss–Jordan inverse.
    pub fn inverse(&self) -> Result<Self, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::ShapeMismatch {
                op: "inverse",
                left: self.shape(),
                right: self.shape(),
            });
        }
        let n = self.rows;
        let mut a: Vec<Vec<CycScalar>> = (0..n)
            .map(|r| (0..n).map(|c| self.get(r, c).clone()).collect())
            .collect();
        let mut inv: Vec<Vec<CycScalar>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| if r == c { CycScalar::one() } else { CycScalar::zero() })
                    .collect()
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or(LinalgError::SingularMatrix)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p_inv = a[col][col].inv()?;
            if !p_inv.is_one() {
                for v in a[col].iter_mut() {
                    *v = &*v * &p_inv;
                }
                for v in inv[col].iter_mut() {
                    *v = &*v * &p_inv;
                }
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for c in 0..n {
                    if !a[col][c].is_zero() {
                        a[r][c] = &a[r][c] - &(&f * &a[col][c]);
                    }
                    if !inv[col][c].is_zero() {
                        inv[r][c] = &inv[r][c] - &(&f * &inv[col][c]);
                    }
                }
            }
        }
        Ok(ExactMatrix {
            rows: n,
            cols: n,
            data: inv.into_iter().flatten().collect(),
        })
    }

    pub fn det(&self) -> Result<CycScalar, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::ShapeMismatch {
                op: "det",
                left: self.shape(),
                right: self.shape(),
            });
        }
        let n = self.rows;
        let mut a: Vec<Vec<CycScalar>> = (0..n)
            .map(|r| (0..n).map(|c| self.get(r, c).clone()).collect())
            .collect();
        let mut det = CycScalar::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Ok(CycScalar::zero());
            };
            if pivot != col {
                a.swap(col, pivot);
                det = -det;
            }
            det = &det * &a[col][col];
            let p_inv = a[col][col].inv()?;
            for r in col + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let f = &a[r][col] * &p_inv;
                for c in col..n {
                    if !a[col][c].is_zero() {
                        a[r][c] = &a[r][c] - &(&f * &a[col][c]);
                    }
                }
            }
        }
        Ok(det)
    }

    /// Kronecker product; row index of `A ⊗ B` is `ra·rows(B) + rb`.
    pub fn kron(&self, other: &Self) -> Self {
        let (p, q) = other.shape();
        Self::from_fn(self.rows * p, self.cols * q, |r, c| {
            let a = self.get(r / p, c / q);
            if a.is_zero() {
                CycScalar::zero()
            } else {
                a * other.get(r % p, c % q)
            }
        })
    }

    pub fn block_diag(blocks: &[&Self]) -> Self {
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.write_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Assemble a matrix from a grid of blocks. Every block in a grid row must
    /// share a height and every block in a grid column a width.
    pub fn from_blocks(grid: &[&[&Self]]) -> Result<Self, LinalgError> {
        let heights: Vec<usize> = grid.iter().map(|row| row[0].rows).collect();
        let widths: Vec<usize> = grid[0].iter().map(|b| b.cols).collect();
        for row in grid {
            if row.len() != widths.len() {
                return Err(LinalgError::ShapeMismatch {
                    op: "from_blocks",
                    left: (grid.len(), widths.len()),
                    right: (grid.len(), row.len()),
                });
            }
        }
        for (i, row) in grid.iter().enumerate() {
            for (j, b) in row.iter().enumerate() {
                if b.rows != heights[i] || b.cols != widths[j] {
                    return Err(LinalgError::ShapeMismatch {
                        op: "from_blocks",
                        left: (heights[i], widths[j]),
                        right: b.shape(),
                    });
                }
            }
        }
        let mut out = Self::zeros(heights.iter().sum(), widths.iter().sum());
        let mut r0 = 0;
        for (i, row) in grid.iter().enumerate() {
            let mut c0 = 0;
            for (j, b) in row.iter().enumerate() {
                out.write_block(r0, c0, b);
                c0 += widths[j];
            }
            r0 += heights[i];
        }
        Ok(out)
    }

    fn write_block(&mut self, r0: usize, c0: usize, b: &Self) {
        for r in 0..b.rows {
            for c in 0..b.cols {
                let v = b.get(r, c);
                if !v.is_zero() {
                    self.set(r0 + r, c0 + c, v.clone());
                }
            }
        }
    }

    /// Copy of the `rows × cols` block starting at `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        assert!(r0 + rows <= self.rows && c0 + cols <= self.cols, "block out of bounds");
        Self::from_fn(rows, cols, |r, c| self.get(r0 + r, c0 + c).clone())
    }

    /// Permutation matrix whose `k`-th column is the standard basis vector
    /// `e_{cols[k]}` (0-based).
    pub fn perm_matrix(cols: &[usize]) -> Result<Self, LinalgError> {
        let n = cols.len();
        let mut seen = vec![false; n];
        for &c in cols {
            if c >= n || seen[c] {
                return Err(LinalgError::InvalidPermutation(cols.to_vec()));
            }
            seen[c] = true;
        }
        let mut out = Self::zeros(n, n);
        for (k, &c) in cols.iter().enumerate() {
            out.set(c, k, CycScalar::one());
        }
        Ok(out)
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactMatrix {}x{}\n{}", self.rows, self.cols, self)
    }
}
