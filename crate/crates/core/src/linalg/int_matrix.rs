use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::LinalgError;

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::ShapeMismatch {
                op: "new",
                left: (rows, cols),
                right: (data.len(), 1),
            });
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { BigInt::one() } else { BigInt::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        IntMatrix { rows, cols, data }
    }

    /// Panics on ragged rows.
    pub fn from_rows(rows: &[&[i64]]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Self::from_fn(rows.len(), ncols, |r, c| BigInt::from(rows[r][c]))
    }

    pub fn diagonal(entries: &[BigInt]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |r, c| if r == c { entries[r].clone() } else { BigInt::zero() })
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

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c).clone()).collect())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rows)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|r| (0..self.cols).all(|c| r == c || self.get(r, c).is_zero()))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::ShapeMismatch {
                op: "mul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(Self::from_fn(self.rows, other.cols, |r, c| {
            (0..self.cols)
                .map(|k| self.get(r, k) * other.get(k, c))
                .sum()
        }))
    }

    /// `[self | other]`
    pub fn hconcat(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.rows != other.rows {
            return Err(LinalgError::ShapeMismatch {
                op: "hconcat",
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(Self::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        }))
    }

    /// `[self; other]`
    pub fn vconcat(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.cols {
            return Err(LinalgError::ShapeMismatch {
                op: "vconcat",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(IntMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Fraction-free (Bareiss) determinant.
    pub fn det(&self) -> Result<BigInt, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::ShapeMismatch {
                op: "det",
                left: self.shape(),
                right: self.shape(),
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.to_rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                    return Ok(BigInt::zero());
                };
                a.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        Ok(sign * &a[n - 1][n - 1])
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix {}x{}\n{}", self.rows, self.cols, self)
    }
}

/// `U·M·V = D` with `U`, `V` unimodular and `D` diagonal, `d₁ | d₂ | …`,
/// every diagonal entry nonnegative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// Diagonal entries `d₁, …, d_min(rows, cols)`, zeros included.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols))
            .map(|k| self.d.get(k, k).clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().iter().filter(|d| !d.is_zero()).count()
    }
}

/// Smith normal form by repeated reduction against the nonzero entry of
/// minimal absolute value (first in row-major order on ties).
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = m.shape();
    let mut a = m.to_rows();
    let mut u = IntMatrix::identity(rows).to_rows();
    let mut v = IntMatrix::identity(cols).to_rows();

    let swap_cols = |x: &mut Vec<Vec<BigInt>>, i: usize, j: usize| {
        for row in x.iter_mut() {
            row.swap(i, j);
        }
    };
    // row_dst -= q * row_src
    let row_axpy = |x: &mut Vec<Vec<BigInt>>, dst: usize, src: usize, q: &BigInt| {
        let (d, s) = if dst < src {
            let (lo, hi) = x.split_at_mut(src);
            (&mut lo[dst], &hi[0])
        } else {
            let (lo, hi) = x.split_at_mut(dst);
            (&mut hi[0], &lo[src])
        };
        for (dv, sv) in d.iter_mut().zip(s.iter()) {
            if !sv.is_zero() {
                *dv -= q * sv;
            }
        }
    };
    // col_dst -= q * col_src
    let col_axpy = |x: &mut Vec<Vec<BigInt>>, dst: usize, src: usize, q: &BigInt| {
        for row in x.iter_mut() {
            if !row[src].is_zero() {
                let t = q * &row[src];
                row[dst] -= t;
            }
        }
    };

    let steps = rows.min(cols);
    'outer: for t in 0..steps {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for r in t..rows {
                for c in t..cols {
                    if a[r][c].is_zero() {
                        continue;
                    }
                    match best {
                        Some((br, bc)) if a[br][bc].abs() <= a[r][c].abs() => {}
                        _ => best = Some((r, c)),
                    }
                }
            }
            let Some((pr, pc)) = best else {
                break 'outer;
            };
            if pr != t {
                a.swap(t, pr);
                u.swap(t, pr);
            }
            if pc != t {
                swap_cols(&mut a, t, pc);
                swap_cols(&mut v, t, pc);
            }

            let mut clean = true;
            for r in t + 1..rows {
                if a[r][t].is_zero() {
                    continue;
                }
                let q = &a[r][t] / &a[t][t];
                row_axpy(&mut a, r, t, &q);
                row_axpy(&mut u, r, t, &q);
                if !a[r][t].is_zero() {
                    clean = false;
                }
            }
            for c in t + 1..cols {
                if a[t][c].is_zero() {
                    continue;
                }
                let q = &a[t][c] / &a[t][t];
                col_axpy(&mut a, c, t, &q);
                col_axpy(&mut v, c, t, &q);
                if !a[t][c].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }

            let pivot = a[t][t].clone();
            let offender = (t + 1..rows)
                .find(|&r| (t + 1..cols).any(|c| !(&a[r][c] % &pivot).is_zero()));
            if let Some(r) = offender {
                let minus_one = -BigInt::one();
                row_axpy(&mut a, t, r, &minus_one);
                row_axpy(&mut u, t, r, &minus_one);
                continue;
            }
            break;
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = -&*x;
            }
            for x in u[t].iter_mut() {
                *x = -&*x;
            }
        }
    }

    let flatten = |x: Vec<Vec<BigInt>>, r: usize, c: usize| IntMatrix {
        rows: r,
        cols: c,
        data: x.into_iter().flatten().collect(),
    };
    SmithForm {
        d: flatten(a, rows, cols),
        u: flatten(u, rows, rows),
        v: flatten(v, cols, cols),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn check(m: &IntMatrix) -> SmithForm {
        let s = smith_normal_form(m);
        assert_eq!(s.u.mul(m).unwrap().mul(&s.v).unwrap(), s.d);
        assert!(s.d.is_diagonal());
        assert_eq!(s.u.det().unwrap().abs(), BigInt::one());
        assert_eq!(s.v.det().unwrap().abs(), BigInt::one());
        let f = s.invariant_factors();
        for w in f.windows(2) {
            if w[1].is_zero() {
                continue;
            }
            assert!(!w[0].is_zero() && (&w[1] % &w[0]).is_zero(), "{f:?}");
        }
        assert!(f.iter().all(|d| !d.is_negative()));
        s
    }

    #[test]
    fn two_by_two_example() {
        // d₁ = gcd of entries = 2, d₁d₂ = |det| = |16 − 24| = 8
        let m = IntMatrix::from_rows(&[&[2, 4], &[6, 8]]);
        let s = check(&m);
        let det = m.det().unwrap().abs();
        let f = s.invariant_factors();
        assert_eq!(f[0], BigInt::from(2));
        assert_eq!(&f[0] * &f[1], det);
        assert_eq!(f, vec![BigInt::from(2), BigInt::from(4)]);
    }

    #[test]
    fn identity_is_fixed() {
        let s = check(&IntMatrix::identity(4));
        assert!(s.d.is_identity());
    }

    #[test]
    fn zero_one_by_one() {
        let s = check(&IntMatrix::from_rows(&[&[0]]));
        assert_eq!(s.d, IntMatrix::from_rows(&[&[0]]));
    }

    #[test]
    fn rectangular_and_degenerate() {
        check(&IntMatrix::from_rows(&[&[3, 0, 2], &[0, 6, 4]]));
        check(&IntMatrix::from_rows(&[&[1, 2], &[2, 4], &[3, 6]]));
        check(&IntMatrix::zeros(0, 3));
        let s = check(&IntMatrix::from_rows(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.invariant_factors(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn det_bareiss() {
        let m = IntMatrix::from_rows(&[&[0, 2, 1], &[1, 0, 0], &[3, 1, 1]]);
        assert_eq!(m.det().unwrap(), BigInt::from(-1));
        assert_eq!(IntMatrix::zeros(0, 0).det().unwrap(), BigInt::one());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]
        #[test]
        fn smith_invariants(r in 1usize..=4, c in 1usize..=4, seed in prop::collection::vec(-9i64..=9, 16)) {
            let m = IntMatrix::from_fn(r, c, |i, j| BigInt::from(seed[i * 4 + j]));
            let s = check(&m);
            if r == c {
                let prod: BigInt = s.invariant_factors().iter().product();
                prop_assert_eq!(prod, m.det().unwrap().abs());
            }
        }
    }
}
