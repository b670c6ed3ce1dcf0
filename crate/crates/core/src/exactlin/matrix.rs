use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{int, LinError, Scalar, Vector};

/// Dense rational matrix under the row-image convention.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![int(0); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = int(1);
        }
        m
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, LinError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinError::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Convenience for tests and catalog literals.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
            .expect("rectangular literal")
    }

    /// Permutation matrix sending `e_i` to `e_{perm[i]}`.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = Self::zeros(n, n);
        for (i, &j) in perm.iter().enumerate() {
            m.data[i * n + j] = int(1);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        self.data[i * self.cols + j] = value;
    }

    pub fn add_to(&mut self, i: usize, j: usize, value: &Scalar) {
        self.data[i * self.cols + j] += value;
    }

    /// Image of `e_i`.
    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Matrix) -> Result<Matrix, LinError> {
        if self.cols != next.rows {
            return Err(LinError::DimensionMismatch(format!(
                "cannot compose {}x{} with {}x{}",
                self.rows, self.cols, next.rows, next.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, next.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..next.cols {
                    let b = next.get(j, k);
                    if !b.is_zero() {
                        out.data[i * next.cols + k] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Applies the map to a coordinate vector: `v -> sum_i v_i row_i`.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vector, LinError> {
        if v.len() != self.rows {
            return Err(LinError::DimensionMismatch(format!(
                "vector of length {} for a map with {} rows",
                v.len(),
                self.rows
            )));
        }
        let mut out = vec![int(0); self.cols];
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, m) in out.iter_mut().zip(self.row(i)) {
                if !m.is_zero() {
                    *o += c * m;
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product; pair `(i, j)` maps to row `i * other.rows + j`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Matrix::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for p in 0..other.rows {
                    for q in 0..other.cols {
                        let b = other.get(p, q);
                        if !b.is_zero() {
                            out.set(i * other.rows + p, j * other.cols + q, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for col in 0..cols {
            let Some(p) = (rank..rows).find(|&r| !m[r * cols + col].is_zero()) else {
                continue;
            };
            for j in 0..cols {
                m.swap(p * cols + j, rank * cols + j);
            }
            let pivot = m[rank * cols + col].clone();
            for r in rank + 1..rows {
                let f = &m[r * cols + col] / &pivot;
                if f.is_zero() {
                    continue;
                }
                for j in col..cols {
                    let d = &f * &m[rank * cols + j];
                    m[r * cols + j] -= d;
                }
            }
            rank += 1;
        }
        rank
    }

    /// Exact inverse by fraction-free (Bareiss) Gauss-Jordan elimination on
    /// the denominator-cleared augmented matrix `[M | I]`.
    pub fn inverse(&self) -> Result<Matrix, LinError> {
        if !self.is_square() {
            return Err(LinError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let width = 2 * n;
        // Row i of M is scaled by the lcm of its denominators; M = D^-1 M_int,
        // hence M^-1 = M_int^-1 D.
        let mut scales = Vec::with_capacity(n);
        let mut a: Vec<BigInt> = Vec::with_capacity(n * width);
        for i in 0..n {
            let l = self.row(i).iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            for x in self.row(i) {
                a.push(x.numer() * (&l / x.denom()));
            }
            for j in 0..n {
                a.push(if i == j { BigInt::one() } else { BigInt::zero() });
            }
            scales.push(l);
        }
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !a[r * width + k].is_zero()) else {
                return Err(LinError::Singular { rank: self.rank(), dim: n });
            };
            if p != k {
                for j in 0..width {
                    a.swap(p * width + j, k * width + j);
                }
            }
            let pivot = a[k * width + k].clone();
            for i in 0..n {
                if i == k {
                    continue;
                }
                let factor = a[i * width + k].clone();
                for j in 0..width {
                    if j == k {
                        continue;
                    }
                    let v = &pivot * &a[i * width + j] - &factor * &a[k * width + j];
                    a[i * width + j] = v / &prev;
                }
                a[i * width + k] = BigInt::zero();
            }
            prev = pivot;
        }
        // Every diagonal entry now equals det(M_int) = prev.
        let det = prev;
        Ok(Matrix::from_fn(n, n, |i, j| BigRational::new(a[i * width + n + j].clone() * &scales[j], det.clone())))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// `k`-th power; negative exponents go through the inverse.
    pub fn power(&self, k: i32) -> Result<Matrix, LinError> {
        if !self.is_square() {
            return Err(LinError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut result = Matrix::identity(self.rows);
        let mut sq = base;
        let mut e = k.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                result = result.then(&sq)?;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.then(&sq)?;
            }
        }
        Ok(result)
    }

    pub fn max_abs_height(&self) -> usize {
        self.data.iter().map(|x| x.numer().abs().bits().max(x.denom().bits()) as usize).max().unwrap_or(0)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(super::format_scalar).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::frac;
    use proptest::prelude::*;

    #[test]
    fn compose_identity_and_inverse() {
        let i2 = Matrix::identity(2);
        assert_eq!(i2.then(&i2).unwrap(), i2);
        let m = Matrix::from_i64(&[&[1, 1], &[0, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(inv, Matrix::from_i64(&[&[1, -1], &[0, 1]]));
        assert!(m.then(&inv).unwrap().is_identity());
        assert_eq!(Matrix::identity(3).inverse().unwrap(), Matrix::identity(3));
    }

    #[test]
    fn singular_reports_rank() {
        let z = Matrix::zeros(2, 2);
        assert_eq!(z.inverse(), Err(LinError::Singular { rank: 0, dim: 2 }));
        let m = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(m.inverse(), Err(LinError::Singular { rank: 1, dim: 2 }));
    }

    #[test]
    fn compose_dimension_mismatch() {
        let a = Matrix::zeros(2, 3);
        assert!(matches!(a.then(&a), Err(LinError::DimensionMismatch(_))));
    }

    #[test]
    fn reflection_squares_to_identity() {
        let beta = Matrix::diagonal(&[int(1), int(-1)]);
        assert!(beta.then(&beta).unwrap().is_identity());
        assert!(beta.power(2).unwrap().is_identity());
        assert!(beta.power(0).unwrap().is_identity());
    }

    #[test]
    fn kron_examples() {
        assert_eq!(Matrix::identity(2).kron(&Matrix::identity(2)), Matrix::identity(4));
        let d = Matrix::diagonal(&[int(1), int(-1)]);
        assert_eq!(d.kron(&Matrix::identity(2)), Matrix::diagonal(&[int(1), int(1), int(-1), int(-1)]));
    }

    #[test]
    fn rational_inverse_with_denominators() {
        let m = Matrix::from_rows(vec![vec![frac(1, 2), frac(1, 3)], vec![frac(1, 4), frac(1, 5)]]).unwrap();
        let inv = m.inverse().unwrap();
        assert!(m.then(&inv).unwrap().is_identity());
        assert!(inv.then(&m).unwrap().is_identity());
    }

    fn small_matrix(n: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec((-4i64..5, 1i64..4), n * n).prop_map(move |v| {
            Matrix::from_fn(n, n, |i, j| {
                let (a, b) = v[i * n + j];
                frac(a, b)
            })
        })
    }

    proptest! {
        #[test]
        fn inverse_is_two_sided(m in small_matrix(3)) {
            if let Ok(inv) = m.inverse() {
                prop_assert!(m.then(&inv).unwrap().is_identity());
                prop_assert!(inv.then(&m).unwrap().is_identity());
            } else {
                prop_assert!(m.rank() < 3);
            }
        }

        #[test]
        fn kron_mixed_product(a in small_matrix(2), b in small_matrix(2), c in small_matrix(2), d in small_matrix(2)) {
            let lhs = a.kron(&b).then(&c.kron(&d)).unwrap();
            let rhs = a.then(&c).unwrap().kron(&b.then(&d).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn kron_associative(a in small_matrix(2), b in small_matrix(2), c in small_matrix(2)) {
            prop_assert_eq!(a.kron(&b).kron(&c), a.kron(&b.kron(&c)));
        }

        #[test]
        fn power_additive(m in small_matrix(2), j in -7i32..8, k in -7i32..8) {
            if m.is_invertible() {
                let lhs = m.power(j + k).unwrap();
                let rhs = m.power(j).unwrap().then(&m.power(k).unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
