//! Dense matrices over a prime field `F_p`.

use std::fmt;

use crate::arith;
use crate::error::{BraceError, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MatrixModP {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for MatrixModP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatrixModP(p={}, {}x{})", self.p, self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl MatrixModP {
    /// Builds a matrix from row-major entries, reducing them into `[0, p)`.
    pub fn new(p: u32, rows: usize, cols: usize, entries: &[i64]) -> Result<Self> {
        if !arith::is_prime(p as u64) {
            return Err(BraceError::NotPrime(p as u64));
        }
        if entries.len() != rows * cols {
            return Err(BraceError::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(MatrixModP {
            p,
            rows,
            cols,
            data: entries
                .iter()
                .map(|&v| v.rem_euclid(p as i64) as u32)
                .collect(),
        })
    }

    pub fn from_rows(p: u32, rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(BraceError::Shape("ragged rows".into()));
        }
        let flat: Vec<i64> = rows.iter().flatten().copied().collect();
        MatrixModP::new(p, r, c, &flat)
    }

    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        MatrixModP {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = MatrixModP::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % p;
        }
        m
    }

    pub fn p(&self) -> u32 {
        self.p
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

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v.rem_euclid(self.p as i64) as u32;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[u32] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    fn same_field(&self, other: &MatrixModP) -> Result<()> {
        if self.p != other.p {
            return Err(BraceError::Shape(format!(
                "fields differ: p={} vs p={}",
                self.p, other.p
            )));
        }
        Ok(())
    }

    pub fn mul(&self, other: &MatrixModP) -> Result<MatrixModP> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(BraceError::Shape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let p = self.p as u64;
        let mut out = MatrixModP::zeros(self.p, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = ((out.data[idx] as u64
                        + a * other.data[k * other.cols + j] as u64)
                        % p) as u32;
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &MatrixModP) -> Result<MatrixModP> {
        self.same_field(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(BraceError::Shape(
                "sum of differently shaped matrices".into(),
            ));
        }
        let p = self.p;
        Ok(MatrixModP {
            p,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| (a + b) % p)
                .collect(),
        })
    }

    pub fn sub(&self, other: &MatrixModP) -> Result<MatrixModP> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MatrixModP {
        let p = self.p;
        MatrixModP {
            p,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| (p - a) % p).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> MatrixModP {
        let p = self.p as i64;
        let k = k.rem_euclid(p);
        MatrixModP {
            p: self.p,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|&a| ((a as i64 * k) % p) as u32)
                .collect(),
        }
    }

    pub fn transpose(&self) -> MatrixModP {
        let mut out = MatrixModP::zeros(self.p, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        out
    }

    /// `M^e` by square-and-multiply.
    pub fn pow(&self, mut e: u64) -> Result<MatrixModP> {
        if !self.is_square() {
            return Err(BraceError::Shape("power of a non-square matrix".into()));
        }
        let mut acc = MatrixModP::identity(self.p, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            base = base.mul(&base)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// `M^e` for any integer exponent; negative exponents need an invertible matrix.
    pub fn pow_signed(&self, e: i64) -> Result<MatrixModP> {
        if e >= 0 {
            self.pow(e as u64)
        } else {
            self.inverse()
                .ok_or_else(|| BraceError::NotAutomorphism("singular matrix".into()))?
                .pow(e.unsigned_abs())
        }
    }

    pub fn mul_vec(&self, v: &[u32]) -> Result<Vec<u32>> {
        if v.len() != self.cols {
            return Err(BraceError::DimensionMismatch {
                expected: self.cols,
                actual: v.len(),
            });
        }
        let p = self.p as u64;
        Ok((0..self.rows)
            .map(|r| {
                (self
                    .row(r)
                    .iter()
                    .zip(v)
                    .map(|(&a, &b)| a as u64 * b as u64)
                    .sum::<u64>()
                    % p) as u32
            })
            .collect())
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[u32]) -> Result<Vec<u32>> {
        if v.len() != self.rows {
            return Err(BraceError::DimensionMismatch {
                expected: self.rows,
                actual: v.len(),
            });
        }
        let p = self.p as u64;
        let mut out = vec![0u64; self.cols];
        for (r, &x) in v.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (c, o) in out.iter_mut().enumerate() {
                *o += x as u64 * self.data[r * self.cols + c] as u64;
            }
        }
        Ok(out.into_iter().map(|x| (x % p) as u32).collect())
    }

    /// Row-echelon form; returns the reduced matrix and the pivot columns.
    fn echelon(&self) -> (MatrixModP, Vec<usize>) {
        let mut m = self.clone();
        let p = self.p as u64;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(piv) = (row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            if piv != row {
                for c in 0..m.cols {
                    m.data.swap(piv * m.cols + c, row * m.cols + c);
                }
            }
            let inv = arith::inv_mod(m.get(row, col) as u64, p).expect("nonzero in a field");
            for c in 0..m.cols {
                let idx = row * m.cols + c;
                m.data[idx] = (m.data[idx] as u64 * inv % p) as u32;
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let f = m.get(r, col) as u64;
                if f == 0 {
                    continue;
                }
                for c in 0..m.cols {
                    let sub = f * m.data[row * m.cols + c] as u64 % p;
                    let idx = r * m.cols + c;
                    m.data[idx] = ((m.data[idx] as u64 + p - sub) % p) as u32;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Option<MatrixModP> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self
            .hstack(&MatrixModP::identity(self.p, n))
            .expect("same rows");
        let (red, pivots) = aug.echelon();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut out = MatrixModP::zeros(self.p, n, n);
        for r in 0..n {
            for c in 0..n {
                out.data[r * n + c] = red.get(r, n + c);
            }
        }
        Some(out)
    }

    pub fn det(&self) -> Result<u32> {
        if !self.is_square() {
            return Err(BraceError::Shape(
                "determinant of a non-square matrix".into(),
            ));
        }
        let p = self.p as u64;
        let n = self.rows;
        let mut m = self.clone();
        let mut det = 1u64;
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| m.get(r, col) != 0) else {
                return Ok(0);
            };
            if piv != col {
                for c in 0..n {
                    m.data.swap(piv * n + c, col * n + c);
                }
                det = (p - det) % p;
            }
            let d = m.get(col, col) as u64;
            det = det * d % p;
            let inv = arith::inv_mod(d, p).expect("nonzero");
            for r in col + 1..n {
                let f = m.get(r, col) as u64 * inv % p;
                if f == 0 {
                    continue;
                }
                for c in col..n {
                    let sub = f * m.data[col * n + c] as u64 % p;
                    m.data[r * n + c] = ((m.data[r * n + c] as u64 + p - sub) % p) as u32;
                }
            }
        }
        Ok(det as u32)
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &MatrixModP) -> Result<MatrixModP> {
        self.same_field(other)?;
        if self.rows != other.rows {
            return Err(BraceError::Shape("hstack with different row counts".into()));
        }
        let cols = self.cols + other.cols;
        let mut out = MatrixModP::zeros(self.p, self.rows, cols);
        for r in 0..self.rows {
            out.data[r * cols..r * cols + self.cols].copy_from_slice(self.row(r));
            out.data[r * cols + self.cols..(r + 1) * cols].copy_from_slice(other.row(r));
        }
        Ok(out)
    }

    pub fn block_diag(blocks: &[MatrixModP]) -> Result<MatrixModP> {
        let Some(first) = blocks.first() else {
            return Err(BraceError::Shape("no blocks".into()));
        };
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = MatrixModP::zeros(first.p, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            first.same_field(b)?;
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out.data[(r0 + r) * cols + c0 + c] = b.get(r, c);
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        Ok(out)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| (0..self.cols).all(|c| self.get(r, c) == u32::from(r == c)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Multiplicative order, or `None` if singular or larger than `cap`.
    pub fn order(&self, cap: u64) -> Option<u64> {
        if !self.is_invertible() {
            return None;
        }
        let mut acc = self.clone();
        for k in 1..=cap {
            if acc.is_identity() {
                return Some(k);
            }
            acc = acc.mul(self).ok()?;
        }
        None
    }

    /// Permutation matrix sending `e_i` to `e_{perm[i]}` (0-based).
    pub fn permutation(p: u32, perm: &[usize]) -> Result<MatrixModP> {
        let n = perm.len();
        let mut seen = vec![false; n];
        let mut m = MatrixModP::zeros(p, n, n);
        for (i, &j) in perm.iter().enumerate() {
            if j >= n || seen[j] {
                return Err(BraceError::Shape("not a permutation".into()));
            }
            seen[j] = true;
            m.data[j * n + i] = 1;
        }
        Ok(m)
    }
}

/// Rank over `F_p` by Gaussian elimination.
pub fn rank_mod_p(m: &MatrixModP) -> usize {
    m.rank()
}
