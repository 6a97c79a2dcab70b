//! Dense matrices over GF(p), `p` below 2^31.

use std::fmt;

pub fn add(a: u64, b: u64, p: u64) -> u64 {
    (a + b) % p
}

pub fn sub(a: u64, b: u64, p: u64) -> u64 {
    (a + p - b) % p
}

pub fn mul(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

pub fn inv(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "inverse of zero in GF({p})");
    pow(a, p - 2, p)
}

pub fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

/// Row-major matrix with entries in `0..p`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})[", self.p)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(u64::to_string).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Reduced row echelon form with pivot columns.
pub struct Rref {
    pub matrix: FpMatrix,
    pub pivots: Vec<usize>,
}

impl FpMatrix {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> Self {
        FpMatrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(p: u64, rows: &[Vec<u64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows_with_cols(p, cols, rows)
    }

    pub fn from_rows_with_cols(p: u64, cols: usize, rows: &[Vec<u64>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().map(|x| x % p));
        }
        FpMatrix {
            p,
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn from_columns(p: u64, rows: usize, cols: &[Vec<u64>]) -> Self {
        let mut m = Self::zeros(p, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, &x) in c.iter().enumerate() {
                m.set(i, j, x % p);
            }
        }
        m
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: u64) {
        self.data[i * self.cols + j] = x % self.p;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == u64::from(i == j)))
    }

    /// Entries stacked column by column.
    pub fn vectorize(&self) -> Vec<u64> {
        (0..self.cols).flat_map(|j| self.column(j)).collect()
    }

    pub fn unvectorize(p: u64, rows: usize, v: &[u64]) -> Self {
        let cols = if rows == 0 { 0 } else { v.len() / rows };
        let cs: Vec<Vec<u64>> = (0..cols)
            .map(|j| v[j * rows..(j + 1) * rows].to_vec())
            .collect();
        Self::from_columns(p, rows, &cs)
    }

    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let p = self.p;
        let mut out = FpMatrix::zeros(p, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * out.cols + j;
                    out.data[idx] = (out.data[idx] + a * other.get(k, j)) % p;
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(self.cols, v.len(), "shape mismatch in apply");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| (acc + a * b) % self.p)
            })
            .collect()
    }

    pub fn add(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&other.data) {
            *x = add(*x, *y, self.p);
        }
        out
    }

    pub fn sub(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&other.data) {
            *x = sub(*x, *y, self.p);
        }
        out
    }

    pub fn scale(&self, c: u64) -> FpMatrix {
        let mut out = self.clone();
        for x in &mut out.data {
            *x = mul(*x, c % self.p, self.p);
        }
        out
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut out = FpMatrix::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.rows, other.rows);
        let mut out = FpMatrix::zeros(self.p, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j));
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j));
            }
        }
        out
    }

    pub fn rref(&self) -> Rref {
        let p = self.p;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(piv) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            if piv != r {
                for j in 0..m.cols {
                    m.data.swap(piv * m.cols + j, r * m.cols + j);
                }
            }
            let s = inv(m.get(r, c), p);
            for j in c..m.cols {
                let x = mul(m.get(r, j), s, p);
                m.set(r, j, x);
            }
            for i in 0..m.rows {
                let f = m.get(i, c);
                if i == r || f == 0 {
                    continue;
                }
                for j in c..m.cols {
                    let x = sub(m.get(i, j), mul(f, m.get(r, j), p), p);
                    m.set(i, j, x);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Basis of `{x : self x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<u64>> {
        let Rref { matrix, pivots } = self.rref();
        let p = self.p;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![0; self.cols];
                x[f] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    x[pc] = sub(0, matrix.get(r, f), p);
                }
                x
            })
            .collect()
    }

    /// Some `x` with `self x = b`.
    pub fn solve(&self, b: &[u64]) -> Option<Vec<u64>> {
        assert_eq!(b.len(), self.rows);
        let aug = self.hstack(&FpMatrix::from_columns(self.p, self.rows, &[b.to_vec()]));
        let Rref { matrix, pivots } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![0; self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = matrix.get(r, self.cols);
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<FpMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let Rref { matrix, pivots } = self.hstack(&FpMatrix::identity(self.p, n)).rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut out = FpMatrix::zeros(self.p, n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, matrix.get(i, n + j));
            }
        }
        Some(out)
    }
}

/// Row-reduced basis of the span of `vs`, a canonical form for subspaces.
pub fn span_basis(p: u64, dim: usize, vs: &[Vec<u64>]) -> Vec<Vec<u64>> {
    if vs.is_empty() {
        return Vec::new();
    }
    let m = FpMatrix::from_rows_with_cols(p, dim, vs);
    let Rref { matrix, pivots } = m.rref();
    (0..pivots.len()).map(|r| matrix.row(r).to_vec()).collect()
}

/// Solves for coordinates in a fixed family of vectors.
pub struct Coordinates {
    basis: FpMatrix,
}

impl Coordinates {
    pub fn new(p: u64, dim: usize, vectors: &[Vec<u64>]) -> Self {
        Coordinates {
            basis: FpMatrix::from_columns(p, dim, vectors),
        }
    }

    pub fn of(&self, v: &[u64]) -> Option<Vec<u64>> {
        self.basis.solve(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_solve() {
        let m = FpMatrix::from_rows(3, &[vec![1, 2], vec![0, 1]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert_eq!(m.solve(&[0, 1]), Some(vec![1, 1]));
        let sing = FpMatrix::from_rows(2, &[vec![1, 1], vec![1, 1]]);
        assert!(sing.inverse().is_none());
        assert_eq!(sing.solve(&[1, 0]), None);
        assert_eq!(sing.nullspace(), vec![vec![1, 1]]);
        assert_eq!(sing.rank(), 1);
    }

    #[test]
    fn nullspace_is_kernel() {
        let m = FpMatrix::from_rows(5, &[vec![1, 2, 3, 4], vec![2, 4, 1, 0]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for x in ns {
            assert!(m.apply(&x).iter().all(|&y| y == 0));
        }
    }

    #[test]
    fn vectorize_round_trip() {
        let m = FpMatrix::from_rows(7, &[vec![1, 2, 3], vec![4, 5, 6]]);
        assert_eq!(m.vectorize(), vec![1, 4, 2, 5, 3, 6]);
        assert_eq!(FpMatrix::unvectorize(7, 2, &m.vectorize()), m);
        assert_eq!(FpMatrix::unvectorize(7, 2, &[]).cols(), 0);
    }
}
