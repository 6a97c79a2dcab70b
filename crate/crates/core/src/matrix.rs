//! Polynomial matrices stored by columns.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::FreeVector;
use crate::poly::{PolyRing, Polynomial};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    ring: Arc<PolyRing>,
    nrows: usize,
    cols: Vec<FreeVector>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.nrows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.ncols() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.entry(i, j))?;
            }
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(ring: &Arc<PolyRing>, nrows: usize, ncols: usize) -> Self {
        Matrix {
            ring: ring.clone(),
            nrows,
            cols: vec![FreeVector::zero(ring, nrows); ncols],
        }
    }

    pub fn identity(ring: &Arc<PolyRing>, n: usize) -> Self {
        Matrix {
            ring: ring.clone(),
            nrows: n,
            cols: (0..n).map(|i| FreeVector::unit(ring, n, i)).collect(),
        }
    }

    pub fn from_columns(ring: &Arc<PolyRing>, nrows: usize, cols: Vec<FreeVector>) -> Result<Self> {
        if let Some(c) = cols.iter().find(|c| c.rank() != nrows) {
            return Err(Error::Dimension {
                expected: nrows,
                found: c.rank(),
            });
        }
        Ok(Matrix {
            ring: ring.clone(),
            nrows,
            cols,
        })
    }

    /// Rows given as entry lists; all rows must have length `ncols`.
    pub fn from_rows(
        ring: &Arc<PolyRing>,
        ncols: usize,
        rows: Vec<Vec<Polynomial>>,
    ) -> Result<Self> {
        let nrows = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != ncols) {
            return Err(Error::Dimension {
                expected: ncols,
                found: r.len(),
            });
        }
        let cols = (0..ncols)
            .map(|j| FreeVector::new(rows.iter().map(|r| r[j].clone()).collect()))
            .collect();
        Ok(Matrix {
            ring: ring.clone(),
            nrows,
            cols,
        })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn col(&self, j: usize) -> &FreeVector {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[FreeVector] {
        &self.cols
    }

    pub fn into_columns(self) -> Vec<FreeVector> {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        self.cols[j].get(i)
    }

    pub fn row(&self, i: usize) -> FreeVector {
        FreeVector::new(self.cols.iter().map(|c| c.get(i).clone()).collect())
    }

    /// `self * v`.
    pub fn apply(&self, v: &FreeVector) -> FreeVector {
        debug_assert_eq!(v.rank(), self.ncols());
        let mut acc = FreeVector::zero(&self.ring, self.nrows);
        for (c, x) in self.cols.iter().zip(v.coords()) {
            if !x.is_zero() {
                acc = acc.add(&c.scale(x));
            }
        }
        acc
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if other.nrows != self.ncols() {
            return Err(Error::Dimension {
                expected: self.ncols(),
                found: other.nrows,
            });
        }
        Ok(Matrix {
            ring: self.ring.clone(),
            nrows: self.nrows,
            cols: other.cols.iter().map(|c| self.apply(c)).collect(),
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        if other.nrows != self.nrows || other.ncols() != self.ncols() {
            return Err(Error::Dimension {
                expected: self.ncols(),
                found: other.ncols(),
            });
        }
        Ok(Matrix {
            ring: self.ring.clone(),
            nrows: self.nrows,
            cols: self
                .cols
                .iter()
                .zip(&other.cols)
                .map(|(a, b)| a.sub(b))
                .collect(),
        })
    }

    pub fn transpose(&self) -> Matrix {
        Matrix {
            ring: self.ring.clone(),
            nrows: self.ncols(),
            cols: (0..self.nrows).map(|i| self.row(i)).collect(),
        }
    }

    pub fn map_entries(&self, f: impl Fn(&Polynomial) -> Polynomial) -> Matrix {
        Matrix {
            ring: self.ring.clone(),
            nrows: self.nrows,
            cols: self.cols.iter().map(|c| c.map_coords(&f)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(FreeVector::is_zero)
    }

    /// Matrix of `vec(B) -> vec(B * d)` for `h x r` matrices `B`, where `vec`
    /// stacks columns. Maps `P^(h*r)` to `P^(h*c)` when `d` is `r x c`.
    pub fn right_multiplication(d: &Matrix, h: usize) -> Matrix {
        let ring = d.ring();
        let (r, c) = (d.nrows(), d.ncols());
        let cols = (0..r * h)
            .map(|idx| {
                let (j, row) = (idx / h, idx % h);
                let mut v = FreeVector::zero(ring, h * c);
                for l in 0..c {
                    let e = d.entry(j, l);
                    if !e.is_zero() {
                        v.coords_mut()[l * h + row] = e.clone();
                    }
                }
                v
            })
            .collect();
        Matrix {
            ring: ring.clone(),
            nrows: h * c,
            cols,
        }
    }

    /// `vec(self)`: columns stacked into one vector.
    pub fn vectorize(&self) -> FreeVector {
        FreeVector::new(
            self.cols
                .iter()
                .flat_map(|c| c.coords().iter().cloned())
                .collect(),
        )
    }

    /// Inverse of `vectorize` for an `nrows x (len / nrows)` shape.
    pub fn unvectorize(ring: &Arc<PolyRing>, nrows: usize, v: &FreeVector) -> Matrix {
        let ncols = if nrows == 0 { 0 } else { v.rank() / nrows };
        let cols = (0..ncols)
            .map(|j| v.slice(j * nrows..(j + 1) * nrows))
            .collect();
        Matrix {
            ring: ring.clone(),
            nrows,
            cols,
        }
    }

    /// Each column of `blocks` placed at each of `copies` block offsets:
    /// generators of `span(blocks)^copies` inside `P^(nrows * copies)`.
    pub fn block_copies(
        ring: &Arc<PolyRing>,
        nrows: usize,
        blocks: &[FreeVector],
        copies: usize,
    ) -> Vec<FreeVector> {
        let mut out = Vec::with_capacity(blocks.len() * copies);
        for k in 0..copies {
            for b in blocks {
                let mut v = FreeVector::zero(ring, nrows * copies);
                for (i, p) in b.coords().iter().enumerate() {
                    v.coords_mut()[k * nrows + i] = p.clone();
                }
                out.push(v);
            }
        }
        out
    }
}
