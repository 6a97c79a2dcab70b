//! Finite-dimensional commutative GF(p)-algebras given by structure constants.

use std::fmt;

use super::linalg::{self, span_basis, FpMatrix};
use crate::coeff::is_prime;
use crate::error::{Error, Result};

/// `e_i e_j = Σ_k c[i][j][k] e_k`.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteAlgebra {
    name: String,
    p: u64,
    dim: usize,
    constants: Vec<Vec<Vec<u64>>>,
    unit: Vec<u64>,
}

impl fmt::Debug for FiniteAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

impl fmt::Display for FiniteAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

impl FiniteAlgebra {
    pub fn new(
        name: impl Into<String>,
        p: u64,
        constants: Vec<Vec<Vec<u64>>>,
        unit: Vec<u64>,
    ) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        let dim = unit.len();
        let shape_ok = constants.len() == dim
            && constants
                .iter()
                .all(|row| row.len() == dim && row.iter().all(|v| v.len() == dim));
        if !shape_ok {
            return Err(Error::Dimension {
                expected: dim,
                found: constants.len(),
            });
        }
        let a = FiniteAlgebra {
            name: name.into(),
            p,
            dim,
            constants: constants
                .into_iter()
                .map(|r| {
                    r.into_iter()
                        .map(|v| v.into_iter().map(|x| x % p).collect())
                        .collect()
                })
                .collect(),
            unit: unit.into_iter().map(|x| x % p).collect(),
        };
        a.validate()?;
        Ok(a)
    }

    fn validate(&self) -> Result<()> {
        let n = self.dim;
        let basis: Vec<Vec<u64>> = (0..n).map(|i| self.basis_vector(i)).collect();
        for i in 0..n {
            if self.mul(&self.unit, &basis[i]) != basis[i] {
                return Err(Error::NotWellDefined(format!(
                    "{}: unit does not act as identity",
                    self.name
                )));
            }
            for j in 0..n {
                if self.constants[i][j] != self.constants[j][i] {
                    return Err(Error::NotWellDefined(format!(
                        "{}: not commutative",
                        self.name
                    )));
                }
                let ij = &self.constants[i][j];
                for k in 0..n {
                    if self.mul(ij, &basis[k]) != self.mul(&basis[i], &self.constants[j][k]) {
                        return Err(Error::NotWellDefined(format!(
                            "{}: not associative",
                            self.name
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// `GF(p)` itself.
    pub fn field(p: u64) -> Result<Self> {
        Self::new(format!("GF({p})"), p, vec![vec![vec![1]]], vec![1])
    }

    /// `GF(p)[x_1..x_n] / (monomials)`; the ideal must contain a power of every variable.
    pub fn monomial_quotient(
        name: impl Into<String>,
        p: u64,
        nvars: usize,
        ideal: &[Vec<u32>],
    ) -> Result<Self> {
        let in_ideal = |e: &[u32]| ideal.iter().any(|g| g.iter().zip(e).all(|(a, b)| a <= b));
        let mut bounds = vec![u32::MAX; nvars];
        for g in ideal {
            let nz: Vec<usize> = (0..nvars).filter(|&i| g[i] > 0).collect();
            if let [v] = nz[..] {
                bounds[v] = bounds[v].min(g[v]);
            }
        }
        if bounds.contains(&u32::MAX) {
            return Err(Error::Unsupported(
                "monomial quotient is not finite dimensional".into(),
            ));
        }
        let mut basis: Vec<Vec<u32>> = Vec::new();
        let mut e = vec![0u32; nvars];
        'outer: loop {
            if !in_ideal(&e) {
                basis.push(e.clone());
            }
            for i in 0..nvars {
                e[i] += 1;
                if e[i] < bounds[i] {
                    continue 'outer;
                }
                e[i] = 0;
            }
            break;
        }
        basis.sort_by_key(|m| (m.iter().sum::<u32>(), std::cmp::Reverse(m.clone())));
        let n = basis.len();
        let constants = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let prod: Vec<u32> =
                            basis[i].iter().zip(&basis[j]).map(|(a, b)| a + b).collect();
                        let mut v = vec![0; n];
                        if let Some(k) = basis.iter().position(|m| *m == prod) {
                            v[k] = 1;
                        }
                        v
                    })
                    .collect()
            })
            .collect();
        let mut unit = vec![0; n];
        unit[0] = 1;
        Self::new(name, p, constants, unit)
    }

    /// `GF(p)[x]/(x^n)`.
    pub fn truncated(p: u64, n: u32) -> Result<Self> {
        Self::monomial_quotient(format!("GF({p})[x]/(x^{n})"), p, 1, &[vec![n]])
    }

    pub fn product(a: &FiniteAlgebra, b: &FiniteAlgebra) -> Result<Self> {
        if a.p != b.p {
            return Err(Error::InvalidField(
                "product of algebras over different fields".into(),
            ));
        }
        let (m, n) = (a.dim, b.dim);
        let mut constants = vec![vec![vec![0; m + n]; m + n]; m + n];
        for i in 0..m {
            for j in 0..m {
                constants[i][j][..m].copy_from_slice(&a.constants[i][j]);
            }
        }
        for i in 0..n {
            for j in 0..n {
                constants[m + i][m + j][m..].copy_from_slice(&b.constants[i][j]);
            }
        }
        let unit = a.unit.iter().chain(&b.unit).copied().collect();
        Self::new(format!("{} x {}", a.name, b.name), a.p, constants, unit)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[u64] {
        &self.unit
    }

    pub fn structure_constants(&self) -> &[Vec<Vec<u64>>] {
        &self.constants
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u64> {
        let mut v = vec![0; self.dim];
        v[i] = 1;
        v
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let p = self.p;
        let mut out = vec![0; self.dim];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let xy = x * y % p;
                for (o, &c) in out.iter_mut().zip(&self.constants[i][j]) {
                    *o = (*o + xy * c) % p;
                }
            }
        }
        out
    }

    pub fn pow(&self, a: &[u64], mut e: u64) -> Vec<u64> {
        let mut acc = self.unit.clone();
        let mut base = a.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Matrix of `x ↦ a x` in the basis.
    pub fn left_mult(&self, a: &[u64]) -> FpMatrix {
        let cols: Vec<Vec<u64>> = (0..self.dim)
            .map(|k| self.mul(a, &self.basis_vector(k)))
            .collect();
        FpMatrix::from_columns(self.p, self.dim, &cols)
    }

    pub fn is_unit(&self, a: &[u64]) -> bool {
        self.left_mult(a).is_invertible()
    }

    /// Smallest `p^k` with `p^k >= dim`.
    fn frobenius_exponent(&self) -> u64 {
        let mut q = self.p;
        while (q as usize) < self.dim {
            q *= self.p;
        }
        q
    }

    /// Nilradical, which is the Jacobson radical of a finite commutative
    /// algebra. In characteristic `p` the map `a ↦ a^q` (`q = p^k`) is
    /// linear, and with `q >= dim` its kernel is exactly the nilpotents.
    pub fn jacobson_radical(&self) -> Vec<Vec<u64>> {
        let q = self.frobenius_exponent();
        let cols: Vec<Vec<u64>> = (0..self.dim)
            .map(|i| self.pow(&self.basis_vector(i), q))
            .collect();
        let frob = FpMatrix::from_columns(self.p, self.dim, &cols);
        span_basis(self.p, self.dim, &frob.nullspace())
    }

    pub fn is_nilpotent(&self, a: &[u64]) -> bool {
        self.pow(a, self.dim.max(1) as u64).iter().all(|&x| x == 0)
    }

    /// `A / I` for an ideal given by spanning vectors.
    pub fn quotient(&self, ideal: &[Vec<u64>]) -> Result<FiniteAlgebra> {
        let p = self.p;
        let ideal = span_basis(p, self.dim, ideal);
        let pivots: Vec<usize> = ideal
            .iter()
            .map(|r| r.iter().position(|&x| x != 0).expect("nonzero row"))
            .collect();
        let keep: Vec<usize> = (0..self.dim).filter(|i| !pivots.contains(i)).collect();
        let reduce = |v: &[u64]| -> Vec<u64> {
            let mut v = v.to_vec();
            for (row, &pc) in ideal.iter().zip(&pivots) {
                let f = v[pc];
                if f != 0 {
                    for (x, &y) in v.iter_mut().zip(row) {
                        *x = linalg::sub(*x, linalg::mul(f, y, p), p);
                    }
                }
            }
            keep.iter().map(|&i| v[i]).collect()
        };
        for g in &ideal {
            for k in 0..self.dim {
                if reduce(&self.mul(g, &self.basis_vector(k)))
                    .iter()
                    .any(|&x| x != 0)
                {
                    return Err(Error::NotWellDefined("subspace is not an ideal".into()));
                }
            }
        }
        let constants = keep
            .iter()
            .map(|&i| {
                keep.iter()
                    .map(|&j| reduce(&self.constants[i][j]))
                    .collect()
            })
            .collect();
        Self::new(format!("{}/I", self.name), p, constants, reduce(&self.unit))
    }

    /// Ring homomorphisms `A -> GF(p)`, found by enumerating values on the basis.
    pub fn characters(&self) -> Vec<Vec<u64>> {
        let p = self.p;
        let total = (p as usize).saturating_pow(self.dim as u32);
        let mut out = Vec::new();
        for idx in 0..total {
            let mut chi = vec![0u64; self.dim];
            let mut r = idx;
            for c in chi.iter_mut() {
                *c = (r % p as usize) as u64;
                r /= p as usize;
            }
            let eval = |v: &[u64]| {
                v.iter()
                    .zip(&chi)
                    .fold(0, |acc, (&a, &b)| (acc + a * b) % p)
            };
            if eval(&self.unit) != 1 {
                continue;
            }
            let mult = (0..self.dim)
                .all(|i| (0..self.dim).all(|j| eval(&self.constants[i][j]) == chi[i] * chi[j] % p));
            if mult {
                out.push(chi);
            }
        }
        out
    }
}
