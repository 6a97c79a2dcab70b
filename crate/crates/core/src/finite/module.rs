//! Finite-dimensional modules over a [`FiniteAlgebra`], and Hom between them.

use std::sync::Arc;

use super::algebra::FiniteAlgebra;
use super::linalg::{self, span_basis, Coordinates, FpMatrix};
use crate::error::{Error, Result};

/// A representation `ρ : A -> End(GF(p)^dim)`, stored on the basis of `A`.
#[derive(Clone, Debug)]
pub struct FiniteModule {
    algebra: Arc<FiniteAlgebra>,
    dim: usize,
    action: Vec<FpMatrix>,
}

impl FiniteModule {
    pub fn new(algebra: &Arc<FiniteAlgebra>, dim: usize, action: Vec<FpMatrix>) -> Result<Self> {
        if action.len() != algebra.dim()
            || action.iter().any(|m| m.rows() != dim || m.cols() != dim)
        {
            return Err(Error::Dimension {
                expected: algebra.dim(),
                found: action.len(),
            });
        }
        let m = FiniteModule {
            algebra: algebra.clone(),
            dim,
            action,
        };
        m.validate()?;
        Ok(m)
    }

    fn validate(&self) -> Result<()> {
        let a = &self.algebra;
        if !self.act_matrix(a.unit()).is_identity() {
            return Err(Error::NotWellDefined(
                "unit does not act as identity".into(),
            ));
        }
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let lhs = self.action[i].mul(&self.action[j]);
                if lhs != self.act_matrix(&a.structure_constants()[i][j]) {
                    return Err(Error::NotWellDefined("action is not multiplicative".into()));
                }
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Arc<FiniteAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn p(&self) -> u64 {
        self.algebra.characteristic()
    }

    pub fn action(&self) -> &[FpMatrix] {
        &self.action
    }

    /// `ρ(a)`.
    pub fn act_matrix(&self, a: &[u64]) -> FpMatrix {
        let mut acc = FpMatrix::zeros(self.p(), self.dim, self.dim);
        for (m, &c) in self.action.iter().zip(a) {
            if c != 0 {
                acc = acc.add(&m.scale(c));
            }
        }
        acc
    }

    pub fn regular(a: &Arc<FiniteAlgebra>) -> Self {
        let action = (0..a.dim())
            .map(|i| a.left_mult(&a.basis_vector(i)))
            .collect();
        FiniteModule {
            algebra: a.clone(),
            dim: a.dim(),
            action,
        }
    }

    pub fn zero(a: &Arc<FiniteAlgebra>) -> Self {
        let p = a.characteristic();
        FiniteModule {
            algebra: a.clone(),
            dim: 0,
            action: vec![FpMatrix::zeros(p, 0, 0); a.dim()],
        }
    }

    pub fn free(a: &Arc<FiniteAlgebra>, n: usize) -> Self {
        (0..n).fold(Self::zero(a), |acc, _| acc.direct_sum(&Self::regular(a)))
    }

    /// The one-dimensional module of a character `A -> GF(p)`.
    pub fn from_character(a: &Arc<FiniteAlgebra>, chi: &[u64]) -> Result<Self> {
        let p = a.characteristic();
        let action = chi
            .iter()
            .map(|&c| FpMatrix::from_rows(p, &[vec![c]]))
            .collect();
        Self::new(a, 1, action)
    }

    /// All one-dimensional (hence simple) modules.
    pub fn simple_modules(a: &Arc<FiniteAlgebra>) -> Vec<Self> {
        a.characters()
            .iter()
            .map(|chi| Self::from_character(a, chi).expect("characters are multiplicative"))
            .collect()
    }

    pub fn direct_sum(&self, other: &FiniteModule) -> FiniteModule {
        assert!(Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra);
        let p = self.p();
        let (m, n) = (self.dim, other.dim);
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(x, y)| {
                let mut z = FpMatrix::zeros(p, m + n, m + n);
                for i in 0..m {
                    for j in 0..m {
                        z.set(i, j, x.get(i, j));
                    }
                }
                for i in 0..n {
                    for j in 0..n {
                        z.set(m + i, m + j, y.get(i, j));
                    }
                }
                z
            })
            .collect();
        FiniteModule {
            algebra: self.algebra.clone(),
            dim: m + n,
            action,
        }
    }

    /// Row-reduced basis of the submodule generated by `vs`.
    pub fn submodule(&self, vs: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let p = self.p();
        let mut basis = span_basis(p, self.dim, vs);
        loop {
            let mut grown = basis.clone();
            for v in &basis {
                for m in &self.action {
                    grown.push(m.apply(v));
                }
            }
            let next = span_basis(p, self.dim, &grown);
            if next.len() == basis.len() {
                return basis;
            }
            basis = next;
        }
    }

    /// `M / <vs>`, with the projection matrix.
    pub fn quotient(&self, vs: &[Vec<u64>]) -> (FiniteModule, FpMatrix) {
        let p = self.p();
        let sub = self.submodule(vs);
        let pivots: Vec<usize> = sub
            .iter()
            .map(|r| r.iter().position(|&x| x != 0).expect("nonzero row"))
            .collect();
        let keep: Vec<usize> = (0..self.dim).filter(|i| !pivots.contains(i)).collect();
        let reduce = |v: &[u64]| -> Vec<u64> {
            let mut v = v.to_vec();
            for (row, &pc) in sub.iter().zip(&pivots) {
                let f = v[pc];
                if f != 0 {
                    for (x, &y) in v.iter_mut().zip(row) {
                        *x = linalg::sub(*x, linalg::mul(f, y, p), p);
                    }
                }
            }
            keep.iter().map(|&i| v[i]).collect()
        };
        let q = keep.len();
        let proj_cols: Vec<Vec<u64>> = (0..self.dim)
            .map(|i| {
                let mut e = vec![0; self.dim];
                e[i] = 1;
                reduce(&e)
            })
            .collect();
        let proj = FpMatrix::from_columns(p, q, &proj_cols);
        let action = self
            .action
            .iter()
            .map(|m| {
                let cols: Vec<Vec<u64>> = keep.iter().map(|&i| reduce(&m.column(i))).collect();
                FpMatrix::from_columns(p, q, &cols)
            })
            .collect();
        let module = FiniteModule {
            algebra: self.algebra.clone(),
            dim: q,
            action,
        };
        (module, proj)
    }

    /// `ann(M)` as a row-reduced subspace of `A`.
    pub fn annihilator(&self) -> Vec<Vec<u64>> {
        let p = self.p();
        let cols: Vec<Vec<u64>> = self.action.iter().map(FpMatrix::vectorize).collect();
        let sys = FpMatrix::from_columns(p, self.dim * self.dim, &cols);
        span_basis(p, self.algebra.dim(), &sys.nullspace())
    }

    /// `J M`.
    pub fn radical_submodule(&self) -> Vec<Vec<u64>> {
        let mut gens = Vec::new();
        for j in self.algebra.jacobson_radical() {
            let m = self.act_matrix(&j);
            gens.extend((0..self.dim).map(|c| m.column(c)));
        }
        span_basis(self.p(), self.dim, &gens)
    }

    /// `dim M / J M`.
    pub fn top_dim(&self) -> usize {
        self.dim - self.radical_submodule().len()
    }

    /// `dim {x : J x = 0}`.
    pub fn socle_dim(&self) -> usize {
        let p = self.p();
        let rows: Vec<Vec<u64>> = self
            .algebra
            .jacobson_radical()
            .iter()
            .flat_map(|j| {
                let m = self.act_matrix(j);
                (0..self.dim).map(move |r| m.row(r).to_vec())
            })
            .collect();
        if rows.is_empty() {
            return self.dim;
        }
        FpMatrix::from_rows_with_cols(p, self.dim, &rows)
            .nullspace()
            .len()
    }
}

/// Basis of `Hom_A(M, N)` as `N.dim x M.dim` matrices.
pub fn hom_space(m: &FiniteModule, n: &FiniteModule) -> Vec<FpMatrix> {
    let p = m.p();
    let (a, b) = (m.dim(), n.dim());
    if a == 0 || b == 0 {
        return Vec::new();
    }
    // Unknown F (b x a), vec index j*b + i. Equations F ρ_M(e) - ρ_N(e) F = 0.
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for (rm, rn) in m.action().iter().zip(n.action()) {
        for i in 0..b {
            for j in 0..a {
                let mut eq = vec![0u64; a * b];
                for k in 0..a {
                    let c = rm.get(k, j);
                    if c != 0 {
                        eq[k * b + i] = linalg::add(eq[k * b + i], c, p);
                    }
                }
                for k in 0..b {
                    let c = rn.get(i, k);
                    if c != 0 {
                        eq[j * b + k] = linalg::sub(eq[j * b + k], c, p);
                    }
                }
                rows.push(eq);
            }
        }
    }
    let sys = FpMatrix::from_rows_with_cols(p, a * b, &rows);
    sys.nullspace()
        .iter()
        .map(|v| FpMatrix::unvectorize(p, b, v))
        .collect()
}

/// `Hom_A(M, A)` as a module, with the functional attached to each basis vector.
pub struct FiniteDual {
    pub source: FiniteModule,
    pub module: FiniteModule,
    pub basis: Vec<FpMatrix>,
    coords: Coordinates,
}

impl FiniteDual {
    /// Coordinates of an `A`-linear functional `M -> A`.
    pub fn coordinates(&self, f: &FpMatrix) -> Result<Vec<u64>> {
        self.coords
            .of(&f.vectorize())
            .ok_or_else(|| Error::NotWellDefined("not an A-linear functional".into()))
    }

    pub fn functional(&self, coords: &[u64]) -> FpMatrix {
        let a = self.source.algebra();
        let mut acc = FpMatrix::zeros(a.characteristic(), a.dim(), self.source.dim());
        for (f, &c) in self.basis.iter().zip(coords) {
            if c != 0 {
                acc = acc.add(&f.scale(c));
            }
        }
        acc
    }
}

pub fn finite_dual(m: &FiniteModule) -> FiniteDual {
    let a = m.algebra();
    let p = a.characteristic();
    let basis = hom_space(m, &FiniteModule::regular(a));
    let h = basis.len();
    let coords = Coordinates::new(
        p,
        a.dim() * m.dim(),
        &basis.iter().map(FpMatrix::vectorize).collect::<Vec<_>>(),
    );
    let action = (0..a.dim())
        .map(|i| {
            let l = a.left_mult(&a.basis_vector(i));
            let cols: Vec<Vec<u64>> = basis
                .iter()
                .map(|f| coords.of(&l.mul(f).vectorize()).expect("a f is A-linear"))
                .collect();
            FpMatrix::from_columns(p, h, &cols)
        })
        .collect();
    let module = FiniteModule {
        algebra: a.clone(),
        dim: h,
        action,
    };
    FiniteDual {
        source: m.clone(),
        module,
        basis,
        coords,
    }
}

/// `h_M : M -> M**`; `dual` presents `M*` and `bidual` presents `(M*)*`.
pub fn evaluation_map(dual: &FiniteDual, bidual: &FiniteDual) -> Result<FpMatrix> {
    let m = &dual.source;
    let p = m.p();
    let ad = m.algebra().dim();
    let cols = (0..m.dim())
        .map(|j| {
            // u ↦ u(e_j): column k is the k-th functional at e_j.
            let cols: Vec<Vec<u64>> = dual.basis.iter().map(|f| f.column(j)).collect();
            bidual.coordinates(&FpMatrix::from_columns(p, ad, &cols))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FpMatrix::from_columns(p, bidual.module.dim(), &cols))
}

/// `φ* : N* -> M*` for `φ : M -> N` (an `N.dim x M.dim` matrix).
pub fn dual_map(
    phi: &FpMatrix,
    dual_source: &FiniteDual,
    dual_target: &FiniteDual,
) -> Result<FpMatrix> {
    let p = phi.modulus();
    let cols = dual_target
        .basis
        .iter()
        .map(|u| dual_source.coordinates(&u.mul(phi)))
        .collect::<Result<Vec<_>>>()?;
    Ok(FpMatrix::from_columns(p, dual_source.module.dim(), &cols))
}

/// With `M = N*`: `(h_N)* ∘ h_M = 1_M`.
pub fn lemma_check_finite(n: &FiniteModule) -> Result<bool> {
    let dn = finite_dual(n);
    let ddn = finite_dual(&dn.module);
    let dddn = finite_dual(&ddn.module);
    let h_n = evaluation_map(&dn, &ddn)?;
    let h_m = evaluation_map(&ddn, &dddn)?;
    let h_n_dual = dual_map(&h_n, &dn, &dddn)?;
    Ok(h_n_dual.mul(&h_m).is_identity())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dual_numbers(p: u64) -> Arc<FiniteAlgebra> {
        Arc::new(FiniteAlgebra::truncated(p, 2).unwrap())
    }

    /// All `b x a` matrices, checked against the intertwining condition one by one.
    fn brute_force_hom_dim(m: &FiniteModule, n: &FiniteModule) -> usize {
        let p = m.p();
        let cells = m.dim() * n.dim();
        let mut count = 0u64;
        for idx in 0..p.pow(cells as u32) {
            let mut r = idx;
            let v: Vec<u64> = (0..cells)
                .map(|_| {
                    let d = r % p;
                    r /= p;
                    d
                })
                .collect();
            let f = FpMatrix::unvectorize(p, n.dim(), &v);
            if m.action()
                .iter()
                .zip(n.action())
                .all(|(x, y)| f.mul(x) == y.mul(&f))
            {
                count += 1;
            }
        }
        let mut d = 0;
        while p.pow(d) < count {
            d += 1;
        }
        d as usize
    }

    #[test]
    fn hom_space_examples() {
        let a = dual_numbers(2);
        let reg = FiniteModule::regular(&a);
        let k = FiniteModule::simple_modules(&a).remove(0);
        assert_eq!(hom_space(&reg, &k).len(), 1);
        assert_eq!(hom_space(&k, &reg).len(), 1);
        assert_eq!(hom_space(&k, &reg).len(), brute_force_hom_dim(&k, &reg));
        assert_eq!(hom_space(&reg, &reg.direct_sum(&k)).len(), 3);
        assert!(hom_space(&reg, &FiniteModule::zero(&a)).is_empty());
    }

    #[test]
    fn duals() {
        let a = dual_numbers(2);
        let reg = FiniteModule::regular(&a);
        assert_eq!(finite_dual(&reg).module.dim(), 2);
        let k = FiniteModule::simple_modules(&a).remove(0);
        let dk = finite_dual(&k);
        assert_eq!(dk.module.dim(), 1);
        assert_eq!(dk.module.annihilator(), k.annihilator());
        assert_eq!(finite_dual(&reg.direct_sum(&k)).module.dim(), 3);
    }

    #[test]
    fn lemma_on_small_modules() {
        let a = dual_numbers(2);
        assert!(lemma_check_finite(&FiniteModule::regular(&a)).unwrap());
        assert!(lemma_check_finite(&FiniteModule::simple_modules(&a)[0]).unwrap());
        let b = Arc::new(
            FiniteAlgebra::monomial_quotient("sq0", 3, 2, &[vec![2, 0], vec![1, 1], vec![0, 2]])
                .unwrap(),
        );
        let k = FiniteModule::simple_modules(&b).remove(0);
        assert_eq!(finite_dual(&k).module.dim(), 2);
        assert!(lemma_check_finite(&k).unwrap());
    }

    #[test]
    fn quotients_and_radicals() {
        let a = Arc::new(FiniteAlgebra::truncated(3, 3).unwrap());
        let reg = FiniteModule::regular(&a);
        let (q, proj) = reg.quotient(&[vec![0, 0, 1]]);
        assert_eq!(q.dim(), 2);
        assert_eq!(proj.rank(), 2);
        assert_eq!(reg.top_dim(), 1);
        assert_eq!(reg.socle_dim(), 1);
        assert_eq!(reg.submodule(&[vec![0, 1, 0]]).len(), 2);
        assert_eq!(q.annihilator().len(), 1);
    }
}
