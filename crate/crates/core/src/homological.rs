//! Free resolutions, Hom and Ext, duals and the canonical map into the bidual.

use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{self, FreeVector, Lifter};
use crate::matrix::Matrix;
use crate::module::{subquotient_presentation, KDim, ModuleHomomorphism, PresentedModule};
use crate::ring::QuotientRing;

/// Default cap on resolution length.
pub const DEFAULT_LENGTH: usize = 6;

/// `... -> F_2 -> F_1 -> F_0 -> M -> 0` with `d_1 = relations(M)`.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    module: PresentedModule,
    differentials: Vec<Matrix>,
}

impl FreeResolution {
    pub fn module(&self) -> &PresentedModule {
        &self.module
    }

    /// `d_1, d_2, ...`; `d_i` maps `F_i -> F_{i-1}`.
    pub fn differentials(&self) -> &[Matrix] {
        &self.differentials
    }

    pub fn differential(&self, i: usize) -> Option<&Matrix> {
        if i == 0 {
            None
        } else {
            self.differentials.get(i - 1)
        }
    }

    /// Ranks of `F_0, F_1, ...`.
    pub fn ranks(&self) -> Vec<usize> {
        let mut out = vec![self.module.rank()];
        out.extend(self.differentials.iter().map(Matrix::ncols));
        out
    }

    /// Rank of `F_i`; zero past the end of a terminated resolution.
    pub fn rank(&self, i: usize) -> usize {
        self.ranks().get(i).copied().unwrap_or(0)
    }

    /// `d_i d_{i+1} = 0` in normal form, for every consecutive pair.
    pub fn is_complex(&self) -> bool {
        let ring = self.module.ring();
        self.differentials.windows(2).all(|w| {
            w[0].mul(&w[1])
                .map(|m| m.map_entries(|e| ring.reduce(e)).is_zero())
                .unwrap_or(false)
        })
    }

    /// Syzygies of each `d_i` lie in the span of the columns of `d_{i+1}`.
    pub fn is_exact(&self) -> Result<bool> {
        let ring = self.module.ring();
        for (i, d) in self.differentials.iter().enumerate() {
            let Some(next) = self.differentials.get(i + 1) else {
                break;
            };
            let syz = groebner::syzygy_basis(ring, d.nrows(), d.columns())?;
            let gb = groebner::buchberger(ring, d.ncols(), next.columns())?;
            if !syz.iter().all(|s| gb.contains(s)) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Resolve `m` up to `length` differentials. With `minimize`, the module is
/// first stripped of unit pivots and every syzygy set is made irredundant.
pub fn free_resolution(
    m: &PresentedModule,
    length: usize,
    minimize: bool,
) -> Result<FreeResolution> {
    if length == 0 {
        return Err(Error::Unsupported(
            "resolution length must be at least 1".into(),
        ));
    }
    let module = if minimize {
        m.minimize().module
    } else {
        m.clone()
    };
    let ring = module.ring().clone();
    let p = ring.poly_ring();
    let first = if minimize {
        groebner::prune_generators(&ring, module.rank(), module.relations(), &[], true)?
    } else {
        module.relations().to_vec()
    };
    let mut differentials = vec![Matrix::from_columns(p, module.rank(), first)?];
    while differentials.len() < length {
        let d = differentials.last().expect("nonempty");
        if d.ncols() == 0 {
            break;
        }
        let mut syz = groebner::syzygy_basis(&ring, d.nrows(), d.columns())?;
        if minimize {
            syz = groebner::prune_generators(&ring, d.ncols(), &syz, &[], true)?;
        }
        if syz.is_empty() {
            break;
        }
        differentials.push(Matrix::from_columns(p, d.ncols(), syz)?);
    }
    Ok(FreeResolution {
        module,
        differentials,
    })
}

/// `Hom(M, N)` with an explicit `N.rank x M.rank` matrix for each generator.
pub struct HomPresentation {
    source: PresentedModule,
    target: PresentedModule,
    module: PresentedModule,
    maps: Vec<Matrix>,
    lifter: OnceLock<Lifter>,
}

impl HomPresentation {
    pub fn source(&self) -> &PresentedModule {
        &self.source
    }

    pub fn target(&self) -> &PresentedModule {
        &self.target
    }

    pub fn module(&self) -> &PresentedModule {
        &self.module
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    /// The homomorphism named by the `k`-th generator.
    pub fn generator_map(&self, k: usize) -> ModuleHomomorphism {
        ModuleHomomorphism::new(&self.source, &self.target, self.maps[k].clone())
            .expect("tracked generators are well defined")
    }

    /// `Σ h_k A_k` for an element `h` of the Hom module.
    pub fn to_matrix(&self, h: &FreeVector) -> Result<Matrix> {
        if h.rank() != self.maps.len() {
            return Err(Error::Dimension {
                expected: self.maps.len(),
                found: h.rank(),
            });
        }
        let p = self.source.ring().poly_ring();
        let mut acc = Matrix::zeros(p, self.target.rank(), self.source.rank()).vectorize();
        for (c, a) in h.coords().iter().zip(&self.maps) {
            acc = acc.add(&a.vectorize().scale(c));
        }
        let ring = self.source.ring();
        Ok(Matrix::unvectorize(
            p,
            self.target.rank(),
            &ring.reduce_vector(&acc),
        ))
    }

    /// `ev(h, m) = (Σ h_k A_k) m` in `N`.
    pub fn evaluate(&self, h: &FreeVector, m: &FreeVector) -> Result<FreeVector> {
        let a = self.to_matrix(h)?;
        if m.rank() != self.source.rank() {
            return Err(Error::Dimension {
                expected: self.source.rank(),
                found: m.rank(),
            });
        }
        self.target.reduce(&a.apply(m))
    }

    /// Coordinates of a homomorphism matrix in terms of the generators.
    pub fn coordinates(&self, a: &Matrix) -> Result<FreeVector> {
        let (n, m) = (self.target.rank(), self.source.rank());
        if a.nrows() != n || a.ncols() != m {
            return Err(Error::Dimension {
                expected: n * m,
                found: a.nrows() * a.ncols(),
            });
        }
        let ring = self.source.ring();
        let lifter = match self.lifter.get() {
            Some(l) => l,
            None => {
                let mut gens: Vec<FreeVector> = self.maps.iter().map(Matrix::vectorize).collect();
                gens.extend(Matrix::block_copies(
                    ring.poly_ring(),
                    n,
                    self.target.relations(),
                    m,
                ));
                let l = Lifter::new(ring, n * m, &gens)?;
                let _ = self.lifter.set(l);
                self.lifter.get().expect("just set")
            }
        };
        let c = lifter.lift(&a.vectorize())?.ok_or_else(|| {
            Error::NotWellDefined("matrix is not a homomorphism between these modules".into())
        })?;
        Ok(c.slice(0..self.maps.len()))
    }
}

/// `{vec(A) : A d ∈ span(N)}` generators, where `A` has `n` rows and `d` is
/// `r x c` (all of `Λ^(n r)` when `d` is absent or has no columns).
fn cocycles(
    ring: &Arc<QuotientRing>,
    d: Option<&Matrix>,
    n: usize,
    r: usize,
    n_rels: &[FreeVector],
) -> Result<Vec<FreeVector>> {
    let p = ring.poly_ring();
    match d {
        Some(d) if d.ncols() > 0 => {
            let a = Matrix::right_multiplication(d, n);
            let rels = Matrix::block_copies(p, n, n_rels, d.ncols());
            groebner::preimage(ring, &a, &rels)
        }
        _ => Ok((0..n * r).map(|i| FreeVector::unit(p, n * r, i)).collect()),
    }
}

/// `{vec(A' d)} ∪ N-blocks` inside `Λ^(n r)`, where `d` is `r' x r`.
fn coboundaries(
    ring: &Arc<QuotientRing>,
    d: Option<&Matrix>,
    n: usize,
    r: usize,
    n_rels: &[FreeVector],
) -> Vec<FreeVector> {
    let p = ring.poly_ring();
    let mut out = Matrix::block_copies(p, n, n_rels, r);
    if let Some(d) = d {
        out.extend(Matrix::right_multiplication(d, n).into_columns());
    }
    out
}

pub fn hom_module(m: &PresentedModule, n: &PresentedModule) -> Result<HomPresentation> {
    QuotientRing::check_same(m.ring(), n.ring())?;
    let ring = m.ring();
    let (g, h) = (m.rank(), n.rank());
    let d = m.relation_matrix();
    let u = cocycles(ring, Some(&d), h, g, n.relations())?;
    let v = coboundaries(ring, None, h, g, n.relations());
    let sq = subquotient_presentation(ring, h * g, &u, &v)?;
    let maps = sq
        .generators
        .iter()
        .map(|x| Matrix::unvectorize(ring.poly_ring(), h, x))
        .collect();
    Ok(HomPresentation {
        source: m.clone(),
        target: n.clone(),
        module: sq.module,
        maps,
        lifter: OnceLock::new(),
    })
}

/// `M* = Hom(M, Λ)`.
pub fn dual_module(m: &PresentedModule) -> Result<HomPresentation> {
    hom_module(m, &PresentedModule::free(m.ring(), 1))
}

/// `Ext^i(M, N)` from a resolution of `M` of length `i + 1`.
pub fn ext_module(i: usize, m: &PresentedModule, n: &PresentedModule) -> Result<PresentedModule> {
    let res = free_resolution(m, i + 1, true)?;
    ext_from_resolution(&res, i, n)
}

/// `H^i` of `Hom(F, N)`.
pub fn ext_from_resolution(
    res: &FreeResolution,
    i: usize,
    n: &PresentedModule,
) -> Result<PresentedModule> {
    let ring = res.module().ring();
    QuotientRing::check_same(ring, n.ring())?;
    let h = n.rank();
    let r = res.rank(i);
    let u = cocycles(ring, res.differential(i + 1), h, r, n.relations())?;
    let v = coboundaries(ring, res.differential(i), h, r, n.relations());
    Ok(subquotient_presentation(ring, h * r, &u, &v)?.module)
}

/// `Hom(φ, L)`: given `φ : A -> B` and presentations of `Hom(A, L)` and
/// `Hom(B, L)`, the induced map `Hom(B, L) -> Hom(A, L)`, `u ↦ u ∘ φ`.
pub fn hom_contravariant(
    phi: &ModuleHomomorphism,
    hom_source: &HomPresentation,
    hom_target: &HomPresentation,
) -> Result<ModuleHomomorphism> {
    phi.source()
        .check_same(hom_source.source(), "dual map (source)")?;
    phi.target()
        .check_same(hom_target.source(), "dual map (target)")?;
    hom_source
        .target()
        .check_same(hom_target.target(), "dual map (coefficients)")?;
    let ring = phi.source().ring();
    let cols = hom_target
        .maps()
        .iter()
        .map(|u| hom_source.coordinates(&u.mul(phi.matrix())?.map_entries(|e| ring.reduce(e))))
        .collect::<Result<Vec<_>>>()?;
    let mat = Matrix::from_columns(ring.poly_ring(), hom_source.module().rank(), cols)?;
    ModuleHomomorphism::new(hom_target.module(), hom_source.module(), mat)
}

/// `φ* : N* -> M*` for `φ : M -> N`, relative to the given duals.
pub fn dual_map(
    phi: &ModuleHomomorphism,
    dual_source: &HomPresentation,
    dual_target: &HomPresentation,
) -> Result<ModuleHomomorphism> {
    hom_contravariant(phi, dual_source, dual_target)
}

/// `h_M : M -> M**` where `dual` presents `M*` and `bidual` presents the
/// dual of `dual.module()`.
pub fn canonical_map_with(
    dual: &HomPresentation,
    bidual: &HomPresentation,
) -> Result<ModuleHomomorphism> {
    dual.module().check_same(bidual.source(), "canonical map")?;
    let m = dual.source();
    let ring = m.ring();
    let p = ring.poly_ring();
    let s = dual.maps().len();
    let cols = (0..m.rank())
        .map(|j| {
            let row: Vec<_> = dual
                .maps()
                .iter()
                .map(|psi| psi.entry(0, j).clone())
                .collect();
            let functional = Matrix::from_rows(p, s, vec![row])?;
            bidual.coordinates(&functional)
        })
        .collect::<Result<Vec<_>>>()?;
    let mat = Matrix::from_columns(p, bidual.module().rank(), cols)?;
    ModuleHomomorphism::new(m, bidual.module(), mat)
}

pub struct Canonical {
    pub dual: HomPresentation,
    pub bidual: HomPresentation,
    pub map: ModuleHomomorphism,
}

pub fn canonical_map(m: &PresentedModule) -> Result<Canonical> {
    let dual = dual_module(m)?;
    let bidual = dual_module(dual.module())?;
    let map = canonical_map_with(&dual, &bidual)?;
    Ok(Canonical { dual, bidual, map })
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ReflexivityReport {
    pub reflexive: bool,
    pub torsionless: bool,
    pub coker_dim: KDim,
}

pub fn is_reflexive(m: &PresentedModule) -> Result<ReflexivityReport> {
    let h = canonical_map(m)?.map;
    let torsionless = h.kernel()?.0.is_zero_module();
    let coker = h.cokernel()?.0;
    let coker_dim = coker.k_dimension();
    Ok(ReflexivityReport {
        reflexive: torsionless && coker.is_zero_module(),
        torsionless,
        coker_dim,
    })
}

/// With `M = N*`: whether `(h_N)* ∘ h_M = 1_M`.
pub fn lemma_composite_check(n: &PresentedModule) -> Result<bool> {
    let dn = dual_module(n)?;
    let ddn = dual_module(dn.module())?;
    let dddn = dual_module(ddn.module())?;
    let h_n = canonical_map_with(&dn, &ddn)?;
    let h_m = canonical_map_with(&ddn, &dddn)?;
    let h_n_dual = dual_map(&h_n, &dn, &dddn)?;
    h_n_dual
        .compose(&h_m)?
        .equals(&ModuleHomomorphism::identity(dn.module()))
}

#[cfg(test)]
mod tests;
