//! Finitely generated modules `Λ^g / span(relations)` and maps between them.

use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{self, FreeVector, GroebnerBasis};
use crate::ideal::Ideal;
use crate::matrix::Matrix;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::QuotientRing;

/// Vector-space dimension over the coefficient field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(untagged)]
pub enum KDim {
    Finite(usize),
    #[serde(serialize_with = "ser_infinite")]
    Infinite,
}

fn ser_infinite<S: serde::Serializer>(s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str("infinite")
}

impl fmt::Display for KDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KDim::Finite(n) => write!(f, "{n}"),
            KDim::Infinite => write!(f, "infinite"),
        }
    }
}

impl KDim {
    pub fn finite(self) -> Option<usize> {
        match self {
            KDim::Finite(n) => Some(n),
            KDim::Infinite => None,
        }
    }
}

struct ModuleData {
    ring: Arc<QuotientRing>,
    rank: usize,
    relations: Vec<FreeVector>,
    gb: OnceLock<GroebnerBasis>,
}

/// `M = Λ^rank / span(relations)`. Relations are the columns of the
/// presentation matrix; entries are kept in normal form.
#[derive(Clone)]
pub struct PresentedModule(Arc<ModuleData>);

impl fmt::Debug for PresentedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PresentedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "coker(rank {}, relations [", self.rank())?;
        for (i, r) in self.relations().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "])")
    }
}

/// Result of unit-pivot minimization: the smaller module, which original
/// generators survive, and the matrix of the isomorphism old -> new.
pub struct Minimized {
    pub module: PresentedModule,
    pub kept: Vec<usize>,
    pub to_min: Matrix,
}

impl PresentedModule {
    pub fn new(ring: &Arc<QuotientRing>, rank: usize, relations: Vec<FreeVector>) -> Result<Self> {
        if let Some(r) = relations.iter().find(|r| r.rank() != rank) {
            return Err(Error::Dimension {
                expected: rank,
                found: r.rank(),
            });
        }
        let mut rels: Vec<FreeVector> = Vec::with_capacity(relations.len());
        for r in relations {
            let r = ring.reduce_vector(&r);
            if !r.is_zero() && !rels.contains(&r) {
                rels.push(r);
            }
        }
        Ok(PresentedModule(Arc::new(ModuleData {
            ring: ring.clone(),
            rank,
            relations: rels,
            gb: OnceLock::new(),
        })))
    }

    pub fn free(ring: &Arc<QuotientRing>, rank: usize) -> Self {
        Self::new(ring, rank, Vec::new()).expect("no relations")
    }

    pub fn zero(ring: &Arc<QuotientRing>) -> Self {
        Self::free(ring, 0)
    }

    /// `Λ / (gens)`.
    pub fn cyclic(ring: &Arc<QuotientRing>, gens: &[Polynomial]) -> Self {
        let rels = gens
            .iter()
            .map(|g| FreeVector::new(vec![g.clone()]))
            .collect();
        Self::new(ring, 1, rels).expect("rank one")
    }

    pub fn ring(&self) -> &Arc<QuotientRing> {
        &self.0.ring
    }

    pub fn rank(&self) -> usize {
        self.0.rank
    }

    pub fn relations(&self) -> &[FreeVector] {
        &self.0.relations
    }

    pub fn relation_matrix(&self) -> Matrix {
        Matrix::from_columns(
            self.ring().poly_ring(),
            self.rank(),
            self.relations().to_vec(),
        )
        .expect("ranks checked")
    }

    /// Gröbner basis of the relation submodule (with the defining ideal).
    pub fn relation_gb(&self) -> &GroebnerBasis {
        self.0.gb.get_or_init(|| {
            groebner::buchberger(self.ring(), self.rank(), self.relations()).expect("ranks checked")
        })
    }

    pub fn same(&self, other: &PresentedModule) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (QuotientRing::same(self.ring(), other.ring())
                && self.rank() == other.rank()
                && self.relations() == other.relations())
    }

    pub(crate) fn check_same(&self, other: &PresentedModule, what: &str) -> Result<()> {
        if self.same(other) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("{what}: modules differ")))
        }
    }

    /// Normal form of an element of `Λ^rank` modulo the relations.
    pub fn reduce(&self, v: &FreeVector) -> Result<FreeVector> {
        self.relation_gb().normal_form(v)
    }

    pub fn is_zero_element(&self, v: &FreeVector) -> Result<bool> {
        Ok(self.reduce(v)?.is_zero())
    }

    pub fn generator(&self, i: usize) -> FreeVector {
        FreeVector::unit(self.ring().poly_ring(), self.rank(), i)
    }

    pub fn is_zero_module(&self) -> bool {
        let gb = self.relation_gb();
        (0..self.rank()).all(|i| gb.contains(&self.generator(i)))
    }

    pub fn k_dimension(&self) -> KDim {
        match self.standard_basis() {
            Some(b) => KDim::Finite(b.len()),
            None => KDim::Infinite,
        }
    }

    /// Standard monomials `(position, monomial)` of the relation Gröbner
    /// basis, a field basis of `M`; `None` when that basis is infinite.
    pub fn standard_basis(&self) -> Option<Vec<(usize, Monomial)>> {
        let gb = self.relation_gb();
        let nvars = self.ring().poly_ring().nvars();
        let mut out = Vec::new();
        for pos in 0..self.rank() {
            let leads: Vec<&Monomial> = gb.leads_at(pos).collect();
            if leads.iter().any(|m| m.is_one()) {
                continue;
            }
            let mut bounds = vec![u32::MAX; nvars];
            for m in &leads {
                if let Some(v) = m.pure_power_var() {
                    bounds[v] = bounds[v].min(m.exponents()[v]);
                }
            }
            if bounds.contains(&u32::MAX) {
                return None;
            }
            out.extend(
                standard_in_box(&bounds, &leads)
                    .into_iter()
                    .map(|m| (pos, m)),
            );
        }
        Some(out)
    }

    /// `{f : f M = 0}`.
    pub fn annihilator(&self) -> Result<Ideal> {
        let ring = self.ring();
        let g = self.rank();
        if g == 0 {
            return Ok(Ideal::unit(ring));
        }
        let p = ring.poly_ring();
        // f -> (f e_1, ..., f e_g) in M^g
        let col = Matrix::identity(p, g).vectorize();
        let a = Matrix::from_columns(p, g * g, vec![col])?;
        let rels = Matrix::block_copies(p, g, self.relations(), g);
        let pre = groebner::preimage(ring, &a, &rels)?;
        let gens: Vec<Polynomial> = pre.into_iter().map(|v| v.get(0).clone()).collect();
        Ok(Ideal::new(ring, &groebner::ideal_gb_polys(ring, &gens)?))
    }

    pub fn direct_sum(&self, other: &PresentedModule) -> Result<PresentedModule> {
        QuotientRing::check_same(self.ring(), other.ring())?;
        let p = self.ring().poly_ring();
        let (a, b) = (self.rank(), other.rank());
        let mut rels: Vec<FreeVector> = self
            .relations()
            .iter()
            .map(|r| r.concat(&FreeVector::zero(p, b)))
            .collect();
        rels.extend(
            other
                .relations()
                .iter()
                .map(|r| FreeVector::zero(p, a).concat(r)),
        );
        PresentedModule::new(self.ring(), a + b, rels)
    }

    /// Eliminate generators using relations with a nonzero constant entry.
    pub fn minimize(&self) -> Minimized {
        let ring = self.ring();
        let p = ring.poly_ring();
        let g = self.rank();
        let mut rels: Vec<FreeVector> = self.relations().to_vec();
        let mut kept: Vec<usize> = (0..g).collect();
        let mut to_min: Vec<FreeVector> = (0..g).map(|i| FreeVector::unit(p, g, i)).collect();
        loop {
            let pivot = rels.iter().enumerate().find_map(|(c, col)| {
                col.coords()
                    .iter()
                    .position(Polynomial::is_unit_constant)
                    .map(|r| (c, r))
            });
            let Some((c, r)) = pivot else { break };
            let col = rels.remove(c);
            let u_inv = col.get(r).as_constant().expect("constant").inv();
            let eliminate = |x: &FreeVector| -> FreeVector {
                let xr = x.get(r).scale(&u_inv);
                let mut coords: Vec<Polynomial> = Vec::with_capacity(x.rank() - 1);
                for i in 0..x.rank() {
                    if i != r {
                        coords.push(ring.reduce(&x.get(i).sub(&xr.mul(col.get(i)))));
                    }
                }
                FreeVector::new(coords)
            };
            rels = rels.iter().map(&eliminate).filter(|v| !v.is_zero()).fold(
                Vec::new(),
                |mut acc, v| {
                    if !acc.contains(&v) {
                        acc.push(v);
                    }
                    acc
                },
            );
            to_min = to_min.iter().map(&eliminate).collect();
            kept.remove(r);
        }
        let n = kept.len();
        let module = PresentedModule::new(ring, n, rels).expect("ranks consistent");
        let to_min = Matrix::from_columns(p, n, to_min).expect("ranks consistent");
        Minimized {
            module,
            kept,
            to_min,
        }
    }
}

fn standard_in_box(bounds: &[u32], leads: &[&Monomial]) -> Vec<Monomial> {
    let n = bounds.len();
    let mut e = vec![0u32; n];
    let mut out = Vec::new();
    loop {
        let m = Monomial::new(e.clone());
        if !leads.iter().any(|l| l.divides(&m)) {
            out.push(m);
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            e[i] += 1;
            if e[i] < bounds[i] {
                break;
            }
            e[i] = 0;
            i += 1;
        }
    }
}

/// Generators and presentation of `(span U + span V) / span V` inside `Λ^n`.
pub struct Subquotient {
    pub module: PresentedModule,
    /// Ambient vectors representing the module's generators.
    pub generators: Vec<FreeVector>,
}

pub fn subquotient_presentation(
    ring: &Arc<QuotientRing>,
    rank: usize,
    u: &[FreeVector],
    v: &[FreeVector],
) -> Result<Subquotient> {
    let u = groebner::prune_generators(ring, rank, u, v, false)?;
    let a = Matrix::from_columns(ring.poly_ring(), rank, u.clone())?;
    let rels = groebner::preimage(ring, &a, v)?;
    let rels = groebner::prune_generators(ring, u.len(), &rels, &[], false)?;
    let raw = PresentedModule::new(ring, u.len(), rels)?;
    let min = raw.minimize();
    let generators = min.kept.iter().map(|&i| u[i].clone()).collect();
    Ok(Subquotient {
        module: min.module,
        generators,
    })
}

/// A map `source -> target` given by a `target.rank x source.rank` matrix
/// that sends source relations into the target relation module.
#[derive(Clone)]
pub struct ModuleHomomorphism {
    source: PresentedModule,
    target: PresentedModule,
    matrix: Matrix,
}

impl fmt::Debug for ModuleHomomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleHomomorphism({})", self.matrix)
    }
}

impl ModuleHomomorphism {
    pub fn new(source: &PresentedModule, target: &PresentedModule, matrix: Matrix) -> Result<Self> {
        QuotientRing::check_same(source.ring(), target.ring())?;
        if matrix.nrows() != target.rank() || matrix.ncols() != source.rank() {
            return Err(Error::Dimension {
                expected: target.rank() * source.rank(),
                found: matrix.nrows() * matrix.ncols(),
            });
        }
        let ring = source.ring();
        let matrix = matrix.map_entries(|e| ring.reduce(e));
        for rel in source.relations() {
            if !target.is_zero_element(&matrix.apply(rel))? {
                return Err(Error::NotWellDefined(format!(
                    "relation {rel} does not map into the target relations"
                )));
            }
        }
        Ok(ModuleHomomorphism {
            source: source.clone(),
            target: target.clone(),
            matrix,
        })
    }

    pub fn identity(m: &PresentedModule) -> Self {
        ModuleHomomorphism {
            source: m.clone(),
            target: m.clone(),
            matrix: Matrix::identity(m.ring().poly_ring(), m.rank()),
        }
    }

    pub fn zero(source: &PresentedModule, target: &PresentedModule) -> Self {
        ModuleHomomorphism {
            source: source.clone(),
            target: target.clone(),
            matrix: Matrix::zeros(source.ring().poly_ring(), target.rank(), source.rank()),
        }
    }

    pub fn source(&self) -> &PresentedModule {
        &self.source
    }

    pub fn target(&self) -> &PresentedModule {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &FreeVector) -> Result<FreeVector> {
        if v.rank() != self.source.rank() {
            return Err(Error::Dimension {
                expected: self.source.rank(),
                found: v.rank(),
            });
        }
        self.target.reduce(&self.matrix.apply(v))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &ModuleHomomorphism) -> Result<ModuleHomomorphism> {
        inner.target.check_same(&self.source, "composition")?;
        let ring = self.source.ring();
        Ok(ModuleHomomorphism {
            source: inner.source.clone(),
            target: self.target.clone(),
            matrix: self
                .matrix
                .mul(&inner.matrix)?
                .map_entries(|e| ring.reduce(e)),
        })
    }

    /// Equal as maps: every column of the difference vanishes in the target.
    pub fn equals(&self, other: &ModuleHomomorphism) -> Result<bool> {
        self.source
            .check_same(&other.source, "map comparison (source)")?;
        self.target
            .check_same(&other.target, "map comparison (target)")?;
        let diff = self.matrix.sub(&other.matrix)?;
        for c in diff.columns() {
            if !self.target.is_zero_element(c)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_zero_map(&self) -> Result<bool> {
        for c in self.matrix.columns() {
            if !self.target.is_zero_element(c)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Kernel as a presented module together with its inclusion into the source.
    pub fn kernel(&self) -> Result<(PresentedModule, ModuleHomomorphism)> {
        let ring = self.source.ring();
        let u = groebner::preimage(ring, &self.matrix, self.target.relations())?;
        let sq = subquotient_presentation(ring, self.source.rank(), &u, self.source.relations())?;
        let incl = Matrix::from_columns(ring.poly_ring(), self.source.rank(), sq.generators)?;
        let iota = ModuleHomomorphism::new(&sq.module, &self.source, incl)?;
        Ok((sq.module, iota))
    }

    /// Cokernel as a presented module together with the projection from the target.
    pub fn cokernel(&self) -> Result<(PresentedModule, ModuleHomomorphism)> {
        let ring = self.target.ring();
        let mut rels = self.target.relations().to_vec();
        rels.extend(self.matrix.columns().iter().cloned());
        let raw = PresentedModule::new(ring, self.target.rank(), rels)?;
        let min = raw.minimize();
        let pi = ModuleHomomorphism::new(&self.target, &min.module, min.to_min)?;
        Ok((min.module, pi))
    }

    pub fn is_injective(&self) -> Result<bool> {
        Ok(self.kernel()?.0.is_zero_module())
    }

    pub fn is_surjective(&self) -> Result<bool> {
        Ok(self.cokernel()?.0.is_zero_module())
    }

    pub fn is_isomorphism(&self) -> Result<bool> {
        Ok(self.is_injective()? && self.is_surjective()?)
    }
}

#[cfg(test)]
mod tests;
