use std::fmt;
use std::sync::Arc;

use crate::error::Result;
use crate::groebner::{self, FreeVector};
use crate::matrix::Matrix;
use crate::module::PresentedModule;
use crate::poly::Polynomial;
use crate::ring::QuotientRing;

/// An ideal of a quotient ring, given by generators in normal form.
#[derive(Clone)]
pub struct Ideal {
    ring: Arc<QuotientRing>,
    gens: Vec<Polynomial>,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl Ideal {
    pub fn new(ring: &Arc<QuotientRing>, gens: &[Polynomial]) -> Self {
        let gens = gens
            .iter()
            .map(|g| ring.reduce(g))
            .filter(|g| !g.is_zero())
            .collect();
        Ideal {
            ring: ring.clone(),
            gens,
        }
    }

    pub fn parse(ring: &Arc<QuotientRing>, gens: &[&str]) -> Result<Self> {
        let polys = gens
            .iter()
            .map(|s| ring.parse(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(ring, &polys))
    }

    pub fn zero(ring: &Arc<QuotientRing>) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: Vec::new(),
        }
    }

    pub fn unit(ring: &Arc<QuotientRing>) -> Self {
        Self::new(ring, &[ring.one()])
    }

    pub fn ring(&self) -> &Arc<QuotientRing> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Reduced Gröbner basis, omitting elements of the defining ideal.
    pub fn groebner_basis(&self) -> Result<Vec<Polynomial>> {
        groebner::ideal_gb_polys(&self.ring, &self.gens)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        let vs: Vec<FreeVector> = self
            .gens
            .iter()
            .map(|g| FreeVector::new(vec![g.clone()]))
            .collect();
        Ok(groebner::buchberger(&self.ring, 1, &vs)?.contains(&FreeVector::new(vec![f.clone()])))
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        QuotientRing::check_same(&self.ring, &other.ring)?;
        groebner::ideal_equal(&self.ring, &self.gens, &other.gens)
    }

    /// `self : other`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        QuotientRing::check_same(&self.ring, &other.ring)?;
        let gens = groebner::colon_ideal(&self.ring, &self.gens, &other.gens)?;
        Ok(Ideal::new(&self.ring, &gens))
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        QuotientRing::check_same(&self.ring, &other.ring)?;
        let p = self.ring.poly_ring();
        let one = self.ring.one();
        let col = FreeVector::new(vec![one.clone(), one]);
        let a = Matrix::from_columns(p, 2, vec![col])?;
        let mut rels: Vec<FreeVector> = self
            .gens
            .iter()
            .map(|g| FreeVector::new(vec![g.clone(), self.ring.zero()]))
            .collect();
        rels.extend(
            other
                .gens
                .iter()
                .map(|g| FreeVector::new(vec![self.ring.zero(), g.clone()])),
        );
        let pre = groebner::preimage(&self.ring, &a, &rels)?;
        let gens: Vec<Polynomial> = pre.into_iter().map(|v| v.get(0).clone()).collect();
        Ok(Ideal::new(
            &self.ring,
            &groebner::ideal_gb_polys(&self.ring, &gens)?,
        ))
    }

    /// `Λ / I` as a cyclic module.
    pub fn quotient_module(&self) -> PresentedModule {
        PresentedModule::cyclic(&self.ring, &self.gens)
    }

    /// `I` as a module, presented by the syzygies of its generators.
    pub fn as_module(&self) -> Result<PresentedModule> {
        let vs: Vec<FreeVector> = self
            .gens
            .iter()
            .map(|g| FreeVector::new(vec![g.clone()]))
            .collect();
        let syz = groebner::syzygy_basis(&self.ring, 1, &vs)?;
        PresentedModule::new(&self.ring, self.gens.len(), syz)
    }
}
