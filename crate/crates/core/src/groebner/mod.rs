//! Gröbner bases of submodules of free modules over quotient rings, and the
//! operations built on them: normal forms, syzygies, lifts, kernels, colon
//! ideals and ideal equality.
//!
//! Everything is computed in the ambient polynomial ring `P` with the
//! defining ideal of `Λ = P/I` adjoined in every coordinate. Syzygies and
//! lifts use the usual trick of appending an identity block: a Gröbner basis
//! of `{(g_i, e_i)}` under position-over-term order contains a basis of the
//! syzygy module among its elements that vanish on the first block.

mod buchberger;
mod vector;

use std::sync::Arc;

pub use buchberger::{Builder, GroebnerBasis};
pub use vector::{compare_module_terms, module_sort_key, FreeVector};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::poly::Polynomial;
use crate::ring::QuotientRing;

fn check_ranks(rank: usize, vs: &[FreeVector]) -> Result<()> {
    match vs.iter().find(|v| v.rank() != rank) {
        Some(v) => Err(Error::Dimension {
            expected: rank,
            found: v.rank(),
        }),
        None => Ok(()),
    }
}

/// Gröbner basis of the submodule of `Λ^rank` spanned by `gens` (computed in
/// `P^rank` with the defining ideal adjoined).
pub fn buchberger(ring: &QuotientRing, rank: usize, gens: &[FreeVector]) -> Result<GroebnerBasis> {
    check_ranks(rank, gens)?;
    GroebnerBasis::compute(ring.poly_ring(), rank, ring.ideal_gb(), gens)
}

pub fn normal_form(v: &FreeVector, gb: &GroebnerBasis) -> Result<FreeVector> {
    gb.normal_form(v)
}

fn augmented(ring: &QuotientRing, gens: &[FreeVector]) -> Vec<FreeVector> {
    let k = gens.len();
    let p = ring.poly_ring();
    gens.iter()
        .enumerate()
        .map(|(i, g)| g.concat(&FreeVector::unit(p, k, i)))
        .collect()
}

/// Generators of `{s in Λ^k : Σ s_i g_i = 0 in Λ^rank}`.
pub fn syzygy_basis(
    ring: &QuotientRing,
    rank: usize,
    gens: &[FreeVector],
) -> Result<Vec<FreeVector>> {
    check_ranks(rank, gens)?;
    let k = gens.len();
    if k == 0 {
        return Ok(Vec::new());
    }
    let gb = GroebnerBasis::compute(
        ring.poly_ring(),
        rank + k,
        ring.ideal_gb(),
        &augmented(ring, gens),
    )?;
    let mut out = Vec::new();
    for (v, (pos, _)) in gb.elements().iter().zip(gb.leads()) {
        if *pos < rank {
            continue;
        }
        let s = ring.reduce_vector(&v.slice(rank..rank + k));
        if !s.is_zero() && !out.contains(&s) {
            out.push(s);
        }
    }
    Ok(out)
}

/// Expresses vectors in terms of a fixed generating set.
pub struct Lifter {
    ring: Arc<QuotientRing>,
    rank: usize,
    ngens: usize,
    gb: GroebnerBasis,
}

impl Lifter {
    pub fn new(ring: &Arc<QuotientRing>, rank: usize, gens: &[FreeVector]) -> Result<Self> {
        check_ranks(rank, gens)?;
        let gb = GroebnerBasis::compute(
            ring.poly_ring(),
            rank + gens.len(),
            ring.ideal_gb(),
            &augmented(ring, gens),
        )?;
        Ok(Lifter {
            ring: ring.clone(),
            rank,
            ngens: gens.len(),
            gb,
        })
    }

    /// Coefficients `c` with `Σ c_i g_i = v`, or `None` if `v` is not in the span.
    pub fn lift(&self, v: &FreeVector) -> Result<Option<FreeVector>> {
        check_ranks(self.rank, std::slice::from_ref(v))?;
        let p = self.ring.poly_ring();
        let r = self
            .gb
            .normal_form(&v.concat(&FreeVector::zero(p, self.ngens)))?;
        if !r.slice(0..self.rank).is_zero() {
            return Ok(None);
        }
        Ok(Some(self.ring.reduce_vector(
            &r.slice(self.rank..self.rank + self.ngens).neg(),
        )))
    }
}

/// Membership test with a lift: `(true, Some(c))` with `Σ c_i gens_i = v`.
pub fn submodule_membership(
    ring: &Arc<QuotientRing>,
    v: &FreeVector,
    gens: &[FreeVector],
) -> Result<(bool, Option<FreeVector>)> {
    let lifter = Lifter::new(ring, v.rank(), gens)?;
    let c = lifter.lift(v)?;
    Ok((c.is_some(), c))
}

/// `{x in Λ^n : A x ∈ span(rels)}` where `A` is `m x n` and `rels ⊂ Λ^m`.
pub fn preimage(ring: &QuotientRing, a: &Matrix, rels: &[FreeVector]) -> Result<Vec<FreeVector>> {
    let m = a.nrows();
    check_ranks(m, rels)?;
    let n = a.ncols();
    let mut gens: Vec<FreeVector> = a.columns().to_vec();
    gens.extend(rels.iter().cloned());
    let syz = syzygy_basis(ring, m, &gens)?;
    let mut out: Vec<FreeVector> = Vec::new();
    for s in syz {
        let x = s.slice(0..n);
        if !x.is_zero() && !out.contains(&x) {
            out.push(x);
        }
    }
    Ok(out)
}

/// Generators of `{v : A v = 0}`.
pub fn kernel_of_matrix(ring: &QuotientRing, a: &Matrix) -> Result<Vec<FreeVector>> {
    preimage(ring, a, &[])
}

fn as_vectors(gens: &[Polynomial]) -> Vec<FreeVector> {
    gens.iter()
        .map(|g| FreeVector::new(vec![g.clone()]))
        .collect()
}

/// `I : J = {f : f J ⊆ I}`.
pub fn colon_ideal(
    ring: &QuotientRing,
    i: &[Polynomial],
    j: &[Polynomial],
) -> Result<Vec<Polynomial>> {
    let p = ring.poly_ring();
    let m = j.len();
    if m == 0 {
        return Ok(vec![ring.one()]);
    }
    // f -> (f j_1, ..., f j_m) modulo I in every coordinate.
    let col = FreeVector::new(j.iter().map(|g| ring.reduce(g)).collect());
    let a = Matrix::from_columns(p, m, vec![col])?;
    let rels = Matrix::block_copies(p, 1, &as_vectors(i), m);
    let pre = preimage(ring, &a, &rels)?;
    let gens: Vec<Polynomial> = pre.into_iter().map(|v| v.get(0).clone()).collect();
    Ok(ideal_gb_polys(ring, &gens)?)
}

/// Reduced Gröbner basis (modulo the defining ideal) of the ideal generated by `gens`,
/// with elements of the defining ideal itself omitted.
pub fn ideal_gb_polys(ring: &QuotientRing, gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let gb = buchberger(ring, 1, &as_vectors(gens))?;
    Ok(gb
        .elements()
        .iter()
        .map(|v| v.get(0).clone())
        .filter(|g| !ring.reduce(g).is_zero())
        .collect())
}

/// Equality of ideals of `Λ` via reduced Gröbner bases.
pub fn ideal_equal(ring: &QuotientRing, i: &[Polynomial], j: &[Polynomial]) -> Result<bool> {
    Ok(buchberger(ring, 1, &as_vectors(i))?.elements()
        == buchberger(ring, 1, &as_vectors(j))?.elements())
}

/// Drops generators already in the span of the previously kept ones plus
/// `extra`, scanning in order of increasing degree. With `irredundant`, a
/// second pass removes any generator lying in the span of all the others.
pub fn prune_generators(
    ring: &QuotientRing,
    rank: usize,
    gens: &[FreeVector],
    extra: &[FreeVector],
    irredundant: bool,
) -> Result<Vec<FreeVector>> {
    check_ranks(rank, gens)?;
    let mut builder = Builder::new(ring.poly_ring(), rank, ring.ideal_gb());
    builder.add_all(extra)?;
    let mut order: Vec<usize> = (0..gens.len()).collect();
    order.sort_by_key(|&i| (gens[i].degree().unwrap_or(0), i));
    let mut kept = Vec::new();
    for i in order {
        let v = ring.reduce_vector(&gens[i]);
        if builder.add(&v)? {
            kept.push(v);
        }
    }
    if irredundant && kept.len() > 1 {
        let mut i = kept.len();
        while i > 0 {
            i -= 1;
            let mut others: Vec<FreeVector> = extra.to_vec();
            others.extend(
                kept.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != i)
                    .map(|(_, v)| v.clone()),
            );
            if buchberger(ring, rank, &others)?.contains(&kept[i]) {
                kept.remove(i);
            }
        }
    }
    Ok(kept)
}

#[cfg(test)]
mod tests;
