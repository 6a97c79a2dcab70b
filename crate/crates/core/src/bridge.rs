//! Turns finite-dimensional quotient rings over GF(p) and their modules into
//! structure-constant form, so symbolic and brute-force answers can be compared.

use std::collections::HashMap;
use std::sync::Arc;

use crate::coeff::Field;
use crate::error::{Error, Result};
use crate::finite::{FiniteAlgebra, FiniteModule, FpMatrix};
use crate::groebner::FreeVector;
use crate::module::PresentedModule;
use crate::monomial::Monomial;
use crate::ring::QuotientRing;

type Basis = HashMap<(usize, Monomial), usize>;

fn indexed(basis: &[(usize, Monomial)]) -> Basis {
    basis
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, k)| (k, i))
        .collect()
}

/// Coordinates of a vector already in normal form.
fn coordinates(v: &FreeVector, index: &Basis, n: usize) -> Result<Vec<u64>> {
    let mut out = vec![0; n];
    for (pos, p) in v.coords().iter().enumerate() {
        for t in p.terms() {
            let i = index
                .get(&(pos, t.mono.clone()))
                .ok_or_else(|| Error::NotWellDefined("vector is not in normal form".into()))?;
            out[*i] = t.coeff.as_residue().expect("prime field");
        }
    }
    Ok(out)
}

fn prime_of(ring: &QuotientRing) -> Result<u64> {
    match ring.poly_ring().field() {
        Field::Prime(p) => Ok(p),
        Field::Rational => Err(Error::Unsupported(
            "finite conversion needs a prime field".into(),
        )),
    }
}

fn basis_element(ring: &QuotientRing, rank: usize, key: &(usize, Monomial)) -> FreeVector {
    let p = ring.poly_ring();
    let term = crate::poly::Polynomial::monomial(p, p.field().one(), key.1.clone());
    FreeVector::single(p, rank, key.0, term)
}

/// `Λ` as a finite algebra on its standard monomials.
pub fn finite_algebra(ring: &Arc<QuotientRing>) -> Result<Arc<FiniteAlgebra>> {
    let p = prime_of(ring)?;
    let basis = PresentedModule::free(ring, 1)
        .standard_basis()
        .ok_or_else(|| Error::Unsupported("ring is not finite dimensional".into()))?;
    let index = indexed(&basis);
    let n = basis.len();
    let elems: Vec<FreeVector> = basis.iter().map(|k| basis_element(ring, 1, k)).collect();
    let mut constants = vec![vec![vec![0; n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            let prod = ring.reduce(&elems[i].get(0).mul(elems[j].get(0)));
            constants[i][j] = coordinates(&FreeVector::new(vec![prod]), &index, n)?;
        }
    }
    let unit = coordinates(&FreeVector::new(vec![ring.one()]), &index, n)?;
    Ok(Arc::new(FiniteAlgebra::new(
        ring.to_string(),
        p,
        constants,
        unit,
    )?))
}

/// `M` as a finite module over `finite_algebra(M.ring())`.
pub fn finite_module(m: &PresentedModule, algebra: &Arc<FiniteAlgebra>) -> Result<FiniteModule> {
    let ring = m.ring();
    let p = prime_of(ring)?;
    let ring_basis = PresentedModule::free(ring, 1)
        .standard_basis()
        .ok_or_else(|| Error::Unsupported("ring is not finite dimensional".into()))?;
    if ring_basis.len() != algebra.dim() {
        return Err(Error::Dimension {
            expected: algebra.dim(),
            found: ring_basis.len(),
        });
    }
    let basis = m
        .standard_basis()
        .ok_or_else(|| Error::Unsupported("module is not finite dimensional".into()))?;
    let index = indexed(&basis);
    let n = basis.len();
    let elems: Vec<FreeVector> = basis
        .iter()
        .map(|k| basis_element(ring, m.rank(), k))
        .collect();
    let action = ring_basis
        .iter()
        .map(|r| {
            let scalar = basis_element(ring, 1, r).get(0).clone();
            let cols = elems
                .iter()
                .map(|e| coordinates(&m.reduce(&e.scale(&scalar))?, &index, n))
                .collect::<Result<Vec<_>>>()?;
            Ok(FpMatrix::from_columns(p, n, &cols))
        })
        .collect::<Result<Vec<_>>>()?;
    FiniteModule::new(algebra, n, action)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::quotient;
    use crate::finite::hom_space;
    use crate::homological::hom_module;
    use crate::ideal::Ideal;

    #[test]
    fn converts_square_zero_algebra() {
        let ring = quotient(Field::Prime(3), &["X", "Y"], &["X^2", "X*Y", "Y^2"]);
        let a = finite_algebra(&ring).unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.jacobson_radical().len(), 2);
        let k = Ideal::parse(&ring, &["X", "Y"]).unwrap().quotient_module();
        let fk = finite_module(&k, &a).unwrap();
        assert_eq!(fk.dim(), 1);
        let free = PresentedModule::free(&ring, 1);
        let ff = finite_module(&free, &a).unwrap();
        assert_eq!(hom_space(&fk, &ff).len(), 2);
        assert_eq!(
            hom_module(&k, &free)
                .unwrap()
                .module()
                .k_dimension()
                .finite(),
            Some(hom_space(&fk, &ff).len())
        );
    }

    #[test]
    fn rejects_rational_and_infinite() {
        let ring = quotient(Field::Rational, &["X"], &["X^2"]);
        assert!(finite_algebra(&ring).is_err());
        let ring = quotient(Field::Prime(2), &["X", "Y"], &["X^2"]);
        assert!(finite_algebra(&ring).is_err());
    }
}
