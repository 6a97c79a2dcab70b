//! Quotient rings `P / I` of a polynomial ring by an ideal.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::{FreeVector, GroebnerBasis};
use crate::poly::{PolyRing, Polynomial};

/// `P / I` with a cached reduced Gröbner basis of `I`. Elements handed out by
/// this type are always in normal form.
pub struct QuotientRing {
    poly: Arc<PolyRing>,
    ideal_gens: Vec<Polynomial>,
    gb: GroebnerBasis,
    gb_polys: Vec<Polynomial>,
}

impl fmt::Debug for QuotientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QuotientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.poly.field(), self.poly.vars().join(","))?;
        if !self.gb_polys.is_empty() {
            write!(f, "/(")?;
            for (i, g) in self.gb_polys.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{g}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl QuotientRing {
    pub fn new(poly: &Arc<PolyRing>, ideal_gens: Vec<Polynomial>) -> Result<Arc<QuotientRing>> {
        for g in &ideal_gens {
            if !PolyRing::same(g.ring(), poly) {
                return Err(Error::RingMismatch(
                    "ideal generator from another ring".into(),
                ));
            }
        }
        let vecs: Vec<FreeVector> = ideal_gens
            .iter()
            .map(|g| FreeVector::new(vec![g.clone()]))
            .collect();
        let gb = GroebnerBasis::compute(poly, 1, &[], &vecs)?;
        let gb_polys = gb.elements().iter().map(|v| v.get(0).clone()).collect();
        Ok(Arc::new(QuotientRing {
            poly: poly.clone(),
            ideal_gens,
            gb,
            gb_polys,
        }))
    }

    pub fn polynomial_ring(poly: &Arc<PolyRing>) -> Arc<QuotientRing> {
        Self::new(poly, Vec::new()).expect("empty ideal")
    }

    /// `self / (extra)`.
    pub fn quotient(&self, extra: &[Polynomial]) -> Result<Arc<QuotientRing>> {
        let mut gens = self.ideal_gens.clone();
        gens.extend(extra.iter().cloned());
        QuotientRing::new(&self.poly, gens)
    }

    pub fn poly_ring(&self) -> &Arc<PolyRing> {
        &self.poly
    }

    pub fn ideal_generators(&self) -> &[Polynomial] {
        &self.ideal_gens
    }

    /// Reduced Gröbner basis of the defining ideal.
    pub fn ideal_gb(&self) -> &[Polynomial] {
        &self.gb_polys
    }

    pub fn is_zero_ring(&self) -> bool {
        self.gb_polys.iter().any(Polynomial::is_unit_constant)
    }

    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        let v = FreeVector::new(vec![p.clone()]);
        self.gb
            .normal_form(&v)
            .expect("rank one")
            .into_coords()
            .pop()
            .expect("rank one")
    }

    pub fn reduce_vector(&self, v: &FreeVector) -> FreeVector {
        v.map_coords(|p| self.reduce(p))
    }

    /// Parse and reduce.
    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        Ok(self.reduce(&self.poly.parse(text)?))
    }

    pub fn var(&self, name: &str) -> Result<Polynomial> {
        let i = self
            .poly
            .var_index(name)
            .ok_or_else(|| Error::Unsupported(format!("unknown variable `{name}`")))?;
        Ok(self.reduce(&Polynomial::var(&self.poly, i)))
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(&self.poly)
    }

    pub fn one(&self) -> Polynomial {
        self.reduce(&Polynomial::one(&self.poly))
    }

    pub fn mul(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        self.reduce(&a.mul(b))
    }

    pub fn same(a: &QuotientRing, b: &QuotientRing) -> bool {
        std::ptr::eq(a, b) || (a.poly == b.poly && a.gb_polys == b.gb_polys)
    }

    pub fn check_same(a: &QuotientRing, b: &QuotientRing) -> Result<()> {
        if Self::same(a, b) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("{a} vs {b}")))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Field;
    use crate::monomial::OrderKind;

    #[test]
    fn normal_forms_are_canonical() {
        let p = PolyRing::new(Field::Rational, &["X", "Y", "Z", "W"], OrderKind::DegRevLex);
        let gens = ["X*Z-Y^2", "X*W-Y*Z", "Y*W-Z^2"]
            .iter()
            .map(|s| p.parse(s).unwrap())
            .collect();
        let r = QuotientRing::new(&p, gens).unwrap();
        assert!(r.parse("Y*W - Z^2").unwrap().is_zero());
        assert_eq!(r.parse("Z^2").unwrap(), r.parse("Y*W").unwrap());
        let t = r.quotient(&[p.parse("X").unwrap()]).unwrap();
        assert!(t.parse("Y^2").unwrap().is_zero());
        assert!(t.parse("Y*Z").unwrap().is_zero());
        assert!(!t.parse("W^5").unwrap().is_zero());
        assert!(!t.is_zero_ring());
    }
}
