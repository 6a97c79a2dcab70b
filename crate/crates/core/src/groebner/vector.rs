use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{PolyRing, Polynomial, Term};

/// An element of a free module `P^n`, stored coordinatewise.
///
/// Vectors are compared position-over-term: the first nonzero coordinate
/// carries the leading term, so position 0 dominates position 1, and so on.
#[derive(Clone, PartialEq, Eq)]
pub struct FreeVector {
    coords: Vec<Polynomial>,
}

impl fmt::Debug for FreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl FreeVector {
    pub fn new(coords: Vec<Polynomial>) -> Self {
        FreeVector { coords }
    }

    pub fn zero(ring: &Arc<PolyRing>, rank: usize) -> Self {
        FreeVector {
            coords: vec![Polynomial::zero(ring); rank],
        }
    }

    pub fn unit(ring: &Arc<PolyRing>, rank: usize, i: usize) -> Self {
        let mut v = Self::zero(ring, rank);
        v.coords[i] = Polynomial::one(ring);
        v
    }

    /// `p * e_i`.
    pub fn single(ring: &Arc<PolyRing>, rank: usize, i: usize, p: Polynomial) -> Self {
        let mut v = Self::zero(ring, rank);
        v.coords[i] = p;
        v
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Polynomial] {
        &self.coords
    }

    pub fn coords_mut(&mut self) -> &mut [Polynomial] {
        &mut self.coords
    }

    pub fn into_coords(self) -> Vec<Polynomial> {
        self.coords
    }

    pub fn get(&self, i: usize) -> &Polynomial {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Polynomial::is_zero)
    }

    /// Position and leading term of the first nonzero coordinate.
    pub fn lead(&self) -> Option<(usize, &Term)> {
        self.coords
            .iter()
            .enumerate()
            .find_map(|(i, c)| c.leading_term().map(|t| (i, t)))
    }

    pub fn add(&self, other: &FreeVector) -> FreeVector {
        debug_assert_eq!(self.rank(), other.rank());
        FreeVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &FreeVector) -> FreeVector {
        debug_assert_eq!(self.rank(), other.rank());
        FreeVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> FreeVector {
        FreeVector {
            coords: self.coords.iter().map(Polynomial::neg).collect(),
        }
    }

    pub fn scale(&self, p: &Polynomial) -> FreeVector {
        FreeVector {
            coords: self.coords.iter().map(|c| c.mul(p)).collect(),
        }
    }

    pub fn mul_term(&self, c: &crate::coeff::Coeff, m: &Monomial) -> FreeVector {
        FreeVector {
            coords: self.coords.iter().map(|p| p.mul_term(c, m)).collect(),
        }
    }

    /// Concatenate coordinates: `(self, other)`.
    pub fn concat(&self, other: &FreeVector) -> FreeVector {
        let mut coords = self.coords.clone();
        coords.extend(other.coords.iter().cloned());
        FreeVector { coords }
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> FreeVector {
        FreeVector {
            coords: self.coords[range].to_vec(),
        }
    }

    pub fn monic(&self) -> FreeVector {
        match self.lead() {
            Some((_, t)) if !t.coeff.is_one() => {
                let inv = t.coeff.inv();
                FreeVector {
                    coords: self.coords.iter().map(|p| p.scale(&inv)).collect(),
                }
            }
            _ => self.clone(),
        }
    }

    /// Maximum total degree over all coordinates.
    pub fn degree(&self) -> Option<u32> {
        self.coords.iter().filter_map(Polynomial::degree).max()
    }

    pub fn map_coords(&self, f: impl Fn(&Polynomial) -> Polynomial) -> FreeVector {
        FreeVector {
            coords: self.coords.iter().map(f).collect(),
        }
    }
}

/// Compare two (position, monomial) pairs in the position-over-term order.
pub fn compare_module_terms(
    order: &MonomialOrder,
    a: (usize, &Monomial),
    b: (usize, &Monomial),
) -> Ordering {
    match b.0.cmp(&a.0) {
        Ordering::Equal => order.compare(a.1, b.1),
        o => o,
    }
}

/// Sort key agreeing with `compare_module_terms`.
pub fn module_sort_key(order: &MonomialOrder, pos: usize, m: &Monomial) -> Vec<i64> {
    let mut key = vec![-(pos as i64)];
    key.extend(order.sort_key(m));
    key
}
