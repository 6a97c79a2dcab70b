//! Exponent vectors and monomial orders.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize, power: u32) -> Self {
        let mut e = vec![0; nvars];
        e[index] = power;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// `Some(i)` when this is a pure power `x_i^k` with `k > 0`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    DegRevLex,
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderKind::Lex => write!(f, "lex"),
            OrderKind::DegRevLex => write!(f, "degrevlex"),
        }
    }
}

/// A monomial order together with a variable precedence: `precedence[0]` is
/// the largest variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    precedence: Vec<usize>,
}

impl MonomialOrder {
    /// Precedence follows declaration order.
    pub fn new(kind: OrderKind, nvars: usize) -> Self {
        MonomialOrder {
            kind,
            precedence: (0..nvars).collect(),
        }
    }

    pub fn with_precedence(kind: OrderKind, precedence: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; precedence.len()];
        for &i in &precedence {
            if i >= seen.len() || seen[i] {
                return Err(Error::Unsupported(
                    "variable precedence must be a permutation".into(),
                ));
            }
            seen[i] = true;
        }
        Ok(MonomialOrder { kind, precedence })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn nvars(&self) -> usize {
        self.precedence.len()
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        match self.kind {
            OrderKind::Lex => {
                for &i in &self.precedence {
                    match ea[i].cmp(&eb[i]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            OrderKind::DegRevLex => {
                match a.degree().cmp(&b.degree()) {
                    Ordering::Equal => {}
                    o => return o,
                }
                for &i in self.precedence.iter().rev() {
                    match ea[i].cmp(&eb[i]) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }

    /// Checked comparison for callers holding monomials of unknown length.
    pub fn try_compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        for m in [a, b] {
            if m.nvars() != self.nvars() {
                return Err(Error::Dimension {
                    expected: self.nvars(),
                    found: m.nvars(),
                });
            }
        }
        Ok(self.compare(a, b))
    }

    /// A key whose lexicographic order agrees with `compare`.
    pub fn sort_key(&self, m: &Monomial) -> Vec<i64> {
        let e = m.exponents();
        match self.kind {
            OrderKind::Lex => self.precedence.iter().map(|&i| e[i] as i64).collect(),
            OrderKind::DegRevLex => std::iter::once(m.degree() as i64)
                .chain(self.precedence.iter().rev().map(|&i| -(e[i] as i64)))
                .collect(),
        }
    }
}
