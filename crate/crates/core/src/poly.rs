//! Sparse multivariate polynomials in canonical (sorted, zero-free) form.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::coeff::{Coeff, Field};
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder, OrderKind};
use crate::syntax;

/// Variables, coefficient field and monomial order of a polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    vars: Vec<String>,
    field: Field,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new(field: Field, vars: &[&str], kind: OrderKind) -> Arc<PolyRing> {
        Self::with_order(
            field,
            vars.iter().map(|s| s.to_string()).collect(),
            MonomialOrder::new(kind, vars.len()),
        )
        .expect("order matches variables")
    }

    pub fn with_order(
        field: Field,
        vars: Vec<String>,
        order: MonomialOrder,
    ) -> Result<Arc<PolyRing>> {
        if order.nvars() != vars.len() {
            return Err(Error::Dimension {
                expected: vars.len(),
                found: order.nvars(),
            });
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::Unsupported(format!("duplicate variable `{v}`")));
            }
        }
        Ok(Arc::new(PolyRing { vars, field, order }))
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Parse a polynomial such as `X*Z - Y^2` or `3/2 x y^2`.
    pub fn parse(self: &Arc<Self>, text: &str) -> Result<Polynomial> {
        syntax::parse_expr(text)?.eval(self)
    }

    /// Same ring up to pointer identity or structural equality.
    pub fn same(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
        Arc::ptr_eq(a, b) || a == b
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub mono: Monomial,
    pub coeff: Coeff,
}

/// Terms are kept strictly descending in the ring order with no zero
/// coefficients, so equal polynomials have identical term lists.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && PolyRing::same(&self.ring, &other.ring)
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Coeff) -> Self {
        Self::monomial(ring, c, Monomial::one(ring.nvars()))
    }

    pub fn from_i64(ring: &Arc<PolyRing>, n: i64) -> Self {
        Self::constant(ring, ring.field().from_i64(n))
    }

    pub fn var(ring: &Arc<PolyRing>, index: usize) -> Self {
        Self::monomial(
            ring,
            ring.field().one(),
            Monomial::var(ring.nvars(), index, 1),
        )
    }

    pub fn monomial(ring: &Arc<PolyRing>, coeff: Coeff, mono: Monomial) -> Self {
        let terms = if coeff.is_zero() {
            Vec::new()
        } else {
            vec![Term { mono, coeff }]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Build from arbitrary terms: sorts, merges duplicates, drops zeros.
    pub fn from_terms(ring: &Arc<PolyRing>, mut terms: Vec<Term>) -> Self {
        let order = ring.order();
        terms.sort_by(|a, b| order.compare(&b.mono, &a.mono));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.mono == t.mono => {
                    last.coeff = last.coeff.add(&t.coeff);
                    if last.coeff.is_zero() {
                        out.pop();
                    }
                }
                _ => {
                    if !t.coeff.is_zero() {
                        out.push(t)
                    }
                }
            }
        }
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub(crate) fn from_sorted_terms(ring: &Arc<PolyRing>, terms: Vec<Term>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().compare(&w[0].mono, &w[1].mono) == Ordering::Greater));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms
            .windows(2)
            .all(|w| w[0].mono.degree() == w[1].mono.degree())
    }

    pub fn as_constant(&self) -> Option<Coeff> {
        match self.terms.as_slice() {
            [] => Some(self.ring.field().zero()),
            [t] if t.mono.is_one() => Some(t.coeff.clone()),
            _ => None,
        }
    }

    /// Nonzero constants are the only units recognized syntactically.
    pub fn is_unit_constant(&self) -> bool {
        matches!(self.terms.as_slice(), [t] if t.mono.is_one())
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if PolyRing::same(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch(
                "polynomials belong to different rings".into(),
            ))
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.add(other))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.sub(other))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.mul(other))
    }

    pub fn try_scale(&self, c: &Coeff) -> Result<Polynomial> {
        if c.field() != self.ring.field() {
            return Err(Error::RingMismatch(format!(
                "coefficient from {} used in a ring over {}",
                c.field(),
                self.ring.field()
            )));
        }
        Ok(self.scale(c))
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.combine(other, true)
    }

    fn combine(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                Ordering::Less
            } else if j == b.len() {
                Ordering::Greater
            } else {
                order.compare(&a[i].mono, &b[j].mono)
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate {
                        b[j].coeff.neg()
                    } else {
                        b[j].coeff.clone()
                    };
                    out.push(Term {
                        mono: b[j].mono.clone(),
                        coeff: c,
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        a[i].coeff.sub(&b[j].coeff)
                    } else {
                        a[i].coeff.add(&b[j].coeff)
                    };
                    if !c.is_zero() {
                        out.push(Term {
                            mono: a[i].mono.clone(),
                            coeff: c,
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial::from_sorted_terms(&self.ring, out)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    mono: t.mono.clone(),
                    coeff: t.coeff.neg(),
                })
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    mono: t.mono.clone(),
                    coeff: t.coeff.mul(c),
                })
                .collect(),
        }
    }

    /// `c * m * self`; order is preserved because monomial orders are multiplicative.
    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    mono: t.mono.mul(m),
                    coeff: t.coeff.mul(c),
                })
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let (short, long) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Polynomial::zero(&self.ring);
        for t in &short.terms {
            acc = acc.add(&long.mul_term(&t.coeff, &t.mono));
        }
        acc
    }

    /// `self - c * m * other`, the reduction step.
    pub fn sub_mul_term(&self, c: &Coeff, m: &Monomial, other: &Polynomial) -> Polynomial {
        self.sub(&other.mul_term(c, m))
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Scale so the leading coefficient is one. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            Some(c) if !c.is_one() => self.scale(&c.inv()),
            _ => self.clone(),
        }
    }

    /// Rebuild in another ring with the same variables and field (e.g. after
    /// changing the order).
    pub fn remap(&self, ring: &Arc<PolyRing>) -> Polynomial {
        Polynomial::from_terms(ring, self.terms.clone())
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, vars: &[String], m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "{}", vars[i])?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

/// Sign and magnitude for display; prime-field residues print symmetrically.
fn signed_coeff(c: &Coeff) -> (bool, Coeff) {
    match c {
        Coeff::Prime { value, modulus } if *value > modulus / 2 => (true, c.neg()),
        Coeff::Rational(_) if c.is_negative() => (true, c.neg()),
        _ => (false, c.clone()),
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            let (neg, mag) = signed_coeff(&t.coeff);
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if t.mono.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write_monomial(f, self.ring.vars(), &t.mono)?;
            } else {
                write!(f, "{mag}*")?;
                write_monomial(f, self.ring.vars(), &t.mono)?;
            }
        }
        Ok(())
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("ring mismatch")
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("ring mismatch")
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("ring mismatch")
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}
