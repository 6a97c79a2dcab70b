//! Buchberger's algorithm for submodules of `P^n`, optionally modulo an ideal
//! of `P` adjoined in every coordinate.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};

use super::vector::{compare_module_terms, module_sort_key, FreeVector};

/// A Gröbner basis of a submodule of `P^rank` under the position-over-term
/// order. When `reduced` is set, elements are monic and no term of any element
/// is divisible by another element's leading term.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    rank: usize,
    elems: Vec<FreeVector>,
    leads: Vec<(usize, Monomial)>,
    by_pos: Vec<Vec<usize>>,
    reduced: bool,
}

fn lead_of(v: &FreeVector) -> (usize, Monomial) {
    let (p, t) = v.lead().expect("basis elements are nonzero");
    (p, t.mono.clone())
}

/// Full reduction of `v` against monic elements indexed by position.
fn reduce_with(
    v: &FreeVector,
    elems: &[FreeVector],
    leads: &[(usize, Monomial)],
    by_pos: &[Vec<usize>],
    skip: Option<usize>,
) -> FreeVector {
    let mut v = v.clone();
    let rank = v.rank();
    for pos in 0..rank {
        let mut idx = 0;
        loop {
            let coord = &v.coords()[pos];
            let Some(t) = coord.terms().get(idx) else {
                break;
            };
            let reducer = by_pos[pos]
                .iter()
                .copied()
                .find(|&g| Some(g) != skip && leads[g].1.divides(&t.mono));
            match reducer {
                Some(g) => {
                    let q = leads[g].1.quotient_of(&t.mono);
                    let c = t.coeff.clone();
                    let gv = &elems[g];
                    let coords = v.coords_mut();
                    for k in pos..rank {
                        if !gv.get(k).is_zero() {
                            coords[k] = coords[k].sub_mul_term(&c, &q, gv.get(k));
                        }
                    }
                }
                None => idx += 1,
            }
        }
    }
    v
}

/// Incremental Buchberger state. After every `add` the current elements form
/// a Gröbner basis of everything added so far.
pub struct Builder {
    ring: Arc<PolyRing>,
    rank: usize,
    elems: Vec<FreeVector>,
    leads: Vec<(usize, Monomial)>,
    by_pos: Vec<Vec<usize>>,
    pending: HashSet<(usize, usize)>,
    queue: BinaryHeap<Reverse<(Vec<i64>, usize, usize)>>,
}

impl Builder {
    /// Seeds the state with `f * e_i` for every `f` in `ideal_gb` and every
    /// position. `ideal_gb` must already be a Gröbner basis of its ideal, so
    /// pairs among seeds are treated as processed.
    pub fn new(ring: &Arc<PolyRing>, rank: usize, ideal_gb: &[Polynomial]) -> Self {
        let mut b = Builder {
            ring: ring.clone(),
            rank,
            elems: Vec::new(),
            leads: Vec::new(),
            by_pos: vec![Vec::new(); rank],
            pending: HashSet::new(),
            queue: BinaryHeap::new(),
        };
        for pos in 0..rank {
            for f in ideal_gb {
                let v = FreeVector::single(ring, rank, pos, f.monic());
                b.push_elem(v);
            }
        }
        b
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    fn push_elem(&mut self, v: FreeVector) -> usize {
        let lead = lead_of(&v);
        let idx = self.elems.len();
        self.by_pos[lead.0].push(idx);
        self.leads.push(lead);
        self.elems.push(v);
        idx
    }

    fn reduce(&self, v: &FreeVector) -> FreeVector {
        reduce_with(v, &self.elems, &self.leads, &self.by_pos, None)
    }

    pub fn contains(&self, v: &FreeVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds a generator; returns false if it already lies in the span.
    pub fn add(&mut self, v: &FreeVector) -> Result<bool> {
        if v.rank() != self.rank {
            return Err(Error::Dimension {
                expected: self.rank,
                found: v.rank(),
            });
        }
        let r = self.reduce(v);
        if r.is_zero() {
            return Ok(false);
        }
        self.insert(r.monic());
        self.complete();
        Ok(true)
    }

    /// Adds several generators, completing once at the end.
    pub fn add_all(&mut self, vs: &[FreeVector]) -> Result<()> {
        for v in vs {
            if v.rank() != self.rank {
                return Err(Error::Dimension {
                    expected: self.rank,
                    found: v.rank(),
                });
            }
            let r = self.reduce(v);
            if !r.is_zero() {
                self.insert(r.monic());
            }
        }
        self.complete();
        Ok(())
    }

    fn insert(&mut self, v: FreeVector) {
        let idx = self.push_elem(v);
        let (pos, lm) = self.leads[idx].clone();
        let order = self.ring.order().clone();
        for k in 0..self.by_pos[pos].len() {
            let other = self.by_pos[pos][k];
            if other == idx {
                continue;
            }
            let l = lm.lcm(&self.leads[other].1);
            let key = module_sort_key(&order, pos, &l);
            self.pending.insert((other, idx));
            self.queue.push(Reverse((key, other, idx)));
        }
    }

    fn chain_criterion(&self, i: usize, j: usize, lcm: &Monomial) -> bool {
        let pos = self.leads[i].0;
        let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
        self.by_pos[pos].iter().any(|&k| {
            k != i
                && k != j
                && self.leads[k].1.divides(lcm)
                && !self.pending.contains(&key(i, k))
                && !self.pending.contains(&key(j, k))
        })
    }

    fn s_vector(&self, i: usize, j: usize) -> FreeVector {
        s_vector_of(&self.elems, &self.leads, i, j)
    }

    fn complete(&mut self) {
        while let Some(Reverse((_, i, j))) = self.queue.pop() {
            if !self.pending.remove(&(i, j)) {
                continue;
            }
            let (li, lj) = (&self.leads[i].1, &self.leads[j].1);
            if self.rank == 1 && li.is_coprime(lj) {
                continue;
            }
            let lcm = li.lcm(lj);
            if self.chain_criterion(i, j, &lcm) {
                continue;
            }
            let s = self.s_vector(i, j);
            let r = self.reduce(&s);
            if !r.is_zero() {
                self.insert(r.monic());
            }
        }
    }

    /// Interreduce and sort the current basis.
    pub fn finish(&self) -> GroebnerBasis {
        let order = self.ring.order();
        let n = self.elems.len();
        let mut keep = vec![true; n];
        for i in 0..n {
            for j in 0..n {
                if i == j || !keep[j] {
                    continue;
                }
                let (pi, ref mi) = self.leads[i];
                let (pj, ref mj) = self.leads[j];
                if pi == pj && mj.divides(mi) && (mj != mi || j < i) {
                    keep[i] = false;
                    break;
                }
            }
        }
        let kept: Vec<usize> = (0..n).filter(|&i| keep[i]).collect();
        let elems: Vec<FreeVector> = kept.iter().map(|&i| self.elems[i].clone()).collect();
        let leads: Vec<(usize, Monomial)> = kept.iter().map(|&i| self.leads[i].clone()).collect();
        let mut by_pos = vec![Vec::new(); self.rank];
        for (k, l) in leads.iter().enumerate() {
            by_pos[l.0].push(k);
        }
        let mut reduced: Vec<FreeVector> = (0..elems.len())
            .map(|k| reduce_with(&elems[k], &elems, &leads, &by_pos, Some(k)).monic())
            .collect();
        reduced.sort_by(|a, b| {
            let (pa, ta) = a.lead().unwrap();
            let (pb, tb) = b.lead().unwrap();
            compare_module_terms(order, (pb, &tb.mono), (pa, &ta.mono))
        });
        GroebnerBasis::from_reduced(&self.ring, self.rank, reduced)
    }
}

fn s_vector_of(
    elems: &[FreeVector],
    leads: &[(usize, Monomial)],
    i: usize,
    j: usize,
) -> FreeVector {
    let (li, lj) = (&leads[i].1, &leads[j].1);
    let lcm = li.lcm(lj);
    let ci = elems[i].lead().unwrap().1.coeff.clone();
    let cj = elems[j].lead().unwrap().1.coeff.clone();
    let a = elems[i].mul_term(&ci.inv(), &li.quotient_of(&lcm));
    let b = elems[j].mul_term(&cj.inv(), &lj.quotient_of(&lcm));
    a.sub(&b)
}

impl GroebnerBasis {
    /// Gröbner basis of the submodule of `P^rank` generated by `gens` and
    /// `ideal_gb * e_i`.
    pub fn compute(
        ring: &Arc<PolyRing>,
        rank: usize,
        ideal_gb: &[Polynomial],
        gens: &[FreeVector],
    ) -> Result<GroebnerBasis> {
        let mut b = Builder::new(ring, rank, ideal_gb);
        b.add_all(gens)?;
        Ok(b.finish())
    }

    fn from_reduced(ring: &Arc<PolyRing>, rank: usize, elems: Vec<FreeVector>) -> Self {
        let leads: Vec<(usize, Monomial)> = elems.iter().map(lead_of).collect();
        let mut by_pos = vec![Vec::new(); rank];
        for (k, l) in leads.iter().enumerate() {
            by_pos[l.0].push(k);
        }
        GroebnerBasis {
            ring: ring.clone(),
            rank,
            elems,
            leads,
            by_pos,
            reduced: true,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn elements(&self) -> &[FreeVector] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn leads(&self) -> &[(usize, Monomial)] {
        &self.leads
    }

    /// Leading monomials of elements whose lead sits at `pos`.
    pub fn leads_at(&self, pos: usize) -> impl Iterator<Item = &Monomial> {
        self.by_pos[pos].iter().map(move |&k| &self.leads[k].1)
    }

    pub fn normal_form(&self, v: &FreeVector) -> Result<FreeVector> {
        if v.rank() != self.rank {
            return Err(Error::Dimension {
                expected: self.rank,
                found: v.rank(),
            });
        }
        Ok(reduce_with(v, &self.elems, &self.leads, &self.by_pos, None))
    }

    pub fn contains(&self, v: &FreeVector) -> bool {
        self.normal_form(v).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// S-vector of elements `i` and `j`; `None` when their leads sit at
    /// different positions.
    pub fn s_vector(&self, i: usize, j: usize) -> Option<FreeVector> {
        (self.leads[i].0 == self.leads[j].0).then(|| s_vector_of(&self.elems, &self.leads, i, j))
    }

    /// Buchberger's criterion checked exhaustively over all pairs.
    pub fn is_groebner(&self) -> bool {
        let n = self.elems.len();
        (0..n).all(|i| {
            (i + 1..n).all(|j| match self.s_vector(i, j) {
                Some(s) => self.contains(&s),
                None => true,
            })
        })
    }

    /// Check the reducedness conditions directly.
    pub fn check_reduced(&self) -> bool {
        self.elems.iter().enumerate().all(|(i, v)| {
            v.lead().map(|(_, t)| t.coeff.is_one()).unwrap_or(false)
                && v.coords().iter().enumerate().all(|(pos, c)| {
                    c.terms().iter().all(|t| {
                        !self.by_pos[pos]
                            .iter()
                            .any(|&k| k != i && self.leads[k].1.divides(&t.mono))
                    })
                })
        })
    }
}
